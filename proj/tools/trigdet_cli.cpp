// trigdet: command-line front end for the verification library.
//
//   trigdet verify    --suite <name> --max-n <int> [--max-j <int>] [--shifts ...] [--kinds ...]
//   trigdet matrix    --kind <name> --n <int> [--k <int>] [--a <rat> --b <rat>] [--nodes x1,x2,...] [--json]
//   trigdet wronskian --n <int> --shift <int> --kind sin|cos [--count <int>] [--print-matrix]
//   trigdet identity  --which sum|open --n <int> --j <int>
//
// Global flags: --format json|markdown, --output <path>, --config <path>, --jobs <int>.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage/config/output error.

#include "trigdet/identities.hpp"
#include "trigdet/independence.hpp"
#include "trigdet/runner.hpp"
#include "trigdet/structured.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "json";
  std::string output;
  std::string config;
  unsigned jobs = 1;
};

std::vector<trigdet::Rational> parse_nodes(const std::string& text) {
  std::vector<trigdet::Rational> nodes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) nodes.push_back(trigdet::parse_rational(item));
  return nodes;
}

nlohmann::json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw trigdet::ConfigError("cannot read config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw trigdet::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Wronskian, binomial-determinant and combinatorial identities"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  auto* format_opt = app.add_option("--format", global.format, "Output format: json or markdown");
  auto* output_opt = app.add_option("--output", global.output, "Write output to this path instead of stdout");
  app.add_option("--config", global.config, "JSON config file; flags override its values");
  auto* jobs_opt = app.add_option("--jobs", global.jobs, "Worker threads (0 = hardware concurrency)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  std::vector<std::string> suites;
  unsigned max_n = 3;
  unsigned max_j = 0;
  std::vector<unsigned> shifts;
  std::vector<std::string> kinds;
  auto* suite_opt = verify->add_option("--suite", suites,
                                       "identities|determinants|pascal|wronskian|coords|open-identity|all");
  auto* max_n_opt = verify->add_option("--max-n", max_n, "Largest n in the sweeps");
  auto* max_j_opt = verify->add_option("--max-j", max_j, "Largest j in identity sweeps (default: max-n)");
  auto* shifts_opt = verify->add_option("--shifts", shifts, "Derivative shifts for Wronskian checks")->delimiter(',');
  auto* kinds_opt = verify->add_option("--kinds", kinds, "sin and/or cos")->delimiter(',');

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Build a structured matrix and check its determinant");
  std::string kind_name;
  unsigned n = 0;
  unsigned k = 0;
  std::string a_text = "1";
  std::string b_text = "0";
  std::string nodes_text;
  bool as_json = false;
  matrix->add_option("--kind", kind_name,
                     "rk|ukn|t|g|bidiagonal|pascal|binom-b|binom-c|binom-general|binom-nodes")
      ->required();
  matrix->add_option("--n", n, "Size parameter");
  matrix->add_option("--k", k, "Shift index for rk/ukn");
  matrix->add_option("--a", a_text, "Rational a for binom-general");
  matrix->add_option("--b", b_text, "Rational b for binom-general");
  matrix->add_option("--nodes", nodes_text, "Comma-separated rational nodes for binom-nodes");
  matrix->add_flag("--json", as_json, "Emit JSON");

  // wronskian
  auto* wronskian = app.add_subcommand("wronskian", "Symbolic Wronskian of a derivative chain of x^n sin/cos");
  unsigned w_n = 0;
  unsigned w_shift = 0;
  std::string w_kind = "sin";
  unsigned w_count = 0;
  bool print_matrix = false;
  wronskian->add_option("--n", w_n, "Power of x")->required();
  wronskian->add_option("--shift", w_shift, "First derivative order");
  wronskian->add_option("--kind", w_kind, "sin or cos");
  wronskian->add_option("--count", w_count, "Number of functions (default 2n+2)");
  wronskian->add_flag("--print-matrix", print_matrix, "Print the Wronskian matrix");

  // identity
  auto* identity = app.add_subcommand("identity", "Check one instance of a binomial-sum identity");
  std::string which = "sum";
  unsigned id_n = 1;
  unsigned id_j = 1;
  identity->add_option("--which", which, "sum (proved binomial-sum identity) or open (conjectured identity)");
  identity->add_option("--n", id_n, "n >= 1")->required();
  identity->add_option("--j", id_j, "j >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    trigdet::SuiteConfig config;
    if (!global.config.empty()) config = trigdet::merge_config(config, read_config_file(global.config));
    if (format_opt->count()) config.format = trigdet::parse_format(global.format);
    if (output_opt->count()) config.output = global.output;
    if (jobs_opt->count()) config.jobs = global.jobs;

    if (verify->parsed()) {
      if (suite_opt->count()) {
        config.suites.clear();
        for (const auto& s : suites) {
          auto more = trigdet::parse_suites(s);
          config.suites.insert(more.begin(), more.end());
        }
      }
      if (max_n_opt->count()) config.max_n = max_n;
      if (max_j_opt->count()) config.max_j = max_j;
      if (shifts_opt->count()) config.shifts = shifts;
      if (kinds_opt->count()) {
        config.kinds.clear();
        for (const auto& kname : kinds) config.kinds.insert(trigdet::parse_kind(kname));
      }
      trigdet::validate(config);
      const auto result = trigdet::run(config);
      trigdet::write_output(trigdet::render(result.records, result.summary, config.format), config.output, std::cout);
      std::cerr << "checks: " << result.summary.total << ", passed: " << result.summary.passed
                << ", failed: " << result.summary.failed << "\n";
      return result.exit_status();
    }

    if (matrix->parsed()) {
      auto kind = trigdet::parse_matrix_kind(kind_name);
      if (!kind) throw trigdet::ConfigError("unknown matrix kind '" + kind_name + "'");
      trigdet::MatrixSpec spec;
      spec.kind = *kind;
      spec.n = n;
      spec.k = k;
      spec.a = trigdet::parse_rational(a_text);
      spec.b = trigdet::parse_rational(b_text);
      if (!nodes_text.empty()) spec.nodes = parse_nodes(nodes_text);
      const auto m = trigdet::build(spec);
      const auto report = trigdet::det_identity(spec);
      std::string text;
      if (as_json || (config.format == trigdet::OutputFormat::Json && format_opt->count())) {
        nlohmann::json doc = {{"kind", kind_name},
                              {"params", report.params},
                              {"matrix", trigdet::to_json(m)},
                              {"check", trigdet::to_json(report)}};
        doc["check"].erase("millis");
        text = doc.dump(2) + "\n";
      } else {
        std::ostringstream out;
        out << kind_name << " " << report.params.dump() << "\n" << trigdet::format_matrix(m);
        out << "det = " << report.computed << ", closed form = " << report.expected << " : "
            << (report.pass ? "pass" : "FAIL") << "\n";
        text = out.str();
      }
      trigdet::write_output(text, config.output, std::cout);
      return report.pass ? 0 : 1;
    }

    if (wronskian->parsed()) {
      const trigdet::TrigKind kind = trigdet::parse_kind(w_kind);
      const unsigned count = w_count ? w_count : 2 * w_n + 2;
      if (count > 12) throw trigdet::ConfigError("--count above 12 is too large for a symbolic determinant");
      const auto w = trigdet::wronskian_hankel({w_n, w_shift, kind, count});
      const auto value = trigdet::determinant(w);
      const auto constant = trigdet::is_constant(value);
      nlohmann::json doc = {{"params", {{"n", w_n}, {"shift", w_shift}, {"kind", w_kind}, {"count", count}}},
                            {"wronskian", trigdet::to_string(value)},
                            {"constant", constant.has_value()}};
      if (count == 2 * w_n + 2) {
        const auto small = trigdet::two_by_two(w_n, w_shift, kind);
        doc["two_by_two"] = trigdet::to_string(small);
        doc["matches_two_by_two_power"] = trigdet::ring_pow(small, w_n + 1) == value;
      }
      if (print_matrix) doc["matrix"] = trigdet::to_json(w);
      std::string text;
      if (config.format == trigdet::OutputFormat::Json && format_opt->count()) {
        text = doc.dump(2) + "\n";
      } else {
        std::ostringstream out;
        if (print_matrix) out << trigdet::format_matrix(w) << "\n";
        out << "W = " << doc["wronskian"].get<std::string>() << "\n";
        if (doc.contains("two_by_two"))
          out << "two_by_two = " << doc["two_by_two"].get<std::string>() << ", W == two_by_two^" << (w_n + 1)
              << ": " << (doc["matches_two_by_two_power"].get<bool>() ? "yes" : "no") << "\n";
        text = out.str();
      }
      trigdet::write_output(text, config.output, std::cout);
      return 0;
    }

    if (identity->parsed()) {
      if (which != "sum" && which != "open") throw trigdet::ConfigError("--which must be 'sum' or 'open'");
      if (id_n < 1 || id_j < 1) throw trigdet::ConfigError("--n and --j must be >= 1");
      const auto report = which == "sum" ? trigdet::check_identity_a(id_n, id_j) : trigdet::check_open_identity(id_n, id_j);
      const std::vector<trigdet::VerificationReport> records{report};
      trigdet::write_output(trigdet::render(records, trigdet::summarize(records), config.format), config.output,
                            std::cout);
      return report.pass ? 0 : 1;
    }
  } catch (const trigdet::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const trigdet::OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
