#pragma once

// Parameter sweeps over the verification checks, with deterministic report
// serialization (JSON or markdown).

#include "trigdet/identities.hpp"
#include "trigdet/independence.hpp"
#include "trigdet/report.hpp"
#include "trigdet/structured.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace trigdet {

enum class Suite { Identities, Determinants, Pascal, Wronskian, Coords, OpenIdentity };
enum class OutputFormat { Json, Markdown };

inline constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuiteNames{{
    {Suite::Identities, "identities"},
    {Suite::Determinants, "determinants"},
    {Suite::Pascal, "pascal"},
    {Suite::Wronskian, "wronskian"},
    {Suite::Coords, "coords"},
    {Suite::OpenIdentity, "open-identity"},
}};

// Symbolic Wronskians are evaluated up to order 2n+3 = 9.
inline constexpr unsigned kMaxSymbolicN = 3;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string_view to_string(Suite s) {
  for (const auto& [suite, name] : kSuiteNames)
    if (suite == s) return name;
  return "unknown";
}

// "all" expands to every suite.
inline std::set<Suite> parse_suites(std::string_view name) {
  if (name == "all") {
    std::set<Suite> every;
    for (const auto& entry : kSuiteNames) every.insert(entry.first);
    return every;
  }
  for (const auto& [suite, n] : kSuiteNames)
    if (n == name) return {suite};
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

inline TrigKind parse_kind(std::string_view name) {
  if (name == "sin") return TrigKind::Sin;
  if (name == "cos") return TrigKind::Cos;
  throw ConfigError("unknown kind '" + std::string(name) + "' (expected sin or cos)");
}

inline OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "markdown") return OutputFormat::Markdown;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected json or markdown)");
}

struct SuiteConfig {
  std::set<Suite> suites;
  unsigned max_n = 3;
  std::optional<unsigned> max_j;  // defaults to max_n
  std::vector<unsigned> shifts{0, 1, 2};
  std::set<TrigKind> kinds{TrigKind::Sin, TrigKind::Cos};
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
  unsigned jobs = 1;   // 0: one worker per hardware thread

  unsigned effective_max_j() const { return max_j.value_or(max_n); }
};

inline void validate(const SuiteConfig& config) {
  if (config.suites.empty()) throw ConfigError("no suite selected");
  if (config.max_n < 1) throw ConfigError("max_n must be >= 1");
  if (config.effective_max_j() < 1) throw ConfigError("max_j must be >= 1");
  if (config.kinds.empty()) throw ConfigError("at least one kind (sin, cos) is required");
  if (config.shifts.empty()) throw ConfigError("at least one shift is required");
}

// Overlays the keys present in `doc` onto `base`. Recognized keys: suites
// (string or array), max_n, max_j, shifts, kinds, output, format, jobs.
inline SuiteConfig merge_config(SuiteConfig base, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"suites", "max_n", "max_j", "shifts", "kinds", "output", "format", "jobs"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
  auto as_count = [](const nlohmann::json& v, const char* key) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ConfigError(std::string(key) + " must be a non-negative integer");
    return v.get<unsigned>();
  };
  try {
    if (doc.contains("suites")) {
      base.suites.clear();
      const auto& s = doc["suites"];
      if (s.is_string()) {
        base.suites = parse_suites(s.get<std::string>());
      } else {
        for (const auto& item : s) {
          auto more = parse_suites(item.get<std::string>());
          base.suites.insert(more.begin(), more.end());
        }
      }
    }
    if (doc.contains("max_n")) base.max_n = as_count(doc["max_n"], "max_n");
    if (doc.contains("max_j")) base.max_j = as_count(doc["max_j"], "max_j");
    if (doc.contains("shifts")) {
      base.shifts.clear();
      for (const auto& v : doc["shifts"]) base.shifts.push_back(as_count(v, "shifts"));
    }
    if (doc.contains("kinds")) {
      base.kinds.clear();
      for (const auto& v : doc["kinds"]) base.kinds.insert(parse_kind(v.get<std::string>()));
    }
    if (doc.contains("output")) base.output = doc["output"].get<std::string>();
    if (doc.contains("format")) base.format = parse_format(doc["format"].get<std::string>());
    if (doc.contains("jobs")) base.jobs = as_count(doc["jobs"], "jobs");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return base;
}

// Distinct rational node tuples of lengths 2..6 from a fixed seed. Raw engine
// output is reduced by modulo so the sequence does not depend on the standard
// library's distribution implementations.
inline std::vector<std::vector<Rational>> sample_node_tuples(std::size_t count, std::uint64_t seed = 20240917) {
  std::mt19937_64 engine(seed);
  auto draw = [&](std::uint64_t modulus) { return engine() % modulus; };
  std::vector<std::vector<Rational>> tuples;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t length = 2 + t % 5;
    std::vector<Rational> xs;
    while (xs.size() < length) {
      const auto num = static_cast<long long>(draw(41)) - 20;
      const auto den = static_cast<long long>(draw(6)) + 1;
      Rational x(num, den);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    tuples.push_back(std::move(xs));
  }
  return tuples;
}

inline const std::vector<Rational>& general_binomial_a_grid() {
  static const std::vector<Rational> grid{-2, -1, 1, 2, 3, Rational(1, 2)};
  return grid;
}

inline const std::vector<Rational>& general_binomial_b_grid() {
  static const std::vector<Rational> grid{-1, 0, 1, 2};
  return grid;
}

using Check = std::function<VerificationReport()>;

inline std::vector<Check> plan_checks(const SuiteConfig& config) {
  validate(config);
  std::vector<Check> checks;
  const unsigned max_n = config.max_n;
  const unsigned max_j = config.effective_max_j();
  const unsigned symbolic_n = std::min(max_n, kMaxSymbolicN);

  for (Suite suite : config.suites) {
    switch (suite) {
      case Suite::Identities:
        for (unsigned n = 1; n <= max_n; ++n)
          for (unsigned j = 1; j <= max_j; ++j) checks.push_back([=] { return check_identity_a(n, j); });
        break;
      case Suite::OpenIdentity:
        for (unsigned n = 1; n <= max_n; ++n)
          for (unsigned j = 1; j <= max_j; ++j) checks.push_back([=] { return check_open_identity(n, j); });
        break;
      case Suite::Pascal:
        for (unsigned n = 2; n <= max_n; ++n) checks.push_back([=] { return verify_pascal_product(n); });
        break;
      case Suite::Determinants: {
        auto add_det = [&](MatrixSpec spec) { checks.push_back([spec] { return det_identity(spec); }); };
        auto spec_of = [](MatrixKind kind, unsigned n, unsigned k = 0, Rational a = 1, Rational b = 0) {
          MatrixSpec spec;
          spec.kind = kind;
          spec.n = n;
          spec.k = k;
          spec.a = std::move(a);
          spec.b = std::move(b);
          return spec;
        };
        for (unsigned n = 1; n <= max_n; ++n) {
          add_det(spec_of(MatrixKind::BinomB, n));
          add_det(spec_of(MatrixKind::BinomC, n));
          add_det(spec_of(MatrixKind::TLower, n));
          add_det(spec_of(MatrixKind::Bidiagonal, n));
          checks.push_back([=] { return verify_TB_equals_G(n); });
          checks.push_back([=] { return verify_C_from_B(n); });
          for (const auto& a : general_binomial_a_grid())
            for (const auto& b : general_binomial_b_grid()) add_det(spec_of(MatrixKind::BinomGeneral, n, 0, a, b));
        }
        for (unsigned n = 2; n <= max_n + 1; ++n)
          for (unsigned k = 1; k < n; ++k) add_det(spec_of(MatrixKind::Rk, n, k));
        for (unsigned n = 3; n <= 2 * max_n + 2; ++n)
          for (unsigned k = 1; k + 1 <= (n + 1) / 2; ++k) add_det(spec_of(MatrixKind::Ukn, n, k));
        for (auto& xs : sample_node_tuples(30)) {
          MatrixSpec spec = spec_of(MatrixKind::BinomNodes, 0);
          spec.nodes = std::move(xs);
          add_det(spec);
        }
        MatrixSpec repeated = spec_of(MatrixKind::BinomNodes, 0);
        repeated.nodes = {Rational(1, 2), 3, Rational(1, 2)};
        add_det(repeated);
        break;
      }
      case Suite::Wronskian:
        for (TrigKind kind : config.kinds) {
          for (unsigned n = 0; n <= symbolic_n; ++n) {
            for (unsigned shift : config.shifts)
              checks.push_back([=] { return verify_wronskian_factorization(n, shift, kind); });
            checks.push_back([=] { return verify_dependence(n, kind); });
          }
          for (unsigned n = 1; n <= symbolic_n; ++n) {
            checks.push_back([=] { return verify_wronskian_transform(n, kind); });
            for (unsigned r = 1; r <= 3; ++r)
              for (unsigned nu = 0; nu <= 2; ++nu) checks.push_back([=] { return verify_pascal_conjugation(r, nu, n, kind); });
          }
        }
        break;
      case Suite::Coords:
        for (unsigned n = 1; n <= max_n; ++n) {
          checks.push_back([=] { return verify_full_rank(n); });
          checks.push_back([=] { return verify_coordinate_columns(n); });
          checks.push_back([=] { return verify_a_doubleprime(n); });
        }
        break;
    }
  }
  return checks;
}

// Runs every check on `jobs` workers and returns the records sorted, so the
// result does not depend on scheduling. A check that throws becomes a failing
// record carrying the message.
inline std::vector<VerificationReport> execute(const std::vector<Check>& checks, unsigned jobs) {
  std::vector<VerificationReport> records(checks.size());
  auto run_one = [&](std::size_t index) {
    Stopwatch clock;
    try {
      records[index] = checks[index]();
    } catch (const std::exception& e) {
      VerificationReport failed;
      failed.suite = "error";
      failed.check = "exception";
      failed.params = {{"index", index}};
      failed.computed = std::string("error: ") + e.what();
      failed.millis = clock.millis();
      records[index] = std::move(failed);
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  if (jobs == 1 || checks.size() < 2) {
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, checks.size()); ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) run_one(i);
      });
    for (auto& t : workers) t.join();
  }
  std::stable_sort(records.begin(), records.end(), report_order);
  return records;
}

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double duration = 0.0;  // milliseconds, informational
};

inline RunSummary summarize(const std::vector<VerificationReport>& records, double duration = 0.0) {
  RunSummary s;
  s.total = records.size();
  s.passed = static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
  s.failed = s.total - s.passed;
  s.duration = duration;
  return s;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {
      {"suite", r.suite},       {"check", r.check}, {"params", r.params}, {"expected", r.expected},
      {"computed", r.computed}, {"pass", r.pass},   {"millis", r.millis},
  };
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& records, const RunSummary& summary) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : records) list.push_back(to_json(r));
  return {
      {"records", std::move(list)},
      {"summary",
       {{"total", summary.total}, {"passed", summary.passed}, {"failed", summary.failed}, {"duration", summary.duration}}},
  };
}

// Removes the timing fields, which are excluded from determinism comparisons.
inline nlohmann::json without_timing(nlohmann::json doc) {
  if (doc.contains("records"))
    for (auto& r : doc["records"]) r.erase("millis");
  if (doc.contains("summary")) doc["summary"].erase("duration");
  return doc;
}

namespace detail {

inline std::string markdown_cell(std::string text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') {
      out += "\\|";
    } else if (ch == '\n') {
      out += "<br>";
    } else {
      out += ch;
    }
  }
  return out;
}

}  // namespace detail

// One table per suite; timing columns are omitted so the text is stable.
inline std::string to_markdown(const std::vector<VerificationReport>& records, const RunSummary& summary) {
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "Total: " << summary.total << ", passed: " << summary.passed << ", failed: " << summary.failed << "\n";
  std::string current;
  for (const auto& r : records) {
    if (r.suite != current) {
      current = r.suite;
      out << "\n## " << current << "\n\n";
      out << "| check | params | expected | computed | pass |\n";
      out << "|---|---|---|---|---|\n";
    }
    out << "| " << detail::markdown_cell(r.check) << " | " << detail::markdown_cell(r.params.dump()) << " | "
        << detail::markdown_cell(r.expected) << " | " << detail::markdown_cell(r.computed) << " | "
        << (r.pass ? "yes" : "**no**") << " |\n";
  }
  return out.str();
}

inline std::string render(const std::vector<VerificationReport>& records, const RunSummary& summary,
                          OutputFormat format) {
  if (format == OutputFormat::Markdown) return to_markdown(records, summary);
  return to_json(records, summary).dump(2) + "\n";
}

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_output(const std::string& text, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw OutputError("failed writing output file '" + path + "'");
}

struct RunResult {
  std::vector<VerificationReport> records;
  RunSummary summary;
  int exit_status() const { return summary.failed == 0 ? 0 : 1; }
};

inline RunResult run(const SuiteConfig& config) {
  Stopwatch clock;
  auto records = execute(plan_checks(config), config.jobs);
  RunSummary summary = summarize(records, clock.millis());
  return {std::move(records), summary};
}

}  // namespace trigdet
