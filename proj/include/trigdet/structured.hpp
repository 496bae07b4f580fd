#pragma once

// Builders for the named structured matrices (shift matrices R_k and U_{k,n},
// the triangular transforms T and its bidiagonal variant, G, Pascal, and the
// binomial matrices B, C, [C(aj+b, i-1)], [C(x_j, i-1)]) together with the
// determinant identities they satisfy.
//
// All index formulas below are 1-based, matching the usual matrix notation.

#include "trigdet/combinatorics.hpp"
#include "trigdet/matrix.hpp"
#include "trigdet/report.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trigdet {

enum class MatrixKind {
  Rk,            // n x n, 1 on the diagonal and on (i, i-1) for i >= k+1
  Ukn,           // n x n, 1 on the diagonal and on (i, i-2) for i >= 2k+1
  TLower,        // (n+1) x (n+1), (-1/2)^(i-j) C(2i-j-1, i-j) for j <= i
  G,             // (n+1) x (n+1), 2^(i-1) C(j-1, i-1)
  Bidiagonal,    // (n+1) x (n+1), 1 on the diagonal and subdiagonal
  Pascal,        // n x n, C(i-1, j-1)
  BinomB,        // (n+1) x (n+1), C(2j-1, i-1)
  BinomC,        // (n+1) x (n+1), C(2j, i-1)
  BinomGeneral,  // n x n, C(a j + b, i-1)
  BinomNodes,    // m x m for m nodes, C(x_j, i-1)
};

struct MatrixKindName {
  MatrixKind kind;
  std::string_view name;
};

inline constexpr std::array<MatrixKindName, 10> kMatrixKindNames{{
    {MatrixKind::Rk, "rk"},
    {MatrixKind::Ukn, "ukn"},
    {MatrixKind::TLower, "t"},
    {MatrixKind::G, "g"},
    {MatrixKind::Bidiagonal, "bidiagonal"},
    {MatrixKind::Pascal, "pascal"},
    {MatrixKind::BinomB, "binom-b"},
    {MatrixKind::BinomC, "binom-c"},
    {MatrixKind::BinomGeneral, "binom-general"},
    {MatrixKind::BinomNodes, "binom-nodes"},
}};

inline std::string_view to_string(MatrixKind kind) {
  for (const auto& entry : kMatrixKindNames)
    if (entry.kind == kind) return entry.name;
  return "unknown";
}

inline std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  for (const auto& entry : kMatrixKindNames)
    if (entry.name == name) return entry.kind;
  return std::nullopt;
}

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MatrixSpec {
  MatrixKind kind = MatrixKind::Pascal;
  unsigned n = 0;
  unsigned k = 0;                // Rk, Ukn
  Rational a = 1;                // BinomGeneral
  Rational b = 0;                // BinomGeneral
  std::vector<Rational> nodes;   // BinomNodes
};

inline void validate(const MatrixSpec& spec) {
  auto fail = [&](const std::string& why) {
    return SpecError(std::string(to_string(spec.kind)) + ": " + why);
  };
  switch (spec.kind) {
    case MatrixKind::Rk:
      if (spec.n < 2) throw fail("requires n >= 2");
      if (spec.k < 1 || spec.k > spec.n - 1) throw fail("requires 1 <= k <= n-1");
      break;
    case MatrixKind::Ukn:
      if (spec.n < 3) throw fail("requires n >= 3");
      if (spec.k < 1 || spec.k > (spec.n + 1) / 2 - 1) throw fail("requires 1 <= k <= floor((n+1)/2) - 1");
      break;
    case MatrixKind::BinomNodes:
      if (spec.nodes.empty()) throw fail("requires at least one node");
      break;
    default:
      if (spec.n < 1) throw fail("requires n >= 1");
  }
}

inline std::size_t order(const MatrixSpec& spec) {
  switch (spec.kind) {
    case MatrixKind::Rk:
    case MatrixKind::Ukn:
    case MatrixKind::Pascal:
    case MatrixKind::BinomGeneral:
      return spec.n;
    case MatrixKind::BinomNodes:
      return spec.nodes.size();
    default:
      return spec.n + 1;
  }
}

inline ExactMatrix<Rational> build(const MatrixSpec& spec) {
  validate(spec);
  const std::size_t size = order(spec);
  const unsigned n = spec.n;
  const unsigned k = spec.k;
  auto entry = [&](long long i, long long j) -> Rational {
    switch (spec.kind) {
      case MatrixKind::Rk:
        return (i == j || (i == j + 1 && i >= k + 1 && i <= n)) ? 1 : 0;
      case MatrixKind::Ukn:
        return (i == j || (i == j + 2 && i >= 2LL * k + 1 && i <= n)) ? 1 : 0;
      case MatrixKind::TLower:
        if (j > i) return 0;
        return pow_rational(Rational(-1, 2), static_cast<unsigned>(i - j)) *
               binomial(2 * i - j - 1, static_cast<unsigned>(i - j));
      case MatrixKind::G:
        return Rational(pow_integer(2, static_cast<unsigned>(i - 1))) * binomial(j - 1, static_cast<unsigned>(i - 1));
      case MatrixKind::Bidiagonal:
        return (i == j || i == j + 1) ? 1 : 0;
      case MatrixKind::Pascal:
        return binomial(i - 1, static_cast<unsigned>(j - 1));
      case MatrixKind::BinomB:
        return binomial(2 * j - 1, static_cast<unsigned>(i - 1));
      case MatrixKind::BinomC:
        return binomial(2 * j, static_cast<unsigned>(i - 1));
      case MatrixKind::BinomGeneral:
        return binomial(spec.a * j + spec.b, static_cast<unsigned>(i - 1));
      case MatrixKind::BinomNodes:
        return binomial(spec.nodes[static_cast<std::size_t>(j - 1)], static_cast<unsigned>(i - 1));
    }
    return 0;
  };
  return ExactMatrix<Rational>::generate(size, size, [&](std::size_t i, std::size_t j) {
    return entry(static_cast<long long>(i) + 1, static_cast<long long>(j) + 1);
  });
}

inline ExactMatrix<Rational> build(MatrixKind kind, unsigned n, unsigned k = 0) {
  MatrixSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.k = k;
  return build(spec);
}

// Parameters of a spec as a JSON object, for report records.
inline nlohmann::json spec_params(const MatrixSpec& spec) {
  nlohmann::json p = nlohmann::json::object();
  switch (spec.kind) {
    case MatrixKind::Rk:
    case MatrixKind::Ukn:
      p["n"] = spec.n;
      p["k"] = spec.k;
      break;
    case MatrixKind::BinomGeneral:
      p["n"] = spec.n;
      p["a"] = to_string(spec.a);
      p["b"] = to_string(spec.b);
      break;
    case MatrixKind::BinomNodes: {
      nlohmann::json xs = nlohmann::json::array();
      for (const auto& x : spec.nodes) xs.push_back(to_string(x));
      p["nodes"] = std::move(xs);
      break;
    }
    default:
      p["n"] = spec.n;
  }
  return p;
}

// Compact single-line rendering, e.g. "[[1,0],[1,1]]".
template <CommutativeRing T>
std::string compact(const ExactMatrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += to_string(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

// R_{n-1} R_{n-2} ... R_1 by repeated multiplication.
inline ExactMatrix<Rational> pascal_product(unsigned n) {
  if (n < 2) throw SpecError("pascal_product requires n >= 2");
  auto product = ExactMatrix<Rational>::identity(n);
  for (unsigned k = 1; k <= n - 1; ++k) product = build(MatrixKind::Rk, n, k) * product;
  return product;
}

inline VerificationReport verify_pascal_product(unsigned n) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "pascal";
  r.check = "pascal-product";
  r.params = {{"n", n}};
  const auto product = pascal_product(n);
  const auto closed = build(MatrixKind::Pascal, n);
  r.expected = compact(closed);
  r.computed = compact(product);
  r.pass = product == closed;
  r.millis = clock.millis();
  return r;
}

// R_k A adds row i-1 to row i for i > k; A R_k^T does the same to columns.
inline VerificationReport verify_row_shift(const ExactMatrix<Rational>& a, unsigned k) {
  detail::require_square(a, "verify_row_shift");
  const auto n = static_cast<unsigned>(a.rows());
  Stopwatch clock;
  VerificationReport r;
  r.suite = "structure";
  r.check = "row-shift";
  r.params = {{"n", n}, {"k", k}};
  const auto rk = build(MatrixKind::Rk, n, k);
  const auto rows_shifted = rk * a;
  const auto cols_shifted = a * transpose(rk);
  const auto predicted_rows = ExactMatrix<Rational>::generate(n, n, [&](std::size_t i, std::size_t j) {
    return i + 1 > k ? Rational(a(i, j) + a(i - 1, j)) : a(i, j);
  });
  const auto predicted_cols = ExactMatrix<Rational>::generate(n, n, [&](std::size_t i, std::size_t j) {
    return j + 1 > k ? Rational(a(i, j) + a(i, j - 1)) : a(i, j);
  });
  r.expected = compact(predicted_rows) + " ; " + compact(predicted_cols);
  r.computed = compact(rows_shifted) + " ; " + compact(cols_shifted);
  r.pass = rows_shifted == predicted_rows && cols_shifted == predicted_cols;
  r.millis = clock.millis();
  return r;
}

// Closed-form determinant of a binomial matrix spec.
inline Rational closed_form_determinant(const MatrixSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case MatrixKind::BinomB:
    case MatrixKind::BinomC:
      return Rational(pow_integer(2, spec.n * (spec.n + 1) / 2));
    case MatrixKind::BinomGeneral:
      return pow_rational(spec.a, spec.n * (spec.n - 1) / 2);
    case MatrixKind::BinomNodes: {
      const auto& x = spec.nodes;
      Rational value = 1;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) value *= x[j] - x[i];
      for (unsigned t = 1; t < x.size(); ++t) value /= Rational(factorial(t));
      return value;
    }
    case MatrixKind::Rk:
    case MatrixKind::Ukn:
    case MatrixKind::TLower:
    case MatrixKind::Bidiagonal:
    case MatrixKind::Pascal:
      return 1;
    case MatrixKind::G:
      return Rational(pow_integer(2, spec.n * (spec.n + 1) / 2));
  }
  return 0;
}

// Compares det(build(spec)) with its closed form. Applies to every kind; the
// binomial kinds carry the substantive identities, the triangular kinds have
// determinant 1.
inline VerificationReport det_identity(const MatrixSpec& spec) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "determinants";
  r.check = "det-" + std::string(to_string(spec.kind));
  r.params = spec_params(spec);
  const Rational expected = closed_form_determinant(spec);
  const Rational computed = determinant(build(spec));
  r.expected = to_string(expected);
  r.computed = to_string(computed);
  r.pass = expected == computed;
  r.millis = clock.millis();
  return r;
}

// T B = G, the matrix form of the binomial-sum identity.
inline VerificationReport verify_TB_equals_G(unsigned n) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "determinants";
  r.check = "TB=G";
  r.params = {{"n", n}};
  const auto product = build(MatrixKind::TLower, n) * build(MatrixKind::BinomB, n);
  const auto g = build(MatrixKind::G, n);
  r.expected = compact(g);
  r.computed = compact(product);
  r.pass = product == g;
  r.millis = clock.millis();
  return r;
}

// Bidiagonal * B = C (Pascal rule), hence |C| = |B|.
inline VerificationReport verify_C_from_B(unsigned n) {
  Stopwatch clock;
  VerificationReport r;
  r.suite = "determinants";
  r.check = "C=T'B";
  r.params = {{"n", n}};
  const auto product = build(MatrixKind::Bidiagonal, n) * build(MatrixKind::BinomB, n);
  const auto c = build(MatrixKind::BinomC, n);
  r.expected = compact(c);
  r.computed = compact(product);
  r.pass = product == c;
  r.millis = clock.millis();
  return r;
}

}  // namespace trigdet
