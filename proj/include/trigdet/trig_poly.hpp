#pragma once

// Exact arithmetic in Q[x, s, c]/(s^2 + c^2 - 1) with s = sin x, c = cos x.
//
// Every element has the unique normal form p(x, c) + s*q(x, c): {1, s} is a
// module basis of the quotient over Q[x, c], so two elements are equal iff
// their p and q parts agree coefficient-wise.

#include "trigdet/exact.hpp"

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace trigdet {

enum class TrigKind { Sin, Cos };

inline const char* to_string(TrigKind kind) { return kind == TrigKind::Sin ? "sin" : "cos"; }

// Sparse polynomial in x and c. Zero coefficients are never stored.
class XCPoly {
 public:
  struct Exponents {
    unsigned x = 0;
    unsigned c = 0;
    auto operator<=>(const Exponents&) const = default;
  };
  using Terms = std::map<Exponents, Rational>;

  XCPoly() = default;
  explicit XCPoly(const Rational& constant) { add_term({0, 0}, constant); }

  static XCPoly monomial(const Rational& coeff, unsigned x_degree, unsigned c_degree) {
    XCPoly p;
    p.add_term({x_degree, c_degree}, coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Rational coefficient(unsigned x_degree, unsigned c_degree) const {
    auto it = terms_.find({x_degree, c_degree});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Exponents e, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  XCPoly& operator+=(const XCPoly& other) {
    for (const auto& [e, coeff] : other.terms_) add_term(e, coeff);
    return *this;
  }
  XCPoly& operator-=(const XCPoly& other) {
    for (const auto& [e, coeff] : other.terms_) add_term(e, -coeff);
    return *this;
  }
  XCPoly& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& term : terms_) term.second *= k;
    }
    return *this;
  }

  friend XCPoly operator+(XCPoly a, const XCPoly& b) { return a += b; }
  friend XCPoly operator-(XCPoly a, const XCPoly& b) { return a -= b; }
  friend XCPoly operator-(XCPoly a) { return a *= Rational(-1); }
  friend XCPoly operator*(XCPoly a, const Rational& k) { return a *= k; }

  friend XCPoly operator*(const XCPoly& a, const XCPoly& b) {
    XCPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term({ea.x + eb.x, ea.c + eb.c}, ca * cb);
    return out;
  }

  friend bool operator==(const XCPoly&, const XCPoly&) = default;

  XCPoly derivative_x() const {
    XCPoly out;
    for (const auto& [e, coeff] : terms_)
      if (e.x > 0) out.add_term({e.x - 1, e.c}, coeff * e.x);
    return out;
  }

  XCPoly derivative_c() const {
    XCPoly out;
    for (const auto& [e, coeff] : terms_)
      if (e.c > 0) out.add_term({e.x, e.c - 1}, coeff * e.c);
    return out;
  }

  XCPoly times_c(unsigned power = 1) const {
    XCPoly out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(Exponents{e.x, e.c + power}, coeff);
    return out;
  }

 private:
  Terms terms_;
};

class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(const Rational& constant) : p_(constant) {}  // NOLINT: ring embedding of Q
  TrigPoly(XCPoly p, XCPoly q) : p_(std::move(p)), q_(std::move(q)) {}

  static TrigPoly sin() { return {XCPoly(), XCPoly(Rational(1))}; }
  static TrigPoly cos() { return {XCPoly::monomial(1, 0, 1), XCPoly()}; }
  static TrigPoly x() { return {XCPoly::monomial(1, 1, 0), XCPoly()}; }

  // The s-free part p and the coefficient q of s.
  const XCPoly& p() const { return p_; }
  const XCPoly& q() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  TrigPoly& operator+=(const TrigPoly& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  TrigPoly& operator-=(const TrigPoly& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator-(const TrigPoly& a) { return {-a.p_, -a.q_}; }

  // (p1 + s q1)(p2 + s q2) = p1 p2 + (1 - c^2) q1 q2 + s (p1 q2 + q1 p2)
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    XCPoly p = a.p_ * b.p_;
    if (!a.q_.is_zero() && !b.q_.is_zero()) {
      XCPoly qq = a.q_ * b.q_;
      p += qq;
      p -= qq.times_c(2);
    }
    XCPoly q = a.p_ * b.q_;
    q += a.q_ * b.p_;
    return {std::move(p), std::move(q)};
  }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  XCPoly p_;
  XCPoly q_;
};

// x^power * sin x or x^power * cos x.
inline TrigPoly basis_element(unsigned power, TrigKind kind) {
  if (kind == TrigKind::Sin) return {XCPoly(), XCPoly::monomial(1, power, 0)};
  return {XCPoly::monomial(1, power, 1), XCPoly()};
}

// D(p + s q) = (p_x + c q + (c^2 - 1) q_c) + s (q_x - p_c)
inline TrigPoly differentiate(const TrigPoly& u) {
  const XCPoly q_c = u.q().derivative_c();
  XCPoly p = u.p().derivative_x();
  p += u.q().times_c();
  p += q_c.times_c(2);
  p -= q_c;
  XCPoly q = u.q().derivative_x();
  q -= u.p().derivative_c();
  return {std::move(p), std::move(q)};
}

inline TrigPoly differentiate(TrigPoly u, unsigned times) {
  for (unsigned t = 0; t < times; ++t) u = differentiate(u);
  return u;
}

// D^k or (D^2 + 1)^k; exponent 0 is the identity.
struct TrigOperatorPower {
  enum class Base { D, DSquaredPlusOne };
  Base base = Base::D;
  unsigned exponent = 0;
};

inline TrigPoly apply_operator(const TrigOperatorPower& op, TrigPoly u) {
  for (unsigned t = 0; t < op.exponent; ++t) {
    if (op.base == TrigOperatorPower::Base::D) {
      u = differentiate(u);
    } else {
      u = differentiate(differentiate(u)) + u;
    }
  }
  return u;
}

inline TrigPoly apply_d(unsigned k, const TrigPoly& u) {
  return apply_operator({TrigOperatorPower::Base::D, k}, u);
}

inline TrigPoly apply_d2_plus_1(unsigned k, const TrigPoly& u) {
  return apply_operator({TrigOperatorPower::Base::DSquaredPlusOne, k}, u);
}

// Value at x = 0 (s = 0, c = 1).
inline Rational eval_at_zero(const TrigPoly& u) {
  Rational sum = 0;
  for (const auto& [e, coeff] : u.p().terms())
    if (e.x == 0) sum += coeff;
  return sum;
}

inline std::optional<Rational> is_constant(const TrigPoly& u) {
  if (!u.q().is_zero()) return std::nullopt;
  const auto& terms = u.p().terms();
  if (terms.empty()) return Rational(0);
  if (terms.size() == 1 && terms.begin()->first == XCPoly::Exponents{0, 0}) return terms.begin()->second;
  return std::nullopt;
}

// Terms ordered by (s-degree, x-degree, c-degree) descending, e.g.
// "s*x^2 - 4*x*c + 1/2".
inline std::string to_string(const TrigPoly& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](unsigned s_degree, const XCPoly& part) {
    for (auto it = part.terms().rbegin(); it != part.terms().rend(); ++it) {
      const auto& [e, coeff] = *it;
      const bool negative = coeff < 0;
      const Rational magnitude = negative ? Rational(-coeff) : coeff;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;

      std::string factors;
      auto append = [&](const std::string& f) {
        if (!factors.empty()) factors += '*';
        factors += f;
      };
      if (s_degree == 1) append("s");
      if (e.x == 1) append("x");
      if (e.x > 1) append("x^" + std::to_string(e.x));
      if (e.c == 1) append("c");
      if (e.c > 1) append("c^" + std::to_string(e.c));

      if (factors.empty()) {
        out << trigdet::to_string(magnitude);
      } else if (magnitude == 1) {
        out << factors;
      } else {
        out << trigdet::to_string(magnitude) << '*' << factors;
      }
    }
  };
  emit(1, u.q());
  emit(0, u.p());
  return out.str();
}

}  // namespace trigdet
