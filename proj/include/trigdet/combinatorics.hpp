#pragma once

#include "trigdet/exact.hpp"

#include <cstddef>
#include <vector>

namespace trigdet {

// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
inline Rational falling_factorial(const Rational& x, unsigned n) {
  Rational result = 1;
  for (unsigned t = 0; t < n; ++t) result *= x - Rational(t);
  return result;
}

inline Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned t = 2; t <= n; ++t) result *= t;
  return result;
}

// Generalized binomial coefficient (x)_k / k!. For integer 0 <= x < k the
// falling factorial passes through zero, so the value is 0; negative integer
// x follows the same polynomial.
inline Rational binomial(const Rational& x, unsigned k) {
  return falling_factorial(x, k) / Rational(factorial(k));
}

inline Rational binomial(long long x, unsigned k) { return binomial(Rational(x), k); }

inline Integer pow_integer(const Integer& base, unsigned exponent) {
  Integer result = 1;
  for (unsigned t = 0; t < exponent; ++t) result *= base;
  return result;
}

inline Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned t = 0; t < exponent; ++t) result *= base;
  return result;
}

// Signed Stirling numbers of the first kind, grown on demand with
// s(n+1,k) = s(n,k-1) - n*s(n,k).
class StirlingFirstTable {
 public:
  StirlingFirstTable() : rows_{{Integer(1)}} {}

  const Integer& at(unsigned n, unsigned k) {
    static const Integer zero = 0;
    if (k > n) return zero;
    grow(n);
    return rows_[n][k];
  }

 private:
  void grow(unsigned n) {
    while (rows_.size() <= n) {
      const unsigned m = static_cast<unsigned>(rows_.size()) - 1;
      const auto& prev = rows_.back();
      std::vector<Integer> next(m + 2, Integer(0));
      for (unsigned k = 0; k <= m + 1; ++k) {
        Integer v = 0;
        if (k >= 1) v += prev[k - 1];
        if (k <= m) v -= Integer(m) * prev[k];
        next[k] = v;
      }
      rows_.push_back(std::move(next));
    }
  }

  std::vector<std::vector<Integer>> rows_;
};

inline Integer stirling_first(unsigned n, unsigned k) {
  thread_local StirlingFirstTable table;
  return table.at(n, k);
}

}  // namespace trigdet
