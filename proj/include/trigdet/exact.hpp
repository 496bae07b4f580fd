#pragma once

// Arbitrary-precision integers and rationals used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trigdet {

// Expression templates are switched off so that `a + b` is a plain value and
// generic code (ExactMatrix<T>, determinants) can use `auto` safely.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) { return Integer(boost::multiprecision::numerator(r)); }
inline Integer denominator_of(const Rational& r) { return Integer(boost::multiprecision::denominator(r)); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline std::string to_string(const Integer& v) { return v.str(); }

// "num" for integers, "num/den" otherwise; the denominator is always positive.
inline std::string to_string(const Rational& v) {
  const Integer num = numerator_of(v);
  const Integer den = denominator_of(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

// Accepts "p", "p/q" and terminating decimals such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den)) throw fail();
    Integer d = detail::parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(detail::parse_integer(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole = "0";
    if (!detail::is_decimal_integer(whole)) throw fail();
    if (frac.empty() || !detail::is_decimal_integer(frac) || frac[0] == '-' || frac[0] == '+') throw fail();
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = detail::parse_integer(whole);
    if (w < 0) w = -w;
    Rational r = Rational(w) + Rational(detail::parse_integer(frac), scale);
    return negative ? Rational(-r) : r;
  }
  if (!detail::is_decimal_integer(s)) throw fail();
  return Rational(detail::parse_integer(s));
}

}  // namespace trigdet
