#pragma once

// Dense matrices over a commutative ring (Integer, Rational, TrigPoly).
// Determinants are division-free so they are valid in any such ring.

#include "trigdet/exact.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace trigdet {

template <class T>
concept CommutativeRing = std::regular<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  T(0);
  T(1);
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <CommutativeRing T>
class ExactMatrix {
 public:
  using value_type = T;

  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  }

  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols)
      throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                           std::to_string(data_.size()));
  }

  ExactMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged initializer list");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  // Builds entry (i, j) from fn(i, j) with 0-based indices.
  template <class Fn>
  static ExactMatrix generate(std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<T> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) entries.push_back(T(fn(i, j)));
    return ExactMatrix(rows, cols, std::move(entries));
  }

  static ExactMatrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t i, std::size_t j) { return i == j ? T(1) : T(0); });
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }

  template <class Fn>
  auto map(Fn&& fn) const {
    using U = std::decay_t<std::invoke_result_t<Fn, const T&>>;
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(fn(v));
    return ExactMatrix<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <CommutativeRing T>
ExactMatrix<T> transpose(const ExactMatrix<T>& m) {
  return ExactMatrix<T>::generate(m.cols(), m.rows(), [&](std::size_t i, std::size_t j) { return m(j, i); });
}

template <CommutativeRing T>
ExactMatrix<T> matmul(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const T zero(0);
  ExactMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& ail = a(i, l);
      if (ail == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(l, j) == zero) continue;
        out(i, j) = out(i, j) + ail * b(l, j);
      }
    }
  return out;
}

template <CommutativeRing T>
ExactMatrix<T> operator*(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
  return matmul(a, b);
}

template <CommutativeRing T>
ExactMatrix<T> submatrix(const ExactMatrix<T>& m, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) {
  return ExactMatrix<T>::generate(rows.size(), cols.size(),
                                  [&](std::size_t i, std::size_t j) { return m(rows[i], cols[j]); });
}

namespace detail {

template <CommutativeRing T>
void require_square(const ExactMatrix<T>& m, const char* what) {
  if (!m.is_square())
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
}

}  // namespace detail

// Laplace expansion along rows, memoized over the set of used columns:
// minor[S] is the signed sum over injections of the first |S| rows onto S.
// O(2^n * n) ring multiplications.
template <CommutativeRing T>
T determinant_expansion(const ExactMatrix<T>& m) {
  detail::require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n > 24) throw DimensionError("determinant_expansion: order " + std::to_string(n) + " too large");
  const T zero(0);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<T> minor(std::size_t{1} << n, zero);
  minor[0] = T(1);
  for (std::uint32_t used = 0; used < full; ++used) {
    if (minor[used] == zero) continue;
    const auto row = static_cast<std::size_t>(std::popcount(used));
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (used & bit) continue;
      const T& entry = m(row, j);
      if (entry == zero) continue;
      // Inversions added by placing this row in column j.
      const bool odd = std::popcount(used >> (j + 1)) % 2 == 1;
      T term = entry * minor[used];
      minor[used | bit] = odd ? minor[used | bit] - term : minor[used | bit] + term;
    }
  }
  return minor[full];
}

// Berkowitz: characteristic polynomial by Toeplitz products, O(n^4), no
// division.
template <CommutativeRing T>
T determinant_berkowitz(const ExactMatrix<T>& m) {
  detail::require_square(m, "determinant");
  const std::size_t n = m.rows();
  // Coefficients of det(lambda*I - A_r), leading coefficient first.
  std::vector<T> poly{T(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // A_{r+1} = [[A_r, S], [R, a]] with S = column r above the diagonal,
    // R = row r left of the diagonal.
    std::vector<T> toeplitz{T(1), -m(r, r)};
    std::vector<T> v(r);  // A_r^k * S
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot(0);
      for (std::size_t i = 0; i < r; ++i) dot = dot + m(r, i) * v[i];
      toeplitz.push_back(-dot);
      if (k + 1 < r) {
        std::vector<T> next(r, T(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t l = 0; l < r; ++l) next[i] = next[i] + m(i, l) * v[l];
        v = std::move(next);
      }
    }
    std::vector<T> next(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t l = 0; l <= std::min(i, r); ++l) next[i] = next[i] + toeplitz[i - l] * poly[l];
    poly = std::move(next);
  }
  return n % 2 == 0 ? poly[n] : T(-poly[n]);
}

template <CommutativeRing T>
T determinant(const ExactMatrix<T>& m) {
  detail::require_square(m, "determinant");
  return m.rows() <= 16 ? determinant_expansion(m) : determinant_berkowitz(m);
}

// Fraction-free (Bareiss) rank. Pivot: first nonzero entry at or below the
// current row in the current column.
template <class T>
  requires(std::same_as<T, Integer> || std::same_as<T, Rational>)
std::size_t rank(const ExactMatrix<T>& m) {
  ExactMatrix<T> w = m;
  const T zero(0);
  std::size_t r = 0;
  T previous(1);
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < w.rows() && w(pivot, c) == zero) ++pivot;
    if (pivot == w.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(pivot, j), w(r, j));
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      for (std::size_t j = c + 1; j < w.cols(); ++j)
        w(i, j) = (w(r, c) * w(i, j) - w(i, c) * w(r, j)) / previous;
      w(i, c) = zero;
    }
    previous = w(r, c);
    ++r;
  }
  return r;
}

template <CommutativeRing T>
struct InterleaveBlocks {
  ExactMatrix<T> odd;   // rows 1,3,5,... x columns 1,3,5,...
  ExactMatrix<T> even;  // rows 2,4,6,... x columns 2,4,6,...
};

// Splits a checkerboard matrix (entry (i, j) vanishes when i + j is odd) into
// its odd/odd and even/even blocks; det(H) = det(odd) * det(even).
template <CommutativeRing T>
InterleaveBlocks<T> interleave_split(const ExactMatrix<T>& h) {
  detail::require_square(h, "interleave_split");
  if (h.rows() % 2 != 0) throw DimensionError("interleave_split: order " + std::to_string(h.rows()) + " is odd");
  const T zero(0);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if ((i + j) % 2 == 1 && !(h(i, j) == zero))
        throw DimensionError("interleave_split: nonzero entry at (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ") breaks the checkerboard pattern");
  const std::size_t m = h.rows() / 2;
  auto block = [&](std::size_t offset) {
    return ExactMatrix<T>::generate(m, m, [&](std::size_t i, std::size_t j) { return h(2 * i + offset, 2 * j + offset); });
  };
  return {block(0), block(1)};
}

template <CommutativeRing T, class Render>
std::string format_matrix(const ExactMatrix<T>& m, Render&& render) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(render(m(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& cell = cells[i * m.cols() + j];
      out << std::string(width[j] - cell.size(), ' ') << cell << (j + 1 < m.cols() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

template <CommutativeRing T>
std::string format_matrix(const ExactMatrix<T>& m) {
  return format_matrix(m, [](const T& v) { return to_string(v); });
}

// {"rows": r, "cols": c, "entries": ["..."]} with entries in row-major order.
template <CommutativeRing T>
nlohmann::json to_json(const ExactMatrix<T>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& v : m.entries()) entries.push_back(to_string(v));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <CommutativeRing T>
ExactMatrix<Rational> to_rational(const ExactMatrix<T>& m) {
  return m.map([](const T& v) { return Rational(v); });
}

// Square-and-multiply in any ring.
template <CommutativeRing T>
T ring_pow(T base, unsigned exponent) {
  T result(1);
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace trigdet
