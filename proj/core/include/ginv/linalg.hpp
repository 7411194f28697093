#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

/// Dense matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!x.is_zero())
        return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t.at(j, i) = at(i, j);
    return t;
  }

  RatMatrix operator*(const RatMatrix &other) const;
  RatMatrix operator+(const RatMatrix &other) const;
  RatMatrix operator-(const RatMatrix &other) const;
  RatMatrix operator*(const Rational &scalar) const;

  friend bool operator==(const RatMatrix &a, const RatMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over the rationals. Rows are scaled to integers, then reduced
/// by fraction-free (Bareiss) elimination so every intermediate entry stays
/// an integer minor of the scaled matrix.
std::size_t exact_rank(const RatMatrix &m);

/// Exact determinant of a square matrix (Gaussian elimination over Q).
Rational exact_det(const RatMatrix &m);

/// Inverse, or nullopt when singular.
std::optional<RatMatrix> try_inverse(const RatMatrix &m);

/// One exact solution of A x = b, or nullopt when inconsistent. When the
/// system is underdetermined the free variables are set to zero.
std::optional<std::vector<Rational>> solve_linear(const RatMatrix &a,
                                                  const std::vector<Rational> &b);

} // namespace ginv
