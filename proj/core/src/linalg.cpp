#include "ginv/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ginv {

RatMatrix RatMatrix::operator*(const RatMatrix &other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("RatMatrix: dimension mismatch in product");
  RatMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational &aik = at(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RatMatrix: dimension mismatch in sum");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RatMatrix: dimension mismatch in difference");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const Rational &scalar) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] * scalar;
  return r;
}

namespace {

// Integer copy of m with each row scaled by the lcm of its denominators.
// Row scaling by positive factors leaves the rank unchanged.
std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix &m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(),
                                           std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class den = m.at(i, j).denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
      l = l / g * den;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational &x = m.at(i, j);
      rows[i][j] = x.numerator() * (l / x.denominator());
    }
  }
  return rows;
}

} // namespace

std::size_t exact_rank(const RatMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  auto a = integer_rows(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0)
      ++p;
    if (p == nr)
      continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rational exact_det(const RatMatrix &m) {
  if (!m.is_square())
    throw std::invalid_argument("exact_det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return Rational(1);
  RatMatrix a = m;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero())
      ++p;
    if (p == n)
      return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    const Rational inv = Rational(1) / a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero())
        continue;
      const Rational f = a.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> try_inverse(const RatMatrix &m) {
  if (!m.is_square())
    throw std::invalid_argument("try_inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero())
      ++p;
    if (p == n)
      return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    const Rational piv_inv = Rational(1) / a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) *= piv_inv;
      inv.at(c, j) *= piv_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero())
        continue;
      const Rational f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rational>> solve_linear(const RatMatrix &a,
                                                  const std::vector<Rational> &b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  const std::size_t nr = a.rows(), nc = a.cols();
  RatMatrix aug(nr, nc + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j)
      aug.at(i, j) = a.at(i, j);
    aug.at(i, nc) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && aug.at(p, c).is_zero())
      ++p;
    if (p == nr)
      continue;
    if (p != r)
      for (std::size_t j = 0; j <= nc; ++j)
        std::swap(aug.at(p, j), aug.at(r, j));
    const Rational piv_inv = Rational(1) / aug.at(r, c);
    for (std::size_t j = c; j <= nc; ++j)
      aug.at(r, j) *= piv_inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || aug.at(i, c).is_zero())
        continue;
      const Rational f = aug.at(i, c);
      for (std::size_t j = c; j <= nc; ++j)
        aug.at(i, j) -= f * aug.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (!aug.at(i, nc).is_zero())
      return std::nullopt;
  std::vector<Rational> x(nc);
  for (std::size_t k = 0; k < pivot_col.size(); ++k)
    x[pivot_col[k]] = aug.at(k, nc);
  return x;
}

} // namespace ginv
