#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ginv/linalg.hpp"
#include "ginv/rational.hpp"

namespace ginv {

/// Exponent vector; entry k is the power of variable k.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial &m) {
  int d = 0;
  for (int e : m)
    d += e;
  return d;
}

/// Graded lexicographic order, descending, so that map iteration starts at
/// the leading term. This is the canonical term order used for printing and
/// serialization.
struct GradedLexDesc {
  bool operator()(const Monomial &a, const Monomial &b) const {
    const int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db)
      return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexDesc>;
  using VarNamer = std::function<std::string(std::size_t)>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational &c) {
    MultiPoly p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : monomial_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty())
      return true;
    return monomial_degree(terms_.begin()->first) ==
           monomial_degree(terms_.rbegin()->first);
  }

  Rational coefficient(const Monomial &mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  void add_term(Monomial mono, const Rational &coeff);

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly operator+(const MultiPoly &o) const {
    MultiPoly r = *this;
    return r += o;
  }
  MultiPoly operator-(const MultiPoly &o) const {
    MultiPoly r = *this;
    return r -= o;
  }
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly &o) const;
  MultiPoly operator*(const Rational &c) const;

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Exact evaluation at a rational point.
  Rational eval(const std::vector<Rational> &point) const;

  /// Exact partial derivative with respect to variable `var`.
  MultiPoly derivative(std::size_t var) const;

  /// Substitutes images[v] for variable v. All images must live in a common
  /// variable space; the result lives there too.
  MultiPoly substitute(const std::vector<MultiPoly> &images) const;

  /// Same polynomial viewed in a larger variable space (indices preserved).
  MultiPoly extended(std::size_t new_num_vars) const;

  /// Canonical text form: terms in graded-lex order, rationals as p/q.
  /// The namer maps a variable index to its display name ("x1" by default).
  std::string str(const VarNamer &namer = nullptr) const;

private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// Flips the sign so the leading (graded-lex first) coefficient is positive.
MultiPoly sign_normalized(MultiPoly p);

/// The unique symmetric multilinear form s_p with s_p(X,...,X) = p(X) for a
/// homogeneous p of degree d = slots, computed by inclusion-exclusion over
/// nonempty subsets of the slots. Result lives in slots * num_vars variables,
/// slot-major.
MultiPoly polarize(const MultiPoly &p, int slots);

/// Rectangular matrix of polynomials over a common variable space.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
      : rows_(rows), cols_(cols), num_vars_(num_vars),
        entries_(rows * cols, MultiPoly(num_vars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return num_vars_; }

  MultiPoly &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly &at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  PolyMatrix operator*(const PolyMatrix &o) const;
  MultiPoly trace() const;
  void add_scalar_diagonal(const MultiPoly &p);

  RatMatrix eval(const std::vector<Rational> &point) const;

private:
  std::size_t rows_ = 0, cols_ = 0, num_vars_ = 0;
  std::vector<MultiPoly> entries_;
};

/// Vector field with polynomial coefficients: coeff(k) multiplies d/dx_k.
class PolyVectorField {
public:
  explicit PolyVectorField(std::size_t num_vars = 0)
      : num_vars_(num_vars), coeffs_(num_vars, MultiPoly(num_vars)) {}

  std::size_t num_vars() const { return num_vars_; }
  MultiPoly &coeff(std::size_t k) { return coeffs_[k]; }
  const MultiPoly &coeff(std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const {
    for (const auto &c : coeffs_)
      if (!c.is_zero())
        return false;
    return true;
  }

  /// Applies the field to f as a derivation: sum_k coeff(k) * df/dx_k.
  MultiPoly apply(const MultiPoly &f) const;

  PolyVectorField &add_scaled(const PolyVectorField &o, const Rational &c);

  friend bool operator==(const PolyVectorField &a, const PolyVectorField &b) {
    return a.num_vars_ == b.num_vars_ && a.coeffs_ == b.coeffs_;
  }

private:
  std::size_t num_vars_;
  std::vector<MultiPoly> coeffs_;
};

/// Lie bracket of vector fields: [X,Y]^k = X(Y^k) - Y(X^k).
PolyVectorField lie_bracket(const PolyVectorField &x, const PolyVectorField &y);

class LieAlgebraSpec;

/// Nonzero coefficients of det(t*I - sum_a x_a rho(B_a)) as polynomials in
/// the basis coordinates x_a, in decreasing t-degree, each sign-normalized.
/// Computed by the Leverrier-Faddeev recursion over the polynomial ring.
std::vector<MultiPoly> char_poly_invariants(const LieAlgebraSpec &spec);

/// Pfaffian of sum_a x_a rho(B_a) for an antisymmetric even-size matrix
/// representation, via the signed perfect-matching expansion.
MultiPoly pfaffian(const LieAlgebraSpec &spec);

} // namespace ginv
