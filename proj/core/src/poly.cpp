#include "ginv/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "ginv/liealg.hpp"

namespace ginv {

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars)
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly p(num_vars);
  Monomial mono(num_vars, 0);
  mono[index] = 1;
  p.add_term(std::move(mono), Rational(1));
  return p;
}

void MultiPoly::add_term(Monomial mono, const Rational &coeff) {
  if (mono.size() != num_vars_)
    throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto &[mono, coeff] : o.terms_)
    add_term(mono, coeff);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto &[mono, coeff] : o.terms_)
    add_term(mono, -coeff);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(num_vars_);
  for (const auto &[mono, coeff] : terms_)
    r.terms_.emplace(mono, -coeff);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly &o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly r(num_vars_);
  for (const auto &[ma, ca] : terms_)
    for (const auto &[mb, cb] : o.terms_) {
      Monomial mono(num_vars_);
      for (std::size_t v = 0; v < num_vars_; ++v)
        mono[v] = ma[v] + mb[v];
      r.add_term(std::move(mono), ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational &c) const {
  MultiPoly r(num_vars_);
  if (c.is_zero())
    return r;
  for (const auto &[mono, coeff] : terms_)
    r.terms_.emplace(mono, coeff * c);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational> &point) const {
  if (point.size() != num_vars_)
    throw std::invalid_argument("MultiPoly::eval: point length mismatch");
  // Powers of point[v] are cached up to the largest exponent seen.
  std::vector<std::vector<Rational>> powers(num_vars_);
  auto power = [&](std::size_t v, int e) -> const Rational & {
    auto &cache = powers[v];
    if (cache.empty())
      cache.push_back(Rational(1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * point[v]);
    return cache[e];
  };
  Rational total(0);
  for (const auto &[mono, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t v = 0; v < num_vars_; ++v)
      if (mono[v] != 0)
        term *= power(v, mono[v]);
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= num_vars_)
    throw std::invalid_argument("MultiPoly::derivative: index out of range");
  MultiPoly r(num_vars_);
  for (const auto &[mono, coeff] : terms_) {
    if (mono[var] == 0)
      continue;
    Monomial m = mono;
    const int e = m[var];
    m[var] = e - 1;
    r.add_term(std::move(m), coeff * Rational(e));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly> &images) const {
  if (images.size() != num_vars_)
    throw std::invalid_argument("MultiPoly::substitute: image count mismatch");
  std::size_t target_vars = 0;
  for (const auto &img : images)
    target_vars = std::max(target_vars, img.num_vars());
  for (const auto &img : images)
    if (img.num_vars() != target_vars)
      throw std::invalid_argument(
          "MultiPoly::substitute: images must share a variable space");
  if (num_vars_ == 0)
    target_vars = std::max<std::size_t>(target_vars, 0);

  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  auto power = [&](std::size_t v, int e) -> const MultiPoly & {
    auto &cache = powers[v];
    if (cache.empty())
      cache.push_back(MultiPoly::constant(target_vars, Rational(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MultiPoly r(target_vars);
  for (const auto &[mono, coeff] : terms_) {
    MultiPoly term = MultiPoly::constant(target_vars, coeff);
    for (std::size_t v = 0; v < num_vars_; ++v)
      if (mono[v] != 0)
        term = term * power(v, mono[v]);
    r += term;
  }
  return r;
}

MultiPoly MultiPoly::extended(std::size_t new_num_vars) const {
  if (new_num_vars < num_vars_)
    throw std::invalid_argument("MultiPoly::extended: cannot shrink");
  MultiPoly r(new_num_vars);
  for (const auto &[mono, coeff] : terms_) {
    Monomial m = mono;
    m.resize(new_num_vars, 0);
    r.add_term(std::move(m), coeff);
  }
  return r;
}

std::string MultiPoly::str(const VarNamer &namer) const {
  if (terms_.empty())
    return "0";
  auto name = [&](std::size_t v) {
    return namer ? namer(v) : "x" + std::to_string(v + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto &[mono, coeff] : terms_) {
    const Rational mag = coeff.abs();
    if (first) {
      if (coeff.sign() < 0)
        out << "-";
      first = false;
    } else {
      out << (coeff.sign() < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mag != Rational(1) || monomial_degree(mono) == 0)
      factors.push_back(mag.str());
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (mono[v] == 0)
        continue;
      const std::string n = name(v);
      if (mono[v] == 1) {
        factors.push_back(n);
      } else {
        const bool needs_parens = n.find_first_of("^_,") != std::string::npos;
        factors.push_back((needs_parens ? "(" + n + ")" : n) + "^" +
                          std::to_string(mono[v]));
      }
    }
    for (std::size_t k = 0; k < factors.size(); ++k)
      out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

MultiPoly sign_normalized(MultiPoly p) {
  if (p.leading_coefficient().sign() < 0)
    return -p;
  return p;
}

MultiPoly polarize(const MultiPoly &p, int slots) {
  if (!p.is_homogeneous() || p.degree() < 1)
    throw std::invalid_argument("polarize: polynomial must be homogeneous of degree >= 1");
  const int d = p.degree();
  if (slots != d)
    throw std::invalid_argument("polarize: slot count must equal the degree");
  const std::size_t v = p.num_vars();
  const std::size_t out_vars = static_cast<std::size_t>(d) * v;

  MultiPoly acc(out_vars);
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<MultiPoly> images;
    images.reserve(v);
    for (std::size_t j = 0; j < v; ++j) {
      MultiPoly img(out_vars);
      for (int h = 0; h < d; ++h)
        if (mask & (1u << h))
          img += MultiPoly::variable(out_vars, static_cast<std::size_t>(h) * v + j);
      images.push_back(std::move(img));
    }
    const int missing = d - __builtin_popcount(mask);
    const Rational sign((missing % 2) ? -1 : 1);
    acc += p.substitute(images) * sign;
  }
  Rational factorial(1);
  for (int k = 2; k <= d; ++k)
    factorial *= Rational(k);
  return acc * (Rational(1) / factorial);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix &o) const {
  if (cols_ != o.rows_ || num_vars_ != o.num_vars_)
    throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
  PolyMatrix r(rows_, o.cols_, num_vars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const MultiPoly &aik = at(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero())
          continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

MultiPoly PolyMatrix::trace() const {
  MultiPoly t(num_vars_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += at(i, i);
  return t;
}

void PolyMatrix::add_scalar_diagonal(const MultiPoly &p) {
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    at(i, i) += p;
}

RatMatrix PolyMatrix::eval(const std::vector<Rational> &point) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m.at(i, j) = at(i, j).eval(point);
  return m;
}

MultiPoly PolyVectorField::apply(const MultiPoly &f) const {
  if (f.num_vars() != num_vars_)
    throw std::invalid_argument("PolyVectorField::apply: variable count mismatch");
  MultiPoly r(num_vars_);
  for (std::size_t k = 0; k < num_vars_; ++k) {
    if (coeffs_[k].is_zero())
      continue;
    r += coeffs_[k] * f.derivative(k);
  }
  return r;
}

PolyVectorField &PolyVectorField::add_scaled(const PolyVectorField &o,
                                             const Rational &c) {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("PolyVectorField: variable count mismatch");
  for (std::size_t k = 0; k < num_vars_; ++k)
    coeffs_[k] += o.coeffs_[k] * c;
  return *this;
}

PolyVectorField lie_bracket(const PolyVectorField &x, const PolyVectorField &y) {
  if (x.num_vars() != y.num_vars())
    throw std::invalid_argument("lie_bracket: variable count mismatch");
  PolyVectorField r(x.num_vars());
  for (std::size_t k = 0; k < x.num_vars(); ++k)
    r.coeff(k) = x.apply(y.coeff(k)) - y.apply(x.coeff(k));
  return r;
}

namespace {

// sum_a x_a rho(B_a) as a polynomial matrix in the basis coordinates.
PolyMatrix coordinate_matrix(const LieAlgebraSpec &spec) {
  const auto &rep = spec.matrix_rep();
  const std::size_t d = rep.front().rows();
  const std::size_t m = static_cast<std::size_t>(spec.dim());
  PolyMatrix mat(d, d, m);
  for (std::size_t a = 0; a < m; ++a) {
    const MultiPoly xa = MultiPoly::variable(m, a);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Rational &entry = rep[a].at(i, j);
        if (!entry.is_zero())
          mat.at(i, j) += xa * entry;
      }
  }
  return mat;
}

MultiPoly pfaffian_recursive(const PolyMatrix &m,
                             const std::vector<std::size_t> &idx) {
  if (idx.empty())
    return MultiPoly::constant(m.num_vars(), Rational(1));
  MultiPoly acc(m.num_vars());
  const std::size_t i0 = idx[0];
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const MultiPoly &entry = m.at(i0, idx[t]);
    if (entry.is_zero())
      continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t s = 1; s < idx.size(); ++s)
      if (s != t)
        rest.push_back(idx[s]);
    const Rational sign((t % 2) ? 1 : -1);
    acc += (entry * pfaffian_recursive(m, rest)) * sign;
  }
  return acc;
}

} // namespace

std::vector<MultiPoly> char_poly_invariants(const LieAlgebraSpec &spec) {
  if (!spec.has_matrix_rep())
    throw std::invalid_argument("char_poly_invariants: algebra has no matrix representation");
  const PolyMatrix mat = coordinate_matrix(spec);
  const std::size_t d = mat.rows();

  // Leverrier-Faddeev: N_1 = M, c_k = -tr(N_k)/k, N_{k+1} = M (N_k + c_k I).
  std::vector<MultiPoly> coeffs;
  PolyMatrix n = mat;
  for (std::size_t k = 1; k <= d; ++k) {
    MultiPoly ck = n.trace() * Rational(-1, static_cast<long>(k));
    coeffs.push_back(ck);
    if (k == d)
      break;
    PolyMatrix shifted = n;
    shifted.add_scalar_diagonal(ck);
    n = mat * shifted;
  }

  std::vector<MultiPoly> out;
  for (auto &c : coeffs)
    if (!c.is_zero())
      out.push_back(sign_normalized(std::move(c)));
  return out;
}

MultiPoly pfaffian(const LieAlgebraSpec &spec) {
  if (!spec.has_matrix_rep())
    throw std::invalid_argument("pfaffian: algebra has no matrix representation");
  const auto &rep = spec.matrix_rep();
  const std::size_t d = rep.front().rows();
  if (d % 2 != 0)
    throw std::invalid_argument("pfaffian: representation size must be even");
  for (const auto &rho : rep)
    if (!(rho.transposed() * Rational(-1) == rho))
      throw std::invalid_argument("pfaffian: representation is not antisymmetric");
  const PolyMatrix mat = coordinate_matrix(spec);
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i)
    idx[i] = i;
  return pfaffian_recursive(mat, idx);
}

} // namespace ginv
