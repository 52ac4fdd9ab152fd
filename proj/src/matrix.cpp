#include "carries/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace carries {

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> values) {
  RationalMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply_left(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out(*this);
  for (Rational& x : out.entries_) x *= factor;
  return out;
}

RationalMatrix RationalMatrix::power(unsigned exponent) const {
  RationalMatrix result = identity(dim_);
  RationalMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool RationalMatrix::is_stochastic() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational sum = 0;
    for (const Rational& x : row(i)) {
      if (x < 0) return false;
      sum += x;
    }
    if (sum != 1) return false;
  }
  return true;
}

bool RationalMatrix::is_positive() const {
  for (const Rational& x : entries_) {
    if (x <= 0) return false;
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimensions differ");
  const std::size_t n = a.dim_;
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

namespace {

// Reduces the augmented system [a | rhs] in place; rhs columns are carried along.
void gauss_jordan(RationalMatrix& a, std::vector<std::vector<Rational>>& rhs) {
  const std::size_t n = a.dim();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      for (auto& r : rhs) std::swap(r[pivot], r[col]);
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv;
    for (auto& r : rhs) r[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(col, j);
      for (auto& r : rhs) r[i] -= f * r[col];
    }
  }
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  RationalMatrix a = m;
  std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) rhs[k][k] = 1;  // rhs[k] is column k of I
  gauss_jordan(a, rhs);
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) out(i, k) = rhs[k][i];
  }
  return out;
}

std::vector<Rational> stationary_solve(const RationalMatrix& P) {
  // Transposed system (P^T - I) pi = 0 with the last equation replaced by sum pi = 1.
  const std::size_t n = P.dim();
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = P(j, i) - (i == j ? 1 : 0);
  }
  for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = 1;
  std::vector<std::vector<Rational>> rhs(1, std::vector<Rational>(n));
  rhs[0][n - 1] = 1;
  gauss_jordan(a, rhs);
  return rhs[0];
}

}  // namespace carries
