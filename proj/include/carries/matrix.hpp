#pragma once

#include "carries/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace carries {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static RationalMatrix identity(std::size_t dim);
  static RationalMatrix diagonal(std::span<const Rational> values);

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }
  std::vector<Rational> column(std::size_t j) const;

  /// M v
  std::vector<Rational> apply(std::span<const Rational> v) const;
  /// v M
  std::vector<Rational> apply_left(std::span<const Rational> v) const;

  RationalMatrix scaled(const Rational& factor) const;
  RationalMatrix power(unsigned exponent) const;

  /// Nonnegative entries and every row summing to exactly 1.
  bool is_stochastic() const;
  /// Every entry strictly positive.
  bool is_positive() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Exact Gauss-Jordan inverse. Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// The unique row vector pi with pi P = pi and sum pi = 1, by exact
/// elimination. Throws std::domain_error if it is not unique.
std::vector<Rational> stationary_solve(const RationalMatrix& P);

}  // namespace carries
