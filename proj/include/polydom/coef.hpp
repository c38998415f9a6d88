#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "polydom/errors.hpp"

namespace polydom {

using Rational = mpq_class;

/// Square matrix with exact rational entries, row-major storage.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t order);  // zero matrix
  static RatMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  Rational& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  RatMatrix operator+(const RatMatrix&) const;
  RatMatrix operator-(const RatMatrix&) const;
  RatMatrix operator-() const;
  RatMatrix operator*(const RatMatrix&) const;  // matrix product
  RatMatrix scaled(const Rational&) const;

  RatMatrix transpose() const;
  Rational determinant() const;
  RatMatrix inverse() const;  // SingularMatrixError when not invertible

  bool is_zero() const;
  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

/// Coefficient value shared by all domains: an exact integer (used by the
/// integer and residue domains) or an exact rational matrix.
class Coef {
 public:
  Coef() : value_(mpz_class(0)) {}
  Coef(mpz_class z) : value_(std::move(z)) {}
  Coef(long v) : value_(mpz_class(v)) {}
  Coef(int v) : value_(mpz_class(v)) {}
  Coef(RatMatrix m) : value_(std::move(m)) {}

  bool holds_integer() const { return std::holds_alternative<mpz_class>(value_); }
  bool holds_matrix() const { return std::holds_alternative<RatMatrix>(value_); }

  const mpz_class& integer() const;
  const RatMatrix& matrix() const;

 private:
  std::variant<mpz_class, RatMatrix> value_;
};

}  // namespace polydom
