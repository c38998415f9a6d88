#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "polydom/errors.hpp"

namespace polydom {

using Integer = mpz_class;

/// Ordered list of distinct variable identifiers. The leftmost name is the
/// most significant one under the lexicographic monomial ordering.
class VariableBase {
 public:
  explicit VariableBase(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableBase&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Ascending table of the first primes, one per variable position.
/// Seeded with the first eleven primes and extended on demand.
class PrimeTable {
 public:
  PrimeTable();

  /// 0-based access; grows the table as needed.
  unsigned long prime(std::size_t i);

  std::size_t size() const { return primes_.size(); }

 private:
  std::vector<unsigned long> primes_;
};

/// Exponent vector over a fixed variable base, or the sentinel marker that
/// compares strictly above every ordinary vector of the same arity.
class ExpVec {
 public:
  explicit ExpVec(std::vector<unsigned> exponents);
  static ExpVec zero(std::size_t arity);
  static ExpVec sentinel(std::size_t arity);

  bool is_sentinel() const { return sentinel_; }
  std::size_t arity() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const;

  /// True iff not the sentinel and every exponent is zero.
  bool is_zero() const;

  /// Structural equality (sentinel flag and exponents).
  bool operator==(const ExpVec&) const = default;

 private:
  ExpVec(std::vector<unsigned> exps, bool sentinel)
      : exps_(std::move(exps)), sentinel_(sentinel) {}

  std::vector<unsigned> exps_;
  bool sentinel_ = false;
};

/// Lexicographic comparison, leftmost coordinate most significant; returns
/// -1, 0 or +1. The sentinel compares above every canonical vector.
int compare(const ExpVec& u, const ExpVec& v);

/// Componentwise sum (the monoid operation).
ExpVec operator+(const ExpVec& u, const ExpVec& v);

/// Componentwise difference; any negative coordinate raises NonDivisibleError.
ExpVec operator-(const ExpVec& u, const ExpVec& v);

/// Componentwise minimum / maximum.
ExpVec gcd(const ExpVec& u, const ExpVec& v);
ExpVec lcm(const ExpVec& u, const ExpVec& v);

/// True iff the monomial x^u divides x^v. Mismatched lengths follow the
/// prefix rule: u may not be longer than v.
bool divides(const ExpVec& u, const ExpVec& v);

/// True iff every coordinate is strictly positive.
bool all_positive(const ExpVec& u);

/// Prime-product encoding: the integer prime(0)^u[0] * ... * prime(n-1)^u[n-1].
Integer encode(const ExpVec& u, PrimeTable& primes);

/// Inverse of encode. Zero exponents keep their positions. Raises DecodeError
/// when the value has a prime factor outside the first `arity` primes.
ExpVec decode(const Integer& value, std::size_t arity, PrimeTable& primes);

/// gcd/lcm computed through the prime-product representation; must agree
/// with the componentwise variants.
ExpVec gcd_encoded(const ExpVec& u, const ExpVec& v, PrimeTable& primes);
ExpVec lcm_encoded(const ExpVec& u, const ExpVec& v, PrimeTable& primes);

/// Renders as a product of powers: "x^2*z"; the zero vector renders as "1".
std::string to_string(const ExpVec& u, const VariableBase& base);

}  // namespace polydom
