#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>

#include "polydom/coef.hpp"
#include "polydom/errors.hpp"

namespace polydom {

enum class DomainKind { Integers, Modular, Matrix };

/// Behavioral contract shared by all coefficient domains. Division-flavored
/// operations are partial: domains that cannot express one throw
/// UnsupportedOpError.
class CoefficientDomain {
 public:
  virtual ~CoefficientDomain() = default;

  virtual DomainKind kind() const = 0;
  /// CLI / file-header spelling: "z", "zmod:<n>", "mat:<n>".
  virtual std::string descriptor() const = 0;
  virtual bool is_field() const = 0;

  virtual Coef zero() const = 0;
  virtual Coef one() const = 0;
  /// Canonical image of an integer in the domain (residue class, scalar matrix).
  virtual Coef from_integer(const mpz_class& v) const = 0;
  Coef from_int(long v) const { return from_integer(mpz_class(v)); }

  virtual Coef add(const Coef&, const Coef&) const = 0;
  virtual Coef sub(const Coef&, const Coef&) const = 0;
  virtual Coef neg(const Coef&) const = 0;
  virtual Coef mul(const Coef&, const Coef&) const = 0;
  virtual bool eq(const Coef&, const Coef&) const = 0;

  /// Defined only when b*q = a has a solution q; then mul(b, result) = a.
  virtual Coef exact_div(const Coef& a, const Coef& b) const;
  virtual Coef quotient(const Coef& a, const Coef& b) const;
  virtual Coef mod(const Coef& a, const Coef& b) const;
  virtual Coef gcd(const Coef& a, const Coef& b) const;
  virtual Coef lcm(const Coef& a, const Coef& b) const;

  /// True for integer values below zero; residues and matrices are never
  /// negative. Drives rendering and leading-coefficient normalization.
  virtual bool negative(const Coef&) const { return false; }

  virtual std::string render(const Coef&) const = 0;
  virtual Coef random_element(std::mt19937_64&) const = 0;

  virtual bool is_zero(const Coef& c) const { return eq(c, zero()); }
  virtual bool is_one(const Coef& c) const { return eq(c, one()); }
};

/// Arbitrary-precision integers with floor quotient/mod, gcd and lcm.
class IntegerDomain final : public CoefficientDomain {
 public:
  DomainKind kind() const override { return DomainKind::Integers; }
  std::string descriptor() const override { return "z"; }
  bool is_field() const override { return false; }

  Coef zero() const override { return Coef(0L); }
  Coef one() const override { return Coef(1L); }
  Coef from_integer(const mpz_class& v) const override { return Coef(v); }

  Coef add(const Coef&, const Coef&) const override;
  Coef sub(const Coef&, const Coef&) const override;
  Coef neg(const Coef&) const override;
  Coef mul(const Coef&, const Coef&) const override;
  bool eq(const Coef&, const Coef&) const override;

  Coef exact_div(const Coef&, const Coef&) const override;
  Coef quotient(const Coef&, const Coef&) const override;
  Coef mod(const Coef&, const Coef&) const override;
  Coef gcd(const Coef&, const Coef&) const override;
  Coef lcm(const Coef&, const Coef&) const override;

  bool negative(const Coef& c) const override { return c.integer() < 0; }
  std::string render(const Coef&) const override;
  Coef random_element(std::mt19937_64&) const override;

  bool is_zero(const Coef& c) const override {
    return mpz_sgn(c.integer().get_mpz_t()) == 0;
  }
  bool is_one(const Coef& c) const override {
    return mpz_cmp_ui(c.integer().get_mpz_t(), 1) == 0;
  }
};

/// Residues mod n. Quotient solves b*x = a by exhaustive search over the
/// residues; gcd/lcm follow the remainder-loop definitions, which degenerate
/// to unit multiples over a prime modulus.
class ModularDomain final : public CoefficientDomain {
 public:
  explicit ModularDomain(unsigned long modulus);

  unsigned long modulus() const { return modulus_; }

  DomainKind kind() const override { return DomainKind::Modular; }
  std::string descriptor() const override { return "zmod:" + std::to_string(modulus_); }
  bool is_field() const override { return prime_; }

  Coef zero() const override { return Coef(0L); }
  Coef one() const override { return Coef(1L); }
  Coef from_integer(const mpz_class& v) const override;

  Coef add(const Coef&, const Coef&) const override;
  Coef sub(const Coef&, const Coef&) const override;
  Coef neg(const Coef&) const override;
  Coef mul(const Coef&, const Coef&) const override;
  bool eq(const Coef&, const Coef&) const override;

  Coef exact_div(const Coef&, const Coef&) const override;
  Coef quotient(const Coef&, const Coef&) const override;
  Coef mod(const Coef&, const Coef&) const override;
  Coef gcd(const Coef&, const Coef&) const override;
  Coef lcm(const Coef&, const Coef&) const override;

  std::string render(const Coef&) const override;
  Coef random_element(std::mt19937_64&) const override;

  bool is_zero(const Coef& c) const override {
    return mpz_sgn(c.integer().get_mpz_t()) == 0;
  }
  bool is_one(const Coef& c) const override {
    return mpz_cmp_ui(c.integer().get_mpz_t(), 1) == 0;
  }

 private:
  // Residues fit a machine word whenever the modulus does; arithmetic takes
  // the native path then and falls back to mpz otherwise.
  bool small() const { return modulus_ <= 0xffffffffUL; }
  unsigned long residue(const Coef& c) const { return mpz_get_ui(c.integer().get_mpz_t()); }

  unsigned long modulus_;
  bool prime_;
};

/// n-by-n matrices with exact rational entries. Multiplication is not
/// commutative; gcd/lcm/quotient/mod are unsupported. Inverse, transpose and
/// determinant are provided as auxiliary operations.
class MatrixDomain final : public CoefficientDomain {
 public:
  explicit MatrixDomain(std::size_t order);

  std::size_t order() const { return order_; }

  DomainKind kind() const override { return DomainKind::Matrix; }
  std::string descriptor() const override { return "mat:" + std::to_string(order_); }
  bool is_field() const override { return false; }

  Coef zero() const override { return Coef(RatMatrix(order_)); }
  Coef one() const override { return Coef(RatMatrix::identity(order_)); }
  Coef from_integer(const mpz_class& v) const override;

  Coef add(const Coef&, const Coef&) const override;
  Coef sub(const Coef&, const Coef&) const override;
  Coef neg(const Coef&) const override;
  Coef mul(const Coef&, const Coef&) const override;
  bool eq(const Coef&, const Coef&) const override;

  /// Left division: inverse(b) * a, defined when b is invertible.
  Coef exact_div(const Coef&, const Coef&) const override;

  Coef inverse(const Coef&) const;
  Coef transpose(const Coef&) const;
  Rational determinant(const Coef&) const;

  std::string render(const Coef&) const override;
  Coef random_element(std::mt19937_64&) const override;

 private:
  const RatMatrix& entries(const Coef&) const;
  std::size_t order_;
};

std::shared_ptr<const CoefficientDomain> make_integer_domain();
std::shared_ptr<const CoefficientDomain> make_modular_domain(unsigned long n);
std::shared_ptr<const CoefficientDomain> make_matrix_domain(std::size_t order);

/// Parses a descriptor ("z", "zmod:7", "mat:2") into a domain instance.
std::shared_ptr<const CoefficientDomain> domain_from_descriptor(std::string_view descriptor);

/// Residue arithmetic helpers on values in [0, n). quotient solves
/// b*x = a (mod n) by exhaustive search; gcd runs the Euclid loop over the
/// modular mod operation; lcm is quotient(a*b, gcd(a, b)).
mpz_class modular_quotient(const mpz_class& a, const mpz_class& b, const mpz_class& n);
mpz_class modular_mod(const mpz_class& a, const mpz_class& b, const mpz_class& n);
mpz_class modular_gcd(const mpz_class& a, const mpz_class& b, const mpz_class& n);
mpz_class modular_lcm(const mpz_class& a, const mpz_class& b, const mpz_class& n);

}  // namespace polydom
