#pragma once

#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polydom/domain.hpp"
#include "polydom/expvec.hpp"

namespace polydom {

/// The two interchangeable internal layouts: parallel sorted sequences with a
/// trailing sentinel, and a keyed table indexed by exponent vector with a
/// separate sorted key sequence.
enum class Representation { SortedPairs, KeyedTable };

std::string to_string(Representation rep);
Representation representation_from_name(std::string_view name);

namespace detail {

struct RingState {
  std::shared_ptr<const CoefficientDomain> domain;
  VariableBase base;
  Representation rep;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const;
};

}  // namespace detail

class PolynomialRing;

/// Canonical sparse polynomial: strictly ascending monomials, no zero
/// coefficients. Immutable value; arithmetic goes through PolynomialRing.
class Polynomial {
 public:
  bool is_null() const;
  std::size_t term_count() const;
  Representation representation() const { return ring_->rep; }

  /// 1-based, ascending lex order. Indices past term_count yield the sentinel
  /// (the monomial sequence is sentinel-terminated).
  ExpVec monomial_at(std::size_t i) const;
  /// 1-based; indices past term_count yield the domain zero.
  Coef coef_at(std::size_t i) const;
  /// 1-based position of an exact monomial match; NotFoundError when absent.
  std::size_t index_of(const ExpVec& v) const;

  ExpVec leading_monomial() const;  // EmptyPolynomialError on the null polynomial
  Coef leading_coef() const;

  /// The owning ring, reconstructed as a handle.
  PolynomialRing ring() const;

  /// SortedPairs view of the monomial sequence including the trailing
  /// sentinel; KeyedTable view of the sorted key sequence (no sentinel).
  const std::vector<ExpVec>& monomial_sequence() const;

 private:
  friend class PolynomialRing;
  friend bool is_canonical(const Polynomial&);

  explicit Polynomial(std::shared_ptr<const detail::RingState> ring);

  // Merges (v, c) into this polynomial; drops the term when the combined
  // coefficient is the domain zero.
  void add_term(const ExpVec& v, const Coef& c);
  // Appends a nonzero term known to be lex-greater than every stored one.
  void append_term(ExpVec v, Coef c);

  std::shared_ptr<const detail::RingState> ring_;
  // SortedPairs: monos_ ascending with sentinel last, coefs_ parallel.
  std::vector<ExpVec> monos_;
  std::vector<Coef> coefs_;
  // KeyedTable: keys_ ascending, table_ maps key -> coefficient.
  std::vector<ExpVec> keys_;
  std::unordered_map<ExpVec, Coef, detail::ExpVecHash> table_;
};

/// A polynomial category instance: coefficient domain x variable base x
/// representation. Cheap to copy; equality of rings is structural.
class PolynomialRing {
 public:
  PolynomialRing(std::shared_ptr<const CoefficientDomain> domain, VariableBase base,
                 Representation rep = Representation::SortedPairs);

  const CoefficientDomain& domain() const { return *state_->domain; }
  std::shared_ptr<const CoefficientDomain> domain_ptr() const { return state_->domain; }
  const VariableBase& base() const { return state_->base; }
  Representation representation() const { return state_->rep; }
  std::size_t arity() const { return state_->base.arity(); }

  /// Same coefficient domain, base and representation.
  bool compatible(const PolynomialRing& other) const;

  Polynomial zero() const;
  Polynomial monomial(const ExpVec& v, const Coef& c) const;
  Polynomial copy(const Polynomial& p) const;

  /// Bulk constructor from parallel sequences already in canonical form:
  /// strictly ascending monomials, nonzero coefficients.
  Polynomial from_ascending_terms(std::vector<ExpVec> monomials, std::vector<Coef> coefs) const;

  Polynomial add_monomial(const Polynomial& p, const ExpVec& v, const Coef& c) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  /// Left-multiplies every coefficient by c; c = zero yields the null polynomial.
  Polynomial scalar_mul(const Coef& c, const Polynomial& p) const;
  /// Term-wise quotient by the monomial (v, c); every monomial must be
  /// divisible by v and every coefficient exactly divisible by c.
  Polynomial divide_by_monomial(const Polynomial& p, const ExpVec& v, const Coef& c) const;
  /// True iff v divides at least one monomial of p.
  bool monomial_divides(const ExpVec& v, const Polynomial& p) const;

  /// Semantically identical polynomial in the target representation.
  Polynomial convert(const Polynomial& p, Representation target) const;

  /// Term-for-term equality (representation-insensitive).
  bool equal(const Polynomial& a, const Polynomial& b) const;

 private:
  friend class Polynomial;

  explicit PolynomialRing(std::shared_ptr<const detail::RingState> state)
      : state_(std::move(state)) {}

  const Polynomial& check_attached(const Polynomial& p) const;
  void check_arity(const ExpVec& v) const;

  std::shared_ptr<const detail::RingState> state_;
};

/// Validity auditor: ascending strict monomial order, sentinel termination
/// (SortedPairs), key/table agreement (KeyedTable), no zero coefficients.
bool is_canonical(const Polynomial& p);

}  // namespace polydom
