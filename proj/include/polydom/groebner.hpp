#pragma once

#include "polydom/textio.hpp"

namespace polydom {

struct GroebnerStats {
  std::size_t spoly_count = 0;
  std::size_t reduction_steps = 0;
};

struct ReductionOptions {
  /// Reduction steps allowed per top-level call before BudgetExceededError.
  std::size_t step_budget = 100000;
  /// When set, basis completion traces pair processing here.
  std::ostream* trace = nullptr;
};

/// True iff no monomial of g is divisible by the leading monomial of any
/// element of F. The null polynomial is normal.
bool is_normal(const PolynomialRing& ring, const PolynomialSet& F, const Polynomial& g);

/// Constructive witness of a pseudo-reduction: with r the returned normal
/// form, multiplier * p - r = sum(quotients[i] * F[i]).
struct ReductionCertificate {
  Coef multiplier;
  PolynomialSet quotients;  // aligned with the reducer set
};

/// Fraction-free pseudo-reduction of p modulo F. Reducers are scanned in F's
/// order, monomials from the leading end downward; each step scales the
/// running remainder by the reducer cofactor alpha/gcd(alpha, beta). Over a
/// field this is the classical normal form up to a nonzero scalar; over the
/// integers the result is a pseudo-remainder whose certificate places a
/// nonzero integer multiple of p inside ideal(F) + result.
Polynomial normal_form(const PolynomialRing& ring, const PolynomialSet& F, const Polynomial& p,
                       GroebnerStats* stats = nullptr, const ReductionOptions& options = {},
                       ReductionCertificate* certificate = nullptr);

/// S-polynomial in the factored form (c/c1)*x^(M-M1)*P1 - (c/c2)*x^(M-M2)*P2
/// with M the monomial lcm and c the coefficient lcm of the leading terms.
/// The leading terms cancel: the result is null or its leading monomial lies
/// lex-strictly below M.
Polynomial s_polynomial(const PolynomialRing& ring, const Polynomial& p1, const Polynomial& p2);

/// Buchberger completion with a FIFO pair queue and no pair-selection
/// criteria. Null inputs are dropped; duplicates are kept (their pairs
/// reduce to zero harmlessly). Requires coefficients in the integers or in a
/// prime-modulus residue field.
PolynomialSet groebner_basis(const PolynomialRing& ring, const PolynomialSet& F,
                             GroebnerStats* stats = nullptr,
                             const ReductionOptions& options = {});

/// The reduced-basis post-pass applied to an already computed basis: drop
/// elements whose leading monomial another element's leading monomial
/// divides, interreduce the survivors, normalize (monic over a field;
/// content-free with positive leading coefficient over the integers), and
/// sort by ascending leading monomial.
PolynomialSet reduce_basis(const PolynomialRing& ring, const PolynomialSet& basis,
                           GroebnerStats* stats = nullptr, const ReductionOptions& options = {});

/// groebner_basis followed by reduce_basis. Over a field the result is
/// unique for the ideal regardless of input order.
PolynomialSet reduced_groebner_basis(const PolynomialRing& ring, const PolynomialSet& F,
                                     GroebnerStats* stats = nullptr,
                                     const ReductionOptions& options = {});

}  // namespace polydom
