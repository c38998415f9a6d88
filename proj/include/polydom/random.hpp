#pragma once

#include <random>

#include "polydom/poly.hpp"

namespace polydom {

/// Uniform nonzero domain element (rerolls zero draws).
Coef random_nonzero_coef(const CoefficientDomain& domain, std::mt19937_64& rng);

/// Random polynomial with exactly `terms` monomials after canonicalization:
/// exponents uniform in [0, max_exp], coefficients uniform nonzero, colliding
/// monomials redrawn.
Polynomial random_polynomial(const PolynomialRing& ring, std::size_t terms, unsigned max_exp,
                             std::mt19937_64& rng);

}  // namespace polydom
