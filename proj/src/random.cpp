#include "polydom/random.hpp"

#include <cmath>

namespace polydom {

Coef random_nonzero_coef(const CoefficientDomain& domain, std::mt19937_64& rng) {
  for (;;) {
    Coef c = domain.random_element(rng);
    if (!domain.is_zero(c)) {
      return c;
    }
  }
}

Polynomial random_polynomial(const PolynomialRing& ring, std::size_t terms, unsigned max_exp,
                             std::mt19937_64& rng) {
  const std::size_t arity = ring.arity();
  const double distinct = std::pow(static_cast<double>(max_exp) + 1.0,
                                   static_cast<double>(arity));
  if (static_cast<double>(terms) > distinct) {
    throw Error("cannot draw " + std::to_string(terms) + " distinct monomials");
  }
  Polynomial out = ring.zero();
  while (out.term_count() < terms) {
    std::vector<unsigned> exps(arity);
    for (auto& e : exps) {
      e = static_cast<unsigned>(rng() % (max_exp + 1));
    }
    ExpVec mono(std::move(exps));
    bool taken = false;
    for (std::size_t i = 1; i <= out.term_count(); ++i) {
      if (out.monomial_at(i) == mono) {
        taken = true;
        break;
      }
    }
    if (taken) {
      continue;
    }
    out = ring.add_monomial(out, mono, random_nonzero_coef(ring.domain(), rng));
  }
  return out;
}

}  // namespace polydom
