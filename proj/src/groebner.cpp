#include "polydom/groebner.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

namespace polydom {

namespace {

void require_groebner_domain(const PolynomialRing& ring) {
  const CoefficientDomain& dom = ring.domain();
  if (dom.kind() == DomainKind::Integers) {
    return;
  }
  if (dom.kind() == DomainKind::Modular && dom.is_field()) {
    return;
  }
  if (dom.kind() == DomainKind::Matrix) {
    throw UnsupportedDomainError("Gröbner unsupported over matrix coefficients");
  }
  throw UnsupportedDomainError("Gröbner requires a prime modulus, got " + dom.descriptor());
}

void require_non_null(const PolynomialSet& F) {
  for (const auto& f : F) {
    if (f.is_null()) {
      throw EmptyPolynomialError("reducer set contains a null polynomial");
    }
  }
}

}  // namespace

bool is_normal(const PolynomialRing& ring, const PolynomialSet& F, const Polynomial& g) {
  if (g.is_null()) {
    return true;
  }
  for (const auto& f : F) {
    if (f.is_null()) {
      throw EmptyPolynomialError("reducer set contains a null polynomial");
    }
    if (ring.monomial_divides(f.leading_monomial(), g)) {
      return false;
    }
  }
  return true;
}

Polynomial normal_form(const PolynomialRing& ring, const PolynomialSet& F, const Polynomial& p,
                       GroebnerStats* stats, const ReductionOptions& options,
                       ReductionCertificate* certificate) {
  require_non_null(F);
  const CoefficientDomain& dom = ring.domain();
  GroebnerStats local;
  GroebnerStats& counters = stats ? *stats : local;

  if (!ring.compatible(p.ring())) {
    throw RingError("polynomial belongs to an incompatible ring");
  }
  for (const auto& f : F) {
    if (!ring.compatible(f.ring())) {
      throw RingError("reducer belongs to an incompatible ring");
    }
  }

  // Working copy in ascending parallel-sequence form; the public value
  // operations are too allocation-heavy for the inner loop.
  std::vector<ExpVec> monos;
  std::vector<Coef> coefs;
  monos.reserve(p.term_count());
  coefs.reserve(p.term_count());
  for (std::size_t i = 1; i <= p.term_count(); ++i) {
    monos.push_back(p.monomial_at(i));
    coefs.push_back(p.coef_at(i));
  }

  Coef accumulated = dom.one();
  PolynomialSet quotients;
  if (certificate != nullptr) {
    quotients.assign(F.size(), ring.zero());
  }

  const auto less = [](const ExpVec& a, const ExpVec& b) { return compare(a, b) < 0; };

  // Reducer tails (everything below the leading term), fixed for the call.
  std::vector<std::vector<ExpVec>> tail_monos(F.size());
  std::vector<std::vector<Coef>> tail_coefs(F.size());
  for (std::size_t k = 0; k < F.size(); ++k) {
    for (std::size_t t = 1; t < F[k].term_count(); ++t) {
      tail_monos[k].push_back(F[k].monomial_at(t));
      tail_coefs[k].push_back(F[k].coef_at(t));
    }
  }

  // Sweep reducers in order until a full sweep fires no reduction step; a
  // silent sweep proves normality, since a monomial lex-below a head can
  // never be divisible by it.
  bool fired = true;
  while (fired) {
    fired = false;
    for (std::size_t reducer = 0; reducer < F.size(); ++reducer) {
      const ExpVec head = F[reducer].leading_monomial();
      const Coef head_coef = F[reducer].leading_coef();

      std::size_t j = monos.size();
      while (!monos.empty() && j >= 1) {
        // Monomials lex-below the reducer head cannot be divisible by it.
        if (compare(monos[j - 1], head) < 0) {
          break;
        }
        if (divides(head, monos[j - 1])) {
          if (++counters.reduction_steps > options.step_budget) {
            throw BudgetExceededError("reduction step budget of " +
                                      std::to_string(options.step_budget) + " exceeded");
          }
          fired = true;
          const ExpVec target = monos[j - 1];
          const Coef target_coef = coefs[j - 1];
          const Coef g = dom.gcd(head_coef, target_coef);
          const Coef alpha = dom.exact_div(head_coef, g);
          const Coef beta = dom.exact_div(target_coef, g);
          // Terms above the target were already checked against this head
          // and are untouched by the step (insertions land strictly below
          // the target), so the rescan can resume at the target's slot.
          const std::size_t verified_above = monos.size() - j;

          // result <- alpha*(result - target term) - beta*x^(target-head)*tail
          monos.erase(monos.begin() + static_cast<std::ptrdiff_t>(j - 1));
          coefs.erase(coefs.begin() + static_cast<std::ptrdiff_t>(j - 1));
          // Over a field the gcd degenerates to the head coefficient and
          // alpha is one; skip the scaling pass.
          const bool scaling = !dom.is_one(alpha);
          if (scaling) {
            for (auto& c : coefs) {
              c = dom.mul(alpha, c);
            }
            accumulated = dom.mul(alpha, accumulated);
          }
          const ExpVec quotient_mono = target - head;
          for (std::size_t t = 0; t < tail_monos[reducer].size(); ++t) {
            ExpVec shifted = quotient_mono + tail_monos[reducer][t];
            Coef scaled = dom.mul(beta, tail_coefs[reducer][t]);
            auto pos = std::lower_bound(monos.begin(), monos.end(), shifted, less);
            const auto idx = static_cast<std::size_t>(pos - monos.begin());
            if (pos != monos.end() && *pos == shifted) {
              Coef combined = dom.sub(coefs[idx], scaled);
              if (dom.is_zero(combined)) {
                monos.erase(pos);
                coefs.erase(coefs.begin() + static_cast<std::ptrdiff_t>(idx));
              } else {
                coefs[idx] = std::move(combined);
              }
            } else {
              monos.insert(pos, std::move(shifted));
              coefs.insert(coefs.begin() + static_cast<std::ptrdiff_t>(idx), dom.neg(scaled));
            }
          }
          if (certificate != nullptr) {
            // Earlier contributions pick up the new cofactor as well:
            // accumulated*p - result stays equal to sum(quotients[i]*F[i]).
            if (scaling) {
              for (auto& q : quotients) {
                q = ring.scalar_mul(alpha, q);
              }
            }
            quotients[reducer] = ring.add_monomial(quotients[reducer], quotient_mono, beta);
          }
          j = monos.size() - verified_above + 1;
        }
        --j;
      }
    }
  }
  if (certificate != nullptr) {
    certificate->multiplier = accumulated;
    certificate->quotients = std::move(quotients);
  }
  return ring.from_ascending_terms(std::move(monos), std::move(coefs));
}

Polynomial s_polynomial(const PolynomialRing& ring, const Polynomial& p1, const Polynomial& p2) {
  if (p1.is_null() || p2.is_null()) {
    throw EmptyPolynomialError("s_polynomial requires non-null polynomials");
  }
  const CoefficientDomain& dom = ring.domain();
  const ExpVec m1 = p1.leading_monomial();
  const ExpVec m2 = p2.leading_monomial();
  const Coef c1 = p1.leading_coef();
  const Coef c2 = p2.leading_coef();
  const ExpVec m = lcm(m1, m2);
  const Coef c = dom.lcm(c1, c2);
  Polynomial left = ring.mul(ring.monomial(m - m1, dom.exact_div(c, c1)), p1);
  Polynomial right = ring.mul(ring.monomial(m - m2, dom.exact_div(c, c2)), p2);
  return ring.sub(left, right);
}

PolynomialSet groebner_basis(const PolynomialRing& ring, const PolynomialSet& F,
                             GroebnerStats* stats, const ReductionOptions& options) {
  require_groebner_domain(ring);

  PolynomialSet basis;
  for (const auto& f : F) {
    if (!f.is_null()) {
      basis.push_back(f);
    }
  }
  if (basis.empty()) {
    throw Error("groebner_basis requires a non-empty polynomial set");
  }

  GroebnerStats local;
  GroebnerStats& counters = stats ? *stats : local;

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      pairs.emplace_back(i, j);
    }
  }

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    Polynomial h = s_polynomial(ring, basis[i], basis[j]);
    ++counters.spoly_count;
    Polynomial hn = normal_form(ring, basis, h, &counters, options);
    if (options.trace != nullptr) {
      *options.trace << "pair (" << i + 1 << "," << j + 1
                     << "): spol = " << render_polynomial(h)
                     << ", nf = " << render_polynomial(hn) << "\n";
    }
    if (!hn.is_null()) {
      for (std::size_t k = 0; k < basis.size(); ++k) {
        pairs.emplace_back(k, basis.size());
      }
      basis.push_back(std::move(hn));
    }
  }
  return basis;
}

namespace {

/// Content removal and sign normalization over the integers; monic scaling
/// over a field.
Polynomial normalize_leading(const PolynomialRing& ring, const Polynomial& p) {
  const CoefficientDomain& dom = ring.domain();
  if (dom.is_field()) {
    return ring.scalar_mul(dom.quotient(dom.one(), p.leading_coef()), p);
  }
  Coef content = dom.zero();
  for (std::size_t i = 1; i <= p.term_count(); ++i) {
    content = dom.gcd(content, p.coef_at(i));
  }
  if (dom.negative(p.leading_coef())) {
    content = dom.neg(content);
  }
  if (dom.is_one(content)) {
    return p;
  }
  Polynomial out = ring.zero();
  for (std::size_t i = 1; i <= p.term_count(); ++i) {
    out = ring.add_monomial(out, p.monomial_at(i), dom.exact_div(p.coef_at(i), content));
  }
  return out;
}

}  // namespace

PolynomialSet reduce_basis(const PolynomialRing& ring, const PolynomialSet& input,
                           GroebnerStats* stats, const ReductionOptions& options) {
  // Minimalize: ascending by leading monomial, keep an element only when no
  // kept element's leading monomial divides its own. Equal leading monomials
  // keep their first representative.
  PolynomialSet basis = input;
  std::stable_sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  PolynomialSet minimal;
  for (const auto& g : basis) {
    const ExpVec lead = g.leading_monomial();
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (divides(kept.leading_monomial(), lead)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      minimal.push_back(g);
    }
  }

  // Interreduce each survivor against the others. Leading monomials are
  // pairwise non-divisible, so the leading term always survives.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    PolynomialSet others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) {
        others.push_back(minimal[k]);
      }
    }
    if (!others.empty()) {
      minimal[i] = normal_form(ring, others, minimal[i], stats, options);
    }
    minimal[i] = normalize_leading(ring, minimal[i]);
  }

  std::stable_sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return minimal;
}

PolynomialSet reduced_groebner_basis(const PolynomialRing& ring, const PolynomialSet& F,
                                     GroebnerStats* stats, const ReductionOptions& options) {
  return reduce_basis(ring, groebner_basis(ring, F, stats, options), stats, options);
}

}  // namespace polydom
