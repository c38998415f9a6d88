#pragma once

// Independent reference implementation used as a test oracle. Deliberately
// unrelated to the library internals: map-based descending-order polynomials,
// textbook multivariate division over a field, GMP modular inverse. Nothing
// here touches the sentinel/merge machinery under test.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "polydom/poly.hpp"

namespace oracle {

using Mono = std::vector<unsigned>;

struct LexGreater {
  bool operator()(const Mono& a, const Mono& b) const;
};

struct QField {
  using Value = mpq_class;
  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  bool is_zero(const Value& v) const { return v == 0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
};

struct FpField {
  explicit FpField(unsigned long p) : modulus(p) {}
  unsigned long modulus;

  using Value = mpz_class;
  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  bool is_zero(const Value& v) const { return v == 0; }
  Value reduce(const Value& v) const;
  Value add(const Value& a, const Value& b) const { return reduce(a + b); }
  Value neg(const Value& a) const { return reduce(-a); }
  Value mul(const Value& a, const Value& b) const { return reduce(a * b); }
  Value div(const Value& a, const Value& b) const;  // via mpz_invert
};

template <typename Field>
struct Poly {
  std::map<Mono, typename Field::Value, LexGreater> terms;  // first = leading

  bool is_zero() const { return terms.empty(); }
  const Mono& leading_mono() const { return terms.begin()->first; }
  const typename Field::Value& leading_coef() const { return terms.begin()->second; }
};

bool mono_divides(const Mono& a, const Mono& b);
Mono mono_sub(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);

template <typename Field>
void add_term(const Field& field, Poly<Field>& p, const Mono& m,
              const typename Field::Value& c) {
  auto it = p.terms.find(m);
  if (it == p.terms.end()) {
    if (!field.is_zero(c)) {
      p.terms.emplace(m, c);
    }
    return;
  }
  auto combined = field.add(it->second, c);
  if (field.is_zero(combined)) {
    p.terms.erase(it);
  } else {
    it->second = combined;
  }
}

template <typename Field>
Poly<Field> add(const Field& field, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> out = a;
  for (const auto& [m, c] : b.terms) {
    add_term(field, out, m, c);
  }
  return out;
}

template <typename Field>
Poly<Field> sub(const Field& field, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> out = a;
  for (const auto& [m, c] : b.terms) {
    add_term(field, out, m, field.neg(c));
  }
  return out;
}

template <typename Field>
Poly<Field> mul_term(const Field& field, const Poly<Field>& p, const Mono& m,
                     const typename Field::Value& c) {
  Poly<Field> out;
  for (const auto& [pm, pc] : p.terms) {
    Mono shifted(pm.size());
    for (std::size_t i = 0; i < pm.size(); ++i) {
      shifted[i] = pm[i] + m[i];
    }
    add_term(field, out, shifted, field.mul(c, pc));
  }
  return out;
}

/// Classical multivariate division: the remainder has no monomial divisible
/// by any divisor's leading monomial.
template <typename Field>
Poly<Field> divide(const Field& field, Poly<Field> h, const std::vector<Poly<Field>>& divisors) {
  Poly<Field> remainder;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& f : divisors) {
      if (f.is_zero()) {
        continue;
      }
      if (mono_divides(f.leading_mono(), h.leading_mono())) {
        auto factor = field.div(h.leading_coef(), f.leading_coef());
        h = sub(field, h, mul_term(field, f, mono_sub(h.leading_mono(), f.leading_mono()),
                                   factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      add_term(field, remainder, h.leading_mono(), h.leading_coef());
      auto lead = *h.terms.begin();
      h.terms.erase(h.terms.begin());
      (void)lead;
    }
  }
  return remainder;
}

template <typename Field>
Poly<Field> mul(const Field& field, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> out;
  for (const auto& [m, c] : a.terms) {
    out = add(field, out, mul_term(field, b, m, c));
  }
  return out;
}

template <typename Field>
Poly<Field> spoly(const Field& field, const Poly<Field>& f, const Poly<Field>& g) {
  const Mono gamma = mono_lcm(f.leading_mono(), g.leading_mono());
  Poly<Field> left =
      mul_term(field, f, mono_sub(gamma, f.leading_mono()),
               field.div(field.one(), f.leading_coef()));
  Poly<Field> right =
      mul_term(field, g, mono_sub(gamma, g.leading_mono()),
               field.div(field.one(), g.leading_coef()));
  return sub(field, left, right);
}

template <typename Field>
std::vector<Poly<Field>> buchberger(const Field& field, std::vector<Poly<Field>> basis) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      pairs.emplace_back(i, j);
    }
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Poly<Field> r = divide(field, spoly(field, basis[i], basis[j]), basis);
    if (!r.is_zero()) {
      for (std::size_t k = 0; k < basis.size(); ++k) {
        pairs.emplace_back(k, basis.size());
      }
      basis.push_back(std::move(r));
    }
  }
  return basis;
}

/// Buchberger criterion: every pairwise S-polynomial divides to zero.
template <typename Field>
bool is_groebner_basis(const Field& field, const std::vector<Poly<Field>>& basis) {
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!divide(field, spoly(field, basis[i], basis[j]), basis).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

template <typename Field>
bool in_ideal(const Field& field, const std::vector<Poly<Field>>& groebner,
              const Poly<Field>& p) {
  return divide(field, p, groebner).is_zero();
}

/// Minimalized, interreduced, monic basis sorted descending by leading
/// monomial position in the map order (i.e. leading monomials unique).
template <typename Field>
std::vector<Poly<Field>> reduced_basis(const Field& field, std::vector<Poly<Field>> basis) {
  std::vector<Poly<Field>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) {
        continue;
      }
      if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
        // Equal leading monomials: keep the earlier element.
        if (basis[i].leading_mono() == basis[j].leading_mono() && i < j) {
          continue;
        }
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      minimal.push_back(basis[i]);
    }
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<Field>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) {
        others.push_back(minimal[k]);
      }
    }
    Poly<Field> r = divide(field, minimal[i], others);
    Poly<Field> monic;
    auto scale = field.div(field.one(), r.leading_coef());
    for (const auto& [m, c] : r.terms) {
      monic.terms.emplace(m, field.mul(scale, c));
    }
    minimal[i] = std::move(monic);
  }
  return minimal;
}

/// Conversions from the library's polynomials (integer-valued coefficients).
Poly<QField> to_oracle_q(const polydom::Polynomial& p);
Poly<FpField> to_oracle_fp(const polydom::Polynomial& p, const FpField& field);
std::vector<Poly<QField>> to_oracle_q(const std::vector<polydom::Polynomial>& ps);
std::vector<Poly<FpField>> to_oracle_fp(const std::vector<polydom::Polynomial>& ps,
                                        const FpField& field);

}  // namespace oracle
