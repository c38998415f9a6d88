#include "polydom/axioms.hpp"

#include <array>
#include <functional>

namespace polydom {

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Semigroup: return "semigroup";
    case StructureKind::Monoid: return "monoid";
    case StructureKind::AbelianMonoid: return "abelian-monoid";
    case StructureKind::Group: return "group";
    case StructureKind::AbelianGroup: return "abelian-group";
    case StructureKind::Ring: return "ring";
    case StructureKind::CommutativeRing: return "commutative-ring";
    case StructureKind::Field: return "field";
  }
  throw Error("unknown structure kind");
}

StructureKind structure_kind_from_name(std::string_view name) {
  for (StructureKind kind :
       {StructureKind::Semigroup, StructureKind::Monoid, StructureKind::AbelianMonoid,
        StructureKind::Group, StructureKind::AbelianGroup, StructureKind::Ring,
        StructureKind::CommutativeRing, StructureKind::Field}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw Error("unknown structure kind: '" + std::string(name) + "'");
}

bool AxiomReport::all_passed() const {
  for (const auto& check : checks) {
    if (!check.passed) {
      return false;
    }
  }
  return true;
}

namespace {

struct Axiom {
  std::string name;
  bool structural;
  // Evaluates one sampled triple; returns true when the law holds for it.
  std::function<bool(const CoefficientDomain&, const Coef&, const Coef&, const Coef&)> holds;
};

std::vector<Axiom> axioms_for(StructureKind kind) {
  std::vector<Axiom> out;
  const auto rank = static_cast<int>(kind);

  out.push_back({"add-closure", true, {}});
  out.push_back({"add-associativity", false,
                 [](const CoefficientDomain& d, const Coef& a, const Coef& b, const Coef& c) {
                   return d.eq(d.add(d.add(a, b), c), d.add(a, d.add(b, c)));
                 }});
  if (rank >= static_cast<int>(StructureKind::Monoid)) {
    out.push_back({"add-identity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef&, const Coef&) {
                     return d.eq(d.add(a, d.zero()), a) && d.eq(d.add(d.zero(), a), a);
                   }});
  }
  if (rank >= static_cast<int>(StructureKind::AbelianMonoid)) {
    out.push_back({"add-commutativity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef& b, const Coef&) {
                     return d.eq(d.add(a, b), d.add(b, a));
                   }});
  }
  if (rank >= static_cast<int>(StructureKind::Group)) {
    out.push_back({"add-inverse", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef&, const Coef&) {
                     return d.eq(d.add(a, d.neg(a)), d.zero()) &&
                            d.eq(d.add(d.neg(a), a), d.zero());
                   }});
  }
  if (rank >= static_cast<int>(StructureKind::Ring)) {
    out.push_back({"mul-closure", true, {}});
    out.push_back({"mul-associativity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef& b, const Coef& c) {
                     return d.eq(d.mul(d.mul(a, b), c), d.mul(a, d.mul(b, c)));
                   }});
    out.push_back({"mul-identity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef&, const Coef&) {
                     return d.eq(d.mul(a, d.one()), a) && d.eq(d.mul(d.one(), a), a);
                   }});
    out.push_back({"left-distributivity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef& b, const Coef& c) {
                     return d.eq(d.mul(a, d.add(b, c)), d.add(d.mul(a, b), d.mul(a, c)));
                   }});
    out.push_back({"right-distributivity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef& b, const Coef& c) {
                     return d.eq(d.mul(d.add(b, c), a), d.add(d.mul(b, a), d.mul(c, a)));
                   }});
  }
  if (rank >= static_cast<int>(StructureKind::CommutativeRing)) {
    out.push_back({"mul-commutativity", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef& b, const Coef&) {
                     return d.eq(d.mul(a, b), d.mul(b, a));
                   }});
  }
  if (rank >= static_cast<int>(StructureKind::Field)) {
    out.push_back({"zero-one-distinct", false,
                   [](const CoefficientDomain& d, const Coef&, const Coef&, const Coef&) {
                     return !d.eq(d.zero(), d.one());
                   }});
    out.push_back({"mul-inverse", false,
                   [](const CoefficientDomain& d, const Coef& a, const Coef&, const Coef&) {
                     if (d.is_zero(a)) {
                       return true;
                     }
                     return d.eq(d.mul(a, d.quotient(d.one(), a)), d.one());
                   }});
  }
  return out;
}

}  // namespace

AxiomReport axiom_suite(const CoefficientDomain& domain, StructureKind kind, std::size_t samples,
                        std::uint64_t seed) {
  if (samples < 1) {
    throw Error("axiom suite needs at least one sample");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::array<Coef, 3>> tuples;
  tuples.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    tuples.push_back({domain.random_element(rng), domain.random_element(rng),
                      domain.random_element(rng)});
  }

  AxiomReport report;
  report.domain = domain.descriptor();
  report.kind = kind;
  report.samples = samples;
  report.seed = seed;

  for (const Axiom& axiom : axioms_for(kind)) {
    AxiomCheck check;
    check.axiom = axiom.name;
    check.structural = axiom.structural;
    check.passed = true;
    if (!axiom.structural) {
      for (const auto& [a, b, c] : tuples) {
        bool ok = false;
        std::string note;
        try {
          ok = axiom.holds(domain, a, b, c);
        } catch (const UnsupportedOpError& e) {
          throw UnsupportedStructureError(domain.descriptor() + " cannot express " +
                                          to_string(kind) + ": " + e.what());
        } catch (const Error& e) {
          // A defined-but-failing operation (no inverse mod a composite,
          // singular matrix) is a counterexample, not a missing capability.
          note = std::string(" (") + e.what() + ")";
        }
        if (!ok) {
          check.passed = false;
          check.counterexample = "a=" + domain.render(a) + ", b=" + domain.render(b) +
                                 ", c=" + domain.render(c) + note;
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace polydom
