#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polydom/domain.hpp"

namespace polydom {

/// The structure chain. Each kind requires every axiom of the kind before it
/// plus its own; AbelianGroup adds nothing beyond Group in this chain.
enum class StructureKind {
  Semigroup,
  Monoid,
  AbelianMonoid,
  Group,
  AbelianGroup,
  Ring,
  CommutativeRing,
  Field,
};

std::string to_string(StructureKind kind);
/// Accepts the hyphenated spellings used by the CLI ("commutative-ring", ...).
StructureKind structure_kind_from_name(std::string_view name);

struct AxiomCheck {
  std::string axiom;
  bool structural = false;  // holds by construction, not by sampling
  bool passed = false;
  std::string counterexample;  // empty when passed
};

struct AxiomReport {
  std::string domain;
  StructureKind kind = StructureKind::Semigroup;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
};

/// Draws `samples` random element triples (deterministic from `seed`) and
/// evaluates every axiom the kind requires. Throws UnsupportedStructureError
/// when the domain lacks an operation the kind needs.
AxiomReport axiom_suite(const CoefficientDomain& domain, StructureKind kind, std::size_t samples,
                        std::uint64_t seed);

}  // namespace polydom
