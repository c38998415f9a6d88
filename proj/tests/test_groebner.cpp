#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "polydom/groebner.hpp"
#include "polydom/random.hpp"

using namespace polydom;

namespace {

PolynomialRing make_ring(const std::string& descriptor,
                         std::vector<std::string> vars = {"x", "y"}) {
  return PolynomialRing(domain_from_descriptor(descriptor), VariableBase(std::move(vars)),
                        Representation::SortedPairs);
}

PolynomialSet random_set(const PolynomialRing& ring, std::mt19937_64& rng, std::size_t max_polys,
                         std::size_t max_terms, unsigned max_exp) {
  PolynomialSet out;
  const std::size_t count = 1 + rng() % max_polys;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_polynomial(ring, 1 + rng() % max_terms, max_exp, rng));
  }
  return out;
}

std::vector<std::string> rendered(const PolynomialSet& set) { return set_to_external(set); }

}  // namespace

TEST_CASE("normal-form membership test") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet F = set_to_internal(ring, {"x^2 - y"});
  CHECK(is_normal(ring, F, parse_polynomial("y^2 + 1", ring)));
  CHECK(!is_normal(ring, F, parse_polynomial("x^2*y", ring)));
  CHECK(is_normal(ring, F, ring.zero()));
  CHECK(is_normal(ring, {}, parse_polynomial("x", ring)));
}

TEST_CASE("normal form reduces the spec examples") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet F = set_to_internal(ring, {"x^2 - y"});
  CHECK(render_polynomial(normal_form(ring, F, parse_polynomial("x^2*y + 1", ring))) ==
        "y^2 + 1");

  const Polynomial already = parse_polynomial("y^5 + x", ring);
  CHECK(ring.equal(normal_form(ring, F, already), already));

  const PolynomialSet G = set_to_internal(ring, {"x*y - 1"});
  CHECK(normal_form(ring, G, parse_polynomial("x*y^2 - y", ring)).is_null());
}

TEST_CASE("normal form counts steps and honours the budget") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet F = set_to_internal(ring, {"x^2 - y"});
  GroebnerStats stats;
  (void)normal_form(ring, F, parse_polynomial("x^2*y + 1", ring), &stats);
  CHECK(stats.reduction_steps == 1);

  ReductionOptions tight;
  tight.step_budget = 0;
  CHECK_THROWS_AS(normal_form(ring, F, parse_polynomial("x^2*y + 1", ring), nullptr, tight),
                  BudgetExceededError);
}

TEST_CASE("normal form rejects null reducers") {
  PolynomialRing ring = make_ring("z");
  CHECK_THROWS_AS(normal_form(ring, {ring.zero()}, parse_polynomial("x", ring)),
                  EmptyPolynomialError);
}

TEST_CASE("s-polynomial of the worked pair") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet F = set_to_internal(ring, {"x^2 - y", "x*y - 1"});
  CHECK(render_polynomial(s_polynomial(ring, F[0], F[1])) == "x - y^2");
  CHECK(s_polynomial(ring, F[0], F[0]).is_null());
  CHECK_THROWS_AS(s_polynomial(ring, F[0], ring.zero()), EmptyPolynomialError);
}

TEST_CASE("s-polynomials over z and zmod:7 agree up to a unit") {
  PolynomialRing zring = make_ring("z");
  PolynomialRing z7ring = make_ring("zmod:7");
  std::mt19937_64 rng(47);
  const ModularDomain& z7 = dynamic_cast<const ModularDomain&>(z7ring.domain());
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = random_polynomial(zring, 1 + rng() % 3, 3, rng);
    const Polynomial b = random_polynomial(zring, 1 + rng() % 3, 3, rng);
    // Project the integer operands into zmod:7, skipping degenerate cases
    // where a leading term vanishes mod 7.
    const Polynomial a7 = parse_polynomial(render_polynomial(a), z7ring);
    const Polynomial b7 = parse_polynomial(render_polynomial(b), z7ring);
    if (a7.is_null() || b7.is_null() || !(a7.leading_monomial() == a.leading_monomial()) ||
        !(b7.leading_monomial() == b.leading_monomial())) {
      continue;
    }
    const Polynomial over_z = s_polynomial(zring, a, b);
    const Polynomial over_z7 = s_polynomial(z7ring, a7, b7);
    const Polynomial projected = parse_polynomial(render_polynomial(over_z), z7ring);
    bool unit_match = false;
    for (long u = 1; u < 7; ++u) {
      if (z7ring.equal(z7ring.scalar_mul(z7.from_int(u), projected), over_z7)) {
        unit_match = true;
        break;
      }
    }
    CHECK(unit_match);
  }
}

TEST_CASE("s-polynomial leading terms cancel") {
  PolynomialRing ring = make_ring("zmod:7", {"x", "y", "z"});
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_polynomial(ring, 1 + rng() % 4, 3, rng);
    const Polynomial b = random_polynomial(ring, 1 + rng() % 4, 3, rng);
    const ExpVec bound = lcm(a.leading_monomial(), b.leading_monomial());
    const Polynomial s = s_polynomial(ring, a, b);
    if (!s.is_null()) {
      CHECK(compare(s.leading_monomial(), bound) < 0);
    }
  }
}

TEST_CASE("the worked example basis appears in discovery order") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet F = set_to_internal(ring, {"x^2 - y", "x*y - 1"});
  GroebnerStats stats;
  const PolynomialSet basis = groebner_basis(ring, F, &stats);
  CHECK(rendered(basis) ==
        std::vector<std::string>{"x^2 - y", "x*y - 1", "x - y^2", "y^3 - 1"});
  CHECK(stats.spoly_count == 6);

  const PolynomialSet reduced = reduced_groebner_basis(ring, F);
  CHECK(rendered(reduced) == std::vector<std::string>{"y^3 - 1", "x - y^2"});
}

TEST_CASE("trivial basis cases") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet single = set_to_internal(ring, {"x - y"});
  CHECK(rendered(groebner_basis(ring, single)) == std::vector<std::string>{"x - y"});
  CHECK(rendered(reduced_groebner_basis(ring, single)) == std::vector<std::string>{"x - y"});

  // A duplicated element: the pair's S-polynomial is null and adds nothing.
  const PolynomialSet dup = set_to_internal(ring, {"x - y", "x - y"});
  CHECK(rendered(groebner_basis(ring, dup)) == std::vector<std::string>{"x - y", "x - y"});
  CHECK(rendered(reduced_groebner_basis(ring, dup)) == std::vector<std::string>{"x - y"});

  // Null inputs are dropped.
  const PolynomialSet with_null = {parse_polynomial("x - y", ring), ring.zero()};
  CHECK(rendered(groebner_basis(ring, with_null)) == std::vector<std::string>{"x - y"});
  CHECK_THROWS_AS(groebner_basis(ring, {ring.zero()}), Error);
}

TEST_CASE("content is removed from integer reduced bases") {
  PolynomialRing ring = make_ring("z");
  const PolynomialSet F = set_to_internal(ring, {"2*x - 2*y"});
  CHECK(rendered(reduced_groebner_basis(ring, F)) == std::vector<std::string>{"x - y"});
  // Leading coefficients are made positive.
  const PolynomialSet G = set_to_internal(ring, {"-3*x + 6*y"});
  CHECK(rendered(reduced_groebner_basis(ring, G)) == std::vector<std::string>{"x - 2*y"});
}

TEST_CASE("groebner rejects unsupported coefficient domains") {
  PolynomialRing mring = make_ring("mat:2");
  const PolynomialSet F = {parse_polynomial("x", mring)};
  CHECK_THROWS_AS(groebner_basis(mring, F), UnsupportedDomainError);

  PolynomialRing z6ring = make_ring("zmod:6");
  const PolynomialSet G = set_to_internal(z6ring, {"x - y"});
  CHECK_THROWS_AS(groebner_basis(z6ring, G), UnsupportedDomainError);
  CHECK_THROWS_AS(reduced_groebner_basis(z6ring, G), UnsupportedDomainError);
}

TEST_CASE("buchberger criterion and input membership on random zmod:7 sets") {
  PolynomialRing ring = make_ring("zmod:7", {"x", "y", "z"});
  std::mt19937_64 rng(59);
  for (int instance = 0; instance < 15; ++instance) {
    const PolynomialSet F = random_set(ring, rng, 3, 4, 3);
    const PolynomialSet G = groebner_basis(ring, F);
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        CHECK(normal_form(ring, G, s_polynomial(ring, G[i], G[j])).is_null());
      }
    }
    for (const auto& f : F) {
      CHECK(normal_form(ring, G, f).is_null());
    }
    // Independent confirmation through the classical oracle.
    const oracle::FpField field(7);
    CHECK(oracle::is_groebner_basis(field, oracle::to_oracle_fp(G, field)));
  }
}

TEST_CASE("normal form output is normal and pseudo-remainders certify over z") {
  std::mt19937_64 rng(61);
  for (const std::string descriptor : {"z", "zmod:7"}) {
    PolynomialRing ring = make_ring(descriptor, {"x", "y", "z"});
    for (int instance = 0; instance < 40; ++instance) {
      const PolynomialSet F = random_set(ring, rng, 3, 4, 3);
      const Polynomial p = random_polynomial(ring, 1 + rng() % 4, 3, rng);
      ReductionCertificate certificate;
      const Polynomial r = normal_form(ring, F, p, nullptr, {}, &certificate);
      CHECK(is_normal(ring, F, r));
      if (descriptor == "z") {
        // The certificate places multiplier*p inside ideal(F) + r; the
        // oracle recomputes multiplier*p - r = sum(q_i * F_i) with its own
        // arithmetic.
        CHECK(!ring.domain().is_zero(certificate.multiplier));
        const Polynomial witness = ring.sub(ring.scalar_mul(certificate.multiplier, p), r);
        const oracle::QField field;
        oracle::Poly<oracle::QField> combination;
        for (std::size_t i = 0; i < F.size(); ++i) {
          combination = oracle::add(
              field, combination,
              oracle::mul(field, oracle::to_oracle_q(certificate.quotients[i]),
                          oracle::to_oracle_q(F[i])));
        }
        CHECK(oracle::sub(field, oracle::to_oracle_q(witness), combination).is_zero());
      }
    }
  }
}

TEST_CASE("reduced bases over zmod:7 are permutation invariant") {
  PolynomialRing ring = make_ring("zmod:7", {"x", "y", "z"});
  std::mt19937_64 rng(67);
  for (int instance = 0; instance < 4; ++instance) {
    PolynomialSet F = random_set(ring, rng, 3, 4, 2);
    const auto expected = rendered(reduced_groebner_basis(ring, F));
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(F.begin(), F.end(), rng);
      CHECK(rendered(reduced_groebner_basis(ring, F)) == expected);
    }
  }
}

TEST_CASE("reduced bases are monic and interreduced over a field") {
  PolynomialRing ring = make_ring("zmod:7", {"x", "y"});
  const PolynomialSet F = set_to_internal(ring, {"3*x^2 - y", "5*x*y - 1"});
  const PolynomialSet reduced = reduced_groebner_basis(ring, F);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    CHECK(ring.domain().is_one(reduced[i].leading_coef()));
    PolynomialSet others;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (k != i) {
        others.push_back(reduced[k]);
      }
    }
    CHECK(is_normal(ring, others, reduced[i]));
  }
  // Ascending leading monomials.
  for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
    CHECK(compare(reduced[i].leading_monomial(), reduced[i + 1].leading_monomial()) < 0);
  }
}

TEST_CASE("basis completion works in the keyed-table representation too") {
  PolynomialRing ring(domain_from_descriptor("z"), VariableBase({"x", "y"}),
                      Representation::KeyedTable);
  const PolynomialSet F = set_to_internal(ring, {"x^2 - y", "x*y - 1"});
  CHECK(rendered(groebner_basis(ring, F)) ==
        std::vector<std::string>{"x^2 - y", "x*y - 1", "x - y^2", "y^3 - 1"});
}
