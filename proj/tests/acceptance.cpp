// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "polydom/axioms.hpp"
#include "polydom/cli.hpp"
#include "polydom/groebner.hpp"
#include "polydom/random.hpp"

using namespace polydom;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw Failure{message};
  }
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PolynomialRing make_ring(const std::string& descriptor, std::vector<std::string> vars,
                         Representation rep = Representation::SortedPairs) {
  return PolynomialRing(domain_from_descriptor(descriptor), VariableBase(std::move(vars)), rep);
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

// --- criterion 1: worked fixture through the CLI, oracle-confirmed ----------

void criterion_worked_fixture() {
  const std::vector<std::string> expected_basis = {"x^2 - y", "x*y - 1", "x - y^2", "y^3 - 1"};
  const std::vector<std::string> expected_reduced = {"y^3 - 1", "x - y^2"};

  // Independent confirmation of the frozen values first: the expected basis
  // passes the brute-force Buchberger criterion, contains the inputs'
  // reductions, and generates the same ideal as the inputs.
  PolynomialRing ring = make_ring("z", {"x", "y"});
  const oracle::QField field;
  const auto inputs = oracle::to_oracle_q(set_to_internal(ring, {"x^2 - y", "x*y - 1"}));
  const auto frozen = oracle::to_oracle_q(set_to_internal(ring, expected_basis));
  require(oracle::is_groebner_basis(field, frozen),
          "oracle rejects the frozen basis (Buchberger criterion)");
  for (const auto& f : inputs) {
    require(oracle::in_ideal(field, frozen, f), "oracle: input outside the frozen basis ideal");
  }
  const auto reference = oracle::buchberger(field, inputs);
  for (const auto& e : frozen) {
    require(oracle::in_ideal(field, reference, e), "oracle: frozen element outside input ideal");
  }

  // Now the real surface: the groebner subcommand with --reduced.
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "polydom_acceptance_worked.txt";
  {
    std::ofstream file(path);
    file << "vars: x,y\ndomain: z\nx^2 - y\nx*y - 1\n";
  }
  std::ostringstream out;
  std::ostringstream err;
  const auto start = Clock::now();
  const int code = cli::run({"groebner", "--input", path.string(), "--reduced", "--no-timings"},
                            out, err);
  const double elapsed = seconds_since(start);
  std::filesystem::remove(path);

  require(code == 0, "groebner command failed: " + err.str());
  std::string expected_text =
      "vars: x,y\ndomain: z\ninput:\n  x^2 - y\n  x*y - 1\nbasis:\n";
  for (const auto& b : expected_basis) {
    expected_text += "  " + b + "\n";
  }
  expected_text += "reduced basis:\n";
  for (const auto& r : expected_reduced) {
    expected_text += "  " + r + "\n";
  }
  require(out.str().find(expected_text) == 0,
          "unexpected groebner output:\n" + out.str());
  require(elapsed < 0.1, "runtime " + std::to_string(elapsed) + "s exceeds 0.1s");
}

// --- criterion 2: Buchberger criterion suite over zmod:7 --------------------

void criterion_buchberger_suite() {
  PolynomialRing ring = make_ring("zmod:7", {"x", "y", "z"});
  std::mt19937_64 rng(920);
  for (int instance = 0; instance < 50; ++instance) {
    const auto start = Clock::now();
    const PolynomialSet F = random_set(ring, rng, 3, 4, 3);
    const PolynomialSet G = groebner_basis(ring, F);
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        require(normal_form(ring, G, s_polynomial(ring, G[i], G[j])).is_null(),
                "S-polynomial did not reduce to null (instance " + std::to_string(instance) +
                    ")");
      }
    }
    for (const auto& f : F) {
      require(normal_form(ring, G, f).is_null(),
              "input outside its own basis (instance " + std::to_string(instance) + ")");
    }
    require(seconds_since(start) < 5.0,
            "instance " + std::to_string(instance) + " exceeded 5s");
  }
}

// --- criterion 3: reduced-basis uniqueness over zmod:7 ----------------------

void criterion_reduced_uniqueness() {
  PolynomialRing ring = make_ring("zmod:7", {"x", "y", "z"});
  std::mt19937_64 rng(930);
  for (int instance = 0; instance < 10; ++instance) {
    PolynomialSet F = random_set(ring, rng, 3, 4, 2);
    const auto expected = set_to_external(reduced_groebner_basis(ring, F));
    for (int permutation = 0; permutation < 10; ++permutation) {
      std::shuffle(F.begin(), F.end(), rng);
      require(set_to_external(reduced_groebner_basis(ring, F)) == expected,
              "permutation changed the reduced basis (instance " + std::to_string(instance) +
                  ")");
    }
  }
}

// --- criterion 4: scaled runtime bound ---------------------------------------

void criterion_runtime_bound() {
  // Three polynomials of seven terms in three variables over zmod:7,
  // deterministic from the seed.
  PolynomialRing ring = make_ring("zmod:7", {"x", "y", "z"});
  std::mt19937_64 rng(940);
  PolynomialSet F;
  for (int i = 0; i < 3; ++i) {
    F.push_back(random_polynomial(ring, 7, 3, rng));
  }
  const auto start = Clock::now();
  const PolynomialSet reduced = reduced_groebner_basis(ring, F);
  const double elapsed = seconds_since(start);
  require(!reduced.empty(), "empty reduced basis");
  require(elapsed < 2.0, "runtime " + std::to_string(elapsed) + "s exceeds 2s");
}

// --- criterion 5: representation equivalence ---------------------------------

void criterion_representation_equivalence() {
  std::mt19937_64 rng(950);
  for (const std::string descriptor : {"z", "zmod:7", "mat:2"}) {
    PolynomialRing sorted = make_ring(descriptor, {"x", "y", "z"});
    for (int i = 0; i < 1000; ++i) {
      const Polynomial a = random_polynomial(sorted, 1 + rng() % 5, 5, rng);
      const Polynomial b = random_polynomial(sorted, 1 + rng() % 5, 5, rng);
      const Polynomial ak = sorted.convert(a, Representation::KeyedTable);
      const Polynomial bk = sorted.convert(b, Representation::KeyedTable);
      const PolynomialRing keyed = ak.ring();
      require(sorted.equal(sorted.add(a, b),
                           keyed.convert(keyed.add(ak, bk), Representation::SortedPairs)),
              descriptor + ": representations disagree on add");
      require(sorted.equal(sorted.mul(a, b),
                           keyed.convert(keyed.mul(ak, bk), Representation::SortedPairs)),
              descriptor + ": representations disagree on mul");
    }
  }
  // The bench harness reproduces the paper's 2-row x 16-column layout.
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"bench", "--trials", "1", "--format", "csv", "--no-timings"}, out,
                            err);
  require(code == 0, "bench failed: " + err.str());
  std::istringstream lines(out.str());
  std::string header;
  std::string row1;
  std::string row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  require(static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) == 16,
          "bench header does not have 16 value columns");
  require(row1.starts_with("sorted_pairs") && row2.starts_with("keyed_table"),
          "bench rows are not the two representations");
}

// --- criterion 6: exponent-vector properties ---------------------------------

void criterion_expvec_properties() {
  PrimeTable primes;
  std::mt19937_64 rng(960);
  auto random_vec = [&rng](std::size_t arity, unsigned max_exp) {
    std::vector<unsigned> exps(arity);
    for (auto& e : exps) {
      e = static_cast<unsigned>(rng() % (max_exp + 1));
    }
    return ExpVec(std::move(exps));
  };

  for (int i = 0; i < 1000; ++i) {
    const std::size_t arity = 1 + rng() % 11;
    const ExpVec u = random_vec(arity, 9);
    const ExpVec v = random_vec(arity, 9);
    require(encode(u + v, primes) == encode(u, primes) * encode(v, primes),
            "encoding homomorphism failed");
    require(decode(encode(u, primes), arity, primes) == u, "encode/decode round trip failed");
    require(gcd(u, v) == gcd_encoded(u, v, primes), "gcd representations disagree");
    require(lcm(u, v) == lcm_encoded(u, v, primes), "lcm representations disagree");
  }
  for (int i = 0; i < 1000; ++i) {
    const ExpVec a = random_vec(3, 4);
    const ExpVec b = random_vec(3, 4);
    const ExpVec c = random_vec(3, 4);
    require(compare(a, b) == -compare(b, a), "comparison is not antisymmetric");
    require((compare(a, b) == 0) == (a == b), "comparison disagrees with equality");
    if (compare(a, b) <= 0 && compare(b, c) <= 0) {
      require(compare(a, c) <= 0, "comparison is not transitive");
    }
  }
}

// --- criterion 7: axiom suites ------------------------------------------------

void criterion_axiom_suites() {
  require(axiom_suite(*make_integer_domain(), StructureKind::CommutativeRing, 500, 42)
              .all_passed(),
          "z failed the commutative-ring suite");
  require(axiom_suite(*make_modular_domain(7), StructureKind::Field, 500, 42).all_passed(),
          "zmod:7 failed the field suite");

  const AxiomReport mat = axiom_suite(*make_matrix_domain(2), StructureKind::CommutativeRing,
                                      500, 42);
  bool commutativity_failed_with_witness = false;
  for (const auto& check : mat.checks) {
    if (check.axiom == "mul-commutativity") {
      commutativity_failed_with_witness = !check.passed && !check.counterexample.empty();
    } else {
      require(check.passed, "mat:2 failed " + check.axiom);
    }
  }
  require(commutativity_failed_with_witness,
          "mat:2 commutativity did not fail with a counterexample");
}

// --- criterion 8: normal-form postcondition -----------------------------------

void criterion_normal_form_postcondition() {
  std::mt19937_64 rng(980);
  for (const std::string descriptor : {"z", "zmod:7"}) {
    PolynomialRing ring = make_ring(descriptor, {"x", "y", "z"});
    for (int instance = 0; instance < 200; ++instance) {
      const PolynomialSet F = random_set(ring, rng, 3, 4, 3);
      const Polynomial p = random_polynomial(ring, 1 + rng() % 4, 3, rng);
      ReductionCertificate certificate;
      const Polynomial r = normal_form(ring, F, p, nullptr, {}, &certificate);
      require(is_normal(ring, F, r), descriptor + ": normal_form output is not normal");
      if (descriptor == "z") {
        // Oracle confirmation that multiplier*p - r = sum(q_i * F_i), i.e.
        // a nonzero integer multiple of p lies in ideal(F) + r.
        require(!ring.domain().is_zero(certificate.multiplier),
                "zero pseudo-remainder multiplier");
        const Polynomial witness = ring.sub(ring.scalar_mul(certificate.multiplier, p), r);
        const oracle::QField field;
        oracle::Poly<oracle::QField> combination;
        for (std::size_t i = 0; i < F.size(); ++i) {
          combination = oracle::add(
              field, combination,
              oracle::mul(field, oracle::to_oracle_q(certificate.quotients[i]),
                          oracle::to_oracle_q(F[i])));
        }
        require(oracle::sub(field, oracle::to_oracle_q(witness), combination).is_zero(),
                "pseudo-remainder certificate rejected by the oracle");
      }
    }
  }
}

// --- criterion 9: parser round trips -------------------------------------------

void criterion_parser_round_trip() {
  std::mt19937_64 rng(990);
  for (const std::string descriptor : {"z", "zmod:7", "mat:2"}) {
    PolynomialRing ring = make_ring(descriptor, {"x", "y", "z"});
    for (int i = 0; i < 1000; ++i) {
      const Polynomial p = random_polynomial(ring, rng() % 6, 4, rng);
      const std::string text = render_polynomial(p);
      require(ring.equal(parse_polynomial(text, ring), p),
              descriptor + ": parse(render(p)) != p for " + text);
      require(render_polynomial(parse_polynomial(text, ring)) == text,
              descriptor + ": canonical text is not a fixed point: " + text);
    }
  }

  PolynomialRing ring = make_ring("z", {"x", "y", "z"});
  const Polynomial paper = parse_polynomial("2*x^2*z - 5*y", ring);
  require(paper.term_count() == 2, "paper example term count");
  require(paper.monomial_at(1) == ExpVec({0, 1, 0}), "paper example first monomial");
  require(paper.coef_at(1).integer() == -5, "paper example first coefficient");
  require(paper.monomial_at(2) == ExpVec({2, 0, 1}), "paper example second monomial");
  require(paper.coef_at(2).integer() == 2, "paper example second coefficient");
  require(render_polynomial(paper) == "2*x^2*z - 5*y", "paper example rendering");
}

struct Criterion {
  int id;
  std::string name;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-basis fixture (oracle-confirmed, < 0.1s)", criterion_worked_fixture},
      {2, "Buchberger criterion suite, 50 random zmod:7 inputs", criterion_buchberger_suite},
      {3, "reduced-basis uniqueness under permutations", criterion_reduced_uniqueness},
      {4, "3x7-term zmod:7 reduced basis under 2s", criterion_runtime_bound},
      {5, "representation equivalence, 1000 add + 1000 mul per domain",
       criterion_representation_equivalence},
      {6, "exponent-vector properties", criterion_expvec_properties},
      {7, "axiom suites (z, zmod:7, mat:2)", criterion_axiom_suites},
      {8, "normal-form postcondition and pseudo-remainder certificates",
       criterion_normal_form_postcondition},
      {9, "parser round trips and the paper's literal example", criterion_parser_round_trip},
  };

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    try {
      criterion.run();
      std::printf("PASS  %d  %s\n", criterion.id, criterion.name.c_str());
    } catch (const Failure& failure) {
      all_passed = false;
      std::printf("FAIL  %d  %s: %s\n", criterion.id, criterion.name.c_str(),
                  failure.message.c_str());
    } catch (const std::exception& e) {
      all_passed = false;
      std::printf("FAIL  %d  %s: unexpected error: %s\n", criterion.id, criterion.name.c_str(),
                  e.what());
    }
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
