#include "polydom/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polydom/axioms.hpp"
#include "polydom/bench.hpp"
#include "polydom/groebner.hpp"

namespace polydom::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOptions {
  std::string input;
  std::string format = "text";
  std::string rep = "sorted_pairs";
  bool no_timings = false;
  std::size_t budget = 100000;
  bool verbose = false;
};

void add_format_option(CLI::App* cmd, CommonOptions& opts,
                       const std::string& choices = "text|json") {
  cmd->add_option("--format", opts.format, "Output format (" + choices + ")")
      ->default_val("text");
}

void add_common_file_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.input, "Problem file path")->required();
  cmd->add_option("--rep", opts.rep,
                  "Internal representation (sorted_pairs|keyed_table)")
      ->default_val("sorted_pairs");
}

PolynomialSet non_null(const PolynomialSet& polys) {
  PolynomialSet out;
  for (const auto& p : polys) {
    if (!p.is_null()) {
      out.push_back(p);
    }
  }
  return out;
}

void emit_single_result(std::ostream& out, const Problem& problem, const std::string& format,
                        const std::string& result) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["vars"] = problem.base.names();
    j["domain"] = problem.domain->descriptor();
    j["input"] = problem.input_texts;
    j["result"] = result;
    out << j.dump(2) << "\n";
  } else {
    out << result << "\n";
  }
}

const Polynomial& element_at(const PolynomialSet& polys, std::size_t index_1based) {
  if (index_1based < 1 || index_1based > polys.size()) {
    throw Error("polynomial index " + std::to_string(index_1based) + " out of range 1.." +
                std::to_string(polys.size()));
  }
  return polys[index_1based - 1];
}

int run_groebner(const CommonOptions& opts, bool reduced, std::ostream& out, std::ostream& err) {
  Problem problem = read_problem_file(opts.input, representation_from_name(opts.rep));
  PolynomialSet input = non_null(problem.polynomials);
  if (input.empty()) {
    throw Error("problem file contains no non-null polynomials");
  }

  GroebnerStats stats;
  ReductionOptions options;
  options.step_budget = opts.budget;
  if (opts.verbose) {
    options.trace = &err;
  }

  const auto start = Clock::now();
  PolynomialSet basis = groebner_basis(problem.ring, input, &stats, options);
  std::optional<PolynomialSet> reduced_basis;
  if (reduced) {
    reduced_basis = reduce_basis(problem.ring, basis, &stats, options);
  }
  const auto stop = Clock::now();

  RunReport report;
  report.vars = problem.base.names();
  report.domain = problem.domain->descriptor();
  report.input = problem.input_texts;
  report.basis = set_to_external(basis);
  if (reduced_basis) {
    report.reduced_basis = set_to_external(*reduced_basis);
  }
  report.spoly_count = stats.spoly_count;
  report.reduction_steps = stats.reduction_steps;
  report.elapsed_ms =
      opts.no_timings ? 0.0 : std::chrono::duration<double, std::milli>(stop - start).count();

  out << (opts.format == "json" ? write_report_json(report) : write_report_text(report));
  return 0;
}

int run_nf(const CommonOptions& opts, const std::string& poly_text, std::ostream& out) {
  Problem problem = read_problem_file(opts.input, representation_from_name(opts.rep));
  PolynomialSet reducers = non_null(problem.polynomials);
  Polynomial p = parse_polynomial(poly_text, problem.ring);
  ReductionOptions options;
  options.step_budget = opts.budget;
  Polynomial result = normal_form(problem.ring, reducers, p, nullptr, options);
  emit_single_result(out, problem, opts.format, render_polynomial(result));
  return 0;
}

int run_spol(const CommonOptions& opts, std::size_t i, std::size_t j, std::ostream& out) {
  Problem problem = read_problem_file(opts.input, representation_from_name(opts.rep));
  Polynomial result = s_polynomial(problem.ring, element_at(problem.polynomials, i),
                                   element_at(problem.polynomials, j));
  emit_single_result(out, problem, opts.format, render_polynomial(result));
  return 0;
}

int run_arith(const CommonOptions& opts, const std::string& op, std::size_t i, std::size_t j,
              std::ostream& out) {
  Problem problem = read_problem_file(opts.input, representation_from_name(opts.rep));
  const Polynomial& a = element_at(problem.polynomials, i);
  const Polynomial& b = element_at(problem.polynomials, j);
  Polynomial result = op == "add" ? problem.ring.add(a, b) : problem.ring.mul(a, b);
  emit_single_result(out, problem, opts.format, render_polynomial(result));
  return 0;
}

int run_axioms(const std::string& descriptor, const std::string& kind_name, std::size_t samples,
               std::uint64_t seed, const std::string& format, std::ostream& out) {
  auto domain = domain_from_descriptor(descriptor);
  StructureKind kind = structure_kind_from_name(kind_name);
  AxiomReport report = axiom_suite(*domain, kind, samples, seed);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["domain"] = report.domain;
    j["kind"] = to_string(report.kind);
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
      nlohmann::ordered_json c;
      c["axiom"] = check.axiom;
      c["structural"] = check.structural;
      c["passed"] = check.passed;
      c["counterexample"] = check.counterexample;
      j["checks"].push_back(std::move(c));
    }
    j["all_passed"] = report.all_passed();
    out << j.dump(2) << "\n";
  } else {
    out << "domain: " << report.domain << "\n";
    out << "kind: " << to_string(report.kind) << "\n";
    out << "samples: " << report.samples << "\n";
    out << "seed: " << report.seed << "\n";
    for (const auto& check : report.checks) {
      out << check.axiom << ": " << (check.passed ? "pass" : "FAIL");
      if (check.structural) {
        out << " (structural)";
      }
      if (!check.counterexample.empty()) {
        out << "  counterexample: " << check.counterexample;
      }
      out << "\n";
    }
    out << "result: " << (report.all_passed() ? "pass" : "fail") << "\n";
  }
  return 0;
}

int run_bench_cmd(const BenchConfig& config, const std::string& format,
                  const std::string& csv_path, std::ostream& out) {
  BenchTable table = run_bench(config);
  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) {
      throw Error("cannot write CSV file: " + csv_path);
    }
    file << bench_table_csv(table);
  }
  if (format == "csv") {
    out << bench_table_csv(table);
  } else if (format == "json") {
    out << bench_table_json(table);
  } else {
    out << bench_table_text(table);
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameterized polynomial domains with Buchberger's Gröbner basis algorithms"};
  app.name("polydom");
  app.require_subcommand(1);

  CommonOptions groebner_opts;
  bool reduced = false;
  auto* groebner_cmd = app.add_subcommand("groebner", "Compute a Gröbner basis of a problem file");
  add_common_file_options(groebner_cmd, groebner_opts);
  add_format_option(groebner_cmd, groebner_opts);
  groebner_cmd->add_flag("--reduced", reduced, "Also compute the reduced basis");
  groebner_cmd->add_flag("--verbose", groebner_opts.verbose, "Trace pair processing");
  groebner_cmd->add_flag("--no-timings", groebner_opts.no_timings, "Zero the elapsed_ms field");
  groebner_cmd->add_option("--budget", groebner_opts.budget, "Reduction step budget")
      ->default_val(100000);

  CommonOptions nf_opts;
  std::string nf_poly;
  auto* nf_cmd = app.add_subcommand("nf", "Normal form of a polynomial modulo the file's set");
  add_common_file_options(nf_cmd, nf_opts);
  add_format_option(nf_cmd, nf_opts);
  nf_cmd->add_option("--poly", nf_poly, "Polynomial text to reduce")->required();
  nf_cmd->add_option("--budget", nf_opts.budget, "Reduction step budget")->default_val(100000);

  CommonOptions spol_opts;
  std::size_t spol_i = 1;
  std::size_t spol_j = 2;
  auto* spol_cmd = app.add_subcommand("spol", "S-polynomial of two elements of the file's set");
  add_common_file_options(spol_cmd, spol_opts);
  add_format_option(spol_cmd, spol_opts);
  spol_cmd->add_option("--i", spol_i, "First element (1-based)")->required();
  spol_cmd->add_option("--j", spol_j, "Second element (1-based)")->required();

  CommonOptions arith_opts;
  std::string arith_op;
  std::size_t arith_i = 1;
  std::size_t arith_j = 2;
  auto* arith_cmd = app.add_subcommand("arith", "Add or multiply two elements of the file's set");
  add_common_file_options(arith_cmd, arith_opts);
  add_format_option(arith_cmd, arith_opts);
  arith_cmd->add_option("--op", arith_op, "Operation (add|mul)")
      ->required()
      ->check(CLI::IsMember({"add", "mul"}));
  arith_cmd->add_option("--i", arith_i, "First element (1-based)")->required();
  arith_cmd->add_option("--j", arith_j, "Second element (1-based)")->required();

  BenchConfig bench_config;
  std::string bench_format = "text";
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Representation benchmark");
  bench_cmd->add_option("--domains", bench_config.domains, "Domains to benchmark")
      ->delimiter(',');
  bench_cmd->add_option("--sizes", bench_config.sizes,
                        "Term counts (default 2,7,10 scalar / 2,5 matrix)")
      ->delimiter(',');
  bench_cmd->add_option("--ops", bench_config.operations, "Operations (sum,product)")
      ->delimiter(',');
  bench_cmd->add_option("--trials", bench_config.trials, "Trials per cell")->default_val(3);
  bench_cmd->add_option("--seed", bench_config.seed, "Random seed")->default_val(0);
  bench_cmd->add_option("--format", bench_format, "Output format (text|csv|json)")
      ->default_val("text");
  bench_cmd->add_option("--csv", bench_csv, "Also write the CSV table to this path");
  bench_cmd->add_flag("--no-timings", bench_config.zero_timings,
                      "Zero all timing cells (golden-test mode)");

  std::string axioms_domain;
  std::string axioms_kind;
  std::size_t axioms_samples = 500;
  std::uint64_t axioms_seed = 42;
  std::string axioms_format = "text";
  auto* axioms_cmd = app.add_subcommand("axioms", "Randomized axiom verification for a domain");
  axioms_cmd->add_option("--domain", axioms_domain, "Domain descriptor (z|zmod:<n>|mat:<n>)")
      ->required();
  axioms_cmd->add_option("--kind", axioms_kind,
                         "Structure kind (semigroup..field, hyphenated)")
      ->required();
  axioms_cmd->add_option("--samples", axioms_samples, "Sample count")->default_val(500);
  axioms_cmd->add_option("--seed", axioms_seed, "Random seed")->default_val(42);
  axioms_cmd->add_option("--format", axioms_format, "Output format (text|json)")
      ->default_val("text");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (groebner_cmd->parsed()) {
      return run_groebner(groebner_opts, reduced, out, err);
    }
    if (nf_cmd->parsed()) {
      return run_nf(nf_opts, nf_poly, out);
    }
    if (spol_cmd->parsed()) {
      return run_spol(spol_opts, spol_i, spol_j, out);
    }
    if (arith_cmd->parsed()) {
      return run_arith(arith_opts, arith_op, arith_i, arith_j, out);
    }
    if (bench_cmd->parsed()) {
      return run_bench_cmd(bench_config, bench_format, bench_csv, out);
    }
    if (axioms_cmd->parsed()) {
      return run_axioms(axioms_domain, axioms_kind, axioms_samples, axioms_seed, axioms_format,
                        out);
    }
    err << "no subcommand given\n";
    return 1;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedDomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedStructureError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const polydom::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polydom::cli
