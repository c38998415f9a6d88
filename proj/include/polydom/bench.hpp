#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polydom/poly.hpp"

namespace polydom {

/// Representation benchmark configuration. An empty `sizes` selects the
/// per-domain defaults: 2, 7, 10 terms for scalar domains and 2, 5 for
/// matrix domains.
struct BenchConfig {
  std::vector<std::string> domains = {"z", "zmod:7", "mat:2"};
  std::vector<std::size_t> sizes;
  std::vector<std::string> operations = {"sum", "product"};
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  bool zero_timings = false;
};

struct BenchCell {
  std::string domain;
  std::string operation;
  std::size_t terms = 0;
  double sorted_pairs_ms = 0.0;
  double keyed_table_ms = 0.0;
};

struct BenchTable {
  std::vector<BenchCell> cells;  // column order: domain, then operation, then size
};

/// Runs the benchmark: deterministic random operands per cell and trial,
/// both representations timed on identical inputs (median of trials), and
/// every trial's results asserted convert-equal between representations.
BenchTable run_bench(const BenchConfig& config);

std::string bench_table_text(const BenchTable& table);
std::string bench_table_csv(const BenchTable& table);
std::string bench_table_json(const BenchTable& table);

}  // namespace polydom
