#include "polydom/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polydom/random.hpp"

namespace polydom {

namespace {

std::vector<std::size_t> sizes_for(const BenchConfig& config, const CoefficientDomain& domain) {
  if (!config.sizes.empty()) {
    return config.sizes;
  }
  if (domain.kind() == DomainKind::Matrix) {
    return {2, 5};
  }
  return {2, 7, 10};
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) {
    return values[n / 2];
  }
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double time_ms(const std::function<Polynomial()>& op, Polynomial& result) {
  const auto start = std::chrono::steady_clock::now();
  result = op();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::string format_ms(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", ms);
  return buffer;
}

}  // namespace

BenchTable run_bench(const BenchConfig& config) {
  if (config.trials < 1) {
    throw Error("bench needs at least one trial");
  }
  VariableBase base({"x", "y", "z"});
  BenchTable table;
  std::mt19937_64 rng(config.seed);

  for (const auto& descriptor : config.domains) {
    auto domain = domain_from_descriptor(descriptor);
    PolynomialRing sorted(domain, base, Representation::SortedPairs);
    PolynomialRing keyed(domain, base, Representation::KeyedTable);
    for (const auto& operation : config.operations) {
      if (operation != "sum" && operation != "product") {
        throw Error("unknown bench operation: '" + operation + "'");
      }
      for (std::size_t terms : sizes_for(config, *domain)) {
        BenchCell cell{descriptor, operation, terms, 0.0, 0.0};
        std::vector<double> sorted_times;
        std::vector<double> keyed_times;
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
          Polynomial a = random_polynomial(sorted, terms, 5, rng);
          Polynomial b = random_polynomial(sorted, terms, 5, rng);
          Polynomial ak = sorted.convert(a, Representation::KeyedTable);
          Polynomial bk = sorted.convert(b, Representation::KeyedTable);

          Polynomial sorted_result = sorted.zero();
          Polynomial keyed_result = keyed.zero();
          if (operation == "sum") {
            sorted_times.push_back(
                time_ms([&] { return sorted.add(a, b); }, sorted_result));
            keyed_times.push_back(time_ms([&] { return keyed.add(ak, bk); }, keyed_result));
          } else {
            sorted_times.push_back(
                time_ms([&] { return sorted.mul(a, b); }, sorted_result));
            keyed_times.push_back(time_ms([&] { return keyed.mul(ak, bk); }, keyed_result));
          }
          if (!sorted.equal(sorted_result,
                            keyed.convert(keyed_result, Representation::SortedPairs))) {
            throw Error("representation mismatch: " + descriptor + " " + operation + " with " +
                        std::to_string(terms) + " terms, trial " + std::to_string(trial + 1));
          }
        }
        cell.sorted_pairs_ms = config.zero_timings ? 0.0 : median(sorted_times);
        cell.keyed_table_ms = config.zero_timings ? 0.0 : median(keyed_times);
        table.cells.push_back(std::move(cell));
      }
    }
  }
  return table;
}

namespace {

std::string column_name(const BenchCell& cell) {
  return cell.domain + ":" + cell.operation + ":" + std::to_string(cell.terms);
}

}  // namespace

std::string bench_table_text(const BenchTable& table) {
  std::vector<std::size_t> widths;
  std::ostringstream out;
  out << "representation";
  for (const auto& cell : table.cells) {
    const std::string name = column_name(cell);
    widths.push_back(std::max<std::size_t>(name.size(), 8));
    out << "  " << name;
  }
  out << "\n";
  const auto row = [&](const std::string& label, bool keyed) {
    out << label << std::string(14 - label.size(), ' ');
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
      const auto& cell = table.cells[i];
      std::string value = format_ms(keyed ? cell.keyed_table_ms : cell.sorted_pairs_ms);
      out << "  " << value << std::string(value.size() < widths[i] ? widths[i] - value.size() : 0,
                                          ' ');
    }
    out << "\n";
  };
  row("sorted_pairs", false);
  row("keyed_table", true);
  return out.str();
}

std::string bench_table_csv(const BenchTable& table) {
  std::ostringstream out;
  out << "representation";
  for (const auto& cell : table.cells) {
    out << "," << column_name(cell);
  }
  out << "\n";
  out << "sorted_pairs";
  for (const auto& cell : table.cells) {
    out << "," << format_ms(cell.sorted_pairs_ms);
  }
  out << "\n";
  out << "keyed_table";
  for (const auto& cell : table.cells) {
    out << "," << format_ms(cell.keyed_table_ms);
  }
  out << "\n";
  return out.str();
}

std::string bench_table_json(const BenchTable& table) {
  nlohmann::ordered_json j;
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& cell : table.cells) {
    j["columns"].push_back(column_name(cell));
  }
  j["rows"]["sorted_pairs"] = nlohmann::ordered_json::array();
  j["rows"]["keyed_table"] = nlohmann::ordered_json::array();
  for (const auto& cell : table.cells) {
    j["rows"]["sorted_pairs"].push_back(format_ms(cell.sorted_pairs_ms));
    j["rows"]["keyed_table"].push_back(format_ms(cell.keyed_table_ms));
  }
  return j.dump(2) + "\n";
}

}  // namespace polydom
