#pragma once

// Monte Carlo sweeps of the correlation/overlap error over one of W, M or L.
//
// Each (grid value, realization) cell gets its own seed hashed from
// (base_seed, value, realization), so the result does not depend on the
// order or the thread in which cells run.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bioclass/analysis.hpp"
#include "bioclass/errors.hpp"
#include "bioclass/random.hpp"
#include "bioclass/reference_family.hpp"

namespace bioclass {

enum class SweepVar { W, M, L };

inline const char* to_string(SweepVar v) noexcept {
  switch (v) {
    case SweepVar::W: return "W";
    case SweepVar::M: return "M";
    case SweepVar::L: return "L";
  }
  return "?";
}

inline std::optional<SweepVar> parse_sweep_var(std::string_view s) {
  if (s == "W") return SweepVar::W;
  if (s == "M") return SweepVar::M;
  if (s == "L") return SweepVar::L;
  return std::nullopt;
}

using SequencePair = std::pair<std::size_t, std::size_t>;

inline std::string format_pair(const SequencePair& p) {
  return std::to_string(p.first) + "-" + std::to_string(p.second);
}

/// Pairs plotted in the figures: mutation, shift, shift+mutation,
/// translocation, partial copy, shared gene.
inline std::vector<SequencePair> default_tracked_pairs() { return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {6, 7}}; }

struct ExperimentParams {
  // Nominal sample count from the figure captions. The reference family always
  // has 8 members; this value is carried for reporting only.
  std::size_t samples = 10;
  std::size_t probes = 0;        // M
  std::size_t probe_length = 0;  // L
  std::size_t width = 0;         // W

  void validate() const {
    if (probes < 2) throw ConfigError("need M >= 2 probes, got " + std::to_string(probes));
    if (probe_length < 1) throw ConfigError("need L >= 1");
    if (width < 6) throw ConfigError("need W >= 6, got " + std::to_string(width));
    if (width < probe_length) {
      throw ConfigError("need W >= L (W=" + std::to_string(width) + ", L=" + std::to_string(probe_length) + ")");
    }
  }
};

struct SweepConfig {
  SweepVar var = SweepVar::W;
  std::vector<std::size_t> grid;
  ExperimentParams fixed;
  std::size_t realizations = 1;
  std::uint64_t base_seed = 42;
  std::vector<SequencePair> tracked_pairs = default_tracked_pairs();

  [[nodiscard]] ExperimentParams at(std::size_t value) const {
    ExperimentParams p = fixed;
    switch (var) {
      case SweepVar::W: p.width = value; break;
      case SweepVar::M: p.probes = value; break;
      case SweepVar::L: p.probe_length = value; break;
    }
    return p;
  }

  void validate() const {
    if (grid.empty()) throw ConfigError("sweep grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] == 0) throw ConfigError("sweep grid values must be positive");
      if (i > 0 && grid[i] <= grid[i - 1]) throw ConfigError("sweep grid must be strictly increasing");
      try {
        at(grid[i]).validate();
      } catch (const ConfigError& e) {
        throw ConfigError("grid point " + std::string(to_string(var)) + "=" + std::to_string(grid[i]) + ": " +
                          e.what());
      }
    }
    if (realizations < 1) throw ConfigError("realizations must be >= 1");
    if (tracked_pairs.empty()) throw ConfigError("no tracked pairs");
    for (const auto& [i, j] : tracked_pairs) {
      if (i >= ReferenceFamily::kSize || j >= ReferenceFamily::kSize) {
        throw ConfigError("tracked pair " + format_pair({i, j}) + " outside the 8-sequence family");
      }
    }
  }
};

struct SweepRow {
  std::size_t value = 0;
  SequencePair pair;
  double mean_error = 0.0;
  double std_error = 0.0;
  std::vector<double> errors;  // per realization, index r

  [[nodiscard]] std::size_t realizations() const noexcept { return errors.size(); }
};

struct SweepResult {
  SweepVar var = SweepVar::W;
  std::vector<SweepRow> rows;  // sorted by (value, pair)

  [[nodiscard]] const SweepRow& row(std::size_t value, const SequencePair& pair) const {
    for (const auto& r : rows) {
      if (r.value == value && r.pair == pair) return r;
    }
    throw IndexError("no sweep row for value " + std::to_string(value) + ", pair " + format_pair(pair));
  }
};

inline constexpr std::uint64_t kFamilyTag = tag("harness/family");
inline constexpr std::uint64_t kProbeTag = tag("harness/probes");

inline std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t value, std::size_t realization) {
  return derive_seed(base_seed, static_cast<std::uint64_t>(value), static_cast<std::uint64_t>(realization));
}

/// One fresh reference family and probe set, then the full similarity report.
inline SimilarityReport run_realization(const ExperimentParams& params, std::uint64_t seed) {
  if (params.width < params.probe_length) {
    throw DomainError("run_realization: W=" + std::to_string(params.width) + " < L=" +
                      std::to_string(params.probe_length));
  }
  RandomStream family_rng(derive_seed(seed, kFamilyTag));
  RandomStream probe_rng(derive_seed(seed, kProbeTag));
  const ReferenceFamily family = reference_family(params.width, family_rng);
  const ProbeSet probes = ProbeSet::random(params.probes, params.probe_length, probe_rng);
  return similarity_report(family, probes, seed);
}

/// Arithmetic mean and sample standard deviation (n - 1), two passes in index order.
inline std::pair<double, double> mean_and_std(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  if (xs.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

/// Runs `count` independent jobs on up to `threads` workers (0 = hardware).
/// The first exception thrown by a job is rethrown after all workers stop.
template <typename Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

inline SweepResult run_sweep(const SweepConfig& config, unsigned threads = 0) {
  config.validate();
  const std::size_t runs = config.realizations;
  const std::size_t cells = config.grid.size() * runs;
  const std::size_t npairs = config.tracked_pairs.size();

  // errors[cell * npairs + pair]
  std::vector<double> errors(cells * npairs, 0.0);
  parallel_for(cells, threads, [&](std::size_t cell) {
    const std::size_t value = config.grid[cell / runs];
    const std::size_t r = cell % runs;
    const SimilarityReport report = run_realization(config.at(value), realization_seed(config.base_seed, value, r));
    for (std::size_t p = 0; p < npairs; ++p) {
      const auto& [i, j] = config.tracked_pairs[p];
      errors[cell * npairs + p] = report.eps(i, j);
    }
  });

  SweepResult result{config.var, {}};
  result.rows.reserve(config.grid.size() * npairs);
  for (std::size_t g = 0; g < config.grid.size(); ++g) {
    for (std::size_t p = 0; p < npairs; ++p) {
      SweepRow row;
      row.value = config.grid[g];
      row.pair = config.tracked_pairs[p];
      row.errors.reserve(runs);
      for (std::size_t r = 0; r < runs; ++r) row.errors.push_back(errors[(g * runs + r) * npairs + p]);
      std::tie(row.mean_error, row.std_error) = mean_and_std(row.errors);
      result.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.value, a.pair) < std::tie(b.value, b.pair);
  });
  return result;
}

enum class Figure { error_vs_width = 1, error_vs_probes = 2, error_vs_probe_length = 3 };

/// Parameter sets of the three published error sweeps.
inline SweepConfig figure_preset(Figure which) {
  SweepConfig c;
  c.fixed.samples = 10;
  switch (which) {
    case Figure::error_vs_width:
      c.var = SweepVar::W;
      c.grid = {50, 100, 150, 200, 250, 300};
      c.fixed.probe_length = 30;
      c.fixed.probes = 500;
      c.fixed.width = 200;
      c.realizations = 40;
      break;
    case Figure::error_vs_probes:
      c.var = SweepVar::M;
      c.grid = {100, 250, 500, 750, 1000};
      c.fixed.probe_length = 20;
      c.fixed.width = 150;
      c.fixed.probes = 500;
      c.realizations = 40;
      break;
    case Figure::error_vs_probe_length:
      c.var = SweepVar::L;
      c.grid = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
      c.fixed.width = 200;
      c.fixed.probes = 1000;
      c.fixed.probe_length = 30;
      c.realizations = 100;
      break;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Output

inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline constexpr const char* kSweepCsvHeader = "sweep_var,value,pair,mean_error,std_error,realizations";

inline void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : result.rows) {
    os << to_string(result.var) << ',' << r.value << ',' << format_pair(r.pair) << ',' << format_real(r.mean_error)
       << ',' << format_real(r.std_error) << ',' << r.realizations() << '\n';
  }
}

/// Same rows, whitespace separated, for gnuplot (`using 2:4` etc.).
inline void write_sweep_plot_data(std::ostream& os, const SweepResult& result) {
  os << "# sweep_var value pair mean_error std_error realizations\n";
  for (const auto& r : result.rows) {
    os << to_string(result.var) << ' ' << r.value << ' ' << format_pair(r.pair) << ' ' << format_real(r.mean_error)
       << ' ' << format_real(r.std_error) << ' ' << r.realizations() << '\n';
  }
}

/// Square matrix with integer row and column headers.
inline void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) os << ',' << j;
  os << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << i;
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << ',' << format_real(m(i, j));
    os << '\n';
  }
}

}  // namespace bioclass
