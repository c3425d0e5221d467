#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "bioclass/harness.hpp"

using namespace bioclass;

namespace {

SweepConfig small_sweep() {
  SweepConfig c;
  c.var = SweepVar::W;
  c.grid = {30, 45, 60};
  c.fixed = {10, 60, 8, 0};
  c.realizations = 4;
  c.base_seed = 7;
  return c;
}

}  // namespace

TEST(RunRealization, DeterministicAndSeedSensitive) {
  const ExperimentParams p{10, 50, 8, 40};
  EXPECT_EQ(run_realization(p, 3).error, run_realization(p, 3).error);

  std::set<std::vector<double>> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto e = run_realization(p, seed).error;
    seen.emplace(e.data(), e.data() + e.size());
  }
  EXPECT_EQ(seen.size(), 100U);
}

TEST(RunRealization, RejectsWidthBelowProbeLength) {
  EXPECT_THROW(run_realization({10, 50, 30, 20}, 1), DomainError);
}

TEST(RunSweep, RowLayoutAndBounds) {
  const auto cfg = small_sweep();
  const auto r = run_sweep(cfg, 1);
  ASSERT_EQ(r.rows.size(), cfg.grid.size() * cfg.tracked_pairs.size());
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_LT(std::tie(r.rows[i - 1].value, r.rows[i - 1].pair), std::tie(r.rows[i].value, r.rows[i].pair));
  }
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.realizations(), 4U);
    EXPECT_GE(row.mean_error, 0.0);
    EXPECT_LE(row.mean_error, 2.0);
    EXPECT_GE(row.std_error, 0.0);
  }
}

TEST(RunSweep, AggregatesIndividuallyRunRealizations) {
  const auto cfg = small_sweep();
  const auto r = run_sweep(cfg, 1);
  for (std::size_t value : cfg.grid) {
    std::vector<SimilarityReport> reports;
    for (std::size_t k = 0; k < cfg.realizations; ++k) {
      reports.push_back(run_realization(cfg.at(value), realization_seed(cfg.base_seed, value, k)));
    }
    for (const auto& pair : cfg.tracked_pairs) {
      const auto& row = r.row(value, pair);
      double sum = 0;
      for (std::size_t k = 0; k < reports.size(); ++k) {
        EXPECT_EQ(row.errors[k], reports[k].eps(pair.first, pair.second));
        sum += reports[k].eps(pair.first, pair.second);
      }
      const double mean = sum / static_cast<double>(reports.size());
      double ss = 0;
      for (const auto& rep : reports) ss += std::pow(rep.eps(pair.first, pair.second) - mean, 2);
      EXPECT_EQ(row.mean_error, mean);
      EXPECT_EQ(row.std_error, std::sqrt(ss / static_cast<double>(reports.size() - 1)));
    }
  }
}

TEST(RunSweep, SingleRealizationHasZeroSpread) {
  auto cfg = small_sweep();
  cfg.realizations = 1;
  const auto r = run_sweep(cfg, 1);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.std_error, 0.0);
    EXPECT_EQ(row.mean_error, row.errors.front());
  }
}

TEST(RunSweep, IndependentOfThreadCount) {
  const auto cfg = small_sweep();
  std::ostringstream a, b;
  write_sweep_csv(a, run_sweep(cfg, 1));
  write_sweep_csv(b, run_sweep(cfg, 5));
  EXPECT_EQ(a.str(), b.str());
}

TEST(RunSweep, GridValueSeedsDoNotDependOnGridShape) {
  auto cfg = small_sweep();
  const auto full = run_sweep(cfg, 1);
  cfg.grid = {45};
  const auto single = run_sweep(cfg, 1);
  for (const auto& pair : cfg.tracked_pairs) EXPECT_EQ(full.row(45, pair).errors, single.row(45, pair).errors);
}

TEST(RunSweep, InvalidConfigsRejectedBeforeRunning) {
  auto cfg = small_sweep();
  cfg.grid = {30, 5};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  cfg.grid = {};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  cfg = small_sweep();
  cfg.var = SweepVar::L;
  cfg.fixed.width = 20;
  cfg.grid = {5, 10, 25};  // L=25 > W=20
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  cfg = small_sweep();
  cfg.realizations = 0;
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  cfg = small_sweep();
  cfg.tracked_pairs = {{0, 8}};
  EXPECT_THROW(run_sweep(cfg), ConfigError);
}

TEST(FigurePreset, CaptionParameters) {
  const auto f1 = figure_preset(Figure::error_vs_width);
  EXPECT_EQ(f1.var, SweepVar::W);
  EXPECT_EQ(f1.realizations, 40U);
  EXPECT_EQ(f1.fixed.probe_length, 30U);
  EXPECT_EQ(f1.fixed.probes, 500U);
  EXPECT_EQ(f1.fixed.samples, 10U);
  EXPECT_EQ(f1.grid, (std::vector<std::size_t>{50, 100, 150, 200, 250, 300}));

  const auto f2 = figure_preset(Figure::error_vs_probes);
  EXPECT_EQ(f2.var, SweepVar::M);
  EXPECT_EQ(f2.realizations, 40U);
  EXPECT_EQ(f2.fixed.width, 150U);
  EXPECT_EQ(f2.fixed.probe_length, 20U);
  EXPECT_EQ(f2.grid, (std::vector<std::size_t>{100, 250, 500, 750, 1000}));

  const auto f3 = figure_preset(Figure::error_vs_probe_length);
  EXPECT_EQ(f3.var, SweepVar::L);
  EXPECT_EQ(f3.realizations, 100U);
  EXPECT_EQ(f3.fixed.width, 200U);
  EXPECT_EQ(f3.fixed.probes, 1000U);
  EXPECT_EQ(f3.grid.size(), 10U);
  EXPECT_EQ(f3.grid.front(), 5U);
  EXPECT_EQ(f3.grid.back(), 50U);

  for (auto f : {f1, f2, f3}) EXPECT_NO_THROW(f.validate());
}

TEST(SweepCsv, ExactSchema) {
  SweepResult r{SweepVar::M, {}};
  SweepRow row;
  row.value = 250;
  row.pair = {0, 4};
  row.errors = {0.1, 0.2};
  std::tie(row.mean_error, row.std_error) = mean_and_std(row.errors);
  r.rows.push_back(row);
  std::ostringstream os;
  write_sweep_csv(os, r);
  EXPECT_EQ(os.str(),
            "sweep_var,value,pair,mean_error,std_error,realizations\n"
            "M,250,0-4,0.15,0.0707107,2\n");
  std::ostringstream plot;
  write_sweep_plot_data(plot, r);
  EXPECT_EQ(plot.str(), "# sweep_var value pair mean_error std_error realizations\nM 250 0-4 0.15 0.0707107 2\n");
}

TEST(MatrixCsv, IntegerHeaders) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0.5, 0.5, 1;
  std::ostringstream os;
  write_matrix_csv(os, m);
  EXPECT_EQ(os.str(), ",0,1\n0,1,0.5\n1,0.5,1\n");
}
