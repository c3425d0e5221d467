#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>

#include "bioclass/correlation.hpp"
#include "bioclass/errors.hpp"
#include "bioclass/kmer.hpp"
#include "bioclass/match_kernel.hpp"
#include "bioclass/reference_family.hpp"

namespace bioclass {

struct ReportParams {
  std::size_t samples = 0;  // N
  std::size_t probes = 0;   // M
  std::size_t probe_length = 0;  // L
  std::size_t width = 0;    // W
  std::uint64_t seed = 0;
};

/// Observable similarity C, ground-truth overlap Omega, and Eps = |C - Omega|.
struct SimilarityReport {
  Eigen::MatrixXd correlation;
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd error;
  std::vector<std::size_t> zero_variance_samples;
  ReportParams params;

  [[nodiscard]] double eps(std::size_t i, std::size_t j) const {
    return error(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
};

/// Pearson correlation between the probe-match vectors of every pair of samples.
inline CorrelationMatrix sample_correlation(const MatchMatrix& m) {
  if (m.rows() < 2 || m.cols() < 2) throw DimensionError("sample_correlation: need N >= 2 and M >= 2");
  return row_correlation(m);
}

inline Eigen::MatrixXd overlap_matrix(const SampleSet& samples, std::size_t l) {
  const auto n = static_cast<Eigen::Index>(samples.count());
  Eigen::MatrixXd omega(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = overlap(samples[static_cast<std::size_t>(i)], samples[static_cast<std::size_t>(j)], l);
      omega(i, j) = v;
      omega(j, i) = v;
    }
  }
  return omega;
}

/// Builds a report from an already-computed correlation and overlap pair.
inline SimilarityReport make_report(CorrelationMatrix c, Eigen::MatrixXd omega, ReportParams params) {
  if (c.values.rows() != omega.rows() || c.values.cols() != omega.cols()) {
    throw DimensionError("make_report: C and Omega differ in shape");
  }
  Eigen::MatrixXd eps = (c.values - omega).cwiseAbs();
  return {std::move(c.values), std::move(omega), std::move(eps), std::move(c.zero_variance_rows), params};
}

inline SimilarityReport similarity_report(const SampleSet& samples, const ProbeSet& probes, std::uint64_t seed = 0) {
  if (probes.length() > samples.length()) {
    throw DomainError("similarity_report: probe length L=" + std::to_string(probes.length()) +
                      " exceeds sample length W=" + std::to_string(samples.length()));
  }
  const ReportParams params{samples.count(), probes.count(), probes.length(), samples.length(), seed};
  return make_report(sample_correlation(match_matrix(samples, probes)), overlap_matrix(samples, probes.length()),
                     params);
}

inline SimilarityReport similarity_report(const ReferenceFamily& family, const ProbeSet& probes,
                                          std::uint64_t seed = 0) {
  return similarity_report(family.samples(), probes, seed);
}

}  // namespace bioclass
