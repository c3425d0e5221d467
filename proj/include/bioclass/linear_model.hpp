#pragma once

// Linear opinion model: individuals hold hidden taste vectors, products hold
// feature vectors, and an opinion is a scaled scalar product of the two.
// Opinions are anticipated from row correlations of the opinion matrix.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "bioclass/correlation.hpp"
#include "bioclass/errors.hpp"
#include "bioclass/random.hpp"

namespace bioclass::linear {

struct ModelConfig {
  Eigen::Index individuals = 0;  // M
  Eigen::Index products = 0;     // N
  Eigen::Index dimensions = 0;   // L
  double lambda = 0.0;
  double component_range = 1.0;
  std::uint64_t base_seed = 0;

  /// Components uniform on [-1, 1] and lambda = 1/L.
  static ModelConfig uniform(Eigen::Index m, Eigen::Index n, Eigen::Index l, std::uint64_t seed) {
    return {m, n, l, l > 0 ? 1.0 / static_cast<double>(l) : 0.0, 1.0, seed};
  }

  void validate() const {
    if (individuals < 1 || products < 1 || dimensions < 1) {
      throw ConfigError("ModelConfig: M, N and L must all be >= 1 (got M=" + std::to_string(individuals) +
                        ", N=" + std::to_string(products) + ", L=" + std::to_string(dimensions) + ")");
    }
    if (!(lambda > 0.0)) throw ConfigError("ModelConfig: lambda must be > 0");
    if (!(component_range > 0.0)) throw ConfigError("ModelConfig: component_range must be > 0");
  }

  /// Second moment of a component, uniform on [-r, r]: r^2 / 3.
  [[nodiscard]] double component_second_moment() const { return component_range * component_range / 3.0; }
};

// One vector per row.
struct Population {
  Eigen::MatrixXd tastes;    // M x L
  Eigen::MatrixXd features;  // N x L
};

struct OpinionMatrix {
  Eigen::MatrixXd values;  // M x N
};

inline constexpr std::uint64_t kTasteTag = tag("linear/tastes");
inline constexpr std::uint64_t kFeatureTag = tag("linear/features");

inline Population generate_population(const ModelConfig& config) {
  config.validate();
  const double r = config.component_range;
  auto fill = [&](Eigen::Index count, std::uint64_t purpose) {
    Eigen::MatrixXd out(count, config.dimensions);
    for (Eigen::Index v = 0; v < count; ++v) {
      RandomStream rng(derive_seed(config.base_seed, purpose, static_cast<std::uint64_t>(v)));
      for (Eigen::Index c = 0; c < config.dimensions; ++c) out(v, c) = rng.uniform(-r, r);
    }
    return out;
  };
  return {fill(config.individuals, kTasteTag), fill(config.products, kFeatureTag)};
}

inline OpinionMatrix opinion_matrix(const Population& pop, double lambda) {
  if (pop.tastes.cols() != pop.features.cols()) {
    throw DimensionError("opinion_matrix: taste and feature vectors differ in length");
  }
  return {lambda * (pop.tastes * pop.features.transpose())};
}

/// Anticipated opinion of individual m on product n: (k/M) * sum_i C(m,i) S(i,n).
inline double predict(const CorrelationMatrix& c, const OpinionMatrix& s, Eigen::Index m, Eigen::Index n, double k) {
  const Eigen::Index rows = s.values.rows();
  if (c.size() != rows || c.values.cols() != rows) {
    throw DimensionError("predict: correlation matrix must be M x M for an M x N opinion matrix");
  }
  if (m < 0 || m >= rows || n < 0 || n >= s.values.cols()) {
    throw IndexError("predict: index (" + std::to_string(m) + ", " + std::to_string(n) + ") out of range");
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rows; ++i) acc += c(m, i) * s.values(i, n);
  return k / static_cast<double>(rows) * acc;
}

/// All anticipated opinions at once.
inline OpinionMatrix predict_all(const CorrelationMatrix& c, const OpinionMatrix& s, double k) {
  const Eigen::Index rows = s.values.rows();
  if (c.size() != rows) throw DimensionError("predict_all: correlation matrix must be M x M");
  return {(k / static_cast<double>(rows)) * (c.values * s.values)};
}

enum class KPolicy { dimensions, range_calibrated };

/// Rescales k so the predictions span the same interval as the observations:
/// k * max|S| / max|S~|.
inline double range_calibrate(double k, const OpinionMatrix& observed, const OpinionMatrix& predicted) {
  const double pmax = predicted.values.cwiseAbs().maxCoeff();
  if (pmax == 0.0) return k;
  return k * observed.values.cwiseAbs().maxCoeff() / pmax;
}

/// Default: k = L. Range-calibrated: k chosen from the data with k = 1 as the
/// starting point.
inline double choose_k(const ModelConfig& config) { return static_cast<double>(config.dimensions); }

inline double choose_k(const ModelConfig& config, KPolicy policy, const CorrelationMatrix& c, const OpinionMatrix& s) {
  if (policy == KPolicy::dimensions) return choose_k(config);
  return range_calibrate(1.0, s, predict_all(c, s, 1.0));
}

inline double empirical_error(const OpinionMatrix& s, const OpinionMatrix& predicted) {
  if (s.values.rows() != predicted.values.rows() || s.values.cols() != predicted.values.cols()) {
    throw DimensionError("empirical_error: matrices differ in shape");
  }
  const auto count = static_cast<double>(s.values.size());
  return std::sqrt((predicted.values - s.values).squaredNorm() / count);
}

/// lambda * sqrt(<a^2><b^2>) for components uniform on [-range, range].
inline double gamma(const ModelConfig& config) {
  const double moment = config.component_second_moment();
  return config.lambda * std::sqrt(moment * moment);
}

/// Order-of-magnitude law for the prediction error:
/// gamma * L^{3/2} * (sqrt(M) + sqrt(N)) / sqrt(M N).
inline double theoretical_error(double l, double m, double n, double gamma) {
  return gamma * std::pow(l, 1.5) * (std::sqrt(m) + std::sqrt(n)) / std::sqrt(m * n);
}

struct Thresholds {
  double percolation;  // p1 = 1 / (M - 1)
  double rigidity;     // p2 = 2L / M
};

inline Thresholds mz_thresholds(Eigen::Index m, Eigen::Index l) {
  if (m < 2) throw DomainError("mz_thresholds: need M >= 2");
  const auto dm = static_cast<double>(m);
  return {1.0 / (dm - 1.0), 2.0 * static_cast<double>(l) / dm};
}

/// One full pass: population, opinions, correlations, predictions.
struct Experiment {
  ModelConfig config;
  OpinionMatrix opinions;
  CorrelationMatrix correlation;
  OpinionMatrix predictions;
  double k = 0.0;
  double empirical = 0.0;
  double theoretical = 0.0;

  [[nodiscard]] double ratio() const { return empirical / theoretical; }
};

inline Experiment run_experiment(const ModelConfig& config, KPolicy policy = KPolicy::dimensions) {
  Experiment ex{config, {}, {}, {}, 0.0, 0.0, 0.0};
  ex.opinions = opinion_matrix(generate_population(config), config.lambda);
  ex.correlation = row_correlation(ex.opinions.values);
  ex.k = choose_k(config, policy, ex.correlation, ex.opinions);
  ex.predictions = predict_all(ex.correlation, ex.opinions, ex.k);
  ex.empirical = empirical_error(ex.opinions, ex.predictions);
  ex.theoretical = theoretical_error(static_cast<double>(config.dimensions), static_cast<double>(config.individuals),
                                     static_cast<double>(config.products), gamma(config));
  return ex;
}

}  // namespace bioclass::linear
