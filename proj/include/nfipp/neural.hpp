#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nfipp/features.hpp"
#include "nfipp/series.hpp"

namespace nfipp::neural {

// Full-batch gradient-ascent settings. init_scale multiplies the
// 1/sqrt(fan_in) uniform weight-initialization half-width.
struct TrainConfig {
  double learning_rate = 1e-3;
  int epochs = 2000;
  std::uint64_t seed = 0;
  double init_scale = 1.0;
  std::vector<int> hidden = {16, 16};

  bool operator==(const TrainConfig&) const = default;
};

// Feed-forward intensity network: tanh hidden layers, softplus output.
// Inputs are standardized with the training-window statistics stored here.
struct IntensityModel {
  std::vector<int> layer_sizes;              // input D, hidden widths, 1
  std::vector<std::vector<double>> weights;  // per layer, out*in row-major
  std::vector<std::vector<double>> biases;   // per layer, out
  std::vector<double> feature_means;
  std::vector<double> feature_stds;
  std::uint64_t seed = 0;
  TrainConfig config;

  int input_dim() const { return layer_sizes.front(); }
  std::size_t layer_count() const { return weights.size(); }

  // Throws ArgumentError when the dimension chain is inconsistent.
  void validate() const;

  bool operator==(const IntensityModel&) const = default;
};

struct Gradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;
};

struct TrainTrace {
  // Per-epoch objective before that epoch's update: total Poisson
  // log-likelihood, or total squared error for the Gaussian baseline.
  std::vector<double> objective;
  IntensityModel final_model;
};

enum class Objective { poisson_log_likelihood, gaussian_mse };

double softplus(double x);
double softplus_inv(double y);  // inverse on y > 0
double sigmoid(double x);

// Fresh model: weights uniform in +/- init_scale/sqrt(fan_in) from the
// seeded stream, hidden biases zero, output bias set so the initial constant
// intensity equals mean(counts) + 1e-3. Standardization statistics come from
// the given training features (constant columns get unit scale).
IntensityModel init_model(const FeatureMatrix& features,
                          const DailyCountSeries& counts,
                          const TrainConfig& config);

// Intensity for one feature vector. Throws ArgumentError on size mismatch.
double forward(const IntensityModel& model, std::span<const double> features);

// Daily intensities for every row; result start date is the matrix start.
IntensitySeries forward_batch(const IntensityModel& model,
                              const FeatureMatrix& features);

// Total Poisson log-likelihood of counts under the model (includes the
// log-factorial terms, so values are comparable across models).
// Throws AlignmentError when features and counts are misaligned or empty.
double log_likelihood(const IntensityModel& model,
                      const FeatureMatrix& features,
                      const DailyCountSeries& counts);

// Log-likelihood plus its gradient w.r.t. every weight and bias.
double log_likelihood_and_gradient(const IntensityModel& model,
                                   const FeatureMatrix& features,
                                   const DailyCountSeries& counts,
                                   Gradients& out);

// `epochs` full-batch ascent steps on the chosen objective (the Gaussian
// baseline descends on squared error). Deterministic given model and config.
// Throws TrainingDiverged, naming the epoch, when the objective turns
// non-finite.
TrainTrace train(IntensityModel model, const FeatureMatrix& features,
                 const DailyCountSeries& counts, const TrainConfig& config,
                 Objective objective = Objective::poisson_log_likelihood);

// JSON round-trip (17-significant-digit exact).
std::string model_to_json(const IntensityModel& model);
IntensityModel model_from_json(const std::string& text);
void save_model(const IntensityModel& model, const std::string& path);
IntensityModel load_model(const std::string& path);

}  // namespace nfipp::neural
