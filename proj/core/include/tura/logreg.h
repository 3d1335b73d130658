#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tura/dataset.h"

namespace tura {

struct LogRegParams {
  double l2_lambda = 1.0;
  int max_iter = 1000;
  double tol = 1e-6;

  bool operator==(const LogRegParams&) const = default;
};

struct LogisticRegressionModel {
  int classes = 3;
  std::size_t features = 0;
  std::vector<double> weights;  // classes x features, row-major
  std::vector<double> bias;     // classes
  std::vector<double> mean;     // standardization, from the training rows
  std::vector<double> scale;
  LogRegParams params;
  int iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;

  std::vector<double> predict_proba(std::span<const double> row) const;
  int predict(std::span<const double> row) const;
  bool operator==(const LogisticRegressionModel&) const = default;
};

// Mean multinomial cross-entropy plus (lambda / 2) * ||W||^2 (bias is not
// penalized). `params` holds W row-major followed by the bias vector; the
// data is used as given (no standardization). Writes the gradient when
// `gradient` is non-null.
double logreg_objective(std::span<const double> params, const Dataset& data,
                        double lambda, std::vector<double>* gradient);

// Standardizes with training mean / standard deviation, then minimizes the
// objective with L-BFGS until the gradient norm drops below tol or max_iter
// is reached (converged = false in that case).
LogisticRegressionModel train_logreg(const Dataset& data, const LogRegParams& params,
                                     std::uint64_t seed = 0);

}  // namespace tura
