#include "tura/logreg.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "tura/errors.h"

namespace tura {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void softmax_inplace(std::vector<double>& z) {
  const double top = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (auto& v : z) {
    v = std::exp(v - top);
    sum += v;
  }
  for (auto& v : z) v /= sum;
}

}  // namespace

double logreg_objective(std::span<const double> params, const Dataset& data, double lambda,
                        std::vector<double>* gradient) {
  const auto k = static_cast<std::size_t>(data.classes);
  const std::size_t p = data.cols;
  const std::span<const double> w = params.subspan(0, k * p);
  const std::span<const double> b = params.subspan(k * p, k);
  if (gradient != nullptr) gradient->assign(params.size(), 0.0);

  double loss = 0.0;
  std::vector<double> z(k);
  const double inv_n = 1.0 / static_cast<double>(data.rows);
  for (std::size_t r = 0; r < data.rows; ++r) {
    const auto x = data.row(r);
    for (std::size_t c = 0; c < k; ++c) z[c] = dot(w.subspan(c * p, p), x) + b[c];
    const double top = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - top);
    const auto label = static_cast<std::size_t>(data.y[r]);
    loss += (top + std::log(sum) - z[label]) * inv_n;
    if (gradient != nullptr) {
      for (std::size_t c = 0; c < k; ++c) {
        const double prob = std::exp(z[c] - top) / sum;
        const double err = (prob - (c == label ? 1.0 : 0.0)) * inv_n;
        double* gw = gradient->data() + c * p;
        for (std::size_t j = 0; j < p; ++j) gw[j] += err * x[j];
        (*gradient)[k * p + c] += err;
      }
    }
  }
  loss += 0.5 * lambda * dot(w, w);
  if (gradient != nullptr) {
    for (std::size_t i = 0; i < k * p; ++i) (*gradient)[i] += lambda * w[i];
  }
  return loss;
}

std::vector<double> LogisticRegressionModel::predict_proba(std::span<const double> row) const {
  std::vector<double> z(classes);
  for (int c = 0; c < classes; ++c) {
    double s = bias[c];
    for (std::size_t j = 0; j < features; ++j) {
      s += weights[c * features + j] * (row[j] - mean[j]) / scale[j];
    }
    z[c] = s;
  }
  softmax_inplace(z);
  return z;
}

int LogisticRegressionModel::predict(std::span<const double> row) const {
  const auto p = predict_proba(row);
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

LogisticRegressionModel train_logreg(const Dataset& data, const LogRegParams& params,
                                     std::uint64_t /*seed*/) {
  if (data.rows == 0) throw TrainingError("empty training matrix");
  if (params.l2_lambda < 0) throw TrainingError("l2_lambda must be non-negative");
  std::vector<int> present(data.classes, 0);
  for (int label : data.y) {
    if (label < 0 || label >= data.classes) throw TrainingError("label out of range");
    present[label] = 1;
  }
  if (std::count(present.begin(), present.end(), 1) < 2) {
    throw TrainingError("training data needs at least two classes");
  }

  LogisticRegressionModel model;
  model.classes = data.classes;
  model.features = data.cols;
  model.params = params;
  model.mean.assign(data.cols, 0.0);
  model.scale.assign(data.cols, 1.0);
  for (std::size_t j = 0; j < data.cols; ++j) {
    double s = 0.0;
    for (std::size_t r = 0; r < data.rows; ++r) s += data.at(r, j);
    const double m = s / data.rows;
    double v = 0.0;
    for (std::size_t r = 0; r < data.rows; ++r) v += (data.at(r, j) - m) * (data.at(r, j) - m);
    const double sd = std::sqrt(v / data.rows);
    model.mean[j] = m;
    model.scale[j] = sd > 0 ? sd : 1.0;
  }
  Dataset standardized = data;
  for (std::size_t r = 0; r < data.rows; ++r) {
    for (std::size_t j = 0; j < data.cols; ++j) {
      standardized.x[r * data.cols + j] = (data.at(r, j) - model.mean[j]) / model.scale[j];
    }
  }

  // L-BFGS with Armijo backtracking.
  const std::size_t dim = static_cast<std::size_t>(data.classes) * (data.cols + 1);
  constexpr std::size_t kHistory = 10;
  std::vector<double> x(dim, 0.0), g, x_new(dim), g_new, direction(dim);
  double f = logreg_objective(x, standardized, params.l2_lambda, &g);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  int iter = 0;
  double gnorm = norm(g);
  while (gnorm >= params.tol && iter < params.max_iter) {
    // Two-loop recursion.
    direction = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      alpha[i] = rho_hist[i] * dot(s_hist[i], direction);
      for (std::size_t d = 0; d < dim; ++d) direction[d] -= alpha[i] * y_hist[i][d];
    }
    double gamma = 1.0 / std::max(gnorm, 1.0);
    if (!s_hist.empty()) {
      gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
    }
    for (auto& v : direction) v *= gamma;
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * dot(y_hist[i], direction);
      for (std::size_t d = 0; d < dim; ++d) direction[d] += (alpha[i] - beta) * s_hist[i][d];
    }
    for (auto& v : direction) v = -v;

    double slope = dot(g, direction);
    if (slope >= 0) {
      // Not a descent direction; restart from steepest descent.
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t d = 0; d < dim; ++d) direction[d] = -g[d] / std::max(gnorm, 1.0);
      slope = dot(g, direction);
    }

    double step = 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      for (std::size_t d = 0; d < dim; ++d) x_new[d] = x[d] + step * direction[d];
      f_new = logreg_objective(x_new, standardized, params.l2_lambda, &g_new);
      if (f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    ++iter;
    if (!accepted) break;

    std::vector<double> s(dim), yv(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      s[d] = x_new[d] - x[d];
      yv[d] = g_new[d] - g[d];
    }
    const double sy = dot(s, yv);
    if (sy > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > kHistory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    gnorm = norm(g);
  }

  const std::size_t kp = static_cast<std::size_t>(data.classes) * data.cols;
  model.weights.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(kp));
  model.bias.assign(x.begin() + static_cast<std::ptrdiff_t>(kp), x.end());
  model.iterations = iter;
  model.gradient_norm = gnorm;
  model.converged = gnorm < params.tol;
  return model;
}

}  // namespace tura
