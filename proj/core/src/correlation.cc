#include "tura/correlation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tura/errors.h"

namespace tura {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

SpearmanResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("spearman inputs differ in length");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return {0.0, true};
  return {sxy / std::sqrt(sxx * syy), false};
}

CorrelationReport spearman_correlation(const FeatureMatrix& matrix) {
  if (matrix.rows.size() < 3) throw Error("correlation needs at least 3 rows");
  CorrelationReport report;
  for (std::size_t j = 0; j < matrix.schema.size(); ++j) {
    std::vector<double> x, y;
    for (const auto& row : matrix.rows) {
      if (row.absent[j]) continue;
      x.push_back(row.values[j]);
      y.push_back(ordinal(row.level));
    }
    CorrelationEntry e;
    e.feature = matrix.schema.features[j].name;
    e.group = matrix.schema.features[j].group;
    e.rows = x.size();
    if (x.size() < 3) {
      e.zero_variance = true;
    } else {
      const auto r = spearman(x, y);
      e.rho = r.rho;
      e.zero_variance = r.zero_variance;
    }
    report.entries.push_back(std::move(e));
  }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const CorrelationEntry& a, const CorrelationEntry& b) {
                     const double fa = std::fabs(a.rho), fb = std::fabs(b.rho);
                     if (fa != fb) return fa > fb;
                     return a.feature < b.feature;
                   });
  return report;
}

}  // namespace tura
