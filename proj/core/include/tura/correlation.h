#pragma once

#include <span>
#include <string>
#include <vector>

#include "tura/features.h"

namespace tura {

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0.0;
  bool zero_variance = false;  // rho reported as 0
};

SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationEntry {
  std::string feature;
  FeatureGroup group = FeatureGroup::TRAD;
  double rho = 0.0;
  bool zero_variance = false;
  std::size_t rows = 0;
};

struct CorrelationReport {
  std::vector<CorrelationEntry> entries;  // |rho| descending, then name
};

// Spearman rho of every feature against the level ordinal, using the rows
// where that feature is not masked. Needs at least 3 rows.
CorrelationReport spearman_correlation(const FeatureMatrix& matrix);

}  // namespace tura
