#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tura/features.h"
#include "tura/model.h"

namespace tura {

struct FeatureScore {
  std::string feature;
  FeatureGroup group = FeatureGroup::TRAD;
  double score = 0.0;
  double stddev = 0.0;  // permutation only
};

struct ImportanceReport {
  std::string method;  // "mdi" or "permutation"
  double baseline_accuracy = 0.0;
  int repeats = 0;
  std::vector<FeatureScore> scores;  // model schema order
};

// Random forest models only.
ImportanceReport mdi_report(const TrainedModel& model);

// Mean accuracy drop over `repeats` seeded shuffles of each column. Rows of
// `eval` must not overlap the model's training documents.
ImportanceReport permutation_importance(const TrainedModel& model,
                                        const FeatureMatrix& eval, int repeats,
                                        std::uint64_t seed);

}  // namespace tura
