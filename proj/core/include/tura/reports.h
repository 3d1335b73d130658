#pragma once

#include <string>

#include "tura/correlation.h"
#include "tura/importance.h"
#include "tura/search.h"
#include "tura/validation.h"

// JSON and plain-text renderings of learner outputs. All renderings are
// deterministic: no timestamps, fixed key order, fixed float formatting.
namespace tura::reports {

std::string evaluation_json(const EvaluationReport& report);
std::string evaluation_text(const EvaluationReport& report);

std::string search_json(const SearchResult& result);

std::string importance_json(const ImportanceReport& report);
// Plot-ready: feature,group,score,stddev sorted by score descending.
std::string importance_csv(const ImportanceReport& report);

std::string correlation_json(const CorrelationReport& report, std::size_t top);
// Group | Feature | rho, top N rows.
std::string correlation_text(const CorrelationReport& report, std::size_t top);

std::string spec_json(const ModelSpec& spec);

}  // namespace tura::reports
