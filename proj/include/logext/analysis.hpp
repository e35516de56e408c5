#ifndef LOGEXT_ANALYSIS_HPP
#define LOGEXT_ANALYSIS_HPP

#include <optional>
#include <string>

#include "logext/classify.hpp"
#include "logext/mmp.hpp"

namespace logext {

/// Full pipeline result: discrepancies, classification, tame-order
/// search trace and the extension verdicts, with audit citations.
struct AnalysisReport {
    std::string input_digest;
    long p;
    SearchMode mode;
    DiscrepancyReport disc;
    std::optional<ClassifyResult> cls;  // absent for non-lc input
    std::optional<LcRationale> rationale;
    std::optional<TameOrder> trace;  // successful search only
    bool search_capped = false;
    ExtensionVerdict verdicts;
    std::vector<std::string> citations;
};

// Throws LatticeError when the graph is not negative definite. Non-lc
// graphs yield a report (callers map that to exit code 1).
AnalysisReport run_analysis(const DualGraph& g, long p, SearchMode mode);

// Stable renderings; byte-deterministic for identical inputs.
std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string graph_digest(const DualGraph& g);

}  // namespace logext

#endif
