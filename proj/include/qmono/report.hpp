#pragma once

#include <string>
#include <vector>

namespace qmono {

struct ReportEntry {
    std::string check;
    int n = 0;
    std::string backend;         // "exact" | "numeric"
    std::string representation;  // rep label, "symbolic", "free" or "-"
    std::string status;          // "pass" | "fail" | "skipped"
    std::string equation;        // catalogue tag
    std::string witness;         // non-empty for fail; optional note otherwise
    double wall_ms = 0.0;        // text format only
};

inline bool any_failed(const std::vector<ReportEntry>& entries) {
    for (const auto& e : entries)
        if (e.status == "fail") return true;
    return false;
}

// Stable JSON array; wall time is excluded so reruns are byte-identical.
std::string render_json(const std::vector<ReportEntry>& entries);

// Aligned table including per-entry wall time.
std::string render_text(const std::vector<ReportEntry>& entries);

}  // namespace qmono
