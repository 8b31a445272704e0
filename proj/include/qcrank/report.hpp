#pragma once

#include "qcrank/verifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcrank {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::optional<Exponent> order_override;  ///< --order, when given
    std::vector<CheckResult> checks;
    double wall_clock_ms = 0;

    /// pass iff every non-skipped check passed.
    bool overall_pass() const;
};

std::string render_report(const ReportDocument& doc);

/// Reads a rendered report back. Unknown fields are ignored.
ReportDocument parse_report(const std::string& text);

} // namespace qcrank
