#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclimit/constants.hpp"

namespace qclimit::report {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class RowStatus { Match, Mismatch, Info };

const char* to_string(RowStatus s);

/// One audited quantity: what we compute, the published value it is held
/// against, and how far apart they are.
struct RegressionRow {
    std::string id;
    std::string description;
    std::string unit;
    double computed = 0.0;
    std::optional<double> paper_value;
    std::optional<double> rel_dev;
    RowStatus status = RowStatus::Info;
    double tolerance = 0.0;
    /// Known, documented discrepancy: the row stays visible as MISMATCH but
    /// does not fail the run.
    bool expected_mismatch = false;
};

struct RegressionReport {
    std::string artifact_version;
    std::string constants_fingerprint;
    std::vector<RegressionRow> rows;

    /// True when some row without the expected_mismatch flag missed its
    /// tolerance; drives the process exit code.
    bool has_unexpected_mismatch() const;
};

/// Recomputes every audited quantity with the given constants.
/// Deterministic: fixed row order, fixed optimizer budget.
RegressionReport run_report(const constants::PhysicalConstants& c);

/// Scientific notation with 12 significant digits, lowercase 'e'.
std::string format_scientific(double v);

std::string to_table(const RegressionReport& r);
std::string to_json(const RegressionReport& r);

} // namespace qclimit::report
