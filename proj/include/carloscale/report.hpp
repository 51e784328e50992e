// Presentation layer: scale reports, table/csv/json rendering.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "carloscale/analysis.hpp"

namespace carloscale {

struct ResidualEntry {
    std::string interval;
    int steps = 0;
    double cents_dev = 0.0;

    friend bool operator==(const ResidualEntry&, const ResidualEntry&) = default;
};

struct ReportFlags {
    bool gcd_trivial = false;
    bool inversion_pair_warning = false;

    friend bool operator==(const ReportFlags&, const ReportFlags&) = default;
};

// A derived scale ready for output. Serializes losslessly to JSON: every
// numeric field survives a round trip at full double precision.
struct ScaleReport {
    std::string label;
    std::vector<int> params;
    double unit_cents = 0.0;
    std::vector<ResidualEntry> residuals;
    OctaveFit octave;
    ReportFlags flags;

    friend bool operator==(const ScaleReport&, const ScaleReport&) = default;
};

ScaleReport make_report(const DerivedScale& scale, std::vector<int> params = {});
ScaleReport make_report(const SearchHit& hit);

enum class ReportFormat { table, csv, json };

// Accepts "table", "csv" or "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view text);

// Table columns: params, unit size, one deviation column per interval,
// units per octave, nearest step count, octave deviation, notes. Table
// cells use 3 decimal places (2 for units per octave) with explicit signs
// on deviations; csv and json carry full precision. Throws
// std::invalid_argument on an empty report list.
std::string render_table(const std::vector<ScaleReport>& reports, ReportFormat format);

std::string to_json_string(const std::vector<ScaleReport>& reports);
std::vector<ScaleReport> reports_from_json(const std::string& text);

}  // namespace carloscale
