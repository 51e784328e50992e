#include "carloscale/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace carloscale {

namespace {

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

std::string param_text(const std::vector<int>& params) {
    if (params.empty())
        return "-";
    std::string text = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            text += ",";
        text += std::to_string(params[i]);
    }
    return text + ")";
}

std::string notes_text(const ScaleReport& report) {
    std::string notes;
    if (report.label == "(4,5)-Carlos")
        notes = "alpha scale";
    else if (report.label == "(5,6)-Carlos")
        notes = "beta scale";
    else if (report.label == "(9,11)-Carlos")
        notes = "gamma scale";
    if (report.flags.gcd_trivial)
        notes += notes.empty() ? "gcd-trivial" : ", gcd-trivial";
    if (report.flags.inversion_pair_warning)
        notes += notes.empty() ? "inversion pair" : ", inversion pair";
    return notes;
}

bool has_inversion_pair(const TargetSystem& system) {
    const Ratio octave(2, 1);
    for (std::size_t i = 0; i < system.targets.size(); ++i) {
        for (std::size_t j = i + 1; j < system.targets.size(); ++j) {
            try {
                if (system.targets[i].interval.ratio * system.targets[j].interval.ratio == octave)
                    return true;
            } catch (const std::overflow_error&) {
                // product far beyond an octave, not an inversion pair
            }
        }
    }
    return false;
}

// Column plan shared by table and csv: one column per (interval name,
// occurrence within its report), in first-seen order.
struct DevColumn {
    std::string name;
    int occurrence = 0;
    std::string header;
};

std::vector<DevColumn> plan_columns(const std::vector<ScaleReport>& reports) {
    std::vector<DevColumn> columns;
    for (const ScaleReport& report : reports) {
        std::vector<std::string> seen;
        for (const ResidualEntry& entry : report.residuals) {
            const int occurrence = static_cast<int>(std::count(seen.begin(), seen.end(), entry.interval));
            seen.push_back(entry.interval);
            const bool planned = std::any_of(columns.begin(), columns.end(), [&](const DevColumn& c) {
                return c.name == entry.interval && c.occurrence == occurrence;
            });
            if (!planned) {
                DevColumn column{entry.interval, occurrence, entry.interval + " dev"};
                if (occurrence > 0)
                    column.header += " #" + std::to_string(occurrence + 1);
                columns.push_back(std::move(column));
            }
        }
    }
    return columns;
}

const ResidualEntry* find_residual(const ScaleReport& report, const DevColumn& column) {
    int occurrence = 0;
    for (const ResidualEntry& entry : report.residuals) {
        if (entry.interval != column.name)
            continue;
        if (occurrence == column.occurrence)
            return &entry;
        ++occurrence;
    }
    return nullptr;
}

std::string render_plain_table(const std::vector<ScaleReport>& reports) {
    const std::vector<DevColumn> columns = plan_columns(reports);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"params", "unit size"};
    for (const DevColumn& column : columns)
        header.push_back(column.header);
    header.insert(header.end(), {"units per octave", "steps", "octave dev", "notes"});
    rows.push_back(std::move(header));

    for (const ScaleReport& report : reports) {
        std::vector<std::string> row;
        row.push_back(param_text(report.params));
        row.push_back(fmt("%.3f", report.unit_cents));
        for (const DevColumn& column : columns) {
            const ResidualEntry* entry = find_residual(report, column);
            row.push_back(entry ? fmt("%+.3f", entry->cents_dev) : "");
        }
        row.push_back(fmt("%.2f", report.octave.exact_units));
        row.push_back(std::to_string(report.octave.nearest_steps));
        row.push_back(fmt("%+.3f", report.octave.deviation_cents));
        row.push_back(notes_text(report));
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += "  ";
            // left-align the first and last columns, right-align numbers
            if (i == 0 || i + 1 == row.size()) {
                out += row[i];
                if (i + 1 != row.size())
                    out += std::string(widths[i] - row[i].size(), ' ');
            } else {
                out += std::string(widths[i] - row[i].size(), ' ');
                out += row[i];
            }
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        out += "\n";
    }
    return out;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string render_csv(const std::vector<ScaleReport>& reports) {
    const std::vector<DevColumn> columns = plan_columns(reports);
    std::string out = "label,params,unit_cents";
    for (const DevColumn& column : columns)
        out += "," + csv_escape(column.header);
    out += ",exact_units,nearest_steps,octave_deviation_cents,gcd_trivial,inversion_pair_warning\n";

    for (const ScaleReport& report : reports) {
        out += csv_escape(report.label);
        out += "," + csv_escape(param_text(report.params));
        out += "," + fmt("%.17g", report.unit_cents);
        for (const DevColumn& column : columns) {
            const ResidualEntry* entry = find_residual(report, column);
            out += ",";
            if (entry)
                out += fmt("%.17g", entry->cents_dev);
        }
        out += "," + fmt("%.17g", report.octave.exact_units);
        out += "," + std::to_string(report.octave.nearest_steps);
        out += "," + fmt("%.17g", report.octave.deviation_cents);
        out += report.flags.gcd_trivial ? ",true" : ",false";
        out += report.flags.inversion_pair_warning ? ",true" : ",false";
        out += "\n";
    }
    return out;
}

nlohmann::json to_json(const ScaleReport& report) {
    nlohmann::json residuals = nlohmann::json::array();
    for (const ResidualEntry& entry : report.residuals)
        residuals.push_back({{"interval", entry.interval},
                             {"steps", entry.steps},
                             {"cents_dev", entry.cents_dev}});
    return {{"label", report.label},
            {"params", report.params},
            {"unit_cents", report.unit_cents},
            {"residuals", residuals},
            {"octave",
             {{"exact_units", report.octave.exact_units},
              {"nearest_steps", report.octave.nearest_steps},
              {"deviation_cents", report.octave.deviation_cents}}},
            {"flags",
             {{"gcd_trivial", report.flags.gcd_trivial},
              {"inversion_pair_warning", report.flags.inversion_pair_warning}}}};
}

ScaleReport report_from(const nlohmann::json& j) {
    ScaleReport report;
    report.label = j.at("label").get<std::string>();
    report.params = j.at("params").get<std::vector<int>>();
    report.unit_cents = j.at("unit_cents").get<double>();
    for (const auto& item : j.at("residuals"))
        report.residuals.push_back({item.at("interval").get<std::string>(),
                                    item.at("steps").get<int>(),
                                    item.at("cents_dev").get<double>()});
    const auto& octave = j.at("octave");
    report.octave.exact_units = octave.at("exact_units").get<double>();
    report.octave.nearest_steps = octave.at("nearest_steps").get<long long>();
    report.octave.deviation_cents = octave.at("deviation_cents").get<double>();
    const auto& flags = j.at("flags");
    report.flags.gcd_trivial = flags.at("gcd_trivial").get<bool>();
    report.flags.inversion_pair_warning = flags.at("inversion_pair_warning").get<bool>();
    return report;
}

}  // namespace

ScaleReport make_report(const DerivedScale& scale, std::vector<int> params) {
    ScaleReport report;
    report.label = scale.system.label;
    report.params = std::move(params);
    report.unit_cents = scale.unit_cents;
    for (std::size_t i = 0; i < scale.system.targets.size(); ++i)
        report.residuals.push_back({scale.system.targets[i].interval.name,
                                    scale.system.targets[i].steps,
                                    scale.residual_cents[i]});
    report.octave = octave_fit(scale);
    int g = 0;
    for (int p : report.params)
        g = std::gcd(g, p);
    report.flags.gcd_trivial = g > 1;
    report.flags.inversion_pair_warning = has_inversion_pair(scale.system);
    return report;
}

ScaleReport make_report(const SearchHit& hit) {
    return make_report(hit.scale, hit.params);
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "table")
        return ReportFormat::table;
    if (text == "csv")
        return ReportFormat::csv;
    if (text == "json")
        return ReportFormat::json;
    throw std::invalid_argument("unknown format \"" + std::string(text) +
                                "\" (expected table, csv or json)");
}

std::string render_table(const std::vector<ScaleReport>& reports, ReportFormat format) {
    if (reports.empty())
        throw std::invalid_argument("nothing to render: empty report list");
    switch (format) {
        case ReportFormat::table:
            return render_plain_table(reports);
        case ReportFormat::csv:
            return render_csv(reports);
        case ReportFormat::json:
            return to_json_string(reports);
    }
    throw std::invalid_argument("unknown report format");
}

std::string to_json_string(const std::vector<ScaleReport>& reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const ScaleReport& report : reports)
        array.push_back(to_json(report));
    return array.dump(2) + "\n";
}

std::vector<ScaleReport> reports_from_json(const std::string& text) {
    const nlohmann::json parsed = nlohmann::json::parse(text);
    std::vector<ScaleReport> reports;
    if (parsed.is_array()) {
        for (const auto& item : parsed)
            reports.push_back(report_from(item));
    } else {
        reports.push_back(report_from(parsed));
    }
    return reports;
}

}  // namespace carloscale
