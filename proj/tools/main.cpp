// carloscale — derive equal-step scales around just intervals, sweep
// parameter families, and export Scala tuning files.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carloscale/builders.hpp"
#include "carloscale/report.hpp"
#include "carloscale/scl.hpp"

namespace {

using namespace carloscale;

// command-line combination problems: reported on stderr with exit code 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        int value = 0;
        const char* last = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(item.data(), last, value);
        if (ec != std::errc() || ptr != last)
            throw usage_error("expected a comma-separated integer list, got \"" + text + "\"");
        values.push_back(value);
    }
    if (values.empty())
        throw usage_error("expected a comma-separated integer list, got \"" + text + "\"");
    return values;
}

std::pair<JustInterval, JustInterval> parse_interval_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw usage_error("--intervals wants two comma-separated tokens, e.g. \"P4,P5\"");
    return {parse_interval(text.substr(0, comma)), parse_interval(text.substr(comma + 1))};
}

void need_params(const std::vector<int>& params, std::size_t count, const std::string& preset) {
    if (params.size() != count)
        throw usage_error("preset " + preset + " wants " + std::to_string(count) +
                          " parameters, got " + std::to_string(params.size()));
}

TargetSystem system_from_preset(const std::string& preset, const std::vector<int>& params,
                                const std::string& intervals_text) {
    if (preset == "carlos2") {
        need_params(params, 2, preset);
        return carlos2(params[0], params[1]);
    }
    if (preset == "carlos3") {
        need_params(params, 3, preset);
        return carlos3(params[0], params[1], params[2]);
    }
    if (preset == "pentatonic") {
        need_params(params, 2, preset);
        return pentatonic(params[0], params[1]);
    }
    if (preset == "pair") {
        need_params(params, 2, preset);
        if (intervals_text.empty())
            throw usage_error("preset pair needs --intervals, e.g. --intervals P4,P5");
        const auto [ia, ib] = parse_interval_pair(intervals_text);
        return general_pair(ia, params[0], ib, params[1]);
    }
    throw usage_error("unknown preset \"" + preset +
                      "\" (expected carlos2, carlos3, pentatonic or pair)");
}

ParamFamily family_from_preset(const std::string& preset, const std::string& intervals_text) {
    if (preset == "carlos2")
        return carlos2_family();
    if (preset == "carlos3")
        return carlos3_family();
    if (preset == "pentatonic")
        return pentatonic_family();
    if (preset == "pair") {
        if (intervals_text.empty())
            throw usage_error("preset pair needs --intervals, e.g. --intervals P4,P5");
        const auto [ia, ib] = parse_interval_pair(intervals_text);
        return pair_family(ia, ib);
    }
    throw usage_error("unknown preset \"" + preset +
                      "\" (expected carlos2, carlos3, pentatonic or pair)");
}

struct SystemChoice {
    std::string preset;
    std::string params_text;
    std::string system_text;
    std::string intervals_text;

    void add_options(CLI::App& cmd) {
        auto* preset_opt = cmd.add_option("--preset", preset,
                                          "builder preset: carlos2, carlos3, pentatonic, pair");
        cmd.add_option("--params", params_text, "builder parameters, e.g. 4,5")->needs(preset_opt);
        cmd.add_option("--intervals", intervals_text, "interval pair for the pair preset, e.g. P4,P5")
            ->needs(preset_opt);
        cmd.add_option("--system", system_text, "explicit targets, e.g. \"4:m3,5:M3,9:P5\"")
            ->excludes(preset_opt);
    }

    // returns the system plus the preset parameters (empty for custom)
    std::pair<TargetSystem, std::vector<int>> build() const {
        if (!system_text.empty())
            return {parse_system_spec(system_text), {}};
        if (preset.empty())
            throw usage_error("pick a system: either --preset ... --params ... or --system ...");
        if (params_text.empty())
            throw usage_error("preset " + preset + " needs --params");
        const std::vector<int> params = parse_int_list(params_text);
        return {system_from_preset(preset, params, intervals_text), params};
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open \"" + path + "\" for writing");
    file << content;
    if (!file.flush())
        throw std::runtime_error("failed writing \"" + path + "\"");
}

int run_derive(const SystemChoice& choice, const std::string& format_text) {
    const auto [system, params] = choice.build();
    const ScaleReport report = make_report(optimal_unit(system), params);
    std::cout << render_table({report}, parse_report_format(format_text));
    return 0;
}

int run_search(const std::string& preset, const std::string& intervals_text,
               const std::string& max_text, double tol, bool exclude_gcd_trivial,
               const std::string& format_text) {
    const ParamFamily family = family_from_preset(preset, intervals_text);
    std::vector<int> bounds = parse_int_list(max_text);
    if (bounds.size() == 1)
        bounds.assign(static_cast<std::size_t>(family.arity), bounds.front());
    const std::vector<SearchHit> hits =
        search_generic(family, bounds, tol, exclude_gcd_trivial);
    if (hits.empty()) {
        std::cerr << "no scales within " << tol << " cents\n";
        return 0;
    }
    std::vector<ScaleReport> reports;
    reports.reserve(hits.size());
    for (const SearchHit& hit : hits)
        reports.push_back(make_report(hit));
    std::cout << render_table(reports, parse_report_format(format_text));
    return 0;
}

int run_table(const std::string& format_text) {
    static constexpr std::pair<int, int> kRows[] = {{4, 5},   {5, 6},   {9, 11},
                                                    {13, 16}, {14, 17}, {17, 21},
                                                    {19, 23}, {21, 25}, {21, 26}};
    std::vector<ScaleReport> reports;
    for (const auto& [a, b] : kRows)
        reports.push_back(make_report(optimal_unit(carlos2(a, b)), {a, b}));
    std::cout << render_table(reports, parse_report_format(format_text));
    return 0;
}

int run_export_scl(const SystemChoice& choice, long long steps, std::string description,
                   const std::string& output_path) {
    const auto [system, params] = choice.build();
    const DerivedScale scale = optimal_unit(system);
    if (description.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.5f", scale.unit_cents);
        description = scale.system.label + ", unit " + buf + " cents";
    }
    write_output(output_path, export_scl(scale, steps, description));
    return 0;
}

int run_oracle_check(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> target_count(1, 6);
    std::uniform_int_distribution<int> step_count(1, 100);
    const auto& catalog = builtin_catalog();
    std::uniform_int_distribution<std::size_t> catalog_pick(1, catalog.size() - 1);  // skip unison

    double worst = 0.0;
    int worst_index = -1;
    for (int i = 0; i < count; ++i) {
        TargetSystem system;
        system.label = "random-" + std::to_string(i);
        const int n = target_count(rng);
        for (int t = 0; t < n; ++t)
            system.targets.push_back({step_count(rng), catalog[catalog_pick(rng)]});
        const double closed = optimal_unit(system).unit_log2;
        const double numeric = numeric_minimize(system, 1e-7, 1.5, 1e-12);
        const double diff = std::abs(closed - numeric);
        if (diff > worst) {
            worst = diff;
            worst_index = i;
        }
    }
    std::printf("%d systems checked, max |closed-form - numeric| = %.3e (system %d)\n", count,
                worst, worst_index);
    const bool ok = worst < 1e-10;
    std::printf("%s (threshold 1e-10)\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equal-step scale derivation around just intervals"};
    app.require_subcommand(1);

    std::string format_text = "table";
    app.add_option("--format", format_text, "output format: table, csv or json")
        ->capture_default_str();

    auto* derive = app.add_subcommand("derive", "derive one scale and report it");
    SystemChoice derive_choice;
    derive_choice.add_options(*derive);

    auto* search = app.add_subcommand("search", "sweep a parameter family for scales within tolerance");
    std::string search_preset = "carlos2";
    std::string search_intervals;
    std::string max_text;
    double tol = 5.0;
    bool no_gcd_trivial = false;
    search->add_option("--preset", search_preset, "parameter family")->capture_default_str();
    search->add_option("--intervals", search_intervals, "interval pair for the pair preset");
    search->add_option("--max", max_text, "per-parameter upper bounds, e.g. 40 or 40,40")->required();
    search->add_option("--tol", tol, "tolerance gate in cents")->capture_default_str();
    search->add_flag("--no-gcd-trivial", no_gcd_trivial, "drop pairs that are subdivided smaller scales");

    auto* table = app.add_subcommand("table", "print the nine classic Carlos-type scales");

    auto* export_scl_cmd = app.add_subcommand("export-scl", "write a Scala .scl tuning file");
    SystemChoice export_choice;
    export_choice.add_options(*export_scl_cmd);
    long long steps = 0;
    std::string description;
    std::string output_path;
    export_scl_cmd->add_option("--steps", steps, "number of scale degrees to emit")->required();
    export_scl_cmd->add_option("--description", description, "description line (default: label and unit)");
    export_scl_cmd->add_option("-o,--output", output_path, "output file (default: stdout)");

    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare the closed form against the numeric minimizer");
    int oracle_count = 1000;
    unsigned oracle_seed = 987654321u;
    oracle->add_option("--count", oracle_count, "number of random systems")->capture_default_str();
    oracle->add_option("--seed", oracle_seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (derive->parsed())
            return run_derive(derive_choice, format_text);
        if (search->parsed())
            return run_search(search_preset, search_intervals, max_text, tol, no_gcd_trivial,
                              format_text);
        if (table->parsed())
            return run_table(format_text);
        if (export_scl_cmd->parsed())
            return run_export_scl(export_choice, steps, description, output_path);
        if (oracle->parsed())
            return run_oracle_check(oracle_count, oracle_seed);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
