#include "carloscale/builders.hpp"

#include <charconv>
#include <stdexcept>

namespace carloscale {

namespace {

JustInterval catalog_get(const char* name) {
    return *catalog_find(name);
}

void require_positive(int value, const char* what) {
    if (value < 1)
        throw std::domain_error(std::string(what) + " must be at least 1");
}

std::string tuple_label(std::initializer_list<int> params) {
    std::string text = "(";
    bool first = true;
    for (int p : params) {
        if (!first)
            text += ",";
        text += std::to_string(p);
        first = false;
    }
    return text + ")";
}

}  // namespace

TargetSystem carlos2(int a, int b) {
    require_positive(a, "a");
    if (a >= b)
        throw std::invalid_argument("carlos2 requires a < b");
    TargetSystem system;
    system.targets = {{a, catalog_get("m3")}, {b, catalog_get("M3")}, {a + b, catalog_get("P5")}};
    system.label = tuple_label({a, b}) + "-Carlos";
    return system;
}

TargetSystem carlos3(int a, int b, int c) {
    require_positive(a, "a");
    if (a >= b || b >= c)
        throw std::invalid_argument("carlos3 requires a < b < c");
    TargetSystem system;
    system.targets = {{a, catalog_get("m3")}, {b, catalog_get("M3")}, {c, catalog_get("P5")}};
    system.label = tuple_label({a, b, c}) + "-Carlos";
    return system;
}

TargetSystem general_pair(const JustInterval& ia, int a, const JustInterval& ib, int b) {
    require_positive(a, "a");
    require_positive(b, "b");
    if (ia.ratio == ib.ratio)
        throw std::invalid_argument("degenerate pair: the two intervals must have different ratios");
    TargetSystem system;
    system.targets = {{a, ia}, {b, ib}, {a + b, compose(ia, ib)}};
    system.label = "{" + ia.name + "," + ib.name + "}-" + tuple_label({a, b});
    return system;
}

TargetSystem pentatonic(int a, int b) {
    require_positive(a, "a");
    if (a >= b)
        throw std::invalid_argument("pentatonic requires a < b");
    TargetSystem system;
    system.targets = {{a, catalog_get("M2")},
                      {2 * a, catalog_get("M3")},
                      {b, catalog_get("m3")},
                      {2 * a + b, catalog_get("P5")}};
    system.label = tuple_label({a, b}) + "-pentatonic";
    return system;
}

TargetSystem custom_system(const std::vector<std::pair<int, std::string>>& entries) {
    if (entries.empty())
        throw std::invalid_argument("custom system needs at least one target");
    TargetSystem system;
    for (const auto& [steps, token] : entries) {
        if (steps < 1)
            throw std::invalid_argument("step count must be at least 1 in \"" +
                                        std::to_string(steps) + ":" + token + "\"");
        system.targets.push_back({steps, parse_interval(token)});
        if (!system.label.empty())
            system.label += ",";
        system.label += std::to_string(steps) + ":" + token;
    }
    validate(system);
    return system;
}

TargetSystem parse_system_spec(std::string_view text) {
    std::vector<std::pair<int, std::string>> entries;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("expected <steps>:<interval>, got \"" + std::string(item) + "\"");
        int steps = 0;
        const char* last = item.data() + colon;
        const auto [ptr, ec] = std::from_chars(item.data(), last, steps);
        if (ec != std::errc() || ptr != last)
            throw std::invalid_argument("bad step count in \"" + std::string(item) + "\"");
        entries.emplace_back(steps, std::string(item.substr(colon + 1)));
    }
    return custom_system(entries);
}

}  // namespace carloscale
