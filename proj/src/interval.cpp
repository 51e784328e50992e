#include "carloscale/interval.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace carloscale {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
        throw std::overflow_error("interval ratio product exceeds the 64-bit range");
    return a * b;
}

std::optional<std::int64_t> parse_positive_int(std::string_view text) {
    std::int64_t value = 0;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc() || ptr != last || value < 1)
        return std::nullopt;
    return value;
}

}  // namespace

Ratio::Ratio(std::int64_t numerator, std::int64_t denominator) {
    if (numerator < 1 || denominator < 1)
        throw std::domain_error("ratio numerator and denominator must be positive");
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

double Ratio::log2() const {
    return std::log2(value());
}

std::string Ratio::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio operator*(const Ratio& lhs, const Ratio& rhs) {
    // cross-reduce before multiplying so intermediates stay small
    const std::int64_t g1 = std::gcd(lhs.num(), rhs.den());
    const std::int64_t g2 = std::gcd(rhs.num(), lhs.den());
    return Ratio(checked_mul(lhs.num() / g1, rhs.num() / g2),
                 checked_mul(lhs.den() / g2, rhs.den() / g1));
}

double cents(const Ratio& r) {
    return 1200.0 * r.log2();
}

double cents(const JustInterval& i) {
    return cents(i.ratio);
}

JustInterval compose(const JustInterval& a, const JustInterval& b) {
    const Ratio product = a.ratio * b.ratio;
    if (auto name = catalog_name_for(product))
        return {*name, product};
    return {a.name + "⊕" + b.name, product};
}

JustInterval invert(const JustInterval& i) {
    const Ratio& r = i.ratio;
    const std::int64_t doubled_den = checked_mul(2, r.den());
    if (r.num() < r.den() || r.num() > doubled_den)
        throw std::domain_error("inversion is defined for ratios within one octave [1, 2]");
    const Ratio inverse(doubled_den, r.num());
    if (auto name = catalog_name_for(inverse))
        return {*name, inverse};
    return {inverse.str(), inverse};
}

const std::vector<JustInterval>& builtin_catalog() {
    static const std::vector<JustInterval> catalog = {
        {"unison", Ratio(1, 1)},
        {"M2", Ratio(9, 8)},
        {"m3", Ratio(6, 5)},
        {"M3", Ratio(5, 4)},
        {"P4", Ratio(4, 3)},
        {"P5", Ratio(3, 2)},
        {"m6", Ratio(8, 5)},
        {"M6", Ratio(5, 3)},
        {"m7", Ratio(16, 9)},
        {"P8", Ratio(2, 1)},
    };
    return catalog;
}

std::optional<JustInterval> catalog_find(std::string_view name) {
    for (const JustInterval& entry : builtin_catalog())
        if (entry.name == name)
            return entry;
    return std::nullopt;
}

std::optional<std::string> catalog_name_for(const Ratio& r) {
    for (const JustInterval& entry : builtin_catalog())
        if (entry.ratio == r)
            return entry.name;
    return std::nullopt;
}

JustInterval parse_interval(std::string_view token) {
    static constexpr std::string_view kTokens[] = {"M2", "m3", "M3", "P4", "P5", "M6", "P8"};
    for (std::string_view known : kTokens)
        if (token == known)
            return *catalog_find(known);

    const auto slash = token.find('/');
    if (slash != std::string_view::npos) {
        const auto num = parse_positive_int(token.substr(0, slash));
        const auto den = parse_positive_int(token.substr(slash + 1));
        if (num && den) {
            const Ratio r(*num, *den);
            if (auto name = catalog_name_for(r))
                return {*name, r};
            return {r.str(), r};
        }
    }
    throw std::invalid_argument("unrecognized interval token \"" + std::string(token) + "\"");
}

}  // namespace carloscale
