// Exact rational just intervals and conversion to cents.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace carloscale {

// Frequency ratio kept in lowest terms, numerator and denominator >= 1.
// Arithmetic is exact checked 64-bit integer; logarithms happen only at the
// conversion boundary (log2 / cents), so composition chains never drift.
class Ratio {
public:
    Ratio() = default;
    Ratio(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    double log2() const;

    // "p/q", or just "p" when the denominator is 1
    std::string str() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;

private:
    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

// Exact product in lowest terms; throws std::overflow_error if the product
// leaves the 64-bit range.
Ratio operator*(const Ratio& lhs, const Ratio& rhs);

// Interval size in cents: 1200 * log2(r).
double cents(const Ratio& r);

struct JustInterval {
    std::string name;
    Ratio ratio;

    friend bool operator==(const JustInterval&, const JustInterval&) = default;
};

double cents(const JustInterval& i);

// Stacked interval: ratios multiply. A product that lands exactly on a
// catalog ratio takes the catalog name, anything else is named "a⊕b" so
// that near-misses (27/20 vs 4/3) stay distinguishable.
JustInterval compose(const JustInterval& a, const JustInterval& b);

// Octave complement 2/r, defined for ratios within one octave [1, 2].
// compose(i, invert(i)) is exactly 2/1.
JustInterval invert(const JustInterval& i);

// Built-in just intervals, unison through the octave.
const std::vector<JustInterval>& builtin_catalog();
std::optional<JustInterval> catalog_find(std::string_view name);
std::optional<std::string> catalog_name_for(const Ratio& r);

// Accepts the tokens "M2","m3","M3","P4","P5","M6","P8" (case-sensitive) or
// a literal positive ratio such as "7/4". Throws std::invalid_argument on
// anything else.
JustInterval parse_interval(std::string_view token);

}  // namespace carloscale
