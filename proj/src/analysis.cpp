#include "carloscale/analysis.hpp"

#include "carloscale/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace carloscale {

OctaveFit octave_fit(const DerivedScale& scale) {
    if (!(scale.unit_cents > 0.0))
        throw std::domain_error("octave fit needs a positive unit size");
    OctaveFit fit;
    fit.exact_units = 1200.0 / scale.unit_cents;
    fit.nearest_steps = std::llround(fit.exact_units);
    fit.deviation_cents = static_cast<double>(fit.nearest_steps) * scale.unit_cents - 1200.0;
    return fit;
}

ToleranceResult tolerance_check(const DerivedScale& scale, double tol_cents) {
    if (!(tol_cents > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    ToleranceResult result;
    for (double r : scale.residual_cents)
        result.max_abs_deviation_cents = std::max(result.max_abs_deviation_cents, std::abs(r));
    result.within = result.max_abs_deviation_cents < tol_cents;
    return result;
}

std::vector<SearchHit> search_carlos2(int a_max, int b_max, double tol_cents,
                                      bool exclude_gcd_trivial) {
    const int bounds[] = {a_max, b_max};
    return search_generic(carlos2_family(), bounds, tol_cents, exclude_gcd_trivial);
}

ParamFamily carlos2_family() {
    return {"carlos2", 2,
            [](std::span<const int> t) { return t[0] < t[1]; },
            [](std::span<const int> t) { return carlos2(t[0], t[1]); }};
}

ParamFamily carlos3_family() {
    return {"carlos3", 3,
            [](std::span<const int> t) { return t[0] < t[1] && t[1] < t[2]; },
            [](std::span<const int> t) { return carlos3(t[0], t[1], t[2]); }};
}

ParamFamily pentatonic_family() {
    return {"pentatonic", 2,
            [](std::span<const int> t) { return t[0] < t[1]; },
            [](std::span<const int> t) { return pentatonic(t[0], t[1]); }};
}

ParamFamily pair_family(JustInterval ia, JustInterval ib) {
    if (ia.ratio == ib.ratio)
        throw std::invalid_argument("degenerate pair: the two intervals must have different ratios");
    return {"pair{" + ia.name + "," + ib.name + "}", 2,
            [](std::span<const int>) { return true; },
            [ia, ib](std::span<const int> t) { return general_pair(ia, t[0], ib, t[1]); }};
}

std::vector<SearchHit> search_generic(const ParamFamily& family, std::span<const int> bounds,
                                      double tol_cents, bool exclude_gcd_trivial) {
    if (family.arity < 1)
        throw std::invalid_argument("parameter family must have at least one parameter");
    if (bounds.size() != static_cast<std::size_t>(family.arity))
        throw std::invalid_argument("search needs exactly one bound per parameter");
    for (int bound : bounds)
        if (bound < 1)
            throw std::invalid_argument("search bounds must be positive");

    std::vector<SearchHit> hits;
    std::vector<int> tuple(static_cast<std::size_t>(family.arity), 1);
    for (;;) {
        if (family.valid(tuple)) {
            DerivedScale scale = optimal_unit(family.build(tuple));
            const ToleranceResult gate = tolerance_check(scale, tol_cents);
            if (gate.within) {
                int g = 0;
                for (int v : tuple)
                    g = std::gcd(g, v);
                if (!(exclude_gcd_trivial && g > 1)) {
                    SearchHit hit;
                    hit.params = tuple;
                    hit.octave = octave_fit(scale);
                    hit.max_abs_deviation_cents = gate.max_abs_deviation_cents;
                    hit.gcd_trivial = g > 1;
                    hit.scale = std::move(scale);
                    hits.push_back(std::move(hit));
                }
            }
        }
        // odometer increment over the bounded box
        int pos = family.arity - 1;
        while (pos >= 0 && tuple[pos] == bounds[pos]) {
            tuple[pos] = 1;
            --pos;
        }
        if (pos < 0)
            break;
        ++tuple[pos];
    }

    std::sort(hits.begin(), hits.end(), [](const SearchHit& lhs, const SearchHit& rhs) {
        const long long ls = std::accumulate(lhs.params.begin(), lhs.params.end(), 0LL);
        const long long rs = std::accumulate(rhs.params.begin(), rhs.params.end(), 0LL);
        if (ls != rs)
            return ls < rs;
        return lhs.params < rhs.params;
    });
    return hits;
}

}  // namespace carloscale
