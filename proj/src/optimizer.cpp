#include "carloscale/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace carloscale {

double objective(const TargetSystem& system, double x) {
    validate(system);
    if (!(x > 0.0))
        throw std::invalid_argument("unit size must be positive");
    double sum = 0.0;
    for (const Target& t : system.targets) {
        const double diff = t.steps * x - t.interval.ratio.log2();
        sum += diff * diff;
    }
    return sum;
}

DerivedScale optimal_unit(const TargetSystem& system) {
    validate(system);
    double weighted_log_sum = 0.0;
    long long steps_sq_sum = 0;
    for (const Target& t : system.targets) {
        weighted_log_sum += t.steps * t.interval.ratio.log2();
        steps_sq_sum += static_cast<long long>(t.steps) * t.steps;
    }

    DerivedScale scale;
    scale.unit_log2 = weighted_log_sum / static_cast<double>(steps_sq_sum);
    scale.unit_cents = 1200.0 * scale.unit_log2;
    scale.residual_cents.reserve(system.targets.size());
    for (const Target& t : system.targets)
        scale.residual_cents.push_back(t.steps * scale.unit_cents - cents(t.interval.ratio));
    scale.system = system;
    return scale;
}

double numeric_minimize(const TargetSystem& system, double lo, double hi, double tol) {
    validate(system);
    if (!(0.0 < lo && lo < hi))
        throw std::invalid_argument("bracket must satisfy 0 < lo < hi");
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");

    std::vector<double> steps, logs;
    steps.reserve(system.targets.size());
    logs.reserve(system.targets.size());
    for (const Target& t : system.targets) {
        steps.push_back(t.steps);
        logs.push_back(t.interval.ratio.log2());
    }
    const auto g = [&](double x) {
        double sum = 0.0;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const double diff = steps[i] * x - logs[i];
            sum += diff * diff;
        }
        return sum;
    };

    static const double kShrink = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - kShrink * (b - a);
    double d = a + kShrink * (b - a);
    double gc = g(c), gd = g(d);
    const double width_goal = std::max(tol, 1e-9);
    while (b - a > width_goal) {
        if (gc < gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - kShrink * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + kShrink * (b - a);
            gd = g(d);
        }
    }
    double x = 0.5 * (a + b);

    // One parabolic step through three well-separated samples. The
    // objective is exactly quadratic in x, so this lands on the vertex to
    // evaluation-noise accuracy, well below what bracketing alone reaches.
    const double h = std::min(1e-4, (hi - lo) / 4.0);
    const double center = std::clamp(x, lo + h, hi - h);
    const double y1 = g(center - h), y2 = g(center), y3 = g(center + h);
    const double curvature = y1 - 2.0 * y2 + y3;
    if (curvature > 0.0)
        x = std::clamp(center + 0.5 * h * (y1 - y3) / curvature, lo, hi);

    const double edge = std::max(width_goal * 4.0, (hi - lo) * 1e-6);
    if (x - lo < edge || hi - x < edge)
        throw std::domain_error("bracket does not contain the minimizer");
    return x;
}

}  // namespace carloscale
