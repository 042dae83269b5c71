#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "maxlab/grid.hpp"
#include "maxlab/rank_sweep.hpp"

namespace maxlab {

enum class BmoMethod {
    exact_l1, // sup over windows of the mean absolute deviation
    proxy_l2, // sup over windows of the standard deviation (upper proxy)
};

/// Discrete BMO seminorm of b over the all-windows family. The L1 form runs
/// the O(n^2 log n) rank sweep; the L2 proxy is a plain O(n^2) pass over
/// centered prefix sums. Constant inputs give exactly 0.
inline double bmo_seminorm(const SampledFn& b, BmoMethod method = BmoMethod::exact_l1) {
    const std::size_t n = b.size();
    if (method == BmoMethod::exact_l1) {
        double best = 0.0;
        detail::mean_abs_deviation_sweep(b.values, [&](std::size_t, std::size_t, double osc) {
            best = std::max(best, osc);
        });
        return best;
    }
    double gmean = 0.0;
    for (double v : b.values) gmean += v;
    gmean /= static_cast<double>(n);
    std::vector<double> p1(n + 1, 0.0), p2(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double c = b.values[k] - gmean;
        p1[k + 1] = p1[k] + c;
        p2[k + 1] = p2[k] + c * c;
    }
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double len = static_cast<double>(j - i + 1);
            const double m = (p1[j + 1] - p1[i]) / len;
            const double var = (p2[j + 1] - p2[i]) / len - m * m;
            best = std::max(best, var);
        }
    return std::sqrt(std::max(best, 0.0));
}

/// sup over windows of (avg |b - avg_w b|^p)^(1/p). Direct enumeration with
/// an inner pass per window; advisory n <= 512.
inline double bmo_p_seminorm(const SampledFn& b, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("bmo_p_seminorm: requires p >= 1");
    const std::size_t n = b.size();
    std::vector<double> pref(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) pref[k + 1] = pref[k] + b.values[k];
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double len = static_cast<double>(j - i + 1);
            const double mu = (pref[j + 1] - pref[i]) / len;
            double s = 0.0;
            for (std::size_t k = i; k <= j; ++k) s += std::pow(std::abs(b.values[k] - mu), p);
            best = std::max(best, s / len);
        }
    return std::pow(best, 1.0 / p);
}

/// h * sum |f| (1 + log+ |f|).
inline double zygmund_quasinorm(const SampledFn& f) {
    double s = 0.0;
    for (double v : f.values) {
        const double a = std::abs(v);
        s += a > 1.0 ? a * (1.0 + std::log(a)) : a;
    }
    return s * f.grid.h;
}

/// (h * sum |f|^p)^(1/p), p >= 1.
inline double lp_norm(const SampledFn& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: requires p >= 1");
    double s = 0.0;
    for (double v : f.values) s += std::pow(std::abs(v), p);
    return std::pow(s * f.grid.h, 1.0 / p);
}

/// Nonincreasing rearrangement of |f| as a right-continuous step function:
/// value_at(t) = s_m for t in [m h, (m+1) h), 0 past the total mass.
struct RearrangementProfile {
    double mass = 0.0; // step width, equal to the grid cell width h
    std::vector<double> values;

    double total_mass() const { return mass * static_cast<double>(values.size()); }

    double value_at(double t) const {
        if (!(t >= 0.0)) throw std::invalid_argument("RearrangementProfile: requires t >= 0");
        const auto m = static_cast<std::size_t>(t / mass);
        return m < values.size() ? values[m] : 0.0;
    }
};

inline RearrangementProfile rearrangement(const SampledFn& f) {
    RearrangementProfile p;
    p.mass = f.grid.h;
    p.values.resize(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) p.values[k] = std::abs(f.values[k]);
    std::sort(p.values.begin(), p.values.end(), std::greater<>());
    return p;
}

/// Measure of the superlevel set: h * #{ k : |f_k| > lambda } (strict).
inline double distribution_measure(const SampledFn& f, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("distribution_measure: requires lambda >= 0");
    std::size_t c = 0;
    for (double v : f.values)
        if (std::abs(v) > lambda) ++c;
    return static_cast<double>(c) * f.grid.h;
}

/// Weak L^p quasinorm sup_t t^(1/p) f*(t), attained on the rearrangement
/// steps: max_m ((m+1) h)^(1/p) s_m.
inline double weak_lorentz_quasinorm(const SampledFn& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("weak_lorentz_quasinorm: requires p >= 1");
    const RearrangementProfile prof = rearrangement(f);
    double best = 0.0;
    for (std::size_t m = 0; m < prof.values.size(); ++m) {
        const double t = static_cast<double>(m + 1) * prof.mass;
        best = std::max(best, std::pow(t, 1.0 / p) * prof.values[m]);
    }
    return best;
}

/// h * #{ k in w : |b_k - avg_w b| > lambda }.
inline double level_set_oscillation_measure(const SampledFn& b, const Window& w, double lambda) {
    if (!(lambda >= 0.0))
        throw std::invalid_argument("level_set_oscillation_measure: requires lambda >= 0");
    check_window(w, b.grid);
    const double mu = window_average(b, w);
    std::size_t c = 0;
    for (std::size_t k = w.i; k <= w.j; ++k)
        if (std::abs(b.values[k] - mu) > lambda) ++c;
    return static_cast<double>(c) * b.grid.h;
}

struct ExpAverageResult {
    double value = 0.0;
    bool saturated = false;
};

/// Window average of exp(lambda |b - avg_w b|). Overflow is reported through
/// the saturation flag with the largest finite double as the value.
inline ExpAverageResult exp_average(const SampledFn& b, const Window& w, double lambda) {
    check_window(w, b.grid);
    const double mu = window_average(b, w);
    double s = 0.0;
    for (std::size_t k = w.i; k <= w.j; ++k) {
        s += std::exp(lambda * std::abs(b.values[k] - mu));
        if (!std::isfinite(s)) return {std::numeric_limits<double>::max(), true};
    }
    return {s / static_cast<double>(w.length()), false};
}

/// sup over all windows of exp_average, via the rank sweep.
inline ExpAverageResult sup_exp_average_over_windows(const SampledFn& b, double lambda) {
    ExpAverageResult r{0.0, false};
    detail::exp_oscillation_sweep(b.values, lambda,
                                  [&](std::size_t, std::size_t, double avg, bool finite) {
                                      if (!finite)
                                          r.saturated = true;
                                      else
                                          r.value = std::max(r.value, avg);
                                  });
    if (r.saturated) r.value = std::numeric_limits<double>::max();
    return r;
}

} // namespace maxlab
