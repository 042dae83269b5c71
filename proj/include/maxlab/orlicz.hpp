#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "maxlab/grid.hpp"

namespace maxlab {

enum class OrliczKind { llogl, expl };

/// The conjugate pair of Young functions used throughout: the Zygmund
/// function t (1 + log+ t) and its complement exp(t) - 1 (normalized so both
/// vanish at 0). Both are convex, increasing, and defined for t >= 0.
struct OrliczFunction {
    OrliczKind kind = OrliczKind::llogl;

    static OrliczFunction llogl() { return {OrliczKind::llogl}; }
    static OrliczFunction expl() { return {OrliczKind::expl}; }

    const char* name() const { return kind == OrliczKind::llogl ? "LlogL" : "ExpL"; }

    OrliczFunction complement() const {
        return {kind == OrliczKind::llogl ? OrliczKind::expl : OrliczKind::llogl};
    }

    double operator()(double t) const {
        if (kind == OrliczKind::llogl) return t <= 1.0 ? t : t * (1.0 + std::log(t));
        return std::expm1(t);
    }

    /// Inverse on [0, inf); for LlogL the branch t > 1 is solved by Newton
    /// iteration on the convex increasing t (1 + log t).
    double inverse(double y) const {
        if (!(y >= 0.0)) throw std::invalid_argument("OrliczFunction::inverse: requires y >= 0");
        if (kind == OrliczKind::expl) return std::log1p(y);
        if (y <= 1.0) return y;
        double t = std::max(1.0, y / (1.0 + std::log(y)));
        for (int it = 0; it < 60; ++it) {
            const double f = t * (1.0 + std::log(t)) - y;
            if (std::abs(f) <= 1e-15 * y) break;
            t -= f / (2.0 + std::log(t));
        }
        return t;
    }
};

/// Window mean of phi(|g_k| / lambda); +inf signals overflow (treated as an
/// infeasible lambda by the Luxemburg solvers).
inline double orlicz_window_mean(const SampledFn& g, const Window& w,
                                 const OrliczFunction& phi, double lambda) {
    double s = 0.0;
    for (std::size_t k = w.i; k <= w.j; ++k) {
        s += phi(std::abs(g.values[k]) / lambda);
        if (!std::isfinite(s)) return std::numeric_limits<double>::infinity();
    }
    return s / static_cast<double>(w.length());
}

struct LuxemburgResult {
    double value = 0.0;
    int iterations = 0;
    bool converged = true;
};

/// Luxemburg-type normalized average inf { lambda > 0 : avg_w phi(|g|/lambda) <= 1 },
/// located by bracketing (double/halve lambda until the feasibility state
/// flips) and bisection to relative width rel_tol. The returned value is the
/// feasible end of the final bracket.
inline LuxemburgResult luxemburg_average_detail(const SampledFn& g, const Window& w,
                                                const OrliczFunction& phi,
                                                double rel_tol = 1e-10, int max_iter = 200) {
    check_window(w, g.grid);
    double vmax = 0.0, vsum = 0.0;
    for (std::size_t k = w.i; k <= w.j; ++k) {
        vmax = std::max(vmax, std::abs(g.values[k]));
        vsum += std::abs(g.values[k]);
    }
    if (vmax == 0.0) return {0.0, 0, true};

    const auto feasible = [&](double lam) { return orlicz_window_mean(g, w, phi, lam) <= 1.0; };

    int used = 0;
    double lo, hi;
    double lam = vsum / static_cast<double>(w.length());
    if (feasible(lam)) {
        hi = lam;
        lo = 0.5 * hi;
        while (feasible(lo) && ++used < max_iter) {
            hi = lo;
            lo *= 0.5;
        }
    } else {
        lo = lam;
        hi = 2.0 * lo;
        while (!feasible(hi) && ++used < max_iter) {
            lo = hi;
            hi *= 2.0;
        }
    }
    while (hi - lo > rel_tol * hi && ++used < max_iter) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return {hi, used, hi - lo <= rel_tol * hi};
}

inline double luxemburg_average(const SampledFn& g, const Window& w, const OrliczFunction& phi) {
    const auto r = luxemburg_average_detail(g, w, phi);
    if (!r.converged)
        throw std::runtime_error("luxemburg_average: bisection did not converge");
    return r.value;
}

} // namespace maxlab
