#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "maxlab/grid.hpp"
#include "maxlab/orlicz.hpp"
#include "maxlab/rank_sweep.hpp"

// Maximal operators over the window family of all contiguous sample ranges.
// Everything is uncentered: the value at k is a supremum over every window
// containing k. The common O(n^2) skeleton fixes the left endpoint i, walks
// the right endpoint j downward keeping a suffix maximum of the per-window
// statistic, and folds that suffix maximum into out[j].

namespace maxlab {

/// Hardy-Littlewood maximal function: sup over windows containing k of the
/// window average of |f|. O(n^2) with prefix sums; no divisions inside the
/// inner loop (a reciprocal table indexed by window length).
inline SampledFn hl_maximal(const SampledFn& f) {
    const std::size_t n = f.size();
    std::vector<double> pref(n + 1, 0.0), inv(n + 1, 0.0), out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) pref[k + 1] = pref[k] + std::abs(f.values[k]);
    for (std::size_t len = 1; len <= n; ++len) inv[len] = 1.0 / static_cast<double>(len);
    for (std::size_t i = 0; i < n; ++i) {
        const double pi = pref[i];
        double smax = 0.0;
        for (std::size_t j = n; j-- > i;) {
            const double avg = (pref[j + 1] - pi) * inv[j - i + 1];
            if (avg > smax) smax = avg;
            if (smax > out[j]) out[j] = smax;
        }
    }
    return SampledFn(f.grid, std::move(out));
}

/// Reference implementation: enumerates every window and accumulates its sum
/// directly, without the shared prefix-sum array. Same O(n^2) shape but an
/// independent arithmetic route; intended for cross-checks, n <= 4096 advised.
inline SampledFn hl_maximal_bruteforce(const SampledFn& f) {
    const std::size_t n = f.size();
    std::vector<double> row(n, 0.0), out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = i; j < n; ++j) {
            sum += std::abs(f.values[j]);
            row[j] = sum / static_cast<double>(j - i + 1);
        }
        double smax = 0.0;
        for (std::size_t j = n; j-- > i;) {
            smax = std::max(smax, row[j]);
            out[j] = std::max(out[j], smax);
        }
    }
    return SampledFn(f.grid, std::move(out));
}

inline SampledFn iterated_maximal(const SampledFn& f) { return hl_maximal(hl_maximal(f)); }

/// M_delta f = (M |f|^delta)^(1/delta) for 0 < delta <= 1; delta = 1 falls
/// through to hl_maximal exactly.
inline SampledFn power_maximal(const SampledFn& f, double delta) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("power_maximal: requires 0 < delta <= 1");
    if (delta == 1.0) return hl_maximal(f);
    SampledFn m = hl_maximal(pow_abs(f, delta));
    const double p = 1.0 / delta;
    for (double& v : m.values) v = std::pow(v, p);
    return m;
}

/// Sharp maximal function: sup over windows containing k of the mean
/// oscillation avg_w |f - avg_w f|. O(n^2 log n) via the rank sweep.
inline SampledFn sharp_maximal(const SampledFn& f) {
    const std::size_t n = f.size();
    std::vector<double> row(n, 0.0), out(n, 0.0);
    detail::mean_abs_deviation_sweep(f.values, [&](std::size_t i, std::size_t j, double osc) {
        row[j] = osc;
        if (j + 1 == n) {
            double smax = 0.0;
            for (std::size_t r = n; r-- > i;) {
                smax = std::max(smax, row[r]);
                out[r] = std::max(out[r], smax);
            }
        }
    });
    return SampledFn(f.grid, std::move(out));
}

/// Oscillation analogue of power_maximal, 0 < delta < 1.
inline SampledFn power_sharp_maximal(const SampledFn& f, double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("power_sharp_maximal: requires 0 < delta < 1");
    SampledFn m = sharp_maximal(pow_abs(f, delta));
    const double p = 1.0 / delta;
    for (double& v : m.values) v = std::pow(v, p);
    return m;
}

namespace detail {

inline void commutator_kernel_prefix(const SampledFn& b, const SampledFn& f, std::size_t k,
                                     std::vector<double>& G) {
    const std::size_t n = f.size();
    const double bk = b.values[k];
    G[0] = 0.0;
    for (std::size_t m = 0; m < n; ++m)
        G[m + 1] = G[m] + std::abs(bk - b.values[m]) * std::abs(f.values[m]);
}

} // namespace detail

/// Maximal commutator sup over windows w containing k of
/// avg_w |b(x_k) - b(y)| |f(y)|. Direct form: for each point, prefix sums of
/// the kernel row and an exhaustive scan over window endpoints. O(n^3).
inline SampledFn maximal_commutator_baseline(const SampledFn& b, const SampledFn& f) {
    check_same_grid(b, f, "maximal_commutator");
    const std::size_t n = f.size();
    std::vector<double> G(n + 1, 0.0), out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        detail::commutator_kernel_prefix(b, f, k, G);
        double best = 0.0;
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t q = k + 1; q <= n; ++q)
                best = std::max(best, (G[q] - G[i]) / static_cast<double>(q - i));
        out[k] = best;
    }
    return SampledFn(f.grid, std::move(out));
}

/// Same operator via the maximum-density-segment technique: for each point
/// the admissible left endpoints form a lower convex hull of the kernel
/// prefix graph, and the best window ending at q is a tangent query answered
/// by binary search on the hull. O(n^2 log n).
inline SampledFn maximal_commutator_fast(const SampledFn& b, const SampledFn& f) {
    check_same_grid(b, f, "maximal_commutator");
    const std::size_t n = f.size();
    std::vector<double> G(n + 1, 0.0), out(n, 0.0);
    std::vector<std::size_t> hull;
    hull.reserve(n + 1);
    const auto cross = [&G](std::size_t o, std::size_t a, std::size_t c) {
        return (static_cast<double>(a - o)) * (G[c] - G[o]) -
               (G[a] - G[o]) * (static_cast<double>(c - o));
    };
    for (std::size_t k = 0; k < n; ++k) {
        detail::commutator_kernel_prefix(b, f, k, G);
        hull.clear();
        for (std::size_t i = 0; i <= k; ++i) {
            while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0.0)
                hull.pop_back();
            hull.push_back(i);
        }
        const auto slope = [&](std::size_t q, std::size_t t) {
            return (G[q] - G[hull[t]]) / static_cast<double>(q - hull[t]);
        };
        double best = 0.0;
        for (std::size_t q = k + 1; q <= n; ++q) {
            std::size_t lo = 0, hi = hull.size() - 1;
            while (lo < hi) {
                const std::size_t mid = (lo + hi) / 2;
                if (slope(q, mid + 1) > slope(q, mid))
                    lo = mid + 1;
                else
                    hi = mid;
            }
            best = std::max(best, slope(q, lo));
        }
        out[k] = best;
    }
    return SampledFn(f.grid, std::move(out));
}

inline constexpr std::size_t kCommutatorFastThreshold = 256;

inline SampledFn maximal_commutator(const SampledFn& b, const SampledFn& f) {
    return f.size() <= kCommutatorFastThreshold ? maximal_commutator_baseline(b, f)
                                                : maximal_commutator_fast(b, f);
}

/// Signed commutator [M, b] f = M(b f) - b M(f), evaluated pointwise.
inline SampledFn commutator_maximal(const SampledFn& b, const SampledFn& f) {
    check_same_grid(b, f, "commutator_maximal");
    return hl_maximal(b * f) - b * hl_maximal(f);
}

inline SampledFn positive_part(const SampledFn& f) {
    return detail::map(f, [](double x) { return std::max(x, 0.0); });
}

inline SampledFn negative_part(const SampledFn& f) {
    return detail::map(f, [](double x) { return std::max(-x, 0.0); });
}

namespace detail {

/// Feasibility of lambda for the window Luxemburg average of the Zygmund
/// function, answered in O(log n) from two rank-indexed Fenwick trees: with
/// S = sum |f|, and S>, T> the sums of |f| and |f| log |f| over samples
/// exceeding lambda,
///   avg phi(|f|/lambda) = (S + T> - log(lambda) S>) / (count * lambda).
struct LlogLWindowSolver {
    const RankIndex& idx;
    Fenwick& fsum;
    Fenwick& flog;
    double s_all = 0.0, t_all = 0.0;
    std::size_t count = 0;
    double vmax = 0.0;

    double mean_phi(double lam) const {
        const std::size_t q = idx.count_leq(lam);
        const double s_gt = s_all - fsum.prefix(q);
        const double t_gt = t_all - flog.prefix(q);
        return (s_all + t_gt - std::log(lam) * s_gt) / (static_cast<double>(count) * lam);
    }

    double solve(double rel_tol = 1e-10) const {
        if (vmax == 0.0) return 0.0;
        double lo = s_all / static_cast<double>(count);
        if (mean_phi(lo) <= 1.0) return lo;
        double hi = vmax;
        while (hi - lo > rel_tol * hi) {
            const double mid = 0.5 * (lo + hi);
            (mean_phi(mid) <= 1.0 ? hi : lo) = mid;
        }
        return hi;
    }
};

} // namespace detail

inline constexpr std::size_t kOrliczFastThreshold = 384;

/// Orlicz maximal function sup over windows containing k of the Luxemburg
/// average of f. For the Zygmund function at n above the threshold the
/// per-window solve runs on Fenwick trees (O(n^2 log^2 n) overall); otherwise
/// each window is solved directly (advisory n <= 1024 for that route).
inline SampledFn orlicz_maximal(const SampledFn& f, const OrliczFunction& phi) {
    const std::size_t n = f.size();
    std::vector<double> row(n, 0.0), out(n, 0.0);
    const auto fold_row = [&](std::size_t i) {
        double smax = 0.0;
        for (std::size_t r = n; r-- > i;) {
            smax = std::max(smax, row[r]);
            out[r] = std::max(out[r], smax);
        }
    };
    if (phi.kind == OrliczKind::llogl && n > kOrliczFastThreshold) {
        std::vector<double> av(n);
        for (std::size_t k = 0; k < n; ++k) av[k] = std::abs(f.values[k]);
        const detail::RankIndex idx(av);
        std::vector<double> vlog(idx.sorted.size());
        for (std::size_t r = 0; r < idx.sorted.size(); ++r)
            vlog[r] = idx.sorted[r] > 0.0 ? idx.sorted[r] * std::log(idx.sorted[r]) : 0.0;
        detail::Fenwick fsum(idx.sorted.size()), flog(idx.sorted.size());
        for (std::size_t i = 0; i < n; ++i) {
            fsum.reset();
            flog.reset();
            detail::LlogLWindowSolver solver{idx, fsum, flog};
            for (std::size_t j = i; j < n; ++j) {
                const std::size_t r = idx.rank[j];
                fsum.add(r, av[j]);
                flog.add(r, vlog[r]);
                solver.s_all += av[j];
                solver.t_all += vlog[r];
                solver.count = j - i + 1;
                solver.vmax = std::max(solver.vmax, av[j]);
                row[j] = solver.solve();
            }
            fold_row(i);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j)
                row[j] = luxemburg_average_detail(f, Window{i, j}, phi).value;
            fold_row(i);
        }
    }
    return SampledFn(f.grid, std::move(out));
}

} // namespace maxlab
