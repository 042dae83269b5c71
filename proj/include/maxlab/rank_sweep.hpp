#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "maxlab/grid.hpp"

// Shared machinery for the O(n^2 log n) all-windows sweeps. A Fenwick tree
// indexed by value rank accumulates counts and rank-weighted sums while the
// right endpoint advances, which turns per-window statistics that split at
// the window mean (mean absolute deviation, exponential oscillation averages)
// into two prefix queries.

namespace maxlab::detail {

class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0.0) {}

    void reset() { std::fill(tree_.begin(), tree_.end(), 0.0); }

    void add(std::size_t rank, double w) {
        for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += w;
    }

    /// Sum over the first `count` ranks.
    double prefix(std::size_t count) const {
        double s = 0.0;
        for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }

private:
    std::vector<double> tree_;
};

/// Sorted distinct values plus the rank of each sample.
struct RankIndex {
    std::vector<double> sorted;
    std::vector<std::size_t> rank;

    explicit RankIndex(const std::vector<double>& values) {
        sorted = values;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        rank.resize(values.size());
        for (std::size_t k = 0; k < values.size(); ++k)
            rank[k] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), values[k]) - sorted.begin());
    }

    /// Number of distinct values <= t.
    std::size_t count_leq(double t) const {
        return static_cast<std::size_t>(
            std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
    }
};

/// Calls fold(i, j, osc) for every window [i, j], where osc is the mean
/// absolute deviation of values[i..j] about its mean.
template <class Fold>
void mean_abs_deviation_sweep(const std::vector<double>& values, Fold&& fold) {
    const std::size_t n = values.size();
    const RankIndex idx(values);
    Fenwick cnt(idx.sorted.size()), sum(idx.sorted.size());
    for (std::size_t i = 0; i < n; ++i) {
        cnt.reset();
        sum.reset();
        double run = 0.0;
        for (std::size_t j = i; j < n; ++j) {
            cnt.add(idx.rank[j], 1.0);
            sum.add(idx.rank[j], values[j]);
            run += values[j];
            const double len = static_cast<double>(j - i + 1);
            const double mu = run / len;
            const std::size_t q = idx.count_leq(mu);
            const double c_le = cnt.prefix(q);
            const double s_le = sum.prefix(q);
            const double osc = (mu * c_le - s_le) + (run - s_le) - mu * (len - c_le);
            fold(i, j, std::max(osc, 0.0) / len);
        }
    }
}

/// Calls fold(i, j, avg, finite) for every window, where avg is the window
/// average of exp(lambda |values[k] - mean|). Terms are rescaled around the
/// midrange so the split sums stay representable; `finite` reports whether
/// the average survived without overflow.
template <class Fold>
void exp_oscillation_sweep(const std::vector<double>& values, double lambda, Fold&& fold) {
    const std::size_t n = values.size();
    const RankIndex idx(values);
    const double m0 = 0.5 * (idx.sorted.front() + idx.sorted.back());
    std::vector<double> eplus(idx.sorted.size()), eminus(idx.sorted.size());
    bool table_ok = true;
    for (std::size_t r = 0; r < idx.sorted.size(); ++r) {
        eplus[r] = std::exp(lambda * (idx.sorted[r] - m0));
        eminus[r] = std::exp(-lambda * (idx.sorted[r] - m0));
        if (!std::isfinite(eplus[r]) || !std::isfinite(eminus[r])) table_ok = false;
    }
    Fenwick fm(idx.sorted.size()), fp(idx.sorted.size());
    for (std::size_t i = 0; i < n; ++i) {
        fm.reset();
        fp.reset();
        double run = 0.0;
        double all_plus = 0.0;
        for (std::size_t j = i; j < n; ++j) {
            fm.add(idx.rank[j], eminus[idx.rank[j]]);
            fp.add(idx.rank[j], eplus[idx.rank[j]]);
            all_plus += eplus[idx.rank[j]];
            run += values[j];
            const double len = static_cast<double>(j - i + 1);
            const double mu = run / len;
            const std::size_t q = idx.count_leq(mu);
            // exp(lambda (mu - v)) for v <= mu, exp(lambda (v - mu)) above.
            const double lo = std::exp(lambda * (mu - m0)) * fm.prefix(q);
            const double hi = std::exp(-lambda * (mu - m0)) * (all_plus - fp.prefix(q));
            const double avg = (lo + hi) / len;
            fold(i, j, avg, table_ok && std::isfinite(avg));
        }
    }
}

} // namespace maxlab::detail
