#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxlab {

/// Uniform partition of [a, b] into n cells of width h = (b - a) / n.
/// Samples live at cell midpoints x_k = a + (k + 1/2) h, so log-type
/// singularities at integer abscissas never land on a sample point when the
/// endpoints are integers.
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    std::size_t n = 1;
    double h = 1.0;

    Grid1D() = default;

    Grid1D(double a_, double b_, std::size_t n_)
        : a(a_), b(b_), n(n_), h((b_ - a_) / static_cast<double>(n_)) {
        if (!std::isfinite(a_) || !std::isfinite(b_))
            throw std::invalid_argument("Grid1D: endpoints must be finite");
        if (!(b_ > a_))
            throw std::invalid_argument("Grid1D: requires b > a");
        if (n_ < 1)
            throw std::invalid_argument("Grid1D: requires n >= 1");
    }

    double x(std::size_t k) const { return a + (static_cast<double>(k) + 0.5) * h; }

    /// Index of the sample point closest to x, clamped to [0, n-1].
    std::size_t nearest_index(double x_) const {
        const double t = (x_ - a) / h - 0.5;
        if (t <= 0.0) return 0;
        const auto k = static_cast<std::size_t>(std::llround(t));
        return k >= n ? n - 1 : k;
    }

    bool operator==(const Grid1D& other) const {
        return a == other.a && b == other.b && n == other.n;
    }
};

/// Closed index range [i, j] of consecutive samples; the discrete stand-in
/// for an interval Q contained in [a, b].
struct Window {
    std::size_t i = 0;
    std::size_t j = 0;

    std::size_t length() const { return j - i + 1; }
    bool contains(std::size_t k) const { return i <= k && k <= j; }
};

inline void check_window(const Window& w, const Grid1D& g) {
    if (w.i > w.j || w.j >= g.n)
        throw std::invalid_argument("Window: need i <= j < n, got [" +
                                    std::to_string(w.i) + ", " + std::to_string(w.j) +
                                    "] on n = " + std::to_string(g.n));
}

/// Measure of the window as a subinterval: (j - i + 1) h.
inline double window_measure(const Window& w, const Grid1D& g) {
    return static_cast<double>(w.length()) * g.h;
}

/// A function sampled on a grid. Values must be finite; construction rejects
/// NaN/inf and reports the offending sample.
struct SampledFn {
    Grid1D grid;
    std::vector<double> values;

    SampledFn() = default;

    SampledFn(Grid1D g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n)
            throw std::invalid_argument("SampledFn: got " + std::to_string(values.size()) +
                                        " values for n = " + std::to_string(grid.n));
        for (std::size_t k = 0; k < values.size(); ++k)
            if (!std::isfinite(values[k]))
                throw std::invalid_argument("SampledFn: non-finite value at index " +
                                            std::to_string(k) + " (x = " +
                                            std::to_string(grid.x(k)) + ")");
    }

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t k) const { return values[k]; }
};

/// Sample a callable at every grid point. Throws if any value is non-finite,
/// naming the abscissa (e.g. a singularity landing on a sample point).
template <class F>
SampledFn sample(const Grid1D& g, F&& fn) {
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        v[k] = fn(g.x(k));
        if (!std::isfinite(v[k]))
            throw std::invalid_argument("sample: non-finite value at x = " +
                                        std::to_string(g.x(k)));
    }
    return SampledFn(g, std::move(v));
}

inline void check_same_grid(const SampledFn& f, const SampledFn& g, const char* who) {
    if (!(f.grid == g.grid))
        throw std::invalid_argument(std::string(who) + ": operands sampled on different grids");
}

/// Prefix sums with the cell weight h: P[k] = h * sum_{m < k} v_m, P has n+1
/// entries. Window integrals are P[j+1] - P[i].
inline std::vector<double> prefix_sums(const SampledFn& f) {
    std::vector<double> p(f.size() + 1, 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) p[k + 1] = p[k] + f.values[k] * f.grid.h;
    return p;
}

/// Plain average of the samples in w, equal to (P[j+1] - P[i]) / |Q|.
inline double window_average(const SampledFn& f, const Window& w) {
    check_window(w, f.grid);
    double s = 0.0;
    for (std::size_t k = w.i; k <= w.j; ++k) s += f.values[k];
    return s / static_cast<double>(w.length());
}

namespace detail {
template <class Op>
SampledFn zip(const SampledFn& f, const SampledFn& g, Op op, const char* who) {
    check_same_grid(f, g, who);
    std::vector<double> v(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) v[k] = op(f.values[k], g.values[k]);
    return SampledFn(f.grid, std::move(v));
}

template <class Op>
SampledFn map(const SampledFn& f, Op op) {
    std::vector<double> v(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) v[k] = op(f.values[k]);
    return SampledFn(f.grid, std::move(v));
}
} // namespace detail

inline SampledFn operator+(const SampledFn& f, const SampledFn& g) {
    return detail::zip(f, g, [](double x, double y) { return x + y; }, "operator+");
}

inline SampledFn operator-(const SampledFn& f, const SampledFn& g) {
    return detail::zip(f, g, [](double x, double y) { return x - y; }, "operator-");
}

inline SampledFn operator*(const SampledFn& f, const SampledFn& g) {
    return detail::zip(f, g, [](double x, double y) { return x * y; }, "operator*");
}

inline SampledFn operator*(double c, const SampledFn& f) {
    return detail::map(f, [c](double x) { return c * x; });
}

inline SampledFn operator+(const SampledFn& f, double c) {
    return detail::map(f, [c](double x) { return x + c; });
}

inline SampledFn operator-(const SampledFn& f, double c) { return f + (-c); }

inline SampledFn abs(const SampledFn& f) {
    return detail::map(f, [](double x) { return std::abs(x); });
}

/// |f|^p, with 0^p = 0 for p > 0.
inline SampledFn pow_abs(const SampledFn& f, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("pow_abs: requires p > 0");
    return detail::map(f, [p](double x) { return std::pow(std::abs(x), p); });
}

inline double max_abs(const SampledFn& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

} // namespace maxlab
