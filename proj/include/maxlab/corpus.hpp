#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxlab/grid.hpp"

// Named test-function generators. Seeded generators draw from mt19937_64
// with explicit derivations (modulo for integers), so a (name, params, seed,
// grid) tuple reproduces bit-identical samples on any platform.

namespace maxlab {

inline constexpr const char* kRngName = "mt19937_64";

struct CorpusSpec {
    std::string name;
    std::vector<double> params;
    std::uint64_t seed = 0;
    Grid1D grid;
};

namespace detail {

inline double spec_param(const CorpusSpec& s, std::size_t k, const char* what) {
    if (k >= s.params.size())
        throw std::invalid_argument("corpus: generator '" + s.name + "' missing parameter '" +
                                    what + "'");
    return s.params[k];
}

inline std::uint64_t draw_index(std::mt19937_64& eng, std::uint64_t m) { return eng() % m; }

} // namespace detail

/// random_step draws one level per dyadic block; the block count is fixed so
/// refining n -> 2n (n divisible by the block count) resamples the same
/// underlying step function.
inline constexpr std::size_t kStepBlocks = 16;

inline SampledFn gen(const CorpusSpec& s) {
    const Grid1D& g = s.grid;
    if (s.name == "const" || s.name == "constant") {
        const double c = detail::spec_param(s, 0, "value");
        return sample(g, [c](double) { return c; });
    }
    if (s.name == "indicator") {
        const double u = detail::spec_param(s, 0, "left");
        const double v = detail::spec_param(s, 1, "right");
        if (!(u < v)) throw std::invalid_argument("corpus: indicator requires left < right");
        return sample(g, [u, v](double x) { return (u < x && x < v) ? 1.0 : 0.0; });
    }
    if (s.name == "log_shift") return sample(g, [](double x) { return std::log(std::abs(1.0 + x)); });
    if (s.name == "log_sing") {
        const double c = detail::spec_param(s, 0, "center");
        return sample(g, [c](double x) { return std::log(std::abs(x - c)); });
    }
    if (s.name == "gauss") {
        const double c = detail::spec_param(s, 0, "center");
        const double w = detail::spec_param(s, 1, "width");
        if (!(w > 0.0)) throw std::invalid_argument("corpus: gauss requires width > 0");
        return sample(g, [c, w](double x) {
            const double t = (x - c) / w;
            return std::exp(-0.5 * t * t);
        });
    }
    if (s.name == "random_step") {
        const auto levels = static_cast<std::uint64_t>(detail::spec_param(s, 0, "levels"));
        if (levels < 1) throw std::invalid_argument("corpus: random_step requires levels >= 1");
        std::mt19937_64 eng(s.seed);
        double block_vals[kStepBlocks];
        for (auto& bv : block_vals) bv = static_cast<double>(detail::draw_index(eng, levels));
        std::vector<double> v(g.n);
        for (std::size_t k = 0; k < g.n; ++k) v[k] = block_vals[kStepBlocks * k / g.n];
        return SampledFn(g, std::move(v));
    }
    if (s.name == "lacunary_bmo") {
        const auto terms = static_cast<std::size_t>(detail::spec_param(s, 0, "terms"));
        if (terms < 1) throw std::invalid_argument("corpus: lacunary_bmo requires terms >= 1");
        std::mt19937_64 eng(s.seed);
        std::vector<double> sign(terms);
        for (auto& sg : sign) sg = (eng() & 1u) ? 1.0 : -1.0;
        return sample(g, [&](double x) {
            double acc = 0.0;
            double freq = 2.0;
            for (std::size_t m = 0; m < terms; ++m, freq *= 2.0) acc += sign[m] * std::cos(freq * x);
            return acc;
        });
    }
    throw std::invalid_argument(
        "corpus: unknown generator '" + s.name +
        "' (known: const, indicator, log_shift, log_sing, gauss, random_step, lacunary_bmo)");
}

/// Parses the mini-syntax "name:p1,p2" (':' accepted as a separator too).
/// Seeded generators take an optional trailing value as a seed override:
/// "random_step:4:7" is levels 4 with seed 7.
inline CorpusSpec parse_spec(const std::string& text, const Grid1D& grid,
                             std::uint64_t default_seed = 0) {
    CorpusSpec s;
    s.grid = grid;
    s.seed = default_seed;
    const auto colon = text.find(':');
    s.name = text.substr(0, colon);
    if (s.name.empty()) throw std::invalid_argument("corpus: empty generator name in '" + text + "'");
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            const auto next = rest.find_first_of(",:", pos);
            const std::string tok = rest.substr(pos, next == std::string::npos ? next : next - pos);
            try {
                s.params.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("corpus: bad parameter '" + tok + "' in '" + text + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    // Seeded generators accept one trailing value as a seed override, e.g.
    // "random_step:4:7" is levels 4 with seed 7.
    if ((s.name == "random_step" || s.name == "lacunary_bmo") && s.params.size() > 1) {
        s.seed = static_cast<std::uint64_t>(s.params.back());
        s.params.pop_back();
    }
    return s;
}

inline nlohmann::json to_json(const CorpusSpec& s) {
    return {{"gen", s.name},
            {"params", s.params},
            {"seed", s.seed},
            {"grid", {{"a", s.grid.a}, {"b", s.grid.b}, {"n", s.grid.n}}}};
}

inline CorpusSpec spec_from_json(const nlohmann::json& j, const Grid1D& fallback_grid,
                                 std::uint64_t default_seed) {
    CorpusSpec s;
    s.name = j.at("gen").get<std::string>();
    if (j.contains("params")) s.params = j.at("params").get<std::vector<double>>();
    s.seed = j.value("seed", default_seed);
    if (j.contains("grid")) {
        const auto& jg = j.at("grid");
        s.grid = Grid1D(jg.at("a").get<double>(), jg.at("b").get<double>(),
                        jg.at("n").get<std::size_t>());
    } else {
        s.grid = fallback_grid;
    }
    return s;
}

/// A named (b, f) pair for the verification corpora; b is absent for checks
/// that only involve f.
struct CorpusEntry {
    std::string name;
    CorpusSpec f;
    std::optional<CorpusSpec> b;
};

inline std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j,
                                                 std::uint64_t default_seed) {
    if (!j.is_array()) throw std::invalid_argument("corpus manifest: expected a JSON array");
    std::vector<CorpusEntry> out;
    const Grid1D unit(0.0, 1.0, 256);
    for (const auto& je : j) {
        CorpusEntry e;
        e.name = je.at("name").get<std::string>();
        e.f = spec_from_json(je.at("f"), unit, default_seed);
        if (je.contains("b")) e.b = spec_from_json(je.at("b"), e.f.grid, default_seed + 1);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace maxlab
