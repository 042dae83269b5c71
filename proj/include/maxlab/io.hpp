#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxlab/grid.hpp"
#include "maxlab/norms.hpp"

// Serialization of sampled functions and rearrangement profiles. CSV carries
// full-precision scientific values; JSON stores the grid exactly, so the
// JSON round trip is bit-exact while CSV reconstructs the grid from the x
// column.

namespace maxlab {

namespace detail {

inline std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

inline std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace detail

inline void write_csv(const SampledFn& f, std::ostream& os) {
    os << "x,value\n";
    for (std::size_t k = 0; k < f.size(); ++k)
        os << detail::fmt_full(f.grid.x(k)) << ',' << detail::fmt_full(f.values[k]) << '\n';
}

inline void write_csv(const RearrangementProfile& p, std::ostream& os) {
    os << "t,value\n";
    for (std::size_t m = 0; m < p.values.size(); ++m)
        os << detail::fmt_full(static_cast<double>(m) * p.mass) << ','
           << detail::fmt_full(p.values[m]) << '\n';
}

inline nlohmann::json to_json(const SampledFn& f) {
    return {{"grid", {{"a", f.grid.a}, {"b", f.grid.b}, {"n", f.grid.n}}}, {"values", f.values}};
}

inline nlohmann::json to_json(const RearrangementProfile& p) {
    return {{"mass", p.mass}, {"values", p.values}};
}

inline SampledFn sampled_fn_from_json(const nlohmann::json& j) {
    const auto& jg = j.at("grid");
    Grid1D g(jg.at("a").get<double>(), jg.at("b").get<double>(), jg.at("n").get<std::size_t>());
    return SampledFn(g, j.at("values").get<std::vector<double>>());
}

/// Reads the `x,value` layout back; the grid is inferred from the x column
/// (uniform spacing required, at least two rows).
inline SampledFn read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || detail::strip(line) != "x,value")
        throw std::runtime_error("read_csv: expected header 'x,value'");
    std::vector<double> xs, vs;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = detail::strip(line);
        if (t.empty()) continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("read_csv: line " + std::to_string(lineno) + ": missing comma");
        try {
            xs.push_back(std::stod(t.substr(0, comma)));
            vs.push_back(std::stod(t.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::runtime_error("read_csv: line " + std::to_string(lineno) + ": bad number");
        }
    }
    if (xs.size() < 2) throw std::runtime_error("read_csv: need at least two rows to infer the grid");
    const double h = xs[1] - xs[0];
    if (!(h > 0.0)) throw std::runtime_error("read_csv: x column must be strictly increasing");
    for (std::size_t k = 1; k < xs.size(); ++k)
        if (std::abs(xs[k] - xs[k - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::runtime_error("read_csv: non-uniform spacing near row " + std::to_string(k + 1));
    Grid1D g(xs.front() - 0.5 * h, xs.back() + 0.5 * h, xs.size());
    try {
        return SampledFn(g, std::move(vs));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("read_csv: ") + e.what());
    }
}

inline void save_sampled_fn(const SampledFn& f, const std::string& path, const std::string& format) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    if (format == "csv")
        write_csv(f, os);
    else if (format == "json")
        os << to_json(f).dump(2) << '\n';
    else
        throw std::invalid_argument("unknown format: " + format);
    if (!os) throw std::runtime_error("write failed: " + path);
}

inline SampledFn load_sampled_fn(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    try {
        if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
            nlohmann::json j;
            is >> j;
            return sampled_fn_from_json(j);
        }
        return read_csv(is);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

} // namespace maxlab
