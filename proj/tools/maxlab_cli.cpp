// CLI for the maximal-operator lab: apply operators to sampled functions,
// run verification suites, and emit level-set sweeps.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <maxlab/maxlab.hpp>

namespace {

maxlab::Grid1D parse_grid(const std::string& text) {
    double a = 0.0, b = 0.0;
    long long n = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lld", &a, &b, &n) != 3 || n < 1)
        throw std::invalid_argument("--grid: expected a,b,n, got '" + text + "'");
    return maxlab::Grid1D(a, b, static_cast<std::size_t>(n));
}

maxlab::LinGrid parse_lin(const std::string& text) {
    maxlab::LinGrid g;
    if (std::sscanf(text.c_str(), "%lf,%lf,%d", &g.lo, &g.hi, &g.count) != 3)
        throw std::invalid_argument("--t-grid: expected lo,hi,count, got '" + text + "'");
    g.points();
    return g;
}

// An operand is a readable file path or a builtin spec; builtins need a grid.
maxlab::SampledFn resolve_operand(const std::string& text,
                                  const std::optional<maxlab::Grid1D>& grid, std::uint64_t seed,
                                  const char* flag) {
    if (std::ifstream probe(text); probe.good()) return maxlab::load_sampled_fn(text);
    if (!grid)
        throw std::invalid_argument(std::string(flag) + ": builtin spec '" + text +
                                    "' requires --grid a,b,n");
    return maxlab::gen(maxlab::parse_spec(text, *grid, seed));
}

bool wants_json(const std::string& format, const std::string& path) {
    if (!format.empty()) {
        if (format != "csv" && format != "json")
            throw std::invalid_argument("--format: expected csv or json, got '" + format + "'");
        return format == "json";
    }
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    is >> j;
    return j;
}

struct ApplyArgs {
    std::string op, b, f, builtin, input, grid, out = "-", format, phi = "llogl";
    double delta = 0.5;
    bool delta_given = false;
    std::uint64_t seed = 0;
};

int run_apply(const ApplyArgs& a) {
    using namespace maxlab;
    const std::vector<std::string> ops{"M",  "M2",           "Mdelta",    "sharp", "sharp_delta",
                                       "Cb", "MbCommutator", "OrliczMax", "rearrange"};
    if (std::find(ops.begin(), ops.end(), a.op) == ops.end())
        throw std::invalid_argument("--op: unknown operator '" + a.op + "'");
    std::optional<Grid1D> grid;
    if (!a.grid.empty()) grid = parse_grid(a.grid);

    const std::string fsrc = !a.input.empty() ? a.input : (!a.f.empty() ? a.f : a.builtin);
    if (fsrc.empty())
        throw std::invalid_argument("--f/--input/--builtin: operator " + a.op +
                                    " needs an input function");
    const SampledFn f = resolve_operand(fsrc, grid, a.seed, "--f");

    const bool needs_b = a.op == "Cb" || a.op == "MbCommutator";
    std::optional<SampledFn> b;
    if (needs_b) {
        if (a.b.empty()) throw std::invalid_argument("--b: operator " + a.op + " requires --b");
        b = resolve_operand(a.b, grid ? grid : std::optional<Grid1D>(f.grid), a.seed + 1, "--b");
    }
    if ((a.op == "Mdelta" || a.op == "sharp_delta") && !a.delta_given)
        throw std::invalid_argument("--delta: operator " + a.op + " requires --delta");

    const bool json_out = wants_json(a.format, a.out == "-" ? "" : a.out);
    const auto emit = [&](const auto& payload) {
        if (a.out == "-") {
            if (json_out)
                std::cout << to_json(payload).dump(2) << '\n';
            else
                write_csv(payload, std::cout);
            return;
        }
        std::ofstream os(a.out);
        if (!os) throw std::runtime_error("cannot open for writing: " + a.out);
        if (json_out)
            os << to_json(payload).dump(2) << '\n';
        else
            write_csv(payload, os);
        if (!os) throw std::runtime_error("write failed: " + a.out);
    };

    if (a.op == "rearrange") {
        emit(rearrangement(f));
        return 0;
    }
    SampledFn result;
    if (a.op == "M")
        result = hl_maximal(f);
    else if (a.op == "M2")
        result = iterated_maximal(f);
    else if (a.op == "Mdelta")
        result = power_maximal(f, a.delta);
    else if (a.op == "sharp")
        result = sharp_maximal(f);
    else if (a.op == "sharp_delta")
        result = power_sharp_maximal(f, a.delta);
    else if (a.op == "Cb")
        result = maximal_commutator(*b, f);
    else if (a.op == "OrliczMax") {
        if (a.phi != "llogl" && a.phi != "expl")
            throw std::invalid_argument("--phi: expected llogl or expl, got '" + a.phi + "'");
        result = orlicz_maximal(
            f, a.phi == "llogl" ? OrliczFunction::llogl() : OrliczFunction::expl());
    } else
        result = commutator_maximal(*b, f);
    emit(result);
    return 0;
}

struct VerifyArgs {
    std::string suite, config, corpus, out = "report.json", lambda, tgrid;
    std::vector<double> deltas, epsilons, ps;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double X = 0.0;
    bool X_given = false;
    std::uint64_t n = 0;
    bool n_given = false;
};

int run_verify(const VerifyArgs& v) {
    using namespace maxlab;
    VerifyConfig cfg;
    if (!v.config.empty()) cfg = config_from_json(load_json(v.config));
    if (v.seed_given) cfg.seed = v.seed;
    if (!v.corpus.empty()) cfg.corpus = corpus_from_json(load_json(v.corpus), cfg.seed);
    if (v.X_given) cfg.x47 = v.X;
    if (v.n_given) cfg.n47 = v.n;
    if (!v.deltas.empty()) cfg.deltas = v.deltas;
    if (!v.epsilons.empty()) cfg.epsilons = v.epsilons;
    if (!v.ps.empty()) cfg.ps = v.ps;
    if (!v.lambda.empty()) {
        if (v.suite == "example47")
            cfg.lambda47 = parse_geom(v.lambda);
        else
            cfg.lambda_grid = parse_geom(v.lambda);
    }
    if (!v.tgrid.empty()) cfg.t_grid = parse_lin(v.tgrid);
    cfg.validate();

    const ReportBundle rep = run_suite(v.suite, cfg);
    {
        std::ofstream os(v.out);
        if (!os) throw std::runtime_error("cannot open for writing: " + v.out);
        os << rep.to_json().dump(2) << '\n';
        if (!os) throw std::runtime_error("write failed: " + v.out);
    }
    for (const auto& c : rep.cases) std::cout << c.verdict << "  " << c.name << '\n';
    const bool ok = rep.passed();
    std::cout << "suite " << rep.suite << ": " << (ok ? "PASS" : "FAIL") << " ("
              << rep.cases.size() << " cases, report " << v.out << ")\n";
    return ok ? 0 : 1;
}

struct SweepArgs {
    std::string op, b, f, builtin, input, grid, lambda, out = "-";
    std::uint64_t seed = 0;
};

int run_sweep(const SweepArgs& s) {
    using namespace maxlab;
    std::optional<Grid1D> grid;
    if (!s.grid.empty()) grid = parse_grid(s.grid);
    const std::string fsrc = !s.input.empty() ? s.input : (!s.f.empty() ? s.f : s.builtin);
    if (fsrc.empty()) throw std::invalid_argument("--f/--input/--builtin: sweep needs a function");
    const SampledFn f = resolve_operand(fsrc, grid, s.seed, "--f");

    SampledFn tf;
    if (s.op == "M")
        tf = hl_maximal(f);
    else if (s.op == "M2")
        tf = iterated_maximal(f);
    else if (s.op == "Cb" || s.op == "MbCommutator") {
        if (s.b.empty()) throw std::invalid_argument("--b: operator " + s.op + " requires --b");
        const SampledFn b =
            resolve_operand(s.b, grid ? grid : std::optional<Grid1D>(f.grid), s.seed + 1, "--b");
        tf = s.op == "Cb" ? maximal_commutator(b, f) : commutator_maximal(b, f);
    } else
        throw std::invalid_argument("--op: sweep supports M, M2, Cb, MbCommutator; got '" +
                                    s.op + "'");

    const CaseResult c = weak_type_sweep("sweep", tf, f, parse_geom(s.lambda).points(),
                                         std::numeric_limits<double>::infinity());
    if (s.out == "-") {
        write_sweep_csv(c, std::cout);
    } else {
        std::ofstream os(s.out);
        if (!os) throw std::runtime_error("cannot open for writing: " + s.out);
        write_sweep_csv(c, os);
        if (!os) throw std::runtime_error("write failed: " + s.out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal-operator lab: apply, verify, sweep"};
    app.require_subcommand(1);

    ApplyArgs a;
    auto* apply = app.add_subcommand("apply", "apply an operator to a sampled function");
    apply->add_option("--op", a.op, "M M2 Mdelta sharp sharp_delta Cb MbCommutator OrliczMax rearrange")
        ->required();
    apply->add_option("--b", a.b, "symbol: builtin spec or file");
    apply->add_option("--f", a.f, "function: builtin spec or file");
    apply->add_option("--builtin", a.builtin, "alias for --f as a builtin spec");
    apply->add_option("--input", a.input, "function from a CSV/JSON file");
    apply->add_option("--grid", a.grid, "a,b,n for builtin specs");
    apply->add_option("--delta", a.delta, "power for Mdelta/sharp_delta");
    apply->add_option("--phi", a.phi, "Orlicz function: llogl or expl");
    apply->add_option("--seed", a.seed, "seed for seeded builtins");
    apply->add_option("--out", a.out, "output path, - for stdout");
    apply->add_option("--format", a.format, "csv or json");

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", v.suite, "exact domination weaktype jn orlicz lp example47 all")
        ->required();
    verify->add_option("--config", v.config, "JSON config file");
    verify->add_option("--corpus", v.corpus, "JSON corpus manifest");
    verify->add_option("--seed", v.seed, "seed override");
    verify->add_option("--X", v.X, "example domain half-width override");
    verify->add_option("--n", v.n, "example grid size override");
    verify->add_option("--delta", v.deltas, "delta list override");
    verify->add_option("--eps", v.epsilons, "epsilon list override");
    verify->add_option("--p", v.ps, "exponent list override");
    verify->add_option("--lambda-grid", v.lambda, "geom:lo,hi,count");
    verify->add_option("--t-grid", v.tgrid, "lo,hi,count");
    verify->add_option("--out", v.out, "report path");

    SweepArgs s;
    auto* sweep = app.add_subcommand("sweep", "emit a lambda sweep CSV");
    sweep->add_option("--op", s.op, "M M2 Cb MbCommutator")->required();
    sweep->add_option("--b", s.b, "symbol: builtin spec or file");
    sweep->add_option("--f", s.f, "function: builtin spec or file");
    sweep->add_option("--builtin", s.builtin, "alias for --f");
    sweep->add_option("--input", s.input, "function from a CSV/JSON file");
    sweep->add_option("--grid", s.grid, "a,b,n for builtin specs");
    sweep->add_option("--lambda-grid", s.lambda, "geom:lo,hi,count")->required();
    sweep->add_option("--seed", s.seed, "seed for seeded builtins");
    sweep->add_option("--out", s.out, "output CSV path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        a.delta_given = apply->count("--delta") > 0;
        v.seed_given = verify->count("--seed") > 0;
        v.X_given = verify->count("--X") > 0;
        v.n_given = verify->count("--n") > 0;
        if (app.got_subcommand(apply)) return run_apply(a);
        if (app.got_subcommand(verify)) return run_verify(v);
        return run_sweep(s);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
