#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxlab/corpus.hpp"
#include "maxlab/verify.hpp"

// The named verification suites behind `verify --suite ...`. Each suite is a
// pure function of the config; corpora derive from the seed unless the config
// carries explicit entries.

namespace maxlab {

inline GeomGrid parse_geom(const std::string& text) {
    if (text.rfind("geom:", 0) != 0)
        throw std::invalid_argument("lambda grid spec must look like geom:lo,hi,count");
    const std::string rest = text.substr(5);
    GeomGrid g;
    if (std::sscanf(rest.c_str(), "%lf,%lf,%d", &g.lo, &g.hi, &g.count) != 3)
        throw std::invalid_argument("bad geometric grid spec: " + text);
    g.points();
    return g;
}

inline CorpusSpec refined(CorpusSpec s) {
    s.grid = Grid1D(s.grid.a, s.grid.b, s.grid.n * 2);
    return s;
}

inline CorpusEntry refined(CorpusEntry e) {
    e.f = refined(e.f);
    if (e.b) e.b = refined(*e.b);
    return e;
}

inline std::vector<CorpusEntry> default_corpus(std::uint64_t seed, std::size_t base_n) {
    const Grid1D gwide(-8.0, 2.0, base_n);
    const Grid1D gunit(0.0, 1.0, 256);
    const Grid1D gsmall(0.0, 1.0, 128);
    std::vector<CorpusEntry> v;
    v.push_back({"log_shift_indicator", CorpusSpec{"indicator", {0.0, 1.0}, 0, gwide},
                 CorpusSpec{"log_shift", {}, 0, gwide}});
    v.push_back({"steps", CorpusSpec{"random_step", {4.0}, seed + 2, gunit},
                 CorpusSpec{"random_step", {5.0}, seed + 1, gunit}});
    v.push_back({"lacunary_gauss", CorpusSpec{"gauss", {0.3, 0.15}, 0, gunit},
                 CorpusSpec{"lacunary_bmo", {6.0}, seed + 3, gunit}});
    v.push_back({"constant_symbol", CorpusSpec{"indicator", {0.25, 0.75}, 0, gsmall},
                 CorpusSpec{"const", {1.0}, 0, gsmall}});
    return v;
}

inline std::vector<CorpusEntry> corpus_of(const VerifyConfig& cfg) {
    return cfg.corpus.empty() ? default_corpus(cfg.seed, cfg.base_n) : cfg.corpus;
}

struct BfPair {
    SampledFn b, f;
};

/// Seeded (b, f) pairs for the exact suite: signed steps, lacunary symbols,
/// off-sample log singularities, and mixed humps, all on one grid.
inline std::vector<BfPair> make_exact_pairs(const VerifyConfig& cfg) {
    std::vector<BfPair> out;
    const Grid1D g(0.0, 1.0, cfg.pairs_n);
    for (int s = 0; s < cfg.pairs_count; ++s) {
        const auto ss = cfg.seed * 1000003ull + static_cast<std::uint64_t>(s);
        BfPair p;
        switch (s % 4) {
        case 0:
            p.b = gen(CorpusSpec{"random_step", {5.0}, ss, g}) - 2.0;
            p.f = gen(CorpusSpec{"random_step", {4.0}, ss + 7, g});
            break;
        case 1: {
            p.b = gen(CorpusSpec{"lacunary_bmo", {5.0}, ss, g});
            const double xc = 0.2 + 0.6 * std::fmod(0.618033 * (s + 1), 1.0);
            p.f = gen(CorpusSpec{"gauss", {xc, 0.08}, 0, g});
            break;
        }
        case 2: {
            // Singularity placed a quarter-cell off a sample point.
            const std::size_t m = (static_cast<std::size_t>(s) * 37) % g.n;
            p.b = gen(CorpusSpec{"log_sing", {g.a + g.h * (static_cast<double>(m) + 0.25)}, 0, g});
            p.f = gen(CorpusSpec{"indicator", {0.1, 0.6}, 0, g});
            break;
        }
        default:
            p.b = 1.5 * gen(CorpusSpec{"random_step", {3.0}, ss, g}) - 1.0;
            p.f = abs(gen(CorpusSpec{"lacunary_bmo", {4.0}, ss + 13, g}));
        }
        out.push_back(std::move(p));
    }
    return out;
}

namespace detail {

/// Folds per-instance case results into one suite case.
struct Aggregate {
    CaseResult out;
    int fails = 0;
    int degens = 0;

    explicit Aggregate(std::string name) { out.name = std::move(name); }

    void add(const CaseResult& c) {
        out.max_ratio = std::max(out.max_ratio, c.max_ratio);
        out.constant = std::max(out.constant, c.constant);
        if (c.failed())
            ++fails;
        else if (c.verdict == "degenerate")
            ++degens;
    }

    CaseResult finish(int instances) {
        out.flags.push_back("instances=" + std::to_string(instances));
        if (degens > 0) out.flags.push_back("degenerate_instances=" + std::to_string(degens));
        if (fails > 0) out.fail("failing_instances=" + std::to_string(fails));
        return std::move(out);
    }
};

/// Marks a case with its refined-grid constant and fails it when the drift
/// exceeds the allowed fraction.
inline void attach_refinement(CaseResult& c, double refined_value, double allowed) {
    const double rel = rel_change(c.constant, refined_value);
    c.flags.push_back(kv("refined_constant", refined_value));
    c.flags.push_back(kv("refine_rel_change", rel));
    if (!(rel <= allowed)) c.fail("unstable_under_refinement");
}

} // namespace detail

inline ReportBundle suite_exact(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "exact";
    rep.config = to_json(cfg);
    const auto pairs = make_exact_pairs(cfg);
    const double tol = cfg.exact_tol;

    detail::Aggregate a11("commutator_bound_two_bneg");
    detail::Aggregate asub("difference_sublinearity");
    detail::Aggregate apos("positive_symbol_bound");
    detail::Aggregate aabs("abs_symbol_kernel_monotone");
    detail::Aggregate asharp("sharp_le_two_maximal");
    detail::Aggregate alow("pointwise_lower_bound");
    detail::Aggregate alayer("layer_cake_moment");
    detail::Aggregate abmo("bmo_power_mean_direction");
    std::vector<detail::Aggregate> apow, aeps;
    for (double d : cfg.deltas)
        apow.emplace_back("power_majorizes_cb_d" + detail::fmt_short(d));
    for (double e : cfg.epsilons)
        aeps.emplace_back("iterated_sandwich_e" + detail::fmt_short(e));

    for (std::size_t s = 0; s < pairs.size(); ++s) {
        const SampledFn& b = pairs[s].b;
        const SampledFn& f = pairs[s].f;
        const SampledFn mf = hl_maximal(f);
        const SampledFn cb = maximal_commutator(b, f);

        a11.add(check_pointwise_domination("", abs(commutator_maximal(b, f)),
                                           cb + 2.0 * (negative_part(b) * mf), 1.0, tol));
        const SampledFn& f2 = pairs[(s + 1) % pairs.size()].f;
        asub.add(check_pointwise_domination("", abs(mf - hl_maximal(f2)), hl_maximal(f - f2),
                                            1.0, tol));
        const SampledFn babs = abs(b);
        apos.add(check_pointwise_domination("", abs(commutator_maximal(babs, f)),
                                            maximal_commutator(babs, f), 1.0, tol));
        aabs.add(check_pointwise_domination("", maximal_commutator(babs, f), cb, 1.0, tol));
        asharp.add(check_pointwise_domination("", sharp_maximal(f), mf, 2.0, tol));
        alow.add(check_pointwise_domination("", abs(f), mf, 1.0, tol));
        for (std::size_t i = 0; i < cfg.deltas.size(); ++i)
            apow[i].add(
                check_pointwise_domination("", cb, power_maximal(cb, cfg.deltas[i]), 1.0, tol));
        for (std::size_t i = 0; i < cfg.epsilons.size(); ++i)
            aeps[i].add(check_m_eps_sandwich("", f, cfg.epsilons[i], tol));
        const Window full{0, f.size() - 1};
        for (double d : cfg.deltas)
            alayer.add(verify_necessity_moment("", b, full, d, cfg.layer_cake_tol));
        abmo.add(verify_bmo_p_equivalence("", b, cfg.ps));
    }
    const int m = static_cast<int>(pairs.size());
    rep.cases.push_back(a11.finish(m));
    rep.cases.push_back(asub.finish(m));
    rep.cases.push_back(apos.finish(m));
    rep.cases.push_back(aabs.finish(m));
    rep.cases.push_back(asharp.finish(m));
    rep.cases.push_back(alow.finish(m));
    rep.cases.push_back(alayer.finish(m));
    rep.cases.push_back(abmo.finish(m));
    for (auto& a : apow) rep.cases.push_back(a.finish(m));
    for (auto& a : aeps) rep.cases.push_back(a.finish(m));
    rep.sort_cases();
    return rep;
}

inline ReportBundle suite_domination(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "domination";
    rep.config = to_json(cfg);
    struct Dom {
        double bnorm = 0.0;
        SampledFn cb, m2;
    };
    const auto prep = [](const SampledFn& b, const SampledFn& f) {
        return Dom{bmo_seminorm(b), maximal_commutator(b, f), iterated_maximal(f)};
    };
    const auto ratio = [&cfg](const Dom& d, std::optional<double> delta) {
        const SampledFn num = delta ? power_maximal(d.cb, *delta) : d.cb;
        double best = 0.0;
        for (std::size_t k = 0; k < num.size(); ++k) {
            const double den = d.bnorm * d.m2.values[k];
            if (den > 0.0) best = std::max(best, num.values[k] / den);
        }
        return best;
    };
    for (const auto& e : corpus_of(cfg)) {
        if (!e.b) continue;
        const SampledFn b = gen(*e.b), f = gen(e.f);
        if (bmo_seminorm(b) == 0.0) {
            CaseResult c;
            c.name = "domination_" + e.name;
            c.degenerate("bmo_zero");
            rep.cases.push_back(std::move(c));
            continue;
        }
        const CorpusEntry er = refined(e);
        const Dom base = prep(b, f), fine = prep(gen(*er.b), gen(er.f));
        const auto add_case = [&](const std::string& name, std::optional<double> delta) {
            CaseResult c;
            c.name = name;
            c.constant = ratio(base, delta);
            c.max_ratio = ratio(base, std::nullopt);
            if (delta) c.flags.push_back(detail::kv("delta", *delta));
            c.flags.push_back("max_ratio_is_delta_free_form");
            if (!std::isfinite(c.constant)) c.fail("non_finite_constant");
            detail::attach_refinement(c, ratio(fine, delta), cfg.refine_rel);
            rep.cases.push_back(std::move(c));
        };
        for (double d : cfg.deltas)
            add_case("domination_" + e.name + "_d" + detail::fmt_short(d), d);
        add_case("domination_" + e.name + "_free", std::nullopt);
    }
    rep.sort_cases();
    return rep;
}

inline ReportBundle suite_weaktype(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "weaktype";
    rep.config = to_json(cfg);
    const auto lambdas = cfg.lambda_grid.points();
    for (const auto& e : corpus_of(cfg)) {
        const CorpusEntry er = refined(e);
        const SampledFn f = gen(e.f), fr = gen(er.f);
        const auto add_case = [&](const std::string& op, const SampledFn& tf,
                                  const SampledFn& tfr) {
            CaseResult c = weak_type_sweep("weak_" + op + "_" + e.name, tf, f, lambdas,
                                           cfg.weak_ratio_bound);
            const CaseResult fine =
                weak_type_sweep("", tfr, fr, lambdas, cfg.weak_ratio_bound);
            if (fine.failed()) c.fail("refined_run_failed");
            detail::attach_refinement(c, fine.constant, cfg.refine_rel);
            rep.cases.push_back(std::move(c));
        };
        add_case("m2", iterated_maximal(f), iterated_maximal(fr));
        if (e.b) {
            const SampledFn b = gen(*e.b), br = gen(*er.b);
            add_case("cb", maximal_commutator(b, f), maximal_commutator(br, fr));
            add_case("mb_commutator", abs(commutator_maximal(b, f)),
                     abs(commutator_maximal(br, fr)));
        }
    }
    {
        // Indicator under M stays below 1, so high thresholds carry no mass.
        const Grid1D g(-8.0, 2.0, 256);
        const SampledFn f = gen(CorpusSpec{"indicator", {0.0, 1.0}, 0, g});
        CaseResult c = weak_type_sweep("weak_maximal_indicator_zero", hl_maximal(f), f,
                                       GeomGrid{1.5, 4.0, 4}.points(), cfg.weak_ratio_bound);
        if (c.max_ratio != 0.0) c.fail("expected_empty_level_sets");
        rep.cases.push_back(std::move(c));
    }
    rep.sort_cases();
    return rep;
}

inline ReportBundle suite_jn(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "jn";
    rep.config = to_json(cfg);
    const Grid1D g(cfg.jn_a, cfg.jn_b, cfg.jn_n);
    const SampledFn blog = gen(CorpusSpec{"log_sing", {0.0}, 0, g});
    rep.cases.push_back(john_nirenberg_fit("jn_decay_log_singular", blog,
                                           Window{0, g.n - 1}, cfg.t_grid.points(),
                                           cfg.jn_slope_max));
    {
        const Grid1D gs(0.0, 1.0, 64);
        const SampledFn bc = gen(CorpusSpec{"const", {1.0}, 0, gs});
        rep.cases.push_back(john_nirenberg_fit("jn_constant_degenerate", bc, Window{0, gs.n - 1},
                                               cfg.t_grid.points(), cfg.jn_slope_max));
    }
    {
        const double bnorm = bmo_seminorm(blog);
        CaseResult c = verify_exp_integrability("exp_integrability_log_singular", blog,
                                                cfg.exp_lambda_frac / bnorm);
        c.flags.push_back(detail::kv("bmo_seminorm", bnorm));
        rep.cases.push_back(std::move(c));
    }
    {
        const Grid1D gu(0.0, 1.0, 256);
        const SampledFn bl = gen(CorpusSpec{"lacunary_bmo", {6.0}, cfg.seed + 3, gu});
        const double bnorm = bmo_seminorm(bl);
        CaseResult c = verify_exp_integrability("exp_integrability_lacunary", bl,
                                                cfg.exp_lambda_frac / bnorm);
        c.flags.push_back(detail::kv("bmo_seminorm", bnorm));
        rep.cases.push_back(std::move(c));
    }
    rep.sort_cases();
    return rep;
}

inline ReportBundle suite_orlicz(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "orlicz";
    rep.config = to_json(cfg);
    const Grid1D g(0.0, 1.0, 64);
    std::mt19937_64 eng(cfg.seed * 0x9E3779B97F4A7C15ull + 11);

    {
        CaseResult c;
        c.name = "luxemburg_matches_scan";
        for (int t = 0; t < cfg.lux_windows; ++t) {
            SampledFn f = gen(CorpusSpec{"random_step", {5.0}, cfg.seed + 100 + t, g});
            if (t % 3 == 1) f = f + 0.7;
            if (t % 3 == 2) f = 0.37 * f;
            const std::size_t i = eng() % g.n;
            const std::size_t j = i + eng() % (g.n - i);
            const OrliczFunction phi =
                (t & 1) ? OrliczFunction::expl() : OrliczFunction::llogl();
            const double v1 = luxemburg_average_detail(f, Window{i, j}, phi).value;
            const double v2 = luxemburg_scan_oracle(f, Window{i, j}, phi);
            c.max_ratio = std::max(c.max_ratio, std::abs(v1 - v2) / std::max(v2, 1e-30));
        }
        c.constant = c.max_ratio;
        c.flags.push_back("windows=" + std::to_string(cfg.lux_windows));
        if (!(c.max_ratio <= cfg.lux_oracle_tol)) c.fail("scan_oracle_disagreement");
        rep.cases.push_back(std::move(c));
    }
    {
        CaseResult c;
        c.name = "holder_product_bound";
        for (int t = 0; t < cfg.holder_triples; ++t) {
            const SampledFn f = gen(CorpusSpec{"random_step", {4.0}, cfg.seed + 300 + t, g}) + 1.0;
            const SampledFn f2 = gen(CorpusSpec{"random_step", {4.0}, cfg.seed + 500 + t, g}) + 1.0;
            const std::size_t i = eng() % g.n;
            const Window w{i, i + eng() % (g.n - i)};
            const double num = window_average(abs(f * f2), w);
            const double den = luxemburg_average(f, w, OrliczFunction::llogl()) *
                               luxemburg_average(f2, w, OrliczFunction::expl());
            c.max_ratio = std::max(c.max_ratio, num / den);
        }
        c.constant = c.max_ratio;
        c.flags.push_back("triples=" + std::to_string(cfg.holder_triples));
        if (!(c.max_ratio <= 1.0 + cfg.holder_tol)) c.fail("product_bound_violated");
        rep.cases.push_back(std::move(c));
    }
    {
        // Constant inputs have closed-form Luxemburg averages: c for the
        // Zygmund function (phi(1)=1) and c/log 2 for exp(t)-1.
        CaseResult c;
        c.name = "luxemburg_constant_closed_forms";
        const Grid1D gs(0.0, 1.0, 32);
        for (double v : {0.3, 1.0, 7.5}) {
            const SampledFn fc = gen(CorpusSpec{"const", {v}, 0, gs});
            for (const Window& w : {Window{0, 31}, Window{3, 17}}) {
                const double e1 =
                    std::abs(luxemburg_average(fc, w, OrliczFunction::llogl()) - v) / v;
                const double want = v / std::log(2.0);
                const double e2 =
                    std::abs(luxemburg_average(fc, w, OrliczFunction::expl()) - want) / want;
                c.max_ratio = std::max({c.max_ratio, e1, e2});
            }
        }
        c.constant = c.max_ratio;
        if (!(c.max_ratio <= cfg.orlicz_const_tol)) c.fail("closed_form_mismatch");
        rep.cases.push_back(std::move(c));
    }
    {
        CaseResult c;
        c.name = "log_superadditivity_grid";
        const auto pts = GeomGrid{1e-4, 1e4, 100}.points();
        const auto logp = [](double t) { return std::max(std::log(t), 0.0); };
        bool ok = true;
        for (double a : pts)
            for (double b2 : pts) {
                ok = ok && verify_log_superadditivity(a, b2);
                c.max_ratio = std::max(c.max_ratio, (1.0 + logp(a * b2)) /
                                                        ((1.0 + logp(a)) * (1.0 + logp(b2))));
            }
        c.constant = c.max_ratio;
        c.flags.push_back("grid=100x100");
        if (!ok) c.fail("inequality_violated");
        rep.cases.push_back(std::move(c));
    }
    for (const auto& e : corpus_of(cfg)) {
        if (e.name != "log_shift_indicator") continue;
        rep.cases.push_back(verify_m2_llogl_equivalence("m2_matches_llogl_" + e.name, gen(e.f),
                                                        cfg.m2_band_lo, cfg.m2_band_hi));
    }
    const Grid1D gr(0.0, 1.0, cfg.m2_random_n);
    for (int t = 0; t < cfg.m2_random_entries; ++t) {
        char tag[16];
        std::snprintf(tag, sizeof(tag), "r%02d", t);
        const SampledFn f = gen(CorpusSpec{"random_step", {6.0}, cfg.seed + 700 + t, gr});
        rep.cases.push_back(verify_m2_llogl_equivalence(std::string("m2_matches_llogl_") + tag, f,
                                                        cfg.m2_band_lo, cfg.m2_band_hi));
    }
    rep.sort_cases();
    return rep;
}

inline ReportBundle suite_lp(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "lp";
    rep.config = to_json(cfg);
    for (const auto& e : corpus_of(cfg)) {
        if (!e.b) continue;
        const CorpusEntry er = refined(e);
        const SampledFn b = gen(*e.b), f = gen(e.f);
        const SampledFn br = gen(*er.b), fr = gen(er.f);
        for (double p : cfg.ps) {
            CaseResult c = lp_boundedness_ratio("lp_" + e.name + "_p" + detail::fmt_short(p), b,
                                                f, p);
            const CaseResult fine = lp_boundedness_ratio("", br, fr, p);
            if (c.verdict == "pass") {
                if (fine.failed()) c.fail("refined_run_failed");
                detail::attach_refinement(c, fine.constant, cfg.refine_rel);
                const double rel2 = detail::rel_change(c.max_ratio, fine.max_ratio);
                c.flags.push_back(detail::kv("refined_max_ratio", fine.max_ratio));
                if (!(rel2 <= cfg.refine_rel)) c.fail("unstable_under_refinement");
            }
            rep.cases.push_back(std::move(c));
        }
    }
    rep.sort_cases();
    return rep;
}

inline ReportBundle suite_example47(const VerifyConfig& cfg) {
    ReportBundle rep;
    rep.suite = "example47";
    rep.config = to_json(cfg);
    rep.cases.push_back(example47_report("example47", cfg.x47, cfg.n47,
                                         cfg.lambda47.points(), cfg.tol47, cfg.factor47));
    rep.sort_cases();
    return rep;
}

inline ReportBundle run_suite(const std::string& name, const VerifyConfig& cfg) {
    cfg.validate();
    if (name == "exact") return suite_exact(cfg);
    if (name == "domination") return suite_domination(cfg);
    if (name == "weaktype") return suite_weaktype(cfg);
    if (name == "jn") return suite_jn(cfg);
    if (name == "orlicz") return suite_orlicz(cfg);
    if (name == "lp") return suite_lp(cfg);
    if (name == "example47") return suite_example47(cfg);
    if (name == "all") {
        ReportBundle rep;
        rep.suite = "all";
        rep.config = to_json(cfg);
        for (const char* s :
             {"exact", "domination", "weaktype", "jn", "orlicz", "lp", "example47"}) {
            ReportBundle sub = run_suite(s, cfg);
            for (auto& c : sub.cases) {
                c.name = std::string(s) + "." + c.name;
                rep.cases.push_back(std::move(c));
            }
        }
        rep.sort_cases();
        return rep;
    }
    throw std::invalid_argument("unknown suite: " + name +
                                " (known: exact, domination, weaktype, jn, orlicz, lp, "
                                "example47, all)");
}

} // namespace maxlab
