#include <maxlab/corpus.hpp>
#include <maxlab/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace maxlab;

namespace {

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("maxlab_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("builtin generators produce the advertised shapes") {
    Grid1D g(0.0, 1.0, 64);
    auto c = gen(CorpusSpec{"const", {2.5}, 0, g});
    for (double v : c.values) CHECK(v == 2.5);
    auto alias = gen(CorpusSpec{"constant", {2.5}, 0, g});
    CHECK(alias.values == c.values);

    auto ind = gen(CorpusSpec{"indicator", {0.25, 0.5}, 0, g});
    for (std::size_t k = 0; k < 64; ++k) {
        const double x = g.x(k);
        CHECK(ind.values[k] == ((x > 0.25 && x < 0.5) ? 1.0 : 0.0));
    }

    Grid1D wide(-8.0, 2.0, 128);
    auto ls = gen(CorpusSpec{"log_shift", {}, 0, wide});
    for (std::size_t k = 0; k < 128; ++k)
        CHECK(ls.values[k] == Catch::Approx(std::log(std::abs(1.0 + wide.x(k)))));

    auto sing = gen(CorpusSpec{"log_sing", {0.37}, 0, g});
    for (std::size_t k = 0; k < 64; ++k)
        CHECK(sing.values[k] == Catch::Approx(std::log(std::abs(g.x(k) - 0.37))));

    auto gs = gen(CorpusSpec{"gauss", {0.5, 0.1}, 0, g});
    const std::size_t mid = g.nearest_index(0.5);
    for (double v : gs.values) CHECK(v <= gs.values[mid] + 1e-15);
    const double t = (g.x(mid) - 0.5) / 0.1;
    CHECK(gs.values[mid] == Catch::Approx(std::exp(-0.5 * t * t)));
}

TEST_CASE("generator parameter validation") {
    Grid1D g(0.0, 1.0, 16);
    CHECK_THROWS_AS(gen(CorpusSpec{"gauss", {0.5, 0.0}, 0, g}), std::invalid_argument);
    CHECK_THROWS_AS(gen(CorpusSpec{"indicator", {0.5, 0.25}, 0, g}), std::invalid_argument);
    CHECK_THROWS_AS(gen(CorpusSpec{"const", {}, 0, g}), std::invalid_argument);
    CHECK_THROWS_WITH(gen(CorpusSpec{"no_such_gen", {}, 0, g}),
                      Catch::Matchers::ContainsSubstring("random_step"));
}

TEST_CASE("random step is a 16-block step function, deterministic in the seed") {
    Grid1D g(0.0, 1.0, 64);
    auto a = gen(CorpusSpec{"random_step", {4.0}, 7, g});
    auto b = gen(CorpusSpec{"random_step", {4.0}, 7, g});
    auto c = gen(CorpusSpec{"random_step", {4.0}, 8, g});
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
    for (std::size_t k = 0; k < 64; ++k) CHECK(a.values[k] == a.values[k - k % 4]);
    // Levels bound the number of distinct values.
    std::vector<double> uniq = a.values;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    CHECK(uniq.size() <= 4);
}

TEST_CASE("random step survives grid refinement block by block") {
    Grid1D g(0.0, 1.0, 64);
    Grid1D g2(0.0, 1.0, 128);
    auto coarse = gen(CorpusSpec{"random_step", {5.0}, 11, g});
    auto fine = gen(CorpusSpec{"random_step", {5.0}, 11, g2});
    for (std::size_t k = 0; k < 64; ++k) {
        CHECK(fine.values[2 * k] == coarse.values[k]);
        CHECK(fine.values[2 * k + 1] == coarse.values[k]);
    }
}

TEST_CASE("lacunary symbol is a signed cosine sum") {
    Grid1D g(0.0, 1.0, 32);
    auto b = gen(CorpusSpec{"lacunary_bmo", {3.0}, 5, g});
    auto b2 = gen(CorpusSpec{"lacunary_bmo", {3.0}, 5, g});
    CHECK(b.values == b2.values);
    for (double v : b.values) CHECK(std::abs(v) <= 3.0 + 1e-12);
}

TEST_CASE("spec mini-syntax parses names, parameters and seed overrides") {
    auto s = parse_spec("const:1", Grid1D(0.0, 1.0, 8));
    CHECK(s.name == "const");
    REQUIRE(s.params.size() == 1);
    CHECK(s.params[0] == 1.0);

    auto ind = parse_spec("indicator:0.25,0.75", Grid1D(0.0, 1.0, 8));
    REQUIRE(ind.params.size() == 2);
    CHECK(ind.params[1] == 0.75);

    auto rs = parse_spec("random_step:4:7", Grid1D(0.0, 1.0, 8));
    CHECK(rs.name == "random_step");
    REQUIRE(rs.params.size() == 1);
    CHECK(rs.params[0] == 4.0);
    CHECK(rs.seed == 7);

    auto lac = parse_spec("lacunary_bmo:5,9", Grid1D(0.0, 1.0, 8));
    REQUIRE(lac.params.size() == 1);
    CHECK(lac.seed == 9);

    CHECK_THROWS_AS(parse_spec("const:abc", Grid1D(0.0, 1.0, 8)), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("", Grid1D(0.0, 1.0, 8)), std::invalid_argument);
}

TEST_CASE("corpus spec json round trip") {
    Grid1D g(-2.0, 3.0, 40);
    CorpusSpec s{"random_step", {4.0}, 99, g};
    auto j = to_json(s);
    auto back = spec_from_json(j, Grid1D(0.0, 1.0, 8), 0);
    CHECK(back.name == s.name);
    CHECK(back.params == s.params);
    CHECK(back.seed == s.seed);
    CHECK(back.grid == s.grid);
    CHECK(gen(back).values == gen(s).values);
}

TEST_CASE("csv round trip preserves grid and values exactly") {
    TempDir td;
    Grid1D g(-1.0, 2.0, 37);
    auto f = gen(CorpusSpec{"lacunary_bmo", {4.0}, 3, g});
    const auto path = td.file("f.csv");
    save_sampled_fn(f, path, "csv");
    auto back = load_sampled_fn(path);
    CHECK(back.grid == f.grid);
    REQUIRE(back.size() == f.size());
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(back.values[k] == f.values[k]);
}

TEST_CASE("json round trip preserves grid and values exactly") {
    TempDir td;
    Grid1D g(0.0, 1.0, 21);
    auto f = gen(CorpusSpec{"gauss", {0.4, 0.2}, 0, g});
    const auto path = td.file("f.json");
    save_sampled_fn(f, path, "json");
    auto back = load_sampled_fn(path);
    CHECK(back.grid == f.grid);
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(back.values[k] == f.values[k]);
}

TEST_CASE("csv loader rejects malformed input with runtime errors") {
    TempDir td;
    const auto bad_header = td.file("h.csv");
    std::ofstream(bad_header) << "time,val\n0,1\n1,2\n";
    CHECK_THROWS_AS(load_sampled_fn(bad_header), std::runtime_error);

    const auto one_row = td.file("one.csv");
    std::ofstream(one_row) << "x,value\n0.5,1.0\n";
    CHECK_THROWS_AS(load_sampled_fn(one_row), std::runtime_error);

    const auto uneven = td.file("u.csv");
    std::ofstream(uneven) << "x,value\n0.0,1\n1.0,1\n2.5,1\n";
    CHECK_THROWS_AS(load_sampled_fn(uneven), std::runtime_error);

    const auto nonfinite = td.file("nan.csv");
    std::ofstream(nonfinite) << "x,value\n0.5,1\n1.5,nan\n2.5,1\n";
    CHECK_THROWS_AS(load_sampled_fn(nonfinite), std::runtime_error);

    CHECK_THROWS_AS(load_sampled_fn(td.file("missing.csv")), std::runtime_error);
}

TEST_CASE("rearrangement profile serialization uses the t column") {
    TempDir td;
    Grid1D g(0.0, 1.0, 4);
    SampledFn f(g, {0.5, 2.0, 1.0, 0.0});
    auto p = rearrangement(f);
    const auto path = td.file("r.csv");
    {
        std::ofstream os(path);
        write_csv(p, os);
    }
    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,value");
    std::string row;
    std::getline(is, row);
    REQUIRE(!row.empty());
    const auto comma = row.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::stod(row.substr(0, comma)) == 0.0);
    CHECK(std::stod(row.substr(comma + 1)) == 2.0);
}
