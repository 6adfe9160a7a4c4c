#include "satake/cli.hpp"
#include "satake/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace satake;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Scratch directory, fresh per process.
fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("satake-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes separate parse errors, domain errors and success") {
    CHECK(run({"roots", "--preset", "sl3r"}).code == 0);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"roots"}).code == 1);                     // no system given
    CHECK(run({"frobnicate"}).code == 1);                // unknown subcommand
    CHECK(run({"roots", "--preset", "nosuch"}).code == 1);
    CHECK(run({"roots", "--preset", "sl3r", "--system", "A 2"}).code == 1);
    CHECK(run({"spherical", "--preset", "sl3r", "--weight", "2,0,0"}).code == 1);
    CHECK(run({"spherical", "--preset", "sl3r", "--weight", "2,x"}).code == 1);
    CHECK(run({"roots", "--preset", "sl3r", "--format", "xml"}).code == 1);
    CHECK(run({"embed", "--preset", "sl3r", "--weight", "1,0"}).code == 1);
    CHECK(run({"embed", "--preset", "su21", "--weight", "2"}).code == 1);
    CHECK(run({"limits", "--preset", "sl3r", "--weight", "2,0", "--tmax",
               "-1"}).code == 1);
    // An honest verification failure is exit 2, distinct from domain errors:
    // 200 Monte-Carlo samples cannot meet the pinned cosine threshold.
    const RunResult failed = run({"verify", "--samples", "200"});
    CHECK(failed.code == 2);
    CHECK(failed.out.find("FAIL") != std::string::npos);
}

TEST_CASE("domain errors go to stderr and name the violated condition") {
    const RunResult r =
        run({"boundary", "--preset", "sl3r", "--weight", "1,0"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("integrality condition fails at root") != std::string::npos);
    CHECK(r.err.find("1/2") != std::string::npos);

    const RunResult bad = run({"roots", "--preset", "nosuch"});
    CHECK(bad.err.find("nosuch") != std::string::npos);
}

TEST_CASE("output is byte-identical across reruns") {
    for (const std::vector<std::string>& args :
         std::vector<std::vector<std::string>>{
             {"roots", "--preset", "g2split", "--format", "json"},
             {"spherical", "--preset", "su21", "--weight", "1", "--format",
              "json"},
             {"boundary", "--preset", "sl4r", "--weight", "2,2,2", "--format",
              "dot"},
             {"embed", "--preset", "sl3r", "--weight", "2,0", "--format",
              "json"},
             {"limits", "--preset", "sl2r", "--weight", "2"},
             {"verify", "--samples", "5000", "--format", "json"}}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("roots json round-trips through the artifact's own reader") {
    const RunResult r = run({"roots", "--preset", "su21", "--format", "json"});
    REQUIRE(r.code == 0);
    const ParsedRoots roots = parse_roots_json(r.out);
    CHECK(roots.type == "BC");
    CHECK(roots.rank == 1);
    REQUIRE(roots.roots.size() == 2);
    CHECK(roots.roots[0].coords_simple == RatVec{Rat(1)});
    CHECK(roots.roots[0].multiplicity == 2);
    CHECK(!roots.roots[0].doubled);
    CHECK(roots.roots[1].doubled);
    // A raw --system spec with the same data prints the same bytes.
    const RunResult raw =
        run({"roots", "--system", "BC 1 short=2 double=1", "--format", "json"});
    CHECK(raw.out == r.out);
}

TEST_CASE("spherical json round-trips with exact rationals") {
    const RunResult r =
        run({"spherical", "--preset", "su21", "--weight", "1", "--format",
             "json"});
    REQUIRE(r.code == 0);
    const ParsedReport rep = parse_report_json(r.out);
    CHECK(rep.weight_fundamental == RatVec{Rat(1)});
    CHECK(rep.dominant);
    CHECK(!rep.spherical);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].ratio == Rat(1, 2));
    CHECK(rep.violations[0].root_simple == RatVec{Rat(2)});

    // Rational weight input throws the parser, not the arithmetic.
    const RunResult frac =
        run({"spherical", "--preset", "sl3r", "--weight", "5/3,1", "--format",
             "json"});
    REQUIRE(frac.code == 0);
    const ParsedReport fr = parse_report_json(frac.out);
    CHECK(fr.weight_fundamental == RatVec{Rat(5, 3), Rat(1)});
    CHECK(!fr.spherical);
}

TEST_CASE("lattice json round-trips") {
    const RunResult r =
        run({"lattice", "--preset", "sp2r", "--format", "json"});
    REQUIRE(r.code == 0);
    const std::vector<RatVec> basis = parse_lattice_json(r.out);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == RatVec{Rat(2), Rat(0)});
    CHECK(basis[1] == RatVec{Rat(0), Rat(2)});
}

TEST_CASE("boundary json reconstructs the full poset") {
    const RunResult r = run(
        {"boundary", "--preset", "sl3r", "--weight", "2,0", "--format", "json"});
    REQUIRE(r.code == 0);
    int rank = 0;
    const BoundaryPoset poset = parse_poset_json(r.out, &rank);
    CHECK(rank == 2);
    CHECK(poset.E0 == SimpleSubset::from_indices(2, {1}));
    CHECK(poset.interior_dim == 5);
    REQUIRE(poset.nodes.size() == 2);
    CHECK(poset.nodes[0].E_prime == SimpleSubset::from_indices(2, {1}));
    REQUIRE(poset.nodes[0].orbit_dim.has_value());
    CHECK(*poset.nodes[0].orbit_dim == 2);
    CHECK(poset.covers == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(poset.nodes[1].stab.has_metadata);

    // Re-emitting the parsed poset reproduces the bytes.
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl3r");
    CHECK(poset_to_json(rs, poset) == r.out);
}

TEST_CASE("dot output is a well-formed digraph with the interior node") {
    const RunResult r = run(
        {"boundary", "--preset", "sl3r", "--weight", "2,0", "--format", "dot"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("digraph boundary_poset") != std::string::npos);
    CHECK(r.out.find("interior") != std::string::npos);
    CHECK(r.out.find("n0 -> n1") != std::string::npos);
    CHECK(r.out.find("n1 -> interior") != std::string::npos);
    CHECK(r.out.find("orbit dim 2") != std::string::npos);
}

TEST_CASE("embed json carries the K-fixed vector when it exists") {
    const RunResult r = run(
        {"embed", "--preset", "sl3r", "--weight", "2,0", "--format", "json"});
    REQUIRE(r.code == 0);
    const ParsedEmbed e = parse_embed_json(r.out);
    CHECK(e.n == 3);
    CHECK(e.dim == 6);
    CHECK(e.ambient_dim == 9);
    CHECK(e.spherical);
    REQUIRE(e.k_fixed.size() == 6);
    double norm2 = 0;
    for (double x : e.k_fixed) norm2 += x * x;
    CHECK(norm2 == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("limits emits a parseable csv trace with the fixed header") {
    const RunResult r = run({"limits", "--preset", "sl2r", "--weight", "2",
                             "--tmax", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("t,error,log_error", 0) == 0);
    const std::vector<TraceSample> samples = parse_trace_csv(r.out);
    REQUIRE(samples.size() == 51);
    CHECK(samples.front().t == 0.0);
    CHECK(samples.back().t == 5.0);
    // e^{-4t} decay of the sl(2,R) Fatou error at weight 2.
    CHECK(samples.back().error < 5e-9);
    CHECK(samples.back().error > 0);

    // Boundary mode: same header, --subset switches the flow.
    const RunResult b =
        run({"limits", "--preset", "sl3r", "--weight", "2,0", "--subset", "1",
             "--tmax", "8"});
    REQUIRE(b.code == 0);
    const auto bs = parse_trace_csv(b.out);
    CHECK(bs.back().error < 1e-8);
    // Subset indices out of range are a domain error.
    CHECK(run({"limits", "--preset", "sl3r", "--weight", "2,0", "--subset",
               "3"}).code == 1);
}

TEST_CASE("verify json round-trips and strips timings for reproducibility") {
    const RunResult r = run({"verify", "--samples", "5000", "--format", "json"});
    REQUIRE(r.code == 0);
    const std::vector<CheckResult> checks = parse_checks_json(r.out);
    CHECK(checks.size() == 10);
    for (const CheckResult& c : checks) {
        CHECK(c.pass);
        CHECK(c.seconds == 0.0);
        CHECK(!c.detail.empty());
    }
}

TEST_CASE("--out writes the same bytes to a file") {
    const fs::path path = scratch_dir() / "roots.json";
    const RunResult direct = run({"roots", "--preset", "sl3r", "--format",
                                  "json"});
    const RunResult filed = run({"roots", "--preset", "sl3r", "--format",
                                 "json", "--out", path.string()});
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
}

TEST_CASE("preset files resolve by path or through SATAKE_PRESET_PATH") {
    const fs::path dir = scratch_dir();
    const RestrictedRootSystem su21 = RestrictedRootSystem::preset("su21");
    {
        std::ofstream f(dir / "myform.preset", std::ios::binary);
        f << preset_to_config(su21);
    }
    const RunResult builtin = run({"roots", "--preset", "su21", "--format",
                                   "json"});
    const RunResult by_path = run(
        {"roots", "--preset", (dir / "myform.preset").string(), "--format",
         "json"});
    CHECK(by_path.code == 0);
    CHECK(by_path.out == builtin.out);

    ::setenv("SATAKE_PRESET_PATH", dir.c_str(), 1);
    const RunResult by_env =
        run({"roots", "--preset", "myform", "--format", "json"});
    CHECK(by_env.code == 0);
    CHECK(by_env.out == builtin.out);
    // Builtins win over the directory.
    {
        std::ofstream f(dir / "sl3r.preset", std::ios::binary);
        f << preset_to_config(su21);
    }
    const RunResult shadowed =
        run({"roots", "--preset", "sl3r", "--format", "json"});
    CHECK(parse_roots_json(shadowed.out).type == "A");
    ::unsetenv("SATAKE_PRESET_PATH");
    const RunResult gone = run({"roots", "--preset", "myform"});
    CHECK(gone.code == 1);
}

TEST_CASE("preset config text round-trips through its parser") {
    for (const std::string& name : RestrictedRootSystem::preset_names()) {
        const RestrictedRootSystem rs = RestrictedRootSystem::preset(name);
        const std::string text = preset_to_config(rs);
        const PresetConfig cfg = parse_preset_config(text);
        CHECK(cfg.name == name);
        CHECK(cfg.type == rs.type());
        CHECK(cfg.rank == rs.rank());
        CHECK(cfg.mult == rs.multiplicity_classes());
        REQUIRE(rs.realform_meta().has_value());
        CHECK(cfg.dim_g == rs.realform_meta()->dim_g);
        // Rebuilding from the parsed config gives the same roots.
        const RestrictedRootSystem back = build_from_config(cfg);
        CHECK(roots_to_json(back) == roots_to_json(rs));
    }
}

TEST_CASE("malformed preset files are rejected with line numbers") {
    CHECK_THROWS_AS(parse_preset_config("type = A\nrank = 2\n"),
                    std::invalid_argument);  // missing name and mult
    CHECK_THROWS_AS(parse_preset_config(
                        "name = x\ntype = A\nrank = 2\nmult = all=1\nrank = 3\n"),
                    std::invalid_argument);  // duplicate key
    CHECK_THROWS_AS(parse_preset_config(
                        "name = x\ntype = Q\nrank = 2\nmult = all=1\n"),
                    std::invalid_argument);  // unknown type
    CHECK_THROWS_AS(parse_preset_config(
                        "name = x\ntype = A\nrank = 2\nmult = all=1\ncolor = red\n"),
                    std::invalid_argument);  // unknown key
    CHECK_THROWS_AS(
        parse_preset_config("name = x\ntype = A\nrank = two\nmult = all=1\n"),
        std::invalid_argument);  // non-numeric rank
    try {
        parse_preset_config("name = x\ntype = A\nbogus line\nmult = all=1\n");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("text outputs state the headline facts") {
    const RunResult sph =
        run({"spherical", "--preset", "sl3r", "--weight", "2,0"});
    CHECK(sph.out.find("spherical: yes") != std::string::npos);
    const RunResult rt = run({"roots", "--preset", "su21"});
    CHECK(rt.out.find("BC1") != std::string::npos);
    CHECK(rt.out.find("m=2") != std::string::npos);
    CHECK(rt.out.find("doubled") != std::string::npos);
    const RunResult bd =
        run({"boundary", "--preset", "sl3r", "--weight", "2,0"});
    CHECK(bd.out.find("interior dim 5") != std::string::npos);
    CHECK(bd.out.find("orbit dim 4") != std::string::npos);
    const RunResult vf = run({"verify", "--samples", "5000"});
    CHECK(vf.out.find("10/10 checks passed") != std::string::npos);
}

}  // TEST_SUITE
