#include "satake/rootsys.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace satake;

namespace {

RestrictedRootSystem make(SystemType t, int rank) {
    return RestrictedRootSystem::build(t, rank, {{"all", 1}});
}

WeightVector fund(RatVec c) { return {Basis::fundamental_weight, std::move(c)}; }

// Positive-root counts of the reduced systems.
int reduced_positive_count(SystemType t, int r) {
    switch (t) {
        case SystemType::A: return r * (r + 1) / 2;
        case SystemType::B:
        case SystemType::C:
        case SystemType::BC: return r * r;
        case SystemType::D: return r * (r - 1);
        case SystemType::G: return 6;
        case SystemType::F: return 24;
        case SystemType::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
        default: return -1;
    }
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("cartan matrix matches its defining ratio against the gram form") {
    const std::vector<std::pair<SystemType, int>> cases = {
        {SystemType::A, 3}, {SystemType::B, 3}, {SystemType::C, 3},
        {SystemType::D, 4}, {SystemType::G, 2}, {SystemType::F, 4},
        {SystemType::BC, 2}};
    for (const auto& [t, r] : cases) {
        const RestrictedRootSystem rs = make(t, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                CHECK(rs.cartan()[i][j] ==
                      Rat(2) * rs.gram()[i][j] / rs.gram()[j][j]);
        // Diagonal 2, off-diagonal nonpositive.
        for (int i = 0; i < r; ++i) {
            CHECK(rs.cartan()[i][i] == Rat(2));
            for (int j = 0; j < r; ++j)
                if (i != j) CHECK(rs.cartan()[i][j] <= Rat(0));
        }
    }
}

TEST_CASE("A2 cartan matrix is the textbook one") {
    const RestrictedRootSystem rs = make(SystemType::A, 2);
    CHECK(rs.cartan() == RatMat{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
}

TEST_CASE("G2 gram form has the 1:3 length ratio") {
    const RestrictedRootSystem rs = make(SystemType::G, 2);
    const Rat s0 = rs.gram()[0][0], s1 = rs.gram()[1][1];
    CHECK(((s1 == Rat(3) * s0) || (s0 == Rat(3) * s1)));
    CHECK(std::min(s0, s1) == Rat(2));
}

TEST_CASE("positive root counts across all supported types") {
    const std::vector<std::pair<SystemType, int>> cases = {
        {SystemType::A, 1}, {SystemType::A, 4}, {SystemType::B, 2},
        {SystemType::B, 4}, {SystemType::C, 3}, {SystemType::D, 4},
        {SystemType::G, 2}, {SystemType::F, 4}, {SystemType::E, 6}};
    for (const auto& [t, r] : cases) {
        const RestrictedRootSystem rs = make(t, r);
        CHECK(static_cast<int>(rs.positive_roots().size()) ==
              reduced_positive_count(t, r));
    }
    // BC adds one doubled root per short positive root: r² + r in total.
    for (int r = 1; r <= 3; ++r) {
        const RestrictedRootSystem rs = RestrictedRootSystem::build(
            SystemType::BC, r, {{"all", 1}});
        CHECK(static_cast<int>(rs.positive_roots().size()) == r * r + r);
        int doubled = 0;
        for (const Root& g : rs.positive_roots()) doubled += g.doubled ? 1 : 0;
        CHECK(doubled == r);
    }
}

TEST_CASE("roots are distinct, heights consistent, simple roots first") {
    for (const auto& [t, r] : std::vector<std::pair<SystemType, int>>{
             {SystemType::A, 3}, {SystemType::B, 3}, {SystemType::G, 2},
             {SystemType::BC, 2}}) {
        const RestrictedRootSystem rs = make(t, r);
        std::set<std::pair<RatVec, bool>> seen;
        int simple_count = 0;
        for (const Root& g : rs.positive_roots()) {
            CHECK(seen.insert({g.simple, g.doubled}).second);
            Rat h(0);
            for (const Rat& c : g.simple) {
                CHECK(c >= Rat(0));
                h += c;
            }
            CHECK(Rat(g.height) == h);
            if (!g.doubled && g.height == 1) ++simple_count;
        }
        CHECK(simple_count == r);
    }
}

TEST_CASE("basis conversion round-trips on every type") {
    std::mt19937_64 rng(7);
    for (const auto& [t, r] : std::vector<std::pair<SystemType, int>>{
             {SystemType::A, 3}, {SystemType::C, 2}, {SystemType::F, 4},
             {SystemType::BC, 2}}) {
        const RestrictedRootSystem rs = make(t, r);
        for (int trial = 0; trial < 20; ++trial) {
            RatVec c(r);
            for (Rat& x : c)
                x = Rat(static_cast<int>(rng() % 19) - 9,
                        1 + static_cast<int>(rng() % 4));
            const WeightVector v = fund(c);
            CHECK(rs.to_fundamental(rs.to_simple(v)) == v);
            const WeightVector s{Basis::simple_root, c};
            CHECK(rs.to_simple(rs.to_fundamental(s)) == s);
        }
    }
}

TEST_CASE("fundamental weights pair correctly with simple coroots") {
    // ⟨ωⱼ, βᵢ∨⟩ = δᵢⱼ where βᵢ is the non-multipliable root on the i-th node:
    // γᵢ normally, 2γᵢ when γᵢ is multipliable.
    for (const auto& [t, r] : std::vector<std::pair<SystemType, int>>{
             {SystemType::A, 2}, {SystemType::B, 3}, {SystemType::BC, 1},
             {SystemType::BC, 3}}) {
        const RestrictedRootSystem rs = make(t, r);
        const std::vector<WeightVector> omega = rs.fundamental_weights();
        REQUIRE(static_cast<int>(omega.size()) == r);
        for (int j = 0; j < r; ++j) {
            const WeightVector w = rs.to_simple(omega[j]);
            for (int i = 0; i < r; ++i) {
                Rat gi_norm = rs.gram()[i][i];
                Rat pairing(0);
                for (int k = 0; k < r; ++k)
                    pairing += w.coords[k] * rs.gram()[k][i];
                pairing = Rat(2) * pairing / gi_norm;
                if (rs.doubled_simple(i)) pairing /= 2;
                CHECK(pairing == (i == j ? Rat(1) : Rat(0)));
            }
        }
    }
}

TEST_CASE("BC1 doubles exactly the last simple root") {
    const RestrictedRootSystem rs = make(SystemType::BC, 3);
    CHECK(!rs.doubled_simple(0));
    CHECK(!rs.doubled_simple(1));
    CHECK(rs.doubled_simple(2));
    const RestrictedRootSystem a = make(SystemType::A, 3);
    for (int i = 0; i < 3; ++i) CHECK(!a.doubled_simple(i));
}

TEST_CASE("simple reflections permute the complementary positive roots") {
    for (const auto& [t, r] : std::vector<std::pair<SystemType, int>>{
             {SystemType::B, 2}, {SystemType::G, 2}, {SystemType::A, 3}}) {
        const RestrictedRootSystem rs = make(t, r);
        for (int i = 0; i < r; ++i) {
            RatVec gi(r, Rat(0));
            gi[i] = Rat(1);
            // sᵢ(γᵢ) = −γᵢ; every other positive root stays positive.
            std::multiset<RatVec> before, after;
            for (const Root& g : rs.positive_roots()) {
                if (g.doubled || g.simple == gi) continue;
                before.insert(g.simple);
                const WeightVector rv =
                    rs.simple_reflection(i, rs.root_vector(g));
                after.insert(rs.to_simple(rv).coords);
            }
            CHECK(before == after);
            const WeightVector neg = rs.simple_reflection(
                i, rs.root_vector(Root{gi, false, 1}));
            RatVec neg_gi(r, Rat(0));
            neg_gi[i] = Rat(-1);
            CHECK(rs.to_simple(neg).coords == neg_gi);
        }
    }
}

TEST_CASE("weyl orbit sizes and dominant representatives") {
    const RestrictedRootSystem a2 = make(SystemType::A, 2);
    CHECK(a2.weyl_orbit(fund({1, 1})).size() == 6);   // regular
    CHECK(a2.weyl_orbit(fund({1, 0})).size() == 3);   // stabilized by s₂
    CHECK(a2.weyl_orbit(fund({0, 0})).size() == 1);

    const RestrictedRootSystem g2 = make(SystemType::G, 2);
    CHECK(g2.weyl_orbit(fund({1, 1})).size() == 12);

    const RestrictedRootSystem b2 = make(SystemType::B, 2);
    CHECK(b2.weyl_orbit(fund({1, 1})).size() == 8);

    // Every orbit member reduces to the same dominant representative.
    const WeightVector lam = fund({2, 1});
    for (const WeightVector& w : a2.weyl_orbit(lam)) {
        const WeightVector d = a2.dominant_representative(w);
        CHECK(a2.is_dominant(d));
        CHECK(a2.to_fundamental(d) == lam);
    }
}

TEST_CASE("dominant representative stays in the orbit on BC systems") {
    // The reflection amount on a multipliable node differs from the
    // fundamental coordinate; a wrong amount would leave the Weyl orbit.
    const RestrictedRootSystem rs = make(SystemType::BC, 2);
    const WeightVector lam = fund({2, 3});
    const auto orbit = rs.weyl_orbit(lam);
    CHECK(orbit.size() == 8);
    for (const WeightVector& w : orbit) {
        const WeightVector d = rs.dominant_representative(w);
        CHECK(rs.is_dominant(d));
        CHECK(rs.to_fundamental(d) == lam);
    }
}

TEST_CASE("half sum doubles to the sum of positive roots with multiplicity") {
    const RestrictedRootSystem a2 = make(SystemType::A, 2);
    CHECK(a2.to_simple(a2.half_sum()).coords == RatVec{Rat(1), Rat(1)});

    const RestrictedRootSystem su21 = RestrictedRootSystem::preset("su21");
    // 2ρ = 2·γ + 1·2γ = 4γ.
    CHECK(su21.to_simple(su21.half_sum()).coords == RatVec{Rat(2)});
}

TEST_CASE("inner products are symmetric and positive definite on roots") {
    const RestrictedRootSystem rs = make(SystemType::F, 4);
    for (const Root& g : rs.positive_roots()) {
        CHECK(rs.root_norm_sq(g) > Rat(0));
        const WeightVector v = rs.root_vector(g);
        CHECK(rs.inner(v, v) == rs.root_norm_sq(g));
    }
    const WeightVector x = fund({1, 2, 0, 1});
    const WeightVector y = fund({0, 1, 3, 2});
    CHECK(rs.inner(x, y) == rs.inner(y, x));
}

TEST_CASE("multiplicity classes agree with root lengths") {
    const RestrictedRootSystem su21 = RestrictedRootSystem::preset("su21");
    for (const Root& g : su21.positive_roots())
        CHECK(su21.multiplicity(g) == (g.doubled ? 1 : 2));
    CHECK(su21.sum_of_multiplicities() == 3);
    CHECK(!su21.is_split());

    const RestrictedRootSystem sl3 = RestrictedRootSystem::preset("sl3r");
    CHECK(sl3.is_split());
    CHECK(sl3.sum_of_multiplicities() == 3);
}

TEST_CASE("subset algebra and printing") {
    const SimpleSubset e = SimpleSubset::from_indices(4, {0, 2});
    CHECK(e.size() == 2);
    CHECK(e.contains(0));
    CHECK(!e.contains(1));
    CHECK(e.to_string() == "{1,3}");
    CHECK(SimpleSubset::empty_set(4).to_string() == "{}");
    CHECK(e.complement() == SimpleSubset::from_indices(4, {1, 3}));
    CHECK(e.unite(e.complement()) == SimpleSubset::full_set(4));
    CHECK(e.intersect(e.complement()).empty());
    CHECK(e.is_subset_of(SimpleSubset::full_set(4)));
    CHECK(!SimpleSubset::full_set(4).is_subset_of(e));
    CHECK(e.with(1).size() == 3);
    CHECK(e.without(0) == SimpleSubset::from_indices(4, {2}));
    CHECK(e.indices() == std::vector<int>{0, 2});
}

TEST_CASE("system type parsing") {
    CHECK(parse_system_type("A") == SystemType::A);
    CHECK(parse_system_type("BC") == SystemType::BC);
    CHECK(!parse_system_type("H").has_value());
    CHECK(to_string(SystemType::G) == "G");
}

TEST_CASE("invalid construction is rejected") {
    CHECK_THROWS_AS(make(SystemType::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(make(SystemType::G, 3), std::invalid_argument);
    CHECK_THROWS_AS(make(SystemType::D, 2), std::invalid_argument);
    // Naming a length class the system does not have.
    CHECK_THROWS_AS(RestrictedRootSystem::build(SystemType::A, 2,
                                                {{"long", 1}, {"short", 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RestrictedRootSystem::build(SystemType::B, 2,
                                                {{"double", 1}}),
                    std::invalid_argument);
    // Multiplicities must be positive.
    CHECK_THROWS_AS(RestrictedRootSystem::build(SystemType::A, 2, {{"all", 0}}),
                    std::invalid_argument);
}

TEST_CASE("presets validate their dimension identities") {
    for (const std::string& name : RestrictedRootSystem::preset_names()) {
        const RestrictedRootSystem rs = RestrictedRootSystem::preset(name);
        REQUIRE(rs.realform_meta().has_value());
        const RealFormMeta& m = *rs.realform_meta();
        int msum = rs.sum_of_multiplicities();
        CHECK(m.dim_g == m.dim_m + rs.rank() + 2 * msum);
        CHECK(m.dim_k == m.dim_m + msum);
    }
    CHECK_THROWS_AS(RestrictedRootSystem::preset("so99"), std::invalid_argument);
}

}  // TEST_SUITE
