#include "satake/boundary.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace satake;

namespace {

WeightVector fund(RatVec c) { return {Basis::fundamental_weight, std::move(c)}; }

SimpleSubset subset(int rank, std::vector<int> idx) {
    return SimpleSubset::from_indices(rank, std::move(idx));
}

}  // namespace

TEST_SUITE("boundary") {

TEST_CASE("E0 collects the simple roots orthogonal to the weight") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl3r");
    CHECK(compute_E0(rs, fund({2, 0})) == subset(2, {1}));
    CHECK(compute_E0(rs, fund({0, 2})) == subset(2, {0}));
    CHECK(compute_E0(rs, fund({2, 2})) == subset(2, {}));
    CHECK(compute_E0(rs, fund({0, 0})) == SimpleSubset::full_set(2));
    CHECK_THROWS_AS(compute_E0(rs, fund({-1, 1})), std::invalid_argument);
}

TEST_CASE("components and neighbors on the A4 chain") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl5r");
    const auto comps = components(rs, subset(4, {0, 1, 3}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == subset(4, {0, 1}));
    CHECK(comps[1] == subset(4, {3}));
    CHECK(neighbors(rs, subset(4, {0})) == subset(4, {1}));
    CHECK(neighbors(rs, subset(4, {1})) == subset(4, {0, 2}));
    CHECK(neighbors(rs, subset(4, {0, 1, 3})) == subset(4, {2}));
    CHECK(neighbors(rs, subset(4, {})).empty());
}

TEST_CASE("D4 branch node sees all three leaves") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("so44");
    // Nodes 0-1-2 chain with 3 attached to 1 in the D4 labeling used here:
    // find the branch node as the one with three neighbors.
    int branch = -1;
    for (int i = 0; i < 4; ++i)
        if (neighbors(rs, subset(4, {i})).size() == 3) branch = i;
    REQUIRE(branch >= 0);
    const auto comps = components(rs, subset(4, {}).complement().without(branch));
    CHECK(comps.size() == 3);
    for (const SimpleSubset& c : comps) CHECK(c.size() == 1);
}

TEST_CASE("E0-connectedness rejects subsets with a component inside E0") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl5r");
    const SimpleSubset e0 = subset(4, {1, 2});
    CHECK(is_E0_connected(rs, subset(4, {}), e0));
    CHECK(is_E0_connected(rs, subset(4, {0, 1}), e0));   // component meets complement
    CHECK(!is_E0_connected(rs, subset(4, {1}), e0));     // inside E0
    CHECK(!is_E0_connected(rs, subset(4, {0, 2}), e0));  // {2} is a component in E0
    CHECK(is_E0_connected(rs, subset(4, {0, 1, 2}), e0));
}

TEST_CASE("saturation absorbs the E0 components away from the core") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl5r");
    // E0 = {2,4} (1-based), E = {1}: the component {4} of E0 is not adjacent
    // to the core, the component {2} is.
    const SimpleSubset e0 = subset(4, {1, 3});
    CHECK(saturate(rs, subset(4, {0}), e0) == subset(4, {0, 3}));
    // Empty E absorbs everything in E0.
    CHECK(saturate(rs, subset(4, {}), e0) == e0);
    // Saturation is idempotent.
    const SimpleSubset s = saturate(rs, subset(4, {0}), e0);
    CHECK(saturate(rs, s, e0) == s);
}

TEST_CASE("saturation over every subset of B3: idempotent and dominated") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("so43");
    const int r = rs.rank();
    for (std::uint32_t eb = 0; eb < (1u << r); ++eb) {
        const SimpleSubset e0(r, eb);
        for (std::uint32_t b = 0; b < (1u << r); ++b) {
            const SimpleSubset e(r, b);
            if (!is_E0_connected(rs, e, e0)) continue;
            const SimpleSubset s = saturate(rs, e, e0);
            CHECK(e.is_subset_of(s));
            CHECK(s.intersect(e.complement()).is_subset_of(e0));
            CHECK(saturate(rs, s, e0) == s);
        }
    }
}

TEST_CASE("parabolic dimension bookkeeping on sl(4,R)") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl4r");
    // E = {1}: one positive root inside the span, five outside.
    const ParabolicDims d = parabolic_dims(rs, subset(3, {0}));
    CHECK(d.dim_a_E == 2);
    CHECK(d.dim_a_upper_E == 1);
    CHECK(d.dim_n_upper_E == 1);
    CHECK(d.dim_n_E == 5);
    REQUIRE(d.has_metadata);
    CHECK(d.dim_m_K == 1);          // dim m = 0 for the split form
    CHECK(d.dim_m_E == 3);          // |E| + 2·n^E
    CHECK(d.dim_b == 3 + 2 + 5);
    CHECK(d.dim_flag == 15 - d.dim_b);

    // Full set: the parabolic is all of g.
    const ParabolicDims full = parabolic_dims(rs, SimpleSubset::full_set(3));
    CHECK(full.dim_b == 15);
    CHECK(full.dim_flag == 0);
    // Empty set: the minimal parabolic.
    const ParabolicDims min = parabolic_dims(rs, subset(3, {}));
    CHECK(min.dim_b == 3 + 6);
    CHECK(min.dim_flag == 6);
}

TEST_CASE("parabolic dims without metadata only fill the root counts") {
    const RestrictedRootSystem rs =
        RestrictedRootSystem::build(SystemType::A, 3, {{"all", 1}});
    CHECK_THROWS_AS(parabolic_dims(rs, subset(3, {0})), std::invalid_argument);
    const ParabolicDims d = parabolic_dims(rs, subset(3, {0}), false);
    CHECK(!d.has_metadata);
    CHECK(d.dim_n_E == 5);
    CHECK(d.dim_m_K == 0);
}

TEST_CASE("the documented sl(3,R) poset at weight (2,0)") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl3r");
    const BoundaryPoset poset = boundary_poset(rs, fund({2, 0}));
    CHECK(poset.E0 == subset(2, {1}));
    CHECK(poset.interior_dim == 5);
    CHECK(!poset.degenerate);
    REQUIRE(poset.nodes.size() == 2);

    const BoundaryComponent& closed = poset.nodes[0];
    CHECK(closed.E == subset(2, {}));
    CHECK(closed.E_prime == subset(2, {1}));
    CHECK(closed.E_dprime == subset(2, {1}));
    CHECK(closed.dim_XE == 0);
    REQUIRE(closed.orbit_dim.has_value());
    CHECK(*closed.orbit_dim == 2);

    const BoundaryComponent& open_node = poset.nodes[1];
    CHECK(open_node.E == subset(2, {0}));
    CHECK(open_node.E_prime == subset(2, {0}));
    CHECK(open_node.dim_XE == 2);
    CHECK(*open_node.orbit_dim == 4);

    REQUIRE(poset.covers.size() == 1);
    CHECK(poset.covers[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("regular weights see the full subset lattice") {
    const RestrictedRootSystem a2 = RestrictedRootSystem::preset("sl3r");
    const BoundaryPoset p2 = boundary_poset(a2, fund({2, 2}));
    CHECK(p2.nodes.size() == 3);
    std::multiset<int> dims;
    for (const BoundaryComponent& n : p2.nodes) dims.insert(*n.orbit_dim);
    CHECK(dims == std::multiset<int>{3, 4, 4});

    const RestrictedRootSystem a3 = RestrictedRootSystem::preset("sl4r");
    CHECK(boundary_poset(a3, fund({2, 2, 2})).nodes.size() == 7);
}

TEST_CASE("orbit dimensions strictly increase along covers") {
    for (const auto& [name, w] :
         std::vector<std::pair<std::string, RatVec>>{
             {"sl4r", {2, 2, 2}}, {"sl4r", {2, 0, 2}}, {"so43", {2, 2, 2}},
             {"sp3r", {2, 0, 2}}, {"su32", {4, 4}}}) {
        const RestrictedRootSystem rs = RestrictedRootSystem::preset(name);
        const BoundaryPoset poset = boundary_poset(rs, fund(w));
        for (const auto& [lo, hi] : poset.covers) {
            CHECK(poset.nodes[lo].E.is_subset_of(poset.nodes[hi].E));
            CHECK(*poset.nodes[lo].orbit_dim < *poset.nodes[hi].orbit_dim);
        }
        // Maximal nodes sit strictly below the interior.
        for (const BoundaryComponent& n : poset.nodes)
            CHECK(*n.orbit_dim < poset.interior_dim);
    }
}

TEST_CASE("poset nodes are exactly the E0-connected proper subsets") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("so43");
    const WeightVector lam = fund({2, 0, 2});
    const BoundaryPoset poset = boundary_poset(rs, lam);
    const SimpleSubset e0 = compute_E0(rs, lam);
    std::set<std::uint32_t> expected;
    for (std::uint32_t b = 0; b < (1u << 3) - 1; ++b)
        if (is_E0_connected(rs, SimpleSubset(3, b), e0)) expected.insert(b);
    std::set<std::uint32_t> got;
    for (const BoundaryComponent& n : poset.nodes) {
        got.insert(n.E.bits());
        CHECK(n.E_prime == saturate(rs, n.E, e0));
        CHECK(n.E_dprime == n.E_prime.intersect(n.E.complement()));
    }
    CHECK(got == expected);
}

TEST_CASE("non-spherical weights are rejected with the violating root named") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl3r");
    try {
        boundary_poset(rs, fund({1, 0}));
        FAIL("expected a rejection");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("integrality condition fails at root") != std::string::npos);
        CHECK(msg.find("1/2") != std::string::npos);
    }
}

TEST_CASE("the zero weight degenerates to a point") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl3r");
    const BoundaryPoset poset = boundary_poset(rs, fund({0, 0}));
    CHECK(poset.degenerate);
    CHECK(poset.nodes.empty());
    CHECK(!poset.warning.empty());
}

TEST_CASE("face chamber of a subset kills exactly the E-pairings") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl4r");
    const SimpleSubset e = subset(3, {0, 2});
    const FaceChamber fc = face_chamber(rs, e);
    CHECK(!fc.empty_face);
    CHECK(fc.face_basis.size() == 1);
    CHECK(fc.positive_on == std::vector<int>{1});
    // The interior point pairs to zero on E and positively off E.
    const WeightVector h = fc.interior_point;
    for (int i = 0; i < 3; ++i) {
        RatVec gi(3, Rat(0));
        gi[i] = Rat(1);
        const Rat pairing = rs.inner(h, rs.root_vector(Root{gi, false, 1}));
        if (e.contains(i))
            CHECK(pairing == Rat(0));
        else
            CHECK(pairing > Rat(0));
    }
    const FaceChamber full = face_chamber(rs, SimpleSubset::full_set(3));
    CHECK(full.empty_face);
    CHECK(full.face_basis.empty());
}

TEST_CASE("lambda_E projects onto the span of E orthogonally") {
    const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl4r");
    const WeightVector lam = rs.to_simple(fund({2, 2, 2}));
    const SimpleSubset e = subset(3, {0, 1});
    const WeightVector proj = lambda_E(rs, lam, e);
    const WeightVector rest = sub(lam, proj);
    // The projection is supported on E, the residue orthogonal to E.
    const RatVec pc = rs.to_simple(proj).coords;
    CHECK(pc[2] == Rat(0));
    for (int i : e.indices()) {
        RatVec gi(3, Rat(0));
        gi[i] = Rat(1);
        CHECK(rs.inner(rest, rs.root_vector(Root{gi, false, 1})) == Rat(0));
    }
    // Λ_∅ = 0 and Λ_Δ = Λ.
    CHECK(is_zero(lambda_E(rs, lam, subset(3, {}))));
    CHECK(lambda_E(rs, lam, SimpleSubset::full_set(3)) == lam);
}

}  // TEST_SUITE
