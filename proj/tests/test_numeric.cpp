#include "satake/numeric.hpp"

#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace satake;

namespace {

WeightVector fund(RatVec c) { return {Basis::fundamental_weight, std::move(c)}; }

constexpr double kTight = 1e-10;

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("projective distance is a scale-free metric on rays") {
    Eigen::VectorXd v(3), w(3);
    v << 1, 0, 0;
    w << 1, 1, 0;
    CHECK(projective_distance(v, v) == doctest::Approx(0).epsilon(kTight));
    CHECK(projective_distance(v, -3 * v) == doctest::Approx(0).epsilon(kTight));
    CHECK(projective_distance(v, w) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(projective_distance(v, w) ==
          doctest::Approx(projective_distance(w, 7 * v)).epsilon(1e-12));
    Eigen::VectorXd u(3);
    u << 0, 1, 0;
    CHECK(projective_distance(v, u) == doctest::Approx(1).epsilon(kTight));
}

TEST_CASE("haar samples are special orthogonal and reproducible") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 10; ++i) {
        const Eigen::MatrixXd k = haar_special_orthogonal(3, rng);
        CHECK((k * k.transpose() - Eigen::MatrixXd::Identity(3, 3)).norm() <
              1e-12);
        CHECK(k.determinant() == doctest::Approx(1).epsilon(1e-12));
    }
    std::mt19937_64 r1(42), r2(42);
    CHECK(haar_special_orthogonal(4, r1) == haar_special_orthogonal(4, r2));
}

TEST_CASE("t grids and diagonal directions") {
    const auto g = make_t_grid(5.0, 51);
    REQUIRE(g.size() == 51);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 5.0);
    CHECK(g[1] == doctest::Approx(0.1));

    CHECK(standard_direction(3) == IntVec{2, 0, -2});
    CHECK(standard_direction(2) == IntVec{1, -1});
    // Reconstruction gives the primitive integer vector in the requested
    // direction: γᵢ(H) = hᵢ − hᵢ₊₁ proportional to the requested values.
    const IntVec h = diag_direction_from_gamma_values({Rat(2), Rat(0)}, 3);
    Int trace(0);
    for (const Int& x : h) trace += x;
    CHECK(trace == 0);
    CHECK(h == IntVec{2, -1, -1});
    CHECK(diag_direction_from_gamma_values({Rat(1), Rat(3)}, 3) ==
          IntVec{5, 2, -7});
}

TEST_CASE("irrep construction matches the Weyl dimension") {
    for (const auto& [n, coords, dim] :
         std::vector<std::tuple<int, RatVec, int>>{{2, {1}, 2},
                                                   {2, {2}, 3},
                                                   {2, {4}, 5},
                                                   {3, {1, 0}, 3},
                                                   {3, {0, 1}, 3},
                                                   {3, {1, 1}, 8},
                                                   {3, {2, 0}, 6},
                                                   {3, {2, 2}, 27},
                                                   {4, {1, 0, 1}, 15},
                                                   {4, {0, 2, 0}, 20}}) {
        const NumericIrrep rep = NumericIrrep::build(n, fund(coords));
        CHECK(rep.n() == n);
        CHECK(rep.dim() == dim);
        CHECK(rep.basis().cols() == dim);
        // Columns are orthonormal.
        const Eigen::MatrixXd g =
            rep.basis().transpose() * rep.basis();
        CHECK((g - Eigen::MatrixXd::Identity(dim, dim)).norm() < 1e-10);
    }
}

TEST_CASE("the representation is a Lie algebra homomorphism") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    Eigen::MatrixXd x(3, 3), y(3, 3);
    x << 0.3, 1.2, -0.4, 0.7, -0.1, 0.5, 0.2, -0.6, -0.2;
    y << -0.5, 0.4, 0.9, 0.1, 0.8, -0.3, 0.6, 0.2, -0.3;
    const Eigen::MatrixXd dx = rep.lie_action(x);
    const Eigen::MatrixXd dy = rep.lie_action(y);
    const Eigen::MatrixXd lhs = dx * dy - dy * dx;
    const Eigen::MatrixXd rhs = rep.lie_action(x * y - y * x);
    CHECK((lhs - rhs).norm() < 1e-9);
    CHECK_THROWS_AS(rep.lie_action(Eigen::MatrixXd::Identity(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("group action respects exp and multiplication") {
    const NumericIrrep rep = NumericIrrep::build(2, fund({3}));
    Eigen::MatrixXd a(2, 2);
    a << 0.4, 0.9, 0.3, -0.4;
    const Eigen::MatrixXd g = a.exp();
    const Eigen::MatrixXd rho_g = rep.group_action(g);
    // ρ(exp a) = exp dρ(a).
    const Eigen::MatrixXd exp_da = rep.lie_action(a).exp();
    CHECK((rho_g - exp_da).norm() < 1e-9);
    // Single-vector path agrees with the full matrix.
    Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(rep.dim(), 1.0, 2.0);
    CHECK((rep.act_group(g, v) - rho_g * v).norm() < 1e-10);
    CHECK((rep.act_lie(a, v) - rep.lie_action(a) * v).norm() < 1e-10);
}

TEST_CASE("weight bookkeeping: occupations and offsets are exact") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const IntVec h = {2, 0, -2};
    for (int j = 0; j < rep.dim(); ++j) {
        // weight_on must equal the occupation pairing.
        Int expect(0);
        const IntVec& occ = rep.occupation(j);
        REQUIRE(occ.size() == 3);
        for (int i = 0; i < 3; ++i) expect += occ[i] * h[i];
        CHECK(rep.weight_on(j, h) == expect);
        // The diagonal action scales column j by exactly that exponent.
        for (const Int& o : rep.offset(j)) CHECK(o >= 0);
    }
    // Column 0 is the highest weight vector with zero offset.
    CHECK(rep.offset(0) == IntVec{0, 0});
    Eigen::MatrixXd hm = Eigen::MatrixXd::Zero(3, 3);
    hm(0, 0) = 2;
    hm(2, 2) = -2;
    const Eigen::VectorXd hv = rep.act_lie(hm, rep.highest_vector());
    CHECK((hv - 4.0 * rep.highest_vector()).norm() < 1e-10);
}

TEST_CASE("K-fixed vectors exist exactly for spherical weights") {
    for (const auto& [n, coords, spherical] :
         std::vector<std::tuple<int, RatVec, bool>>{{2, {1}, false},
                                                    {2, {2}, true},
                                                    {2, {3}, false},
                                                    {2, {4}, true},
                                                    {3, {1, 1}, false},
                                                    {3, {2, 0}, true},
                                                    {3, {2, 2}, true},
                                                    {3, {1, 0}, false}}) {
        const NumericIrrep rep = NumericIrrep::build(n, fund(coords));
        const auto e = rep.k_fixed_vector();
        CHECK(e.has_value() == spherical);
        if (e) {
            CHECK(e->norm() == doctest::Approx(1).epsilon(1e-12));
            CHECK(e->dot(rep.highest_vector()) > 0);
            CHECK(rep.m_fixed_check(*e));
            // Genuinely fixed, not just so(n)-annihilated.
            std::mt19937_64 rng(5);
            const Eigen::MatrixXd k = haar_special_orthogonal(n, rng);
            CHECK((rep.act_group(k, *e) - *e).norm() < 1e-9);
        }
    }
}

TEST_CASE("fatou limit recovers the highest component at the weight-gap rate") {
    const NumericIrrep rep = NumericIrrep::build(2, fund({2}));
    const FatouResult f =
        fatou_limit(rep, standard_direction(2), make_t_grid(5.0, 51));
    CHECK(f.weight_gap == doctest::Approx(4).epsilon(1e-12));
    CHECK(f.highest_component > 0);
    CHECK(f.limit_m_fixed);
    CHECK(f.trace.samples.back().error < 5e-9);
    CHECK(f.trace.fitted_rate == doctest::Approx(4).epsilon(0.05));
    // The limit is the projection of e onto the highest weight line.
    const auto e = rep.k_fixed_vector();
    REQUIRE(e.has_value());
    const double c = e->dot(rep.highest_vector());
    CHECK((f.trace.limit - c * rep.highest_vector()).norm() < 1e-8);
}

TEST_CASE("fatou limit needs a spherical weight and a dominant direction") {
    const NumericIrrep plain = NumericIrrep::build(2, fund({1}));
    CHECK_THROWS_AS(
        fatou_limit(plain, standard_direction(2), make_t_grid(2.0, 11)),
        std::invalid_argument);
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    CHECK_THROWS_AS(fatou_limit(rep, IntVec{0, 0, 0}, make_t_grid(2.0, 11)),
                    std::invalid_argument);
    CHECK_THROWS_AS(fatou_limit(rep, IntVec{-2, 0, 2}, make_t_grid(2.0, 11)),
                    std::invalid_argument);
}

TEST_CASE("haar averages land on the K-fixed line when it exists") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const HaarAverage avg = haar_average(rep, 4000, 0xC0FFEE);
    CHECK(avg.spherical);
    CHECK(avg.cosine > 0.99);
    CHECK(avg.c_ratio > 0);

    // Non-spherical: the average is zero within Monte-Carlo noise.
    const NumericIrrep odd = NumericIrrep::build(3, fund({1, 0}));
    const HaarAverage zero = haar_average(odd, 4000, 0xC0FFEE);
    CHECK(!zero.spherical);
    CHECK(zero.norm < 4 * zero.std_error);

    // Same seed, same average.
    const HaarAverage again = haar_average(rep, 4000, 0xC0FFEE);
    CHECK(again.average == avg.average);
}

TEST_CASE("congruent columns and the boundary vector") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const SimpleSubset e1 = SimpleSubset::from_indices(2, {0});
    const auto cols = congruent_columns(rep, e1);
    CHECK(cols.size() == 3);
    for (int j : cols) CHECK(rep.offset(j)[1] == 0);
    const Eigen::VectorXd iota = boundary_vector(rep, e1);
    CHECK(iota.norm() == doctest::Approx(1).epsilon(1e-12));
    // Supported exactly on the congruent columns.
    for (int j = 0; j < rep.dim(); ++j) {
        const bool in = std::find(cols.begin(), cols.end(), j) != cols.end();
        if (!in) CHECK(iota[j] == 0.0);
    }
}

TEST_CASE("boundary limits flow to the predicted face point") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const SimpleSubset e1 = SimpleSubset::from_indices(2, {0});
    // H with γ₁(H) = 0, γ₂(H) = 3: strictly inside the face of E = {1}.
    const IntVec h = {1, 1, -2};
    Eigen::MatrixXd a(3, 3);
    a << 0.11, 0.32, -0.24, 0.05, -0.19, 0.41, -0.13, 0.07, 0.08;
    const Eigen::MatrixXd g = a.exp();
    const BoundaryLimitResult lim =
        boundary_limit(rep, e1, h, g, make_t_grid(10.0, 51));
    CHECK(lim.trace.samples.back().error < 1e-8);
    CHECK(lim.weight_gap > 0);
    CHECK(!lim.g_in_ME);
    // The identity is in M(E), and then the limit is ι_E(õ) itself.
    const BoundaryLimitResult id_lim = boundary_limit(
        rep, e1, h, Eigen::MatrixXd::Identity(3, 3), make_t_grid(10.0, 51));
    CHECK(id_lim.g_in_ME);
    CHECK(projective_distance(id_lim.predicted, boundary_vector(rep, e1)) <
          1e-9);
    // A direction off the face is rejected.
    CHECK_THROWS_AS(
        boundary_limit(rep, e1, standard_direction(3), g, make_t_grid(2.0, 5)),
        std::invalid_argument);
}

TEST_CASE("affine chart coordinates and the PSD oracle") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const auto e = rep.k_fixed_vector();
    REQUIRE(e.has_value());
    CHECK(affine_chart(rep, *e).norm() < 1e-12);
    // The chart rejects vectors orthogonal to e.
    const Eigen::VectorXd far = boundary_vector(
        rep, SimpleSubset::empty_set(2));
    CHECK_THROWS_AS(affine_chart(rep, far - e->dot(far) * *e),
                    std::invalid_argument);

    const PsdOracle oracle = psd_model_oracle(3);
    CHECK(oracle.stratum_dims == std::vector<int>{5, 4, 2});
    Eigen::MatrixXd m(3, 3);
    m << 1, 0.2, 0, 0.2, 2, 0.5, 0, 0.5, 1.5;
    CHECK(oracle.map_point(m.llt().matrixL()).norm() ==
          doctest::Approx(1).epsilon(1e-12));
    // sym_to_irrep carries gg^T to the group action on the K-fixed ray.
    Eigen::MatrixXd a(3, 3);
    a << 0.1, 0.3, -0.2, 0.0, -0.25, 0.15, 0.2, -0.1, 0.15;
    Eigen::MatrixXd g = a.exp();
    g /= std::cbrt(g.determinant());
    const Eigen::VectorXd lhs = sym_to_irrep(rep, g * g.transpose());
    const Eigen::VectorXd rhs = rep.act_group(g, *e);
    CHECK(projective_distance(lhs, rhs) < 1e-10);
}

TEST_CASE("boundedness probe stays under the chart bound") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const BoundednessProbe probe = boundedness_probe(rep, 500, 0xC0FFEE);
    CHECK(probe.samples == 500);
    CHECK(probe.max_norm <= std::sqrt(2.0) + 1e-9);
    CHECK(probe.max_norm_first_tenth <= probe.max_norm);
    const BoundednessProbe again = boundedness_probe(rep, 500, 0xC0FFEE);
    CHECK(again.max_norm == probe.max_norm);
}

TEST_CASE("stabilizer deformation converges at twice the slowest pairing") {
    const NumericIrrep rep = NumericIrrep::build(2, fund({2}));
    const SimpleSubset empty = SimpleSubset::empty_set(1);
    const IntVec h = {1, -1};
    const std::vector<RootCoefficient> coeffs = {{0, 1, 0.7}};
    const DeformationResult d = stabilizer_deformation(
        rep, empty, h, Eigen::MatrixXd::Identity(2, 2), coeffs,
        make_t_grid(8.0, 41));
    CHECK(d.expected_rate == doctest::Approx(4).epsilon(1e-12));
    CHECK(d.trace.fitted_rate == doctest::Approx(4).epsilon(0.05));
    CHECK(d.fixes_point);
    CHECK(d.point_distance < 1e-8);
    // The limit is unipotent upper-triangular with the supplied coefficient.
    CHECK(d.limit_group(0, 1) == doctest::Approx(0.7).epsilon(1e-8));
    CHECK(d.limit_group(1, 0) == doctest::Approx(0).epsilon(1e-8));
}

TEST_CASE("the boundary stabilizer fixes its component") {
    const NumericIrrep rep = NumericIrrep::build(3, fund({2, 0}));
    const StabilizerCheck chk =
        verify_boundary_stabilizer(rep, SimpleSubset::empty_set(2));
    CHECK(chk.point_fixed);
    CHECK(chk.set_preserved);
    CHECK(chk.point_generators > 0);
    CHECK(chk.max_point_distance < 1e-9);

    const StabilizerCheck face =
        verify_boundary_stabilizer(rep, SimpleSubset::from_indices(2, {0}));
    CHECK(face.point_fixed);
    CHECK(face.set_preserved);
}

TEST_CASE("the numeric lab rejects non-split or mismatched input") {
    CHECK_THROWS_AS(NumericIrrep::build(3, fund({2})), std::invalid_argument);
    CHECK_THROWS_AS(NumericIrrep::build(1, fund(RatVec{})),
                    std::invalid_argument);
    CHECK_THROWS_AS(NumericIrrep::build(3, fund({Rat(1, 2), Rat(0)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(NumericIrrep::build(3, fund({-1, 0})), std::invalid_argument);
}

TEST_CASE("cartan-helgason equivalence on a told subset of weights") {
    CHECK(verify_ch_equivalence(2, fund({0})));
    CHECK(verify_ch_equivalence(2, fund({1})));
    CHECK(verify_ch_equivalence(2, fund({2})));
    CHECK(verify_ch_equivalence(3, fund({1, 1})));
    CHECK(verify_ch_equivalence(3, fund({2, 0})));
}

}  // TEST_SUITE
