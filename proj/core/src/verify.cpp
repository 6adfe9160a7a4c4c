#include "satake/verify.hpp"

#include "satake/spherical.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

using Clock = std::chrono::steady_clock;

WeightVector fund(std::vector<Rat> coords) {
    return WeightVector{Basis::fundamental_weight, std::move(coords)};
}

CheckResult timed_check(const std::string& name,
                        const std::function<std::string()>& body) {
    CheckResult res;
    res.name = name;
    const auto start = Clock::now();
    try {
        res.detail = body();
        res.pass = true;
    } catch (const std::exception& ex) {
        res.pass = false;
        res.detail = ex.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string check_ch_sweep(const VerifyOptions& opts) {
    int cases = 0;
    for (int c = 0; c <= 3; ++c) {
        if (!verify_ch_equivalence(2, fund({c}), opts.tol)) {
            std::ostringstream os;
            os << "equivalence fails on n=2, weight (" << c << ")";
            fail(os.str());
        }
        ++cases;
    }
    for (int c1 = 0; c1 <= 3; ++c1)
        for (int c2 = 0; c2 <= 3; ++c2) {
            if (!verify_ch_equivalence(3, fund({c1, c2}), opts.tol)) {
                std::ostringstream os;
                os << "equivalence fails on n=3, weight (" << c1 << "," << c2 << ")";
                fail(os.str());
            }
            ++cases;
        }
    std::ostringstream os;
    os << cases << " weights: K-fixed vector exists iff the integrality condition holds, "
       << "and every Fatou limit is M-fixed";
    return os.str();
}

std::string check_psd_oracle(const VerifyOptions& opts) {
    double worst = 0;
    // n = 2: one boundary class of orbit dimension 1.
    {
        const RestrictedRootSystem rs = RestrictedRootSystem::preset("sl2r");
        const BoundaryPoset poset = boundary_poset(rs, fund({2}));
        const PsdOracle oracle = psd_model_oracle(2);
        if (poset.nodes.size() != 1) fail("sl(2,R) must have exactly 1 boundary class");
        if (!poset.nodes[0].orbit_dim || *poset.nodes[0].orbit_dim != oracle.stratum_dims[1])
            fail("sl(2,R) boundary orbit dimension disagrees with the PSD rank-1 stratum");
        if (poset.interior_dim != oracle.stratum_dims[0])
            fail("sl(2,R) interior dimension disagrees with the full-rank stratum");
    }
    // n = 3: classes of orbit dimensions 4 and 2.
    const RestrictedRootSystem rs3 = RestrictedRootSystem::preset("sl3r");
    const BoundaryPoset poset3 = boundary_poset(rs3, fund({2, 0}));
    const PsdOracle oracle3 = psd_model_oracle(3);
    if (poset3.nodes.size() != 2) fail("sl(3,R) must have exactly 2 boundary classes");
    std::vector<int> dims;
    for (const BoundaryComponent& node : poset3.nodes) {
        if (!node.orbit_dim) fail("orbit dimension missing on a preset with metadata");
        dims.push_back(*node.orbit_dim);
    }
    std::sort(dims.begin(), dims.end());
    if (dims != std::vector<int>{oracle3.stratum_dims[2], oracle3.stratum_dims[1]})
        fail("sl(3,R) boundary orbit dimensions disagree with the PSD strata");
    if (poset3.interior_dim != oracle3.stratum_dims[0])
        fail("sl(3,R) interior dimension disagrees with the full-rank stratum");

    // Flow targets against the PSD model, through a generic group element.
    const NumericIrrep rep2 = NumericIrrep::build(2, fund({2}), opts.tol);
    const NumericIrrep rep3 = NumericIrrep::build(3, fund({2, 0}), opts.tol);
    const auto check_flow = [&](const NumericIrrep& rep, const SimpleSubset& e_set,
                                const IntVec& h, const Eigen::MatrixXd& g, int keep) {
        // The slowest of the three flows contracts like e^{-2t}, so the grid
        // must reach past t = 9.2 for the tail to clear the limit tolerance.
        const BoundaryLimitResult lim =
            boundary_limit(rep, e_set, h, g, make_t_grid(10.0, 51), opts.tol);
        Eigen::MatrixXd s = g * g.transpose();
        for (int i = 0; i < rep.n(); ++i)
            for (int j = 0; j < rep.n(); ++j)
                if (i >= keep || j >= keep) s(i, j) = 0;
        const Eigen::VectorXd target = sym_to_irrep(rep, s);
        const double d = projective_distance(lim.predicted, target);
        worst = std::max(worst, d);
        if (d > opts.tol.limits) {
            std::ostringstream os;
            os << "flow target misses the PSD stratum matrix by projective distance " << d;
            fail(os.str());
        }
        const double tail = lim.trace.samples.back().error;
        if (tail > opts.tol.limits) {
            std::ostringstream os;
            os << "the flow is still " << tail << " away from its target at the end of the grid";
            fail(os.str());
        }
    };
    Eigen::MatrixXd a2(2, 2), a3(3, 3);
    a2 << 0.21, 0.43, -0.17, -0.21;
    a3 << 0.11, 0.32, -0.24, 0.05, -0.19, 0.41, -0.13, 0.07, 0.08;
    const Eigen::MatrixXd g2 = a2.exp();
    const Eigen::MatrixXd g3 = a3.exp();
    check_flow(rep2, SimpleSubset::empty_set(1), IntVec{1, -1}, g2, 1);
    check_flow(rep3, SimpleSubset::from_indices(2, {0}), IntVec{1, 1, -2}, g3, 2);
    check_flow(rep3, SimpleSubset::empty_set(2), IntVec{2, 0, -2}, g3, 1);

    std::ostringstream os;
    os << "orbit dims (1) and (4,2) match the rank strata; flow targets within "
       << worst << " of the PSD matrices";
    return os.str();
}

std::string check_regular_weights(const VerifyOptions&) {
    const auto probe = [](const std::string& preset, std::vector<Rat> two_rho,
                          std::size_t expected) {
        const RestrictedRootSystem rs = RestrictedRootSystem::preset(preset);
        const BoundaryPoset poset = boundary_poset(rs, fund(std::move(two_rho)));
        if (poset.nodes.size() != expected) {
            std::ostringstream os;
            os << preset << " must have " << expected << " boundary nodes, found "
               << poset.nodes.size();
            fail(os.str());
        }
        for (const auto& [small, large] : poset.covers) {
            const auto lo = static_cast<std::size_t>(small);
            const auto hi = static_cast<std::size_t>(large);
            if (lo >= poset.nodes.size() || hi >= poset.nodes.size())
                fail("cover endpoint missing from the node list");
            const auto ds = poset.nodes[lo].orbit_dim;
            const auto dl = poset.nodes[hi].orbit_dim;
            if (!ds || !dl) fail("orbit dimension missing on a preset with metadata");
            if (*ds >= *dl) {
                std::ostringstream os;
                os << preset << ": cover " << poset.nodes[lo].E.to_string() << " < "
                   << poset.nodes[hi].E.to_string() << " has non-decreasing orbit dims "
                   << *ds << " >= " << *dl;
                fail(os.str());
            }
        }
    };
    probe("sl3r", {2, 2}, 3);
    probe("sl4r", {2, 2, 2}, 7);
    return "2^r - 1 nodes on A2 and A3 regular weights; orbit dims strictly increase "
           "along every cover";
}

std::string check_fatou(const VerifyOptions& opts) {
    const NumericIrrep rep2 = NumericIrrep::build(2, fund({2}), opts.tol);
    const FatouResult f2 =
        fatou_limit(rep2, IntVec{1, -1}, make_t_grid(5.0, 51), opts.tol);
    const double err_end = f2.trace.samples.back().error;
    if (err_end > 5e-9) {
        std::ostringstream os;
        os << "relative error " << err_end << " at t=5 exceeds 5e-9 (closed form is e^-20)";
        fail(os.str());
    }
    if (std::abs(f2.weight_gap - 4.0) > 1e-12) fail("the (2,2w) weight gap must be 4");
    if (std::abs(f2.trace.fitted_rate - 4.0) > 0.05 * 4.0) {
        std::ostringstream os;
        os << "fitted rate " << f2.trace.fitted_rate << " is not within 5% of the gap 4";
        fail(os.str());
    }
    if (!f2.limit_m_fixed) fail("the (2,2w) Fatou limit must be M-fixed");

    const NumericIrrep rep3 = NumericIrrep::build(3, fund({2, 0}), opts.tol);
    for (const IntVec& h : {IntVec{2, 0, -2}, IntVec{3, 1, -4}}) {
        const FatouResult f3 = fatou_limit(rep3, h, make_t_grid(5.0, 51), opts.tol);
        if (f3.weight_gap <= 0) fail("the (3,2w1) weight gap must be positive");
        if (std::abs(f3.trace.fitted_rate - f3.weight_gap) > 0.05 * f3.weight_gap) {
            std::ostringstream os;
            os << "fitted rate " << f3.trace.fitted_rate << " is not within 5% of the gap "
               << f3.weight_gap;
            fail(os.str());
        }
        if (!f3.limit_m_fixed) fail("the (3,2w1) Fatou limit must be M-fixed");
    }
    std::ostringstream os;
    os << "error " << err_end << " at t=5 on (2,2w); fitted rates match the weight gaps "
       << "on both realizations";
    return os.str();
}

std::string check_poisson(const VerifyOptions& opts) {
    double worst_cosine = 1.0;
    for (int n = 2; n <= 3; ++n) {
        std::vector<Rat> coords(n - 1, 0);
        coords[0] = 2;
        const NumericIrrep rep = NumericIrrep::build(n, fund(coords), opts.tol);
        const HaarAverage avg = haar_average(rep, opts.haar_samples, opts.seed, opts.tol);
        if (!avg.spherical) fail("the K-fixed vector must exist for the 2w1 weight");
        worst_cosine = std::min(worst_cosine, avg.cosine);
        if (avg.cosine < 0.999) {
            std::ostringstream os;
            os << "cosine alignment " << avg.cosine << " below 0.999 on n=" << n;
            fail(os.str());
        }
        if (avg.c_ratio <= 0) fail("the Poisson coefficient c must be positive");
    }
    const NumericIrrep bad = NumericIrrep::build(3, fund({1, 0}), opts.tol);
    const HaarAverage avg = haar_average(bad, opts.haar_samples, opts.seed, opts.tol);
    if (avg.spherical) fail("(3,w1) must not be spherical");
    if (avg.norm > 3.0 * avg.std_error) {
        std::ostringstream os;
        os << "non-spherical average norm " << avg.norm << " exceeds 3 standard errors "
           << 3.0 * avg.std_error;
        fail(os.str());
    }
    std::ostringstream os;
    os << "cosine >= " << worst_cosine << " with c > 0 on the spherical weights; "
       << "the non-spherical average vanishes within noise";
    return os.str();
}

std::string check_weight_systems(const VerifyOptions& opts) {
    int systems = 0, built = 0;
    for (int rank = 1; rank <= 3; ++rank) {
        const RestrictedRootSystem rs =
            RestrictedRootSystem::build(SystemType::A, rank, {{"all", 1}});
        std::vector<int> coeff(rank, 0);
        // Odometer over fundamental coefficients with sum <= 4.
        while (true) {
            int sum = 0;
            for (int c : coeff) sum += c;
            if (sum <= 4) {
                std::vector<Rat> coords(coeff.begin(), coeff.end());
                const WeightVector w = fund(coords);
                const WeightSystem ws = weight_system(rs, w);
                const Int dim = weyl_dimension(rs, w);
                if (ws.total_multiplicity != dim) {
                    std::ostringstream os;
                    os << "multiplicity sum " << ws.total_multiplicity << " vs Weyl dimension "
                       << dim << " on A" << rank;
                    fail(os.str());
                }
                ++systems;
                if (dim <= 2000) {
                    const NumericIrrep rep = NumericIrrep::build(rank + 1, w, opts.tol);
                    if (Int(rep.dim()) != dim)
                        fail("the numeric realization disagrees with the Weyl dimension");
                    ++built;
                }
            }
            int i = rank - 1;
            while (i >= 0 && coeff[i] == 4) coeff[i--] = 0;
            if (i < 0) break;
            ++coeff[i];
        }
    }
    std::ostringstream os;
    os << systems << " weight systems on A1..A3 match the Weyl dimension exactly; " << built
       << " numeric realizations agree";
    return os.str();
}

std::string check_saturation(const VerifyOptions&) {
    long checked = 0;
    std::vector<std::pair<SystemType, int>> shapes;
    for (int r = 1; r <= 5; ++r) shapes.emplace_back(SystemType::A, r);
    for (int r = 2; r <= 5; ++r) shapes.emplace_back(SystemType::B, r);
    for (int r = 2; r <= 5; ++r) shapes.emplace_back(SystemType::C, r);
    for (int r = 3; r <= 5; ++r) shapes.emplace_back(SystemType::D, r);
    shapes.emplace_back(SystemType::F, 4);
    shapes.emplace_back(SystemType::G, 2);
    for (int r = 1; r <= 5; ++r) shapes.emplace_back(SystemType::BC, r);

    for (const auto& [type, rank] : shapes) {
        const RestrictedRootSystem rs = RestrictedRootSystem::build(type, rank, {{"all", 1}});
        const std::uint32_t full = SimpleSubset::full_set(rank).bits();
        for (std::uint32_t e0bits = 0; e0bits <= full; ++e0bits) {
            const SimpleSubset e0(rank, e0bits);
            for (std::uint32_t ebits = 0; ebits <= full; ++ebits) {
                const SimpleSubset e(rank, ebits);
                if (!is_E0_connected(rs, e, e0)) continue;
                const SimpleSubset got = saturate(rs, e, e0);
                // Exhaustive search: the candidates are all E ∪ F with F
                // inside E₀ and not adjacent to E; their union is itself a
                // candidate, so it is the unique maximum.
                std::vector<SimpleSubset> candidates;
                SimpleSubset best = e;
                for (std::uint32_t sbits = 0; sbits <= full; ++sbits) {
                    const SimpleSubset s(rank, sbits);
                    if (!e.is_subset_of(s)) continue;
                    const SimpleSubset extra = s.intersect(e.complement());
                    if (!extra.is_subset_of(e0)) continue;
                    if (!extra.intersect(neighbors(rs, e)).empty()) continue;
                    candidates.push_back(s);
                    best = best.unite(s);
                }
                for (const SimpleSubset& s : candidates)
                    if (!s.is_subset_of(best)) fail("a candidate escapes the union bound");
                const SimpleSubset best_extra = best.intersect(e.complement());
                if (!best_extra.is_subset_of(e0) ||
                    !best_extra.intersect(neighbors(rs, e)).empty())
                    fail("the union of candidates is not itself a candidate");
                if (!(got == best)) {
                    std::ostringstream os;
                    os << to_string(type) << rank << ": saturate(" << e.to_string() << ", E0="
                       << e0.to_string() << ") = " << got.to_string()
                       << " but the exhaustive maximum is " << best.to_string();
                    fail(os.str());
                }
                if (!(saturate(rs, got, e0) == got)) {
                    std::ostringstream os;
                    os << to_string(type) << rank << ": saturate is not idempotent at "
                       << e.to_string() << " with E0=" << e0.to_string();
                    fail(os.str());
                }
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << checked << " (type, E0, E) triples over every restricted type of rank <= 5: "
       << "saturate equals the exhaustive maximum and is idempotent";
    return os.str();
}

std::string check_deformation(const VerifyOptions& opts) {
    const NumericIrrep rep2 = NumericIrrep::build(2, fund({2}), opts.tol);
    const Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(2, 2);
    const DeformationResult def = stabilizer_deformation(
        rep2, SimpleSubset::empty_set(1), IntVec{1, -1}, id2, {{0, 1, 1.0}},
        make_t_grid(5.0, 51), opts.tol);
    if (std::abs(def.expected_rate - 4.0) > 1e-12)
        fail("the expected deformation rate on (2,2w) must be 4");
    if (std::abs(def.trace.fitted_rate - 4.0) > 0.05 * 4.0) {
        std::ostringstream os;
        os << "fitted deformation rate " << def.trace.fitted_rate
           << " is not within 5% of 4";
        fail(os.str());
    }
    if (!def.fixes_point) {
        std::ostringstream os;
        os << "the deformation limit moves the boundary point by " << def.point_distance;
        fail(os.str());
    }

    const NumericIrrep rep3 = NumericIrrep::build(3, fund({2, 0}), opts.tol);
    const StabilizerCheck stab =
        verify_boundary_stabilizer(rep3, SimpleSubset::from_indices(2, {0}), opts.tol);
    if (stab.max_point_distance > 1e-10) {
        std::ostringstream os;
        os << "a B(E') generator moves the boundary point by " << stab.max_point_distance;
        fail(os.str());
    }
    if (!stab.set_preserved) {
        std::ostringstream os;
        os << "a noncompact E-block generator leaks " << stab.max_set_leak << " outside V^E";
        fail(os.str());
    }
    std::ostringstream os;
    os << "conjugates converge at rate " << def.trace.fitted_rate << " to the limit in N; "
       << stab.point_generators << " stabilizer generators fix the point within "
       << stab.max_point_distance;
    return os.str();
}

std::string check_presets(const VerifyOptions&) {
    const std::vector<std::string> names = RestrictedRootSystem::preset_names();
    for (const std::string& name : names) {
        // Construction replays the dimension identities exactly and throws on
        // any mismatch.
        const RestrictedRootSystem rs = RestrictedRootSystem::preset(name);
        if (!rs.realform_meta()) fail("preset " + name + " lost its metadata");
    }
    const RestrictedRootSystem su21 = RestrictedRootSystem::preset("su21");
    const SphericalLattice lat = spherical_lattice_basis(su21);
    if (lat.basis.size() != 1) fail("the su(2,1) spherical lattice must have rank 1");
    const WeightVector gen = su21.to_simple(lat.basis[0]);
    if (!(gen.coords == RatVec{2}))
        fail("the su(2,1) spherical lattice generator must be 2γ");
    std::ostringstream os;
    os << names.size() << " presets pass both dimension identities; the su(2,1) lattice is "
       << "generated by 2γ";
    return os.str();
}

std::string check_boundedness(const VerifyOptions& opts) {
    std::ostringstream os;
    os << "max chart norms";
    for (int n = 2; n <= 3; ++n) {
        std::vector<Rat> coords(n - 1, 0);
        coords[0] = 2;
        const NumericIrrep rep = NumericIrrep::build(n, fund(coords), opts.tol);
        const BoundednessProbe small = boundedness_probe(rep, 1000, opts.seed, opts.tol);
        const BoundednessProbe large =
            boundedness_probe(rep, opts.probe_samples, opts.seed, opts.tol);
        if (!std::isfinite(large.max_norm)) fail("the chart norm must stay finite");
        const double drift =
            std::abs(large.max_norm - small.max_norm) / std::max(large.max_norm, 1e-300);
        if (drift > 0.01) {
            std::ostringstream msg;
            msg << "max chart norm drifts " << drift * 100 << "% between 10^3 and 10^4 samples "
                << "on n=" << n;
            fail(msg.str());
        }
        // The PSD oracle caps the chart norm by sqrt(n - 1): the cosine with
        // the identity is at least 1/sqrt(n) on the whole cone.
        const double bound = std::sqrt(static_cast<double>(n - 1));
        if (large.max_norm > bound + 1e-9) {
            std::ostringstream msg;
            msg << "max chart norm " << large.max_norm << " exceeds the PSD bound " << bound;
            fail(msg.str());
        }
        os << " n=" << n << ": " << large.max_norm;
    }
    os << ", both under the PSD cone bound and stable to 1%";
    return os.str();
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(timed_check("cartan-helgason-sweep", [&] { return check_ch_sweep(opts); }));
    out.push_back(timed_check("psd-oracle-match", [&] { return check_psd_oracle(opts); }));
    out.push_back(
        timed_check("regular-weight-count", [&] { return check_regular_weights(opts); }));
    out.push_back(timed_check("fatou-limit", [&] { return check_fatou(opts); }));
    out.push_back(timed_check("poisson-average", [&] { return check_poisson(opts); }));
    out.push_back(
        timed_check("weight-system-consistency", [&] { return check_weight_systems(opts); }));
    out.push_back(
        timed_check("saturation-brute-force", [&] { return check_saturation(opts); }));
    out.push_back(
        timed_check("stabilizer-deformation", [&] { return check_deformation(opts); }));
    out.push_back(timed_check("preset-integrity", [&] { return check_presets(opts); }));
    out.push_back(timed_check("boundedness-probe", [&] { return check_boundedness(opts); }));
    return out;
}

bool report_checks(const std::vector<CheckResult>& results, std::ostream& out) {
    bool all = true;
    for (const CheckResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << " ["
            << r.seconds << "s]\n";
        if (!r.pass) all = false;
    }
    return all;
}

}  // namespace satake
