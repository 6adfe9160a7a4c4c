#include "satake/boundary.hpp"

#include "satake/rational_linalg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace satake {

SimpleSubset compute_E0(const RestrictedRootSystem& rs, const WeightVector& lambda) {
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("E0 is defined for dominant weights");
    const RatVec fund = rs.to_fundamental(lambda).coords;
    SimpleSubset e0 = SimpleSubset::empty_set(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
        if (fund[i] == 0) e0 = e0.with(i);
    return e0;
}

std::vector<SimpleSubset> components(const RestrictedRootSystem& rs, const SimpleSubset& E) {
    if (E.rank() != rs.rank()) throw std::invalid_argument("subset rank mismatch");
    std::vector<bool> seen(rs.rank(), false);
    std::vector<SimpleSubset> out;
    for (int start : E.indices()) {
        if (seen[start]) continue;
        SimpleSubset comp = SimpleSubset::empty_set(rs.rank());
        std::deque<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            comp = comp.with(i);
            for (int j : E.indices())
                if (!seen[j] && rs.adjacent(i, j)) {
                    seen[j] = true;
                    queue.push_back(j);
                }
        }
        out.push_back(comp);
    }
    return out;
}

SimpleSubset neighbors(const RestrictedRootSystem& rs, const SimpleSubset& E) {
    if (E.rank() != rs.rank()) throw std::invalid_argument("subset rank mismatch");
    SimpleSubset nb = SimpleSubset::empty_set(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
        if (E.contains(j)) continue;
        for (int i : E.indices())
            if (rs.adjacent(i, j)) {
                nb = nb.with(j);
                break;
            }
    }
    return nb;
}

bool is_E0_connected(const RestrictedRootSystem& rs, const SimpleSubset& E,
                     const SimpleSubset& E0) {
    for (const SimpleSubset& comp : components(rs, E))
        if (comp.is_subset_of(E0)) return false;
    return true;
}

SimpleSubset saturate(const RestrictedRootSystem& rs, const SimpleSubset& E,
                      const SimpleSubset& E0) {
    // Core = the components of E carrying Λ (not inside E₀).  F is everything
    // in E₀ neither in the core nor adjacent to it; any admissible enlargement
    // of the core is contained in core ∪ F, which gives maximality.  Parts of
    // E inside E₀ are legal only when they are whole components of F: that
    // accepts every already-saturated set, so the map is idempotent, and
    // rejects slices that label no boundary datum.
    SimpleSubset core = SimpleSubset::empty_set(E.rank());
    for (const SimpleSubset& comp : components(rs, E))
        if (!comp.is_subset_of(E0)) core = core.unite(comp);
    const SimpleSubset blocked = core.unite(neighbors(rs, core));
    const SimpleSubset F = E0.intersect(blocked.complement());
    const SimpleSubset rest = E.intersect(core.complement());
    for (const SimpleSubset& comp : components(rs, rest)) {
        if (!comp.is_subset_of(F)) {
            std::ostringstream os;
            os << "the component " << comp.to_string() << " of E lies inside E0 = "
               << E0.to_string() << " but touches the core or its neighbors; E is not "
               << "E0-connected";
            throw std::invalid_argument(os.str());
        }
        for (int i : F.indices())
            if (!comp.contains(i) && neighbors(rs, comp).contains(i)) {
                std::ostringstream os;
                os << "the component " << comp.to_string() << " of E slices a component of "
                   << "E0 = " << E0.to_string() << "; E is not E0-connected";
                throw std::invalid_argument(os.str());
            }
    }
    return core.unite(F);
}

ParabolicDims parabolic_dims(const RestrictedRootSystem& rs, const SimpleSubset& E,
                             bool require_metadata) {
    if (E.rank() != rs.rank()) throw std::invalid_argument("subset rank mismatch");
    ParabolicDims d;
    d.dim_a_E = rs.rank() - E.size();
    d.dim_a_upper_E = E.size();
    for (const Root& g : rs.positive_roots()) {
        bool supported = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (g.simple[i] != 0 && !E.contains(i)) {
                supported = false;
                break;
            }
        (supported ? d.dim_n_upper_E : d.dim_n_E) += rs.multiplicity(g);
    }
    const auto& meta = rs.realform_meta();
    if (!meta) {
        if (require_metadata)
            throw std::invalid_argument(
                "parabolic dimensions need real-form metadata (dim m enters them)");
        return d;
    }
    d.has_metadata = true;
    d.dim_m_K = meta->dim_m + d.dim_n_upper_E;
    // 𝔪(E) = 𝔪_K(E) + 𝔞^E + 𝔫^E + θ𝔫^E is a spanning sum, not direct: the
    // compact parts X−θX already lie in the span of the root spaces, so the
    // dimension is dim 𝔪 + |E| + 2·dim 𝔫^E.
    d.dim_m_E = meta->dim_m + d.dim_a_upper_E + 2 * d.dim_n_upper_E;
    d.dim_b = d.dim_m_E + d.dim_a_E + d.dim_n_E;
    d.dim_flag = meta->dim_g - d.dim_b;
    return d;
}

BoundaryPoset boundary_poset(const RestrictedRootSystem& rs, const WeightVector& lambda) {
    const SphericityReport report = is_spherical(rs, lambda);
    if (!report.spherical) {
        std::string msg = "boundary poset needs a spherical weight";
        if (!report.dominant) msg += ": the weight is not dominant";
        if (!report.violations.empty()) {
            const auto& v = report.violations.front();
            msg += ": the integrality condition fails at root ";
            msg += "(" + rational_to_string(v.root.simple[0]);
            for (std::size_t i = 1; i < v.root.simple.size(); ++i)
                msg += "," + rational_to_string(v.root.simple[i]);
            msg += ") with ratio " + rational_to_string(v.ratio);
        }
        throw std::invalid_argument(msg);
    }

    BoundaryPoset poset;
    poset.weight = rs.to_fundamental(lambda);
    poset.E0 = compute_E0(rs, lambda);
    int summ = rs.sum_of_multiplicities();
    poset.interior_dim = rs.rank() + summ;
    if (is_zero(lambda)) {
        poset.degenerate = true;
        poset.warning = "zero weight: the compactification degenerates to a single point";
        return poset;
    }

    const int r = rs.rank();
    const std::uint32_t full = SimpleSubset::full_set(r).bits();
    std::vector<SimpleSubset> admissible;
    for (std::uint32_t bits = 0; bits < full; ++bits) {  // proper subsets only
        SimpleSubset E(r, bits);
        if (is_E0_connected(rs, E, poset.E0)) admissible.push_back(E);
    }
    std::sort(admissible.begin(), admissible.end(),
              [](const SimpleSubset& a, const SimpleSubset& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a.bits() < b.bits();
              });

    for (const SimpleSubset& E : admissible) {
        BoundaryComponent node;
        node.E = E;
        node.E_prime = saturate(rs, E, poset.E0);
        node.E_dprime = node.E_prime.intersect(E.complement());
        const ParabolicDims own = parabolic_dims(rs, E, false);
        node.dim_XE = E.size() + own.dim_n_upper_E;
        node.stab = parabolic_dims(rs, node.E_prime, false);
        if (rs.realform_meta())
            node.orbit_dim = (rs.realform_meta()->dim_k - node.stab.dim_m_K) + node.dim_XE;
        poset.nodes.push_back(std::move(node));
    }

    const int n = static_cast<int>(poset.nodes.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& a = poset.nodes[i].E;
            const auto& b = poset.nodes[j].E;
            if (a == b || !a.is_subset_of(b)) continue;
            bool covered = false;
            for (int k = 0; k < n && !covered; ++k) {
                const auto& c = poset.nodes[k].E;
                covered = k != i && k != j && a.is_subset_of(c) && c.is_subset_of(b);
            }
            if (!covered) poset.covers.emplace_back(i, j);
        }
    return poset;
}

FaceChamber face_chamber(const RestrictedRootSystem& rs, const SimpleSubset& E) {
    if (E.rank() != rs.rank()) throw std::invalid_argument("subset rank mismatch");
    const int r = rs.rank();
    FaceChamber fc;
    if (E.size() == r) {
        fc.empty_face = true;
        fc.interior_point = rs.zero();
        return fc;
    }
    for (int i = 0; i < r; ++i)
        if (!E.contains(i)) fc.positive_on.push_back(i);

    // 𝔞(E) is the common kernel of the roots in E; in simple coordinates the
    // value γᵢ(H) is the i-th entry of G·h.
    if (E.empty()) {
        for (int j = 0; j < r; ++j) {
            RatVec v(r, Rat(0));
            v[j] = 1;
            fc.face_basis.push_back({Basis::simple_root, std::move(v)});
        }
    } else {
        RatMat rows;
        for (int i : E.indices()) rows.push_back(rs.gram()[i]);
        for (const RatVec& v : kernel_basis(rows))
            fc.face_basis.push_back({Basis::simple_root, v});
    }

    // Interior sample: γᵢ(H) = 0 on E, 1 off E, cleared to integer coords.
    RatVec target(r, Rat(0));
    for (int i = 0; i < r; ++i) target[i] = E.contains(i) ? 0 : 1;
    RatVec h = solve_linear(rs.gram(), target);
    const Int s = lcm_of_denominators(h);
    for (auto& x : h) x *= s;
    fc.interior_point = {Basis::simple_root, std::move(h)};
    return fc;
}

WeightVector lambda_E(const RestrictedRootSystem& rs, const WeightVector& lambda,
                      const SimpleSubset& E) {
    if (E.rank() != rs.rank()) throw std::invalid_argument("subset rank mismatch");
    const int r = rs.rank();
    RatVec coords(r, Rat(0));
    const std::vector<int> idx = E.indices();
    if (!idx.empty()) {
        const int m = static_cast<int>(idx.size());
        RatMat g(m, RatVec(m));
        RatVec b(m);
        for (int a = 0; a < m; ++a) {
            for (int c = 0; c < m; ++c) g[a][c] = rs.gram()[idx[a]][idx[c]];
            WeightVector gamma{Basis::simple_root, RatVec(r, Rat(0))};
            gamma.coords[idx[a]] = 1;
            b[a] = rs.inner(lambda, gamma);
        }
        const RatVec c = solve_linear(g, b);
        for (int a = 0; a < m; ++a) coords[idx[a]] = c[a];
    }
    return {Basis::simple_root, std::move(coords)};
}

}  // namespace satake
