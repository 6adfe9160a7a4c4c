#include "satake/spherical.hpp"

#include "satake/rational_linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace satake {

SphericityReport is_spherical(const RestrictedRootSystem& rs, const WeightVector& lambda) {
    SphericityReport report;
    report.dominant = rs.is_dominant(lambda);
    for (const Root& g : rs.positive_roots()) {
        const Rat ratio = rs.inner_root(lambda, g) / rs.root_norm_sq(g);
        if (!is_integer(ratio)) report.violations.push_back({g, ratio});
    }
    report.spherical = report.dominant && report.violations.empty();
    return report;
}

SphericalLattice spherical_lattice_basis(const RestrictedRootSystem& rs) {
    const int r = rs.rank();
    // The condition (λ|γ)/(γ|γ) ∈ ℤ for all γ > 0 says λ lies in the dual of
    // the lattice P spanned by the vectors γ/(γ|γ).  Compute an integer basis
    // of P by Hermite reduction, then invert against the Gram form.
    RatMat u(r, RatVec(rs.positive_roots().size(), Rat(0)));
    std::size_t col = 0;
    for (const Root& g : rs.positive_roots()) {
        const Rat nsq = rs.root_norm_sq(g);
        for (int i = 0; i < r; ++i) u[i][col] = g.simple[i] / nsq;
        ++col;
    }
    const Int s = lcm_of_denominators(u);
    IntMat m(r, IntVec(u.front().size()));
    for (int i = 0; i < r; ++i)
        for (std::size_t j = 0; j < u.front().size(); ++j)
            m[i][j] = numerator(Rat(u[i][j] * s));
    IntMat h;
    try {
        h = column_hnf(m);
    } catch (const std::domain_error&) {
        throw std::domain_error("degenerate root system: roots do not span");
    }
    // Basis of P in simple coordinates is h/s; membership λ ∈ P* reads
    // (h/s)ᵀ G λ ∈ ℤ^r, so a basis of P* is the inverse of that matrix.
    RatMat p_basis(r, RatVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) p_basis[i][j] = Rat(h[i][j], s);
    const RatMat constraint = mat_mul(transpose(p_basis), rs.gram());
    const RatMat dual = invert(constraint);  // columns span the lattice
    // Canonicalize in fundamental coordinates.  They are integers: on a
    // non-multipliable simple root the coordinate is twice the integral ratio,
    // and on a multipliable one it equals the ratio on the doubled root.
    RatMat fund(r, RatVec(r));
    for (int j = 0; j < r; ++j) {
        RatVec col(r);
        for (int i = 0; i < r; ++i) col[i] = dual[i][j];
        const WeightVector w = rs.to_fundamental({Basis::simple_root, std::move(col)});
        for (int i = 0; i < r; ++i) fund[i][j] = w.coords[i];
    }
    IntMat fund_int(r, IntVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!is_integer(fund[i][j]))
                throw std::logic_error("spherical lattice basis not integral in fundamental coordinates");
            fund_int[i][j] = numerator(fund[i][j]);
        }
    const IntMat canon = column_hnf(fund_int);
    SphericalLattice lattice;
    for (int j = 0; j < r; ++j) {
        RatVec c(r);
        for (int i = 0; i < r; ++i) c[i] = Rat(canon[i][j]);
        lattice.basis.push_back({Basis::fundamental_weight, std::move(c)});
    }
    return lattice;
}

bool SphericalLattice::contains(const RestrictedRootSystem& rs, const WeightVector& v) const {
    const int r = rs.rank();
    if (static_cast<int>(basis.size()) != r) throw std::logic_error("lattice basis incomplete");
    RatMat b(r, RatVec(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) b[i][j] = basis[j].coords[i];
    const RatVec x = solve_linear(b, rs.to_fundamental(v).coords);
    return std::all_of(x.begin(), x.end(), [](const Rat& c) { return is_integer(c); });
}

namespace {

// Integer offset vector Λ − μ in simple-root coordinates; throws unless all
// entries are integers.
IntVec offset_of(const RestrictedRootSystem& rs, const WeightVector& lambda,
                 const WeightVector& mu) {
    const RatVec d = sub(rs.to_simple(lambda), rs.to_simple(mu)).coords;
    IntVec k(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!is_integer(d[i])) throw std::logic_error("non-integral weight offset");
        k[i] = numerator(d[i]);
    }
    return k;
}

}  // namespace

WeightSystem weight_system(const RestrictedRootSystem& rs, const WeightVector& lambda) {
    if (!rs.is_split())
        throw std::invalid_argument(
            "weight_system is defined for split systems only (restricted roots with "
            "multiplicity 1 and no doubled roots); restricted weights of non-split "
            "forms are projections this toolkit does not model");
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("weight_system requires a dominant highest weight");
    const int r = rs.rank();
    const WeightVector lf = rs.to_fundamental(lambda);
    for (const Rat& c : lf.coords)
        if (!is_integer(c))
            throw std::invalid_argument(
                "weight_system requires integer fundamental coefficients");

    // Dominant weights μ ≤ Λ have offset Λ−μ inside the box spanned by the
    // offset of the lowest weight w₀Λ.
    const WeightVector lowest =
        scale(Rat(-1), rs.dominant_representative(scale(Rat(-1), lambda)));
    const IntVec box = offset_of(rs, lambda, lowest);
    const WeightVector ls = rs.to_simple(lambda);
    const WeightVector rho = rs.half_sum();
    const Rat top_norm = rs.inner(add(ls, rho), add(ls, rho));

    // Enumerate dominant candidates grouped by offset height.
    std::map<int, std::vector<IntVec>> by_height;
    IntVec k(r, 0);
    for (;;) {
        WeightVector mu = ls;
        Int height = 0;
        for (int i = 0; i < r; ++i) {
            mu.coords[i] -= Rat(k[i]);
            height += k[i];
        }
        if (rs.is_dominant(mu)) by_height[height.convert_to<int>()].push_back(k);
        int pos = 0;
        while (pos < r) {
            ++k[pos];
            if (k[pos] <= box[pos]) break;
            k[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
    }

    // Freudenthal's recursion over dominant weights by increasing height;
    // non-dominant lookups go through the dominant representative, whose
    // offset height never exceeds that of the query.
    std::map<IntVec, Int> mult;
    auto weight_at = [&](const IntVec& off) {
        WeightVector mu = ls;
        for (int i = 0; i < r; ++i) mu.coords[i] -= Rat(off[i]);
        return mu;
    };
    auto lookup = [&](const WeightVector& nu) -> Int {
        const WeightVector dom = rs.dominant_representative(nu);
        const RatVec d = sub(ls, rs.to_simple(dom)).coords;
        IntVec off(r);
        for (int i = 0; i < r; ++i) {
            if (!is_integer(d[i]) || d[i] < 0) return 0;
            off[i] = numerator(d[i]);
        }
        auto it = mult.find(off);
        return it == mult.end() ? Int(0) : it->second;
    };
    for (const auto& [height, offsets] : by_height) {
        for (const IntVec& off : offsets) {
            if (height == 0) {
                mult[off] = 1;
                continue;
            }
            const WeightVector mu = weight_at(off);
            Rat numer = 0;
            for (const Root& g : rs.positive_roots()) {
                const WeightVector gv = rs.root_vector(g);
                WeightVector nu = mu;
                for (Int step = 1;; ++step) {
                    nu = add(nu, gv);
                    // Past the box the offset goes negative for good.
                    bool out = false;
                    const RatVec d = sub(ls, rs.to_simple(nu)).coords;
                    for (const Rat& x : d) out = out || x < 0;
                    if (out) break;
                    const Int m = lookup(nu);
                    if (m != 0) numer += rs.inner_root(nu, g) * m;
                }
            }
            const WeightVector mr = add(mu, rho);
            const Rat denom = top_norm - rs.inner(mr, mr);
            if (denom <= 0) throw std::logic_error("Freudenthal denominator not positive");
            const Rat value = 2 * numer / denom;
            if (!is_integer(value)) throw std::logic_error("Freudenthal produced a non-integer");
            mult[off] = numerator(value);
        }
    }

    // Expand Weyl orbits of the dominant weights with nonzero multiplicity.
    WeightSystem ws;
    ws.highest = ls;
    ws.total_multiplicity = 0;
    std::map<RatVec, Int> expanded;
    for (const auto& [off, m] : mult) {
        if (m == 0) continue;
        for (const WeightVector& w : rs.weyl_orbit(weight_at(off)))
            expanded.emplace(w.coords, m);
    }
    for (const auto& [coords, m] : expanded) {
        WeightEntry entry;
        entry.weight = {Basis::simple_root, coords};
        entry.offset = offset_of(rs, lambda, entry.weight);
        entry.multiplicity = m;
        ws.total_multiplicity += m;
        ws.entries.push_back(std::move(entry));
    }
    return ws;
}

const WeightEntry* WeightSystem::find(const RestrictedRootSystem& rs,
                                      const WeightVector& w) const {
    const RatVec target = rs.to_simple(w).coords;
    for (const auto& e : entries)
        if (e.weight.coords == target) return &e;
    return nullptr;
}

Int weyl_dimension(const RestrictedRootSystem& rs, const WeightVector& lambda) {
    if (!rs.is_dominant(lambda))
        throw std::invalid_argument("weyl_dimension requires a dominant weight");
    const WeightVector rho = rs.half_sum();
    const WeightVector top = add(rs.to_simple(lambda), rho);
    Rat value = 1;
    for (const Root& g : rs.positive_roots()) {
        const Rat denom = rs.inner_root(rho, g);
        if (denom == 0) throw std::logic_error("half-sum orthogonal to a positive root");
        value *= rs.inner_root(top, g) / denom;
    }
    if (!is_integer(value) || value <= 0)
        throw std::invalid_argument("Weyl dimension formula gave a non-integral value " +
                                    rational_to_string(value) +
                                    "; the weight is not integral for this system");
    return numerator(value);
}

std::vector<WeightEntry> congruent_weights(const RestrictedRootSystem& rs,
                                           const WeightVector& lambda,
                                           const SimpleSubset& E,
                                           const WeightSystem& ws) {
    if (E.rank() != rs.rank())
        throw std::invalid_argument("subset rank does not match the system");
    if (rs.to_simple(lambda).coords != rs.to_simple(ws.highest).coords)
        throw std::invalid_argument("weight system was built for a different highest weight");
    std::vector<WeightEntry> out;
    for (const auto& e : ws.entries) {
        bool supported = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (e.offset[i] != 0 && !E.contains(i)) {
                supported = false;
                break;
            }
        if (supported) out.push_back(e);
    }
    return out;
}

}  // namespace satake
