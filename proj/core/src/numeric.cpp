#include "satake/numeric.hpp"

#include "satake/rational_linalg.hpp"
#include "satake/spherical.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace satake {

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// k-subsets of {0,…,n−1} in lexicographic order; the first is {0,…,k−1}.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct ThinSvd {
    Eigen::MatrixXd u;
    Eigen::MatrixXd v;
    Eigen::VectorXd sigma;
};

ThinSvd thin_svd(const Eigen::MatrixXd& a) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.matrixV(), svd.singularValues()};
}

// Count of kept singular values under the banded rank rule: σ ≤ τ is null,
// σ > 10τ is kept, anything between is an undecidable rank and an error.
int banded_rank(const Eigen::VectorXd& sigma, double rel_tol, const char* what) {
    const double smax = sigma.size() ? sigma(0) : 0.0;
    if (smax <= 0.0) return 0;
    const double tau = rel_tol * smax;
    int kept = 0;
    for (int i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > 10.0 * tau) {
            ++kept;
        } else if (sigma(i) > tau) {
            std::ostringstream os;
            os << what << ": singular value " << sigma(i) << " falls in the ambiguous band ("
               << tau << ", " << 10.0 * tau << "]; the rank decision is not trustworthy";
            throw std::runtime_error(os.str());
        }
    }
    return kept;
}

double fit_rate_tail(const std::vector<TraceSample>& samples, double floor_err) {
    if (samples.size() < 2) return 0.0;
    const double tmax = samples.back().t;
    std::vector<std::pair<double, double>> pts;
    for (const TraceSample& s : samples)
        if (s.t >= 0.5 * tmax && s.error > floor_err)
            pts.emplace_back(s.t, std::log(s.error));
    if (pts.size() < 2) return 0.0;
    double mt = 0, my = 0;
    for (const auto& [t, y] : pts) {
        mt += t;
        my += y;
    }
    mt /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double num = 0, den = 0;
    for (const auto& [t, y] : pts) {
        num += (t - mt) * (y - my);
        den += (t - mt) * (t - mt);
    }
    return den == 0 ? 0.0 : -num / den;
}

double to_d(const Int& x) { return x.convert_to<double>(); }

void check_diag_direction(const IntVec& h, int n, const char* who) {
    if (static_cast<int>(h.size()) != n) {
        std::ostringstream os;
        os << who << ": H has " << h.size() << " diagonal entries, the group is SL(" << n << ")";
        throw std::invalid_argument(os.str());
    }
    Int tr = 0;
    for (const Int& x : h) tr += x;
    if (tr != 0) {
        std::ostringstream os;
        os << who << ": H must be traceless, trace(H) = " << tr;
        throw std::invalid_argument(os.str());
    }
}

// Sign-diagonal matrices of determinant 1 (even number of −1 entries),
// identity excluded.  These realize M for the split group.
std::vector<Eigen::MatrixXd> sign_diagonals(int n) {
    if (n > 16)
        throw std::invalid_argument("sign-diagonal enumeration is capped at n = 16");
    std::vector<Eigen::MatrixXd> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        Eigen::MatrixXd d = Eigen::MatrixXd::Identity(n, n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) d(i, i) = -1.0;
        out.push_back(std::move(d));
    }
    return out;
}

Eigen::MatrixXd givens_rotation(int n, int a, int b, double theta) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    g(a, a) = std::cos(theta);
    g(b, b) = std::cos(theta);
    g(a, b) = -std::sin(theta);
    g(b, a) = std::sin(theta);
    return g;
}

// exp(s(E_ab + E_ba)): hyperbolic rotation in the (a,b) plane, det 1.
Eigen::MatrixXd symmetric_boost(int n, int a, int b, double s) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    g(a, a) = std::cosh(s);
    g(b, b) = std::cosh(s);
    g(a, b) = std::sinh(s);
    g(b, a) = std::sinh(s);
    return g;
}

// Partition of {0,…,n−1} into maximal runs glued by i ∈ S ⇒ i ~ i+1.
std::vector<std::vector<int>> runs_of(const SimpleSubset& s, int n) {
    std::vector<std::vector<int>> runs;
    std::vector<int> cur{0};
    for (int i = 1; i < n; ++i) {
        if (s.contains(i - 1)) {
            cur.push_back(i);
        } else {
            runs.push_back(cur);
            cur = {i};
        }
    }
    runs.push_back(cur);
    return runs;
}

std::vector<int> run_block_ids(const SimpleSubset& s, int n) {
    std::vector<int> id(n, 0);
    int block = 0;
    for (int i = 1; i < n; ++i) {
        if (!s.contains(i - 1)) ++block;
        id[i] = block;
    }
    return id;
}

double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

}  // namespace

double projective_distance(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    const double nv = v.norm(), nw = w.norm();
    if (nv == 0.0 || nw == 0.0)
        throw std::invalid_argument("projective distance is undefined for the zero vector");
    // Component of v orthogonal to w, so the cancellation-free sine of the
    // angle rather than √(1−cos²) evaluated literally.
    Eigen::VectorXd wh = w / nw;
    Eigen::VectorXd p = v - wh * wh.dot(v);
    return p.norm() / nv;
}

double gaussian_sample(std::mt19937_64& rng) {
    const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1p-53;  // (0,1]
    const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;       // [0,1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXd haar_special_orthogonal(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("haar_special_orthogonal needs n >= 1");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = gaussian_sample(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    if (q.determinant() < 0) q.col(n - 1) *= -1.0;
    return q;
}

std::vector<double> make_t_grid(double tmax, int count) {
    if (!(tmax > 0)) throw std::invalid_argument("the time grid needs tmax > 0");
    if (count < 2) throw std::invalid_argument("the time grid needs at least 2 points");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = tmax * i / (count - 1);
    return g;
}

IntVec standard_direction(int n) {
    if (n < 2) throw std::invalid_argument("standard_direction needs n >= 2");
    IntVec h(n);
    for (int i = 0; i < n; ++i) h[i] = n - 1 - 2 * i;
    return h;
}

IntVec diag_direction_from_gamma_values(const RatVec& gamma_values, int n) {
    if (static_cast<int>(gamma_values.size()) != n - 1)
        throw std::invalid_argument("diag_direction_from_gamma_values needs n-1 root values");
    // H_i − H_{i+1} = t_i and trace 0 pin H; then clear denominators.
    Rat weighted = 0;
    for (int j = 0; j < n - 1; ++j) weighted += Rat(j + 1) * gamma_values[j];
    RatVec h(n);
    h[n - 1] = -weighted / n;
    for (int k = n - 2; k >= 0; --k) h[k] = h[k + 1] + gamma_values[k];
    Int s = lcm_of_denominators(h);
    IntVec out(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        out[i] = boost::multiprecision::numerator(Rat(h[i] * s));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (Int& x : out) x /= g;
    return out;
}

NumericIrrep NumericIrrep::build(int n, const WeightVector& highest, const Tolerances& tol) {
    if (n < 2) throw std::invalid_argument("the matrix realization needs n >= 2");
    NumericIrrep rep;
    rep.n_ = n;
    rep.rs_ = RestrictedRootSystem::build(SystemType::A, n - 1, {{"all", 1}});
    const RestrictedRootSystem& rs = *rep.rs_;

    if (static_cast<int>(highest.coords.size()) != n - 1) {
        std::ostringstream os;
        os << "the highest weight has " << highest.coords.size() << " coordinates, rank is "
           << n - 1;
        throw std::invalid_argument(os.str());
    }
    const WeightVector fund = rs.to_fundamental(highest);
    std::vector<int> coeff(n - 1, 0);
    for (int i = 0; i < n - 1; ++i) {
        const Rat& c = fund.coords[i];
        if (!is_integer(c) || c < 0) {
            std::ostringstream os;
            os << "the highest weight must be dominant integral; fundamental coefficient "
               << i + 1 << " is " << rational_to_string(c);
            throw std::invalid_argument(os.str());
        }
        coeff[i] = boost::multiprecision::numerator(c).convert_to<int>();
    }
    rep.highest_ = fund;

    const Int dim_exact = weyl_dimension(rs, fund);
    if (dim_exact > 2000) {
        std::ostringstream os;
        os << "the representation has dimension " << dim_exact
           << ", above the realization cap 2000";
        throw std::invalid_argument(os.str());
    }

    // One Λᵏ factor per unit of the k-th fundamental coefficient.
    Int ambient_check = 1;
    for (int k = 1; k <= n - 1; ++k)
        for (int c = 0; c < coeff[k - 1]; ++c) {
            Factor f;
            f.k = k;
            f.dim = static_cast<int>(binomial(n, k));
            f.subsets = k_subsets(n, k);
            rep.factors_.push_back(std::move(f));
            ambient_check *= binomial(n, k);
        }
    if (ambient_check > 500000) {
        std::ostringstream os;
        os << "the ambient tensor space has dimension " << ambient_check
           << ", too large to realize";
        throw std::invalid_argument(os.str());
    }
    int ambient = 1;
    for (auto it = rep.factors_.rbegin(); it != rep.factors_.rend(); ++it) {
        it->stride = ambient;
        ambient *= it->dim;
    }
    rep.ambient_dim_ = ambient;

    // Exact ambient weight bookkeeping: occupation c of a pure tensor index
    // means the weight Σ cᵢ εᵢ, and occupation classes are coordinate blocks.
    std::vector<IntVec> ambient_occ(ambient, IntVec(n, 0));
    for (int idx = 0; idx < ambient; ++idx) {
        IntVec& occ = ambient_occ[idx];
        for (const Factor& f : rep.factors_)
            for (int i : f.subsets[(idx / f.stride) % f.dim]) occ[i] += 1;
    }
    std::map<IntVec, std::vector<int>> blocks;
    for (int idx = 0; idx < ambient; ++idx) blocks[ambient_occ[idx]].push_back(idx);

    IntVec top_occ(n, 0);
    for (const Factor& f : rep.factors_)
        for (int i = 0; i < f.k; ++i) top_occ[i] += 1;
    const auto offset_of = [&](const IntVec& occ) {
        IntVec off(n - 1);
        Int run = 0;
        for (int j = 0; j < n - 1; ++j) {
            run += top_occ[j] - occ[j];
            if (run < 0) throw std::logic_error("negative root offset in weight bookkeeping");
            off[j] = run;
        }
        return off;
    };

    std::vector<Eigen::VectorXd> cols;
    cols.push_back(Eigen::VectorXd::Unit(ambient, 0));
    rep.occupations_.push_back(top_occ);
    rep.offsets_.push_back(offset_of(top_occ));

    // Breadth-first closure under the simple lowering operators E_{i+1,i}.
    // Candidates landing in one occupation class span the whole weight space
    // there, so a single SVD per class yields an orthonormal extension.
    std::map<IntVec, std::vector<int>> level{{top_occ, {0}}};
    while (!level.empty()) {
        std::map<IntVec, std::vector<Eigen::VectorXd>> cand;
        for (const auto& [occ, idxs] : level) {
            for (int i = 0; i + 1 < n; ++i) {
                if (occ[i] == 0) continue;
                IntVec tgt = occ;
                tgt[i] -= 1;
                tgt[i + 1] += 1;
                Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
                x(i + 1, i) = 1.0;
                for (int c : idxs) {
                    Eigen::VectorXd w;
                    {
                        Eigen::VectorXd out = Eigen::VectorXd::Zero(ambient);
                        for (const Factor& f : rep.factors_)
                            rep.apply_factor_lie(x, cols[c], out, f);
                        w = std::move(out);
                    }
                    if (w.norm() > 0) cand[tgt].push_back(std::move(w));
                }
            }
        }
        level.clear();
        for (const auto& [occ, vecs] : cand) {
            const auto itb = blocks.find(occ);
            if (itb == blocks.end())
                throw std::logic_error("a lowered vector left the ambient weight grid");
            const std::vector<int>& block = itb->second;
            Eigen::MatrixXd a(block.size(), vecs.size());
            for (std::size_t r = 0; r < block.size(); ++r)
                for (std::size_t c = 0; c < vecs.size(); ++c) a(r, c) = vecs[c](block[r]);
            const ThinSvd svd = thin_svd(a);
            const int kept = banded_rank(svd.sigma, tol.nullspace, "weight space extraction");
            const IntVec off = offset_of(occ);
            for (int j = 0; j < kept; ++j) {
                Eigen::VectorXd u = svd.u.col(j);
                int arg = 0;
                for (int r = 1; r < u.size(); ++r)
                    if (std::abs(u(r)) > std::abs(u(arg))) arg = r;
                if (u(arg) < 0) u = -u;
                Eigen::VectorXd full = Eigen::VectorXd::Zero(ambient);
                for (std::size_t r = 0; r < block.size(); ++r) full(block[r]) = u(r);
                level[occ].push_back(static_cast<int>(cols.size()));
                cols.push_back(std::move(full));
                rep.occupations_.push_back(occ);
                rep.offsets_.push_back(off);
            }
        }
    }

    if (Int(cols.size()) != dim_exact) {
        std::ostringstream os;
        os << "the lowering closure produced dimension " << cols.size()
           << " but the Weyl dimension is " << dim_exact;
        throw std::runtime_error(os.str());
    }
    rep.dim_ = static_cast<int>(cols.size());
    rep.basis_.resize(ambient, rep.dim_);
    for (int c = 0; c < rep.dim_; ++c) rep.basis_.col(c) = cols[c];
    return rep;
}

Int NumericIrrep::weight_on(int col, const IntVec& h_diag) const {
    check_diag_direction(h_diag, n_, "weight_on");
    const IntVec& occ = occupations_.at(col);
    Int v = 0;
    for (int i = 0; i < n_; ++i) v += occ[i] * h_diag[i];
    return v;
}

WeightVector NumericIrrep::weight_of(int col) const {
    const WeightVector top = rs_->to_simple(highest_);
    WeightVector w{Basis::simple_root, top.coords};
    const IntVec& off = offsets_.at(col);
    for (int i = 0; i < n_ - 1; ++i) w.coords[i] -= Rat(off[i]);
    return w;
}

Eigen::VectorXd NumericIrrep::highest_vector() const {
    return Eigen::VectorXd::Unit(dim_, 0);
}

void NumericIrrep::apply_factor_lie(const Eigen::MatrixXd& x, const Eigen::VectorXd& in,
                                    Eigen::VectorXd& out, const Factor& f) const {
    const int d = f.dim, st = f.stride, block = d * st;
    std::map<std::vector<int>, int> pos;
    for (int s = 0; s < d; ++s) pos.emplace(f.subsets[s], s);
    for (int s = 0; s < d; ++s) {
        const std::vector<int>& sub = f.subsets[s];
        std::vector<std::pair<int, double>> moves;
        double diag = 0;
        for (int i : sub) diag += x(i, i);
        if (diag != 0) moves.emplace_back(s, diag);
        for (int i : sub) {
            for (int j = 0; j < n_; ++j) {
                if (x(j, i) == 0 || j == i) continue;
                if (std::find(sub.begin(), sub.end(), j) != sub.end()) continue;
                std::vector<int> tgt;
                tgt.reserve(sub.size());
                for (int v : sub)
                    if (v != i) tgt.push_back(v);
                tgt.insert(std::lower_bound(tgt.begin(), tgt.end(), j), j);
                // Reordering e_j into place passes the elements strictly
                // between i and j, each contributing a sign.
                int between = 0;
                for (int v : sub)
                    if (v != i && v > std::min(i, j) && v < std::max(i, j)) ++between;
                const double sign = (between % 2 == 0) ? 1.0 : -1.0;
                moves.emplace_back(pos.at(tgt), sign * x(j, i));
            }
        }
        if (moves.empty()) continue;
        for (int base = 0; base < ambient_dim_; base += block)
            for (const auto& [t, cf] : moves)
                out.segment(base + t * st, st) += cf * in.segment(base + s * st, st);
    }
}

Eigen::VectorXd NumericIrrep::apply_lie_ambient(const Eigen::MatrixXd& x,
                                                const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(ambient_dim_);
    for (const Factor& f : factors_) apply_factor_lie(x, v, out, f);
    return out;
}

Eigen::VectorXd NumericIrrep::apply_group_ambient(const Eigen::MatrixXd& g,
                                                  const Eigen::VectorXd& v) const {
    Eigen::VectorXd cur = v;
    for (const Factor& f : factors_) {
        const int d = f.dim, st = f.stride, block = d * st;
        Eigen::MatrixXd comp(d, d);
        if (f.k == 1) {
            comp = g;
        } else {
            Eigen::MatrixXd sub(f.k, f.k);
            for (int t = 0; t < d; ++t)
                for (int s = 0; s < d; ++s) {
                    for (int r = 0; r < f.k; ++r)
                        for (int c = 0; c < f.k; ++c) sub(r, c) = g(f.subsets[t][r], f.subsets[s][c]);
                    comp(t, s) = sub.determinant();
                }
        }
        Eigen::VectorXd next = Eigen::VectorXd::Zero(ambient_dim_);
        for (int base = 0; base < ambient_dim_; base += block)
            for (int t = 0; t < d; ++t)
                for (int s = 0; s < d; ++s) {
                    const double m = comp(t, s);
                    if (m == 0) continue;
                    next.segment(base + t * st, st) += m * cur.segment(base + s * st, st);
                }
        cur = std::move(next);
    }
    return cur;
}

Eigen::MatrixXd NumericIrrep::lie_action(const Eigen::MatrixXd& x) const {
    if (x.rows() != n_ || x.cols() != n_)
        throw std::invalid_argument("lie_action needs an n-by-n matrix");
    const double tr = x.trace();
    if (std::abs(tr) > 1e-12 * (1.0 + x.cwiseAbs().maxCoeff())) {
        std::ostringstream os;
        os << "dρ is defined on sl(n) only; trace(X) = " << tr;
        throw std::invalid_argument(os.str());
    }
    Eigen::MatrixXd out(dim_, dim_);
    for (int c = 0; c < dim_; ++c)
        out.col(c) = basis_.transpose() * apply_lie_ambient(x, basis_.col(c));
    return out;
}

Eigen::MatrixXd NumericIrrep::group_action(const Eigen::MatrixXd& g) const {
    if (g.rows() != n_ || g.cols() != n_)
        throw std::invalid_argument("group_action needs an n-by-n matrix");
    const double det = g.determinant();
    if (std::abs(det - 1.0) > 1e-12 * (1.0 + std::abs(det))) {
        std::ostringstream os;
        os << "ρ is defined on SL(n) only; det(g) = " << det;
        throw std::invalid_argument(os.str());
    }
    Eigen::MatrixXd out(dim_, dim_);
    for (int c = 0; c < dim_; ++c)
        out.col(c) = basis_.transpose() * apply_group_ambient(g, basis_.col(c));
    return out;
}

Eigen::VectorXd NumericIrrep::act_lie(const Eigen::MatrixXd& x, const Eigen::VectorXd& v) const {
    if (x.rows() != n_ || x.cols() != n_)
        throw std::invalid_argument("act_lie needs an n-by-n matrix");
    if (v.size() != dim_) throw std::invalid_argument("act_lie vector has the wrong dimension");
    return basis_.transpose() * apply_lie_ambient(x, basis_ * v);
}

Eigen::VectorXd NumericIrrep::act_group(const Eigen::MatrixXd& g, const Eigen::VectorXd& v) const {
    if (g.rows() != n_ || g.cols() != n_)
        throw std::invalid_argument("act_group needs an n-by-n matrix");
    if (v.size() != dim_) throw std::invalid_argument("act_group vector has the wrong dimension");
    const double det = g.determinant();
    if (std::abs(det - 1.0) > 1e-12 * (1.0 + std::abs(det))) {
        std::ostringstream os;
        os << "ρ is defined on SL(n) only; det(g) = " << det;
        throw std::invalid_argument(os.str());
    }
    return basis_.transpose() * apply_group_ambient(g, basis_ * v);
}

std::optional<Eigen::VectorXd> NumericIrrep::k_fixed_vector(const Tolerances& tol) const {
    if (k_fixed_computed_) return k_fixed_cache_;
    k_fixed_computed_ = true;
    const int pairs = n_ * (n_ - 1) / 2;
    Eigen::MatrixXd stacked(pairs * dim_, dim_);
    int row = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
            Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n_, n_);
            x(a, b) = 1.0;
            x(b, a) = -1.0;
            stacked.middleRows(row * dim_, dim_) = lie_action(x);
            ++row;
        }
    const ThinSvd svd = thin_svd(stacked);
    const double smax = svd.sigma(0);
    if (smax <= 0.0) {
        // so(n) acts by zero; only the trivial representation does that.
        if (dim_ == 1) {
            k_fixed_cache_ = Eigen::VectorXd::Unit(1, 0);
            return k_fixed_cache_;
        }
        throw std::runtime_error("the so(n) action vanished on a nontrivial representation");
    }
    const int kept = banded_rank(svd.sigma, tol.nullspace, "K-fixed nullspace");
    const int nullity = dim_ - kept;
    if (nullity == 0) {
        k_fixed_cache_ = std::nullopt;
        return k_fixed_cache_;
    }
    if (nullity > 1) {
        std::ostringstream os;
        os << "the space of K-fixed vectors has dimension " << nullity
           << "; multiplicity one fails, the realization is broken";
        throw std::runtime_error(os.str());
    }
    Eigen::VectorXd e = svd.v.col(dim_ - 1);
    if (e(0) != 0.0) {
        if (e(0) < 0) e = -e;
    } else {
        int arg = 0;
        for (int r = 1; r < e.size(); ++r)
            if (std::abs(e(r)) > std::abs(e(arg))) arg = r;
        if (e(arg) < 0) e = -e;
    }
    k_fixed_cache_ = e;
    return k_fixed_cache_;
}

bool NumericIrrep::m_fixed_check(const Eigen::VectorXd& v, const Tolerances& tol) const {
    if (v.size() != dim_)
        throw std::invalid_argument("m_fixed_check vector has the wrong dimension");
    const double scale = std::max(1.0, v.norm());
    for (const Eigen::MatrixXd& d : sign_diagonals(n_)) {
        const Eigen::VectorXd w = act_group(d, v);
        if ((w - v).norm() > tol.algebraic * scale) return false;
    }
    return true;
}

std::vector<int> congruent_columns(const NumericIrrep& rep, const SimpleSubset& e) {
    if (e.rank() != rep.n() - 1)
        throw std::invalid_argument("the subset rank does not match the root system");
    std::vector<int> out;
    for (int c = 0; c < rep.dim(); ++c) {
        const IntVec& off = rep.offset(c);
        bool ok = true;
        for (int i = 0; i < rep.n() - 1 && ok; ++i)
            if (off[i] != 0 && !e.contains(i)) ok = false;
        if (ok) out.push_back(c);
    }
    return out;
}

Eigen::VectorXd boundary_vector(const NumericIrrep& rep, const SimpleSubset& e,
                                const Tolerances& tol) {
    const auto fixed = rep.k_fixed_vector(tol);
    if (!fixed)
        throw std::invalid_argument(
            "the boundary point ι_E(õ) needs a K-fixed vector; the highest weight is not "
            "spherical");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(rep.dim());
    for (int c : congruent_columns(rep, e)) w(c) = (*fixed)(c);
    const double nw = w.norm();
    if (nw <= 0)
        throw std::runtime_error("the K-fixed vector has no component in V^E");
    return w / nw;
}

FatouResult fatou_limit(const NumericIrrep& rep, const IntVec& h_diag,
                        const std::vector<double>& t_grid, const Tolerances& tol) {
    check_diag_direction(h_diag, rep.n(), "fatou_limit");
    for (int i = 0; i + 1 < rep.n(); ++i)
        if (h_diag[i] <= h_diag[i + 1]) {
            std::ostringstream os;
            os << "fatou_limit needs a strictly dominant direction: H_" << i + 1 << " - H_"
               << i + 2 << " = " << (h_diag[i] - h_diag[i + 1]) << " is not positive";
            throw std::invalid_argument(os.str());
        }
    if (t_grid.empty()) throw std::invalid_argument("fatou_limit needs a nonempty time grid");
    const auto fixed = rep.k_fixed_vector(tol);
    if (!fixed)
        throw std::invalid_argument(
            "the Fatou limit needs a K-fixed vector; the highest weight is not spherical");
    const Eigen::VectorXd& e = *fixed;

    FatouResult res;
    res.highest_component = e(0);
    if (res.highest_component <= 1e-13)
        throw std::runtime_error(
            "the highest-weight component of the K-fixed vector vanished; it must be nonzero");

    std::vector<double> gap(rep.dim());
    const Int top = rep.weight_on(0, h_diag);
    for (int c = 0; c < rep.dim(); ++c) gap[c] = to_d(top - rep.weight_on(c, h_diag));

    Eigen::VectorXd limit = Eigen::VectorXd::Zero(rep.dim());
    limit(0) = e(0);
    const double nl = limit.norm();

    for (double t : t_grid) {
        Eigen::VectorXd v(rep.dim());
        for (int c = 0; c < rep.dim(); ++c) v(c) = e(c) * std::exp(-t * gap[c]);
        res.trace.samples.push_back({t, (v - limit).norm() / nl});
    }
    res.trace.limit = limit;
    res.trace.fitted_rate = fit_rate_tail(res.trace.samples, 1e-250);

    double min_gap = 0;
    for (int c = 1; c < rep.dim(); ++c)
        if (std::abs(e(c)) > 1e-13 && (min_gap == 0 || gap[c] < min_gap)) min_gap = gap[c];
    res.weight_gap = min_gap;
    res.limit_m_fixed = rep.m_fixed_check(limit, tol);
    return res;
}

HaarAverage haar_average(const NumericIrrep& rep, long sample_count, std::uint64_t seed,
                         const Tolerances& tol) {
    if (sample_count < 2) throw std::invalid_argument("haar_average needs at least 2 samples");
    std::mt19937_64 rng(seed);
    const Eigen::VectorXd vplus = rep.highest_vector();
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(rep.dim());
    double sumsq = 0;
    for (long i = 0; i < sample_count; ++i) {
        const Eigen::MatrixXd k = haar_special_orthogonal(rep.n(), rng);
        const Eigen::VectorXd x = rep.act_group(k, vplus);
        sum += x;
        sumsq += x.squaredNorm();
    }
    HaarAverage res;
    res.average = sum / static_cast<double>(sample_count);
    res.norm = res.average.norm();
    const double nn = static_cast<double>(sample_count);
    const double spread = std::max(0.0, (sumsq - nn * res.average.squaredNorm()) / (nn - 1.0));
    res.std_error = std::sqrt(spread / nn);

    const auto fixed = rep.k_fixed_vector(tol);
    res.spherical = fixed.has_value();
    if (fixed) {
        const double dot = res.average.dot(*fixed);
        res.c_ratio = dot;
        res.cosine = res.norm > 0 ? std::abs(dot) / res.norm : 0.0;
        if (res.norm <= 3.0 * res.std_error) {
            std::ostringstream os;
            os << "the Poisson average has norm " << res.norm << " below the noise floor "
               << 3.0 * res.std_error
               << " although the weight is spherical; sampling and algebra disagree";
            throw std::runtime_error(os.str());
        }
    }
    return res;
}

BoundaryLimitResult boundary_limit(const NumericIrrep& rep, const SimpleSubset& e_set,
                                   const IntVec& h_diag, const Eigen::MatrixXd& g,
                                   const std::vector<double>& t_grid, const Tolerances& tol) {
    const int n = rep.n();
    if (e_set.rank() != n - 1)
        throw std::invalid_argument("the subset rank does not match the root system");
    if (e_set == SimpleSubset::full_set(n - 1))
        throw std::invalid_argument("E must be a proper subset; the full set leaves H = 0 only");
    check_diag_direction(h_diag, n, "boundary_limit");
    for (int i = 0; i + 1 < n; ++i) {
        const Int gv = h_diag[i] - h_diag[i + 1];
        if (e_set.contains(i) && gv != 0) {
            std::ostringstream os;
            os << "H must lie in the face of E: γ_" << i + 1 << "(H) = " << gv
               << " must vanish for a root of E";
            throw std::invalid_argument(os.str());
        }
        if (!e_set.contains(i) && gv <= 0) {
            std::ostringstream os;
            os << "H sits on a face boundary: γ_" << i + 1 << "(H) = " << gv
               << " must be positive outside E";
            throw std::invalid_argument(os.str());
        }
    }
    if (t_grid.empty()) throw std::invalid_argument("boundary_limit needs a nonempty time grid");
    const auto fixed = rep.k_fixed_vector(tol);
    if (!fixed)
        throw std::invalid_argument(
            "the boundary limit needs a K-fixed vector; the highest weight is not spherical");

    BoundaryLimitResult res;
    const Eigen::VectorXd w = rep.act_group(g, *fixed);

    std::vector<bool> congruent(rep.dim(), false);
    for (int c : congruent_columns(rep, e_set)) congruent[c] = true;

    Eigen::VectorXd proj = Eigen::VectorXd::Zero(rep.dim());
    for (int c = 0; c < rep.dim(); ++c)
        if (congruent[c]) proj(c) = w(c);
    if (proj.norm() <= 1e-12 * w.norm())
        throw std::runtime_error(
            "ρ(g)e has no component in V^E; the limit leaves this boundary component");
    res.predicted = proj / proj.norm();

    // g ∈ M(E) means block-diagonal over the E-runs with each block of
    // determinant ±1; then the flow prediction is exact, not just limiting.
    {
        const std::vector<std::vector<int>> runs = runs_of(e_set, n);
        const double gmax = std::max(1.0, g.cwiseAbs().maxCoeff());
        bool in_me = true;
        std::vector<int> block_of(n);
        for (std::size_t b = 0; b < runs.size(); ++b)
            for (int i : runs[b]) block_of[i] = static_cast<int>(b);
        for (int i = 0; i < n && in_me; ++i)
            for (int j = 0; j < n && in_me; ++j)
                if (block_of[i] != block_of[j] && std::abs(g(i, j)) > 1e-12 * gmax) in_me = false;
        for (const std::vector<int>& run : runs) {
            if (!in_me) break;
            Eigen::MatrixXd sub(run.size(), run.size());
            for (std::size_t r = 0; r < run.size(); ++r)
                for (std::size_t c = 0; c < run.size(); ++c) sub(r, c) = g(run[r], run[c]);
            if (std::abs(std::abs(sub.determinant()) - 1.0) > 1e-10) in_me = false;
        }
        res.g_in_ME = in_me;
    }

    std::vector<double> drop(rep.dim());
    const Int top = rep.weight_on(0, h_diag);
    for (int c = 0; c < rep.dim(); ++c) drop[c] = to_d(top - rep.weight_on(c, h_diag));

    for (double t : t_grid) {
        Eigen::VectorXd v(rep.dim());
        for (int c = 0; c < rep.dim(); ++c) v(c) = w(c) * std::exp(-t * drop[c]);
        res.trace.samples.push_back({t, projective_distance(v, res.predicted)});
    }
    res.trace.limit = res.predicted;
    res.trace.fitted_rate = fit_rate_tail(res.trace.samples, 1e-13);

    double min_gap = 0;
    for (int c = 0; c < rep.dim(); ++c)
        if (!congruent[c] && std::abs(w(c)) > 1e-13 * w.norm() &&
            (min_gap == 0 || drop[c] < min_gap))
            min_gap = drop[c];
    res.weight_gap = min_gap;
    return res;
}

Eigen::VectorXd affine_chart(const NumericIrrep& rep, const Eigen::VectorXd& v,
                             const Tolerances& tol) {
    const auto fixed = rep.k_fixed_vector(tol);
    if (!fixed)
        throw std::invalid_argument(
            "the affine chart is centered at the K-fixed vector, which does not exist here");
    if (v.size() != rep.dim())
        throw std::invalid_argument("affine_chart vector has the wrong dimension");
    const double c = fixed->dot(v);
    if (std::abs(c) <= 1e-12 * v.norm())
        throw std::invalid_argument(
            "the point has ⟨v, e⟩ = 0 and lies outside the affine chart around ẽ");
    return v / c - *fixed;
}

BoundednessProbe boundedness_probe(const NumericIrrep& rep, long sample_count,
                                   std::uint64_t seed, const Tolerances& tol) {
    if (sample_count < 10)
        throw std::invalid_argument("boundedness_probe needs at least 10 samples");
    const auto fixed = rep.k_fixed_vector(tol);
    if (!fixed)
        throw std::invalid_argument(
            "the boundedness probe needs a K-fixed vector; the highest weight is not spherical");
    const Eigen::VectorXd& e = *fixed;
    const int n = rep.n();

    std::mt19937_64 rng(seed);
    BoundednessProbe res;
    res.samples = sample_count;
    const long first_tenth = (sample_count + 9) / 10;

    for (long s = 0; s < sample_count; ++s) {
        // K-bi-invariance of the chart norm reduces g = k₁ exp(H) k₂ to H.
        Eigen::VectorXd h(n);
        for (int i = 0; i < n; ++i) h(i) = gaussian_sample(rng);
        h.array() -= h.mean();
        const double radius = 50.0 * next_uniform(rng);
        const double hn = h.norm();
        if (hn > 1e-12) h *= radius / hn;
        else h.setZero();

        double top = -std::numeric_limits<double>::infinity();
        std::vector<double> nu(rep.dim());
        for (int c = 0; c < rep.dim(); ++c) {
            const IntVec& occ = rep.occupation(c);
            double v = 0;
            for (int i = 0; i < n; ++i) v += to_d(occ[i]) * h(i);
            nu[c] = v;
            if (e(c) != 0.0 && v > top) top = v;
        }
        double wsq = 0, wd = 0;
        for (int c = 0; c < rep.dim(); ++c) {
            if (e(c) == 0.0) continue;
            const double wc = e(c) * std::exp(nu[c] - top);
            wsq += wc * wc;
            wd += wc * e(c);
        }
        const double chart_sq = wsq / (wd * wd) - 1.0;
        const double chart = std::sqrt(std::max(0.0, chart_sq));
        if (!std::isfinite(chart))
            throw std::runtime_error("the chart norm overflowed; the probe lost its invariant");
        res.max_norm = std::max(res.max_norm, chart);
        if (s + 1 == first_tenth) res.max_norm_first_tenth = res.max_norm;
    }
    return res;
}

DeformationResult stabilizer_deformation(const NumericIrrep& rep, const SimpleSubset& e_set,
                                         const IntVec& h_diag, const Eigen::MatrixXd& m,
                                         const std::vector<RootCoefficient>& coeffs,
                                         const std::vector<double>& t_grid,
                                         const Tolerances& tol) {
    const int n = rep.n();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("m must be an n-by-n sign diagonal");
    double det_sign = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::abs(m(i, j)) > 1e-12)
                throw std::invalid_argument("m must be diagonal; it has an off-diagonal entry");
        }
        if (std::abs(std::abs(m(i, i)) - 1.0) > 1e-12)
            throw std::invalid_argument("m must have diagonal entries ±1");
        det_sign *= m(i, i) > 0 ? 1.0 : -1.0;
    }
    if (det_sign < 0)
        throw std::invalid_argument("m must have determinant 1 (an even number of −1 entries)");

    const RestrictedRootSystem& rs = rep.system();
    const SimpleSubset e0 = compute_E0(rs, rep.highest());
    if (!is_E0_connected(rs, e_set, e0)) {
        std::ostringstream os;
        os << "E = " << e_set.to_string()
           << " has a connected component inside E0; the boundary component is degenerate";
        throw std::invalid_argument(os.str());
    }
    const SimpleSubset e_prime = saturate(rs, e_set, e0);
    check_diag_direction(h_diag, n, "stabilizer_deformation");
    for (int i = 0; i + 1 < n; ++i) {
        const Int gv = h_diag[i] - h_diag[i + 1];
        if (e_prime.contains(i) && gv != 0) {
            std::ostringstream os;
            os << "H must lie in the face of E' = " << e_prime.to_string() << ": γ_" << i + 1
               << "(H) = " << gv << " must vanish";
            throw std::invalid_argument(os.str());
        }
        if (!e_prime.contains(i) && gv <= 0) {
            std::ostringstream os;
            os << "H must lie strictly inside the face of E' = " << e_prime.to_string() << ": γ_"
               << i + 1 << "(H) = " << gv << " must be positive";
            throw std::invalid_argument(os.str());
        }
    }
    if (t_grid.empty())
        throw std::invalid_argument("stabilizer_deformation needs a nonempty time grid");

    Eigen::MatrixXd a_inf = Eigen::MatrixXd::Zero(n, n);
    double min_rate = 0;
    for (const RootCoefficient& rc : coeffs) {
        if (!(0 <= rc.a && rc.a < rc.b && rc.b < n)) {
            std::ostringstream os;
            os << "the root pair (" << rc.a + 1 << "," << rc.b + 1
               << ") is not a positive root ε_a − ε_b with a < b <= " << n;
            throw std::invalid_argument(os.str());
        }
        const Int gv = h_diag[rc.a] - h_diag[rc.b];
        if (gv <= 0) {
            std::ostringstream os;
            os << "the deformation needs γ(H) > 0, but H_" << rc.a + 1 << " - H_" << rc.b + 1
               << " = " << gv << " for the root ε_" << rc.a + 1 << " - ε_" << rc.b + 1;
            throw std::invalid_argument(os.str());
        }
        if (rc.c != 0) {
            a_inf(rc.a, rc.b) += rc.c;
            const double r = 2.0 * to_d(gv);
            if (min_rate == 0 || r < min_rate) min_rate = r;
        }
    }

    DeformationResult res;
    res.expected_rate = min_rate;
    res.limit_group = m * a_inf.exp();

    const Eigen::VectorXd point = boundary_vector(rep, e_set, tol);
    res.point_distance = projective_distance(rep.act_group(res.limit_group, point), point);
    res.fixes_point = res.point_distance <= tol.algebraic;

    const double lnorm = std::max(res.limit_group.norm(), 1e-300);
    for (double t : t_grid) {
        // Conjugating m·exp(Σ e^{−tγ(H)}(X^γ + θX^γ)) by exp(tH) gives
        // m·exp(Σ c(E_ab − e^{−2tγ(H)}E_ba)) exactly; only the transpose
        // part still decays.
        Eigen::MatrixXd a_t = a_inf;
        for (const RootCoefficient& rc : coeffs) {
            if (rc.c == 0) continue;
            const double gv = to_d(Int(h_diag[rc.a] - h_diag[rc.b]));
            a_t(rc.b, rc.a) -= rc.c * std::exp(-2.0 * t * gv);
        }
        const Eigen::MatrixXd k_t = m * a_t.exp();
        res.trace.samples.push_back({t, (k_t - res.limit_group).norm() / lnorm});
    }
    res.trace.limit = Eigen::Map<const Eigen::VectorXd>(res.limit_group.data(), n * n);
    res.trace.fitted_rate = fit_rate_tail(res.trace.samples, 1e-13);
    return res;
}

StabilizerCheck verify_boundary_stabilizer(const NumericIrrep& rep, const SimpleSubset& e_set,
                                           const Tolerances& tol) {
    const int n = rep.n();
    const RestrictedRootSystem& rs = rep.system();
    const SimpleSubset e0 = compute_E0(rs, rep.highest());
    if (!is_E0_connected(rs, e_set, e0)) {
        std::ostringstream os;
        os << "E = " << e_set.to_string()
           << " has a connected component inside E0; the boundary component is degenerate";
        throw std::invalid_argument(os.str());
    }
    StabilizerCheck res;
    res.E_prime = saturate(rs, e_set, e0);
    const SimpleSubset e_dprime = res.E_prime.intersect(e_set.complement());

    const Eigen::VectorXd point = boundary_vector(rep, e_set, tol);
    std::vector<bool> congruent(rep.dim(), false);
    for (int c : congruent_columns(rep, e_set)) congruent[c] = true;

    std::vector<Eigen::MatrixXd> point_gens;
    // M: every determinant-1 sign diagonal.
    for (Eigen::MatrixXd& d : sign_diagonals(n)) point_gens.push_back(std::move(d));
    // M(E′)_K: rotations inside each E′-run (E-runs fix the point because e is
    // K-fixed and the run preserves V^E; E″-runs act trivially on V^E).
    const std::vector<int> block_id = run_block_ids(res.E_prime, n);
    for (const std::vector<int>& run : runs_of(res.E_prime, n))
        for (std::size_t a = 0; a < run.size(); ++a)
            for (std::size_t b = a + 1; b < run.size(); ++b)
                point_gens.push_back(givens_rotation(n, run[a], run[b], 0.7));
    // A(E′): exp of diagonals with γ(H) = 0 on E′; they scale V^E uniformly.
    {
        const FaceChamber fc = face_chamber(rs, res.E_prime);
        std::vector<RatVec> directions;
        if (!fc.empty_face)
            directions.push_back(mat_vec(rs.gram(), fc.interior_point.coords));
        for (const WeightVector& v : fc.face_basis)
            directions.push_back(mat_vec(rs.gram(), v.coords));
        for (const RatVec& gv : directions) {
            const IntVec d = diag_direction_from_gamma_values(gv, n);
            double mx = 1.0;
            for (const Int& x : d) mx = std::max(mx, std::abs(to_d(x)));
            Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
            for (int i = 0; i < n; ++i) a(i, i) = std::exp(0.3 * to_d(d[i]) / mx);
            point_gens.push_back(std::move(a));
        }
    }
    // N(E′): elementary uppers across distinct E′-runs; they kill V^E.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (block_id[a] != block_id[b]) {
                Eigen::MatrixXd u = Eigen::MatrixXd::Identity(n, n);
                u(a, b) = 0.8;
                point_gens.push_back(std::move(u));
            }
    // Absorbed E″ blocks: noncompact directions too, all trivial on V^E.
    for (const std::vector<int>& run : runs_of(e_dprime, n)) {
        if (run.size() < 2) continue;
        for (std::size_t a = 0; a < run.size(); ++a)
            for (std::size_t b = a + 1; b < run.size(); ++b)
                point_gens.push_back(symmetric_boost(n, run[a], run[b], 0.5));
    }
    for (int i : e_dprime.indices()) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
        a(i, i) = std::exp(0.4);
        a(i + 1, i + 1) = std::exp(-0.4);
        point_gens.push_back(std::move(a));
    }

    for (const Eigen::MatrixXd& g : point_gens) {
        const double d = projective_distance(rep.act_group(g, point), point);
        res.max_point_distance = std::max(res.max_point_distance, d);
    }
    res.point_generators = static_cast<int>(point_gens.size());
    res.point_fixed = res.max_point_distance <= tol.algebraic;

    // Noncompact E-block directions preserve V^E while moving the point.
    std::vector<Eigen::MatrixXd> set_gens;
    for (const std::vector<int>& run : runs_of(e_set, n)) {
        if (run.size() < 2) continue;
        for (std::size_t a = 0; a < run.size(); ++a)
            for (std::size_t b = a + 1; b < run.size(); ++b)
                set_gens.push_back(symmetric_boost(n, run[a], run[b], 0.5));
    }
    for (int i : e_set.indices()) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
        a(i, i) = std::exp(0.4);
        a(i + 1, i + 1) = std::exp(-0.4);
        set_gens.push_back(std::move(a));
    }
    for (const Eigen::MatrixXd& g : set_gens) {
        const Eigen::VectorXd w = rep.act_group(g, point);
        double leak_sq = 0;
        for (int c = 0; c < rep.dim(); ++c)
            if (!congruent[c]) leak_sq += w(c) * w(c);
        res.max_set_leak = std::max(res.max_set_leak, std::sqrt(leak_sq) / w.norm());
    }
    res.set_generators = static_cast<int>(set_gens.size());
    res.set_preserved = res.max_set_leak <= tol.algebraic;
    return res;
}

Eigen::MatrixXd PsdOracle::map_point(const Eigen::MatrixXd& g) const {
    if (g.rows() != n || g.cols() != n)
        throw std::invalid_argument("the oracle works with n-by-n matrices");
    Eigen::MatrixXd s = g * g.transpose();
    const double ns = s.norm();
    if (ns <= 0) throw std::invalid_argument("the oracle needs a nonzero matrix");
    return s / ns;
}

Eigen::MatrixXd PsdOracle::boundary_target(int rank) const {
    if (rank < 1 || rank > n)
        throw std::invalid_argument("the stratum rank must lie between 1 and n");
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < rank; ++i) s(i, i) = 1.0;
    return s / std::sqrt(static_cast<double>(rank));
}

PsdOracle psd_model_oracle(int n) {
    if (n < 2) throw std::invalid_argument("the projective PSD model needs n >= 2");
    PsdOracle o;
    o.n = n;
    for (int k = n; k >= 1; --k) o.stratum_dims.push_back(k * (2 * n - k + 1) / 2 - 1);
    return o;
}

Eigen::VectorXd sym_to_irrep(const NumericIrrep& rep, const Eigen::MatrixXd& s) {
    const int n = rep.n();
    const WeightVector fund = rep.system().to_fundamental(rep.highest());
    bool is_sym_square = fund.coords.size() >= 1 && fund.coords[0] == 2;
    for (std::size_t i = 1; i < fund.coords.size() && is_sym_square; ++i)
        if (fund.coords[i] != 0) is_sym_square = false;
    if (!is_sym_square)
        throw std::invalid_argument(
            "sym_to_irrep is defined for the symmetric-square weight 2ω_1 only");
    if (s.rows() != n || s.cols() != n)
        throw std::invalid_argument("sym_to_irrep needs an n-by-n symmetric matrix");
    if ((s - s.transpose()).norm() > 1e-12 * std::max(1.0, s.norm()))
        throw std::invalid_argument("sym_to_irrep needs a symmetric matrix");
    Eigen::VectorXd amb(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) amb(i * n + j) = s(i, j);
    const Eigen::VectorXd w = rep.basis().transpose() * amb;
    if (std::abs(w.norm() - amb.norm()) > 1e-10 * std::max(1.0, amb.norm()))
        throw std::runtime_error(
            "the symmetric matrix fell partly outside the realization; the embedding must be "
            "lossless");
    return w;
}

bool verify_ch_equivalence(int n, const WeightVector& lambda, const Tolerances& tol) {
    const NumericIrrep rep = NumericIrrep::build(n, lambda, tol);
    const SphericityReport report = is_spherical(rep.system(), lambda);
    const bool has_fixed = rep.k_fixed_vector(tol).has_value();
    if (has_fixed != report.spherical) return false;
    if (!has_fixed) return true;
    const FatouResult fatou =
        fatou_limit(rep, standard_direction(n), make_t_grid(5.0, 26), tol);
    return fatou.limit_m_fixed && fatou.highest_component > 0;
}

}  // namespace satake
