#include "satake/rootsys.hpp"

#include "satake/rational_linalg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satake {

std::string to_string(SystemType t) {
    switch (t) {
        case SystemType::A: return "A";
        case SystemType::B: return "B";
        case SystemType::C: return "C";
        case SystemType::D: return "D";
        case SystemType::E: return "E";
        case SystemType::F: return "F";
        case SystemType::G: return "G";
        case SystemType::BC: return "BC";
    }
    return "?";
}

std::optional<SystemType> parse_system_type(const std::string& s) {
    if (s == "A") return SystemType::A;
    if (s == "B") return SystemType::B;
    if (s == "C") return SystemType::C;
    if (s == "D") return SystemType::D;
    if (s == "E") return SystemType::E;
    if (s == "F") return SystemType::F;
    if (s == "G") return SystemType::G;
    if (s == "BC") return SystemType::BC;
    return std::nullopt;
}

namespace {

void check_same_shape(const WeightVector& a, const WeightVector& b) {
    if (a.basis != b.basis || a.coords.size() != b.coords.size())
        throw std::invalid_argument("weight vectors disagree in basis or rank");
}

}  // namespace

WeightVector add(const WeightVector& a, const WeightVector& b) {
    check_same_shape(a, b);
    WeightVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

WeightVector sub(const WeightVector& a, const WeightVector& b) {
    check_same_shape(a, b);
    WeightVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

WeightVector scale(const Rat& c, const WeightVector& a) {
    WeightVector r = a;
    for (auto& x : r.coords) x *= c;
    return r;
}

bool is_zero(const WeightVector& a) {
    for (const auto& x : a.coords)
        if (x != 0) return false;
    return true;
}

// --- SimpleSubset -------------------------------------------------------

SimpleSubset::SimpleSubset(int rank, std::uint32_t bits) : rank_(rank), bits_(bits) {
    if (rank < 0 || rank > 30) throw std::invalid_argument("subset rank out of range");
    if (rank < 30 && (bits >> rank) != 0)
        throw std::invalid_argument("subset bits exceed rank");
}

SimpleSubset SimpleSubset::empty_set(int rank) { return SimpleSubset(rank, 0); }

SimpleSubset SimpleSubset::full_set(int rank) {
    return SimpleSubset(rank, rank == 0 ? 0 : ((std::uint32_t{1} << rank) - 1));
}

SimpleSubset SimpleSubset::from_indices(int rank, const std::vector<int>& indices) {
    std::uint32_t bits = 0;
    for (int i : indices) {
        if (i < 0 || i >= rank) throw std::invalid_argument("subset index out of range");
        bits |= std::uint32_t{1} << i;
    }
    return SimpleSubset(rank, bits);
}

bool SimpleSubset::contains(int i) const {
    return i >= 0 && i < rank_ && (bits_ >> i & 1u);
}

int SimpleSubset::size() const { return std::popcount(bits_); }

bool SimpleSubset::is_subset_of(const SimpleSubset& other) const {
    return rank_ == other.rank_ && (bits_ & ~other.bits_) == 0;
}

SimpleSubset SimpleSubset::with(int i) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("subset index out of range");
    return SimpleSubset(rank_, bits_ | (std::uint32_t{1} << i));
}

SimpleSubset SimpleSubset::without(int i) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("subset index out of range");
    return SimpleSubset(rank_, bits_ & ~(std::uint32_t{1} << i));
}

SimpleSubset SimpleSubset::unite(const SimpleSubset& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("subset rank mismatch");
    return SimpleSubset(rank_, bits_ | other.bits_);
}

SimpleSubset SimpleSubset::intersect(const SimpleSubset& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("subset rank mismatch");
    return SimpleSubset(rank_, bits_ & other.bits_);
}

SimpleSubset SimpleSubset::complement() const {
    return SimpleSubset(rank_, full_set(rank_).bits() & ~bits_);
}

std::vector<int> SimpleSubset::indices() const {
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i)
        if (bits_ >> i & 1u) out.push_back(i);
    return out;
}

std::string SimpleSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : indices()) {
        if (!first) os << ',';
        os << (i + 1);
        first = false;
    }
    os << '}';
    return os.str();
}

bool SimpleSubset::operator<(const SimpleSubset& other) const {
    if (rank_ != other.rank_) return rank_ < other.rank_;
    return bits_ < other.bits_;
}

// --- Cartan matrices ----------------------------------------------------

namespace {

struct Edge {
    int i, j;
    int aij, aji;  // cartan[i][j], cartan[j][i]
};

std::vector<Edge> dynkin_edges(SystemType type, int rank) {
    std::vector<Edge> edges;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1, -1, -1});
    };
    switch (type) {
        case SystemType::A:
            if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
            chain(rank);
            break;
        case SystemType::B:
            if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
            chain(rank - 1);
            edges.push_back({rank - 2, rank - 1, -2, -1});  // last simple root short
            break;
        case SystemType::C:
            if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
            chain(rank - 1);
            edges.push_back({rank - 2, rank - 1, -1, -2});  // last simple root long
            break;
        case SystemType::D:
            if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
            chain(rank - 1);
            edges.push_back({rank - 3, rank - 1, -1, -1});
            break;
        case SystemType::E:
            if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6..8");
            edges.push_back({0, 2, -1, -1});
            edges.push_back({1, 3, -1, -1});
            edges.push_back({2, 3, -1, -1});
            edges.push_back({3, 4, -1, -1});
            edges.push_back({4, 5, -1, -1});
            if (rank >= 7) edges.push_back({5, 6, -1, -1});
            if (rank == 8) edges.push_back({6, 7, -1, -1});
            break;
        case SystemType::F:
            if (rank != 4) throw std::invalid_argument("type F needs rank 4");
            edges.push_back({0, 1, -1, -1});
            edges.push_back({1, 2, -2, -1});  // roots 2,3 short
            edges.push_back({2, 3, -1, -1});
            break;
        case SystemType::G:
            if (rank != 2) throw std::invalid_argument("type G needs rank 2");
            edges.push_back({0, 1, -1, -3});  // root 0 short
            break;
        case SystemType::BC:
            if (rank < 1) throw std::invalid_argument("type BC needs rank >= 1");
            if (rank >= 2) {
                chain(rank - 1);
                edges.push_back({rank - 2, rank - 1, -2, -1});
            }
            break;
    }
    return edges;
}

RatMat cartan_matrix_for(SystemType type, int rank) {
    RatMat a(rank, RatVec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    for (const Edge& e : dynkin_edges(type, rank)) {
        a[e.i][e.j] = e.aij;
        a[e.j][e.i] = e.aji;
    }
    return a;
}

// Symmetrizer: d with dᵢ·a[j][i] = dⱼ·a[i][j]; gram[i][j] = dⱼ·a[i][j].
// Scaled so min d = 1, giving the short simple root squared length 2.
RatVec symmetrizer(const RatMat& a) {
    const int r = static_cast<int>(a.size());
    RatVec d(r, Rat(0));
    d[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < r; ++j) {
            if (j == i || a[i][j] == 0) continue;
            Rat dj = d[i] * a[j][i] / a[i][j];
            if (d[j] == 0) {
                d[j] = dj;
                queue.push_back(j);
            } else if (d[j] != dj) {
                throw std::logic_error("Cartan matrix not symmetrizable");
            }
        }
    }
    Rat dmin = d[0];
    for (const auto& x : d) {
        if (x == 0) throw std::logic_error("disconnected Dynkin diagram");
        dmin = std::min(dmin, x);
    }
    for (auto& x : d) x /= dmin;
    return d;
}

int expected_reduced_count(SystemType type, int rank) {
    switch (type) {
        case SystemType::A: return rank * (rank + 1) / 2;
        case SystemType::B:
        case SystemType::C: return rank * rank;
        case SystemType::D: return rank * (rank - 1);
        case SystemType::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case SystemType::F: return 24;
        case SystemType::G: return 6;
        case SystemType::BC: return rank == 1 ? 1 : rank * rank;
    }
    return -1;
}

}  // namespace

// --- RestrictedRootSystem -----------------------------------------------

RestrictedRootSystem RestrictedRootSystem::build(SystemType type, int rank,
                                                 const std::map<std::string, int>& multiplicities,
                                                 std::optional<RealFormMeta> meta) {
    if (rank <= 0) throw std::invalid_argument("root system rank must be positive");
    if (rank > 30) throw std::invalid_argument("rank too large");
    RestrictedRootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix_for(type, rank);
    RatVec d = symmetrizer(rs.cartan_);
    rs.gram_.assign(rank, RatVec(rank, Rat(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.gram_[i][j] = d[j] * rs.cartan_[i][j];
    rs.doubled_simple_.assign(rank, false);
    if (type == SystemType::BC) rs.doubled_simple_[rank - 1] = true;
    // Fundamental coordinates pair against the coroots of the non-multipliable
    // roots: for a multipliable simple root γ the relevant coroot is (2γ)∨ =
    // γ∨/2, since restricted weights of representations pair integrally with
    // (2γ)∨ but generally not with γ∨.  Row j of fund_from_simple is the β_j∨
    // pairing, so multipliable rows are halved.
    rs.fund_from_simple_ = transpose(rs.cartan_);
    for (int j = 0; j < rank; ++j)
        if (rs.doubled_simple_[j])
            for (int i = 0; i < rank; ++i) rs.fund_from_simple_[j][i] /= 2;
    rs.simple_from_fund_ = invert(rs.fund_from_simple_);
    rs.mult_ = multiplicities;
    rs.meta_ = std::move(meta);
    rs.enumerate_positive_roots();
    rs.validate_multiplicities();
    rs.validate_meta();
    return rs;
}

void RestrictedRootSystem::enumerate_positive_roots() {
    // Closure of the simple roots under root strings: β + γᵢ is a root iff
    // p − ⟨β, γᵢ∨⟩ > 0 where p is the largest k with β − kγᵢ already a root.
    // Height-ordered processing keeps the downward walk inside known roots.
    using Coords = std::vector<int>;
    std::set<Coords> known;
    std::vector<Coords> level;
    for (int i = 0; i < rank_; ++i) {
        Coords c(rank_, 0);
        c[i] = 1;
        known.insert(c);
        level.push_back(c);
    }
    std::vector<std::pair<int, Coords>> all;  // (height, coords)
    int height = 1;
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        for (const auto& c : level) all.emplace_back(height, c);
        std::vector<Coords> next;
        for (const auto& beta : level) {
            for (int i = 0; i < rank_; ++i) {
                Rat fund_i = 0;  // ⟨β, γᵢ∨⟩
                for (int k = 0; k < rank_; ++k) fund_i += Rat(beta[k]) * cartan_[k][i];
                int p = 0;
                Coords down = beta;
                for (;;) {
                    down[i] -= 1;
                    bool nonneg = true;
                    for (int v : down) nonneg = nonneg && v >= 0;
                    if (!nonneg || !known.count(down)) break;
                    ++p;
                }
                if (Rat(p) - fund_i > 0) {
                    Coords up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
        ++height;
    }
    positive_.clear();
    for (const auto& [h, c] : all) {
        Root r;
        r.simple.assign(c.begin(), c.end());
        r.height = h;
        positive_.push_back(std::move(r));
    }
    const int expected = expected_reduced_count(type_, rank_);
    if (static_cast<int>(positive_.size()) != expected)
        throw std::logic_error("positive root count mismatch for " + to_string(type_) +
                               std::to_string(rank_));
    if (type_ == SystemType::BC) {
        const std::size_t reduced = positive_.size();
        for (std::size_t i = 0; i < reduced; ++i) {
            if (root_norm_sq(positive_[i]) != 2) continue;
            Root dbl;
            dbl.simple = positive_[i].simple;
            for (auto& x : dbl.simple) x *= 2;
            dbl.doubled = true;
            dbl.height = 2 * positive_[i].height;
            positive_.push_back(std::move(dbl));
        }
    }
}

std::string RestrictedRootSystem::length_class(const Root& g) const {
    if (g.doubled) return "double";
    return root_norm_sq(g) == 2 ? "short" : "long";
}

void RestrictedRootSystem::validate_multiplicities() const {
    std::set<std::string> present;
    for (const auto& g : positive_) present.insert(length_class(g));
    for (const auto& cls : present) {
        if (!mult_.count(cls) && !mult_.count("all"))
            throw std::invalid_argument("missing multiplicity for root class '" + cls + "'");
    }
    for (const auto& [key, value] : mult_) {
        if (key != "all" && !present.count(key))
            throw std::invalid_argument("multiplicity given for absent root class '" + key + "'");
        if (value <= 0) throw std::invalid_argument("multiplicities must be positive");
    }
}

void RestrictedRootSystem::validate_meta() const {
    if (!meta_) return;
    const int sum = sum_of_multiplicities();
    if (meta_->dim_g != meta_->dim_m + rank_ + 2 * sum)
        throw std::invalid_argument(
            "preset '" + meta_->name + "': dim_g = dim_m + rank + 2*sum(mult) fails: " +
            std::to_string(meta_->dim_g) + " != " + std::to_string(meta_->dim_m) + " + " +
            std::to_string(rank_) + " + 2*" + std::to_string(sum));
    if (meta_->dim_k != meta_->dim_m + sum)
        throw std::invalid_argument(
            "preset '" + meta_->name + "': dim_k = dim_m + sum(mult) fails: " +
            std::to_string(meta_->dim_k) + " != " + std::to_string(meta_->dim_m) + " + " +
            std::to_string(sum));
}

bool RestrictedRootSystem::doubled_simple(int i) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("simple root index out of range");
    return doubled_simple_[i];
}

bool RestrictedRootSystem::adjacent(int i, int j) const {
    if (i < 0 || i >= rank_ || j < 0 || j >= rank_)
        throw std::invalid_argument("simple root index out of range");
    return i != j && cartan_[i][j] != 0;
}

int RestrictedRootSystem::multiplicity(const Root& g) const {
    const std::string cls = length_class(g);
    auto it = mult_.find(cls);
    if (it == mult_.end()) it = mult_.find("all");
    if (it == mult_.end()) throw std::logic_error("no multiplicity for class " + cls);
    return it->second;
}

int RestrictedRootSystem::sum_of_multiplicities() const {
    int s = 0;
    for (const auto& g : positive_) s += multiplicity(g);
    return s;
}

bool RestrictedRootSystem::is_split() const {
    for (const auto& g : positive_)
        if (g.doubled || multiplicity(g) != 1) return false;
    return true;
}

WeightVector RestrictedRootSystem::to_simple(const WeightVector& v) const {
    if (static_cast<int>(v.coords.size()) != rank_)
        throw std::invalid_argument("weight vector rank mismatch");
    if (v.basis == Basis::simple_root) return v;
    return {Basis::simple_root, mat_vec(simple_from_fund_, v.coords)};
}

WeightVector RestrictedRootSystem::to_fundamental(const WeightVector& v) const {
    if (static_cast<int>(v.coords.size()) != rank_)
        throw std::invalid_argument("weight vector rank mismatch");
    if (v.basis == Basis::fundamental_weight) return v;
    return {Basis::fundamental_weight, mat_vec(fund_from_simple_, v.coords)};
}

WeightVector RestrictedRootSystem::zero() const {
    return {Basis::simple_root, RatVec(rank_, Rat(0))};
}

Rat RestrictedRootSystem::inner(const WeightVector& v, const WeightVector& w) const {
    const RatVec a = to_simple(v).coords;
    const RatVec b = to_simple(w).coords;
    Rat s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

Rat RestrictedRootSystem::inner_root(const WeightVector& v, const Root& g) const {
    return inner(v, root_vector(g));
}

Rat RestrictedRootSystem::root_norm_sq(const Root& g) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += g.simple[i] * gram_[i][j] * g.simple[j];
    return s;
}

WeightVector RestrictedRootSystem::root_vector(const Root& g) const {
    return {Basis::simple_root, g.simple};
}

bool RestrictedRootSystem::is_dominant(const WeightVector& v) const {
    for (const auto& f : to_fundamental(v).coords)
        if (f < 0) return false;
    return true;
}

WeightVector RestrictedRootSystem::simple_reflection(int i, const WeightVector& v) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("simple root index out of range");
    const Basis original = v.basis;
    WeightVector s = to_simple(v);
    Rat fund_i = 0;
    for (int k = 0; k < rank_; ++k) fund_i += s.coords[k] * cartan_[k][i];
    s.coords[i] -= fund_i;
    return original == Basis::simple_root ? s : to_fundamental(s);
}

std::vector<WeightVector> RestrictedRootSystem::weyl_orbit(const WeightVector& v) const {
    std::set<RatVec> seen;
    std::deque<RatVec> queue;
    const RatVec start = to_simple(v).coords;
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        RatVec c = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            WeightVector w{Basis::simple_root, c};
            RatVec r = to_simple(simple_reflection(i, w)).coords;
            if (seen.insert(r).second) queue.push_back(r);
        }
    }
    std::vector<WeightVector> orbit;
    orbit.reserve(seen.size());
    for (const auto& c : seen) orbit.push_back({Basis::simple_root, c});
    return orbit;
}

WeightVector RestrictedRootSystem::dominant_representative(const WeightVector& v) const {
    WeightVector s = to_simple(v);
    for (;;) {
        // The reflection amount is the γ∨ pairing, not the fundamental
        // coordinate; for multipliable simple roots those differ by 2.
        RatVec f(rank_, Rat(0));
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < rank_; ++k) f[i] += s.coords[k] * cartan_[k][i];
        int neg = -1;
        for (int i = 0; i < rank_; ++i)
            if (f[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return v.basis == Basis::simple_root ? s : to_fundamental(s);
        s.coords[neg] -= f[neg];
    }
}

std::vector<WeightVector> RestrictedRootSystem::fundamental_weights() const {
    std::vector<WeightVector> out;
    for (int j = 0; j < rank_; ++j) {
        RatVec col(rank_);
        for (int i = 0; i < rank_; ++i) col[i] = simple_from_fund_[i][j];
        out.push_back({Basis::simple_root, std::move(col)});
    }
    return out;
}

WeightVector RestrictedRootSystem::half_sum() const {
    RatVec c(rank_, Rat(0));
    for (const auto& g : positive_) {
        const int m = multiplicity(g);
        for (int i = 0; i < rank_; ++i) c[i] += Rat(m) * g.simple[i];
    }
    for (auto& x : c) x /= 2;
    return {Basis::simple_root, std::move(c)};
}

}  // namespace satake
