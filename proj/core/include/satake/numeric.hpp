#pragma once

#include "satake/boundary.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace satake {

// Numerical laboratory for split SL(n,ℝ): explicit matrix realizations of
// irreducible representations with dominant integral highest weight, K-fixed
// vectors, Poisson averages, Fatou and boundary limits, and the stabilizer
// checks for boundary points of the projective compactification.

// Every tolerance used by the lab, in one place.
struct Tolerances {
    double algebraic = 1e-10;   // homomorphism / fixed-vector identities
    double nullspace = 1e-9;    // SVD rank threshold, relative to σ_max
    double limits = 1e-8;       // convergence targets
    double monte_carlo = 1e-2;  // statistical assertions
    double exp_cap = 300.0;     // max |λ(tH)| in natural-log units
};

// d(ṽ, w̃) = √(1 − ⟨v,w⟩²/(‖v‖²‖w‖²)); metric on projective points.
double projective_distance(const Eigen::VectorXd& v, const Eigen::VectorXd& w);

// Standard normal via Box–Muller over raw mt19937_64 output.  Hand-rolled so
// streams are identical across standard libraries.
double gaussian_sample(std::mt19937_64& rng);

// Haar-distributed element of SO(n): QR of a Gaussian matrix with the R
// diagonal made positive, last column flipped when the determinant is −1.
Eigen::MatrixXd haar_special_orthogonal(int n, std::mt19937_64& rng);

// Uniform grid 0, tmax/(count−1), …, tmax.
std::vector<double> make_t_grid(double tmax, int count);

// The diagonal direction H = diag(n−1, n−3, …, 1−n): strictly dominant,
// trace zero, γᵢ(H) = 2 for every simple root.
IntVec standard_direction(int n);

// Given the target values tᵢ = γᵢ(H) for the simple roots of A_{n−1},
// reconstruct an integer diagonal H (trace 0, scaled to clear denominators).
IntVec diag_direction_from_gamma_values(const RatVec& gamma_values, int n);

// An irreducible representation of sl(n,ℝ) realized inside a tensor product
// of exterior powers of ℝⁿ: one Λᵏ factor per unit of the k-th fundamental
// coefficient of the highest weight.  The basis is orthonormal and column-
// grouped by ambient weight; ambient weight spaces are exact coordinate
// blocks, so weight bookkeeping (occupations, offsets) is integer data.
class NumericIrrep {
  public:
    static NumericIrrep build(int n, const WeightVector& highest,
                              const Tolerances& tol = {});

    int n() const { return n_; }
    int dim() const { return dim_; }
    int ambient_dim() const { return ambient_dim_; }
    const WeightVector& highest() const { return highest_; }
    const RestrictedRootSystem& system() const { return *rs_; }
    const Eigen::MatrixXd& basis() const { return basis_; }

    // Ambient occupation of basis column j: the weight is λ = Σᵢ cᵢ εᵢ, so a
    // diagonal H acts on the column by the exact integer exponent Σᵢ cᵢ Hᵢ.
    const IntVec& occupation(int col) const { return occupations_[col]; }
    // Λ − λ in simple-root coordinates; entries are nonnegative integers.
    const IntVec& offset(int col) const { return offsets_[col]; }
    Int weight_on(int col, const IntVec& H_diag) const;
    WeightVector weight_of(int col) const;  // simple-root coordinates

    // v⁺ is basis column 0 by construction.
    Eigen::VectorXd highest_vector() const;

    // dρ(X) compressed to the irrep basis; X must be traceless.
    Eigen::MatrixXd lie_action(const Eigen::MatrixXd& X) const;
    // ρ(g) compressed to the irrep basis; g must have det 1 (within 1e−12).
    Eigen::MatrixXd group_action(const Eigen::MatrixXd& g) const;
    // Cheap single-vector paths (v in irrep coordinates).
    Eigen::VectorXd act_lie(const Eigen::MatrixXd& X, const Eigen::VectorXd& v) const;
    Eigen::VectorXd act_group(const Eigen::MatrixXd& g, const Eigen::VectorXd& v) const;

    // Unit K-fixed vector (sign fixed by ⟨e, v⁺⟩ > 0), or empty when the
    // joint so(n) nullspace is trivial.  Nullspace dimension ≥ 2 or singular
    // values in the ambiguous band (τ, 10τ] are errors.
    std::optional<Eigen::VectorXd> k_fixed_vector(const Tolerances& tol = {}) const;

    // True iff every sign-diagonal matrix of determinant 1 fixes v.
    bool m_fixed_check(const Eigen::VectorXd& v, const Tolerances& tol = {}) const;

  private:
    NumericIrrep() = default;

    struct Factor {
        int k = 0;                           // exterior power
        int dim = 0;                         // C(n, k)
        int stride = 0;                      // mixed-radix stride in ambient
        std::vector<std::vector<int>> subsets;  // k-subsets, lex order
    };

    void apply_factor_lie(const Eigen::MatrixXd& X, const Eigen::VectorXd& in,
                          Eigen::VectorXd& out, const Factor& f) const;
    Eigen::VectorXd apply_lie_ambient(const Eigen::MatrixXd& X,
                                      const Eigen::VectorXd& v) const;
    Eigen::VectorXd apply_group_ambient(const Eigen::MatrixXd& g,
                                        const Eigen::VectorXd& v) const;

    int n_ = 0;
    int dim_ = 0;
    int ambient_dim_ = 0;
    WeightVector highest_;
    std::optional<RestrictedRootSystem> rs_;
    std::vector<Factor> factors_;
    Eigen::MatrixXd basis_;              // ambient_dim × dim, orthonormal columns
    std::vector<IntVec> occupations_;    // per column, length n
    std::vector<IntVec> offsets_;        // per column, length n−1
    mutable std::optional<Eigen::VectorXd> k_fixed_cache_;
    mutable bool k_fixed_computed_ = false;
};

struct TraceSample {
    double t = 0;
    double error = 0;
};

struct ConvergenceTrace {
    std::vector<TraceSample> samples;
    double fitted_rate = 0;   // least-squares slope of −log error on the tail
    Eigen::VectorXd limit;
};

// Columns of the irrep whose weight is congruent to Λ modulo the span of E
// (offset supported on E); they index the subspace V^E.
std::vector<int> congruent_columns(const NumericIrrep& rep, const SimpleSubset& E);

// ι_E(õ): the normalized V^E-component of the K-fixed vector.
Eigen::VectorXd boundary_vector(const NumericIrrep& rep, const SimpleSubset& E,
                                const Tolerances& tol = {});

struct FatouResult {
    ConvergenceTrace trace;      // limit = e_Λ (highest-weight component of e)
    double weight_gap = 0;       // min over e-support of (Λ−λ)(H), λ ≠ Λ
    double highest_component = 0;  // ⟨e, v⁺⟩, positive for the fixed sign
    bool limit_m_fixed = false;
};

// e^{−tΛ(H)}ρ(exp tH)e over the grid; converges to the Λ-component of the
// K-fixed vector e.  H is an integer diagonal, trace 0, strictly dominant.
FatouResult fatou_limit(const NumericIrrep& rep, const IntVec& H_diag,
                        const std::vector<double>& t_grid,
                        const Tolerances& tol = {});

struct HaarAverage {
    Eigen::VectorXd average;
    double norm = 0;
    double std_error = 0;   // of the mean, pooled over coordinates
    bool spherical = false;
    double cosine = 0;      // |cos| with the K-fixed vector, when it exists
    double c_ratio = 0;     // ⟨average, e⟩ / ⟨e, e⟩
};

// Monte-Carlo Poisson average (1/N) Σ ρ(kᵢ)v⁺ over Haar samples kᵢ ∈ SO(n).
HaarAverage haar_average(const NumericIrrep& rep, long sample_count,
                         std::uint64_t seed, const Tolerances& tol = {});

struct BoundaryLimitResult {
    ConvergenceTrace trace;      // projective distances; limit = predicted point
    double weight_gap = 0;       // decay rate of the non-congruent components
    bool g_in_ME = false;        // g block-diagonal on the E-run partition
    Eigen::VectorXd predicted;   // normalized V^E-component of ρ(g)e
};

// Projective limit of ρ(exp tH)ρ(g)ẽ for H strictly inside the face 𝔞(E)⁺
// (integer diagonal: γᵢ(H)=0 on E, >0 off E).
BoundaryLimitResult boundary_limit(const NumericIrrep& rep, const SimpleSubset& E,
                                   const IntVec& H_diag, const Eigen::MatrixXd& g,
                                   const std::vector<double>& t_grid,
                                   const Tolerances& tol = {});

// Chart coordinate of ṽ in the affine chart around ẽ: v·‖e‖²/⟨v,e⟩ − e.
Eigen::VectorXd affine_chart(const NumericIrrep& rep, const Eigen::VectorXd& v,
                             const Tolerances& tol = {});

struct BoundednessProbe {
    double max_norm = 0;
    double max_norm_first_tenth = 0;  // running max after ⌈N/10⌉ samples
    long samples = 0;
};

// Max chart norm of ρ(g)ẽ over random g = k₁ exp(H) k₂, ‖H‖ ≤ 50.  The chart
// norm is K-bi-invariant here (e is K-fixed and ‖v‖/⟨v,e⟩ is k₁-invariant),
// so only H is sampled.
BoundednessProbe boundedness_probe(const NumericIrrep& rep, long sample_count,
                                   std::uint64_t seed, const Tolerances& tol = {});

// X^γ = c·E_ab for the positive root γ = ε_a − ε_b (a < b required).
struct RootCoefficient {
    int a = 0;
    int b = 0;
    double c = 0;
};

struct DeformationResult {
    ConvergenceTrace trace;        // Frobenius distance of the conjugate to m·n
    double expected_rate = 0;      // 2·min γ(H) over supplied roots
    Eigen::MatrixXd limit_group;   // m·exp(Σ X^γ)
    double point_distance = 0;     // projective distance of ρ(m·n)·ι_E(õ) to ι_E(õ)
    bool fixes_point = false;
};

// The horocycle deformation k_t = m·exp(Σ e^{−tγ(H)}(X^γ + θX^γ)) conjugated
// by exp(tH); converges to m·exp(Σ X^γ) at rate 2·min γ(H).  m must be a
// sign diagonal of determinant 1; every supplied root needs γ(H) > 0.
DeformationResult stabilizer_deformation(const NumericIrrep& rep, const SimpleSubset& E,
                                         const IntVec& H_diag, const Eigen::MatrixXd& m,
                                         const std::vector<RootCoefficient>& coeffs,
                                         const std::vector<double>& t_grid,
                                         const Tolerances& tol = {});

struct StabilizerCheck {
    SimpleSubset E_prime;
    int point_generators = 0;      // fix ι_E(õ) projectively
    int set_generators = 0;        // preserve V^E (may move the point inside)
    double max_point_distance = 0;
    double max_set_leak = 0;       // largest component outside V^E, relative
    bool point_fixed = false;
    bool set_preserved = false;
};

// Direct check that a generating set of B(E′) stabilizes the boundary
// component: generators of M(E′)_K, A(E′), N(E′) and the absorbed E″ blocks
// fix the point ι_E(õ); the noncompact E-block generators preserve V^E.
StabilizerCheck verify_boundary_stabilizer(const NumericIrrep& rep, const SimpleSubset& E,
                                           const Tolerances& tol = {});

// Independent oracle for Λ = 2ω₁: the compactification is the projectivized
// PSD cone {g·gᵀ}.  Rank-k stratum has projective dimension k(2n−k+1)/2 − 1.
struct PsdOracle {
    int n = 0;
    std::vector<int> stratum_dims;  // rank n, n−1, …, 1

    Eigen::MatrixXd map_point(const Eigen::MatrixXd& g) const;  // g gᵀ, Frobenius-normalized
    Eigen::MatrixXd boundary_target(int rank) const;  // diag(1…1,0…0)/√rank
};

PsdOracle psd_model_oracle(int n);

// Embedding Sym²(ℝⁿ) → irrep coordinates for Λ = 2ω₁ (the irrep is exactly
// the symmetric square inside ℝⁿ ⊗ ℝⁿ).
Eigen::VectorXd sym_to_irrep(const NumericIrrep& rep, const Eigen::MatrixXd& S);

// Full Cartan–Helgason equivalence check on (n, Λ): K-fixed vector exists
// iff Λ is spherical, and when it exists, the Fatou limit e_Λ is M-fixed.
bool verify_ch_equivalence(int n, const WeightVector& lambda,
                           const Tolerances& tol = {});

}  // namespace satake
