#pragma once

#include "satake/spherical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace satake {

// Boundary-orbit combinatorics of the Satake compactification attached to a
// spherical weight: the orthogonal set E₀, E₀-connected subsets, saturation,
// chamber faces and parabolic dimension counts.

// Simple roots orthogonal to Λ.  Λ must be dominant; dominance makes a
// positive root orthogonal to Λ exactly when its support lies in this set.
SimpleSubset compute_E0(const RestrictedRootSystem& rs, const WeightVector& lambda);

// Connected components of E in the Dynkin graph of the system.
std::vector<SimpleSubset> components(const RestrictedRootSystem& rs, const SimpleSubset& E);

// Simple roots adjacent to some member of E (excluding E itself).
SimpleSubset neighbors(const RestrictedRootSystem& rs, const SimpleSubset& E);

// E is E₀-connected iff none of its components lies inside E₀ (vacuously
// true for the empty set).
bool is_E0_connected(const RestrictedRootSystem& rs, const SimpleSubset& E,
                     const SimpleSubset& E0);

// The unique maximal E′ = E ∪ F where F is a union of components of E₀ not
// adjacent to the core of E (the components of E meeting the complement of
// E₀).  E₀-connected sets are valid input, and so is anything already of the
// saturated shape, which makes saturate idempotent for fixed E₀; a subset
// whose E₀-interior part slices a component is rejected.
SimpleSubset saturate(const RestrictedRootSystem& rs, const SimpleSubset& E,
                      const SimpleSubset& E0);

// Dimension bookkeeping for the parabolic subalgebra 𝔟(E) ⊇ 𝔪 ⊕ 𝔞 ⊕ 𝔫
// attached to a subset E of simple roots.  The split-center/Levi split is
//   𝔞 = 𝔞(E) ⊕ 𝔞^E,   𝔫 = 𝔫(E) ⊕ 𝔫^E,
// with 𝔫^E spanned by root spaces supported on E.  Fields that need the
// real-form metadata (dim 𝔪 enters them) are set only when has_metadata.
struct ParabolicDims {
    int dim_a_E = 0;        // 𝔞(E), the split center: r − |E|
    int dim_a_upper_E = 0;  // 𝔞^E: |E|
    int dim_n_E = 0;        // 𝔫(E): Σ m(γ) over γ > 0 not supported on E
    int dim_n_upper_E = 0;  // 𝔫^E: Σ m(γ) over γ > 0 supported on E
    bool has_metadata = false;
    int dim_m_K = 0;        // 𝔪_K(E) = dim 𝔪 + dim 𝔫^E
    int dim_m_E = 0;        // 𝔪(E) = dim 𝔪 + |E| + 2·dim 𝔫^E (sum not direct)
    int dim_b = 0;          // 𝔟(E) = 𝔪(E) + 𝔞(E) + 𝔫(E)
    int dim_flag = 0;       // dim G/B(E) = dim 𝔤 − dim 𝔟(E)
};

// With require_metadata, absence of real-form metadata is an error; callers
// content with the root-count fields alone pass false and get a partial
// record (has_metadata = false).
ParabolicDims parabolic_dims(const RestrictedRootSystem& rs, const SimpleSubset& E,
                             bool require_metadata = true);

// One boundary orbit class of the compactification.
struct BoundaryComponent {
    SimpleSubset E;         // E₀-connected proper subset
    SimpleSubset E_prime;   // saturation
    SimpleSubset E_dprime;  // E′ \ E, the absorbed E₀-components
    int dim_XE = 0;         // |E| + Σ_{γ∈span E} m(γ)
    std::optional<int> orbit_dim;  // (dim 𝔨 − dim 𝔪_K(E′)) + dim_XE, needs metadata
    ParabolicDims stab;     // dims of the stabilizer 𝔟(E′)
};

struct BoundaryPoset {
    WeightVector weight;
    SimpleSubset E0;
    std::vector<BoundaryComponent> nodes;     // all E₀-connected proper subsets
    std::vector<std::pair<int, int>> covers;  // (smaller, larger) covering pairs
    int interior_dim = 0;                     // dim X = r + Σ_{γ>0} m(γ)
    bool degenerate = false;                  // Λ = 0: compactification is a point
    std::string warning;
};

// Boundary orbit poset for a spherical dominant Λ.  Nodes are ordered by
// (|E|, bitmask); covers are inclusion covers; node 'interior' is implicit
// (every maximal node is covered by the interior).  Non-spherical Λ is an
// error; Λ = 0 returns an empty poset with degenerate = true.
BoundaryPoset boundary_poset(const RestrictedRootSystem& rs, const WeightVector& lambda);

// The face 𝔞(E)⁺ of the closed positive chamber: basis of the common kernel
// of E (simple-root coordinates), the indices of simple roots required
// positive, and a strictly interior integer sample point.
struct FaceChamber {
    std::vector<WeightVector> face_basis;  // basis of 𝔞(E) = {H : γ(H)=0 ∀γ∈E}
    std::vector<int> positive_on;          // simple indices with γᵢ(H) > 0
    WeightVector interior_point;           // integer coordinates, strictly interior
    bool empty_face = false;               // E = all simple roots
};

FaceChamber face_chamber(const RestrictedRootSystem& rs, const SimpleSubset& E);

// Orthogonal projection Λ^E of Λ onto the span of E under the invariant
// form.  Λ − Λ^E is orthogonal to every member of E.
WeightVector lambda_E(const RestrictedRootSystem& rs, const WeightVector& lambda,
                      const SimpleSubset& E);

}  // namespace satake
