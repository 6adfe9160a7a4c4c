#pragma once

#include "satake/rootsys.hpp"

#include <string>
#include <vector>

namespace satake {

// Cartan–Helgason layer: which dominant weights are highest weights of
// representations with a K-fixed vector, the lattice of all such weights,
// and (for split forms) the full weight system of the representation.

struct SphericityViolation {
    Root root;
    Rat ratio;  // (Λ|γ)/(γ|γ), non-integral
};

struct SphericityReport {
    bool spherical = false;
    bool dominant = false;
    std::vector<SphericityViolation> violations;
};

// spherical ⟺ dominant and (Λ|γ)/(γ|γ) ∈ ℤ for every positive restricted
// root γ, doubled roots included.  The report lists every violating root.
SphericityReport is_spherical(const RestrictedRootSystem& rs, const WeightVector& lambda);

struct SphericalLattice {
    // ℤ-basis of the lattice {λ : (λ|γ)/(γ|γ) ∈ ℤ for all γ > 0}, in
    // fundamental-weight coordinates, Hermite-canonical so equal lattices
    // compare equal.
    std::vector<WeightVector> basis;

    bool contains(const RestrictedRootSystem& rs, const WeightVector& v) const;
};

SphericalLattice spherical_lattice_basis(const RestrictedRootSystem& rs);

struct WeightEntry {
    WeightVector weight;   // simple-root coordinates
    IntVec offset;         // Λ − weight in simple-root coordinates (integers)
    Int multiplicity;
};

struct WeightSystem {
    WeightVector highest;
    std::vector<WeightEntry> entries;  // unique weights, deterministic order
    Int total_multiplicity;

    const WeightEntry* find(const RestrictedRootSystem& rs, const WeightVector& w) const;
};

// Weight system of the irreducible with highest weight Λ, multiplicities by
// Freudenthal's recursion.  Defined for split systems only (restricted =
// absolute roots); non-split input is an error, not an approximation.
WeightSystem weight_system(const RestrictedRootSystem& rs, const WeightVector& lambda);

// Weyl dimension ∏_{γ>0}(Λ+ρ|γ)/(ρ|γ) with the multiplicity-weighted ρ.
// Exact; errors if the product is not a positive integer.
Int weyl_dimension(const RestrictedRootSystem& rs, const WeightVector& lambda);

// The entries of ws whose weight is congruent to Λ modulo the span of E,
// i.e. Λ − λ supported on E.  These index the subspace V^E.
std::vector<WeightEntry> congruent_weights(const RestrictedRootSystem& rs,
                                           const WeightVector& lambda,
                                           const SimpleSubset& E,
                                           const WeightSystem& ws);

}  // namespace satake
