#pragma once

#include "satake/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace satake {

// Restricted root systems of real semisimple Lie algebras.  Everything in
// this header is exact rational arithmetic: the sphericity test downstream is
// an integrality condition, so the root-system layer must not round.

enum class SystemType { A, B, C, D, E, F, G, BC };

std::string to_string(SystemType t);
std::optional<SystemType> parse_system_type(const std::string& s);

enum class Basis { simple_root, fundamental_weight };

// A vector in the (dual of the) restricted Cartan subspace, tagged by the
// basis its coordinates refer to.  Dual and primal are identified via the
// invariant form, so elements H of the Cartan subspace use the same type.
struct WeightVector {
    Basis basis = Basis::fundamental_weight;
    RatVec coords;

    bool operator==(const WeightVector&) const = default;
};

WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector sub(const WeightVector& a, const WeightVector& b);
WeightVector scale(const Rat& c, const WeightVector& a);
bool is_zero(const WeightVector& a);

// Dimension data of the real form a preset describes: dim of the Lie
// algebra, of the maximal compact subalgebra, and of the centralizer of the
// Cartan subspace inside the compact part.
struct RealFormMeta {
    std::string name;
    int dim_g = 0;
    int dim_k = 0;
    int dim_m = 0;
};

// Subset of the simple restricted roots, stored as a bitmask.  Indices are
// 0-based internally; to_string prints 1-based labels to match the usual
// numbering of simple roots.
class SimpleSubset {
  public:
    SimpleSubset() = default;
    SimpleSubset(int rank, std::uint32_t bits);
    static SimpleSubset empty_set(int rank);
    static SimpleSubset full_set(int rank);
    static SimpleSubset from_indices(int rank, const std::vector<int>& indices);

    int rank() const { return rank_; }
    std::uint32_t bits() const { return bits_; }
    bool contains(int i) const;
    int size() const;
    bool empty() const { return bits_ == 0; }
    bool is_subset_of(const SimpleSubset& other) const;
    SimpleSubset with(int i) const;
    SimpleSubset without(int i) const;
    SimpleSubset unite(const SimpleSubset& other) const;
    SimpleSubset intersect(const SimpleSubset& other) const;
    SimpleSubset complement() const;
    std::vector<int> indices() const;
    std::string to_string() const;

    bool operator==(const SimpleSubset&) const = default;
    bool operator<(const SimpleSubset& other) const;

  private:
    int rank_ = 0;
    std::uint32_t bits_ = 0;
};

// A positive restricted root in simple-root coordinates.  For BC systems the
// stored simple system is the reduced one and roots 2γ carry doubled = true.
struct Root {
    RatVec simple;
    bool doubled = false;
    int height = 0;

    bool operator==(const Root&) const = default;
};

class RestrictedRootSystem {
  public:
    // Multiplicities are keyed by root-length class: "short", "long",
    // "double" (the 2γ roots of BC types), or "all" as a blanket value for
    // every class the system actually has.  Keys naming an absent class are
    // rejected, which is how inconsistent multiplicity input surfaces.
    static RestrictedRootSystem build(SystemType type, int rank,
                                      const std::map<std::string, int>& multiplicities,
                                      std::optional<RealFormMeta> meta = std::nullopt);
    static RestrictedRootSystem preset(const std::string& name);
    static std::vector<std::string> preset_names();

    SystemType type() const { return type_; }
    int rank() const { return rank_; }

    // cartan()[i][j] = 2(γᵢ|γⱼ)/(γⱼ|γⱼ).  gram()[i][j] = (γᵢ|γⱼ), normalized
    // so the short simple root of each component has squared length 2.
    const RatMat& cartan() const { return cartan_; }
    const RatMat& gram() const { return gram_; }
    bool doubled_simple(int i) const;
    bool adjacent(int i, int j) const;

    // Reduced positive roots in height order, then the doubled roots of BC
    // systems in the same order as their halves.
    const std::vector<Root>& positive_roots() const { return positive_; }
    int multiplicity(const Root& g) const;
    int sum_of_multiplicities() const;
    bool is_split() const;

    const std::optional<RealFormMeta>& realform_meta() const { return meta_; }
    const std::map<std::string, int>& multiplicity_classes() const { return mult_; }

    WeightVector to_simple(const WeightVector& v) const;
    WeightVector to_fundamental(const WeightVector& v) const;
    WeightVector zero() const;

    Rat inner(const WeightVector& v, const WeightVector& w) const;
    Rat inner_root(const WeightVector& v, const Root& g) const;
    Rat root_norm_sq(const Root& g) const;
    WeightVector root_vector(const Root& g) const;

    bool is_dominant(const WeightVector& v) const;
    std::vector<WeightVector> weyl_orbit(const WeightVector& v) const;
    WeightVector dominant_representative(const WeightVector& v) const;
    WeightVector simple_reflection(int i, const WeightVector& v) const;
    std::vector<WeightVector> fundamental_weights() const;

    // Multiplicity-weighted half-sum ½ Σ_{γ>0} m(γ)·γ, doubled roots counted
    // separately.
    WeightVector half_sum() const;

  private:
    RestrictedRootSystem() = default;

    SystemType type_ = SystemType::A;
    int rank_ = 0;
    RatMat cartan_;
    RatMat gram_;
    RatMat fund_from_simple_;   // Aᵀ with multipliable rows halved; fund = M · simple
    RatMat simple_from_fund_;   // inverse of the above
    std::vector<bool> doubled_simple_;
    std::vector<Root> positive_;
    std::map<std::string, int> mult_;
    Rat short_sq_ = 2;
    std::optional<RealFormMeta> meta_;

    std::string length_class(const Root& g) const;
    void enumerate_positive_roots();
    void validate_multiplicities() const;
    void validate_meta() const;
};

}  // namespace satake
