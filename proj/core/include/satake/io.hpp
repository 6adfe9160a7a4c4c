#pragma once

#include "satake/verify.hpp"

#include <map>
#include <string>
#include <vector>

namespace satake {

// Serialization layer.  Exact rationals are emitted as {"num": …, "den": …}
// pairs; every JSON emitter has a matching reader so emitted output can be
// fed back into the toolkit (round-trip property of the CLI).

// --- emitters ---------------------------------------------------------

std::string roots_to_json(const RestrictedRootSystem& rs);
std::string report_to_json(const RestrictedRootSystem& rs, const WeightVector& lambda,
                           const SphericityReport& report);
std::string lattice_to_json(const SphericalLattice& lattice);
std::string weight_system_to_json(const RestrictedRootSystem& rs, const WeightSystem& ws);
std::string poset_to_json(const RestrictedRootSystem& rs, const BoundaryPoset& poset);
std::string poset_to_dot(const RestrictedRootSystem& rs, const BoundaryPoset& poset);
std::string embed_summary_to_json(const NumericIrrep& rep,
                                  const std::optional<Eigen::VectorXd>& k_fixed);
std::string checks_to_json(const std::vector<CheckResult>& results);

// CSV with fixed header "t,error,log_error".
std::string trace_to_csv(const ConvergenceTrace& trace);

// --- readers ----------------------------------------------------------

struct ParsedRoots {
    std::string type;
    int rank = 0;
    struct Entry {
        RatVec coords_simple;
        bool doubled = false;
        int multiplicity = 0;
    };
    std::vector<Entry> roots;
};
ParsedRoots parse_roots_json(const std::string& text);

struct ParsedReport {
    RatVec weight_fundamental;
    bool spherical = false;
    bool dominant = false;
    struct Violation {
        RatVec root_simple;
        Rat ratio;
    };
    std::vector<Violation> violations;
};
ParsedReport parse_report_json(const std::string& text);

std::vector<RatVec> parse_lattice_json(const std::string& text);

struct ParsedWeightSystem {
    RatVec highest_fundamental;
    struct Entry {
        RatVec weight_simple;
        Int multiplicity;
    };
    std::vector<Entry> entries;
    Int total_multiplicity;
};
ParsedWeightSystem parse_weight_system_json(const std::string& text);

// Reconstructs the poset (rank is carried in the JSON).
BoundaryPoset parse_poset_json(const std::string& text, int* rank_out = nullptr);

struct ParsedEmbed {
    int n = 0;
    RatVec weight_fundamental;
    int dim = 0;
    int ambient_dim = 0;
    bool spherical = false;
    std::vector<double> k_fixed;  // empty when absent
};
ParsedEmbed parse_embed_json(const std::string& text);

std::vector<CheckResult> parse_checks_json(const std::string& text);
std::vector<TraceSample> parse_trace_csv(const std::string& text);

// --- preset text config ------------------------------------------------

// Line-oriented `key = value` format with '#' comments.  Keys: name, type,
// rank, mult (space/comma-separated class=value pairs), dim_g, dim_k, dim_m.
struct PresetConfig {
    std::string name;
    SystemType type = SystemType::A;
    int rank = 0;
    std::map<std::string, int> mult;
    int dim_g = 0;
    int dim_k = 0;
    int dim_m = 0;
};

PresetConfig parse_preset_config(const std::string& text);
RestrictedRootSystem build_from_config(const PresetConfig& config);
RestrictedRootSystem load_preset_file(const std::string& path);
std::string preset_to_config(const RestrictedRootSystem& rs);

}  // namespace satake
