#include "satake/rootsys.hpp"

#include <stdexcept>

namespace satake {

namespace {

struct PresetRow {
    const char* name;
    SystemType type;
    int rank;
    // Multiplicity classes: {"all"} or per-class {"short","long","double"}.
    std::map<std::string, int> mult;
    int dim_g, dim_k, dim_m;
};

// Restricted root data of classical and split exceptional real forms.  Every
// row is validated at build time against both dimension identities
//   dim_g = dim_m + rank + 2·Σ m(γ)   and   dim_k = dim_m + Σ m(γ),
// so a typo here fails loudly instead of poisoning downstream counts.
const std::vector<PresetRow>& preset_table() {
    static const std::vector<PresetRow> table = {
        {"sl2r", SystemType::A, 1, {{"all", 1}}, 3, 1, 0},
        {"sl3r", SystemType::A, 2, {{"all", 1}}, 8, 3, 0},
        {"sl4r", SystemType::A, 3, {{"all", 1}}, 15, 6, 0},
        {"sl5r", SystemType::A, 4, {{"all", 1}}, 24, 10, 0},
        {"su21", SystemType::BC, 1, {{"short", 2}, {"double", 1}}, 8, 4, 1},
        {"su31", SystemType::BC, 1, {{"short", 4}, {"double", 1}}, 15, 9, 4},
        {"su22", SystemType::C, 2, {{"short", 2}, {"long", 1}}, 15, 7, 1},
        {"su32", SystemType::BC, 2, {{"short", 2}, {"long", 2}, {"double", 1}}, 24, 12, 2},
        {"so21", SystemType::A, 1, {{"all", 1}}, 3, 1, 0},
        {"so31", SystemType::A, 1, {{"all", 2}}, 6, 3, 1},
        {"so41", SystemType::A, 1, {{"all", 3}}, 10, 6, 3},
        {"so32", SystemType::B, 2, {{"all", 1}}, 10, 4, 0},
        {"so42", SystemType::B, 2, {{"short", 2}, {"long", 1}}, 15, 7, 1},
        {"so43", SystemType::B, 3, {{"all", 1}}, 21, 9, 0},
        {"so52", SystemType::B, 2, {{"short", 3}, {"long", 1}}, 21, 11, 3},
        {"sp2r", SystemType::C, 2, {{"all", 1}}, 10, 4, 0},
        {"sp3r", SystemType::C, 3, {{"all", 1}}, 21, 9, 0},
        {"so33", SystemType::A, 3, {{"all", 1}}, 15, 6, 0},
        {"so44", SystemType::D, 4, {{"all", 1}}, 28, 12, 0},
        {"g2split", SystemType::G, 2, {{"all", 1}}, 14, 6, 0},
        {"f4split", SystemType::F, 4, {{"all", 1}}, 52, 24, 0},
    };
    return table;
}

}  // namespace

RestrictedRootSystem RestrictedRootSystem::preset(const std::string& name) {
    for (const PresetRow& row : preset_table()) {
        if (name != row.name) continue;
        RealFormMeta meta{row.name, row.dim_g, row.dim_k, row.dim_m};
        return build(row.type, row.rank, row.mult, meta);
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> RestrictedRootSystem::preset_names() {
    std::vector<std::string> names;
    for (const PresetRow& row : preset_table()) names.push_back(row.name);
    return names;
}

}  // namespace satake
