#include "satake/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace satake {

namespace {

// Keys keep their insertion order so output is byte-stable across runs.
using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; JSON numbers past 2^63 would round through
// double on the way back in.
json int_json(const Int& x) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (x >= lo && x <= hi) return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

json rat_json(const Rat& x) {
    json j;
    j["num"] = int_json(numerator(x));
    j["den"] = int_json(denominator(x));
    return j;
}

json ratvec_json(const RatVec& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_json(x));
    return arr;
}

// Subsets of simple roots travel as sorted 1-based index lists, matching the
// usual numbering γ₁ … γ_r.
json subset_json(const SimpleSubset& s) {
    json arr = json::array();
    for (int i : s.indices()) arr.push_back(i + 1);
    return arr;
}

const char* basis_name(Basis b) {
    return b == Basis::simple_root ? "simple_root" : "fundamental_weight";
}

json weightvec_json(const WeightVector& v) {
    json j;
    j["basis"] = basis_name(v.basis);
    j["coords"] = ratvec_json(v.coords);
    return j;
}

json parabolic_json(const ParabolicDims& d) {
    json j;
    j["dim_a_E"] = d.dim_a_E;
    j["dim_a_upper_E"] = d.dim_a_upper_E;
    j["dim_n_E"] = d.dim_n_E;
    j["dim_n_upper_E"] = d.dim_n_upper_E;
    j["has_metadata"] = d.has_metadata;
    if (d.has_metadata) {
        j["dim_m_K"] = d.dim_m_K;
        j["dim_m_E"] = d.dim_m_E;
        j["dim_b"] = d.dim_b;
        j["dim_flag"] = d.dim_flag;
    }
    return j;
}

// --- reader helpers ------------------------------------------------------

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(what + " is not valid JSON: " + ex.what());
    }
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        throw std::invalid_argument(where + " must be a JSON object");
    const auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(where + " is missing the key \"" + key + "\"");
    return *it;
}

const json& array_at(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + " must be a JSON array");
    return j;
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
            throw std::invalid_argument(where + " holds a malformed integer literal");
        }
    }
    throw std::invalid_argument(where + " must be an integer or a decimal string");
}

int small_int_from_json(const json& j, const std::string& where) {
    const Int x = int_from_json(j, where);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw std::invalid_argument(where + " does not fit in a machine int");
    return x.convert_to<int>();
}

Rat rat_from_json(const json& j, const std::string& where) {
    const Int num = int_from_json(field(j, "num", where), where + ".num");
    const Int den = int_from_json(field(j, "den", where), where + ".den");
    if (den == 0) throw std::invalid_argument(where + " has a zero denominator");
    return Rat(num, den);
}

RatVec ratvec_from_json(const json& j, const std::string& where) {
    array_at(j, where);
    RatVec out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

bool bool_from_json(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw std::invalid_argument(where + " must be a boolean");
    return j.get<bool>();
}

std::string string_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) throw std::invalid_argument(where + " must be a string");
    return j.get<std::string>();
}

double double_from_json(const json& j, const std::string& where) {
    if (!j.is_number()) throw std::invalid_argument(where + " must be a number");
    return j.get<double>();
}

SimpleSubset subset_from_json(const json& j, int rank, const std::string& where) {
    array_at(j, where);
    std::vector<int> idx;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const int one_based =
            small_int_from_json(j[i], where + "[" + std::to_string(i) + "]");
        if (one_based < 1 || one_based > rank)
            throw std::invalid_argument(where + " lists the simple root " +
                                        std::to_string(one_based) +
                                        " outside 1.." + std::to_string(rank));
        idx.push_back(one_based - 1);
    }
    return SimpleSubset::from_indices(rank, idx);
}

WeightVector weightvec_from_json(const json& j, const std::string& where) {
    const std::string basis = string_from_json(field(j, "basis", where), where + ".basis");
    WeightVector v;
    if (basis == "simple_root")
        v.basis = Basis::simple_root;
    else if (basis == "fundamental_weight")
        v.basis = Basis::fundamental_weight;
    else
        throw std::invalid_argument(where + ".basis must be \"simple_root\" or "
                                            "\"fundamental_weight\"");
    v.coords = ratvec_from_json(field(j, "coords", where), where + ".coords");
    return v;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_int_token(const std::string& token, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int value = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be an integer, got \"" + token + "\"");
    }
}

}  // namespace

// --- emitters ------------------------------------------------------------

std::string roots_to_json(const RestrictedRootSystem& rs) {
    json j;
    j["type"] = to_string(rs.type());
    j["rank"] = rs.rank();
    json roots = json::array();
    for (const Root& g : rs.positive_roots()) {
        json e;
        e["coords_simple"] = ratvec_json(g.simple);
        e["doubled"] = g.doubled;
        e["height"] = g.height;
        e["multiplicity"] = rs.multiplicity(g);
        roots.push_back(std::move(e));
    }
    j["roots"] = std::move(roots);
    return dump(j);
}

std::string report_to_json(const RestrictedRootSystem& rs, const WeightVector& lambda,
                           const SphericityReport& report) {
    json j;
    j["weight_fundamental"] = ratvec_json(rs.to_fundamental(lambda).coords);
    j["spherical"] = report.spherical;
    j["dominant"] = report.dominant;
    json violations = json::array();
    for (const SphericityViolation& v : report.violations) {
        json e;
        e["root_simple"] = ratvec_json(v.root.simple);
        e["doubled"] = v.root.doubled;
        e["ratio"] = rat_json(v.ratio);
        violations.push_back(std::move(e));
    }
    j["violations"] = std::move(violations);
    return dump(j);
}

std::string lattice_to_json(const SphericalLattice& lattice) {
    json basis = json::array();
    for (const WeightVector& v : lattice.basis) {
        if (v.basis != Basis::fundamental_weight)
            throw std::logic_error("spherical lattice bases are stored in fundamental "
                                   "coordinates");
        basis.push_back(ratvec_json(v.coords));
    }
    json j;
    j["basis_fundamental"] = std::move(basis);
    return dump(j);
}

std::string weight_system_to_json(const RestrictedRootSystem& rs, const WeightSystem& ws) {
    json j;
    j["highest_fundamental"] = ratvec_json(rs.to_fundamental(ws.highest).coords);
    j["total_multiplicity"] = int_json(ws.total_multiplicity);
    json entries = json::array();
    for (const WeightEntry& e : ws.entries) {
        json je;
        je["weight_simple"] = ratvec_json(e.weight.coords);
        je["multiplicity"] = int_json(e.multiplicity);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return dump(j);
}

std::string poset_to_json(const RestrictedRootSystem& rs, const BoundaryPoset& poset) {
    json j;
    j["rank"] = rs.rank();
    j["weight"] = weightvec_json(poset.weight);
    j["E0"] = subset_json(poset.E0);
    j["interior_dim"] = poset.interior_dim;
    j["degenerate"] = poset.degenerate;
    j["warning"] = poset.warning;
    json nodes = json::array();
    for (const BoundaryComponent& node : poset.nodes) {
        json jn;
        jn["E"] = subset_json(node.E);
        jn["E_prime"] = subset_json(node.E_prime);
        jn["E_dprime"] = subset_json(node.E_dprime);
        jn["dim_XE"] = node.dim_XE;
        jn["orbit_dim"] = node.orbit_dim ? json(*node.orbit_dim) : json(nullptr);
        jn["stab"] = parabolic_json(node.stab);
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    json covers = json::array();
    for (const auto& [small, large] : poset.covers)
        covers.push_back(json::array({small, large}));
    j["covers"] = std::move(covers);
    return dump(j);
}

std::string poset_to_dot(const RestrictedRootSystem& rs, const BoundaryPoset& poset) {
    std::ostringstream os;
    os << "digraph boundary_poset {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    const WeightVector wf = rs.to_fundamental(poset.weight);
    os << "  labelloc=\"t\";\n  label=\"weight (";
    for (std::size_t i = 0; i < wf.coords.size(); ++i)
        os << (i ? ", " : "") << rational_to_string(wf.coords[i]);
    os << ")\";\n";
    if (poset.degenerate) {
        os << "  point [label=\"X is a point\"];\n";
        os << "}\n";
        return os.str();
    }
    os << "  interior [label=\"interior\\ndim " << poset.interior_dim << "\"];\n";
    std::vector<bool> is_smaller(poset.nodes.size(), false);
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const BoundaryComponent& node = poset.nodes[i];
        os << "  n" << i << " [label=\"E = " << node.E.to_string();
        if (!(node.E_prime == node.E)) os << "\\nE' = " << node.E_prime.to_string();
        if (node.orbit_dim) os << "\\norbit dim " << *node.orbit_dim;
        os << "\"];\n";
    }
    for (const auto& [small, large] : poset.covers) {
        os << "  n" << small << " -> n" << large << ";\n";
        if (small >= 0 && static_cast<std::size_t>(small) < is_smaller.size())
            is_smaller[static_cast<std::size_t>(small)] = true;
    }
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        if (!is_smaller[i]) os << "  n" << i << " -> interior;\n";
    os << "}\n";
    return os.str();
}

std::string embed_summary_to_json(const NumericIrrep& rep,
                                  const std::optional<Eigen::VectorXd>& k_fixed) {
    const RestrictedRootSystem& rs = rep.system();
    json j;
    j["n"] = rep.n();
    j["weight_fundamental"] = ratvec_json(rs.to_fundamental(rep.highest()).coords);
    j["dim"] = rep.dim();
    j["ambient_dim"] = rep.ambient_dim();
    j["spherical"] = k_fixed.has_value();
    if (k_fixed) {
        json v = json::array();
        for (Eigen::Index i = 0; i < k_fixed->size(); ++i) v.push_back((*k_fixed)(i));
        j["k_fixed"] = std::move(v);
    }
    return dump(j);
}

std::string checks_to_json(const std::vector<CheckResult>& results) {
    json checks = json::array();
    bool all = true;
    for (const CheckResult& r : results) {
        json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        e["seconds"] = r.seconds;
        checks.push_back(std::move(e));
        if (!r.pass) all = false;
    }
    json j;
    j["checks"] = std::move(checks);
    j["all_pass"] = all;
    return dump(j);
}

std::string trace_to_csv(const ConvergenceTrace& trace) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "t,error,log_error\n";
    for (const TraceSample& s : trace.samples)
        os << s.t << "," << s.error << "," << std::log(s.error) << "\n";
    return os.str();
}

// --- readers ---------------------------------------------------------------

ParsedRoots parse_roots_json(const std::string& text) {
    const json j = parse_text(text, "root listing");
    ParsedRoots out;
    out.type = string_from_json(field(j, "type", "root listing"), "type");
    out.rank = small_int_from_json(field(j, "rank", "root listing"), "rank");
    const json& roots = array_at(field(j, "roots", "root listing"), "roots");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::string where = "roots[" + std::to_string(i) + "]";
        ParsedRoots::Entry e;
        e.coords_simple =
            ratvec_from_json(field(roots[i], "coords_simple", where), where + ".coords_simple");
        e.doubled = bool_from_json(field(roots[i], "doubled", where), where + ".doubled");
        e.multiplicity = small_int_from_json(field(roots[i], "multiplicity", where),
                                             where + ".multiplicity");
        out.roots.push_back(std::move(e));
    }
    return out;
}

ParsedReport parse_report_json(const std::string& text) {
    const json j = parse_text(text, "sphericity report");
    ParsedReport out;
    out.weight_fundamental = ratvec_from_json(
        field(j, "weight_fundamental", "sphericity report"), "weight_fundamental");
    out.spherical =
        bool_from_json(field(j, "spherical", "sphericity report"), "spherical");
    out.dominant = bool_from_json(field(j, "dominant", "sphericity report"), "dominant");
    const json& violations =
        array_at(field(j, "violations", "sphericity report"), "violations");
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const std::string where = "violations[" + std::to_string(i) + "]";
        ParsedReport::Violation v;
        v.root_simple = ratvec_from_json(field(violations[i], "root_simple", where),
                                         where + ".root_simple");
        v.ratio = rat_from_json(field(violations[i], "ratio", where), where + ".ratio");
        out.violations.push_back(std::move(v));
    }
    return out;
}

std::vector<RatVec> parse_lattice_json(const std::string& text) {
    const json j = parse_text(text, "lattice");
    const json& basis = array_at(field(j, "basis_fundamental", "lattice"), "basis_fundamental");
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.push_back(
            ratvec_from_json(basis[i], "basis_fundamental[" + std::to_string(i) + "]"));
    return out;
}

ParsedWeightSystem parse_weight_system_json(const std::string& text) {
    const json j = parse_text(text, "weight system");
    ParsedWeightSystem out;
    out.highest_fundamental = ratvec_from_json(
        field(j, "highest_fundamental", "weight system"), "highest_fundamental");
    out.total_multiplicity = int_from_json(
        field(j, "total_multiplicity", "weight system"), "total_multiplicity");
    const json& entries = array_at(field(j, "entries", "weight system"), "entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "entries[" + std::to_string(i) + "]";
        ParsedWeightSystem::Entry e;
        e.weight_simple = ratvec_from_json(field(entries[i], "weight_simple", where),
                                           where + ".weight_simple");
        e.multiplicity =
            int_from_json(field(entries[i], "multiplicity", where), where + ".multiplicity");
        out.entries.push_back(std::move(e));
    }
    return out;
}

BoundaryPoset parse_poset_json(const std::string& text, int* rank_out) {
    const json j = parse_text(text, "boundary poset");
    const int rank = small_int_from_json(field(j, "rank", "boundary poset"), "rank");
    if (rank < 1) throw std::invalid_argument("boundary poset rank must be positive");
    if (rank_out) *rank_out = rank;
    BoundaryPoset out;
    out.weight = weightvec_from_json(field(j, "weight", "boundary poset"), "weight");
    out.E0 = subset_from_json(field(j, "E0", "boundary poset"), rank, "E0");
    out.interior_dim =
        small_int_from_json(field(j, "interior_dim", "boundary poset"), "interior_dim");
    out.degenerate =
        bool_from_json(field(j, "degenerate", "boundary poset"), "degenerate");
    out.warning = string_from_json(field(j, "warning", "boundary poset"), "warning");
    const json& nodes = array_at(field(j, "nodes", "boundary poset"), "nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string where = "nodes[" + std::to_string(i) + "]";
        BoundaryComponent node;
        node.E = subset_from_json(field(nodes[i], "E", where), rank, where + ".E");
        node.E_prime =
            subset_from_json(field(nodes[i], "E_prime", where), rank, where + ".E_prime");
        node.E_dprime =
            subset_from_json(field(nodes[i], "E_dprime", where), rank, where + ".E_dprime");
        node.dim_XE =
            small_int_from_json(field(nodes[i], "dim_XE", where), where + ".dim_XE");
        const json& od = field(nodes[i], "orbit_dim", where);
        if (!od.is_null())
            node.orbit_dim = small_int_from_json(od, where + ".orbit_dim");
        const json& stab = field(nodes[i], "stab", where);
        node.stab.dim_a_E =
            small_int_from_json(field(stab, "dim_a_E", where), where + ".stab.dim_a_E");
        node.stab.dim_a_upper_E = small_int_from_json(field(stab, "dim_a_upper_E", where),
                                                      where + ".stab.dim_a_upper_E");
        node.stab.dim_n_E =
            small_int_from_json(field(stab, "dim_n_E", where), where + ".stab.dim_n_E");
        node.stab.dim_n_upper_E = small_int_from_json(field(stab, "dim_n_upper_E", where),
                                                      where + ".stab.dim_n_upper_E");
        node.stab.has_metadata = bool_from_json(field(stab, "has_metadata", where),
                                                where + ".stab.has_metadata");
        if (node.stab.has_metadata) {
            node.stab.dim_m_K =
                small_int_from_json(field(stab, "dim_m_K", where), where + ".stab.dim_m_K");
            node.stab.dim_m_E =
                small_int_from_json(field(stab, "dim_m_E", where), where + ".stab.dim_m_E");
            node.stab.dim_b =
                small_int_from_json(field(stab, "dim_b", where), where + ".stab.dim_b");
            node.stab.dim_flag =
                small_int_from_json(field(stab, "dim_flag", where), where + ".stab.dim_flag");
        }
        out.nodes.push_back(std::move(node));
    }
    const json& covers = array_at(field(j, "covers", "boundary poset"), "covers");
    for (std::size_t i = 0; i < covers.size(); ++i) {
        const std::string where = "covers[" + std::to_string(i) + "]";
        array_at(covers[i], where);
        if (covers[i].size() != 2)
            throw std::invalid_argument(where + " must be a pair of node indices");
        const int small = small_int_from_json(covers[i][0], where + "[0]");
        const int large = small_int_from_json(covers[i][1], where + "[1]");
        const int count = static_cast<int>(out.nodes.size());
        if (small < 0 || small >= count || large < 0 || large >= count)
            throw std::invalid_argument(where + " points outside the node list");
        out.covers.emplace_back(small, large);
    }
    return out;
}

ParsedEmbed parse_embed_json(const std::string& text) {
    const json j = parse_text(text, "embedding summary");
    ParsedEmbed out;
    out.n = small_int_from_json(field(j, "n", "embedding summary"), "n");
    out.weight_fundamental = ratvec_from_json(
        field(j, "weight_fundamental", "embedding summary"), "weight_fundamental");
    out.dim = small_int_from_json(field(j, "dim", "embedding summary"), "dim");
    out.ambient_dim =
        small_int_from_json(field(j, "ambient_dim", "embedding summary"), "ambient_dim");
    out.spherical =
        bool_from_json(field(j, "spherical", "embedding summary"), "spherical");
    if (j.contains("k_fixed")) {
        const json& v = array_at(j["k_fixed"], "k_fixed");
        for (std::size_t i = 0; i < v.size(); ++i)
            out.k_fixed.push_back(
                double_from_json(v[i], "k_fixed[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<CheckResult> parse_checks_json(const std::string& text) {
    const json j = parse_text(text, "check report");
    const json& checks = array_at(field(j, "checks", "check report"), "checks");
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const std::string where = "checks[" + std::to_string(i) + "]";
        CheckResult r;
        r.name = string_from_json(field(checks[i], "name", where), where + ".name");
        r.pass = bool_from_json(field(checks[i], "pass", where), where + ".pass");
        r.detail = string_from_json(field(checks[i], "detail", where), where + ".detail");
        r.seconds =
            double_from_json(field(checks[i], "seconds", where), where + ".seconds");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TraceSample> parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "t,error,log_error")
        throw std::invalid_argument("trace CSV must start with the header t,error,log_error");
    std::vector<TraceSample> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = trim(line);
        if (row.empty()) continue;
        const auto c1 = row.find(',');
        const auto c2 = row.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos ||
            row.find(',', c2 + 1) != std::string::npos)
            throw std::invalid_argument("trace CSV line " + std::to_string(lineno) +
                                        " must have exactly 3 columns");
        TraceSample s;
        try {
            s.t = std::stod(row.substr(0, c1));
            s.error = std::stod(row.substr(c1 + 1, c2 - c1 - 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("trace CSV line " + std::to_string(lineno) +
                                        " holds a malformed number");
        }
        out.push_back(s);
    }
    return out;
}

// --- preset text config ------------------------------------------------------

PresetConfig parse_preset_config(const std::string& text) {
    PresetConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("preset line " + std::to_string(lineno) +
                                        " is not of the form key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("preset line " + std::to_string(lineno) +
                                        " has an empty key or value");
        if (!seen.insert(key).second)
            throw std::invalid_argument("preset key \"" + key + "\" appears twice");
        if (key == "name") {
            cfg.name = value;
        } else if (key == "type") {
            const auto type = parse_system_type(value);
            if (!type)
                throw std::invalid_argument("unknown system type \"" + value +
                                            "\"; expected one of A B C D E F G BC");
            cfg.type = *type;
        } else if (key == "rank") {
            cfg.rank = parse_int_token(value, "rank");
        } else if (key == "mult") {
            std::string token;
            // Comma separators are allowed alongside spaces.
            std::string normalized = value;
            for (char& c : normalized)
                if (c == ',') c = ' ';
            std::istringstream norm(normalized);
            while (norm >> token) {
                const auto ceq = token.find('=');
                if (ceq == std::string::npos)
                    throw std::invalid_argument(
                        "mult entries must be class=value pairs, got \"" + token + "\"");
                const std::string cls = token.substr(0, ceq);
                const int m = parse_int_token(token.substr(ceq + 1), "multiplicity");
                if (m < 1)
                    throw std::invalid_argument("multiplicity for class \"" + cls +
                                                "\" must be positive");
                if (!cfg.mult.emplace(cls, m).second)
                    throw std::invalid_argument("multiplicity class \"" + cls +
                                                "\" appears twice");
            }
            if (cfg.mult.empty())
                throw std::invalid_argument("mult lists no class=value pairs");
        } else if (key == "dim_g") {
            cfg.dim_g = parse_int_token(value, "dim_g");
        } else if (key == "dim_k") {
            cfg.dim_k = parse_int_token(value, "dim_k");
        } else if (key == "dim_m") {
            cfg.dim_m = parse_int_token(value, "dim_m");
        } else {
            throw std::invalid_argument("unknown preset key \"" + key + "\"");
        }
    }
    for (const char* required : {"name", "type", "rank", "mult"})
        if (!seen.count(required))
            throw std::invalid_argument(std::string("preset config is missing the key \"") +
                                        required + "\"");
    const bool any_dim = seen.count("dim_g") || seen.count("dim_k") || seen.count("dim_m");
    const bool all_dim = seen.count("dim_g") && seen.count("dim_k") && seen.count("dim_m");
    if (any_dim && !all_dim)
        throw std::invalid_argument(
            "dim_g, dim_k and dim_m must be given together or not at all");
    if (all_dim && cfg.dim_g < 1)
        throw std::invalid_argument("dim_g must be positive");
    return cfg;
}

RestrictedRootSystem build_from_config(const PresetConfig& config) {
    std::optional<RealFormMeta> meta;
    if (config.dim_g > 0)
        meta = RealFormMeta{config.name, config.dim_g, config.dim_k, config.dim_m};
    return RestrictedRootSystem::build(config.type, config.rank, config.mult, meta);
}

RestrictedRootSystem load_preset_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open preset file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return build_from_config(parse_preset_config(buffer.str()));
}

std::string preset_to_config(const RestrictedRootSystem& rs) {
    std::ostringstream os;
    const auto& meta = rs.realform_meta();
    os << "name = " << (meta ? meta->name : std::string("custom")) << "\n";
    os << "type = " << to_string(rs.type()) << "\n";
    os << "rank = " << rs.rank() << "\n";
    os << "mult =";
    for (const auto& [cls, m] : rs.multiplicity_classes()) os << " " << cls << "=" << m;
    os << "\n";
    if (meta) {
        os << "dim_g = " << meta->dim_g << "\n";
        os << "dim_k = " << meta->dim_k << "\n";
        os << "dim_m = " << meta->dim_m << "\n";
    }
    return os.str();
}

}  // namespace satake
