#include "satake/cli.hpp"

#include "satake/io.hpp"
#include "satake/rational_linalg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satake {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char delim) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, delim)) out.push_back(trim(token));
    return out;
}

std::string ratvec_text(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rational_to_string(v[i]);
    }
    return s + ")";
}

std::string intvec_text(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

// All option values live in one record; each subcommand registers only the
// flags it consumes, everything binds here.
struct Args {
    std::string preset;
    std::string system;
    std::string weight;
    std::string subset;
    std::string direction;
    double tmax = 5.0;
    int samples = 100000;
    std::uint64_t seed = 0xC0FFEE;
    double tol = -1;
    std::string format;
    std::string out_path;
};

Tolerances make_tolerances(const Args& args) {
    Tolerances tol;
    if (args.tol > 0) {
        tol.limits = args.tol;
        tol.nullspace = args.tol;
    }
    return tol;
}

bool looks_like_path(const std::string& name) {
    return name.find('/') != std::string::npos || name.find('.') != std::string::npos;
}

RestrictedRootSystem system_from_spec(const std::string& spec) {
    std::istringstream in(spec);
    std::string type_label;
    int rank = 0;
    if (!(in >> type_label >> rank))
        throw std::invalid_argument(
            "--system expects \"TYPE RANK [class=value ...]\", e.g. \"A 2\"");
    const auto type = parse_system_type(type_label);
    if (!type)
        throw std::invalid_argument("unknown system type \"" + type_label +
                                    "\"; expected one of A B C D E F G BC");
    std::map<std::string, int> mult;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(
                "multiplicities must be class=value pairs, got \"" + token + "\"");
        const std::string cls = token.substr(0, eq);
        int m = 0;
        try {
            std::size_t pos = 0;
            m = std::stoi(token.substr(eq + 1), &pos);
            if (pos != token.size() - eq - 1) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("multiplicity for class \"" + cls +
                                        "\" must be an integer");
        }
        if (!mult.emplace(cls, m).second)
            throw std::invalid_argument("multiplicity class \"" + cls + "\" appears twice");
    }
    if (mult.empty()) mult["all"] = 1;
    return RestrictedRootSystem::build(*type, rank, mult);
}

RestrictedRootSystem resolve_system(const Args& args) {
    if (args.preset.empty() == args.system.empty())
        throw std::invalid_argument("exactly one of --preset or --system is required");
    if (!args.system.empty()) return system_from_spec(args.system);
    const auto names = RestrictedRootSystem::preset_names();
    if (std::find(names.begin(), names.end(), args.preset) != names.end())
        return RestrictedRootSystem::preset(args.preset);
    if (looks_like_path(args.preset)) return load_preset_file(args.preset);
    if (const char* dir = std::getenv("SATAKE_PRESET_PATH"))
        return load_preset_file(std::string(dir) + "/" + args.preset + ".preset");
    throw std::invalid_argument("unknown preset \"" + args.preset +
                                "\" (not a built-in, not a path, and SATAKE_PRESET_PATH "
                                "is not set)");
}

WeightVector parse_weight(const Args& args, const RestrictedRootSystem& rs) {
    if (args.weight.empty())
        throw std::invalid_argument("--weight is required for this subcommand");
    RatVec coords;
    for (const std::string& token : split(args.weight, ','))
        coords.push_back(parse_rational(token));
    if (static_cast<int>(coords.size()) != rs.rank()) {
        std::ostringstream os;
        os << "--weight lists " << coords.size() << " coefficients but the system has rank "
           << rs.rank();
        throw std::invalid_argument(os.str());
    }
    return {Basis::fundamental_weight, std::move(coords)};
}

SimpleSubset parse_subset(const std::string& text, int rank) {
    const std::string body = trim(text);
    if (body.empty() || body == "none") return SimpleSubset::empty_set(rank);
    std::vector<int> idx;
    for (const std::string& token : split(body, ',')) {
        int i = 0;
        try {
            std::size_t pos = 0;
            i = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("--subset entries must be integers, got \"" +
                                        token + "\"");
        }
        if (i < 1 || i > rank) {
            std::ostringstream os;
            os << "--subset lists the simple root " << i << " outside 1.." << rank;
            throw std::invalid_argument(os.str());
        }
        idx.push_back(i - 1);
    }
    return SimpleSubset::from_indices(rank, idx);
}

IntVec parse_direction(const std::string& text, int n) {
    IntVec v;
    for (const std::string& token : split(text, ',')) {
        try {
            v.push_back(Int(token));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("--direction entries must be integers, got \"" +
                                        token + "\"");
        }
    }
    if (static_cast<int>(v.size()) != n) {
        std::ostringstream os;
        os << "--direction lists " << v.size() << " entries but the realization needs " << n;
        throw std::invalid_argument(os.str());
    }
    return v;
}

// The numeric lab realizes split sl(n,R) only.
int sl_rank_n(const RestrictedRootSystem& rs) {
    if (rs.type() != SystemType::A || !rs.is_split()) {
        std::ostringstream os;
        os << "the numeric lab realizes split sl(n,R) only; " << to_string(rs.type())
           << rs.rank() << " with the given multiplicities is not A_r with every m = 1";
        throw std::invalid_argument(os.str());
    }
    return rs.rank() + 1;
}

void require_spherical(const RestrictedRootSystem& rs, const WeightVector& lambda,
                       const std::string& what) {
    const SphericityReport report = is_spherical(rs, lambda);
    if (report.spherical) return;
    std::string msg = what + " needs a spherical weight";
    if (!report.dominant) msg += ": the weight is not dominant";
    if (!report.violations.empty()) {
        const SphericityViolation& v = report.violations.front();
        msg += ": the integrality condition fails at root " + ratvec_text(v.root.simple);
        if (v.root.doubled) msg += " doubled";
        msg += " with ratio " + rational_to_string(v.ratio);
    }
    throw std::invalid_argument(msg);
}

std::string check_format(const std::string& format, const std::string& fallback,
                         const std::vector<std::string>& allowed) {
    if (format.empty()) return fallback;
    if (std::find(allowed.begin(), allowed.end(), format) != allowed.end()) return format;
    std::string msg = "--format must be one of";
    for (const std::string& a : allowed) msg += " " + a;
    msg += ", got \"" + format + "\"";
    throw std::invalid_argument(msg);
}

// --- text renderings -------------------------------------------------------

std::string roots_text(const RestrictedRootSystem& rs) {
    std::ostringstream os;
    os << to_string(rs.type()) << rs.rank() << ", rank " << rs.rank() << ", split: "
       << (rs.is_split() ? "yes" : "no") << "\n";
    os << "positive roots (" << rs.positive_roots().size() << "), multiplicity sum "
       << rs.sum_of_multiplicities() << ":\n";
    for (const Root& g : rs.positive_roots()) {
        os << "  " << ratvec_text(g.simple) << "  height " << g.height << "  m="
           << rs.multiplicity(g);
        if (g.doubled) os << "  doubled";
        os << "\n";
    }
    return os.str();
}

std::string report_text(const RestrictedRootSystem& rs, const WeightVector& lambda,
                        const SphericityReport& report) {
    std::ostringstream os;
    os << "weight " << ratvec_text(rs.to_fundamental(lambda).coords) << "\n";
    os << "dominant: " << (report.dominant ? "yes" : "no") << "\n";
    os << "spherical: " << (report.spherical ? "yes" : "no") << "\n";
    for (const SphericityViolation& v : report.violations) {
        os << "  root " << ratvec_text(v.root.simple);
        if (v.root.doubled) os << " doubled";
        os << ": ratio " << rational_to_string(v.ratio) << " is not an integer\n";
    }
    return os.str();
}

std::string lattice_text(const SphericalLattice& lattice) {
    std::ostringstream os;
    os << "spherical lattice basis, fundamental coordinates (" << lattice.basis.size()
       << "):\n";
    for (const WeightVector& v : lattice.basis) os << "  " << ratvec_text(v.coords) << "\n";
    return os.str();
}

std::string poset_text(const RestrictedRootSystem& rs, const BoundaryPoset& poset) {
    std::ostringstream os;
    os << "weight " << ratvec_text(rs.to_fundamental(poset.weight).coords)
       << ", interior dim " << poset.interior_dim << "\n";
    if (poset.degenerate) {
        os << poset.warning << "\n";
        return os.str();
    }
    os << "E0 = " << poset.E0.to_string() << "\n";
    os << "boundary components (" << poset.nodes.size() << "):\n";
    for (const BoundaryComponent& node : poset.nodes) {
        os << "  E = " << node.E.to_string();
        if (!(node.E_prime == node.E)) os << "  E' = " << node.E_prime.to_string();
        os << "  dim X^E = " << node.dim_XE;
        if (node.orbit_dim) os << "  orbit dim " << *node.orbit_dim;
        os << "\n";
    }
    if (!poset.covers.empty()) {
        os << "covers:\n";
        for (const auto& [small, large] : poset.covers)
            os << "  " << poset.nodes[small].E.to_string() << " < "
               << poset.nodes[large].E.to_string() << "\n";
    }
    if (!poset.warning.empty()) os << "warning: " << poset.warning << "\n";
    return os.str();
}

std::string embed_text(const NumericIrrep& rep, const Eigen::VectorXd& k_fixed) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "sl(" << rep.n() << ",R) irrep with highest weight "
       << ratvec_text(rep.system().to_fundamental(rep.highest()).coords) << "\n";
    os << "dim " << rep.dim() << " in ambient dim " << rep.ambient_dim() << "\n";
    os << "spherical: yes\n";
    os << "K-fixed vector:\n";
    for (Eigen::Index i = 0; i < k_fixed.size(); ++i)
        os << "  " << k_fixed(i) << "\n";
    return os.str();
}

std::string fatou_text(const FatouResult& res, const IntVec& h, double tmax,
                       std::size_t count) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "fatou flow along H = " << intvec_text(h) << ", " << count << " samples to t = "
       << tmax << "\n";
    os << "weight gap " << res.weight_gap << "\n";
    os << "fitted rate " << res.trace.fitted_rate << "\n";
    os << "highest component " << res.highest_component << "\n";
    os << "limit M-fixed: " << (res.limit_m_fixed ? "yes" : "no") << "\n";
    os << "final relative error " << res.trace.samples.back().error << "\n";
    return os.str();
}

std::string boundary_limit_text(const BoundaryLimitResult& res, const SimpleSubset& e,
                                const IntVec& h, double tmax, std::size_t count) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "boundary flow to E = " << e.to_string() << " along H = " << intvec_text(h)
       << ", " << count << " samples to t = " << tmax << "\n";
    os << "weight gap " << res.weight_gap << "\n";
    os << "fitted rate " << res.trace.fitted_rate << "\n";
    os << "g in M(E): " << (res.g_in_ME ? "yes" : "no") << "\n";
    os << "final projective error " << res.trace.samples.back().error << "\n";
    return os.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Args a;
    int exit_code = 0;

    CLI::App app{"Cartan-Helgason sphericity, Satake boundary structure and numeric "
                 "flows for restricted root systems"};
    app.name("satake");
    app.require_subcommand(1);

    const auto deliver = [&](const std::string& text) {
        if (a.out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream file(a.out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + a.out_path);
        file << text;
    };

    const auto add_system_flags = [&](CLI::App* sub) {
        sub->add_option("--preset", a.preset,
                        "Built-in preset name, a preset file path, or a name resolved "
                        "against $SATAKE_PRESET_PATH");
        sub->add_option("--system", a.system,
                        "Raw spec \"TYPE RANK [class=value ...]\" (default multiplicity "
                        "all=1)");
    };
    const auto add_out_flags = [&](CLI::App* sub) {
        sub->add_option("--format", a.format, "Output format");
        sub->add_option("--out", a.out_path, "Write output to a file instead of stdout");
    };

    // roots
    CLI::App* roots = app.add_subcommand("roots", "List the positive restricted roots");
    add_system_flags(roots);
    add_out_flags(roots);
    roots->callback([&] {
        const std::string fmt = check_format(a.format, "text", {"text", "json"});
        const RestrictedRootSystem rs = resolve_system(a);
        deliver(fmt == "json" ? roots_to_json(rs) : roots_text(rs));
    });

    // spherical
    CLI::App* spherical =
        app.add_subcommand("spherical", "Test the Cartan-Helgason sphericity condition");
    add_system_flags(spherical);
    add_out_flags(spherical);
    spherical->add_option("--weight", a.weight, "Fundamental coefficients, comma separated");
    spherical->callback([&] {
        const std::string fmt = check_format(a.format, "text", {"text", "json"});
        const RestrictedRootSystem rs = resolve_system(a);
        const WeightVector lambda = parse_weight(a, rs);
        const SphericityReport report = is_spherical(rs, lambda);
        deliver(fmt == "json" ? report_to_json(rs, lambda, report)
                              : report_text(rs, lambda, report));
    });

    // lattice
    CLI::App* lattice =
        app.add_subcommand("lattice", "Basis of the lattice of spherical weights");
    add_system_flags(lattice);
    add_out_flags(lattice);
    lattice->callback([&] {
        const std::string fmt = check_format(a.format, "text", {"text", "json"});
        const RestrictedRootSystem rs = resolve_system(a);
        const SphericalLattice lat = spherical_lattice_basis(rs);
        deliver(fmt == "json" ? lattice_to_json(lat) : lattice_text(lat));
    });

    // boundary
    CLI::App* boundary =
        app.add_subcommand("boundary", "Boundary orbit poset of the compactification");
    add_system_flags(boundary);
    add_out_flags(boundary);
    boundary->add_option("--weight", a.weight, "Fundamental coefficients, comma separated");
    boundary->callback([&] {
        const std::string fmt = check_format(a.format, "text", {"text", "json", "dot"});
        const RestrictedRootSystem rs = resolve_system(a);
        const WeightVector lambda = parse_weight(a, rs);
        const BoundaryPoset poset = boundary_poset(rs, lambda);
        if (fmt == "json")
            deliver(poset_to_json(rs, poset));
        else if (fmt == "dot")
            deliver(poset_to_dot(rs, poset));
        else
            deliver(poset_text(rs, poset));
    });

    // embed
    CLI::App* embed = app.add_subcommand(
        "embed", "Construct the split sl(n,R) irrep and its K-fixed vector");
    add_system_flags(embed);
    add_out_flags(embed);
    embed->add_option("--weight", a.weight, "Fundamental coefficients, comma separated");
    embed->add_option("--tol", a.tol, "Numeric tolerance override");
    embed->callback([&] {
        const std::string fmt = check_format(a.format, "text", {"text", "json"});
        const RestrictedRootSystem rs = resolve_system(a);
        const int n = sl_rank_n(rs);
        const WeightVector lambda = parse_weight(a, rs);
        require_spherical(rs, lambda, "the projective embedding");
        const Tolerances tol = make_tolerances(a);
        const NumericIrrep rep = NumericIrrep::build(n, lambda, tol);
        const auto k_fixed = rep.k_fixed_vector(tol);
        if (!k_fixed)
            throw std::runtime_error(
                "the weight is spherical but no K-fixed vector was found");
        deliver(fmt == "json" ? embed_summary_to_json(rep, k_fixed)
                              : embed_text(rep, *k_fixed));
    });

    // limits
    CLI::App* limits = app.add_subcommand(
        "limits", "Fatou limit (no --subset) or boundary limit (with --subset)");
    add_system_flags(limits);
    add_out_flags(limits);
    limits->add_option("--weight", a.weight, "Fundamental coefficients, comma separated");
    CLI::Option* subset_opt = limits->add_option(
        "--subset", a.subset, "Boundary subset E, 1-based comma separated (or \"none\")");
    limits->add_option("--direction", a.direction,
                       "Diagonal flow direction, n comma separated integers");
    limits->add_option("--tmax", a.tmax, "End of the time grid (51 samples from 0)");
    limits->add_option("--tol", a.tol, "Numeric tolerance override");
    limits->callback([&] {
        const std::string fmt = check_format(a.format, "csv", {"csv", "text"});
        const RestrictedRootSystem rs = resolve_system(a);
        const int n = sl_rank_n(rs);
        const WeightVector lambda = parse_weight(a, rs);
        require_spherical(rs, lambda, "the limit flow");
        const Tolerances tol = make_tolerances(a);
        if (a.tmax <= 0) throw std::invalid_argument("--tmax must be positive");
        const std::vector<double> grid = make_t_grid(a.tmax, 51);
        const NumericIrrep rep = NumericIrrep::build(n, lambda, tol);
        if (subset_opt->count() > 0) {
            const SimpleSubset e = parse_subset(a.subset, rs.rank());
            IntVec h;
            if (!a.direction.empty()) {
                h = parse_direction(a.direction, n);
            } else {
                const FaceChamber fc = face_chamber(rs, e);
                h = diag_direction_from_gamma_values(
                    mat_vec(rs.gram(), fc.interior_point.coords), n);
            }
            const BoundaryLimitResult res = boundary_limit(
                rep, e, h, Eigen::MatrixXd::Identity(n, n), grid, tol);
            deliver(fmt == "csv" ? trace_to_csv(res.trace)
                                 : boundary_limit_text(res, e, h, a.tmax, grid.size()));
        } else {
            const IntVec h = a.direction.empty() ? standard_direction(n)
                                                 : parse_direction(a.direction, n);
            const FatouResult res = fatou_limit(rep, h, grid, tol);
            deliver(fmt == "csv" ? trace_to_csv(res.trace)
                                 : fatou_text(res, h, a.tmax, grid.size()));
        }
    });

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite");
    add_out_flags(verify);
    verify->add_option("--samples", a.samples, "Haar sample count for the Poisson average");
    verify->add_option("--seed", a.seed, "Random seed");
    verify->add_option("--tol", a.tol, "Numeric tolerance override");
    verify->callback([&] {
        const std::string fmt = check_format(a.format, "text", {"text", "json"});
        VerifyOptions opts;
        opts.seed = a.seed;
        if (a.samples < 2) throw std::invalid_argument("--samples must be at least 2");
        opts.haar_samples = a.samples;
        opts.tol = make_tolerances(a);
        std::vector<CheckResult> results = run_acceptance_suite(opts);
        bool all = true;
        for (const CheckResult& r : results) all = all && r.pass;
        // Timings are stripped so output is byte-identical for a fixed
        // (config, seed).
        for (CheckResult& r : results) r.seconds = 0;
        if (fmt == "json") {
            deliver(checks_to_json(results));
        } else {
            std::ostringstream os;
            int passed = 0;
            for (const CheckResult& r : results) {
                os << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                   << "\n";
                if (r.pass) ++passed;
            }
            os << passed << "/" << results.size() << " checks passed\n";
            deliver(os.str());
        }
        if (!all) exit_code = 2;
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace satake
