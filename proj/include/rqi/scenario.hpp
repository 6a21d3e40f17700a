#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqi/position_space.hpp"

namespace rqi {

inline constexpr const char* kLibraryVersion = "1.0.0";

// Bad or missing configuration; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested numerics cannot cover the configured state; exit code 3.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    std::string scenario;
    double mass = 1.0;
    int two_s = 1;
    Shell shell = Shell::plus;
    Vec3 center = Vec3::Zero();
    double width = 1.0;
    Vec3 axis = Vec3(0, 0, 1);
    std::vector<double> rapidities = {0.0, 0.5, 1.0, 1.5};
    int order = 24;
    int grid_n = 48;
    double box_sigmas = 6.0;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 20260815;
};

struct ScenarioValue {
    std::string name;
    double value = 0.0;
    double error = 0.0;  // estimated quadrature error from an order bump
};

struct ScenarioRecord {
    double rapidity = 0.0;
    std::vector<ScenarioValue> values;
};

struct ScenarioReport {
    ScenarioConfig config;
    std::string version;
    int probe_order = 0;
    std::vector<std::string> columns;
    std::vector<ScenarioRecord> records;
};

inline const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "pst-entropy",       "ga-concurrence", "pl-covariance",
        "tau-noncovariance", "dirac-fw",       "proca-residual",
        "position-plancherel"};
    return names;
}

inline std::vector<std::string> scenario_columns(const std::string& name) {
    if (name == "pst-entropy") return {"entropy_bits"};
    if (name == "ga-concurrence") return {"concurrence", "entropy_bits"};
    if (name == "pl-covariance") return {"covariance_defect", "sigma_norm"};
    if (name == "tau-noncovariance")
        return {"fit_defect", "identity_defect"};
    if (name == "dirac-fw")
        return {"max_range_residual", "max_metric_mismatch",
                "max_form_mismatch"};
    if (name == "proca-residual")
        return {"max_transversality", "max_metric_mismatch",
                "max_orthonormality"};
    if (name == "position-plancherel")
        return {"plancherel_mismatch", "coverage", "momentum_norm",
                "field_norm"};
    throw ConfigError("unknown scenario: " + name);
}

inline bool scenario_uses_quadrature(const std::string& name) {
    return name != "dirac-fw" && name != "proca-residual";
}

namespace detail {

inline std::string trim_spaces(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(trim_spaces(item));
    return out;
}

inline double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(what + ": expected a number, got '" + s + "'");
    }
}

inline long long parse_integer(const std::string& s,
                               const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(what + ": expected an integer, got '" + s + "'");
    }
}

inline Vec3 parse_vec3(const std::string& s, const std::string& what) {
    if (s == "x") return Vec3(1, 0, 0);
    if (s == "y") return Vec3(0, 1, 0);
    if (s == "z") return Vec3(0, 0, 1);
    const std::vector<std::string> parts = split_list(s, ',');
    if (parts.size() != 3)
        throw ConfigError(what + ": expected three comma-separated numbers");
    return Vec3(parse_double(parts[0], what), parse_double(parts[1], what),
                parse_double(parts[2], what));
}

}  // namespace detail

inline void apply_config_entry(ScenarioConfig& cfg, const std::string& key,
                               const std::string& value) {
    using detail::parse_double;
    using detail::parse_integer;
    if (key == "scenario") {
        cfg.scenario = value;
    } else if (key == "mass") {
        cfg.mass = parse_double(value, key);
    } else if (key == "spin_doubled") {
        cfg.two_s = int(parse_integer(value, key));
    } else if (key == "shell") {
        if (value == "plus")
            cfg.shell = Shell::plus;
        else if (value == "minus")
            cfg.shell = Shell::minus;
        else
            throw ConfigError("shell: expected plus or minus, got '" + value +
                              "'");
    } else if (key == "center") {
        cfg.center = detail::parse_vec3(value, key);
    } else if (key == "width") {
        cfg.width = parse_double(value, key);
    } else if (key == "axis") {
        cfg.axis = detail::parse_vec3(value, key);
    } else if (key == "rapidities") {
        cfg.rapidities.clear();
        for (const std::string& part : detail::split_list(value, ','))
            if (!part.empty())
                cfg.rapidities.push_back(parse_double(part, key));
    } else if (key == "order") {
        cfg.order = int(parse_integer(value, key));
    } else if (key == "grid_n") {
        cfg.grid_n = int(parse_integer(value, key));
    } else if (key == "box_sigmas") {
        cfg.box_sigmas = parse_double(value, key);
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "format") {
        cfg.format = value;
    } else if (key == "seed") {
        cfg.seed = std::uint64_t(parse_integer(value, key));
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

// Flat key = value lines; '#' and ';' start comments, blank lines ignored.
inline void load_config_file(ScenarioConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = detail::trim_spaces(line);
        if (text.empty()) continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        apply_config_entry(cfg, detail::trim_spaces(text.substr(0, eq)),
                           detail::trim_spaces(text.substr(eq + 1)));
    }
}

inline void validate_config(const ScenarioConfig& cfg) {
    if (cfg.scenario.empty()) throw ConfigError("missing scenario name");
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), cfg.scenario) == names.end())
        throw ConfigError("unknown scenario: " + cfg.scenario);
    if (!(cfg.mass > 0)) throw ConfigError("mass must be positive");
    if (!(cfg.width > 0)) throw ConfigError("width must be positive");
    if (cfg.two_s < 1) throw ConfigError("spin_doubled must be >= 1");
    if (cfg.scenario == "ga-concurrence" && cfg.two_s != 1)
        throw ConfigError("ga-concurrence is a two-qubit scenario; "
                          "spin_doubled must be 1");
    if (cfg.order < 2 || cfg.order > 96)
        throw ConfigError("order must lie in [2, 96]");
    if (cfg.grid_n < 2) throw ConfigError("grid_n must be >= 2");
    if (!(cfg.box_sigmas > 0)) throw ConfigError("box_sigmas must be positive");
    if (cfg.axis.norm() == 0) throw ConfigError("axis must be nonzero");
    if (cfg.rapidities.empty())
        throw ConfigError("rapidity list must not be empty");
    for (double xi : cfg.rapidities)
        if (!std::isfinite(xi))
            throw ConfigError("rapidity list must be finite");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be csv or json");
}

namespace detail {

inline PoincareElement scenario_boost(const ScenarioConfig& cfg, double xi) {
    return {FourVector{0, 0, 0, 0}, rapidity_boost(cfg.axis.normalized(), xi)};
}

inline VecX basis_section(int two_s, int index) {
    VecX e = VecX::Zero(spin_dim(two_s));
    e[index] = 1.0;
    return e;
}

inline SingleParticleState scenario_state(const ScenarioConfig& cfg,
                                          Description desc, int section_index,
                                          int order) {
    return make_gaussian_state(cfg.two_s, cfg.shell, cfg.mass, desc,
                               cfg.center, cfg.width,
                               basis_section(cfg.two_s, section_index), order,
                               true, cfg.box_sigmas);
}

inline std::vector<double> compute_pst_entropy(const ScenarioConfig& cfg,
                                               double xi, int order) {
    const SingleParticleState rest =
        scenario_state(cfg, Description::boosting, 0, order);
    MatX tau = spin_reduced_density(
        apply_unitary(rest, scenario_boost(cfg, xi)));
    tau /= tau.trace().real();
    return {von_neumann_entropy_bits(tau)};
}

inline std::vector<double> compute_ga_concurrence(const ScenarioConfig& cfg,
                                                  double xi, int order) {
    const SingleParticleState up =
        scenario_state(cfg, Description::boosting, 0, order);
    const SingleParticleState down =
        scenario_state(cfg, Description::boosting, 1, order);
    const double r = 1.0 / std::sqrt(2.0);
    TwoParticleState bell;
    bell.terms.push_back({r, up, down});
    bell.terms.push_back({-r, down, up});
    const TwoParticleState moved =
        apply_unitary(bell, scenario_boost(cfg, xi));
    MatX tau = two_particle_spin_reduced(moved);
    const double c = concurrence(tau);
    tau /= tau.trace().real();
    return {c, entanglement_entropy_bits(tau)};
}

inline std::vector<double> compute_pl_covariance(const ScenarioConfig& cfg,
                                                 double xi, int order) {
    const SingleParticleState rest =
        scenario_state(cfg, Description::perception, 0, order);
    const MatX sigma_a = pauli_lubansky_reduced(rest);
    const MatX sigma_b = pauli_lubansky_reduced(
        apply_unitary(rest, scenario_boost(cfg, xi)));
    const MatX phi =
        spin_matrix(cfg.two_s, rapidity_boost(cfg.axis.normalized(), xi));
    const double defect =
        (sigma_b - phi * sigma_a * phi.adjoint()).norm() / sigma_a.norm();
    return {defect, sigma_a.norm()};
}

inline std::vector<double> compute_tau_fit(const ScenarioConfig& cfg,
                                           double xi, int order) {
    const SingleParticleState rest =
        scenario_state(cfg, Description::boosting, 0, order);
    const MatX tau_rest = spin_reduced_density(rest);
    const MatX tau_boost = spin_reduced_density(
        apply_unitary(rest, scenario_boost(cfg, xi)));
    const double fit = best_su2_fit_defect(tau_boost, tau_rest, 22);
    const double direct = (tau_boost - tau_rest).norm() / tau_rest.norm();
    return {fit, direct};
}

inline std::mt19937_64 record_rng(const ScenarioConfig& cfg,
                                  std::size_t record_index) {
    return std::mt19937_64(cfg.seed +
                           0x9e3779b97f4a7c15ULL * (record_index + 1));
}

inline FourVector sampled_momentum(std::mt19937_64& rng, double mass,
                                   double radius, Shell shell) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec3 dir(gauss(rng), gauss(rng), gauss(rng));
    if (dir.norm() == 0) dir = Vec3(0, 0, 1);
    dir.normalize();
    const double r = radius * std::cbrt(unit(rng));
    return lift_to_shell(r * dir, mass, shell);
}

inline Eigen::Vector2cd sampled_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector2cd chi;
    chi << complexd(gauss(rng), gauss(rng)), complexd(gauss(rng), gauss(rng));
    if (chi.norm() == 0) chi << 1, 0;
    return chi.normalized();
}

inline std::vector<double> compute_dirac_fw(const ScenarioConfig& cfg,
                                            double xi,
                                            std::size_t record_index) {
    std::mt19937_64 rng = record_rng(cfg, record_index);
    const double m = cfg.mass;
    const double radius = m * (std::sinh(std::abs(xi)) + 0.25);
    double max_range = 0.0, max_metric = 0.0, max_form = 0.0;
    for (Shell shell : {Shell::plus, Shell::minus}) {
        for (int i = 0; i < 1000; ++i) {
            const FourVector p = sampled_momentum(rng, m, radius, shell);
            const Vec4c u = embed_rest_qubit(sampled_qubit(rng), shell);
            const Vec4c u2 = embed_rest_qubit(sampled_qubit(rng), shell);
            const Vec4c v = foldy_wouthuysen(p, u, m, shell);
            const Vec4c w = foldy_wouthuysen(p, u2, m, shell);
            max_range = std::max(max_range, range_residual(p, v, m));
            const complexd a = dirac_metric(p, v, w, m, shell);
            const complexd b = (m / std::abs(p[0])) * v.dot(w);
            const complexd c = u.dot(u2);
            max_metric = std::max({max_metric, std::abs(a - b),
                                   std::abs(a - c)});
            max_form = std::max(
                max_form,
                (v - foldy_wouthuysen_energy_form(p, u, m, shell)).norm());
        }
    }
    return {max_range, max_metric, max_form};
}

inline std::vector<double> compute_proca_residual(const ScenarioConfig& cfg,
                                                  double xi,
                                                  std::size_t record_index) {
    std::mt19937_64 rng = record_rng(cfg, record_index);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double m = cfg.mass;
    const double radius = m * (std::sinh(std::abs(xi)) + 0.25);
    double max_trans = 0.0, max_metric = 0.0, max_ortho = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const FourVector p = sampled_momentum(rng, m, radius, Shell::plus);
        const std::array<Vec4c, 3> basis = polarization_basis(p, m);
        Vec4c v = Vec4c::Zero(), w = Vec4c::Zero();
        for (int j = 0; j < 3; ++j) {
            const std::size_t jz = std::size_t(j);
            max_trans =
                std::max(max_trans, transversality_residual(p, basis[jz]));
            for (int k = 0; k < 3; ++k) {
                const double expect = j == k ? 1.0 : 0.0;
                max_ortho = std::max(
                    max_ortho,
                    std::abs(proca_metric(p, basis[jz],
                                          basis[std::size_t(k)], m) -
                             expect));
            }
            v += complexd(gauss(rng), gauss(rng)) * basis[jz];
            w += complexd(gauss(rng), gauss(rng)) * basis[jz];
        }
        max_metric = std::max(
            max_metric, std::abs(proca_metric(p, v, w, m) -
                                 proca_metric_boost_form(p, v, w, m)));
    }
    return {max_trans, max_metric, max_ortho};
}

inline std::vector<double> compute_plancherel(const ScenarioConfig& cfg,
                                              double xi, int order) {
    const Vec3 center =
        cfg.center + cfg.mass * std::sinh(xi) * cfg.axis.normalized();
    Eigen::Vector2cd chi;
    chi << 1, 0;
    const MomentumSection sec = make_dirac_section(
        cfg.mass, center, cfg.width, chi, order, cfg.box_sigmas);
    SpatialGrid grid;
    grid.n = cfg.grid_n;
    const double half = 6.0 / cfg.width;
    grid.spacing = 2.0 * half / cfg.grid_n;
    grid.origin = Vec3::Constant(-half + 0.5 * grid.spacing);
    double p_max = 0.0;
    for (int a = 0; a < 3; ++a)
        p_max = std::max({p_max, std::abs(sec.box.lo[a]),
                          std::abs(sec.box.hi[a])});
    if (grid.spacing * p_max > std::numbers::pi) {
        std::ostringstream msg;
        msg << "grid spacing " << grid.spacing
            << " undersamples momenta up to " << p_max
            << "; coverage of the oscillations needs grid_n >= "
            << int(std::ceil(2.0 * half * p_max / std::numbers::pi));
        throw CoverageError(msg.str());
    }
    const SpacetimeField field = synthesize(sec, {0.0}, grid);
    if (field.grid_warning) {
        std::ostringstream msg;
        msg << "position grid covers only " << field.coverage
            << " of the packet support; enlarge grid_n or narrow the state";
        throw CoverageError(msg.str());
    }
    const double mom = momentum_norm_squared(sec);
    const double pos = field_norm_squared(field, 0);
    return {std::abs(pos - mom) / mom, field.coverage, mom, pos};
}

inline std::vector<double> compute_record(const ScenarioConfig& cfg,
                                          double xi, int order,
                                          std::size_t record_index) {
    if (cfg.scenario == "pst-entropy")
        return compute_pst_entropy(cfg, xi, order);
    if (cfg.scenario == "ga-concurrence")
        return compute_ga_concurrence(cfg, xi, order);
    if (cfg.scenario == "pl-covariance")
        return compute_pl_covariance(cfg, xi, order);
    if (cfg.scenario == "tau-noncovariance")
        return compute_tau_fit(cfg, xi, order);
    if (cfg.scenario == "dirac-fw")
        return compute_dirac_fw(cfg, xi, record_index);
    if (cfg.scenario == "proca-residual")
        return compute_proca_residual(cfg, xi, record_index);
    if (cfg.scenario == "position-plancherel")
        return compute_plancherel(cfg, xi, order);
    throw ConfigError("unknown scenario: " + cfg.scenario);
}

}  // namespace detail

// Evaluates every rapidity point (in parallel, deterministically) and tags
// each value with the shift seen under a quadrature-order bump.
inline ScenarioReport run_scenario(const ScenarioConfig& cfg) {
    validate_config(cfg);
    ScenarioReport rep;
    rep.config = cfg;
    rep.version = kLibraryVersion;
    rep.columns = scenario_columns(cfg.scenario);
    const bool quad = scenario_uses_quadrature(cfg.scenario);
    rep.probe_order = quad ? cfg.order + 8 : cfg.order;
    rep.records.resize(cfg.rapidities.size());

    std::vector<std::exception_ptr> errors(cfg.rapidities.size());
    parallel_for(
        cfg.rapidities.size(),
        [&](std::size_t i) {
            try {
                const double xi = cfg.rapidities[i];
                const std::vector<double> base =
                    detail::compute_record(cfg, xi, cfg.order, i);
                std::vector<double> probe = base;
                if (quad)
                    probe = detail::compute_record(cfg, xi, rep.probe_order, i);
                ScenarioRecord rec;
                rec.rapidity = xi;
                for (std::size_t j = 0; j < rep.columns.size(); ++j)
                    rec.values.push_back({rep.columns[j], base[j],
                                          std::abs(base[j] - probe[j])});
                rep.records[i] = std::move(rec);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        },
        1);
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return rep;
}

inline const char* shell_name(Shell s) {
    return s == Shell::plus ? "plus" : "minus";
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_config_json(const ScenarioConfig& cfg, std::ostream& os) {
    os << "{\"scenario\":\"" << cfg.scenario << "\"";
    os << ",\"mass\":" << field_num(cfg.mass);
    os << ",\"spin_doubled\":" << cfg.two_s;
    os << ",\"shell\":\"" << shell_name(cfg.shell) << "\"";
    os << ",\"center\":[" << field_num(cfg.center[0]) << ","
       << field_num(cfg.center[1]) << "," << field_num(cfg.center[2]) << "]";
    os << ",\"width\":" << field_num(cfg.width);
    os << ",\"axis\":[" << field_num(cfg.axis[0]) << ","
       << field_num(cfg.axis[1]) << "," << field_num(cfg.axis[2]) << "]";
    os << ",\"rapidities\":[";
    for (std::size_t i = 0; i < cfg.rapidities.size(); ++i)
        os << (i ? "," : "") << field_num(cfg.rapidities[i]);
    os << "],\"order\":" << cfg.order;
    os << ",\"grid_n\":" << cfg.grid_n;
    os << ",\"box_sigmas\":" << field_num(cfg.box_sigmas);
    os << ",\"seed\":" << cfg.seed;
    os << ",\"format\":\"" << cfg.format << "\"}";
}

}  // namespace detail

// One row per rapidity; the configuration rides in leading columns so a
// report alone is enough to reproduce the run.
inline void write_report_csv(const ScenarioReport& rep, std::ostream& os) {
    os << "scenario,version,mass,spin_doubled,shell,center_x,center_y,"
          "center_z,width,axis_x,axis_y,axis_z,order,probe_order,grid_n,"
          "box_sigmas,seed,rapidity";
    for (const std::string& c : rep.columns)
        os << "," << c << "," << c << "_err";
    os << "\r\n";
    const ScenarioConfig& cfg = rep.config;
    std::ostringstream meta;
    meta << detail::csv_escape(cfg.scenario) << "," << rep.version << ","
         << detail::field_num(cfg.mass) << "," << cfg.two_s << ","
         << shell_name(cfg.shell) << "," << detail::field_num(cfg.center[0])
         << "," << detail::field_num(cfg.center[1]) << ","
         << detail::field_num(cfg.center[2]) << ","
         << detail::field_num(cfg.width) << ","
         << detail::field_num(cfg.axis[0]) << ","
         << detail::field_num(cfg.axis[1]) << ","
         << detail::field_num(cfg.axis[2]) << "," << cfg.order << ","
         << rep.probe_order << "," << cfg.grid_n << ","
         << detail::field_num(cfg.box_sigmas) << "," << cfg.seed;
    for (const ScenarioRecord& rec : rep.records) {
        os << meta.str() << "," << detail::field_num(rec.rapidity);
        for (const ScenarioValue& v : rec.values)
            os << "," << detail::field_num(v.value) << ","
               << detail::field_num(v.error);
        os << "\r\n";
    }
}

inline void write_report_json(const ScenarioReport& rep, std::ostream& os) {
    os << "{\"tool\":\"rqi-bundle\",\"version\":\"" << rep.version << "\"";
    os << ",\"config\":";
    detail::write_config_json(rep.config, os);
    os << ",\"quadrature\":{\"order\":" << rep.config.order
       << ",\"probe_order\":" << rep.probe_order << "}";
    os << ",\"columns\":[";
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        os << (i ? "," : "") << "\"" << rep.columns[i] << "\"";
    os << "],\"records\":[";
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const ScenarioRecord& rec = rep.records[i];
        os << (i ? "," : "") << "{\"rapidity\":"
           << detail::field_num(rec.rapidity) << ",\"values\":{";
        for (std::size_t j = 0; j < rec.values.size(); ++j)
            os << (j ? "," : "") << "\"" << rec.values[j].name
               << "\":{\"value\":" << detail::field_num(rec.values[j].value)
               << ",\"error\":" << detail::field_num(rec.values[j].error)
               << "}";
        os << "}}";
    }
    os << "]}";
}

inline void write_report(const ScenarioReport& rep, std::ostream& os) {
    if (rep.config.format == "json")
        write_report_json(rep, os);
    else
        write_report_csv(rep, os);
}

inline std::string scenario_help_text() {
    std::ostringstream os;
    os << "Scenarios and their per-rapidity output columns (each column is\n"
          "followed by a <column>_err estimate from a quadrature-order "
          "bump):\n";
    for (const std::string& name : scenario_names()) {
        os << "  " << name << ":";
        for (const std::string& c : scenario_columns(name)) os << " " << c;
        os << "\n";
    }
    os << "Config file: flat 'key = value' lines; '#' or ';' comments.\n"
          "Keys: scenario, mass, spin_doubled, shell (plus|minus), center\n"
          "(x,y,z), width, axis (x|y|z or x,y,z), rapidities (comma list),\n"
          "order, grid_n, box_sigmas, out, format (csv|json), seed.\n"
          "Flags override config-file values. RQI_THREADS caps parallelism.";
    return os.str();
}

}  // namespace rqi
