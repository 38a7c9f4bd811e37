#include "xxzkink/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "xxzkink/operators.hpp"
#include "xxzkink/qsos.hpp"
#include "xxzkink/sector.hpp"
#include "xxzkink/spectral.hpp"
#include "xxzkink/states.hpp"
#include "xxzkink/text_io.hpp"

namespace xxz {

const std::vector<std::string> kExperiments = {"verify-kink", "profile", "gap-scan", "qsos",
                                               "interface-2d"};

double default_tolerance(const std::string& experiment) {
    if (experiment == "verify-kink") return 1e-11;
    if (experiment == "interface-2d") return 1e-10;
    if (experiment == "profile") return 1e-12;
    if (experiment == "qsos") return 1e-9;
    return 1e-8;  // gap-scan solver tolerance scale
}

RunConfig make_default_config(const std::string& experiment) {
    if (std::find(kExperiments.begin(), kExperiments.end(), experiment) == kExperiments.end())
        throw ConfigError("unknown experiment '" + experiment + "'");
    RunConfig config;
    config.experiment = experiment;
    if (experiment == "profile") config.length = 16;
    if (experiment == "gap-scan") config.sizes = {6, 8, 10, 12};
    if (experiment == "qsos") config.length = 4;
    if (experiment == "interface-2d") {
        config.width = 3;
        config.height = 3;
    }
    return config;
}

int parse_spin(const std::string& text) {
    const std::string::size_type slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const int num = std::stoi(text.substr(0, slash));
            const int den = std::stoi(text.substr(slash + 1));
            if (den != 2) throw ConfigError("spin: only halves are supported, got " + text);
            return num;
        }
        const double s = std::stod(text);
        const double doubled = 2.0 * s;
        const int twice_s = static_cast<int>(std::lround(doubled));
        if (std::abs(doubled - twice_s) > 1e-9)
            throw ConfigError("spin: 2S must be an integer, got " + text);
        return twice_s;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("spin: malformed value '" + text + "'");
    }
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": malformed number '" + value + "'");
    }
}

long long parse_integer(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": malformed integer '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

void set_config_value(RunConfig& config, const std::string& key, const std::string& value) {
    try {
        if (key == "experiment") {
            if (std::find(kExperiments.begin(), kExperiments.end(), value) == kExperiments.end())
                throw ConfigError("unknown experiment '" + value + "'");
            config.experiment = value;
        } else if (key == "schema_version") {
            config.schema_version = static_cast<int>(parse_integer(key, value));
            if (config.schema_version != 1)
                throw ConfigError("schema_version: unsupported version " + value);
        } else if (key == "twice_s") {
            config.twice_s = static_cast<int>(parse_integer(key, value));
        } else if (key == "spin") {
            config.twice_s = parse_spin(value);
        } else if (key == "delta") {
            config.delta = parse_double(key, value);
        } else if (key == "tol") {
            config.tol = parse_double(key, value);
        } else if (key == "length") {
            config.length = static_cast<int>(parse_integer(key, value));
        } else if (key == "width") {
            config.width = static_cast<int>(parse_integer(key, value));
        } else if (key == "height") {
            config.height = static_cast<int>(parse_integer(key, value));
        } else if (key == "z") {
            config.zs.push_back(parse_complex(value));
        } else if (key == "window") {
            config.window = parse_window(value);
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_integer(key, value));
        } else if (key == "strict") {
            config.strict = parse_bool(key, value);
        } else if (key == "state") {
            if (value != "kink" && value != "antikink")
                throw ConfigError("state: expected kink or antikink, got '" + value + "'");
            config.state = value;
        } else if (key == "boundary_b") {
            config.boundary_b = parse_double(key, value);
        } else if (key == "family") {
            if (value != "chain" && value != "strip")
                throw ConfigError("family: expected chain or strip, got '" + value + "'");
            config.family = value;
        } else if (key == "sizes") {
            config.sizes = parse_int_list(value);
        } else if (key == "sector_twice_m") {
            config.sector_twice_m = static_cast<int>(parse_integer(key, value));
        } else {
            throw ConfigError("unknown configuration key '" + key + "'");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

RunConfig parse_config_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> assignments;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::string experiment;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string::size_type hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string::size_type eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "experiment") experiment = value;
        assignments.push_back({key, value});
    }
    if (experiment.empty())
        throw ConfigError("config: missing required key 'experiment'");
    RunConfig config = make_default_config(experiment);
    for (const auto& [key, value] : assignments) set_config_value(config, key, value);
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

namespace {

double effective_tol(const RunConfig& config) {
    return config.tol > 0.0 ? config.tol : default_tolerance(config.experiment);
}

std::vector<std::complex<double>> effective_zs(const RunConfig& config,
                                               const Anisotropy& aniso) {
    if (!config.zs.empty()) return config.zs;
    if (config.experiment == "profile") return {1.0};
    if (aniso.q < 1.0 && aniso.q > 0.0)
        return {aniso.q, 1.0, 1.0 / aniso.q, std::polar(1.0, M_PI / 3.0)};
    return {1.0};
}

void echo_config(JsonWriter& w, const RunConfig& config, double tol) {
    w.key("config_echo").begin_object();
    w.key("experiment").value(config.experiment);
    w.key("twice_s").value(config.twice_s);
    w.key("delta").value(config.delta);
    w.key("tol").value(tol);
    w.key("length").value(config.length);
    w.key("width").value(config.width);
    w.key("height").value(config.height);
    w.key("zs").begin_array();
    for (const auto& z : config.zs) w.complex_pair(z);
    w.end_array();
    if (config.window) {
        w.key("window").begin_array();
        w.value(config.window->first);
        w.value(config.window->second);
        w.end_array();
    } else {
        w.key("window").null();
    }
    w.key("seed").value(static_cast<long long>(config.seed));
    w.key("strict").value(config.strict);
    w.key("state").value(config.state);
    if (config.boundary_b)
        w.key("boundary_b").value(*config.boundary_b);
    else
        w.key("boundary_b").null();
    w.key("family").value(config.family);
    w.key("sizes").begin_array();
    for (int s : config.sizes) w.value(s);
    w.end_array();
    if (config.sector_twice_m)
        w.key("sector_twice_m").value(*config.sector_twice_m);
    else
        w.key("sector_twice_m").null();
    w.end_object();
}

std::string config_comment(const RunConfig& config, double tol) {
    std::string out = "# config: experiment=" + config.experiment;
    out += " twice_s=" + std::to_string(config.twice_s);
    out += " delta=" + fmt17(config.delta);
    out += " tol=" + fmt17(tol);
    out += " length=" + std::to_string(config.length);
    out += " width=" + std::to_string(config.width);
    out += " height=" + std::to_string(config.height);
    out += " state=" + config.state;
    out += " family=" + config.family;
    out += " seed=" + std::to_string(config.seed);
    if (!config.zs.empty()) {
        out += " z=";
        for (std::size_t i = 0; i < config.zs.size(); ++i) {
            if (i) out += ";";
            out += fmt_complex(config.zs[i]);
        }
    }
    if (!config.sizes.empty()) {
        out += " sizes=";
        for (std::size_t i = 0; i < config.sizes.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(config.sizes[i]);
        }
    }
    return out;
}

BoundaryField chain_field(const RunConfig& config, SpinQuantum spin, const Anisotropy& aniso) {
    if (config.boundary_b) return BoundaryField::raw(*config.boundary_b);
    return config.state == "antikink" ? BoundaryField::antikink(spin, aniso)
                                      : BoundaryField::kink(spin, aniso);
}

Report run_verify_kink(RunConfig config) {
    if (config.length < 2) throw ConfigError("verify-kink: length must be >= 2");
    const SpinQuantum spin = SpinQuantum::from_twice(config.twice_s);
    const Anisotropy aniso = q_from_delta(config.delta);
    const double tol = effective_tol(config);
    config.zs = effective_zs(config, aniso);

    const Chain chain = Chain::centered(config.length);
    const SparseOperator h =
        xxz_chain_hamiltonian(chain, spin, aniso, chain_field(config, spin, aniso));

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    echo_config(w, config, tol);
    w.key("results").begin_object();
    w.key("cases").begin_array();
    double max_residual = 0.0;
    bool all_pass = true;
    for (const auto& z : config.zs) {
        const ProductState state = config.state == "antikink"
                                       ? antikink_state(z, chain, spin, aniso)
                                       : kink_state(z, chain, spin, aniso);
        Eigen::VectorXcd v = expand(state);
        v.normalize();
        const double residual = h.apply(v).norm();
        const bool pass = residual < tol;
        max_residual = std::max(max_residual, residual);
        all_pass = all_pass && pass;
        w.begin_object();
        w.key("z").complex_pair(z);
        w.key("residual").value(residual);
        w.key("pass").value(pass);
        w.end_object();
    }
    w.end_array();
    w.key("max_residual").value(max_residual);
    w.key("tol").value(tol);
    w.key("all_pass").value(all_pass);
    w.end_object();
    w.end_object();

    Report report;
    report.status = all_pass ? 0 : 1;
    report.format = "json";
    report.payload = w.str() + "\n";
    report.summary = "verify-kink: max residual " + fmt17(max_residual) +
                     (all_pass ? " (pass)" : " (FAIL)");
    return report;
}

Report run_interface_2d(RunConfig config) {
    if (config.width < 1 || config.height < 1)
        throw ConfigError("interface-2d: width and height must be positive");
    if (config.width * config.height < 2)
        throw ConfigError("interface-2d: need at least two sites");
    if (!(config.delta > 1.0)) throw ConfigError("interface-2d: needs Δ > 1");
    const SpinQuantum spin = SpinQuantum::from_twice(config.twice_s);
    const Anisotropy aniso = q_from_delta(config.delta);
    const double tol = effective_tol(config);
    config.zs = effective_zs(config, aniso);

    const Region region = make_rectangle(config.width, config.height);
    const SparseOperator h = oriented_hamiltonian(region, spin, aniso);

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    echo_config(w, config, tol);
    w.key("results").begin_object();
    w.key("cases").begin_array();
    double max_residual = 0.0;
    bool all_pass = true;
    for (const auto& z : config.zs) {
        Eigen::VectorXcd v = expand(interface_state(z, region, spin, aniso));
        v.normalize();
        const double residual = h.apply(v).norm();
        const bool pass = residual < tol;
        max_residual = std::max(max_residual, residual);
        all_pass = all_pass && pass;
        w.begin_object();
        w.key("z").complex_pair(z);
        w.key("residual").value(residual);
        w.key("pass").value(pass);
        w.end_object();
    }
    w.end_array();
    w.key("max_residual").value(max_residual);
    w.key("tol").value(tol);
    w.key("all_pass").value(all_pass);
    w.end_object();
    w.end_object();

    Report report;
    report.status = all_pass ? 0 : 1;
    report.format = "json";
    report.payload = w.str() + "\n";
    report.summary = "interface-2d: max residual " + fmt17(max_residual) +
                     (all_pass ? " (pass)" : " (FAIL)");
    return report;
}

Report run_profile(RunConfig config) {
    if (config.length < 2) throw ConfigError("profile: length must be >= 2");
    const SpinQuantum spin = SpinQuantum::from_twice(config.twice_s);
    const Anisotropy aniso = q_from_delta(config.delta);
    const double tol = effective_tol(config);
    config.zs = effective_zs(config, aniso);
    const std::complex<double> z = config.zs.front();

    const Chain chain = Chain::centered(config.length);
    const ProductState state = config.state == "antikink"
                                   ? antikink_state(z, chain, spin, aniso)
                                   : kink_state(z, chain, spin, aniso);
    const std::vector<double> profile = magnetization_profile(state);

    const bool with_fit = spin.twice_s == 1 && aniso.q < 1.0;
    const double flip = config.state == "antikink" ? -1.0 : 1.0;
    std::string csv;
    double max_abs_error = 0.0;
    if (with_fit) {
        const double xi = 1.0 / std::log(1.0 / aniso.q);
        csv += "x,s3_expectation,tanh_fit,abs_error\n";
        for (int i = 0; i < chain.length; ++i) {
            const int x = chain.coordinate(i);
            double fit;
            if (z == 0.0) {
                fit = 0.5;
            } else {
                const double a = std::log(std::abs(z)) * xi;
                fit = flip * 0.5 * std::tanh((x - a) / xi);
            }
            const double err = std::abs(profile[static_cast<std::size_t>(i)] - fit);
            max_abs_error = std::max(max_abs_error, err);
            csv += std::to_string(x) + "," + fmt17(profile[static_cast<std::size_t>(i)]) + "," +
                   fmt17(fit) + "," + fmt17(err) + "\n";
        }
        csv += "# max_abs_error = " + fmt17(max_abs_error) + "\n";
    } else {
        csv += "x,s3_expectation\n";
        for (int i = 0; i < chain.length; ++i)
            csv += std::to_string(chain.coordinate(i)) + "," +
                   fmt17(profile[static_cast<std::size_t>(i)]) + "\n";
    }
    csv += config_comment(config, tol) + "\n";

    Report report;
    report.status = with_fit && max_abs_error >= tol ? 1 : 0;
    report.format = "csv";
    report.payload = csv;
    report.summary = with_fit ? "profile: max tanh deviation " + fmt17(max_abs_error)
                              : "profile: emitted " + std::to_string(config.length) + " sites";
    return report;
}

int central_twice_m(int n_sites, SpinQuantum spin) {
    return (n_sites * spin.twice_s) % 2;
}

Report run_gap_scan(RunConfig config) {
    if (config.sizes.empty()) throw ConfigError("gap-scan: empty size list");
    const SpinQuantum spin = SpinQuantum::from_twice(config.twice_s);
    const Anisotropy aniso = q_from_delta(config.delta);
    const double tol = effective_tol(config);

    std::vector<GapScanEntry> family;
    for (int size : config.sizes) {
        GapScanEntry entry;
        entry.size = size;
        if (config.family == "chain") {
            if (size < 2) throw ConfigError("gap-scan: chain sizes must be >= 2");
            const Chain chain = Chain::centered(size);
            entry.twice_m = config.sector_twice_m ? *config.sector_twice_m
                                                  : central_twice_m(size, spin);
            const SectorBasis basis = SectorBasis::build(size, spin, entry.twice_m);
            entry.block = xxz_chain_sector_block(chain, spin, aniso,
                                                 chain_field(config, spin, aniso), basis);
        } else {
            if (size < 1) throw ConfigError("gap-scan: strip widths must be >= 1");
            const Region region = make_rectangle(size, 2);
            entry.twice_m = config.sector_twice_m
                                ? *config.sector_twice_m
                                : central_twice_m(region.n_sites(), spin);
            const SectorBasis basis = SectorBasis::build(region.n_sites(), spin, entry.twice_m);
            entry.block = oriented_sector_block(region, spin, aniso, basis);
        }
        family.push_back(std::move(entry));
    }

    LanczosOptions options;
    options.k = 3;
    options.tol = tol;
    options.seed = config.seed;
    const std::vector<SectorReport> reports = gap_scan(family, options);

    std::string csv = "size,sector_twice_m,ground_energy,kernel_dim,gap,converged\n";
    double floor = std::numeric_limits<double>::infinity();
    bool any_unconverged = false;
    for (const SectorReport& r : reports) {
        csv += std::to_string(r.size) + "," + std::to_string(r.twice_m) + "," +
               fmt17(r.ground_energy) + "," + std::to_string(r.kernel_dim) + "," +
               fmt17(r.gap) + "," + (r.converged ? "1" : "0") + "\n";
        floor = std::min(floor, r.gap);
        any_unconverged = any_unconverged || !r.converged;
    }
    csv += "# gap_floor = " + fmt17(floor) + "\n";
    if (any_unconverged) csv += "# warning: unconverged solver rows present\n";
    csv += config_comment(config, tol) + "\n";

    Report report;
    report.status = any_unconverged && config.strict ? 1 : 0;
    report.format = "csv";
    report.payload = csv;
    report.summary = "gap-scan: " + std::to_string(reports.size()) + " rows, gap floor " +
                     fmt17(floor) + (any_unconverged ? " (unconverged rows)" : "");
    return report;
}

void write_matrix(JsonWriter& w, const char* name, const Eigen::MatrixXcd& m) {
    w.key(name).begin_object();
    w.key("rows").value(static_cast<int>(m.rows()));
    w.key("cols").value(static_cast<int>(m.cols()));
    w.key("data").begin_array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) w.complex_pair(m(i, j));
    w.end_array();
    w.end_object();
}

Report run_qsos(RunConfig config) {
    if (config.width < 1 || config.width > 3)
        throw ConfigError("qsos: width (number of zig-zag chains) must be 1, 2 or 3");
    if (config.length < 2) throw ConfigError("qsos: length must be >= 2");
    if (!(config.delta > 1.0)) throw ConfigError("qsos: needs Δ > 1");
    const SpinQuantum spin = SpinQuantum::from_twice(config.twice_s);
    const Anisotropy aniso = q_from_delta(config.delta);
    const double tol = effective_tol(config);

    HeightWindow window = default_window(config.width, config.length);
    if (config.window) window = HeightWindow{config.window->first, config.window->second};
    if (window.size() < 2) throw ConfigError("qsos: window must contain at least two heights");
    config.window = {window.n_min, window.n_max};

    const QsosSystem system = coupled_qsos(config.width, config.length, spin, aniso, window);
    const bool psd_pass = system.h_eff_min_eigenvalue >= -tol;
    const int kernel_dim = h_eff_kernel_dim(system);
    // Aligned interface height in the middle of the window, so the matching
    // height configuration is an element of the basis.
    const int aligned_height = (window.n_min + window.n_max) / 2;
    const double residual = interface_residual(system, aniso, aligned_height);
    const bool has_defect = window.size() >= 3;
    const double defect = has_defect ? shift_commutator_defect(system) : 0.0;

    JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    echo_config(w, config, tol);
    w.key("results").begin_object();
    w.key("n_chains").value(system.n_chains);
    w.key("chain_length").value(system.chain_length);
    w.key("window").begin_array();
    w.value(window.n_min);
    w.value(window.n_max);
    w.end_array();
    w.key("twice_s").value(spin.twice_s);
    w.key("delta").value(config.delta);
    w.key("height_configs").begin_array();
    for (const auto& c : system.height_configs) {
        w.begin_array();
        for (int n : c) w.value(n);
        w.end_array();
    }
    w.end_array();
    w.key("basis_norms").begin_array();
    for (Eigen::Index i = 0; i < system.basis_norms.size(); ++i)
        w.value(system.basis_norms[i]);
    w.end_array();
    write_matrix(w, "gram", system.gram);
    write_matrix(w, "m_raw", system.m_raw);
    write_matrix(w, "h_eff", system.h_eff);
    w.key("summary").begin_object();
    w.key("h_eff_kernel_dim").value(kernel_dim);
    w.key("h_eff_min_eigenvalue").value(system.h_eff_min_eigenvalue);
    w.key("psd_pass").value(psd_pass);
    w.key("gram_condition_number").value(system.gram_condition);
    w.key("gram_warning").value(system.gram_warning);
    if (has_defect)
        w.key("shift_defect").value(defect);
    else
        w.key("shift_defect").null();
    w.key("interface_residual").value(residual);
    w.end_object();
    w.end_object();
    w.end_object();

    Report report;
    report.status = psd_pass ? 0 : 1;
    report.format = "json";
    report.payload = w.str() + "\n";
    report.summary = "qsos: " + std::to_string(system.height_configs.size()) +
                     " height configs, kernel dim " + std::to_string(kernel_dim) +
                     (psd_pass ? "" : " (PSD FAIL)");
    return report;
}

}  // namespace

Report run_experiment(const RunConfig& config) {
    Report report;
    try {
        if (config.experiment == "verify-kink") return run_verify_kink(config);
        if (config.experiment == "profile") return run_profile(config);
        if (config.experiment == "gap-scan") return run_gap_scan(config);
        if (config.experiment == "qsos") return run_qsos(config);
        if (config.experiment == "interface-2d") return run_interface_2d(config);
        throw ConfigError("unknown experiment '" + config.experiment + "'");
    } catch (const ConfigError& e) {
        report.status = 2;
        report.format = "none";
        report.summary = e.what();
    } catch (const std::invalid_argument& e) {
        report.status = 2;
        report.format = "none";
        report.summary = e.what();
    } catch (const std::length_error& e) {
        report.status = 2;
        report.format = "none";
        report.summary = e.what();
    } catch (const std::exception& e) {
        report.status = 1;
        report.format = "none";
        report.summary = e.what();
    }
    return report;
}

}  // namespace xxz
