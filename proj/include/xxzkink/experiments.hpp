#ifndef XXZKINK_EXPERIMENTS_HPP
#define XXZKINK_EXPERIMENTS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xxz {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat experiment configuration; file keys and CLI flags both map onto it.
struct RunConfig {
    int schema_version = 1;
    std::string experiment;

    int twice_s = 1;
    double delta = 2.0;
    double tol = 0.0;  // 0 → per-experiment default
    int length = 8;
    int width = 2;
    int height = 2;
    std::vector<std::complex<double>> zs;
    std::optional<std::pair<int, int>> window;
    std::uint64_t seed = 1;
    bool strict = false;
    std::string state = "kink";  // kink | antikink
    std::optional<double> boundary_b;
    std::string family = "chain";  // gap-scan: chain | strip
    std::vector<int> sizes;
    std::optional<int> sector_twice_m;
};

extern const std::vector<std::string> kExperiments;

RunConfig make_default_config(const std::string& experiment);

// Applies one key=value assignment; "z" appends to the z list. Throws
// ConfigError on unknown keys or malformed values.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

// key = value lines, '#' comments, blank lines ignored. An experiment key is
// required; it selects the defaults before the remaining keys are applied.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

// "1/2", "3/2", "1", "0.5" -> 2S.
int parse_spin(const std::string& text);

double default_tolerance(const std::string& experiment);

struct Report {
    int status = 0;  // 0 pass, 1 checks failed, 2 invalid configuration
    std::string format;  // "json" | "csv" | "none"
    std::string payload;
    std::string summary;
};

// Validates the configuration and runs the experiment; never throws.
Report run_experiment(const RunConfig& config);

}  // namespace xxz

#endif
