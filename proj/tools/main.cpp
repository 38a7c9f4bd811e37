// Command-line front end for the xxzkink experiments; talks to the library
// exclusively through the C interface.

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xxzkink.h"

namespace {

struct Args {
    std::string config_path;
    std::map<std::string, std::string> values;  // key -> raw value, library-validated
    std::vector<std::string> zs;
    std::string out;
    bool strict = false;
};

void add_common_options(CLI::App* cmd, Args& args) {
    cmd->add_option("--config", args.config_path, "configuration file (key = value lines)");
    const auto bind = [cmd, &args](const std::string& flag, const std::string& key,
                                   const std::string& help) {
        cmd->add_option_function<std::string>(
            flag, [&args, key](const std::string& v) { args.values[key] = v; }, help);
    };
    bind("--spin", "spin", "spin S, e.g. 1/2, 1, 3/2");
    bind("--delta", "delta", "anisotropy Δ >= 1");
    bind("--length", "length", "chain length");
    bind("--width", "width", "lattice width / number of zig-zag chains");
    bind("--height", "height", "lattice height");
    bind("--window", "window", "height window MIN:MAX");
    bind("--tol", "tol", "tolerance override");
    bind("--seed", "seed", "seed for solver start vectors");
    bind("--state", "state", "kink or antikink");
    bind("--boundary-b", "boundary_b", "raw boundary field override");
    bind("--family", "family", "gap-scan family: chain or strip");
    bind("--sizes", "sizes", "gap-scan sizes, comma separated");
    bind("--sector", "sector_twice_m", "sector override as 2M");
    cmd->add_option("--z", args.zs, "state parameter z (repeatable), e.g. 1, 0.5+0.25i");
    cmd->add_option("--out", args.out, "output path (stdout when omitted)");
    cmd->add_flag("--strict", args.strict, "fail on unconverged solver rows");
}

struct ConfigDeleter {
    void operator()(xxz_config* c) const { xxz_config_destroy(c); }
};
struct ReportDeleter {
    void operator()(xxz_report* r) const { xxz_report_destroy(r); }
};

int run_experiment(const std::string& name, const Args& args) {
    std::unique_ptr<xxz_config, ConfigDeleter> config(
        args.config_path.empty() ? xxz_config_create(name.c_str())
                                 : xxz_config_load(args.config_path.c_str()));
    if (!config) {
        std::fprintf(stderr, "error: %s\n", xxz_last_error());
        return XXZ_STATUS_INVALID_CONFIG;
    }
    if (xxz_config_set(config.get(), "experiment", name.c_str()) != 0) {
        std::fprintf(stderr, "error: %s\n", xxz_last_error());
        return XXZ_STATUS_INVALID_CONFIG;
    }
    for (const auto& [key, value] : args.values) {
        if (xxz_config_set(config.get(), key.c_str(), value.c_str()) != 0) {
            std::fprintf(stderr, "error: %s\n", xxz_last_error());
            return XXZ_STATUS_INVALID_CONFIG;
        }
    }
    if (!args.zs.empty()) {
        xxz_config_clear_z(config.get());
        for (const std::string& z : args.zs) {
            if (xxz_config_set(config.get(), "z", z.c_str()) != 0) {
                std::fprintf(stderr, "error: %s\n", xxz_last_error());
                return XXZ_STATUS_INVALID_CONFIG;
            }
        }
    }
    if (args.strict) xxz_config_set(config.get(), "strict", "true");

    std::unique_ptr<xxz_report, ReportDeleter> report(xxz_run(config.get()));
    if (!report) {
        std::fprintf(stderr, "error: %s\n", xxz_last_error());
        return XXZ_STATUS_INVALID_CONFIG;
    }

    const std::string format = xxz_report_format(report.get());
    if (format != "none") {
        if (args.out.empty()) {
            std::fputs(xxz_report_payload(report.get()), stdout);
        } else if (xxz_report_write(report.get(), args.out.c_str()) != 0) {
            std::fprintf(stderr, "error: %s\n", xxz_last_error());
            return XXZ_STATUS_CHECK_FAILED;
        }
    }
    std::fprintf(stderr, "%s\n", xxz_report_summary(report.get()));
    return xxz_report_status(report.get());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"xxzkink: kink and interface states of the spin-S XXZ ferromagnet"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> experiments = {
        {"verify-kink", "check that kink product states are zero-energy states of the chain"},
        {"profile", "magnetization profile of a kink state, with tanh fit for S=1/2"},
        {"gap-scan", "spectral gaps per sector across system sizes"},
        {"qsos", "build the projected solid-on-solid effective Hamiltonian"},
        {"interface-2d", "check the 2D 111-interface zero-energy identity"},
    };

    std::map<std::string, Args> args;
    for (const auto& [name, help] : experiments) add_common_options(app.add_subcommand(name, help), args[name]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return XXZ_STATUS_INVALID_CONFIG;
    }

    for (const auto& [name, help] : experiments) {
        if (app.got_subcommand(name)) return run_experiment(name, args[name]);
    }
    return XXZ_STATUS_INVALID_CONFIG;
}
