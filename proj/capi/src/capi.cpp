#include "xxzkink.h"

#include <new>
#include <string>

#include "xxzkink/experiments.hpp"
#include "xxzkink/lattice.hpp"
#include "xxzkink/spin.hpp"
#include "xxzkink/states.hpp"
#include "xxzkink/text_io.hpp"

struct xxz_config {
    xxz::RunConfig config;
};

struct xxz_report {
    xxz::Report report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename F>
int guarded(F&& f) {
    try {
        f();
        return 0;
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    } catch (...) {
        set_error("unknown error");
        return -1;
    }
}

}  // namespace

extern "C" {

const char* xxz_version(void) { return "1.0.0"; }

const char* xxz_last_error(void) { return g_last_error.c_str(); }

xxz_config* xxz_config_create(const char* experiment) {
    if (!experiment) {
        set_error("experiment name is null");
        return nullptr;
    }
    try {
        auto* handle = new xxz_config{xxz::make_default_config(experiment)};
        return handle;
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

xxz_config* xxz_config_load(const char* path) {
    if (!path) {
        set_error("config path is null");
        return nullptr;
    }
    try {
        auto* handle = new xxz_config{xxz::load_config_file(path)};
        return handle;
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

void xxz_config_destroy(xxz_config* config) { delete config; }

int xxz_config_set(xxz_config* config, const char* key, const char* value) {
    if (!config || !key || !value) {
        set_error("null argument");
        return -1;
    }
    return guarded([&] { xxz::set_config_value(config->config, key, value); });
}

int xxz_config_add_z(xxz_config* config, double re, double im) {
    if (!config) {
        set_error("null config");
        return -1;
    }
    config->config.zs.push_back({re, im});
    return 0;
}

int xxz_config_clear_z(xxz_config* config) {
    if (!config) {
        set_error("null config");
        return -1;
    }
    config->config.zs.clear();
    return 0;
}

xxz_report* xxz_run(const xxz_config* config) {
    if (!config) {
        set_error("null config");
        return nullptr;
    }
    try {
        auto* handle = new xxz_report{xxz::run_experiment(config->config)};
        if (handle->report.status != 0) set_error(handle->report.summary);
        return handle;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return nullptr;
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

void xxz_report_destroy(xxz_report* report) { delete report; }

int xxz_report_status(const xxz_report* report) {
    return report ? report->report.status : XXZ_STATUS_INVALID_CONFIG;
}

const char* xxz_report_format(const xxz_report* report) {
    return report ? report->report.format.c_str() : "none";
}

const char* xxz_report_payload(const xxz_report* report) {
    return report ? report->report.payload.c_str() : "";
}

const char* xxz_report_summary(const xxz_report* report) {
    return report ? report->report.summary.c_str() : "";
}

int xxz_report_write(const xxz_report* report, const char* path) {
    if (!report || !path) {
        set_error("null argument");
        return -1;
    }
    return guarded([&] { xxz::atomic_write(path, report->report.payload); });
}

int xxz_q_from_delta(double delta, double* q_out) {
    if (!q_out) {
        set_error("null output");
        return -1;
    }
    return guarded([&] { *q_out = xxz::q_from_delta(delta).q; });
}

int xxz_kink_profile(int twice_s, double delta, int n_sites, double z_re, double z_im,
                     double* out) {
    if (!out) {
        set_error("null output");
        return -1;
    }
    return guarded([&] {
        const xxz::SpinQuantum spin = xxz::SpinQuantum::from_twice(twice_s);
        const xxz::Anisotropy aniso = xxz::q_from_delta(delta);
        const xxz::Chain chain = xxz::Chain::centered(n_sites);
        const std::vector<double> profile = xxz::magnetization_profile(
            xxz::kink_state({z_re, z_im}, chain, spin, aniso));
        for (int i = 0; i < n_sites; ++i) out[i] = profile[static_cast<std::size_t>(i)];
    });
}

}  // extern "C"
