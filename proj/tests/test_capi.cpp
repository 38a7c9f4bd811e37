#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "xxzkink.h"

using nlohmann::json;

TEST_CASE("version and error state") {
    CHECK(std::string(xxz_version()) == "1.0.0");
    CHECK(xxz_last_error() != nullptr);
}

TEST_CASE("config lifecycle and validation errors") {
    CHECK(xxz_config_create("bogus") == nullptr);
    CHECK(std::string(xxz_last_error()).find("unknown experiment") != std::string::npos);

    xxz_config* config = xxz_config_create("verify-kink");
    REQUIRE(config != nullptr);
    CHECK(xxz_config_set(config, "delta", "2.5") == 0);
    CHECK(xxz_config_set(config, "spin", "1/2") == 0);
    CHECK(xxz_config_set(config, "nonsense", "1") == -1);
    CHECK(std::string(xxz_last_error()).find("unknown configuration key") != std::string::npos);
    CHECK(xxz_config_set(config, "delta", "banana") == -1);
    xxz_config_destroy(config);
    xxz_config_destroy(nullptr);  // tolerated
}

TEST_CASE("run an experiment through the C interface") {
    xxz_config* config = xxz_config_create("verify-kink");
    REQUIRE(config != nullptr);
    CHECK(xxz_config_set(config, "length", "6") == 0);
    CHECK(xxz_config_clear_z(config) == 0);
    CHECK(xxz_config_add_z(config, 1.0, 0.0) == 0);
    CHECK(xxz_config_add_z(config, 0.5, 0.5) == 0);

    xxz_report* report = xxz_run(config);
    REQUIRE(report != nullptr);
    CHECK(xxz_report_status(report) == XXZ_STATUS_OK);
    CHECK(std::string(xxz_report_format(report)) == "json");
    const json parsed = json::parse(xxz_report_payload(report));
    CHECK(parsed["results"]["cases"].size() == 2);
    CHECK(std::string(xxz_report_summary(report)).find("verify-kink") != std::string::npos);

    const char* path = "/tmp/xxzkink_capi_report.json";
    CHECK(xxz_report_write(report, path) == 0);
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == xxz_report_payload(report));
    std::remove(path);

    xxz_report_destroy(report);
    xxz_config_destroy(config);
}

TEST_CASE("invalid configuration surfaces as report status 2") {
    xxz_config* config = xxz_config_create("verify-kink");
    REQUIRE(config != nullptr);
    // delta below 1 passes key parsing and fails at run validation.
    CHECK(xxz_config_set(config, "delta", "0.5") == 0);
    xxz_report* report = xxz_run(config);
    REQUIRE(report != nullptr);
    CHECK(xxz_report_status(report) == XXZ_STATUS_INVALID_CONFIG);
    CHECK(std::string(xxz_report_format(report)) == "none");
    xxz_report_destroy(report);
    xxz_config_destroy(config);
}

TEST_CASE("config file loading through the C interface") {
    const char* path = "/tmp/xxzkink_capi_config.cfg";
    {
        std::ofstream out(path);
        out << "experiment = profile\nlength = 8\ndelta = 2\n";
    }
    xxz_config* config = xxz_config_load(path);
    REQUIRE(config != nullptr);
    xxz_report* report = xxz_run(config);
    REQUIRE(report != nullptr);
    CHECK(xxz_report_status(report) == XXZ_STATUS_OK);
    CHECK(std::string(xxz_report_format(report)) == "csv");
    xxz_report_destroy(report);
    xxz_config_destroy(config);
    std::remove(path);

    CHECK(xxz_config_load("/nonexistent/path.cfg") == nullptr);
}

TEST_CASE("direct numeric entry points") {
    double q = 0.0;
    CHECK(xxz_q_from_delta(2.0, &q) == 0);
    CHECK(std::abs(q - (2.0 - std::sqrt(3.0))) < 1e-14);
    CHECK(xxz_q_from_delta(0.5, &q) == -1);

    double profile[8];
    CHECK(xxz_kink_profile(1, 2.0, 8, 1.0, 0.0, profile) == 0);
    const double xi = 1.0 / std::log(1.0 / (2.0 - std::sqrt(3.0)));
    for (int i = 0; i < 8; ++i) {
        const double x = -4 + i;  // centered chain coordinates
        CHECK(std::abs(profile[i] - 0.5 * std::tanh(x / xi)) < 1e-12);
    }
    CHECK(xxz_kink_profile(0, 2.0, 8, 1.0, 0.0, profile) == -1);  // bad spin
}
