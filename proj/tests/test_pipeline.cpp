#include <doctest.h>

#include <cstdlib>

#include "fppcert/pipeline.hpp"

using namespace fpp;

namespace {

// The report without durations.
Json strip_timing(Json j) {
    for (auto& c : j["checks"]) c.erase("ms");
    return j;
}

const std::vector<std::string> kFast = {"sextic_identities", "automorphism_order3", "z_transport", "lattice_search"};

}  // namespace

TEST_CASE("subcommand table") {
    CHECK(all_check_ids().size() == 13);
    CHECK(checks_for_subcommand("all") == all_check_ids());
    CHECK(checks_for_subcommand("hilbert") == std::vector<std::string>{"hilbert_series", "surface_invariants"});
    CHECK(checks_for_subcommand("sextic").size() == 4);
    CHECK(checks_for_subcommand("curve-c") == std::vector<std::string>{"curve_c"});
    CHECK_THROWS_AS(checks_for_subcommand("nope"), ConfigError);
}

TEST_CASE("configuration errors are raised before running") {
    RunConfig c;
    c.prime = 5;
    CHECK_THROWS_AS(validate_config(c, all_check_ids()), ConfigError);
    CHECK_THROWS_AS(run_checks(c, {"lattice_search"}), ConfigError);
    RunConfig bad_root;
    bad_root.sqrt_minus7 = 17;
    CHECK_THROWS_AS(validate_config(bad_root, {"lattice_search"}), ConfigError);
    RunConfig zero;
    zero.samples = 0;
    CHECK_THROWS_AS(validate_config(zero, {"lattice_search"}), ConfigError);
    RunConfig seventh;
    seventh.prime = 29;
    CHECK_NOTHROW(validate_config(seventh, {"lattice_search"}));
    CHECK_THROWS_AS(validate_config(seventh, {"z_transport"}), ConfigError);
    CHECK_THROWS_AS(validate_config(RunConfig{}, {"bogus"}), ConfigError);
}

TEST_CASE("FPPCERT_THREADS caps the worker count") {
    setenv("FPPCERT_THREADS", "1", 1);
    CHECK(worker_threads_from_env() == 1);
    setenv("FPPCERT_THREADS", "0", 1);
    CHECK_THROWS_AS(worker_threads_from_env(), ConfigError);
    setenv("FPPCERT_THREADS", "3x", 1);
    CHECK_THROWS_AS(worker_threads_from_env(), ConfigError);
    unsetenv("FPPCERT_THREADS");
    CHECK(worker_threads_from_env() >= 1);
}

TEST_CASE("meta records the configuration and the automatic root") {
    RunConfig c;
    Json m = report_meta(c);
    CHECK(m["prime"] == 263);
    CHECK(m["sqrt_minus7"] == 16);
    CHECK(m["sqrt_minus7_source"] == "auto");
    CHECK(m["seed"] == 42);
    CHECK(m["dataset_sha256"].get<std::string>().size() == 64);
    c.conjugate = true;
    CHECK(report_meta(c)["dataset_sha256"] != m["dataset_sha256"]);
}

TEST_CASE("reports are identical across runs and thread counts") {
    RunConfig one;
    one.threads = 1;
    RunConfig four;
    four.threads = 4;
    CertReport a = run_checks(one, kFast);
    CertReport b = run_checks(four, kFast);
    CHECK(a.overall_pass());
    REQUIRE(a.checks.size() == kFast.size());
    for (std::size_t i = 0; i < kFast.size(); ++i) CHECK(a.checks[i].id == kFast[i]);
    CHECK(strip_timing(a.to_json()).dump() == strip_timing(b.to_json()).dump());
}

TEST_CASE("report schema") {
    CertReport r = run_checks(RunConfig{}, {"lattice_search"});
    Json j = r.to_json();
    CHECK(j["meta"]["overall"] == "pass");
    auto& c = j["checks"][0];
    for (auto key : {"id", "status", "observed", "expected", "ms"}) CHECK(c.contains(key));
    CHECK(c["status"] == "pass");

    CertReport failing;
    CheckRecord bad;
    bad.status = Status::Fail;
    CheckRecord skipped;
    failing.checks = {skipped};
    CHECK(failing.overall_pass());
    failing.checks.push_back(bad);
    CHECK_FALSE(failing.overall_pass());
}

TEST_CASE("timed_check converts exceptions into records") {
    auto r = timed_check("x", []() -> CheckRecord { throw BudgetExceeded("pairs"); });
    CHECK(r.status == Status::Skip);
    CHECK(r.observed["skip"] == "budget");
    auto f = timed_check("y", []() -> CheckRecord { throw ExtractionFailed("boom"); });
    CHECK(f.status == Status::Fail);
    CHECK(f.id == "y");
}
