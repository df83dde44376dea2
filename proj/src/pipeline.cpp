#include "fppcert/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "fppcert/dataset.hpp"
#include "fppcert/lattice.hpp"

#ifndef FPPCERT_VERSION
#define FPPCERT_VERSION "0.0.0"
#endif

namespace fpp {

const char* toolkit_version() { return FPPCERT_VERSION; }

namespace {

using Runner = std::function<CheckRecord(CertContext&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"hilbert_series", [](CertContext& c) { return check_hilbert_series(c); }},
        {"surface_invariants", [](CertContext& c) { return check_surface_invariants(c); }},
        {"group_invariance", [](CertContext& c) { return check_group_invariance(c); }},
        {"fixed_points", [](CertContext& c) { return check_fixed_points(c); }},
        {"smoothness", [](CertContext& c) { return check_smoothness(c); }},
        {"curve_c", [](CertContext& c) { return check_curve_c(c); }},
        {"sextic_identities", [](CertContext& c) { return check_sextic_identities(c.config().conjugate); }},
        {"singular_locus", [](CertContext& c) { return check_singular_locus(c.config().conjugate); }},
        {"curve_incidence", [](CertContext& c) { return check_curve_incidence(c.config().conjugate); }},
        {"integral_equations", [](CertContext& c) { return check_integral_equations(c.config().conjugate); }},
        {"automorphism_order3",
         [](CertContext& c) { return check_automorphism_order3(sampling_params(c.config())); }},
        {"z_transport", [](CertContext& c) { return check_z_transport(sampling_params(c.config())); }},
        {"lattice_search", [](CertContext&) { return check_lattice_search(); }},
    };
    return r;
}

const Runner& runner(const std::string& id) {
    for (auto& [name, fn] : registry())
        if (name == id) return fn;
    throw ConfigError("unknown check '" + id + "'");
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (auto& e : registry()) v.push_back(e.first);
        return v;
    }();
    return ids;
}

std::vector<std::string> checks_for_subcommand(const std::string& name) {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"hilbert", {"hilbert_series", "surface_invariants"}},
        {"smoothness", {"fixed_points", "smoothness"}},
        {"invariance", {"group_invariance"}},
        {"curve-c", {"curve_c"}},
        {"sextic", {"sextic_identities", "singular_locus", "curve_incidence", "integral_equations"}},
        {"automorphism", {"automorphism_order3"}},
        {"ztransport", {"z_transport"}},
        {"lattice", {"lattice_search"}},
    };
    if (name == "all") return all_check_ids();
    auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown subcommand '" + name + "'");
    return it->second;
}

int worker_threads_from_env() {
    int hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("FPPCERT_THREADS");
    if (!env || !*env) return hw;
    int cap = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec != std::errc() || ptr != end || cap < 1)
        throw ConfigError(std::string("FPPCERT_THREADS must be a positive integer, got '") + env + "'");
    return std::min(hw, cap);
}

SamplingParams sampling_params(const RunConfig& cfg) {
    SamplingParams P{cfg.field()};
    P.seed = cfg.seed;
    P.samples = cfg.samples;
    P.threads = std::max(1, cfg.threads);
    P.conjugate = cfg.conjugate;
    return P;
}

void validate_config(const RunConfig& cfg, const std::vector<std::string>& ids) {
    cfg.field();
    if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
    if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
    for (auto& id : ids) runner(id);
    bool needs_root = std::find(ids.begin(), ids.end(), "z_transport") != ids.end();
    if (needs_root && (cfg.prime - 1) % 7 == 0)
        throw ConfigError("seventh roots are not unique mod " + std::to_string(cfg.prime));
}

Json report_meta(const RunConfig& cfg) {
    PrimeField F = cfg.field();
    const auto& eqs = cfg.conjugate ? conjugate_all(fpp_equations()) : fpp_equations();
    Json m;
    m["tool"] = "fppcert";
    m["version"] = toolkit_version();
    m["prime"] = cfg.prime;
    m["sqrt_minus7"] = F.sqrt_minus7();
    m["sqrt_minus7_source"] = cfg.sqrt_minus7 ? "given" : "auto";
    m["seed"] = cfg.seed;
    m["samples"] = cfg.samples;
    m["conjugate"] = cfg.conjugate;
    m["dataset_sha256"] = canonical_serialize(eqs).sha256;
    m["pair_budget"] = cfg.pair_budget;
    m["time_budget_s"] = cfg.time_budget_s;
    return m;
}

CertReport run_checks(const RunConfig& cfg, const std::vector<std::string>& ids) {
    validate_config(cfg, ids);
    CertReport rep;
    rep.meta = report_meta(cfg);
    rep.meta["selected"] = ids;
    CertContext ctx(cfg);

    std::vector<CheckRecord> out(ids.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < ids.size();) {
            const Runner& fn = runner(ids[i]);
            out[i] = timed_check(ids[i], [&] { return fn(ctx); });
        }
    };
    const int n = std::min<int>(std::max(1, cfg.threads), static_cast<int>(ids.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    rep.checks = std::move(out);
    return rep;
}

CertReport run_all(const RunConfig& cfg) { return run_checks(cfg, all_check_ids()); }

}  // namespace fpp
