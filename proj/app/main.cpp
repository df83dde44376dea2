// fppcert: run the certification checks and write a JSON report.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fppcert/dataset.hpp"
#include "fppcert/lattice.hpp"
#include "fppcert/pipeline.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fpp::ConfigError("cannot write " + path);
    out << text;
    if (!out) throw fpp::ConfigError("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of the 84-cubic surface and its sextic model"};
    app.require_subcommand(1);
    app.fallthrough();

    fpp::RunConfig cfg;
    std::optional<unsigned> root;
    std::string transcript_path, csv_path;
    app.add_option("--prime", cfg.prime, "Prime for modular computations")->capture_default_str();
    app.add_option("--sqrt-minus7", root, "Residue r with r^2 = -7 mod p (smallest one when omitted)");
    app.add_option("--seed", cfg.seed, "Seed for point sampling")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Number of sampled surface points")->capture_default_str();
    app.add_option("--report", cfg.report_path, "Write the JSON report here instead of stdout");
    app.add_flag("--emit-conjugate", cfg.conjugate, "Apply w -> -w to the dataset before running");
    app.add_option("--pair-budget", cfg.pair_budget, "S-pair cap per Groebner run (negative: none)");
    app.add_option("--time-budget", cfg.time_budget_s, "Seconds per Groebner run (negative: none)");
    app.add_option("--transcript", transcript_path, "Write sampled points as JSON lines");
    app.add_option("--lattice-csv", csv_path, "Write every enumerated lattice configuration as CSV");

    auto* eq_cmd = app.add_subcommand("equations", "Print the 84 cubics in canonical form");
    for (const char* name : {"hilbert", "smoothness", "invariance", "curve-c", "sextic", "automorphism",
                             "ztransport", "lattice", "all"})
        app.add_subcommand(name, std::string("Run the ") + name + " checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (root) cfg.sqrt_minus7 = *root;
        cfg.threads = fpp::worker_threads_from_env();

        if (eq_cmd->parsed()) {
            cfg.field();
            auto eqs = cfg.conjugate ? fpp::conjugate_all(fpp::fpp_equations()) : fpp::fpp_equations();
            auto s = fpp::canonical_serialize(eqs);
            if (cfg.report_path.empty())
                std::cout << s.text;
            else
                write_file(cfg.report_path, s.text);
            std::cerr << "sha256 " << s.sha256 << "\n";
            return kExitPass;
        }

        const std::string name = app.get_subcommands().front()->get_name();
        auto ids = fpp::checks_for_subcommand(name);
        fpp::validate_config(cfg, ids);

        if (!transcript_path.empty()) {
            auto pts = fpp::sample_surface_points(fpp::sampling_params(cfg));
            write_file(transcript_path, fpp::surface_transcript(pts));
        }
        if (!csv_path.empty()) write_file(csv_path, fpp::lattice_csv(fpp::enumerate_configurations()));

        fpp::CertReport rep = fpp::run_checks(cfg, ids);
        for (auto& c : rep.checks)
            std::cerr << fpp::status_name(c.status) << "  " << c.id << "  (" << static_cast<long>(c.ms) << " ms)\n";
        std::string json = rep.to_json().dump(2) + "\n";
        if (cfg.report_path.empty())
            std::cout << json;
        else
            write_file(cfg.report_path, json);
        std::cerr << "overall " << (rep.overall_pass() ? "pass" : "fail") << "\n";
        return rep.overall_pass() ? kExitPass : kExitFail;
    } catch (const fpp::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
