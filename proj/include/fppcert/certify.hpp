#pragma once
// Certification of the surface in P^9: Hilbert data, group invariance, fixed
// points, smoothness, and the curve ideal. Each check yields one record.
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fppcert/groebner.hpp"
#include "fppcert/hilbert.hpp"
#include "fppcert/regularity.hpp"
#include "fppcert/report.hpp"

namespace fpp {

struct RunConfig {
    u32 prime = 263;
    std::optional<u32> sqrt_minus7;  // smallest root when unset
    std::uint64_t seed = 42;
    int samples = 100;
    long pair_budget = -1;       // per Groebner run; negative = unlimited
    double time_budget_s = -1;   // per Groebner run; negative = unlimited
    bool conjugate = false;      // apply w -> -w to the dataset first
    int threads = 1;
    std::string report_path;

    // Throws ConfigError on an unusable configuration.
    PrimeField field() const;
    GroebnerOptions groebner_options() const;
};

// Shared, lazily computed inputs for the checks of one run.
class CertContext {
public:
    explicit CertContext(RunConfig cfg);

    const RunConfig& config() const { return cfg_; }
    const PrimeField& field() const { return F_; }
    // The 84 cubics over Q(w), conjugated when configured.
    const std::vector<QPoly>& equations() const { return eqs_; }
    std::vector<FpPoly> equations_mod_p() const;
    const GroebnerBasis<FpDomain>& surface_basis();
    FreeAlgebraModel& algebra_model();
    // The three selected 7x7 Jacobian minors, reduced modulo the surface ideal.
    const std::vector<FpPoly>& reduced_minors();

private:
    RunConfig cfg_;
    PrimeField F_;
    std::vector<QPoly> eqs_;
    std::mutex mu_;
    std::unique_ptr<GroebnerBasis<FpDomain>> gb_;
    std::unique_ptr<FreeAlgebraModel> model_;
    std::vector<FpPoly> minors_;
};

// HF(k) = 18k^2 - 9k + 1, numerator, oracle for k <= 8, (D^2, D.K, chi), and a
// second-prime spot check.
CheckRecord check_hilbert_series(CertContext& ctx);
CheckRecord check_group_invariance(CertContext& ctx);
CheckRecord check_fixed_points(CertContext& ctx);
CheckRecord check_smoothness(CertContext& ctx);
CheckRecord check_curve_c(CertContext& ctx);
// (D^2, D.K, chi) read off the Hilbert polynomial.
CheckRecord check_surface_invariants(CertContext& ctx);

// (D^2, D.K, chi) from HP(k) = chi + (D^2 k^2 - (D.K) k) / 2.
struct SurfaceInvariants {
    mpq_class d_squared, d_dot_k, chi;
};
SurfaceInvariants invariants_from_hp(const HilbertPolynomialRepr& hp);

// Hilbert polynomial of the ideal generated by `gens` over GF(p).
HilbertPolynomialRepr hilbert_polynomial_of(const std::vector<FpPoly>& gens, const GroebnerOptions& opts = {});

}  // namespace fpp
