// Acceptance run: every criterion as one pass/fail line, then the property floor.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include "fppcert/dataset.hpp"
#include "fppcert/groebner.hpp"
#include "fppcert/hilbert.hpp"
#include "fppcert/pipeline.hpp"

using namespace fpp;

namespace {

bool field_axioms() {
    std::mt19937_64 rng(101);
    PrimeField F(263, 16);
    std::uniform_int_distribution<u32> pick(0, 262);
    for (int t = 0; t < 20000; ++t) {
        u32 a = pick(rng), b = pick(rng), c = pick(rng);
        if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) return false;
        if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) return false;
        if (F.add(a, F.neg(a)) != 0 || (a && F.mul(a, F.inv(a)) != 1)) return false;
    }
    std::uniform_int_distribution<long> d(-40, 40);
    for (int t = 0; t < 500; ++t) {
        QuadExtScalar x(mpq_class(d(rng), 1 + t % 7), mpq_class(d(rng), 3)), y(d(rng)), z(mpq_class(d(rng), 5), 1);
        if ((x + y) * z != x * z + y * z) return false;
        if (!x.is_zero() && x * x.inv() != QuadExtScalar(1)) return false;
    }
    return true;
}

std::vector<FpPoly> random_system(std::mt19937_64& rng, const VarsPtr& X, const PrimeField& F) {
    std::uniform_int_distribution<int> v(0, 3), deg(0, 3);
    std::uniform_int_distribution<u32> c(1, F.modulus() - 1);
    std::vector<FpPoly> out;
    for (int k = 0; k < 3; ++k) {
        std::vector<FpPoly::Term> ts;
        for (int j = 0; j < 4; ++j) {
            Monomial m;
            for (int e = deg(rng); e > 0; --e) m = m * Monomial::var(v(rng));
            ts.push_back({m, c(rng)});
        }
        out.push_back(FpPoly::from_terms(FpDomain(F), X, ts));
    }
    return out;
}

bool gb_idempotence_and_morphism(bool* morphism) {
    std::mt19937_64 rng(102);
    PrimeField F(263, 16);
    auto X = indexed_vars("x", 4);
    bool idem = true, morph = true;
    for (int t = 0; t < 20; ++t) {
        auto B = buchberger(random_system(rng, X, F));
        auto B2 = buchberger(B.gens);
        idem &= B2.gens == B.gens;
        auto fg = random_system(rng, X, F);
        morph &= normal_form(fg[0] * fg[1], B) ==
                 normal_form(normal_form(fg[0], B) * normal_form(fg[1], B), B);
    }
    *morphism = morph;
    return idem;
}

bool hilbert_vs_oracle() {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> count(1, 6), ex(0, 3);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + t % 6;
        std::vector<Monomial> gens;
        for (int j = count(rng); j > 0; --j) {
            std::vector<int> e(n);
            int s = 0;
            for (auto& x : e) s += (x = ex(rng));
            if (!s) e[0] = 1;
            gens.push_back(Monomial::from_exponents(e));
        }
        auto N = hilbert_numerator(gens, n);
        for (int k = 0; k <= 8; ++k)
            if (hilbert_function(N, k) != hilbert_function_oracle(gens, n, k)) return false;
    }
    return true;
}

bool euler_identity() {
    const auto& V = u_vars();
    for (auto& f : fpp_equations()) {
        QPoly e(QDomain{}, V);
        for (int i = 0; i < 10; ++i) e += QPoly::variable(QDomain{}, V, i) * f.diff(i);
        if (e != f.scale(QuadExtScalar(3))) return false;
    }
    return true;
}

}  // namespace

int main() {
    RunConfig cfg;
    cfg.sqrt_minus7 = 16;
    cfg.threads = worker_threads_from_env();
    CertReport rep = run_all(cfg);
    std::map<std::string, const CheckRecord*> by_id;
    for (auto& c : rep.checks) by_id[c.id] = &c;

    auto passed = [&](std::initializer_list<const char*> ids, double max_ms, double* total) {
        bool ok = true;
        *total = 0;
        for (auto id : ids) {
            ok &= by_id.at(id)->status == Status::Pass;
            *total += by_id.at(id)->ms;
        }
        return ok && (max_ms <= 0 || *total <= max_ms);
    };
    struct Criterion {
        int n;
        const char* title;
        std::initializer_list<const char*> ids;
        double max_ms;
    };
    const Criterion crit[] = {
        {1, "Hilbert series 18k^2-9k+1 with oracle cross-check", {"hilbert_series"}, 600e3},
        {2, "smoothness chain 504k-3654 -> 7056 -> 0", {"smoothness"}, 3600e3},
        {3, "(D^2, D.K, chi) = (36, 18, 1)", {"surface_invariants"}, 0},
        {4, "group action: weights, g3-stable span, orbit identities", {"group_invariance"}, 0},
        {5, "fixed points and guarding minors", {"fixed_points"}, 0},
        {6, "curve C: degree 18 and I_C^2 in <U0>", {"curve_c"}, 0},
        {7, "sextic symbolic suite", {"sextic_identities", "singular_locus", "curve_incidence", "integral_equations"}, 60e3},
        {8, "automorphism and z-transport suite", {"automorphism_order3", "z_transport"}, 0},
        {9, "lattice search: unique survivor of rank 19", {"lattice_search"}, 1e3},
    };
    bool all_ok = true;
    for (auto& c : crit) {
        double ms = 0;
        bool ok = passed(c.ids, c.max_ms, &ms);
        all_ok &= ok;
        std::printf("criterion %d  %s  %s  (%.0f ms)\n", c.n, ok ? "PASS" : "FAIL", c.title, ms);
    }

    bool morphism = false;
    const std::pair<const char*, bool> floor[] = {
        {"field axioms", field_axioms()},
        {"GB idempotence", gb_idempotence_and_morphism(&morphism)},
        {"normal-form ring morphism", morphism},
        {"Hilbert numerator vs oracle (50 ideals)", hilbert_vs_oracle()},
        {"Euler identity on 84 cubics", euler_identity()},
    };
    bool floor_ok = true;
    for (auto& [name, ok] : floor) floor_ok &= ok;
    std::printf("property floor  %s", floor_ok ? "PASS" : "FAIL");
    for (auto& [name, ok] : floor) std::printf("  [%s: %s]", name, ok ? "ok" : "FAIL");
    std::printf("\n");
    all_ok &= floor_ok;
    std::printf("overall  %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
