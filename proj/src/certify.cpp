#include "fppcert/certify.hpp"

#include <algorithm>
#include <unordered_map>

#include "fppcert/dataset.hpp"
#include "fppcert/linalg.hpp"

namespace fpp {

PrimeField RunConfig::field() const {
    if (prime < 3 || !is_prime(prime)) throw ConfigError(std::to_string(prime) + " is not an odd prime");
    if (prime == 7) throw ConfigError("p = 7 divides the discriminant");
    if (sqrt_minus7) {
        u32 r = *sqrt_minus7 % prime;
        if ((u64)r * r % prime != (prime - 7 % prime) % prime)
            throw ConfigError(std::to_string(*sqrt_minus7) + "^2 is not -7 mod " + std::to_string(prime));
        return PrimeField(prime, r);
    }
    auto r = find_sqrt_minus7(prime);
    if (!r) throw ConfigError("-7 is not a square mod " + std::to_string(prime));
    return PrimeField(prime, *r);
}

GroebnerOptions RunConfig::groebner_options() const {
    GroebnerOptions o;
    o.pair_budget = pair_budget;
    o.time_budget_s = time_budget_s;
    return o;
}

CertContext::CertContext(RunConfig cfg) : cfg_(std::move(cfg)), F_(cfg_.field()) {
    eqs_ = cfg_.conjugate ? conjugate_all(fpp_equations()) : fpp_equations();
}

std::vector<FpPoly> CertContext::equations_mod_p() const {
    std::vector<FpPoly> out;
    for (auto& e : eqs_) out.push_back(reduce_poly(e, F_));
    return out;
}

const GroebnerBasis<FpDomain>& CertContext::surface_basis() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!gb_) gb_ = std::make_unique<GroebnerBasis<FpDomain>>(buchberger(equations_mod_p(), cfg_.groebner_options()));
    return *gb_;
}

FreeAlgebraModel& CertContext::algebra_model() {
    const auto& gb = surface_basis();
    std::lock_guard<std::mutex> lock(mu_);
    if (!model_) model_ = std::make_unique<FreeAlgebraModel>(gb, 7);
    return *model_;
}

const std::vector<FpPoly>& CertContext::reduced_minors() {
    FreeAlgebraModel& model = algebra_model();
    std::lock_guard<std::mutex> lock(mu_);
    if (minors_.empty()) {
        auto J = jacobian(equations_mod_p());
        for (auto& sel : minor_selections()) {
            std::vector<int> rows, cols(sel.cols.begin(), sel.cols.end());
            for (int r : sel.rows) rows.push_back(r - 1);
            minors_.push_back(
                minor_determinant(J, rows, cols, [&](const FpPoly& p) { return model.normal_form(p); }));
        }
    }
    return minors_;
}

SurfaceInvariants invariants_from_hp(const HilbertPolynomialRepr& hp) {
    auto c = [&](std::size_t i) { return i < hp.coeffs.size() ? hp.coeffs[i] : mpq_class(0); };
    SurfaceInvariants s;
    s.d_squared = 2 * c(2);
    s.d_dot_k = -2 * c(1);
    s.chi = c(0);
    return s;
}

HilbertPolynomialRepr hilbert_polynomial_of(const std::vector<FpPoly>& gens, const GroebnerOptions& opts) {
    auto gb = buchberger(gens, opts);
    return hilbert_polynomial(hilbert_numerator(gb.leading_monomials(), gens.front().nvars()));
}

namespace {

Json numerator_json(const std::vector<mpz_class>& c) {
    Json j = Json::array();
    for (auto& x : c) j.push_back(x.get_str());
    return j;
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

// Row space of the degree-3 coefficient vectors.
template <class D>
Matrix<D> cubic_matrix(const D& dom, const std::vector<Polynomial<D>>& polys) {
    auto monos = monomials_of_degree(10, 3);
    std::unordered_map<Monomial, int, MonomialHash> idx;
    for (int i = 0; i < static_cast<int>(monos.size()); ++i) idx.emplace(monos[i], i);
    Matrix<D> M(dom, static_cast<int>(polys.size()), static_cast<int>(monos.size()));
    for (int r = 0; r < static_cast<int>(polys.size()); ++r)
        for (auto& t : polys[r].terms()) {
            auto it = idx.find(t.m);
            if (it == idx.end()) throw ConstraintViolation("not a cubic form");
            M.at(r, it->second) = t.c;
        }
    return M;
}

// Numerator (1-t)^7 (1 + 7t + 28t^2).
std::vector<mpz_class> expected_surface_numerator() {
    std::vector<mpz_class> n{1, 7, 28};
    for (int i = 0; i < 7; ++i) n = poly_mul(n, {1, -1});
    return n;
}

}  // namespace

CheckRecord check_hilbert_series(CertContext& ctx) {
    return timed_check("hilbert_series", [&] {
        CheckRecord r;
        const auto& gb = ctx.surface_basis();
        auto lead = gb.leading_monomials();
        auto N = hilbert_numerator(lead, 10);
        auto hp = hilbert_polynomial(N);
        bool ok = true;

        auto want = expected_surface_numerator();
        std::vector<mpz_class> got = N.coeffs;
        while (!got.empty() && got.back() == 0) got.pop_back();
        r.observed["numerator"] = numerator_json(got);
        r.expected["numerator"] = numerator_json(want);
        ok &= got == want;

        r.observed["reduced_numerator"] = numerator_json(hp.reduced_numerator);
        r.expected["reduced_numerator"] = Json::array({"1", "7", "28"});
        r.observed["hilbert_polynomial"] = hp.to_string();
        r.expected["hilbert_polynomial"] = "18k^2-9k+1";
        ok &= hp.equals({1, -9, 18});
        r.observed["k0"] = hp.k0;
        r.expected["k0_at_most"] = 0;
        ok &= hp.k0 <= 0;

        // Brute-force standard monomial counts.
        Json oracle = Json::array();
        bool oracle_ok = true;
        for (int k = 0; k <= 8; ++k) {
            long brute = hilbert_function_oracle(lead, 10, k);
            mpz_class series = hilbert_function(N, k);
            long formula = 18L * k * k - 9L * k + 1;
            oracle.push_back({{"k", k}, {"oracle", brute}, {"series", series.get_si()}});
            oracle_ok &= series == brute && brute == formula;
        }
        r.observed["hf_vs_oracle"] = oracle;
        r.observed["hf_oracle_agrees"] = oracle_ok;
        r.expected["hf_oracle_agrees"] = true;
        ok &= oracle_ok;

        // The cubics are independent in degree 3.
        long hf3 = hilbert_function(N, 3).get_si();
        r.observed["cubic_span_dim"] = 220 - hf3;
        r.expected["cubic_span_dim"] = 84;
        ok &= hf3 == 136;

        r.observed["basis_size"] = gb.gens.size();
        r.observed["basis_ms"] = gb.stats.ms;

        // Prime independence.
        u32 other = ctx.field().modulus() == 337 ? 263 : 337;
        PrimeField G = PrimeField::with_auto_root(other);
        std::vector<FpPoly> eqs;
        for (auto& e : ctx.equations()) eqs.push_back(reduce_poly(e, G));
        auto hp2 = hilbert_polynomial_of(eqs, ctx.config().groebner_options());
        r.observed["second_prime"] = {{"p", other}, {"sqrt_minus7", G.sqrt_minus7()}, {"hilbert_polynomial", hp2.to_string()}};
        r.expected["second_prime"] = {{"hilbert_polynomial", "18k^2-9k+1"}};
        ok &= hp2.equals({1, -9, 18});

        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_surface_invariants(CertContext& ctx) {
    return timed_check("surface_invariants", [&] {
        CheckRecord r;
        const auto& gb = ctx.surface_basis();
        auto hp = hilbert_polynomial(hilbert_numerator(gb.leading_monomials(), 10));
        auto inv = invariants_from_hp(hp);
        r.observed = {{"D^2", q_str(inv.d_squared)}, {"D.K", q_str(inv.d_dot_k)}, {"chi", q_str(inv.chi)},
                      {"hilbert_polynomial", hp.to_string()}};
        r.expected = {{"D^2", "36"}, {"D.K", "18"}, {"chi", "1"}};
        bool ok = inv.d_squared == 36 && inv.d_dot_k == 18 && inv.chi == 1;
        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_group_invariance(CertContext& ctx) {
    return timed_check("group_invariance", [&] {
        CheckRecord r;
        const auto& eqs = ctx.equations();
        bool ok = true;

        // Each equation is an eigenvector of g7: one weight per equation.
        Json weights = Json::array();
        int mixed = 0, nonzero_first12 = 0;
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            int w = g7_weight_of(eqs[k]);
            weights.push_back(w);
            if (w < 0) ++mixed;
            if (k < 12 && w != 0) ++nonzero_first12;
        }
        r.observed["g7_weights"] = weights;
        r.observed["weight_mixed_equations"] = mixed;
        r.observed["weight_nonzero_among_eq1_12"] = nonzero_first12;
        r.expected["weight_mixed_equations"] = 0;
        r.expected["weight_nonzero_among_eq1_12"] = 0;
        ok &= mixed == 0 && nonzero_first12 == 0;

        // g3 images stay in the span of the 84 cubics, exactly over Q(w).
        std::vector<QPoly> stacked = eqs;
        for (auto& e : eqs) stacked.push_back(apply_g3(e, 1));
        int rank84 = matrix_rank(cubic_matrix(QDomain{}, eqs));
        int rank_all = matrix_rank(cubic_matrix(QDomain{}, stacked));
        r.observed["span_rank"] = rank84;
        r.observed["span_rank_with_g3_images"] = rank_all;
        r.expected["span_rank"] = 84;
        r.expected["span_rank_with_g3_images"] = 84;
        ok &= rank84 == 84 && rank_all == 84;

        // Orbit identities.
        auto same = [&](const QPoly& a, const QPoly& b) { return a == b; };
        Json orbit;
        orbit["eq5=g3(eq4)"] = same(eqs[4], apply_g3(eqs[3], 1));
        orbit["eq6=g3^2(eq4)"] = same(eqs[5], apply_g3(eqs[3], 2));
        orbit["eq8=g3(eq7)"] = same(eqs[7], apply_g3(eqs[6], 1));
        orbit["eq11=g3(eq10)"] = same(eqs[10], apply_g3(eqs[9], 1));
        orbit["eq37=g3(eq13)"] = same(eqs[36], apply_g3(eqs[12], 1));
        orbit["eq61=g3^2(eq13)"] = same(eqs[60], apply_g3(eqs[12], 2));
        orbit["g3(eq61)=eq13"] = same(apply_g3(eqs[60], 1), eqs[12]);
        for (int k = 0; k < 3; ++k)
            orbit["g3(eq" + std::to_string(k + 1) + ")=eq" + std::to_string(k + 1)] = same(apply_g3(eqs[k], 1), eqs[k]);
        bool orbit_ok = true;
        for (auto& [key, v] : orbit.items()) orbit_ok &= v.get<bool>();
        r.observed["orbit_identities"] = orbit;
        r.expected["orbit_identities"] = "all true";
        ok &= orbit_ok;
        r.observed["equation_count"] = eqs.size();
        r.expected["equation_count"] = 84;
        ok &= eqs.size() == 84;

        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_fixed_points(CertContext& ctx) {
    return timed_check("fixed_points", [&] {
        CheckRecord r;
        const auto& eqs = ctx.equations();
        const PrimeField& F = ctx.field();
        bool ok = true;
        auto pts = fixed_points();

        Json vanish = Json::array();
        bool all_vanish = true;
        for (auto& pt : pts) {
            std::vector<QuadExtScalar> q(pt.begin(), pt.end());
            int nonzero = 0;
            for (auto& e : eqs)
                if (!eval_q(e, q).is_zero()) ++nonzero;
            vanish.push_back(nonzero);
            all_vanish &= nonzero == 0;
        }
        r.observed["nonvanishing_equations_per_point"] = vanish;
        r.expected["nonvanishing_equations_per_point"] = Json::array({0, 0, 0});
        ok &= all_vanish;

        // Minor values: the 7x7 Jacobian determinants at each point, exactly and mod p.
        auto sels = minor_selections();
        Json exact = Json::array(), modp = Json::array();
        std::vector<std::vector<bool>> nz(3, std::vector<bool>(3));
        for (int i = 0; i < 3; ++i) {
            Json er = Json::array(), mr = Json::array();
            for (int j = 0; j < 3; ++j) {
                std::vector<QuadExtScalar> q(pts[j].begin(), pts[j].end());
                Matrix<QDomain> M(QDomain{}, 7, 7);
                for (int a = 0; a < 7; ++a)
                    for (int b = 0; b < 7; ++b)
                        M.at(a, b) = eval_q(eqs[sels[i].rows[a] - 1].diff(sels[i].cols[b]), q);
                QuadExtScalar d = determinant(M);
                u32 dp = reduce_to_prime_field(d, F);
                er.push_back(d.to_string());
                mr.push_back(dp);
                nz[i][j] = dp != 0;
            }
            exact.push_back(er);
            modp.push_back(mr);
        }
        r.observed["minor_values_exact"] = exact;
        r.observed["minor_values_mod_p"] = modp;

        // Guards: the listed assignment, else any matching of minors to points.
        Json guards = Json::array();
        bool listed_ok = true;
        for (int i = 0; i < 3; ++i) {
            guards.push_back(sels[i].guarded_point);
            listed_ok &= nz[i][sels[i].guarded_point];
        }
        std::vector<int> perm{0, 1, 2}, matching;
        do {
            if (nz[0][perm[0]] && nz[1][perm[1]] && nz[2][perm[2]]) {
                matching = perm;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        r.observed["listed_guards"] = guards;
        r.observed["listed_guards_nonzero"] = listed_ok;
        r.observed["guard_matching"] = matching.empty() ? Json(nullptr) : Json(matching);
        r.expected["listed_guards_nonzero"] = true;
        ok &= listed_ok;

        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_smoothness(CertContext& ctx) {
    return timed_check("smoothness", [&] {
        CheckRecord r;
        const auto& gb = ctx.surface_basis();
        auto N = hilbert_numerator(gb.leading_monomials(), 10);
        const auto& minors = ctx.reduced_minors();
        Json mj = Json::array();
        for (auto& m : minors) mj.push_back({{"degree", m.degree()}, {"terms", m.size()}});
        r.observed["reduced_minors"] = mj;

        RegularityOptions opts;
        opts.seed = ctx.config().seed;
        if (ctx.config().time_budget_s > 0) opts.module.time_budget_s = ctx.config().time_budget_s;
        auto cert = certify_regular_sequence(ctx.algebra_model(), minors, N, opts);

        r.observed["free_rank"] = cert.rank;
        r.observed["coordinate_attempts"] = cert.attempts;
        r.observed["colength_pair_at_infinity"] = cert.at_infinity.length;
        r.observed["colength_pair_affine"] = cert.affine_prefix.length;
        r.observed["triple_affine_quotient_zero"] = cert.affine_all.zero;
        r.observed["module_basis_sizes"] = {cert.at_infinity.basis_size, cert.affine_prefix.basis_size,
                                           cert.affine_all.basis_size};
        Json chain = Json::array();
        for (auto& hp : cert.prefix_hp) chain.push_back(hp.to_string());
        r.observed["hilbert_polynomials"] = chain;
        r.expected["hilbert_polynomials"] = Json::array({"504k-3654", "7056", "0"});
        r.expected["free_rank"] = 36;
        r.expected["colength_pair_at_infinity"] = 7056;
        r.expected["triple_affine_quotient_zero"] = true;

        // Bezout: each degree-14 section multiplies the degree by 14.
        Json bez = Json::array();
        for (auto& hp : cert.prefix_hp) bez.push_back(q_str(hp.leading_coefficient()));
        r.observed["leading_coefficients"] = bez;
        r.expected["leading_coefficients"] = Json::array({"504", "7056", "0"});

        bool ok = cert.holds && cert.rank == 36 && cert.at_infinity.length == 7056 &&
                  cert.affine_prefix.length == 7056 && cert.prefix_hp.size() == 3 &&
                  cert.prefix_hp[0].equals({-3654, 504}) && cert.prefix_hp[1].equals({7056}) &&
                  cert.prefix_hp[2].coeffs.empty();
        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_curve_c(CertContext& ctx) {
    return timed_check("curve_c", [&] {
        CheckRecord r;
        const PrimeField& F = ctx.field();
        auto opts = ctx.config().groebner_options();
        std::vector<FpPoly> surface = ctx.equations_mod_p();
        std::vector<FpPoly> curve;
        for (auto& g : curve_c_generators())
            curve.push_back(reduce_poly(ctx.config().conjugate ? conjugate_poly(g) : g, F));
        bool ok = true;

        auto with_curve = surface;
        with_curve.insert(with_curve.end(), curve.begin(), curve.end());
        auto hp_c = hilbert_polynomial_of(with_curve, opts);
        r.observed["hp_surface_plus_curve"] = hp_c.to_string();
        r.observed["dimension"] = hp_c.dimension;
        r.observed["degree"] = q_str(hp_c.leading_coefficient());
        r.expected["dimension"] = 1;
        r.expected["degree"] = "18";
        ok &= hp_c.dimension == 1 && hp_c.leading_coefficient() == 18;

        FpPoly u0 = FpPoly::variable(FpDomain(F), u_vars(), 0);
        auto with_u0 = surface;
        with_u0.push_back(u0);
        auto hp_u0 = hilbert_polynomial_of(with_u0, opts);

        // Products not already divisible by U0 (those lie in <U0> trivially).
        auto square = symmetric_square(curve);
        int trivial = 0;
        auto with_sq = with_u0;
        for (auto& q : square) {
            bool in_u0 = std::all_of(q.terms().begin(), q.terms().end(), [](auto& t) { return t.m.e[0] > 0; });
            if (in_u0) {
                ++trivial;
                continue;
            }
            with_sq.push_back(q);
        }
        auto hp_sq = hilbert_polynomial_of(with_sq, opts);
        r.observed["curve_square_generators"] = square.size();
        r.observed["curve_square_trivially_in_u0"] = trivial;
        r.observed["hp_surface_plus_u0"] = hp_u0.to_string();
        r.observed["hp_surface_plus_u0_plus_square"] = hp_sq.to_string();
        r.expected["curve_square_generators"] = 190;
        r.expected["hp_equal"] = true;
        r.observed["hp_equal"] = hp_u0.coeffs == hp_sq.coeffs;
        ok &= square.size() == 190 && hp_u0.coeffs == hp_sq.coeffs;

        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

}  // namespace fpp
