#include "fppcert/sextic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "fppcert/dataset.hpp"
#include "fppcert/dataset_text.hpp"
#include "fppcert/groebner.hpp"
#include "fppcert/linalg.hpp"
#include "fppcert/univariate.hpp"

namespace fpp {

namespace {

QPoly var(const VarsPtr& v, int i) { return QPoly::variable(QDomain{}, v, i); }
QPoly cst(const VarsPtr& v, const QuadExtScalar& c) { return QPoly::constant(QDomain{}, v, c); }

QuadExtScalar parse_scalar(const char* text) {
    QPoly p = parse_qpoly(text, y_vars());
    if (!p.is_constant()) throw ParseError(std::string("expected a constant: ") + text);
    return p.coefficient(Monomial::one());
}

SexticData build(bool conjugate) {
    auto fix = [&](QPoly p) { return conjugate ? conjugate_poly(p) : p; };
    auto fixc = [&](QuadExtScalar c) { return conjugate ? c.conj() : c; };
    SexticData d;
    d.vars = y_vars();
    d.f = fix(parse_qpoly(text::kSextic, d.vars));
    d.h0 = fix(parse_qpoly(text::kConic, d.vars));
    for (int k = 0; k < 2; ++k) d.cones[k] = fix(parse_qpoly(text::kCones[k], d.vars));
    d.f_cones = d.cones[0] * d.cones[1];
    d.a1p_conic = fix(parse_qpoly(text::kCurveA1pConic, d.vars));
    d.t_vars = make_vars({"t"});
    for (int k = 0; k < 4; ++k) {
        d.s1p[k] = fix(parse_qpoly(text::kCurveS1p[k], d.t_vars));
        d.s1pp[k] = fix(parse_qpoly(text::kCurveS1pp[k], d.t_vars));
    }
    const std::array<const std::array<const char*, 4>*, 4> pts = {&text::kPointS1, &text::kPointA1, &text::kPointC1,
                                                                   &text::kPointB1p};
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) d.points[k][j] = fixc(parse_scalar((*pts[k])[j]));
    if (parse_qpoly(text::kCurveF2Conic, d.vars) != parse_qpoly(text::kConic, d.vars))
        throw ConstraintViolation("the F2 conic differs from h0");
    return d;
}

// Substitutes y_i -> images[i] where the images live in another ring.
QPoly subst(const QPoly& f, std::vector<QPoly> images) { return f.substitute(images); }

QPoly restrict_y(const QPoly& f, int i, const QuadExtScalar& v) {
    std::vector<QPoly> im;
    for (int k = 0; k < f.nvars(); ++k) im.push_back(k == i ? cst(f.vars(), v) : var(f.vars(), k));
    return f.substitute(im);
}

// +1 if sigma-even, -1 if sigma-odd, 0 otherwise.
int sigma_parity(const QPoly& f) {
    QPoly s = apply_sigma(f);
    if (s == f) return 1;
    if (s == -f) return -1;
    return 0;
}

// Coefficients of f in the variable v: f = sum_k c_k v^k.
std::vector<QPoly> strata(const QPoly& f, int v) {
    std::vector<std::vector<QPoly::Term>> parts;
    for (auto& t : f.terms()) {
        int e = t.m.e[v];
        if (static_cast<int>(parts.size()) <= e) parts.resize(e + 1);
        Monomial m = t.m / Monomial::var(v, e);
        parts[e].push_back({m, t.c});
    }
    std::vector<QPoly> out;
    for (auto& p : parts) out.push_back(QPoly::from_terms(QDomain{}, f.vars(), p));
    return out;
}

QPoly rest_from(const std::vector<QPoly>& s, int from, int v, const VarsPtr& vars) {
    QPoly r(QDomain{}, vars);
    for (int k = from; k < static_cast<int>(s.size()); ++k) r += s[k].mul_term(Monomial::var(v, k - from), 1);
    return r;
}

QuadExtScalar constant_of(const std::optional<QPoly>& q, const char* what) {
    if (!q || !q->is_constant() || q->is_zero()) throw ExtractionFailed(what);
    return q->coefficient(Monomial::one());
}

std::string scalar(const QuadExtScalar& c) { return c.to_string(); }

Json membership(const QPoly& f, const std::vector<QPoly>& gens, bool& ok) {
    GroebnerOptions o;
    o.allow_rational = true;
    auto gb = buchberger(gens, o);
    bool in = normal_form(f, gb).is_zero();
    ok &= in;
    return in;
}

// Univariate gcd over Q(w) of polynomials in a single variable.
using QU = std::vector<QuadExtScalar>;
QU to_dense(const QPoly& p) {
    QU v;
    for (auto& t : p.terms()) {
        if (static_cast<int>(v.size()) <= t.m.e[0]) v.resize(t.m.e[0] + 1);
        v[t.m.e[0]] = t.c;
    }
    return v;
}
void trim(QU& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}
QU qu_mod(QU a, const QU& m) {
    trim(a);
    QuadExtScalar inv = m.back().inv();
    while (a.size() >= m.size()) {
        QuadExtScalar c = a.back() * inv;
        std::size_t sh = a.size() - m.size();
        for (std::size_t k = 0; k < m.size(); ++k) a[sh + k] -= c * m[k];
        a.pop_back();
        trim(a);
    }
    return a;
}
int gcd_degree(const std::vector<QPoly>& ps) {
    QU g;
    for (auto& p : ps) {
        QU b = to_dense(p);
        trim(b);
        while (!b.empty()) {
            QU r = g.empty() ? QU{} : qu_mod(g, b);
            g = std::move(b);
            b = std::move(r);
        }
    }
    return static_cast<int>(g.size()) - 1;
}

}  // namespace

const SexticData& sextic_data(bool conjugate) {
    static std::once_flag once[2];
    static SexticData data[2];
    int k = conjugate ? 1 : 0;
    std::call_once(once[k], [&] { data[k] = build(conjugate); });
    return data[k];
}

QPoly apply_sigma(const QPoly& f) {
    const VarsPtr& v = f.vars();
    return f.substitute({var(v, 0), -var(v, 1), var(v, 2), -var(v, 3)});
}

CheckRecord check_sextic_identities(bool conjugate) {
    return timed_check("sextic_identities", [&] {
        const SexticData& d = sextic_data(conjugate);
        auto cj = [&](QuadExtScalar c) { return conjugate ? c.conj() : c; };
        CheckRecord r;
        bool ok = true;
        const VarsPtr& v = d.vars;
        const QPoly y0 = var(v, 0), y1 = var(v, 1), y2 = var(v, 2), y3 = var(v, 3);

        bool homog = d.f.is_homogeneous() && d.f.degree() == 6 && d.h0.is_homogeneous() && d.h0.degree() == 2;
        r.observed["f_degree"] = d.f.degree();
        r.observed["f_terms"] = d.f.size();
        r.expected["f_degree"] = 6;
        ok &= homog;

        bool inv = apply_sigma(d.f) == d.f;
        r.observed["sigma_invariant"] = inv;
        r.expected["sigma_invariant"] = true;
        ok &= inv;

        // f(y0, 0, y2, y3) = c y0^6.
        QPoly f_y1 = restrict_y(d.f, 1, 0);
        QuadExtScalar c_y0 = constant_of(divide_exact(f_y1, y0.pow(6)), "f(y0,0,y2,y3) is not a multiple of y0^6");
        r.observed["scalar_y1_zero"] = scalar(c_y0);
        r.expected["scalar_y1_zero"] = scalar(QuadExtScalar(28));
        ok &= c_y0 == QuadExtScalar(28);

        // f(0, y1, y2, y3) = c y1^2 h0^2.
        QPoly f_y0 = restrict_y(d.f, 0, 0);
        QuadExtScalar c_h0 =
            constant_of(divide_exact(f_y0, y1.pow(2) * d.h0.pow(2)), "f(0,y1,y2,y3) is not a multiple of y1^2 h0^2");
        QuadExtScalar c_h0_exp = cj(QuadExtScalar(14) + QuadExtScalar(2) * QuadExtScalar::omega());
        r.observed["scalar_y0_zero"] = scalar(c_h0);
        r.expected["scalar_y0_zero"] = scalar(c_h0_exp);
        ok &= c_h0 == c_h0_exp;

        // Pencil y0 = a y1 in the ring (a, y1, y2, y3).
        VarsPtr pv = make_vars({"a", "y1", "y2", "y3"});
        QPoly a = var(pv, 0), py1 = var(pv, 1);
        QPoly fa = subst(d.f, {a * py1, py1, var(pv, 2), var(pv, 3)});
        auto ga = divide_exact(fa, py1.pow(2));
        r.observed["pencil_divisible_by_y1_squared"] = ga.has_value();
        r.expected["pencil_divisible_by_y1_squared"] = true;
        ok &= ga.has_value();
        if (ga) {
            VarsPtr av = make_vars({"a"});
            Json nodes = Json::array();
            bool all = true;
            for (int s : {-1, 1}) {
                int nonzero = 0;
                std::vector<QPoly> at{var(av, 0), cst(av, 0), cst(av, s), cst(av, 1)};
                for (int k = 0; k < 4; ++k) {
                    QPoly g = k == 0 ? *ga : ga->diff(k);
                    if (!g.substitute(at).is_zero()) ++nonzero;
                }
                nodes.push_back(nonzero);
                all &= nonzero == 0;
            }
            r.observed["node_nonvanishing_counts"] = nodes;
            r.expected["node_nonvanishing_counts"] = Json::array({0, 0});
            ok &= all;

            // a = 1 splits off the lines y2 = -y3, y2 = y3 and the A1' conic.
            QPoly g1 = ga->substitute({cst(v, 1), y1, y2, y3});
            QPoly prod = (y2 + y3) * (y2 - y3) * d.a1p_conic;
            QuadExtScalar c = g1.lc() / prod.lc();
            bool fac = g1 == prod.scale(c);
            r.observed["g1_factorization"] = fac;
            r.observed["g1_factor_scalar"] = scalar(c);
            r.expected["g1_factorization"] = true;
            ok &= fac;
        }

        // h0 vanishes at (y1:y2:y3) = (0:+-1:1).
        int h0_nonzero = 0;
        for (int s : {-1, 1})
            if (!eval_q(d.h0, {0, 0, QuadExtScalar(s), 1}).is_zero()) ++h0_nonzero;
        r.observed["h0_nonvanishing_at_nodes"] = h0_nonzero;
        r.expected["h0_nonvanishing_at_nodes"] = 0;
        ok &= h0_nonzero == 0;

        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_singular_locus(bool conjugate) {
    return timed_check("singular_locus", [&] {
        const SexticData& d = sextic_data(conjugate);
        CheckRecord r;
        bool ok = true;
        const VarsPtr& v = d.vars;
        std::vector<QPoly> grad;
        for (int i = 0; i < 4; ++i) grad.push_back(d.f.diff(i));

        // Along y0 = y1 = 0.
        int nonzero = 0;
        for (int k = -1; k < 4; ++k) {
            const QPoly& g = k < 0 ? d.f : grad[k];
            if (!restrict_y(restrict_y(g, 0, 0), 1, 0).is_zero()) ++nonzero;
        }
        r.observed["line_nonvanishing"] = nonzero;
        r.expected["line_nonvanishing"] = 0;
        ok &= nonzero == 0;

        // Along y0 = 0, h0 = 0.
        int not_divisible = 0;
        std::optional<QPoly> q0;
        for (int k = -1; k < 4; ++k) {
            const QPoly& g = k < 0 ? d.f : grad[k];
            auto q = divide_exact(restrict_y(g, 0, 0), d.h0);
            if (!q) ++not_divisible;
            if (k == 0) q0 = q;
        }
        r.observed["conic_not_divisible"] = not_divisible;
        r.expected["conic_not_divisible"] = 0;
        ok &= not_divisible == 0;
        QuadExtScalar c = QuadExtScalar(42) + QuadExtScalar(2) * QuadExtScalar::omega();
        if (conjugate) c = c.conj();
        QPoly expect = var(v, 1).pow(2) * var(v, 2).scale(c);
        r.observed["dfdy0_cofactor"] = q0 ? q0->to_string() : "none";
        r.expected["dfdy0_cofactor"] = expect.to_string();
        ok &= q0 && *q0 == expect;

        // The point P = (1:1:0:0).
        std::vector<QuadExtScalar> P{1, 1, 0, 0};
        int grad_nonzero = 0;
        for (auto& g : grad)
            if (!eval_q(g, P).is_zero()) ++grad_nonzero;
        Matrix<QDomain> H(QDomain{}, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) H.at(i, j) = eval_q(grad[i + 1].diff(j + 1), P);
        int rank = matrix_rank(H);
        r.observed["gradient_nonzero_at_P"] = grad_nonzero;
        r.observed["f_at_P"] = scalar(eval_q(d.f, P));
        r.observed["hessian_rank_at_P"] = rank;
        r.expected["gradient_nonzero_at_P"] = 0;
        r.expected["hessian_rank_at_P"] = 2;
        ok &= grad_nonzero == 0 && rank == 2 && eval_q(d.f, P).is_zero();

        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_curve_incidence(bool conjugate) {
    return timed_check("curve_incidence", [&] {
        const SexticData& d = sextic_data(conjugate);
        CheckRecord r;
        bool ok = true;
        const VarsPtr& v = d.vars;
        const QPoly y0 = var(v, 0), y1 = var(v, 1), y2 = var(v, 2), y3 = var(v, 3);
        auto sigma_pt = [](std::array<QuadExtScalar, 4> p) {
            p[1] = -p[1];
            p[3] = -p[3];
            return p;
        };

        // Points; B1'' and C1'' share A1's image and C1' shares B1''s.
        const std::vector<std::pair<std::string, int>> named = {{"S1", 0},   {"A1", 1},   {"C1", 2},   {"B1'", 3},
                                                                 {"C1'", 3}, {"B1''", 1}, {"C1''", 1}};
        Json pts = Json::object();
        for (auto& [label, idx] : named)
            for (int s = 0; s < 2; ++s) {
                auto p = s ? sigma_pt(d.points[idx]) : d.points[idx];
                std::vector<QuadExtScalar> pv(p.begin(), p.end());
                bool z = eval_q(d.f, pv).is_zero();
                pts[(s ? "sigma " : "") + label] = z;
                ok &= z;
            }
        r.observed["points_on_surface"] = pts;

        // Parametric curves.
        Json par = Json::object();
        auto check_param = [&](const std::string& label, const std::array<QPoly, 4>& c) {
            for (int s = 0; s < 2; ++s) {
                std::vector<QPoly> im(c.begin(), c.end());
                if (s) {
                    im[1] = -im[1];
                    im[3] = -im[3];
                }
                QPoly sub = d.f.substitute(im);
                int deg_bound = 0;
                for (auto& x : im) deg_bound = std::max(deg_bound, 6 * x.degree());
                bool coprime = gcd_degree(im) == 0;
                Json e = {{"vanishes", sub.is_zero()}, {"coprime", coprime}, {"degree_bound", deg_bound}};
                par[(s ? "sigma " : "") + label] = e;
                ok &= sub.is_zero() && coprime;
            }
        };
        check_param("S1'", d.s1p);
        check_param("S1''", d.s1pp);
        r.observed["parametric_curves"] = par;

        // Implicit curves: f lies in each ideal.
        Json imp = Json::object();
        const std::vector<std::pair<std::string, std::vector<QPoly>>> ideals = {
            {"F", {y0, y1}},
            {"F2", {y0, d.h0}},
            {"B1", {y0 - y1, y2 + y3}},
            {"A1'", {y0 - y1, d.a1p_conic}},
            {"A1''", {y0 - y1, y2 - y3}},
        };
        for (auto& [label, gens] : ideals) {
            imp[label] = membership(d.f, gens, ok);
            std::vector<QPoly> sg;
            for (auto& g : gens) sg.push_back(apply_sigma(g));
            imp["sigma " + label] = membership(d.f, sg, ok);
        }
        r.observed["implicit_curves"] = imp;

        // The cone pair.
        bool cones_inv = apply_sigma(d.f_cones) == d.f_cones;
        bool swapped = apply_sigma(d.cones[0]) == d.cones[1];
        bool contains = true;
        for (auto* c : {&d.s1p, &d.s1pp})
            contains &= d.cones[0].substitute(std::vector<QPoly>(c->begin(), c->end())).is_zero();
        r.observed["f_cones_sigma_invariant"] = cones_inv;
        r.observed["cones_exchanged_by_sigma"] = swapped;
        r.observed["first_cone_contains_S1p_S1pp"] = contains;
        ok &= cones_inv && swapped && contains;

        r.expected["all_incidences"] = true;
        r.expected["f_cones_sigma_invariant"] = true;
        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

IntegralEquation integral_equation_y4(const SexticData& d) {
    const VarsPtr& v = d.vars;
    auto s = strata(d.f, 1);
    if (s.size() < 3) throw ExtractionFailed("f has y1-degree below 2");
    QPoly y0_3 = var(v, 0).pow(3);
    QuadExtScalar lead = constant_of(divide_exact(s[0], y0_3 * y0_3), "y1-free part is not c y0^6");
    auto a = divide_exact(s[1], y0_3.scale(lead));
    if (!a) throw ExtractionFailed("y1-linear stratum not divisible by y0^3");
    QPoly b = rest_from(s, 2, 1, v).scale(lead.inv());
    IntegralEquation eq{*a, b, {}};
    // lead * y1^2 * (u^2 + a u + b) with u = y0^3 / y1.
    QPoly y1 = var(v, 1);
    eq.lhs = (y0_3 * y0_3 + *a * y0_3 * y1 + b * y1 * y1).scale(lead);
    return eq;
}

IntegralEquation integral_equation_y5(const SexticData& d) {
    const VarsPtr& v = d.vars;
    auto s = strata(d.f, 0);
    if (s.size() < 3) throw ExtractionFailed("f has y0-degree below 2");
    QPoly y1 = var(v, 1);
    QPoly num = d.h0 * y1;  // u = num / y0
    QuadExtScalar lead = constant_of(divide_exact(s[0], num * num), "y0-free part is not c (h0 y1)^2");
    auto a = divide_exact(s[1], num.scale(lead));
    if (!a) throw ExtractionFailed("y0-linear stratum not divisible by h0 y1");
    QPoly b = rest_from(s, 2, 0, v).scale(lead.inv());
    IntegralEquation eq{*a, b, {}};
    QPoly y0 = var(v, 0);
    eq.lhs = (num * num + *a * num * y0 + b * y0 * y0).scale(lead);
    return eq;
}

CheckRecord check_integral_equations(bool conjugate) {
    return timed_check("integral_equations", [&] {
        const SexticData& d = sextic_data(conjugate);
        CheckRecord r;
        bool ok = true;
        const VarsPtr& v = d.vars;
        struct Item {
            const char* name;
            IntegralEquation eq;
            QPoly num, den;
        };
        std::vector<Item> items = {
            {"y4", integral_equation_y4(d), var(v, 0).pow(3), var(v, 1)},
            {"y5", integral_equation_y5(d), d.h0 * var(v, 1), var(v, 0)},
        };
        for (auto& it : items) {
            bool exact = it.eq.lhs == d.f;
            int parity = sigma_parity(it.num) * sigma_parity(it.den);
            int grading = it.num.degree() - it.den.degree();
            bool coeff_parity = sigma_parity(it.eq.a) == parity && sigma_parity(it.eq.b) == 1;
            Json o = {{"a", it.eq.a.to_string()},
                      {"b_terms", it.eq.b.size()},
                      {"cleared_equals_f", exact},
                      {"sigma_parity", parity},
                      {"grading", grading},
                      {"coefficient_parities_consistent", coeff_parity}};
            r.observed[it.name] = o;
            r.expected[it.name] = {{"cleared_equals_f", true}, {"sigma_parity", -1}, {"grading", 2}};
            ok &= exact && parity == -1 && grading == 2 && coeff_parity;
        }
        // The coefficient a for y0^3/y1 as a closed form.
        QuadExtScalar w = QuadExtScalar::omega();
        if (conjugate) w = w.conj();
        QPoly a4 = (var(v, 0) * var(v, 3)).scale(-(QuadExtScalar(14) + QuadExtScalar(22) * w)) +
                   (var(v, 2) * var(v, 3)).scale(QuadExtScalar(21) - QuadExtScalar(31) * w);
        a4 = a4.scale(QuadExtScalar(mpq_class(1, 28), 0));
        r.expected["y4"]["a"] = a4.to_string();
        ok &= items[0].eq.a == a4;
        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

// ---------------------------------------------------------------------------
// Finite-field side.

namespace {

// w -> -w over GF(p) is the switch to the other square root of -7. With
// sqrt7 = -i*r this sends sqrt7 to -sqrt7 and fixes i, which is compatible
// with the printed maps.
PrimeField oriented_field(const PrimeField& F, bool conjugate) {
    return conjugate ? PrimeField(F.modulus(), F.modulus() - F.sqrt_minus7()) : F;
}

}  // namespace

SurfaceMaps::SurfaceMaps(const PrimeField& F, bool conjugate)
    : F_(oriented_field(F, conjugate)), R_(F_), f_mod_p_(reduce_poly(sextic_data(false).f, F_)) {
    rho2_ = parse_expr(text::kRhoY2);
    rho3_ = parse_expr(text::kRhoY3);
    inv2_ = parse_expr(text::kRhoInvY2);
    inv3_ = parse_expr(text::kRhoInvY3);
    z7_ = parse_expr(text::kZ7);
    zimg_ = parse_expr(text::kZTransport);
    ea_ = parse_expr(text::kEmbedA);
    eb_ = parse_expr(text::kEmbedB);
}

Fp2 SurfaceMaps::eval(const ExprPtr& e, const Point& Y, Fp2 z) const {
    static const std::vector<std::string> names{"Y0", "Y2", "Y3", "z"};
    return eval_expr_fp2(e, R_, names, {Y[0], Y[1], Y[2], z});
}

Fp2 SurfaceMaps::chart(const Point& Y) const {
    Fp2Ops ops{R_};
    return f_mod_p_.evaluate<Fp2>({Y[0], R_.one(), Y[1], Y[2]}, ops, [&](u32 c) { return R_.embed(c); });
}

std::vector<u32> SurfaceMaps::chart_in_y0(u32 Y2, u32 Y3) const {
    std::vector<u32> c(7, 0);
    for (auto& t : f_mod_p_.terms()) {
        u32 v = F_.mul(t.c, F_.mul(F_.pow(Y2, t.m.e[2]), F_.pow(Y3, t.m.e[3])));
        c[t.m.e[0]] = F_.add(c[t.m.e[0]], v);
    }
    upoly_trim(c);
    return c;
}

SurfaceMaps::Point SurfaceMaps::rho(const Point& Y) const {
    return {Y[0], eval(rho2_, Y, R_.zero()), eval(rho3_, Y, R_.zero())};
}

SurfaceMaps::Point SurfaceMaps::rho_inverse(const Point& Y) const {
    return {Y[0], eval(inv2_, Y, R_.zero()), eval(inv3_, Y, R_.zero())};
}

Fp2 SurfaceMaps::z7(const Point& Y) const { return eval(z7_, Y, R_.zero()); }
Fp2 SurfaceMaps::z_image(const Point& Y, Fp2 z) const { return eval(zimg_, Y, z); }
Fp2 SurfaceMaps::embed_a(const Point& Y, Fp2 z) const { return eval(ea_, Y, z); }
Fp2 SurfaceMaps::embed_b(const Point& Y, Fp2 z) const { return eval(eb_, Y, z); }

u64 seventh_root_exponent(u32 p) {
    const i64 m = static_cast<i64>(p) - 1;
    if (m % 7 == 0) throw SeventhRootUndefined("7 divides p - 1 = " + std::to_string(m));
    // Extended Euclid for 7^{-1} mod m.
    i64 r0 = m, r1 = 7, s0 = 0, s1 = 1;
    while (r1) {
        i64 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return static_cast<u64>(((s0 % m) + m) % m);
}

namespace {

constexpr int kChunks = 8;

bool rational(Fp2 x) { return x.b == 0; }

// All downstream quantities are defined at Y.
bool admissible(const SurfaceMaps& M, const SurfaceMaps::Point& Y) {
    const Fp2Ring& R = M.ring();
    if (R.is_zero(Y[0])) return false;
    try {
        auto r1 = M.rho(Y);
        auto r2 = M.rho(r1);
        M.rho(r2);
        M.rho_inverse(r1);
        // The z lift runs along rho^{-1}; it is followed for three steps.
        auto i1 = M.rho_inverse(Y);
        auto i2 = M.rho_inverse(i1);
        Fp2 w0 = M.z7(Y), w1 = M.z7(r1), wi = M.z7(i1), ws = M.z7(SurfaceMaps::sigma(R, Y));
        if (R.is_zero(w0) || R.is_zero(w1) || R.is_zero(wi) || R.is_zero(ws)) return false;
        for (const auto& q : {Y, i1, i2}) M.z_image(q, R.one());
    } catch (const DenominatorVanished&) {
        return false;
    }
    return true;
}

}  // namespace

std::vector<SurfacePoint> sample_surface_points(const SamplingParams& P, SampleStats* stats) {
    if (P.samples < 1) throw ConfigError("samples must be at least 1");
    const PrimeField& F = P.field;
    SurfaceMaps M(F, P.conjugate);
    u64 e = 0;
    bool have_e = (F.modulus() - 1) % 7 != 0;
    if (have_e) e = seventh_root_exponent(F.modulus());

    std::vector<std::vector<SurfacePoint>> chunk_pts(kChunks);
    std::vector<SampleStats> chunk_stats(kChunks);
    std::vector<std::string> chunk_err(kChunks);
    auto run_chunk = [&](int c) {
        int want = P.samples / kChunks + (c < P.samples % kChunks ? 1 : 0);
        std::seed_seq seq{static_cast<u32>(P.seed), static_cast<u32>(P.seed >> 32), static_cast<u32>(c)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<u32> coord(0, F.modulus() - 1);
        SampleStats& st = chunk_stats[c];
        const long budget = static_cast<long>(want) * P.max_draws_per_point + 16;
        while (static_cast<int>(chunk_pts[c].size()) < want) {
            if (st.draws >= budget) {
                chunk_err[c] = "chunk " + std::to_string(c) + " exhausted " + std::to_string(budget) + " draws";
                return;
            }
            ++st.draws;
            u32 Y2 = coord(rng), Y3 = coord(rng);
            auto roots = roots_mod_p(F, M.chart_in_y0(Y2, Y3), rng);
            if (roots.empty()) {
                ++st.rootless;
                continue;
            }
            u32 Y0 = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
            SurfaceMaps::Point Y{Fp2{Y0, 0}, Fp2{Y2, 0}, Fp2{Y3, 0}};
            if (!admissible(M, Y)) {
                ++st.excluded;
                continue;
            }
            Fp2 w = M.z7(Y);
            u32 z = have_e && rational(w) ? F.pow(w.a, e) : 0;
            chunk_pts[c].push_back({Y0, Y2, Y3, z});
        }
    };
    int threads = std::max(1, std::min(P.threads, kChunks));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int c; (c = next++) < kChunks;) run_chunk(c);
        });
    for (auto& th : pool) th.join();

    std::vector<SurfacePoint> out;
    SampleStats total;
    for (int c = 0; c < kChunks; ++c) {
        out.insert(out.end(), chunk_pts[c].begin(), chunk_pts[c].end());
        total.draws += chunk_stats[c].draws;
        total.rootless += chunk_stats[c].rootless;
        total.excluded += chunk_stats[c].excluded;
    }
    total.points = static_cast<long>(out.size());
    if (stats) *stats = total;
    for (auto& err : chunk_err)
        if (!err.empty()) throw InsufficientPoints(err);
    return out;
}

std::string surface_transcript(const std::vector<SurfacePoint>& pts) {
    std::string s;
    for (auto& p : pts) {
        Json j = {{"Y0", p.Y0}, {"Y2", p.Y2}, {"Y3", p.Y3}, {"z", p.z}};
        s += j.dump() + "\n";
    }
    return s;
}

namespace {

Json sampling_json(const SamplingParams& P, const SampleStats& st) {
    Json j = {{"prime", P.field.modulus()},
              {"seed", P.seed},
              {"samples", P.samples},
              {"draws", st.draws},
              {"rootless_draws", st.rootless},
              {"excluded_points", st.excluded}};
    j["root_rate"] = st.draws ? std::round(1000.0 * (st.draws - st.rootless) / st.draws) / 1000.0 : 0.0;
    return j;
}

}  // namespace

CheckRecord check_automorphism_order3(const SamplingParams& P) {
    return timed_check("automorphism_order3", [&] {
        CheckRecord r;
        SampleStats st;
        auto pts = sample_surface_points(P, &st);
        SurfaceMaps M(P.field, P.conjugate);
        const Fp2Ring& R = M.ring();
        long surface = 0, inverse = 0, order3 = 0, y0_moved = 0, irrational = 0, inverse_surface = 0;
        for (auto& p : pts) {
            SurfaceMaps::Point Y{Fp2{p.Y0, 0}, Fp2{p.Y2, 0}, Fp2{p.Y3, 0}};
            try {
                auto r1 = M.rho(Y);
                if (!rational(r1[1]) || !rational(r1[2])) ++irrational;
                if (!R.is_zero(M.chart(r1))) ++surface;
                if (r1[0] != Y[0]) ++y0_moved;
                if (M.rho_inverse(r1) != Y) ++inverse;
                if (M.rho(M.rho(r1)) != Y) ++order3;
                if (!R.is_zero(M.chart(M.rho_inverse(Y)))) ++inverse_surface;
            } catch (const DenominatorVanished&) {
                ++order3;  // admissible points never get here
            }
        }
        r.observed["sampling"] = sampling_json(P, st);
        r.observed["points"] = pts.size();
        Json fails = {{"surface_preserved", surface},
                      {"inverse_composition", inverse},
                      {"third_iterate", order3},
                      {"y0_fixed", y0_moved},
                      {"image_rational", irrational},
                      {"inverse_preserves_surface", inverse_surface}};
        r.observed["failures"] = fails;
        Json zero = Json::object();
        for (auto& [k, val] : fails.items()) zero[k] = 0;
        r.expected["failures"] = zero;
        r.expected["points"] = P.samples;
        bool ok = static_cast<int>(pts.size()) == P.samples;
        for (auto& [k, val] : fails.items()) ok &= val.get<long>() == 0;
        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

CheckRecord check_z_transport(const SamplingParams& P) {
    return timed_check("z_transport", [&] {
        CheckRecord r;
        const u64 e = seventh_root_exponent(P.field.modulus());
        SampleStats st;
        auto pts = sample_surface_points(P, &st);
        SurfaceMaps M(P.field, P.conjugate);
        const Fp2Ring& R = M.ring();
        long transport = 0, forward = 0, lift3 = 0, symmetry = 0, root = 0, irrational = 0;
        for (auto& p : pts) {
            SurfaceMaps::Point Y{Fp2{p.Y0, 0}, Fp2{p.Y2, 0}, Fp2{p.Y3, 0}};
            Fp2 w = M.z7(Y);
            if (!rational(w)) ++irrational;
            Fp2 z{p.z, 0};
            if (R.pow(z, 7) != w) ++root;
            Fp2 zz = M.z_image(Y, z);
            if (R.pow(zz, 7) != M.z7(M.rho_inverse(Y))) ++transport;
            if (R.pow(zz, 7) != M.z7(M.rho(Y))) ++forward;
            // Three steps of (Y, z) -> (rho^{-1} Y, z'') return to (Y, z).
            auto Yk = Y;
            Fp2 zk = z;
            for (int k = 0; k < 3; ++k) {
                zk = M.z_image(Yk, zk);
                Yk = M.rho_inverse(Yk);
            }
            if (Yk != Y || zk != z) ++lift3;
            if (M.z7(SurfaceMaps::sigma(R, Y)) != w) ++symmetry;
        }
        r.observed["sampling"] = sampling_json(P, st);
        r.observed["seventh_root_exponent"] = e;
        r.observed["points"] = pts.size();
        Json fails = {{"transport_law", transport},
                      {"lift_order3", lift3},
                      {"sigma_symmetry", symmetry},
                      {"seventh_root", root},
                      {"z7_rational", irrational}};
        r.observed["failures"] = fails;
        // Informational: the same law paired with the forward map.
        r.observed["forward_pairing_mismatches"] = forward;
        r.observed["transport_pairing"] = "z'' lies over rho^{-1}(Y)";
        Json zero = Json::object();
        for (auto& [k, val] : fails.items()) zero[k] = 0;
        r.expected["failures"] = zero;
        r.expected["points"] = P.samples;
        if (P.field.modulus() == 263) r.expected["seventh_root_exponent"] = 75;
        bool ok = static_cast<int>(pts.size()) == P.samples && transport == 0 && lift3 == 0 && symmetry == 0 && root == 0 &&
                  irrational == 0 && (P.field.modulus() != 263 || e == 75);
        r.status = ok ? Status::Pass : Status::Fail;
        return r;
    });
}

EmbeddingProbe probe_embedding(const SamplingParams& P, const std::array<u32, 10>& scalings) {
    bool any = false;
    for (u32 s : scalings) any |= s % P.field.modulus() != 0;
    if (!any) throw ConstraintViolation("all scalings vanish: not a projective point");
    SampleStats st;
    auto pts = sample_surface_points(P, &st);
    SurfaceMaps M(P.field, P.conjugate);
    const Fp2Ring& R = M.ring();
    std::vector<FpPoly> eqs;
    for (auto& q : P.conjugate ? conjugate_all(fpp_equations()) : fpp_equations())
        eqs.push_back(reduce_poly(q, P.field));
    EmbeddingProbe out;
    Fp2Ops ops{R};
    for (auto& p : pts) {
        try {
            std::array<SurfaceMaps::Point, 3> Y;
            std::array<Fp2, 3> z;
            Y[0] = {Fp2{p.Y0, 0}, Fp2{p.Y2, 0}, Fp2{p.Y3, 0}};
            z[0] = Fp2{p.z, 0};
            for (int k = 1; k < 3; ++k) {
                Y[k] = M.rho_inverse(Y[k - 1]);
                z[k] = M.z_image(Y[k - 1], z[k - 1]);
            }
            std::vector<Fp2> U(10);
            U[0] = R.embed(scalings[0]);
            for (int k = 0; k < 3; ++k) {
                const auto& y = Y[k];
                Fp2 num = R.mul(R.sub(R.mul(y[1], y[1]), R.mul(y[2], y[2])), z[k]);
                Fp2 den = R.sub(R.mul(y[0], y[0]), R.one());
                U[1 + k] = R.mul(R.embed(scalings[1 + k]), R.mul(num, R.inv(den)));
                U[4 + k] = R.mul(R.embed(scalings[4 + k]), M.embed_a(y, z[k]));
                U[7 + k] = R.mul(R.embed(scalings[7 + k]), M.embed_b(y, z[k]));
            }
            ++out.points;
            for (auto& q : eqs)
                if (!R.is_zero(q.evaluate<Fp2>(U, ops, [&](u32 c) { return R.embed(c); }))) ++out.nonvanishing;
        } catch (const DenominatorVanished&) {
            ++out.skipped;
        }
    }
    return out;
}

CheckRecord check_embedding_samples(const SamplingParams& P, const std::array<u32, 10>& scalings) {
    return timed_check("embedding_probe", [&] {
        CheckRecord r;
        auto pr = probe_embedding(P, scalings);
        r.observed["scalings"] = scalings;
        r.observed["seed"] = P.seed;
        r.observed["points"] = pr.points;
        r.observed["skipped_points"] = pr.skipped;
        r.observed["nonvanishing_evaluations"] = pr.nonvanishing;
        r.expected["nonvanishing_evaluations"] = 0;
        r.status = pr.nonvanishing == 0 && pr.points > 0 ? Status::Pass : Status::Fail;
        return r;
    });
}

}  // namespace fpp
