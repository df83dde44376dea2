#include "fppcert/polynomial.hpp"

namespace fpp {

Monomial Monomial::from_exponents(const std::vector<int>& ex) {
    if (ex.size() > static_cast<std::size_t>(kMaxVars)) throw IndexOutOfRange("too many variables");
    Monomial m;
    int d = 0;
    for (std::size_t i = 0; i < ex.size(); ++i) {
        if (ex[i] < 0 || ex[i] > kMaxExponent) throw ExponentOverflow("exponent " + std::to_string(ex[i]));
        m.e[i] = static_cast<std::uint8_t>(ex[i]);
        d += ex[i];
    }
    m.deg = static_cast<std::uint16_t>(d);
    return m;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    std::vector<int> ex(n, 0);
    // Recursive composition enumeration.
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            ex[i] = left;
            out.push_back(Monomial::from_exponents(ex));
            return;
        }
        for (int a = left; a >= 0; --a) {
            ex[i] = a;
            self(self, i + 1, left - a);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(Monomial::one());
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater());
    return out;
}

VarsPtr make_vars(std::vector<std::string> names) {
    if (names.size() > static_cast<std::size_t>(kMaxVars))
        throw IndexOutOfRange("at most " + std::to_string(kMaxVars) + " variables");
    auto v = std::make_shared<VarList>();
    v->names = std::move(names);
    return v;
}

VarsPtr indexed_vars(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names));
}

FpPoly reduce_poly(const QPoly& f, const PrimeField& F) {
    FpDomain D(F);
    return f.map_coefficients(D, [&](const QuadExtScalar& c) { return reduce_to_prime_field(c, F); });
}

QPoly conjugate_poly(const QPoly& f) {
    return f.map_coefficients(QDomain{}, [](const QuadExtScalar& c) { return c.conj(); });
}

u32 eval_fp(const FpPoly& f, const std::vector<u32>& point) {
    FpOps ops{f.domain().F};
    return f.evaluate(point, ops, [](u32 c) { return c; });
}

u32 eval_q_mod_p(const QPoly& f, const std::vector<u32>& point, const PrimeField& F) {
    FpOps ops{F};
    return f.evaluate(point, ops, [&](const QuadExtScalar& c) { return reduce_to_prime_field(c, F); });
}

QuadExtScalar eval_q(const QPoly& f, const std::vector<QuadExtScalar>& point) {
    QOps ops;
    return f.evaluate(point, ops, [](const QuadExtScalar& c) { return c; });
}

}  // namespace fpp
