#include <doctest.h>

#include <algorithm>
#include <random>

#include "fppcert/expr.hpp"
#include "fppcert/groebner.hpp"

using namespace fpp;

namespace {

const PrimeField F263(263, 16);
const VarsPtr X = indexed_vars("x", 4);

FpPoly fp(const std::string& s) { return reduce_poly(parse_qpoly(s, X), F263); }

std::vector<std::string> monic_strings(const std::vector<FpPoly>& gens) {
    std::vector<std::string> out;
    for (auto& g : gens) out.push_back(g.make_monic().to_string());
    std::sort(out.begin(), out.end());
    return out;
}

FpPoly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int terms) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(1, 262), v(0, nvars - 1);
    std::vector<FpPoly::Term> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        int budget = e(rng);
        for (int j = 0; j < budget; ++j) m = m * Monomial::var(v(rng));
        ts.push_back({m, static_cast<u32>(c(rng))});
    }
    return FpPoly::from_terms(FpDomain(F263), X, ts);
}

FpPoly spoly(const FpPoly& f, const FpPoly& g) {
    Monomial l = f.lm().lcm(g.lm());
    const auto& F = F263;
    return f.mul_term(l / f.lm(), F.inv(f.lc())) - g.mul_term(l / g.lm(), F.inv(g.lc()));
}

}  // namespace

// Reduced bases from sympy over GF(263) (tools/oracles/groebner_oracle.py),
// compared up to scalar multiples.
TEST_CASE("reduced bases match the external oracle") {
    struct Case {
        std::vector<std::string> gens, basis;
    };
    std::vector<Case> cases = {
        {{"x0+x1+x2+x3", "x0*x1+x1*x2+x2*x3+x3*x0", "x0*x1*x2+x1*x2*x3+x2*x3*x0+x3*x0*x1", "x0*x1*x2*x3-1"},
         {"x0+x1+x2+x3", "x1*x2*x3^2+x2^2*x3^2-x1*x3^3+x2*x3^3-x3^4-1", "x1*x2^2+x2^2*x3-x1*x3^2-x3^3",
          "x1*x3^4+x3^5-x1-x3", "x1^2+2*x1*x3+x3^2", "x2^2*x3^4+x1*x2-x1*x3+x2*x3-2*x3^2",
          "x2^3*x3^2+x2^2*x3^3-x2-x3"}},
        {{"x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"}, {"-x1*x2+x0*x3", "-x1^2+x0*x2", "-x2^2+x1*x3"}},
        {{"x0^2+3*x1*x2-5", "x1^2-x0*x3+7", "x2*x3-2*x0"}, {"x0^2+3*x1*x2-5", "131*x2*x3+x0", "-x1^2+x0*x3-7"}},
    };
    for (auto& c : cases) {
        std::vector<FpPoly> gens, want;
        for (auto& s : c.gens) gens.push_back(fp(s));
        for (auto& s : c.basis) want.push_back(fp(s));
        auto B = buchberger(gens);
        CHECK(monic_strings(B.gens) == monic_strings(want));
    }
}

TEST_CASE("Groebner basis is idempotent and satisfies Buchberger's criterion") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        std::vector<FpPoly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, 4, 3, 4));
        auto B = buchberger(gens);
        auto B2 = buchberger(B.gens);
        CHECK(monic_strings(B2.gens) == monic_strings(B.gens));
        for (auto& g : gens) CHECK(normal_form(g, B).is_zero());
        for (std::size_t i = 0; i < B.gens.size(); ++i) {
            CHECK(B.gens[i].lc() == 1u);
            for (std::size_t j = i + 1; j < B.gens.size(); ++j)
                CHECK(normal_form(spoly(B.gens[i], B.gens[j]), B).is_zero());
        }
    }
}

TEST_CASE("normal form is a ring morphism to the quotient") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        std::vector<FpPoly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, 4, 3, 4));
        auto B = buchberger(gens);
        for (int s = 0; s < 5; ++s) {
            FpPoly f = random_poly(rng, 4, 4, 6), g = random_poly(rng, 4, 4, 6);
            FpPoly nf = normal_form(f, B), ng = normal_form(g, B);
            CHECK(normal_form(f * g, B) == normal_form(nf * ng, B));
            CHECK(normal_form(f + g, B) == nf + ng);
            CHECK(normal_form(nf, B) == nf);
        }
    }
}

TEST_CASE("budgets and coefficient-field guard") {
    std::vector<FpPoly> gens{fp("x0+x1+x2+x3"), fp("x0*x1+x1*x2+x2*x3+x3*x0"),
                             fp("x0*x1*x2+x1*x2*x3+x2*x3*x0+x3*x0*x1"), fp("x0*x1*x2*x3-1")};
    GroebnerOptions o;
    o.pair_budget = 2;
    CHECK_THROWS_AS(buchberger(gens, o), BudgetExceeded);

    std::vector<QPoly> q{parse_qpoly("x0^2 + w*x1", X), parse_qpoly("x1^2 - x0", X)};
    CHECK_THROWS_AS(buchberger(q), CoefficientFieldUnsupported);
    GroebnerOptions r;
    r.allow_rational = true;
    auto B = buchberger(q, r);
    for (auto& g : q) CHECK(normal_form(g, B).is_zero());
}

TEST_CASE("ideal handles share their cached basis") {
    IdealHandle<FpDomain> I({fp("x0*x2-x1^2"), fp("x1*x3-x2^2")});
    IdealHandle<FpDomain> J({fp("x0*x3-x1*x2")});
    auto S = ideal_sum(I, J);
    auto copy = S;
    CHECK(&S.groebner() == &copy.groebner());
    CHECK(S.groebner().gens.size() == 3);
    CHECK(ideal_product(I, J).generators().size() == 2);
}
