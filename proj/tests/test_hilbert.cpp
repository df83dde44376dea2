#include <doctest.h>

#include <random>

#include "fppcert/expr.hpp"
#include "fppcert/groebner.hpp"
#include "fppcert/hilbert.hpp"

using namespace fpp;

namespace {

std::vector<Monomial> random_monomial_ideal(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> count(1, 6), ex(0, 3);
    std::vector<Monomial> gens;
    int k = count(rng);
    for (int j = 0; j < k; ++j) {
        std::vector<int> e(n);
        int deg = 0;
        for (auto& x : e) deg += (x = ex(rng));
        if (deg == 0) e[0] = 1;
        gens.push_back(Monomial::from_exponents(e));
    }
    return gens;
}

}  // namespace

TEST_CASE("Hilbert numerator agrees with monomial counting on 50 random ideals") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + t % 6;
        auto gens = random_monomial_ideal(rng, n);
        auto N = hilbert_numerator(gens, n);
        auto N2 = hilbert_numerator(gens, n, PivotRule::FirstVariable);
        CHECK(N == N2);
        for (int k = 0; k <= 8; ++k) CHECK(hilbert_function(N, k) == hilbert_function_oracle(gens, n, k));
        auto hp = hilbert_polynomial(N);
        for (long k = hp.k0; k < hp.k0 + 6; ++k) CHECK(hp.eval(k) == mpq_class(hilbert_function(N, k)));
    }
}

TEST_CASE("closed forms") {
    // Zero ideal in 3 variables: numerator 1, HP = (k+1)(k+2)/2.
    auto N0 = hilbert_numerator({}, 3);
    CHECK(N0.coeffs == std::vector<mpz_class>{1});
    CHECK(hilbert_polynomial(N0).eval(4) == 15);
    // (x^2) in two variables: 1 - t^2, HP = 2.
    auto N1 = hilbert_numerator({Monomial::var(0, 2)}, 2);
    CHECK(N1.coeffs == std::vector<mpz_class>{1, 0, -1});
    CHECK(hilbert_polynomial(N1).equals({2}));
    // Redundant generators are dropped.
    CHECK(minimalize({Monomial::var(0), Monomial::var(0, 2), Monomial::var(1)}).size() == 2);
}

TEST_CASE("twisted cubic has Hilbert polynomial 3k + 1") {
    PrimeField F(263, 16);
    auto X = indexed_vars("x", 4);
    std::vector<FpPoly> gens;
    for (auto s : {"x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"}) gens.push_back(reduce_poly(parse_qpoly(s, X), F));
    auto B = buchberger(gens);
    auto hp = hilbert_polynomial(hilbert_numerator(B.leading_monomials(), 4));
    CHECK(hp.equals({1, 3}));
    CHECK(hp.dimension == 1);
    CHECK(hp.to_string() == "3k+1");
}
