#include <doctest.h>

#include "fppcert/certify.hpp"
#include "fppcert/dataset.hpp"

using namespace fpp;

TEST_CASE("invariants read off a Hilbert polynomial") {
    HilbertPolynomialRepr hp;
    hp.coeffs = {1, -9, 18};
    auto inv = invariants_from_hp(hp);
    CHECK(inv.d_squared == 36);
    CHECK(inv.d_dot_k == 18);
    CHECK(inv.chi == 1);
}

TEST_CASE("configuration validation") {
    RunConfig c;
    CHECK(c.field().sqrt_minus7() == 16);
    c.sqrt_minus7 = 247;
    CHECK(c.field().sqrt_minus7() == 247);
    c.sqrt_minus7 = 15;
    CHECK_THROWS_AS(c.field(), ConfigError);
    RunConfig five;
    five.prime = 5;
    CHECK_THROWS_AS(five.field(), ConfigError);
    RunConfig composite;
    composite.prime = 91;
    CHECK_THROWS_AS(composite.field(), ConfigError);
}

TEST_CASE("group invariance and fixed points") {
    CertContext ctx(RunConfig{});
    auto g = check_group_invariance(ctx);
    CHECK(g.status == Status::Pass);
    auto f = check_fixed_points(ctx);
    CHECK(f.status == Status::Pass);
}

TEST_CASE("Hilbert series and invariants over GF(263)") {
    CertContext ctx(RunConfig{});
    CHECK(check_hilbert_series(ctx).status == Status::Pass);
    CHECK(check_surface_invariants(ctx).status == Status::Pass);
}

TEST_CASE("the conjugate dataset has the same Hilbert data") {
    RunConfig c;
    c.conjugate = true;
    CertContext ctx(c);
    CHECK(check_hilbert_series(ctx).status == Status::Pass);
}

TEST_CASE("the printed eq10 breaks the Hilbert polynomial") {
    PrimeField F(263, 16);
    std::vector<FpPoly> gens;
    for (auto& f : fpp_equations_as_printed()) gens.push_back(reduce_poly(f, F));
    auto hp = hilbert_polynomial_of(gens);
    CHECK(hp.equals({219}));
}

TEST_CASE("Groebner budget exhaustion becomes a skip") {
    RunConfig c;
    c.pair_budget = 10;
    CertContext ctx(c);
    CHECK(check_hilbert_series(ctx).status == Status::Skip);
}
