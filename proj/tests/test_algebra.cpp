#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "fppcert/dataset.hpp"
#include "fppcert/expr.hpp"
#include "fppcert/linalg.hpp"
#include "fppcert/univariate.hpp"

using namespace fpp;

namespace {

QuadExtScalar random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-50, 50), den(1, 9);
    return {mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng))};
}

}  // namespace

TEST_CASE("prime field axioms hold on random elements") {
    std::mt19937_64 rng(1);
    for (u32 p : {263u, 337u, 8191u}) {
        PrimeField F = PrimeField::with_auto_root(p);
        std::uniform_int_distribution<u32> pick(0, p - 1);
        for (int t = 0; t < 2000; ++t) {
            u32 a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        }
        CHECK(F.pow(3, p - 1) == 1);
    }
}

TEST_CASE("Q(w) axioms and w^2 = -7") {
    std::mt19937_64 rng(2);
    QuadExtScalar w = QuadExtScalar::omega();
    CHECK(w * w == QuadExtScalar(-7));
    for (int t = 0; t < 300; ++t) {
        auto a = random_q(rng), b = random_q(rng), c = random_q(rng);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.norm() == (a * a.conj()).re());
        if (!a.is_zero()) CHECK(a * a.inv() == QuadExtScalar(1));
    }
}

TEST_CASE("reduction to GF(p) is a ring morphism") {
    std::mt19937_64 rng(3);
    PrimeField F(263, 16);
    CHECK(reduce_to_prime_field(QuadExtScalar::omega(), F) == 16);
    for (int t = 0; t < 300; ++t) {
        auto a = random_q(rng), b = random_q(rng);
        u32 ra = reduce_to_prime_field(a, F), rb = reduce_to_prime_field(b, F);
        CHECK(reduce_to_prime_field(a * b, F) == F.mul(ra, rb));
        CHECK(reduce_to_prime_field(a + b, F) == F.add(ra, rb));
    }
}

TEST_CASE("square root search and field validation") {
    CHECK(find_sqrt_minus7(263) == 16u);
    CHECK(find_sqrt_minus7(337) == 88u);  // 79^2 = 175 mod 337
    CHECK((88 * 88 + 7) % 337 == 0);
    CHECK_FALSE(find_sqrt_minus7(5).has_value());
    CHECK_THROWS_AS(PrimeField(263, 17), InvalidField);
    CHECK_THROWS_AS(PrimeField(7, 0), InvalidField);
    CHECK_THROWS_AS(PrimeField(264, 16), InvalidField);
}

TEST_CASE("GF(p)[i] arithmetic") {
    PrimeField F(263, 16);
    Fp2Ring R(F);
    CHECK(R.mul(R.i(), R.i()) == R.from_int(-1));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<u32> pick(0, 262);
    // 263 = 3 mod 4, so GF(263)[i] is a field.
    for (int t = 0; t < 500; ++t) {
        Fp2 x{pick(rng), pick(rng)};
        if (R.is_zero(x)) continue;
        CHECK(R.mul(x, R.inv(x)) == R.one());
        CHECK(R.pow(x, 263 * 263 - 1) == R.one());
    }
}

TEST_CASE("polynomial arithmetic and the Euler identity on the dataset") {
    const auto& eqs = fpp_equations();
    REQUIRE(eqs.size() == 84);
    const auto& V = u_vars();
    for (const auto& f : eqs) {
        REQUIRE(f.is_homogeneous());
        CHECK(f.degree() == 3);
        QPoly euler(QDomain{}, V);
        for (int i = 0; i < 10; ++i) euler += QPoly::variable(QDomain{}, V, i) * f.diff(i);
        CHECK(euler == f.scale(QuadExtScalar(3)));
    }
}

TEST_CASE("polynomial ring identities") {
    auto V = indexed_vars("x", 3);
    QPoly f = parse_qpoly("x0^2 + w*x1*x2 - 3", V);
    QPoly g = parse_qpoly("x1 - 1/2*x0 + x2^3", V);
    QPoly h = parse_qpoly("(2+w)*x2", V);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g).diff(0) == f.diff(0) * g + f * g.diff(0));
    CHECK(divide_exact(f * g, g).value() == f);
    CHECK_FALSE(divide_exact(f, g).has_value());
    CHECK(parse_qpoly(f.to_string(), V) == f);
    CHECK_THROWS_AS(parse_qpoly("x0 / x1", V), ParseError);
    auto W = indexed_vars("x", 2);
    CHECK_THROWS_AS(f + parse_qpoly("x0", W), RingMismatch);
}

TEST_CASE("univariate roots agree with exhaustive evaluation") {
    std::mt19937_64 rng(5);
    for (u32 p : {263u, 337u}) {
        PrimeField F = PrimeField::with_auto_root(p);
        std::uniform_int_distribution<u32> pick(0, p - 1);
        for (int t = 0; t < 60; ++t) {
            int deg = 1 + t % 8;
            UPoly f(deg + 1);
            for (auto& c : f) c = pick(rng);
            f.back() = 1 + pick(rng) % (p - 1);
            std::vector<u32> brute;
            for (u32 x = 0; x < p; ++x)
                if (upoly_eval(F, f, x) == 0) brute.push_back(x);
            CHECK(roots_mod_p(F, f, rng) == brute);
        }
        // Products of distinct linear factors.
        UPoly g{1};
        for (u32 r : {3u, 17u, 100u}) g = upoly_mul(F, g, {F.neg(r), 1});
        CHECK(roots_mod_p(F, g, rng) == std::vector<u32>{3, 17, 100});
    }
}

TEST_CASE("integer rank, Smith form and inertia") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 9;
        IntMatrix M(n, std::vector<long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) M[i][j] = M[j][i] = (t % 3 == 0 && j > i + 1) ? 0 : d(rng);
        Eigen::MatrixXd E(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) E(i, j) = static_cast<double>(M[i][j]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(E);
        int pos = 0, neg = 0;
        for (int i = 0; i < n; ++i) {
            double v = es.eigenvalues()(i);
            if (v > 1e-8) ++pos;
            if (v < -1e-8) ++neg;
        }
        Inertia in = inertia(M);
        CHECK(in.positive == pos);
        CHECK(in.negative == neg);
        CHECK(integer_rank(M) == pos + neg);
        CHECK(smith_rank(M) == pos + neg);
        auto inv = smith_invariants(M);
        for (std::size_t k = 1; k < inv.size(); ++k)
            if (inv[k]) CHECK(inv[k] % inv[k - 1] == 0);
    }
    IntMatrix A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    CHECK(smith_invariants(A) == std::vector<long>{2, 6, 12});
}
