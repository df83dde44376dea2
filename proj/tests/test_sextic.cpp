#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fppcert/sextic.hpp"

using namespace fpp;

namespace {

SamplingParams params(int samples, int threads, std::uint64_t seed = 42) {
    SamplingParams P{PrimeField(263, 16)};
    P.samples = samples;
    P.threads = threads;
    P.seed = seed;
    return P;
}

QPoly y(const SexticData& d, int i) { return QPoly::variable(QDomain{}, d.vars, i); }

}  // namespace

TEST_CASE("seventh root exponent") {
    CHECK(seventh_root_exponent(263) == 75);
    CHECK((7 * 75) % 262 == 1);
    CHECK_THROWS_AS(seventh_root_exponent(29), SeventhRootUndefined);
    CHECK_THROWS_AS(seventh_root_exponent(337), SeventhRootUndefined);
}

TEST_CASE("sextic restrictions and symmetry") {
    const auto& d = sextic_data();
    auto zero = QPoly(QDomain{}, d.vars);
    auto f_y0 = d.f.substitute({y(d, 0), zero, zero, zero});
    CHECK(f_y0 == y(d, 0).pow(6).scale(QuadExtScalar(28)));
    auto f_no_y0 = d.f.substitute({zero, y(d, 1), y(d, 2), y(d, 3)});
    auto scalar = QuadExtScalar(14) + QuadExtScalar(2) * QuadExtScalar::omega();
    CHECK(f_no_y0 == (y(d, 1).pow(2) * d.h0.pow(2)).scale(scalar));
    CHECK(apply_sigma(d.f) == d.f);
    CHECK(apply_sigma(apply_sigma(d.h0)) == d.h0);
    CHECK(d.f.is_homogeneous());
    CHECK(d.f.degree() == 6);
    // The conjugate model is the coefficientwise conjugate.
    CHECK(sextic_data(true).f == conjugate_poly(d.f));
}

TEST_CASE("integral equations clear to the sextic") {
    const auto& d = sextic_data();
    CHECK(integral_equation_y4(d).lhs == d.f);
    CHECK(integral_equation_y5(d).lhs == d.f);
}

TEST_CASE("symbolic sextic checks pass for both conjugates") {
    for (bool conj : {false, true}) {
        CHECK(check_sextic_identities(conj).status == Status::Pass);
        CHECK(check_singular_locus(conj).status == Status::Pass);
        CHECK(check_curve_incidence(conj).status == Status::Pass);
        CHECK(check_integral_equations(conj).status == Status::Pass);
    }
}

TEST_CASE("sampling is deterministic and independent of the thread count") {
    SampleStats s1, s4;
    auto a = sample_surface_points(params(60, 1), &s1);
    auto b = sample_surface_points(params(60, 4), &s4);
    REQUIRE(a.size() == 60);
    CHECK(surface_transcript(a) == surface_transcript(b));
    CHECK(s1.draws == s4.draws);
    CHECK(s1.points == 60);
    auto c = sample_surface_points(params(60, 1, 7));
    CHECK(surface_transcript(a) != surface_transcript(c));
}

TEST_CASE("sampled points lie on the surface and z is the seventh root") {
    auto P = params(40, 2);
    SurfaceMaps maps(P.field);
    const auto& R = maps.ring();
    for (auto& s : sample_surface_points(P)) {
        SurfaceMaps::Point Y{R.embed(s.Y0), R.embed(s.Y2), R.embed(s.Y3)};
        CHECK(R.is_zero(maps.chart(Y)));
        CHECK(s.Y0 != 0);
        CHECK(R.pow(R.embed(s.z), 7) == maps.z7(Y));
        auto Y3 = maps.rho(maps.rho(maps.rho(Y)));
        CHECK(Y3 == Y);
        CHECK(maps.rho_inverse(maps.rho(Y)) == Y);
    }
}

TEST_CASE("transcript lines are JSON objects with the four fields") {
    auto pts = sample_surface_points(params(5, 1));
    std::istringstream in(surface_transcript(pts));
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.size() == 4);
        CHECK(j["Y0"].get<u32>() == pts[n].Y0);
        CHECK(j["z"].get<u32>() == pts[n].z);
        ++n;
    }
    CHECK(n == 5);
}

TEST_CASE("automorphism and z-transport checks") {
    auto P = params(100, 4);
    auto a = check_automorphism_order3(P);
    auto z = check_z_transport(P);
    CHECK(a.status == Status::Pass);
    CHECK(z.status == Status::Pass);
    CHECK(z.observed["seventh_root_exponent"] == 75);
    P.conjugate = true;
    CHECK(check_automorphism_order3(P).status == Status::Pass);
    CHECK(check_z_transport(P).status == Status::Pass);
}

TEST_CASE("embedding probe rejects all-zero scalings") {
    std::array<u32, 10> zero{};
    CHECK_THROWS_AS(probe_embedding(params(5, 1), zero), ConstraintViolation);
}
