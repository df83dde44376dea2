#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fppcert/dataset.hpp"

using namespace fpp;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("84 homogeneous cubics, each a g7 eigenvector") {
    const auto& eqs = fpp_equations();
    REQUIRE(eqs.size() == 84);
    CHECK(base_equations().size() == 36);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        CHECK(eqs[i].is_homogeneous());
        CHECK(eqs[i].degree() == 3);
        int w = g7_weight_of(eqs[i]);
        CHECK(w >= 0);
        if (i < 12) CHECK(w == 0);
    }
    CHECK(g7_weight_of(eqs[12]) == 1);
    CHECK(g7_weight_of(eqs[24]) == 6);
}

TEST_CASE("orbit identities hold verbatim") {
    const auto& eqs = fpp_equations();
    CHECK(eqs[4] == apply_g3(eqs[3]));
    CHECK(eqs[36] == apply_g3(eqs[12]));
    CHECK(apply_g3(eqs[0]) == eqs[0]);
    for (auto& f : eqs) CHECK(apply_g3(f, 3) == f);
}

TEST_CASE("canonical serialization round-trips and matches the shipped file") {
    const auto& eqs = fpp_equations();
    auto s = canonical_serialize(eqs);
    CHECK(std::count(s.text.begin(), s.text.end(), '\n') == 84);
    CHECK(parse_canonical(s.text, u_vars()) == eqs);
    CHECK(s.sha256 == sha256_hex(s.text));

    const std::string dir = FPPCERT_DATA_DIR;
    CHECK(slurp(dir + "/fpp84.eqs") == s.text);
    std::string line = slurp(dir + "/fpp84.eqs.sha256");
    CHECK(line.substr(0, 64) == s.sha256);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("conjugation is an involution and changes the digest") {
    const auto& eqs = fpp_equations();
    auto c = conjugate_all(eqs);
    CHECK(conjugate_all(c) == eqs);
    CHECK(canonical_serialize(c).sha256 != canonical_serialize(eqs).sha256);
}

TEST_CASE("the printed eq10 variant differs from the corrected dataset") {
    auto printed = fpp_equations_as_printed();
    REQUIRE(printed.size() == 84);
    int differ = 0;
    for (std::size_t i = 0; i < 84; ++i) differ += printed[i] != fpp_equations()[i];
    CHECK(differ == 3);
}

TEST_CASE("curve ideal and fixed points") {
    CHECK(curve_c_quadrics().size() == 6);
    CHECK(curve_c_generators().size() == 19);
    for (auto& pt : fixed_points()) {
        std::vector<QuadExtScalar> v(pt.begin(), pt.end());
        for (auto& f : fpp_equations()) CHECK(eval_q(f, v).is_zero());
    }
    CHECK_THROWS_AS(parse_canonical("(1/1+0/1*w)*U1*U2*", u_vars()), ParseError);
}
