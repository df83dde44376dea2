#include <doctest.h>

#include <sstream>

#include "fppcert/lattice.hpp"

using namespace fpp;

TEST_CASE("curve labels and indices") {
    const auto& L = curve_labels();
    CHECK(L[s_index(0, 0)] == "S1");
    CHECK(L[s_index(1, 2)] == "S2''");
    CHECK(L[fibre_index(0, 0, 0)] == "A1");
    CHECK(L[fibre_index(1, 1, 2)] == "C2'");
    CHECK(case_triple(1) == std::array<int, 3>{1, 0, 2});
    CHECK(case_triple(2) == std::array<int, 3>{0, 2, 1});
    CHECK_THROWS_AS(case_triple(3), ConstraintViolation);
}

TEST_CASE("build_gram rejects assignments violating the case sums") {
    CHECK_THROWS_AS(build_gram({2, {1, 1, 0, 0, 1, 1}}), ConstraintViolation);
    CHECK_THROWS_AS(build_gram({1, {-1, 0, 1, 2, 0, 1}}), ConstraintViolation);
    CHECK_NOTHROW(build_gram({1, {1, 0, 1, 0, 0, 1}}));
}

TEST_CASE("target Gram matrix") {
    IntMatrix G = build_gram({2, {0, 1, 0, 0, 1, 1}});
    CHECK(G.size() == 24);
    for (int x = 0; x < 24; ++x)
        for (int y = 0; y < 24; ++y) CHECK(G[x][y] == G[y][x]);
    for (int i = 0; i < 6; ++i) CHECK(G[i][i] == -3);
    for (int i = 6; i < 24; ++i) CHECK(G[i][i] == -2);
    CHECK(integer_rank(G) == 19);
    CHECK(smith_rank(G) == 19);
    CHECK(inertia(G).positive == 1);
    // The sections are pairwise disjoint.
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (a != b) CHECK(G[a][b] == 0);
}

TEST_CASE("I9 fibre classes span rank 8") {
    IntMatrix G = build_gram({2, {0, 1, 0, 0, 1, 1}});
    for (int sheet = 0; sheet < 2; ++sheet) {
        IntMatrix F(9, std::vector<long>(9));
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) F[x][y] = G[6 + 9 * sheet + x][6 + 9 * sheet + y];
        CHECK(integer_rank(F) == 8);
    }
}

TEST_CASE("enumeration covers 72 assignments and one survivor class") {
    auto rows = enumerate_configurations();
    CHECK(rows.size() == 72);
    int feasible = 0, survivors = 0;
    for (auto& e : rows) {
        feasible += e.feasible;
        if (!e.feasible) continue;
        CHECK(e.rank == e.smith_rank);
        if (survives(e)) {
            ++survivors;
            CHECK(e.cfg.case_id == 2);
            CHECK(e.rank == 19);
        }
        if (e.cfg.case_id == 1) CHECK_FALSE(survives(e));
    }
    CHECK(feasible == 12);
    CHECK(survivors >= 1);
    CHECK(relabel_sheets({2, {0, 1, 0, 0, 1, 1}}).a == std::array<int, 6>{0, 1, 1, 0, 1, 0});
}

TEST_CASE("S^2 = -2 variant leaves nothing within the rank bound") {
    GramOptions o;
    o.s_self = -2;
    for (auto& e : enumerate_configurations(o)) CHECK_FALSE(within_rank_bound(e));
}

TEST_CASE("CSV dump has a header and one row per assignment") {
    std::istringstream in(lattice_csv(enumerate_configurations()));
    std::string line;
    std::getline(in, line);
    CHECK(line == "case,s1a1,s1a1p,s1a1pp,s2a1,s2a1p,s2a1pp,feasible,rank,smith_rank,positive,survivor");
    int n = 0, marked = 0;
    while (std::getline(in, line)) {
        ++n;
        marked += line.back() == '1';
    }
    CHECK(n == 72);
    CHECK(marked >= 1);
}

TEST_CASE("lattice check passes") {
    auto r = check_lattice_search();
    CHECK(r.status == Status::Pass);
    CHECK(r.observed["survivor_classes"] == 1);
    CHECK(r.observed["variant_s_self_minus2"]["survivor_classes"] == 0);
}
