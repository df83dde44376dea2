#pragma once
// Intersection matrices of the 24 rational curves on the double cover: six
// sections S (two sheets, three rotations) and the two I9 fibres. The unknown
// pairings of S_1, S_2 with A_1, A_1', A_1'' are enumerated and filtered by
// the Picard rank bound.
#include <array>
#include <string>
#include <vector>

#include "fppcert/linalg.hpp"
#include "fppcert/report.hpp"

namespace fpp {

// Curve order: S1, S2, S1', S2', S1'', S2'', then A1, B1, C1, A1', ..., C1''
// and A2, ..., C2''.
const std::array<std::string, 24>& curve_labels();
int s_index(int sheet, int rot);                 // sheet 0/1, rot 0..2
int fibre_index(int sheet, int rot, int kind);  // kind 0/1/2 = A/B/C

// (S.A, S.A', S.A'') for case 1 or 2.
std::array<int, 3> case_triple(int case_id);

struct CurveConfiguration {
    int case_id = 2;
    // S1A1, S1A1', S1A1'', S2A1, S2A1', S2A1''.
    std::array<int, 6> a{};
};

enum class RhoSheets { Preserve, Swap };

struct GramOptions {
    int s_self = -3;
    RhoSheets rho = RhoSheets::Preserve;
};

// Throws ConstraintViolation when S1A1^(k) + S2A1^(k) differs from the case triple.
IntMatrix build_gram(const CurveConfiguration& cfg, const GramOptions& opts = {});

struct EnumeratedConfig {
    CurveConfiguration cfg;
    bool feasible = false;
    int rank = -1;        // rational elimination
    int smith_rank = -1;  // Smith normal form
    int positive = -1;    // positive eigenvalues of the Gram matrix
};

// All assignments with each unknown at most its constraint sum, both cases.
std::vector<EnumeratedConfig> enumerate_configurations(const GramOptions& opts = {});
// Rank at most h^{1,1} = 20.
bool within_rank_bound(const EnumeratedConfig& e);
// Survivors also satisfy the Hodge index bound: at most one positive
// eigenvalue, since the Picard lattice has signature (1, rank - 1).
bool survives(const EnumeratedConfig& e);
// Swap of the S1 and S2 halves of the assignment.
CurveConfiguration relabel_sheets(const CurveConfiguration& c);

// Columns: case,s1a1,s1a1p,s1a1pp,s2a1,s2a1p,s2a1pp,feasible,rank,smith_rank,positive,survivor.
std::string lattice_csv(const std::vector<EnumeratedConfig>& rows);

CheckRecord check_lattice_search();

}  // namespace fpp
