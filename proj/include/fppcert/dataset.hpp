#pragma once
// The embedded equation set of the surface in P^9, its order-21 symmetry
// group, the curve ideal, minor selections and canonical serialization.
#include <array>
#include <string>
#include <vector>

#include "fppcert/polynomial.hpp"

namespace fpp {

// U0..U9 (shared instance, so rings compare by pointer).
const VarsPtr& u_vars();
// y0..y3.
const VarsPtr& y_vars();

struct GroupActionSpec {
    // Exponent of the primitive 7th root scaling each coordinate.
    std::array<int, 10> g7_weights{0, 6, 5, 3, 1, 2, 4, 1, 2, 4};
    // Variable replacement U_i -> U_{g3_perm[i]}.
    std::array<int, 10> g3_perm{0, 2, 3, 1, 5, 6, 4, 8, 9, 7};
    bool inverse_convention = false;

    std::array<int, 10> permutation(int power) const;
};
const GroupActionSpec& default_action();

int g7_weight(const Monomial& m, const GroupActionSpec& A = default_action());
// Every monomial of f has the same g7 weight; returns it, or -1 if mixed.
int g7_weight_of(const QPoly& f, const GroupActionSpec& A = default_action());

template <class D>
Polynomial<D> apply_g3(const Polynomial<D>& f, int power = 1, const GroupActionSpec& A = default_action()) {
    auto perm = A.permutation(((power % 3) + 3) % 3);
    std::vector<Polynomial<D>> images;
    for (int i = 0; i < f.nvars(); ++i) images.push_back(Polynomial<D>::variable(f.domain(), f.vars(), perm[i]));
    return f.substitute(images);
}

// The 36 printed cubics; entries 5, 6, 8, 9, 11, 12 are produced from 4, 7, 10.
const std::vector<QPoly>& base_equations();
std::vector<QPoly> expand_equations(const std::vector<QPoly>& base, const GroupActionSpec& A = default_action());
// eq1..eq84 (0-based vector).
const std::vector<QPoly>& fpp_equations();
// The 84 equations generated from the uncorrected printed eq10.
std::vector<QPoly> fpp_equations_as_printed();

// U0, the six printed quadrics and their g3, g3^2 images (19 generators).
std::vector<QPoly> curve_c_generators();
const std::vector<QPoly>& curve_c_quadrics();

struct MinorSelection {
    std::array<int, 7> rows;  // 1-based equation numbers
    std::array<int, 7> cols;  // variable indices
    int guarded_point;        // index into fixed_points()
};
// Guard assignment is filled in from data by the certify module; the defaults
// follow the listing order.
std::array<MinorSelection, 3> minor_selections();

// Coordinate points of U9, U8, U7.
std::array<std::array<int, 10>, 3> fixed_points();

struct Serialized {
    std::string text;
    std::string sha256;
};
Serialized canonical_serialize(const std::vector<QPoly>& polys);
std::vector<QPoly> parse_canonical(const std::string& text, const VarsPtr& vars);
std::string sha256_hex(const std::string& data);

std::vector<QPoly> conjugate_all(const std::vector<QPoly>& polys);

}  // namespace fpp
