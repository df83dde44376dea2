#pragma once
// Dense univariate polynomials over GF(p) and their roots in GF(p).
#include <random>
#include <vector>

#include "fppcert/field.hpp"

namespace fpp {

// Coefficients from the constant term up; no trailing zeros.
using UPoly = std::vector<u32>;

void upoly_trim(UPoly& a);
int upoly_degree(const UPoly& a);  // -1 for zero
UPoly upoly_sub(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly upoly_mul(const PrimeField& F, const UPoly& a, const UPoly& b);
// Remainder of a modulo a nonzero m.
UPoly upoly_mod(const PrimeField& F, UPoly a, const UPoly& m);
UPoly upoly_gcd(const PrimeField& F, UPoly a, UPoly b);  // monic, zero if both are zero
UPoly upoly_powmod(const PrimeField& F, const UPoly& base, u64 e, const UPoly& m);
u32 upoly_eval(const PrimeField& F, const UPoly& a, u32 x);

// Distinct roots of a nonzero f in GF(p), ascending. Roots of gcd(f, X^p - X)
// are separated by random splitting with (X + d)^((p-1)/2) - 1, so the rng is
// only consumed, never needed for correctness.
std::vector<u32> roots_mod_p(const PrimeField& F, const UPoly& f, std::mt19937_64& rng);

}  // namespace fpp
