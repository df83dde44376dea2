#pragma once
// Groebner bases of submodules of k[x,y]^n over a prime field, used to decide
// whether a module quotient has finite length and to measure it.
//
// Component k carries a degree shift; the term x^a y^b e_k has degree
// a + b + shift[k]. Terms are ordered by degree (higher first), then by
// component (lower index first), then by the x exponent (higher first).
#include <vector>

#include "fppcert/field.hpp"

namespace fpp {

struct ModuleTerm {
    int comp;
    int a, b;  // exponents of x and y
    u32 c;
};
using ModuleVector = std::vector<ModuleTerm>;

struct ModuleQuotientInfo {
    bool finite_length = false;
    bool zero = false;
    long length = -1;  // k-dimension of the quotient when finite
    int basis_size = 0;
    long pairs_reduced = 0;
    int max_degree = 0;
    double ms = 0;
};

struct ModuleGbOptions {
    int degree_limit = 96;      // BudgetExceeded if a term would go above it
    double time_budget_s = -1;  // BudgetExceeded when exceeded
    bool full_reduction = true;  // false: top reduction only (same leading terms)
};

// Quotient of k[x,y]^n (n = shifts.size()) by the span of `gens`.
ModuleQuotientInfo module_quotient(const PrimeField& F, const std::vector<int>& shifts,
                                   const std::vector<ModuleVector>& gens, const ModuleGbOptions& opts = {});
// Adds the generator groups one at a time, completing the basis in between;
// entry i describes the quotient by the first i+1 groups.
std::vector<ModuleQuotientInfo> module_quotient_staged(const PrimeField& F, const std::vector<int>& shifts,
                                                       const std::vector<std::vector<ModuleVector>>& stages,
                                                       const ModuleGbOptions& opts = {});

}  // namespace fpp
