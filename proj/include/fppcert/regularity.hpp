#pragma once
// Coordinate rings that are free over a polynomial subring, and a
// certificate that given forms cut out the empty set.
//
// When the leading ideal of J only involves the head variables
// x_0..x_{h-1} and has finitely many standard monomials in them, A = k[x]/J
// is a free module over P = k[x_h..x_{n-1}] with the standard monomials as a
// basis. Multiplication by an element of A is then a square matrix over P,
// and questions about A/(f_1, ..., f_r) become module questions over P.
#include <cstdint>
#include <memory>
#include <vector>

#include "fppcert/groebner.hpp"
#include "fppcert/hilbert.hpp"
#include "fppcert/module_gb.hpp"

namespace fpp {

class FreeAlgebraModel {
public:
    // Throws ConstraintViolation when A is not free over the tail variables in
    // the given coordinates.
    FreeAlgebraModel(const GroebnerBasis<FpDomain>& gb, int first_tail_var);

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const VarsPtr& tail_vars() const { return tail_vars_; }
    int first_tail_var() const { return h_; }

    FpPoly normal_form(const FpPoly& f);
    // Coordinates of a normal form in the standard basis, as tail polynomials.
    std::vector<FpPoly> coordinates(const FpPoly& nf) const;
    // Coordinates of s_j * v where s_j is the j-th basis monomial.
    std::vector<FpPoly> times_basis(int j, const std::vector<FpPoly>& v) const;

private:
    PrimeField F_;
    VarsPtr vars_, tail_vars_;
    int h_;
    std::vector<Monomial> basis_;
    std::vector<std::vector<std::vector<FpPoly>>> table_;  // table_[j][k] = coords of s_j s_k
    std::shared_ptr<Reducer<FpDomain>> reducer_;
};

struct RegularityCertificate {
    int rank = 0;
    std::vector<int> basis_degrees;
    int attempts = 0;  // coordinate changes tried (1 = original coordinates)
    // Forms 1..r-1 restricted to the hyperplane at infinity of the last tail variable.
    ModuleQuotientInfo at_infinity;
    // All forms on the affine chart where the last tail variable is 1.
    ModuleQuotientInfo affine_all;
    // Forms 1..r-1 on the same chart.
    ModuleQuotientInfo affine_prefix;
    // Hilbert polynomials of J + (f_1..f_i), i = 1..r, valid when `holds`.
    std::vector<HilbertPolynomialRepr> prefix_hp;
    bool holds = false;
    double ms = 0;
};

struct RegularityOptions {
    std::uint64_t seed = 0;
    int max_attempts = 3;
    ModuleGbOptions module;
};

// Certifies that the homogeneous forms f_1..f_r (r = number of tail variables)
// form a regular sequence on A and that V(J + (f)) is empty. `numerator` is
// the Hilbert numerator of J.
RegularityCertificate certify_regular_sequence(FreeAlgebraModel& model, const std::vector<FpPoly>& forms,
                                               const HilbertNumerator& numerator,
                                               const RegularityOptions& opts = {});

}  // namespace fpp
