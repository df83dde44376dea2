#pragma once
// Hilbert series of monomial ideals and Hilbert polynomials.
#include <gmpxx.h>

#include <string>
#include <vector>

#include "fppcert/monomial.hpp"

namespace fpp {

// HS(t) = N(t) / (1 - t)^n.
struct HilbertNumerator {
    std::vector<mpz_class> coeffs;  // coeffs[i] is the coefficient of t^i
    int n = 0;

    bool operator==(const HilbertNumerator& o) const { return n == o.n && coeffs == o.coeffs; }
    std::string to_string() const;
};

struct HilbertPolynomialRepr {
    std::vector<mpq_class> coeffs;  // HP(k) = sum coeffs[i] k^i; empty when HP = 0
    int dimension = -1;             // degree of HP (projective dimension), -1 for HP = 0
    int k0 = 0;                     // HF(k) = HP(k) for all k >= k0
    std::vector<mpz_class> reduced_numerator;  // N(t) with all (1-t) factors removed
    int delta = 0;                             // remaining power of (1-t)

    mpq_class eval(long k) const;
    mpq_class leading_coefficient() const { return coeffs.empty() ? mpq_class(0) : coeffs.back(); }
    // "18k^2-9k+1" style text.
    std::string to_string() const;
    bool equals(const std::vector<long>& c) const;
};

enum class PivotRule { MostFrequentMedian, FirstVariable };

std::vector<Monomial> minimalize(std::vector<Monomial> gens);
HilbertNumerator hilbert_numerator(const std::vector<Monomial>& lead_ideal, int n,
                                   PivotRule rule = PivotRule::MostFrequentMedian);
HilbertPolynomialRepr hilbert_polynomial(const HilbertNumerator& N);
// Coefficient of t^k in N(t)/(1-t)^n.
mpz_class hilbert_function(const HilbertNumerator& N, long k);
// Counts degree-k monomials outside the ideal by enumeration.
long hilbert_function_oracle(const std::vector<Monomial>& lead_ideal, int n, int k, long budget = 5'000'000);

// Numerator of a polynomial product (1 - t^a)(1 - t^b)... times N.
std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

}  // namespace fpp
