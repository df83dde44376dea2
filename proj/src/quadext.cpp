#include "fppcert/quadext.hpp"

namespace fpp {

QuadExtScalar QuadExtScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in Q(w)");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

namespace {
std::string frac(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}
}  // namespace

std::string QuadExtScalar::to_string() const { return "(" + frac(re_) + "+" + frac(im_) + "*w)"; }

u32 reduce_rational(const mpq_class& q, const PrimeField& F) {
    mpz_class p(F.modulus());
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (den == 0) throw DenominatorNotInvertible(q.get_str() + " mod " + p.get_str());
    mpz_class nn = (num + p) % p;
    u32 n = static_cast<u32>(nn.get_ui());
    return F.mul(n, F.inv(static_cast<u32>(den.get_ui())));
}

u32 reduce_to_prime_field(const QuadExtScalar& x, const PrimeField& F) {
    return F.add(reduce_rational(x.re(), F), F.mul(reduce_rational(x.im(), F), F.sqrt_minus7()));
}

}  // namespace fpp
