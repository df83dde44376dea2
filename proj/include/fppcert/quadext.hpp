#pragma once
// Exact arithmetic in Q(w), w^2 = -7.
#include <gmpxx.h>

#include <string>

#include "fppcert/field.hpp"

namespace fpp {

class QuadExtScalar {
public:
    QuadExtScalar() = default;
    QuadExtScalar(long v) : re_(v) {}  // NOLINT(implicit)
    QuadExtScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static QuadExtScalar omega() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_rational() const { return sgn(im_) == 0; }

    QuadExtScalar operator+(const QuadExtScalar& o) const { return {re_ + o.re_, im_ + o.im_}; }
    QuadExtScalar operator-(const QuadExtScalar& o) const { return {re_ - o.re_, im_ - o.im_}; }
    QuadExtScalar operator-() const { return {-re_, -im_}; }
    QuadExtScalar operator*(const QuadExtScalar& o) const {
        return {re_ * o.re_ - 7 * im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    QuadExtScalar conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + 7 * im_ * im_; }
    QuadExtScalar inv() const;
    QuadExtScalar operator/(const QuadExtScalar& o) const { return *this * o.inv(); }
    QuadExtScalar& operator+=(const QuadExtScalar& o) { return *this = *this + o; }
    QuadExtScalar& operator-=(const QuadExtScalar& o) { return *this = *this - o; }
    QuadExtScalar& operator*=(const QuadExtScalar& o) { return *this = *this * o; }
    bool operator==(const QuadExtScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const QuadExtScalar& o) const { return !(*this == o); }

    // Canonical text "(a/b+c/d*w)".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// a + b*w  ->  a + b*r (mod p). Throws DenominatorNotInvertible.
u32 reduce_to_prime_field(const QuadExtScalar& x, const PrimeField& F);
u32 reduce_rational(const mpq_class& q, const PrimeField& F);

}  // namespace fpp
