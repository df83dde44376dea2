#pragma once
// Prime fields GF(p) and the quadratic extension GF(p)[i]/(i^2+1).
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fppcert/errors.hpp"

namespace fpp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);
// Smallest r in [1, p-1] with r^2 = -7 mod p, if any.
std::optional<u32> find_sqrt_minus7(u32 p);

class PrimeField {
public:
    PrimeField() = default;
    // Validates primality, p not dividing 14, and r^2 = -7.
    PrimeField(u32 p, u32 sqrt_minus7);
    static PrimeField with_auto_root(u32 p);

    u32 modulus() const { return p_; }
    u32 sqrt_minus7() const { return r_; }

    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>((u64)a * b % p_); }
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;
    u32 from_int(i64 v) const {
        i64 m = v % (i64)p_;
        return static_cast<u32>(m < 0 ? m + p_ : m);
    }
    bool operator==(const PrimeField& o) const { return p_ == o.p_ && r_ == o.r_; }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

private:
    u32 p_ = 0;
    u32 r_ = 0;
    std::shared_ptr<const std::vector<u32>> inv_table_;  // small p only
};

// Element a + b*i with i^2 = -1. A field when p = 3 mod 4.
struct Fp2 {
    u32 a = 0, b = 0;
    bool operator==(const Fp2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }
};

class Fp2Ring {
public:
    explicit Fp2Ring(const PrimeField& F) : F_(F) {}
    const PrimeField& base() const { return F_; }
    Fp2 zero() const { return {0, 0}; }
    Fp2 one() const { return {1, 0}; }
    Fp2 i() const { return {0, 1}; }
    Fp2 embed(u32 x) const { return {x, 0}; }
    Fp2 from_int(i64 v) const { return {F_.from_int(v), 0}; }
    Fp2 add(Fp2 x, Fp2 y) const { return {F_.add(x.a, y.a), F_.add(x.b, y.b)}; }
    Fp2 sub(Fp2 x, Fp2 y) const { return {F_.sub(x.a, y.a), F_.sub(x.b, y.b)}; }
    Fp2 neg(Fp2 x) const { return {F_.neg(x.a), F_.neg(x.b)}; }
    Fp2 mul(Fp2 x, Fp2 y) const {
        return {F_.sub(F_.mul(x.a, y.a), F_.mul(x.b, y.b)), F_.add(F_.mul(x.a, y.b), F_.mul(x.b, y.a))};
    }
    bool is_zero(Fp2 x) const { return x.a == 0 && x.b == 0; }
    // Throws DenominatorVanished when x is not a unit.
    Fp2 inv(Fp2 x) const;
    Fp2 pow(Fp2 x, i64 e) const;

private:
    PrimeField F_;
};

}  // namespace fpp
