#include "fppcert/field.hpp"

namespace fpp {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<u32> find_sqrt_minus7(u32 p) {
    if (!is_prime(p) || p == 2 || p == 7) return std::nullopt;
    u64 target = (p - 7 % p) % p;
    for (u64 r = 1; r < p; ++r)
        if (r * r % p == target) return static_cast<u32>(r);
    return std::nullopt;
}

PrimeField::PrimeField(u32 p, u32 r) : p_(p), r_(r) {
    if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
    if (p == 2 || p == 7) throw InvalidField("p must not divide 14");
    if (r >= p || ((u64)r * r + 7) % p != 0)
        throw InvalidField(std::to_string(r) + "^2 != -7 mod " + std::to_string(p));
    if (p < (1u << 20)) {
        auto t = std::make_shared<std::vector<u32>>(p, 0);
        (*t)[1] = 1;
        for (u32 a = 2; a < p; ++a) (*t)[a] = static_cast<u32>((u64)(p - p / a) * (*t)[p % a] % p);
        inv_table_ = std::move(t);
    }
}

PrimeField PrimeField::with_auto_root(u32 p) {
    auto r = find_sqrt_minus7(p);
    if (!r) throw InvalidField("-7 is not a square modulo " + std::to_string(p));
    return PrimeField(p, *r);
}

u32 PrimeField::pow(u32 a, u64 e) const {
    u64 base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

u32 PrimeField::inv(u32 a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p_) + ")");
    if (inv_table_) return (*inv_table_)[a];
    return pow(a, p_ - 2);
}

Fp2 Fp2Ring::inv(Fp2 x) const {
    u32 n = F_.add(F_.mul(x.a, x.a), F_.mul(x.b, x.b));
    if (n == 0) throw DenominatorVanished("non-unit in GF(p)[i]");
    u32 ni = F_.inv(n);
    return {F_.mul(x.a, ni), F_.mul(F_.neg(x.b), ni)};
}

Fp2 Fp2Ring::pow(Fp2 x, i64 e) const {
    if (e < 0) {
        x = inv(x);
        e = -e;
    }
    Fp2 acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

}  // namespace fpp
