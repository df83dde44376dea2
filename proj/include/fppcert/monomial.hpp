#pragma once
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fppcert/errors.hpp"

namespace fpp {

constexpr int kMaxVars = 12;
constexpr int kMaxExponent = 255;

// Exponent vector; unused trailing slots stay zero.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    static Monomial one() { return {}; }
    static Monomial var(int i, int power = 1) {
        Monomial m;
        if (power > kMaxExponent) throw ExponentOverflow("exponent " + std::to_string(power));
        m.e[i] = static_cast<std::uint8_t>(power);
        m.deg = static_cast<std::uint16_t>(power);
        return m;
    }
    static Monomial from_exponents(const std::vector<int>& ex);

    int operator[](int i) const { return e[i]; }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            if (s > kMaxExponent) throw ExponentOverflow("monomial product");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        r.deg = static_cast<std::uint16_t>(deg + o.deg);
        return r;
    }
    // Caller guarantees o | *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        r.deg = static_cast<std::uint16_t>(deg - o.deg);
        return r;
    }
    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = static_cast<std::uint16_t>(d);
        return r;
    }
    Monomial gcd(const Monomial& o) const {
        Monomial r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = e[i] < o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = static_cast<std::uint16_t>(d);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded reverse lexicographic order, x0 > x1 > ... . Returns >0, 0, <0.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

// The only order used by the toolkit; the struct documents the variable precedence.
struct MonomialOrder {
    enum class Kind { Grevlex } kind = Kind::Grevlex;
    int compare(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b); }
};

// All monomials of degree d in n variables, descending grevlex.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace fpp
