#include "fppcert/univariate.hpp"

#include <algorithm>

namespace fpp {

void upoly_trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int upoly_degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly upoly_sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    upoly_trim(r);
    return r;
}

UPoly upoly_mul(const PrimeField& F, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    upoly_trim(r);
    return r;
}

UPoly upoly_mod(const PrimeField& F, UPoly a, const UPoly& m) {
    if (m.empty()) throw DivisionByZero("polynomial modulus is zero");
    upoly_trim(a);
    const int dm = upoly_degree(m);
    const u32 inv = F.inv(m.back());
    for (int d = upoly_degree(a); d >= dm; --d) {
        u32 c = F.mul(a[d], inv);
        if (c == 0) continue;
        for (int k = 0; k <= dm; ++k) a[d - dm + k] = F.sub(a[d - dm + k], F.mul(c, m[k]));
    }
    a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(dm)));
    upoly_trim(a);
    return a;
}

UPoly upoly_gcd(const PrimeField& F, UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    u32 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
    return a;
}

UPoly upoly_powmod(const PrimeField& F, const UPoly& base, u64 e, const UPoly& m) {
    UPoly acc = upoly_mod(F, {1}, m);
    UPoly b = upoly_mod(F, base, m);
    while (e) {
        if (e & 1) acc = upoly_mod(F, upoly_mul(F, acc, b), m);
        e >>= 1;
        if (e) b = upoly_mod(F, upoly_mul(F, b, b), m);
    }
    return acc;
}

u32 upoly_eval(const PrimeField& F, const UPoly& a, u32 x) {
    u32 v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = F.add(F.mul(v, x), a[i]);
    return v;
}

namespace {

void split_linear(const PrimeField& F, const UPoly& g, std::mt19937_64& rng, std::vector<u32>& out) {
    const int d = upoly_degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.neg(F.mul(g[0], F.inv(g[1]))));
        return;
    }
    const u32 p = F.modulus();
    std::uniform_int_distribution<u32> pick(0, p - 1);
    for (;;) {
        UPoly h = upoly_powmod(F, {pick(rng), 1}, (p - 1) / 2, g);
        h = upoly_gcd(F, upoly_sub(F, h, {1}), g);
        const int dh = upoly_degree(h);
        if (dh <= 0 || dh >= d) continue;
        // Exact quotient g / h by long division.
        UPoly q(static_cast<std::size_t>(d - dh + 1), 0), r = g;
        for (int k = d; k >= dh; --k) {
            u32 c = r[k];  // h is monic
            q[k - dh] = c;
            for (int j = 0; j <= dh; ++j) r[k - dh + j] = F.sub(r[k - dh + j], F.mul(c, h[j]));
        }
        split_linear(F, h, rng, out);
        split_linear(F, q, rng, out);
        return;
    }
}

}  // namespace

std::vector<u32> roots_mod_p(const PrimeField& F, const UPoly& f_in, std::mt19937_64& rng) {
    UPoly f = f_in;
    upoly_trim(f);
    if (f.empty()) throw DivisionByZero("roots of the zero polynomial");
    std::vector<u32> out;
    if (upoly_degree(f) == 0) return out;
    if (F.modulus() == 2) {
        for (u32 x = 0; x < 2; ++x)
            if (upoly_eval(F, f, x) == 0) out.push_back(x);
        return out;
    }
    UPoly xp = upoly_powmod(F, {0, 1}, F.modulus(), f);
    UPoly g = upoly_gcd(F, f, upoly_sub(F, xp, {0, 1}));
    split_linear(F, g, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fpp
