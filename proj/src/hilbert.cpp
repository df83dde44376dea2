#include "fppcert/hilbert.hpp"

#include <algorithm>
#include <map>

namespace fpp {

namespace {

using Num = std::vector<mpz_class>;

void trim(Num& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Num one_minus_t_pow(int d) {
    Num r(d + 1, 0);
    r[0] = 1;
    r[d] -= 1;
    if (d == 0) r = {0};
    return r;
}

mpz_class binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// I : x^e (exponent-wise saturation of that single variable power).
std::vector<Monomial> colon(const std::vector<Monomial>& I, int var, int e) {
    std::vector<Monomial> out;
    out.reserve(I.size());
    for (auto m : I) {
        int k = m.e[var];
        int drop = std::min(k, e);
        m.e[var] = static_cast<std::uint8_t>(k - drop);
        m.deg = static_cast<std::uint16_t>(m.deg - drop);
        out.push_back(m);
    }
    return minimalize(std::move(out));
}

Num numerator_rec(std::vector<Monomial> I, int n, PivotRule rule) {
    if (I.empty()) return {1};
    for (auto& m : I)
        if (m.deg == 0) return {0};  // unit ideal
    // Linear generators split off as factors (1 - t).
    Num factor{1};
    std::vector<Monomial> rest;
    for (auto& m : I) {
        if (m.deg == 1)
            factor = poly_mul(factor, one_minus_t_pow(1));
        else
            rest.push_back(m);
    }
    if (rest.size() != I.size()) {
        // Minimality guarantees no other generator involves a linear one.
        return poly_mul(factor, numerator_rec(std::move(rest), n, rule));
    }
    // Pairwise coprime generators: product formula.
    std::vector<int> count(n, 0);
    bool coprime = true;
    for (auto& m : I)
        for (int v = 0; v < n; ++v)
            if (m.e[v] && ++count[v] > 1) coprime = false;
    if (coprime) {
        Num acc{1};
        for (auto& m : I) acc = poly_mul(acc, one_minus_t_pow(m.deg));
        return acc;
    }
    int var = -1, e = 1;
    if (rule == PivotRule::MostFrequentMedian) {
        var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
        std::vector<int> ex;
        for (auto& m : I)
            if (m.e[var]) ex.push_back(m.e[var]);
        std::sort(ex.begin(), ex.end());
        e = ex[ex.size() / 2];
    } else {
        for (int v = 0; v < n && var < 0; ++v)
            if (count[v] > 1) var = v;
        e = 1;
    }
    // The pivot must lie outside I: stay below any pure power of var.
    for (auto& m : I)
        if (m.e[var] == m.deg) e = std::min(e, m.deg - 1);
    // N(I) = N(I + <p>) + t^deg(p) N(I : p).
    std::vector<Monomial> sum = I;
    sum.push_back(Monomial::var(var, e));
    Num a = numerator_rec(minimalize(std::move(sum)), n, rule);
    Num b = numerator_rec(colon(I, var, e), n, rule);
    Num out(std::max(a.size(), b.size() + e), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i + e] += b[i];
    trim(out);
    if (out.empty()) out = {0};
    return out;
}

}  // namespace

Num poly_mul(const Num& a, const Num& b) {
    Num r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool divisible = false;
        for (auto& g : out)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

HilbertNumerator hilbert_numerator(const std::vector<Monomial>& lead_ideal, int n, PivotRule rule) {
    HilbertNumerator N;
    N.n = n;
    N.coeffs = numerator_rec(minimalize(lead_ideal), n, rule);
    return N;
}

std::string HilbertNumerator::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::string c = coeffs[i].get_str();
        if (!s.empty() && coeffs[i] > 0) s += "+";
        if (i == 0) {
            s += c;
        } else {
            if (c == "1") c = "";
            if (c == "-1") c = "-";
            s += c + "t" + (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return s.empty() ? "0" : s;
}

mpz_class hilbert_function(const HilbertNumerator& N, long k) {
    mpz_class acc = 0;
    for (long i = 0; i < static_cast<long>(N.coeffs.size()) && i <= k; ++i)
        acc += N.coeffs[i] * binom(k - i + N.n - 1, N.n - 1);
    return acc;
}

HilbertPolynomialRepr hilbert_polynomial(const HilbertNumerator& N) {
    HilbertPolynomialRepr hp;
    Num num = N.coeffs;
    trim(num);
    int delta = N.n;
    if (num.empty()) {
        hp.delta = 0;
        hp.reduced_numerator = {};
        hp.dimension = -1;
        return hp;
    }
    // Divide by (1 - t) while N(1) = 0 (synthetic division at t = 1).
    while (delta > 0) {
        mpz_class s = 0;
        for (auto& c : num) s += c;
        if (s != 0) break;
        Num q(num.size() - 1);
        mpz_class run = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            run += num[i];
            q[i] = run;
        }
        num = q;
        trim(num);
        --delta;
    }
    hp.reduced_numerator = num;
    hp.delta = delta;
    hp.k0 = static_cast<int>(num.size()) - 1 - delta + 1;
    if (delta == 0) {
        hp.dimension = -1;
        return hp;
    }
    // HP(k) = sum_i N_i * binom(k - i + delta - 1, delta - 1) as a polynomial in k.
    std::vector<mpq_class> total(delta, 0);
    mpz_class fact = 1;
    for (int j = 2; j < delta; ++j) fact *= j;
    for (std::size_t i = 0; i < num.size(); ++i) {
        // prod_{j=1}^{delta-1} (k - i + j)
        std::vector<mpq_class> p{1};
        for (int j = 1; j < delta; ++j) {
            mpq_class c = mpq_class(j) - mpq_class(static_cast<long>(i));
            std::vector<mpq_class> q(p.size() + 1, 0);
            for (std::size_t a = 0; a < p.size(); ++a) {
                q[a] += p[a] * c;
                q[a + 1] += p[a];
            }
            p = q;
        }
        for (std::size_t a = 0; a < p.size(); ++a) total[a] += mpq_class(num[i]) * p[a] / mpq_class(fact);
    }
    while (!total.empty() && total.back() == 0) total.pop_back();
    for (auto& c : total) c.canonicalize();
    hp.coeffs = total;
    hp.dimension = static_cast<int>(total.size()) - 1;
    return hp;
}

mpq_class HilbertPolynomialRepr::eval(long k) const {
    mpq_class acc = 0, pw = 1;
    for (auto& c : coeffs) {
        acc += c * pw;
        pw *= k;
    }
    return acc;
}

bool HilbertPolynomialRepr::equals(const std::vector<long>& c) const {
    std::vector<mpq_class> want;
    for (long x : c) want.push_back(mpq_class(x));
    while (!want.empty() && want.back() == 0) want.pop_back();
    return want == coeffs;
}

std::string HilbertPolynomialRepr::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const mpq_class& c = coeffs[i];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        std::string body = mag.get_str();
        if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
        if (i == 0) {
            s += body;
        } else {
            if (body != "1") s += body;
            s += "k";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

long hilbert_function_oracle(const std::vector<Monomial>& lead_ideal, int n, int k, long budget) {
    mpz_class total = binom(k + n - 1, n - 1);
    if (total > budget) throw EnumerationTooLarge(total.get_str() + " monomials exceed budget");
    auto gens = minimalize(lead_ideal);
    long count = 0;
    for (auto& m : monomials_of_degree(n, k)) {
        bool in = false;
        for (auto& g : gens)
            if (g.divides(m)) {
                in = true;
                break;
            }
        if (!in) ++count;
    }
    return count;
}

}  // namespace fpp
