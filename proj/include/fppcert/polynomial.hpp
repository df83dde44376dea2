#pragma once
// Sparse multivariate polynomials over a pluggable coefficient domain, terms kept
// strictly descending in grevlex.
#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fppcert/field.hpp"
#include "fppcert/monomial.hpp"
#include "fppcert/quadext.hpp"

namespace fpp {

struct FpDomain {
    using value_type = u32;
    PrimeField F;
    FpDomain() = default;
    explicit FpDomain(PrimeField f) : F(std::move(f)) {}
    u32 zero() const { return 0; }
    u32 one() const { return 1; }
    bool is_zero(u32 a) const { return a == 0; }
    u32 add(u32 a, u32 b) const { return F.add(a, b); }
    u32 sub(u32 a, u32 b) const { return F.sub(a, b); }
    u32 mul(u32 a, u32 b) const { return F.mul(a, b); }
    u32 neg(u32 a) const { return F.neg(a); }
    u32 inv(u32 a) const { return F.inv(a); }
    u32 from_int(i64 v) const { return F.from_int(v); }
    std::string str(u32 a) const { return std::to_string(a); }
    bool operator==(const FpDomain& o) const { return F == o.F; }
};

struct QDomain {
    using value_type = QuadExtScalar;
    QuadExtScalar zero() const { return {}; }
    QuadExtScalar one() const { return QuadExtScalar(1); }
    bool is_zero(const QuadExtScalar& a) const { return a.is_zero(); }
    QuadExtScalar add(const QuadExtScalar& a, const QuadExtScalar& b) const { return a + b; }
    QuadExtScalar sub(const QuadExtScalar& a, const QuadExtScalar& b) const { return a - b; }
    QuadExtScalar mul(const QuadExtScalar& a, const QuadExtScalar& b) const { return a * b; }
    QuadExtScalar neg(const QuadExtScalar& a) const { return -a; }
    QuadExtScalar inv(const QuadExtScalar& a) const { return a.inv(); }
    QuadExtScalar from_int(i64 v) const { return QuadExtScalar(static_cast<long>(v)); }
    std::string str(const QuadExtScalar& a) const { return a.to_string(); }
    bool operator==(const QDomain&) const { return true; }
};

struct VarList {
    std::vector<std::string> names;
    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& n) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == n) return i;
        return -1;
    }
    bool operator==(const VarList& o) const { return names == o.names; }
};
using VarsPtr = std::shared_ptr<const VarList>;

VarsPtr make_vars(std::vector<std::string> names);
// "U0".."U9", "y0".."y3" and friends.
VarsPtr indexed_vars(const std::string& prefix, int n);

template <class D>
class Polynomial {
public:
    using Domain = D;
    using Coef = typename D::value_type;
    struct Term {
        Monomial m;
        Coef c;
    };

    Polynomial() = default;
    Polynomial(D dom, VarsPtr vars) : dom_(std::move(dom)), vars_(std::move(vars)) {}

    static Polynomial constant(const D& dom, VarsPtr vars, const Coef& c) {
        Polynomial p(dom, std::move(vars));
        if (!dom.is_zero(c)) p.terms_.push_back({Monomial::one(), c});
        return p;
    }
    static Polynomial variable(const D& dom, VarsPtr vars, int i) {
        Polynomial p(dom, std::move(vars));
        p.terms_.push_back({Monomial::var(i), dom.one()});
        return p;
    }
    static Polynomial monomial(const D& dom, VarsPtr vars, const Monomial& m, const Coef& c) {
        Polynomial p(dom, std::move(vars));
        if (!dom.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }
    // Sorts, merges duplicates and drops zeros.
    static Polynomial from_terms(const D& dom, VarsPtr vars, std::vector<Term> terms) {
        Polynomial p(dom, std::move(vars));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c = dom.add(p.terms_.back().c, t.c);
                if (dom.is_zero(p.terms_.back().c)) p.terms_.pop_back();
            } else if (!dom.is_zero(t.c)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }
    // Terms must already be strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(const D& dom, VarsPtr vars, std::vector<Term> terms) {
        Polynomial p(dom, std::move(vars));
        p.terms_ = std::move(terms);
        return p;
    }

    const D& domain() const { return dom_; }
    const VarsPtr& vars() const { return vars_; }
    int nvars() const { return vars_ ? vars_->size() : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    std::vector<Term>& mutable_terms() { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const Monomial& lm() const { return terms_.front().m; }
    const Coef& lc() const { return terms_.front().c; }
    int degree() const {
        int d = -1;
        for (auto& t : terms_) d = std::max<int>(d, t.m.deg);
        return d;
    }
    bool is_homogeneous() const {
        for (auto& t : terms_)
            if (t.m.deg != terms_.front().m.deg) return false;
        return true;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
    Coef coefficient(const Monomial& m) const {
        for (auto& t : terms_)
            if (t.m == m) return t.c;
        return dom_.zero();
    }

    void check_same_ring(const Polynomial& o) const {
        if (!(dom_ == o.dom_)) throw RingMismatch("coefficient domains differ");
        if (vars_ != o.vars_ && !(vars_ && o.vars_ && *vars_ == *o.vars_))
            throw RingMismatch("variable lists differ");
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.c = dom_.neg(t.c);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scale(const Coef& c) const {
        Polynomial r(dom_, vars_);
        if (dom_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Coef v = dom_.mul(t.c, c);
            if (!dom_.is_zero(v)) r.terms_.push_back({t.m, v});
        }
        return r;
    }
    Polynomial mul_term(const Monomial& m, const Coef& c) const {
        Polynomial r(dom_, vars_);
        if (dom_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Coef v = dom_.mul(t.c, c);
            if (!dom_.is_zero(v)) r.terms_.push_back({t.m * m, v});
        }
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        check_same_ring(o);
        if (is_zero() || o.is_zero()) return Polynomial(dom_, vars_);
        std::unordered_map<Monomial, Coef, MonomialHash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (auto& a : terms_)
            for (auto& b : o.terms_) {
                Monomial m = a.m * b.m;
                auto it = acc.find(m);
                Coef v = dom_.mul(a.c, b.c);
                if (it == acc.end())
                    acc.emplace(m, std::move(v));
                else
                    it->second = dom_.add(it->second, v);
            }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!dom_.is_zero(c)) ts.push_back({m, c});
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
        return from_sorted_terms(dom_, vars_, std::move(ts));
    }
    Polynomial pow(int k) const {
        Polynomial acc = constant(dom_, vars_, dom_.one());
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }
    Polynomial diff(int var) const {
        std::vector<Term> ts;
        for (auto& t : terms_) {
            int e = t.m.e[var];
            if (e == 0) continue;
            Monomial m = t.m;
            m.e[var] = static_cast<std::uint8_t>(e - 1);
            m.deg = static_cast<std::uint16_t>(m.deg - 1);
            Coef c = dom_.mul(t.c, dom_.from_int(e));
            if (!dom_.is_zero(c)) ts.push_back({m, c});
        }
        // Differentiation can reorder terms, so resort.
        return from_terms(dom_, vars_, std::move(ts));
    }
    // Each variable i is replaced by images[i]; images live in the target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars())
            throw RingMismatch("substitute: expected " + std::to_string(nvars()) + " images");
        if (images.empty()) return *this;
        const Polynomial& ref = images.front();
        for (auto& im : images)
            if (!(im.dom_ == dom_)) throw RingMismatch("substitute: coefficient domain differs");
        // Cache powers per variable.
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power = [&](int v, int e) -> const Polynomial& {
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(constant(dom_, ref.vars_, dom_.one()));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
            return pw[e];
        };
        std::unordered_map<Monomial, Coef, MonomialHash> acc;
        for (auto& t : terms_) {
            Polynomial prod = constant(dom_, ref.vars_, t.c);
            for (int v = 0; v < nvars() && !prod.is_zero(); ++v)
                if (t.m.e[v]) prod = prod * power(v, t.m.e[v]);
            for (auto& s : prod.terms_) {
                auto it = acc.find(s.m);
                if (it == acc.end())
                    acc.emplace(s.m, s.c);
                else
                    it->second = dom_.add(it->second, s.c);
            }
        }
        std::vector<Term> ts;
        for (auto& [m, c] : acc)
            if (!dom_.is_zero(c)) ts.push_back({m, c});
        return from_terms(dom_, ref.vars_, std::move(ts));
    }
    // Evaluate at a point of a commutative ring R; `lift` maps coefficients into R.
    template <class R, class Ops, class Lift>
    R evaluate(const std::vector<R>& point, const Ops& ops, const Lift& lift) const {
        R acc = ops.zero();
        std::vector<std::vector<R>> pw(point.size());
        for (auto& t : terms_) {
            R v = lift(t.c);
            for (int i = 0; i < nvars(); ++i) {
                int e = t.m.e[i];
                if (!e) continue;
                auto& cache = pw[i];
                if (cache.empty()) cache.push_back(ops.one());
                while (static_cast<int>(cache.size()) <= e) cache.push_back(ops.mul(cache.back(), point[i]));
                v = ops.mul(v, cache[e]);
            }
            acc = ops.add(acc, v);
        }
        return acc;
    }
    template <class D2, class F>
    Polynomial<D2> map_coefficients(const D2& dom2, const F& f) const {
        std::vector<typename Polynomial<D2>::Term> ts;
        ts.reserve(terms_.size());
        for (auto& t : terms_) {
            auto v = f(t.c);
            if (!dom2.is_zero(v)) ts.push_back({t.m, v});
        }
        return Polynomial<D2>::from_sorted_terms(dom2, vars_, std::move(ts));
    }
    // Same polynomial viewed over another variable list of the same length.
    Polynomial with_vars(VarsPtr v) const {
        Polynomial r = *this;
        r.vars_ = std::move(v);
        return r;
    }
    Polynomial make_monic() const {
        if (is_zero()) return *this;
        return scale(dom_.inv(lc()));
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c)) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Canonical text: coef*mono terms joined by '+', no spaces.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            if (k) s += "+";
            s += dom_.str(terms_[k].c);
            for (int i = 0; i < nvars(); ++i) {
                int e = terms_[k].m.e[i];
                if (!e) continue;
                s += "*" + vars_->names[i];
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    Polynomial combine(const Polynomial& o, bool subtract) const {
        check_same_ring(o);
        Polynomial r(dom_, vars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            int c = i == terms_.size()     ? -1
                    : j == o.terms_.size() ? 1
                                           : grevlex_cmp(terms_[i].m, o.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                auto t = o.terms_[j++];
                if (subtract) t.c = dom_.neg(t.c);
                r.terms_.push_back(std::move(t));
            } else {
                Coef v = subtract ? dom_.sub(terms_[i].c, o.terms_[j].c) : dom_.add(terms_[i].c, o.terms_[j].c);
                if (!dom_.is_zero(v)) r.terms_.push_back({terms_[i].m, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    D dom_{};
    VarsPtr vars_;
    std::vector<Term> terms_;
};

using QPoly = Polynomial<QDomain>;
using FpPoly = Polynomial<FpDomain>;

// Ring operations on plain coefficient types, used by evaluate().
struct FpOps {
    PrimeField F;
    u32 zero() const { return 0; }
    u32 one() const { return 1; }
    u32 add(u32 a, u32 b) const { return F.add(a, b); }
    u32 mul(u32 a, u32 b) const { return F.mul(a, b); }
};
struct Fp2Ops {
    Fp2Ring R;
    Fp2 zero() const { return R.zero(); }
    Fp2 one() const { return R.one(); }
    Fp2 add(Fp2 a, Fp2 b) const { return R.add(a, b); }
    Fp2 mul(Fp2 a, Fp2 b) const { return R.mul(a, b); }
};
struct QOps {
    QuadExtScalar zero() const { return {}; }
    QuadExtScalar one() const { return QuadExtScalar(1); }
    QuadExtScalar add(const QuadExtScalar& a, const QuadExtScalar& b) const { return a + b; }
    QuadExtScalar mul(const QuadExtScalar& a, const QuadExtScalar& b) const { return a * b; }
};

FpPoly reduce_poly(const QPoly& f, const PrimeField& F);
QPoly conjugate_poly(const QPoly& f);
u32 eval_fp(const FpPoly& f, const std::vector<u32>& point);
u32 eval_q_mod_p(const QPoly& f, const std::vector<u32>& point, const PrimeField& F);
QuadExtScalar eval_q(const QPoly& f, const std::vector<QuadExtScalar>& point);

// Quotient q with f = q*g when g divides f exactly; nullopt otherwise.
template <class D>
std::optional<Polynomial<D>> divide_exact(const Polynomial<D>& f, const Polynomial<D>& g) {
    if (g.is_zero()) throw DivisionByZero("divide_exact by 0");
    const D& dom = f.domain();
    auto ginv = dom.inv(g.lc());
    Polynomial<D> rem = f;
    std::vector<typename Polynomial<D>::Term> q;
    while (!rem.is_zero()) {
        if (!g.lm().divides(rem.lm())) return std::nullopt;
        Monomial m = rem.lm() / g.lm();
        auto c = dom.mul(rem.lc(), ginv);
        q.push_back({m, c});
        rem = rem - g.mul_term(m, c);
    }
    return Polynomial<D>::from_terms(dom, f.vars(), std::move(q));
}

}  // namespace fpp
