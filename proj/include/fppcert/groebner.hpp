#pragma once
// Buchberger's algorithm with Gebauer-Moller pair elimination and sugar
// selection, normal forms, and ideal arithmetic.
#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fppcert/polynomial.hpp"

namespace fpp {

struct GroebnerStats {
    long pairs_created = 0;
    long pairs_reduced = 0;
    long zero_reductions = 0;
    long product_criterion = 0;
    long chain_criterion = 0;
    int max_degree = 0;
    double ms = 0;
};

struct GroebnerOptions {
    // Homogeneous input only: stop after degree `degree_cap`.
    std::optional<int> degree_cap;
    long pair_budget = -1;       // throws BudgetExceeded when exceeded
    double time_budget_s = -1;   // likewise
    bool allow_rational = false;  // opt in for coefficients in Q(w)
};

template <class D>
struct GroebnerBasis {
    std::vector<Polynomial<D>> gens;  // reduced, monic, ascending leading monomials
    bool truncated = false;
    int degree_cap = -1;
    GroebnerStats stats;

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (auto& g : gens) out.push_back(g.lm());
        return out;
    }
};

// Dense scratch space for homogeneous reductions in one degree.
template <class D>
struct DegreeTable {
    std::vector<Monomial> monos;  // descending grevlex
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::vector<int> reducer;     // basis position, or -1
    std::vector<int> checked;     // basis elements already examined
    std::vector<typename D::value_type> acc;
};

// Reduction engine over a growing basis, reusable across many normal forms. Homogeneous inputs use the dense
// per-degree tables; anything else falls back to an ordered map.
template <class D>
class Reducer {
public:
    Reducer(D dom, VarsPtr vars) : dom_(std::move(dom)), vars_(std::move(vars)) {}

    void add(const Polynomial<D>& g) {
        homogeneous_basis_ &= g.is_homogeneous();
        basis_.push_back(g);
    }
    const std::vector<Polynomial<D>>& basis() const { return basis_; }
    const Polynomial<D>& operator[](std::size_t i) const { return basis_[i]; }
    std::size_t size() const { return basis_.size(); }

    Polynomial<D> reduce(const Polynomial<D>& f, int skip = -1) {
        if (f.is_zero()) return f;
        // Dense tables hold one degree, so both sides must be homogeneous.
        if (homogeneous_basis_ && f.is_homogeneous()) return reduce_dense(f, skip);
        return reduce_sparse(f, skip);
    }

private:
    DegreeTable<D>& table(int d) {
        auto it = tables_.find(d);
        if (it != tables_.end()) return it->second;
        DegreeTable<D>& t = tables_[d];
        t.monos = monomials_of_degree(vars_->size(), d);
        t.index.reserve(t.monos.size() * 2);
        for (int i = 0; i < static_cast<int>(t.monos.size()); ++i) t.index.emplace(t.monos[i], i);
        t.reducer.assign(t.monos.size(), -1);
        t.checked.assign(t.monos.size(), 0);
        t.acc.assign(t.monos.size(), dom_.zero());
        return t;
    }

    int find_reducer(DegreeTable<D>& t, int idx, int skip) {
        if (skip >= 0) {
            for (int k = 0; k < static_cast<int>(basis_.size()); ++k)
                if (k != skip && basis_[k].lm().divides(t.monos[idx])) return k;
            return -1;
        }
        if (t.reducer[idx] >= 0) return t.reducer[idx];
        for (int k = t.checked[idx]; k < static_cast<int>(basis_.size()); ++k)
            if (basis_[k].lm().divides(t.monos[idx])) {
                t.reducer[idx] = k;
                break;
            }
        t.checked[idx] = static_cast<int>(basis_.size());
        return t.reducer[idx];
    }

    Polynomial<D> reduce_dense(const Polynomial<D>& f, int skip) {
        DegreeTable<D>& t = table(f.lm().deg);
        int start = static_cast<int>(t.monos.size());
        for (auto& term : f.terms()) {
            int i = t.index.at(term.m);
            t.acc[i] = term.c;
            start = std::min(start, i);
        }
        std::vector<typename Polynomial<D>::Term> out;
        for (int i = start; i < static_cast<int>(t.monos.size()); ++i) {
            if (dom_.is_zero(t.acc[i])) continue;
            auto c = t.acc[i];
            t.acc[i] = dom_.zero();
            int r = find_reducer(t, i, skip);
            if (r < 0) {
                out.push_back({t.monos[i], c});
                continue;
            }
            const Polynomial<D>& g = basis_[r];
            Monomial mult = t.monos[i] / g.lm();
            auto scale = dom_.mul(c, dom_.inv(g.lc()));
            for (std::size_t k = 1; k < g.terms().size(); ++k) {
                const auto& gt = g.terms()[k];
                int j = t.index.at(gt.m * mult);
                t.acc[j] = dom_.sub(t.acc[j], dom_.mul(scale, gt.c));
            }
        }
        return Polynomial<D>::from_sorted_terms(dom_, f.vars(), std::move(out));
    }

    Polynomial<D> reduce_sparse(const Polynomial<D>& f, int skip) {
        std::map<Monomial, typename D::value_type, GrevlexGreater> acc;
        for (auto& term : f.terms()) acc.emplace(term.m, term.c);
        std::vector<typename Polynomial<D>::Term> out;
        while (!acc.empty()) {
            auto it = acc.begin();
            Monomial m = it->first;
            auto c = it->second;
            acc.erase(it);
            int r = -1;
            for (int k = 0; k < static_cast<int>(basis_.size()); ++k)
                if (k != skip && basis_[k].lm().divides(m)) {
                    r = k;
                    break;
                }
            if (r < 0) {
                out.push_back({m, c});
                continue;
            }
            const Polynomial<D>& g = basis_[r];
            Monomial mult = m / g.lm();
            auto scale = dom_.mul(c, dom_.inv(g.lc()));
            for (std::size_t k = 1; k < g.terms().size(); ++k) {
                const auto& gt = g.terms()[k];
                Monomial mm = gt.m * mult;
                auto v = dom_.neg(dom_.mul(scale, gt.c));
                auto jt = acc.find(mm);
                if (jt == acc.end()) {
                    acc.emplace(mm, v);
                } else {
                    jt->second = dom_.add(jt->second, v);
                    if (dom_.is_zero(jt->second)) acc.erase(jt);
                }
            }
        }
        return Polynomial<D>::from_sorted_terms(dom_, f.vars(), std::move(out));
    }

    D dom_;
    VarsPtr vars_;
    bool homogeneous_basis_ = true;
    std::vector<Polynomial<D>> basis_;
    std::map<int, DegreeTable<D>> tables_;
};

template <class D>
GroebnerBasis<D> buchberger(const std::vector<Polynomial<D>>& gens, const GroebnerOptions& opts = {});

// Fully reduced remainder of f modulo the given polynomials (any order of use).
template <class D>
Polynomial<D> normal_form(const Polynomial<D>& f, const std::vector<Polynomial<D>>& basis);
template <class D>
Polynomial<D> normal_form(const Polynomial<D>& f, const GroebnerBasis<D>& B) {
    return normal_form(f, B.gens);
}

// Generators with a lazily computed basis. Copies share the cache.
template <class D>
class IdealHandle {
public:
    IdealHandle() = default;
    explicit IdealHandle(std::vector<Polynomial<D>> gens) : gens_(std::move(gens)) { drop_zeros(); }

    const std::vector<Polynomial<D>>& generators() const { return gens_; }
    bool homogeneous() const {
        for (auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }
    const GroebnerBasis<D>& groebner(const GroebnerOptions& opts = {}) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (!cache_->gb) cache_->gb = std::make_shared<GroebnerBasis<D>>(buchberger(gens_, opts));
        return *cache_->gb;
    }

private:
    void drop_zeros() {
        std::vector<Polynomial<D>> kept;
        for (auto& g : gens_)
            if (!g.is_zero()) kept.push_back(g);
        gens_ = std::move(kept);
    }
    struct Cache {
        std::mutex mu;
        std::shared_ptr<GroebnerBasis<D>> gb;
    };
    std::vector<Polynomial<D>> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <class D>
IdealHandle<D> ideal_sum(const IdealHandle<D>& I, const IdealHandle<D>& J) {
    auto g = I.generators();
    for (auto& h : J.generators()) {
        if (!g.empty()) g.front().check_same_ring(h);
        g.push_back(h);
    }
    return IdealHandle<D>(std::move(g));
}

// All pairwise products g_i * h_j, duplicates removed.
template <class D>
IdealHandle<D> ideal_product(const IdealHandle<D>& I, const IdealHandle<D>& J) {
    std::vector<Polynomial<D>> out;
    for (auto& a : I.generators())
        for (auto& b : J.generators()) {
            auto p = a * b;
            bool dup = false;
            for (auto& q : out)
                if (q == p) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(std::move(p));
        }
    return IdealHandle<D>(std::move(out));
}

// Products g_i * g_j with i <= j (the square of an ideal without the
// symmetric duplicates).
template <class D>
std::vector<Polynomial<D>> symmetric_square(const std::vector<Polynomial<D>>& g) {
    std::vector<Polynomial<D>> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) out.push_back(g[i] * g[j]);
    return out;
}

extern template GroebnerBasis<FpDomain> buchberger(const std::vector<FpPoly>&, const GroebnerOptions&);
extern template GroebnerBasis<QDomain> buchberger(const std::vector<QPoly>&, const GroebnerOptions&);
extern template FpPoly normal_form(const FpPoly&, const std::vector<FpPoly>&);
extern template QPoly normal_form(const QPoly&, const std::vector<QPoly>&);

}  // namespace fpp
