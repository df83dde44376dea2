#include "fppcert/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <type_traits>
#include <unordered_map>

namespace fpp {

namespace {

template <class D>
using Poly = Polynomial<D>;

struct Pair {
    int i, j;  // j < 0: input generator i
    Monomial lcm;
    int sugar;
    bool alive = true;
};

bool pair_before(const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = grevlex_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

template <class D>
GroebnerBasis<D> buchberger(const std::vector<Polynomial<D>>& input, const GroebnerOptions& opts) {
    if constexpr (std::is_same_v<D, QDomain>) {
        if (!opts.allow_rational)
            throw CoefficientFieldUnsupported("Groebner bases over Q(w) need the allow_rational opt-in");
    }
    auto t0 = std::chrono::steady_clock::now();
    GroebnerBasis<D> out;
    std::vector<Poly<D>> gens;
    for (auto& g : input)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) return out;
    for (auto& g : gens) g.check_same_ring(gens.front());
    const D dom = gens.front().domain();
    const VarsPtr vars = gens.front().vars();

    bool homogeneous = std::all_of(gens.begin(), gens.end(), [](const Poly<D>& g) { return g.is_homogeneous(); });
    if (opts.degree_cap && !homogeneous) throw RingMismatch("degree cap requires homogeneous generators");
    out.degree_cap = opts.degree_cap.value_or(-1);

    Reducer<D> red(dom, vars);
    std::vector<int> sugar;        // per basis element
    std::vector<char> redundant;   // lm divisible by a later element's lm
    std::vector<Pair> pairs;

    for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
        int s = gens[k].degree();
        pairs.push_back({k, -1, gens[k].lm(), s});
    }

    // Gebauer-Moller update after inserting basis element h.
    auto update = [&](int h) {
        const Monomial& lh = red[h].lm();
        struct Cand {
            int g;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> C;
        for (int g = 0; g < h; ++g) {
            if (redundant[g]) continue;
            const Monomial& lg = red[g].lm();
            C.push_back({g, lh.lcm(lg), lh.coprime(lg)});
        }
        // Chain criterion among new pairs: drop (h,g1) if some other new pair
        // has a strictly dividing lcm, or an equal lcm and comes first.
        for (std::size_t a = 0; a < C.size(); ++a) {
            if (C[a].coprime) continue;
            for (std::size_t b = 0; b < C.size(); ++b) {
                if (a == b || !C[b].keep) continue;
                if (C[b].lcm.divides(C[a].lcm) && (C[b].lcm != C[a].lcm || b < a)) {
                    C[a].keep = false;
                    ++out.stats.chain_criterion;
                    break;
                }
            }
        }
        // Among pairs sharing one lcm, a single coprime one kills them all.
        for (std::size_t a = 0; a < C.size(); ++a) {
            if (!C[a].keep || C[a].coprime) continue;
            for (std::size_t b = 0; b < C.size(); ++b)
                if (C[b].coprime && C[b].lcm == C[a].lcm) {
                    C[a].keep = false;
                    ++out.stats.product_criterion;
                    break;
                }
        }
        // Old pairs whose lcm is divisible by lm(h) in the strict sense.
        for (auto& p : pairs) {
            if (!p.alive || p.j < 0) continue;
            if (lh.divides(p.lcm) && red[p.i].lm().lcm(lh) != p.lcm && red[p.j].lm().lcm(lh) != p.lcm) {
                p.alive = false;
                ++out.stats.chain_criterion;
            }
        }
        for (auto& c : C) {
            if (!c.keep) continue;
            if (c.coprime) {
                ++out.stats.product_criterion;
                continue;
            }
            int s = std::max(sugar[h] + (c.lcm.deg - lh.deg), sugar[c.g] + (c.lcm.deg - red[c.g].lm().deg));
            pairs.push_back({c.g, h, c.lcm, s});
            ++out.stats.pairs_created;
        }
        for (int g = 0; g < h; ++g)
            if (!redundant[g] && lh.divides(red[g].lm())) redundant[g] = 1;
    };

    for (;;) {
        // Select the next pair.
        int best = -1;
        for (int k = 0; k < static_cast<int>(pairs.size()); ++k)
            if (pairs[k].alive && (best < 0 || pair_before(pairs[k], pairs[best]))) best = k;
        if (best < 0) break;
        Pair p = pairs[best];
        pairs[best].alive = false;
        if (opts.degree_cap && p.sugar > *opts.degree_cap) {
            out.truncated = true;
            break;
        }
        if (opts.pair_budget >= 0 && out.stats.pairs_reduced >= opts.pair_budget)
            throw BudgetExceeded("pair budget " + std::to_string(opts.pair_budget));
        if (opts.time_budget_s >= 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (el > opts.time_budget_s) throw BudgetExceeded("time budget exceeded");
        }
        Poly<D> s;
        if (p.j < 0) {
            s = gens[p.i];
        } else {
            const Poly<D>& a = red[p.i];
            const Poly<D>& b = red[p.j];
            s = a.mul_term(p.lcm / a.lm(), dom.one()) - b.mul_term(p.lcm / b.lm(), dom.one());
        }
        ++out.stats.pairs_reduced;
        Poly<D> r = red.reduce(s);
        if (r.is_zero()) {
            ++out.stats.zero_reductions;
            continue;
        }
        r = r.make_monic();
        out.stats.max_degree = std::max(out.stats.max_degree, r.degree());
        red.add(r);
        sugar.push_back(homogeneous ? r.degree() : std::max(p.sugar, r.degree()));
        redundant.push_back(0);
        update(static_cast<int>(red.size()) - 1);
        // Compact the pair list now and then.
        if (pairs.size() > 4096) {
            std::vector<Pair> live;
            for (auto& q : pairs)
                if (q.alive) live.push_back(q);
            if (live.size() * 2 < pairs.size()) pairs = std::move(live);
        }
    }
    if (opts.degree_cap) {
        for (auto& q : pairs)
            if (q.alive && q.sugar > *opts.degree_cap) out.truncated = true;
    }

    // Interreduce the minimal part and sort by leading monomial.
    std::vector<Poly<D>> minimal;
    for (int k = 0; k < static_cast<int>(red.size()); ++k)
        if (!redundant[k]) minimal.push_back(red[k]);
    std::sort(minimal.begin(), minimal.end(),
              [](const Poly<D>& a, const Poly<D>& b) { return grevlex_cmp(a.lm(), b.lm()) < 0; });
    Reducer<D> fin(dom, vars);
    for (auto& g : minimal) fin.add(g);
    for (int k = 0; k < static_cast<int>(minimal.size()); ++k) {
        const Poly<D>& g = minimal[k];
        Poly<D> lead = Poly<D>::monomial(dom, vars, g.lm(), g.lc());
        Poly<D> tail = fin.reduce(g - lead, k);
        out.gens.push_back((lead + tail).make_monic());
    }
    out.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

template <class D>
Polynomial<D> normal_form(const Polynomial<D>& f, const std::vector<Polynomial<D>>& basis) {
    if (f.is_zero() || basis.empty()) return f;
    Reducer<D> red(f.domain(), f.vars());
    for (auto& g : basis) {
        g.check_same_ring(f);
        if (!g.is_zero()) red.add(g);
    }
    // Mixed-degree input reduces term by term; homogeneous input per degree.
    if (f.is_homogeneous()) return red.reduce(f);
    std::map<int, std::vector<typename Polynomial<D>::Term>> parts;
    for (auto& t : f.terms()) parts[t.m.deg].push_back(t);
    bool homog_basis = std::all_of(basis.begin(), basis.end(), [](auto& g) { return g.is_homogeneous(); });
    if (!homog_basis) return red.reduce(f);
    Polynomial<D> acc(f.domain(), f.vars());
    for (auto& [d, ts] : parts)
        acc = acc + red.reduce(Polynomial<D>::from_terms(f.domain(), f.vars(), ts));
    return acc;
}

template GroebnerBasis<FpDomain> buchberger(const std::vector<FpPoly>&, const GroebnerOptions&);
template GroebnerBasis<QDomain> buchberger(const std::vector<QPoly>&, const GroebnerOptions&);
template FpPoly normal_form(const FpPoly&, const std::vector<FpPoly>&);
template QPoly normal_form(const QPoly&, const std::vector<QPoly>&);

}  // namespace fpp
