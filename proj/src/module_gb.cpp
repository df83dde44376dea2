#include "fppcert/module_gb.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <queue>

namespace fpp {

namespace {

struct Term {
    int comp, a, b;
    u32 c;
};

struct Pair {
    int i, j;  // j < 0: input generator i
    int comp, a, b, deg;
    bool alive = true;
};

class Engine {
public:
    Engine(const PrimeField& F, const std::vector<int>& shifts, const ModuleGbOptions& opts)
        : F_(F), shifts_(shifts), n_(static_cast<int>(shifts.size())), L_(opts.degree_limit), opts_(opts) {
        idx_.assign(static_cast<std::size_t>(n_) * (L_ + 1) * (L_ + 1), -1);
        for (int d = L_; d >= 0; --d)
            for (int k = 0; k < n_; ++k) {
                if (d < shifts_[k]) continue;
                for (int a = d - shifts_[k]; a >= 0; --a) {
                    int b = d - shifts_[k] - a;
                    idx_[slot(k, a, b)] = static_cast<int>(table_.size());
                    table_.push_back({k, a, b, 0});
                }
            }
        acc_.assign(table_.size(), 0);
        reducer_.assign(table_.size(), -1);
        checked_.assign(table_.size(), 0);
        by_comp_.resize(n_);
        t0_ = std::chrono::steady_clock::now();
    }

    // Completes the basis after each stage before the next stage's generators enter.
    std::vector<ModuleQuotientInfo> run(const std::vector<std::vector<ModuleVector>>& stages) {
        std::vector<ModuleQuotientInfo> out;
        for (auto& gens : stages) {
            run_stage(gens);
            out.push_back(summary());
        }
        return out;
    }

private:
    void run_stage(const std::vector<ModuleVector>& gens) {
        ModuleQuotientInfo& info = info_;
        std::vector<std::vector<Term>> input;
        for (auto& g : gens) {
            std::vector<Term> v;
            for (auto& t : g) {
                if (t.comp < 0 || t.comp >= n_ || t.a < 0 || t.b < 0)
                    throw IndexOutOfRange("module term out of range");
                if (t.c % F_.modulus() != 0) v.push_back({t.comp, t.a, t.b, t.c % F_.modulus()});
            }
            if (!v.empty()) input.push_back(std::move(v));
        }
        auto cmp = [this](int x, int y) {
            const Pair& p = pairs_[x];
            const Pair& q = pairs_[y];
            if (p.deg != q.deg) return p.deg > q.deg;
            return x > y;
        };
        std::priority_queue<int, std::vector<int>, decltype(cmp)> queue(cmp);
        const int first_pair = static_cast<int>(pairs_.size());
        for (int k = 0; k < static_cast<int>(input.size()); ++k) {
            int top = INT_MAX, deg = 0;
            for (auto& t : input[k]) {
                int p = pos(t.comp, t.a, t.b);
                if (p < top) {
                    top = p;
                    deg = t.a + t.b + shifts_[t.comp];
                }
            }
            const Term& lt = table_[top];
            pairs_.push_back({k, -1, lt.comp, lt.a, lt.b, deg});
            queue.push(static_cast<int>(pairs_.size()) - 1);
        }
        input_offset_ = first_pair;

        while (!queue.empty()) {
            int pi = queue.top();
            queue.pop();
            Pair p = pairs_[pi];
            if (!p.alive) continue;
            pairs_[pi].alive = false;
            check_time();
            int start = INT_MAX;
            if (p.j < 0) {
                for (auto& t : input[p.i]) add_scaled(t.comp, t.a, t.b, t.c, start);
            } else {
                add_shifted(basis_[p.i], p.a - basis_[p.i][0].a, p.b - basis_[p.i][0].b, 1, start);
                add_shifted(basis_[p.j], p.a - basis_[p.j][0].a, p.b - basis_[p.j][0].b, F_.modulus() - 1, start);
            }
            ++info.pairs_reduced;
            std::vector<Term> r = reduce(start);
            if (r.empty()) continue;
            u32 inv = F_.inv(r[0].c);
            for (auto& t : r) t.c = F_.mul(t.c, inv);
            info.max_degree = std::max(info.max_degree, r[0].a + r[0].b + shifts_[r[0].comp]);
            int h = static_cast<int>(basis_.size());
            basis_.push_back(std::move(r));
            redundant_.push_back(0);
            for (int q : update(h)) queue.push(q);
            by_comp_[basis_[h][0].comp].push_back(h);
        }
        // Input entries are spent; later stages must not see them as pairs.
        for (std::size_t k = input_offset_; k < pairs_.size(); ++k)
            if (pairs_[k].j < 0) pairs_[k].alive = false;
    }

    ModuleQuotientInfo summary() const {
        ModuleQuotientInfo info = info_;
        // Staircase of the leading terms in each component.
        info.zero = true;
        info.finite_length = true;
        long length = 0;
        for (int k = 0; k < n_; ++k) {
            std::vector<std::pair<int, int>> lead;
            for (int g : by_comp_[k]) lead.push_back({basis_[g][0].a, basis_[g][0].b});
            bool has_unit = false, has_x = false, has_y = false;
            int x_pow = INT_MAX;
            for (auto [a, b] : lead) {
                if (a == 0 && b == 0) has_unit = true;
                if (b == 0) {
                    has_x = true;
                    x_pow = std::min(x_pow, a);
                }
                if (a == 0) has_y = true;
            }
            if (!has_unit) info.zero = false;
            if (!has_x || !has_y) {
                info.finite_length = false;
                continue;
            }
            for (int a = 0; a < x_pow; ++a) {
                int mb = INT_MAX;
                for (auto [a0, b0] : lead)
                    if (a0 <= a) mb = std::min(mb, b0);
                length += mb;
            }
        }
        if (info.finite_length) info.length = length;
        info.basis_size = 0;
        for (char r : redundant_)
            if (!r) ++info.basis_size;
        info.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
        return info;
    }

    std::size_t slot(int k, int a, int b) const {
        return (static_cast<std::size_t>(k) * (L_ + 1) + a) * (L_ + 1) + b;
    }
    int pos(int k, int a, int b) const {
        if (a + b + shifts_[k] > L_) throw BudgetExceeded("module degree limit " + std::to_string(L_));
        return idx_[slot(k, a, b)];
    }
    void check_time() const {
        if (opts_.time_budget_s < 0) return;
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        if (el > opts_.time_budget_s) throw BudgetExceeded("module time budget exceeded");
    }

    void add_scaled(int k, int a, int b, u32 c, int& start) {
        int p = pos(k, a, b);
        acc_[p] = F_.add(acc_[p], c);
        start = std::min(start, p);
        end_ = std::max(end_, p);
    }
    void add_shifted(const std::vector<Term>& g, int da, int db, u32 c, int& start) {
        for (auto& t : g) add_scaled(t.comp, t.a + da, t.b + db, F_.mul(c, t.c), start);
    }

    int find_reducer(int p) {
        if (reducer_[p] >= 0) return reducer_[p];
        const Term& m = table_[p];
        const auto& list = by_comp_[m.comp];
        for (int k = checked_[p]; k < static_cast<int>(list.size()); ++k) {
            const Term& l = basis_[list[k]][0];
            if (l.a <= m.a && l.b <= m.b) {
                reducer_[p] = list[k];
                break;
            }
        }
        checked_[p] = static_cast<int>(list.size());
        return reducer_[p];
    }

    std::vector<Term> reduce(int start) {
        std::vector<Term> out;
        for (int i = start; i <= end_; ++i) {
            u32 c = acc_[i];
            if (c == 0) continue;
            acc_[i] = 0;
            int r = find_reducer(i);
            if (r < 0) {
                Term t = table_[i];
                t.c = c;
                out.push_back(t);
                if (opts_.full_reduction) continue;
                // Top reduction only: the tail is kept as it stands.
                for (int j = i + 1; j <= end_; ++j)
                    if (acc_[j] != 0) {
                        Term u = table_[j];
                        u.c = acc_[j];
                        out.push_back(u);
                        acc_[j] = 0;
                    }
                break;
            }
            const auto& g = basis_[r];
            int da = table_[i].a - g[0].a, db = table_[i].b - g[0].b;
            u32 f = F_.neg(c);  // g is monic
            for (std::size_t k = 1; k < g.size(); ++k) {
                int p = pos(g[k].comp, g[k].a + da, g[k].b + db);
                acc_[p] = F_.add(acc_[p], F_.mul(f, g[k].c));
                end_ = std::max(end_, p);
            }
        }
        end_ = -1;
        return out;
    }

    // Gebauer-Moller style update restricted to one component.
    std::vector<int> update(int h) {
        const Term& lh = basis_[h][0];
        struct Cand {
            int g, a, b;
            bool keep = true;
        };
        std::vector<Cand> C;
        for (int g : by_comp_[lh.comp]) {
            if (redundant_[g]) continue;
            const Term& lg = basis_[g][0];
            C.push_back({g, std::max(lh.a, lg.a), std::max(lh.b, lg.b)});
        }
        for (std::size_t x = 0; x < C.size(); ++x)
            for (std::size_t y = 0; y < C.size(); ++y) {
                if (x == y || !C[y].keep) continue;
                bool divides = C[y].a <= C[x].a && C[y].b <= C[x].b;
                bool equal = C[y].a == C[x].a && C[y].b == C[x].b;
                if (divides && (!equal || y < x)) {
                    C[x].keep = false;
                    break;
                }
            }
        for (auto& p : pairs_) {
            if (!p.alive || p.j < 0 || p.comp != lh.comp) continue;
            if (lh.a > p.a || lh.b > p.b) continue;
            auto lcm_with = [&](int g) {
                const Term& l = basis_[g][0];
                return std::pair<int, int>{std::max(l.a, lh.a), std::max(l.b, lh.b)};
            };
            std::pair<int, int> me{p.a, p.b};
            if (lcm_with(p.i) != me && lcm_with(p.j) != me) p.alive = false;
        }
        std::vector<int> fresh;
        for (auto& c : C) {
            if (!c.keep) continue;
            pairs_.push_back({c.g, h, lh.comp, c.a, c.b, c.a + c.b + shifts_[lh.comp]});
            fresh.push_back(static_cast<int>(pairs_.size()) - 1);
        }
        for (int g : by_comp_[lh.comp])
            if (!redundant_[g] && lh.a <= basis_[g][0].a && lh.b <= basis_[g][0].b) redundant_[g] = 1;
        return fresh;
    }

    PrimeField F_;
    std::vector<int> shifts_;
    int n_, L_;
    ModuleGbOptions opts_;
    std::vector<int> idx_;
    std::vector<Term> table_;
    std::vector<u32> acc_;
    std::vector<int> reducer_, checked_;
    std::vector<std::vector<int>> by_comp_;
    std::vector<std::vector<Term>> basis_;
    std::vector<char> redundant_;
    std::vector<Pair> pairs_;
    int end_ = -1;
    std::size_t input_offset_ = 0;
    ModuleQuotientInfo info_;
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace

ModuleQuotientInfo module_quotient(const PrimeField& F, const std::vector<int>& shifts,
                                   const std::vector<ModuleVector>& gens, const ModuleGbOptions& opts) {
    return module_quotient_staged(F, shifts, {gens}, opts).back();
}

std::vector<ModuleQuotientInfo> module_quotient_staged(const PrimeField& F, const std::vector<int>& shifts,
                                                       const std::vector<std::vector<ModuleVector>>& stages,
                                                       const ModuleGbOptions& opts) {
    for (int s : shifts)
        if (s < 0 || s > opts.degree_limit) throw IndexOutOfRange("component shift");
    if (stages.empty()) throw IndexOutOfRange("no stages");
    Engine e(F, shifts, opts);
    return e.run(stages);
}

}  // namespace fpp
