#include "fppcert/regularity.hpp"

#include <chrono>
#include <map>
#include <random>

namespace fpp {

FreeAlgebraModel::FreeAlgebraModel(const GroebnerBasis<FpDomain>& gb, int first_tail_var) : h_(first_tail_var) {
    if (gb.gens.empty()) throw ConstraintViolation("empty basis");
    if (gb.truncated) throw ConstraintViolation("truncated basis");
    const FpPoly& g0 = gb.gens.front();
    F_ = g0.domain().F;
    vars_ = g0.vars();
    const int n = vars_->size();
    if (h_ <= 0 || h_ >= n) throw IndexOutOfRange("tail split");
    std::vector<std::string> names(vars_->names.begin() + h_, vars_->names.end());
    tail_vars_ = make_vars(names);
    auto lms = gb.leading_monomials();
    for (auto& m : lms)
        for (int i = h_; i < n; ++i)
            if (m.e[i]) throw ConstraintViolation("leading monomial involves " + vars_->names[i]);
    for (int d = 0;; ++d) {
        int found = 0;
        for (auto& m : monomials_of_degree(h_, d)) {
            bool in = false;
            for (auto& l : lms)
                if (l.divides(m)) {
                    in = true;
                    break;
                }
            if (!in) {
                basis_.push_back(m);
                ++found;
            }
        }
        if (found == 0) break;
        if (d > 64) throw ConstraintViolation("standard monomials do not terminate");
    }
    reducer_ = std::make_shared<Reducer<FpDomain>>(g0.domain(), vars_);
    for (auto& g : gb.gens) reducer_->add(g);
    table_.resize(basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            FpPoly prod = FpPoly::monomial(g0.domain(), vars_, basis_[j] * basis_[k], 1);
            table_[j].push_back(coordinates(normal_form(prod)));
        }
}

FpPoly FreeAlgebraModel::normal_form(const FpPoly& f) {
    if (f.is_zero() || f.is_homogeneous()) return reducer_->reduce(f);
    std::map<int, std::vector<FpPoly::Term>> parts;
    for (auto& t : f.terms()) parts[t.m.deg].push_back(t);
    FpPoly acc(f.domain(), f.vars());
    for (auto& [d, ts] : parts) acc = acc + reducer_->reduce(FpPoly::from_terms(f.domain(), f.vars(), ts));
    return acc;
}

std::vector<FpPoly> FreeAlgebraModel::coordinates(const FpPoly& nf) const {
    const int n = vars_->size();
    std::vector<std::vector<FpPoly::Term>> parts(basis_.size());
    for (auto& t : nf.terms()) {
        Monomial head, tail;
        for (int i = 0; i < n; ++i) {
            if (i < h_) {
                head.e[i] = t.m.e[i];
                head.deg += t.m.e[i];
            } else {
                tail.e[i - h_] = t.m.e[i];
                tail.deg += t.m.e[i];
            }
        }
        auto it = std::find(basis_.begin(), basis_.end(), head);
        if (it == basis_.end()) throw ConstraintViolation("input is not a normal form");
        parts[it - basis_.begin()].push_back({tail, t.c});
    }
    std::vector<FpPoly> out;
    FpDomain dom(F_);
    for (auto& p : parts) out.push_back(FpPoly::from_terms(dom, tail_vars_, std::move(p)));
    return out;
}

std::vector<FpPoly> FreeAlgebraModel::times_basis(int j, const std::vector<FpPoly>& v) const {
    FpDomain dom(F_);
    std::vector<FpPoly> out(basis_.size(), FpPoly(dom, tail_vars_));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t l = 0; l < basis_.size(); ++l)
            if (!table_[j][k][l].is_zero()) out[l] = out[l] + v[k] * table_[j][k][l];
    }
    return out;
}

namespace {

// Columns s_j * f for every basis index j, each a vector of tail polynomials.
using Columns = std::vector<std::vector<FpPoly>>;

ModuleVector specialize(const std::vector<FpPoly>& col, bool at_infinity) {
    ModuleVector v;
    for (std::size_t k = 0; k < col.size(); ++k)
        for (auto& t : col[k].terms()) {
            if (at_infinity && t.m.e[2] != 0) continue;
            v.push_back({static_cast<int>(k), t.m.e[0], t.m.e[1], t.c});
        }
    return v;
}

}  // namespace

RegularityCertificate certify_regular_sequence(FreeAlgebraModel& model, const std::vector<FpPoly>& forms,
                                               const HilbertNumerator& numerator, const RegularityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    RegularityCertificate cert;
    const VarsPtr& tv = model.tail_vars();
    if (tv->size() != 3) throw ConstraintViolation("certificate needs exactly three tail variables");
    if (forms.size() != 3) throw ConstraintViolation("certificate needs three forms");
    cert.rank = model.rank();
    for (auto& m : model.basis()) cert.basis_degrees.push_back(m.deg);

    std::vector<Columns> cols;
    for (auto& f : forms) {
        if (!f.is_homogeneous() || f.is_zero()) throw ConstraintViolation("forms must be nonzero and homogeneous");
        auto c = model.coordinates(model.normal_form(f));
        Columns cs;
        for (int j = 0; j < model.rank(); ++j) cs.push_back(model.times_basis(j, c));
        cols.push_back(std::move(cs));
    }

    const PrimeField F = forms.front().domain().F;
    FpDomain dom(F);
    std::mt19937_64 rng(opts.seed);
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        cert.attempts = attempt + 1;
        std::vector<Columns> use = cols;
        if (attempt > 0) {
            // Random invertible linear change of the tail variables.
            std::vector<FpPoly> images;
            for (;;) {
                std::uniform_int_distribution<u32> dist(0, F.modulus() - 1);
                u32 m[3][3];
                for (auto& row : m)
                    for (auto& x : row) x = dist(rng);
                // Cofactor expansion along the first row.
                auto minor2 = [&](int c0, int c1) {
                    return F.sub(F.mul(m[1][c0], m[2][c1]), F.mul(m[1][c1], m[2][c0]));
                };
                u32 det = F.add(F.sub(F.mul(m[0][0], minor2(1, 2)), F.mul(m[0][1], minor2(0, 2))),
                                F.mul(m[0][2], minor2(0, 1)));
                if (det == 0) continue;
                images.clear();
                for (int i = 0; i < 3; ++i) {
                    FpPoly img(dom, tv);
                    for (int k = 0; k < 3; ++k)
                        img = img + FpPoly::variable(dom, tv, k).scale(m[i][k]);
                    images.push_back(img);
                }
                break;
            }
            for (auto& cs : use)
                for (auto& col : cs)
                    for (auto& p : col) p = p.substitute(images);
        }
        std::vector<ModuleVector> prefix_inf, prefix_aff, last_aff;
        for (std::size_t i = 0; i < use.size(); ++i)
            for (auto& col : use[i]) {
                if (i + 1 < use.size()) {
                    prefix_inf.push_back(specialize(col, true));
                    prefix_aff.push_back(specialize(col, false));
                } else {
                    last_aff.push_back(specialize(col, false));
                }
            }
        cert.at_infinity = module_quotient(F, cert.basis_degrees, prefix_inf, opts.module);
        if (!cert.at_infinity.finite_length) continue;
        auto staged = module_quotient_staged(F, cert.basis_degrees, {prefix_aff, last_aff}, opts.module);
        cert.affine_prefix = staged[0];
        cert.affine_all = staged[1];
        cert.holds = cert.affine_all.zero;
        break;
    }
    if (cert.holds) {
        std::vector<mpz_class> num = numerator.coeffs;
        for (auto& f : forms) {
            std::vector<mpz_class> factor(f.degree() + 1, 0);
            factor[0] = 1;
            factor[f.degree()] = -1;
            num = poly_mul(num, factor);
            cert.prefix_hp.push_back(hilbert_polynomial(HilbertNumerator{num, numerator.n}));
        }
    }
    cert.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

}  // namespace fpp
