#pragma once
// Arithmetic expression trees. Accepts the canonical polynomial grammar and a
// relaxed notation with implicit multiplication, `^(-k)` powers and the
// constants w (= i*sqrt7), i and s7 (= sqrt7).
#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "fppcert/errors.hpp"
#include "fppcert/polynomial.hpp"

namespace fpp {

struct Expr {
    enum class Kind { Num, Sym, Add, Sub, Mul, Div, Neg, Pow } kind;
    mpz_class num;           // Num
    std::string sym;         // Sym
    int exponent = 0;        // Pow
    std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);
// All symbol names occurring in the tree.
void collect_symbols(const ExprPtr& e, std::vector<std::string>& out);

// Evaluation over any commutative ring given an operations object providing
// num(mpz), sym(name), add, sub, mul, neg, div, pow(value, int).
template <class Ops>
auto eval_expr(const ExprPtr& e, const Ops& ops) -> decltype(ops.num(mpz_class())) {
    switch (e->kind) {
        case Expr::Kind::Num: return ops.num(e->num);
        case Expr::Kind::Sym: return ops.sym(e->sym);
        case Expr::Kind::Add: return ops.add(eval_expr(e->args[0], ops), eval_expr(e->args[1], ops));
        case Expr::Kind::Sub: return ops.sub(eval_expr(e->args[0], ops), eval_expr(e->args[1], ops));
        case Expr::Kind::Mul: return ops.mul(eval_expr(e->args[0], ops), eval_expr(e->args[1], ops));
        case Expr::Kind::Div: return ops.div(eval_expr(e->args[0], ops), eval_expr(e->args[1], ops));
        case Expr::Kind::Neg: return ops.neg(eval_expr(e->args[0], ops));
        case Expr::Kind::Pow: return ops.pow(eval_expr(e->args[0], ops), e->exponent);
    }
    throw ParseError("corrupt expression tree");
}

// Polynomial over Q(w) in the given variables. Symbols other than the variables
// and `w` are rejected, as is division by non-constants.
QPoly parse_qpoly(const std::string& text, const VarsPtr& vars);
QPoly expr_to_qpoly(const ExprPtr& e, const VarsPtr& vars);

// Point evaluation in GF(p)[i]; symbols resolve through `values` (names) with
// w, i, s7 built in. Throws DenominatorVanished on a non-invertible divisor.
Fp2 eval_expr_fp2(const ExprPtr& e, const Fp2Ring& R, const std::vector<std::string>& names,
                  const std::vector<Fp2>& values);

}  // namespace fpp
