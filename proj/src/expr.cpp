#include "fppcert/expr.hpp"

#include <cctype>

namespace fpp {

namespace {

struct Token {
    enum class T { Num, Ident, Op, End } t;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::T::Num, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            // Letters then digits: "U3U6" reads as U3 followed by U6.
            while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::T::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::T::Op, std::string(1, c), i});
            ++i;
        } else if (c == '{' || c == '[') {
            out.push_back({Token::T::Op, "(", i});
            ++i;
        } else if (c == '}' || c == ']') {
            out.push_back({Token::T::Op, ")", i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' at " + std::to_string(i));
        }
    }
    out.push_back({Token::T::End, "", s.size()});
    return out;
}

ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().t != Token::T::End) fail("trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    bool is_op(const char* op) const { return peek().t == Token::T::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(peek().pos));
    }
    void expect(const char* op) {
        if (!is_op(op)) fail(std::string("expected '") + op + "'");
        ++k_;
    }

    ExprPtr expr() {
        ExprPtr lhs = signed_term();
        while (is_op("+") || is_op("-")) {
            bool sub = peek().text == "-";
            ++k_;
            ExprPtr rhs = signed_term();
            lhs = node(sub ? Expr::Kind::Sub : Expr::Kind::Add, {lhs, rhs});
        }
        return lhs;
    }
    ExprPtr signed_term() {
        if (is_op("-")) {
            ++k_;
            return node(Expr::Kind::Neg, {signed_term()});
        }
        if (is_op("+")) {
            ++k_;
            return signed_term();
        }
        return product();
    }
    bool starts_factor() const {
        return peek().t == Token::T::Num || peek().t == Token::T::Ident || is_op("(");
    }
    ExprPtr product() {
        ExprPtr lhs = power();
        for (;;) {
            if (is_op("*")) {
                ++k_;
                lhs = node(Expr::Kind::Mul, {lhs, power()});
            } else if (is_op("/")) {
                ++k_;
                lhs = node(Expr::Kind::Div, {lhs, power()});
            } else if (starts_factor()) {
                lhs = node(Expr::Kind::Mul, {lhs, power()});
            } else {
                return lhs;
            }
        }
    }
    ExprPtr power() {
        ExprPtr base = primary();
        if (is_op("^")) {
            ++k_;
            int sign = 1;
            bool paren = false;
            if (is_op("(")) {
                paren = true;
                ++k_;
            }
            if (is_op("-")) {
                sign = -1;
                ++k_;
            }
            if (peek().t != Token::T::Num) fail("expected integer exponent");
            int v = std::stoi(peek().text);
            ++k_;
            if (paren) expect(")");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Pow;
            e->exponent = sign * v;
            e->args = {base};
            return e;
        }
        return base;
    }
    ExprPtr primary() {
        const Token& t = peek();
        if (t.t == Token::T::Num) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Num;
            e->num = mpz_class(t.text);
            ++k_;
            return e;
        }
        if (t.t == Token::T::Ident) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Sym;
            e->sym = t.text;
            ++k_;
            return e;
        }
        if (is_op("(")) {
            ++k_;
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        fail("expected a number, symbol or '('");
    }

    std::vector<Token> toks_;
    std::size_t k_ = 0;
};

struct QPolyOps {
    VarsPtr vars;
    QDomain D;
    QPoly num(const mpz_class& v) const {
        return QPoly::constant(D, vars, QuadExtScalar(mpq_class(v), mpq_class(0)));
    }
    QPoly sym(const std::string& s) const {
        if (s == "w") return QPoly::constant(D, vars, QuadExtScalar::omega());
        int i = vars->index_of(s);
        if (i < 0) throw ParseError("unknown symbol '" + s + "'");
        return QPoly::variable(D, vars, i);
    }
    QPoly add(const QPoly& a, const QPoly& b) const { return a + b; }
    QPoly sub(const QPoly& a, const QPoly& b) const { return a - b; }
    QPoly mul(const QPoly& a, const QPoly& b) const { return a * b; }
    QPoly neg(const QPoly& a) const { return -a; }
    QPoly div(const QPoly& a, const QPoly& b) const {
        if (!b.is_constant() || b.is_zero()) throw ParseError("division by a non-constant polynomial");
        return a.scale(b.lc().inv());
    }
    QPoly pow(const QPoly& a, int e) const {
        if (e >= 0) return a.pow(e);
        if (!a.is_constant() || a.is_zero()) throw ParseError("negative power of a non-constant polynomial");
        return QPoly::constant(D, vars, a.lc().inv()).pow(-e);
    }
};

struct Fp2EvalOps {
    const Fp2Ring& R;
    const std::vector<std::string>& names;
    const std::vector<Fp2>& values;
    Fp2 num(const mpz_class& v) const {
        mpz_class m = v % R.base().modulus();
        return R.embed(static_cast<u32>(m.get_ui()));
    }
    Fp2 sym(const std::string& s) const {
        const PrimeField& F = R.base();
        if (s == "i") return R.i();
        if (s == "w") return R.embed(F.sqrt_minus7());
        // sqrt7 = -i * sqrt(-7): (-i r)^2 = -r^2 = 7.
        if (s == "s7") return R.mul(R.neg(R.i()), R.embed(F.sqrt_minus7()));
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == s) return values[k];
        throw ParseError("unbound symbol '" + s + "'");
    }
    Fp2 add(Fp2 a, Fp2 b) const { return R.add(a, b); }
    Fp2 sub(Fp2 a, Fp2 b) const { return R.sub(a, b); }
    Fp2 mul(Fp2 a, Fp2 b) const { return R.mul(a, b); }
    Fp2 neg(Fp2 a) const { return R.neg(a); }
    Fp2 div(Fp2 a, Fp2 b) const { return R.mul(a, R.inv(b)); }
    Fp2 pow(Fp2 a, int e) const { return R.pow(a, e); }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

void collect_symbols(const ExprPtr& e, std::vector<std::string>& out) {
    if (e->kind == Expr::Kind::Sym) {
        for (auto& s : out)
            if (s == e->sym) return;
        out.push_back(e->sym);
        return;
    }
    for (auto& a : e->args) collect_symbols(a, out);
}

QPoly expr_to_qpoly(const ExprPtr& e, const VarsPtr& vars) { return eval_expr(e, QPolyOps{vars, {}}); }

QPoly parse_qpoly(const std::string& text, const VarsPtr& vars) { return expr_to_qpoly(parse_expr(text), vars); }

Fp2 eval_expr_fp2(const ExprPtr& e, const Fp2Ring& R, const std::vector<std::string>& names,
                  const std::vector<Fp2>& values) {
    return eval_expr(e, Fp2EvalOps{R, names, values});
}

}  // namespace fpp
