"""Reduced grevlex Groebner bases over GF(263) from sympy, printed in the
canonical polynomial grammar. Output is frozen into tests/test_groebner.cpp."""
import sympy as sp

P = 263
x = sp.symbols("x0:4")

IDEALS = {
    "cyclic4": [
        x[0] + x[1] + x[2] + x[3],
        x[0] * x[1] + x[1] * x[2] + x[2] * x[3] + x[3] * x[0],
        x[0] * x[1] * x[2] + x[1] * x[2] * x[3] + x[2] * x[3] * x[0] + x[3] * x[0] * x[1],
        x[0] * x[1] * x[2] * x[3] - 1,
    ],
    "twisted_cubic": [x[0] * x[2] - x[1] ** 2, x[1] * x[3] - x[2] ** 2, x[0] * x[3] - x[1] * x[2]],
    "mixed": [x[0] ** 2 + 3 * x[1] * x[2] - 5, x[1] ** 2 - x[0] * x[3] + 7, x[2] * x[3] - 2 * x[0]],
}


def canon(poly):
    terms = []
    for monom, c in sp.Poly(poly, *x, modulus=P).terms(order="grevlex"):
        c = int(c) % P
        factors = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(monom) if e]
        terms.append("*".join([str(c)] + factors))
    return "+".join(terms)


for name, gens in IDEALS.items():
    G = sp.groebner(gens, *x, order="grevlex", modulus=P)
    lines = sorted(canon(sp.Poly(g, *x, modulus=P).monic().as_expr()) for g in G.exprs)
    print(name)
    for line in lines:
        print("  " + line)
