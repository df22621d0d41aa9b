#!/usr/bin/env python3
"""Regenerates data/*.json, the shipped Lie algebra tables.

Matrix algebras are built from explicit matrix bases: brackets are matrix
commutators expanded in the basis, invariants are tr(X^k) where X is the
matrix paired with a covector through the trace form.
"""
import json
import os
import sys

import sympy as sp

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def frac(q):
    q = sp.Rational(q)
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


def coords(basis, m):
    n = len(basis)
    cs = sp.symbols(f"c0:{n}")
    eqs = sum((cs[k] * basis[k] for k in range(n)), sp.zeros(*m.shape)) - m
    sol = sp.solve(list(eqs), cs, dict=True)
    if not sol:
        raise ValueError("not in span")
    return [sp.Rational(sol[0].get(c, 0)) for c in cs]


def matrix_table(name, names, basis, c1_matrix, inv_degrees, cartan=None, trace_free=False):
    n = len(basis)
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            br = basis[i] * basis[j] - basis[j] * basis[i]
            c = coords(basis, br)
            nz = [[k, frac(v)] for k, v in enumerate(c) if v != 0]
            if nz:
                brackets.append({"i": i, "j": j, "coeffs": nz})
    # dual basis under the trace form
    gram = sp.Matrix(n, n, lambda a, b: (basis[a] * basis[b]).trace())
    ginv = gram.inv()
    beta = sp.symbols(f"b0:{n}")
    X = sp.zeros(*basis[0].shape)
    for k in range(n):
        for l in range(n):
            X += beta[k] * ginv[l, k] * basis[l]
    invs = []
    for d in inv_degrees:
        p = sp.Poly(sp.expand((X ** d).trace()), *beta)
        terms = [[list(mon), frac(coef)] for mon, coef in sorted(p.terms())]
        invs.append({"degree": d, "terms": terms})
    c1 = [frac((c1_matrix * basis[k]).trace()) for k in range(n)]
    table = {"name": name, "n": n, "names": names, "brackets": brackets, "c1": c1, "invariants": invs}
    if cartan:
        table["cartan"] = {key: [[frac(v) for v in coords(basis, m)] for m in mats] for key, mats in cartan.items()}
    return table


def sl2():
    e, f, h = unit(2, 0, 1), unit(2, 1, 0), unit(2, 0, 0) - unit(2, 1, 1)
    t = matrix_table("sl2", ["e", "f", "h"], [e, f, h], sp.diag(sp.Rational(1, 2), -sp.Rational(1, 2)), [2],
                     cartan={"e": [e], "f": [f], "h": [h]})
    # 2*tr(X^2) = b_h^2 + 4 b_e b_f
    t["invariants"] = [{"degree": 2, "terms": [[[0, 0, 2], "1"], [[1, 1, 0], "4"]]}]
    return t


def sl3():
    E = lambda i, j: unit(3, i, j)
    basis = [E(0, 1), E(1, 2), E(0, 2), E(1, 0), E(2, 1), E(2, 0), E(0, 0) - E(1, 1), E(1, 1) - E(2, 2)]
    names = ["e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2"]
    cartan = {"e": [E(0, 1), E(1, 2)], "f": [E(1, 0), E(2, 1)], "h": [basis[6], basis[7]]}
    return matrix_table("sl3", names, basis, sp.diag(1, 0, -1), [2, 3], cartan=cartan)


def gl(n):
    basis, names = [], []
    for i in range(n):
        for j in range(n):
            basis.append(unit(n, i, j))
            names.append(f"E{i + 1}{j + 1}")
    d = sp.diag(*[sp.Integer(n - 1 - 2 * k) if n == 3 else sp.Integer(1 - k) for k in range(n)])
    return matrix_table(f"gl{n}", names, basis, d, list(range(1, n + 1)))


def so3():
    return {
        "name": "so3", "n": 3, "names": ["x", "y", "z"],
        "brackets": [{"i": 0, "j": 1, "coeffs": [[2, "1"]]},
                     {"i": 0, "j": 2, "coeffs": [[1, "-1"]]},
                     {"i": 1, "j": 2, "coeffs": [[0, "1"]]}],
        "c1": ["0", "0", "1"],
        "invariants": [{"degree": 2, "terms": [[[0, 0, 2], "1"], [[0, 2, 0], "1"], [[2, 0, 0], "1"]]}],
    }


def main():
    tables = {"sl2": sl2(), "sl3": sl3(), "gl2": gl(2), "gl3": gl(3), "so3": so3()}
    for name, t in tables.items():
        with open(os.path.join(OUT, f"{name}.json"), "w") as fh:
            json.dump(t, fh, indent=1)
            fh.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
