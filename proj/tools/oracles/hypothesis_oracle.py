#!/usr/bin/env python3
"""Reference values for the sum-zero eigenvector tests and small HNF/kernel freezes."""
import sympy as sp
from sympy import Matrix, Poly, symbols

from fixtures_oracle import FIXTURES, incidence

x = symbols('x')


def hypothesis_table(name):
    """For each non-Perron factor with a modulus>=1 root: is (1..1) orthogonal to ker(q(M)^mult)?"""
    letters, M = incidence(FIXTURES[name])
    n = M.shape[0]
    cp = Poly(M.charpoly(x).as_expr(), x)
    beta = max(r for r in cp.all_roots() if r.is_real)
    out = []
    for f, m in sp.factor_list(cp.as_expr())[1]:
        pf = Poly(f, x)
        if pf.degree() == 0:
            continue
        roots = pf.all_roots()
        if any(abs(sp.N(r - beta, 30)) < sp.Rational(1, 10**20) for r in roots):
            continue  # perron factor
        if all(abs(sp.N(r, 30)) < 1 for r in roots):
            continue  # contracting only
        Q = sp.zeros(n, n)
        Mp = sp.eye(n)
        coeffs = list(reversed(pf.all_coeffs()))  # low..high
        QM = sum((c * M**i for i, c in enumerate(coeffs)), sp.zeros(n, n))
        K = (QM**m).nullspace()
        ones = Matrix([[1] * n])
        perp = all((ones * v)[0] == 0 for v in K)
        out.append((str(f), m, len(K), bool(perp)))
    return out


def main():
    for name in ("penta", "golden4", "torus", "ext45", "inter57", "wm", "ext3b", "ext2b"):
        print(name, hypothesis_table(name))

    B = Matrix([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    print("left kernel of B:", [list(v.T) for v in B.T.nullspace()])

    # weakly mixing fixture: check the golden eigenvector sum and that
    # Q(beta) and Q(phi) intersect trivially (degrees 3 and 2)
    letters, M = incidence(FIXTURES["wm"])
    g = Poly(x**2 - x - 1, x)
    phi = g.all_roots()[1]
    ns = (M - phi * sp.eye(5)).nullspace()
    print("wm golden eigenvector sum:", [sp.simplify(sum(v)) for v in ns])

    # inter57 golden eigenvector sum (nonzero expected -> hypothesis fails)
    letters, M = incidence(FIXTURES["inter57"])
    ns = (M - phi * sp.eye(6)).nullspace()
    print("inter57 golden eigenvector sum:", [sp.simplify(sum(v)) for v in ns])


if __name__ == "__main__":
    main()
