#!/usr/bin/env python3
"""Independent oracle for the rank-2 instanton partition function.

Tangent weights come from the character
    T = W* V + V* W t1 t2 - (1 - t1)(1 - t2) V* V,
    W = e_1 + e_2,  V = sum_alpha e_alpha sum_{(i,j) in Y_alpha} t1^(1-i) t2^(1-j),
expanded as a multiset of monomials, rather than from arm/leg lengths.
Sums and limits are done in sympy.

Writes tests/golden/nekrasov_rank2.json.
"""
import itertools
import json
import sys
from collections import Counter
from pathlib import Path

import sympy as sp

e1, e2, a, eps = sp.symbols("e1 e2 a eps")
MAX_ORDER = 3
POINTS = [(sp.Rational(1, 3), sp.Rational(2, 5), sp.Rational(7, 4)),
          (sp.Rational(-3, 2), sp.Rational(5, 7), sp.Rational(1, 9))]


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def boxes(p):
    return [(i, j) for i, row in enumerate(p, start=1) for j in range(1, row + 1)]


def character(pair):
    """Monomials (c, n1, n2) meaning e_beta/e_alpha t1^n1 t2^n2 with multiplicity; c = offset in a."""
    offsets = [1, -1]
    V = Counter()
    for alpha, p in enumerate(pair):
        for (i, j) in boxes(p):
            V[(offsets[alpha], 1 - i, 1 - j)] += 1
    W = Counter({(offsets[0], 0, 0): 1, (offsets[1], 0, 0): 1})

    def dual(c):
        return Counter({(-o, -x, -y): m for (o, x, y), m in c.items()})

    def mul(c, d):
        out = Counter()
        for (o1, x1, y1), m1 in c.items():
            for (o2, x2, y2), m2 in d.items():
                out[(o1 + o2, x1 + x2, y1 + y2)] += m1 * m2
        return out

    t12 = Counter({(0, 1, 1): 1})
    one_minus = Counter({(0, 0, 0): 1, (0, 1, 0): -1, (0, 0, 1): -1, (0, 1, 1): 1})
    total = Counter()
    for k, v in mul(dual(W), V).items():
        total[k] += v
    for k, v in mul(mul(dual(V), W), t12).items():
        total[k] += v
    for k, v in mul(mul(dual(V), V), one_minus).items():
        total[k] -= v
    weights = []
    for (o, x, y), m in total.items():
        if m < 0:
            raise SystemExit(f"negative multiplicity in character of {pair}")
        weights += [o * a + x * e1 + y * e2] * m
    n = sum(len(boxes(p)) for p in pair)
    if len(weights) != 4 * n:
        raise SystemExit(f"character of {pair} has {len(weights)} terms, expected {4 * n}")
    return weights


def z_coefficient(k):
    total = sp.Integer(0)
    for j in range(k + 1):
        for p1 in partitions(j):
            for p2 in partitions(k - j):
                total += 1 / sp.Mul(*character((p1, p2)))
    return sp.factor(sp.cancel(sp.together(total)))


def main():
    lam = sp.symbols("L")
    zs = [sp.Integer(1)] + [z_coefficient(k) for k in range(1, MAX_ORDER + 1)]
    Z = sum(z * lam**k for k, z in enumerate(zs))
    logZ = sp.series(sp.log(Z), lam, 0, MAX_ORDER + 1).removeO()
    out = {"variables": ["e1", "e2", "a"], "orders": []}
    for k in range(1, MAX_ORDER + 1):
        fk = sp.cancel(e1 * e2 * logZ.coeff(lam, k))
        diag = sp.cancel(fk.subs(e2, e1))
        limit = sp.cancel(sp.limit(diag, e1, 0))
        other = sp.cancel(sp.limit(sp.cancel(fk.subs(e2, -3 * e1)), e1, 0))
        if sp.simplify(limit - other) != 0:
            raise SystemExit(f"order {k}: limit depends on direction")
        num, den = sp.fraction(limit)
        den_poly = sp.Poly(den, a)
        lc = den_poly.LC()
        num_poly = sp.Poly(sp.expand(num / lc), a)
        den_poly = sp.Poly(sp.expand(den / lc), a)
        samples = []
        for (x1, x2, y) in POINTS:
            at = {e1: x1, e2: x2, a: y}
            zv, fv = sp.cancel(zs[k].subs(at)), sp.cancel(fk.subs(at))
            if not (zv.is_Rational and fv.is_Rational):
                raise SystemExit(f"order {k}: non-rational sample value")
            samples.append({"e1": str(x1), "e2": str(x2), "a": str(y), "z": str(zv), "f": str(fv)})
        out["orders"].append({
            "order": k,
            "limit": str(limit),
            "limit_numerator": {str(m[0]): str(c) for m, c in zip(num_poly.monoms(), num_poly.coeffs())},
            "limit_denominator": {str(m[0]): str(c) for m, c in zip(den_poly.monoms(), den_poly.coeffs())},
            "samples": samples,
        })
        print(f"order {k}: F limit = {limit}", file=sys.stderr)
    target = Path(__file__).resolve().parent.parent / "golden" / "nekrasov_rank2.json"
    target.write_text(json.dumps(out, indent=2) + "\n")


if __name__ == "__main__":
    main()
