#!/usr/bin/env python3
"""Independent reference values for the unit tests.

Reads polynomials (one per line, or the JSON list printed by
`lgmirror enumerate --json`) and writes a JSON fixture with values computed
by routes that share no code with the library:

  weights       Cramer's rule over Q
  char_poly     Milnor-Orlik divisor product prod_i (Lambda_{u_i}/v_i - 1)
  genus         number of monomials of degree d - sum(w) (reduced weights)
  orbits        isotropy orders of C*-orbits in f = 0, by counting distinct
                roots of f on each coordinate plane with sympy
"""

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction
from math import gcd, lcm

import sympy

VARS = "xyz"


def parse(text):
    """x^2*y+y^3+z^5 -> exponent rows.  Row order is irrelevant for every value below."""
    rows = []
    for term in text.replace(" ", "").split("+"):
        e = [0, 0, 0]
        for v, p in re.findall(r"([xyz])(?:\^(\d+))?", term):
            e[VARS.index(v)] += int(p) if p else 1
        rows.append(e)
    return rows


def det3(E):
    return sympy.Matrix(E).det()


def weights(E):
    n = len(E)
    D = det3(E)
    q = []
    for i in range(n):
        M = [row[:] for row in E]
        for r in range(n):
            M[r][i] = 1
        q.append(Fraction(int(det3(M)), int(D)))
    d = abs(int(D))
    w = [int(x * d) for x in q]
    g = gcd(*w, d)
    return w, d, [x // g for x in w], d // g, g


def milnor_orlik(wr, dr):
    div = {1: Fraction(1)}
    for w in wr:
        r = Fraction(dr, w)
        u, v = r.numerator, r.denominator
        nxt = {}
        for m, c in div.items():
            l = lcm(m, u)
            nxt[l] = nxt.get(l, 0) + c * gcd(m, u) / v
            nxt[m] = nxt.get(m, 0) - c
        div = {m: c for m, c in nxt.items() if c != 0}
    assert all(c.denominator == 1 for c in div.values())
    return {int(m): int(c) for m, c in div.items()}


def genus(wr, dr):
    target = dr - sum(wr)
    if target < 0:
        return 0
    count = 0
    for a in range(target // wr[0] + 1):
        for b in range((target - a * wr[0]) // wr[1] + 1):
            if (target - a * wr[0] - b * wr[1]) % wr[2] == 0:
                count += 1
    return count


def orbits(E, wr):
    out = []
    monos = [tuple(r) for r in E]
    for i in range(3):
        if not any(m[i] > 0 and all(m[j] == 0 for j in range(3) if j != i) for m in monos):
            out.append(wr[i])
    for i, j in itertools.combinations(range(3), 2):
        k = 3 - i - j
        plane = [m for m in monos if m[k] == 0]
        a, b = wr[i], wr[j]
        e = gcd(a, b)
        if len(plane) < 2:
            # a single monomial vanishes on (C*)^2 nowhere
            continue
        base = plane[0]
        s = sympy.Symbol("s")
        exps = []
        for m in plane:
            da = m[i] - base[i]
            assert (da * e) % b == 0
            exps.append(da * e // b)
        lo = min(exps)
        h = sympy.Poly(sum(s ** (x - lo) for x in exps), s)
        roots = sympy.Poly(sympy.sqf_part(h.as_expr()), s).degree()
        out.extend([e] * roots)
    return sorted(x for x in out if x != 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input", help="file of polynomials or enumerate --json output")
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()
    text = open(args.input).read()
    try:
        polys = [x["polynomial"] if isinstance(x, dict) else x for x in json.loads(text)]
    except json.JSONDecodeError:
        polys = [l.strip() for l in text.splitlines() if l.strip() and not l.startswith("#")]
    rows = []
    for p in polys:
        E = parse(p)
        w, d, wr, dr, cf = weights(E)
        cp = milnor_orlik(wr, dr)
        mu = 1
        for x in wr:
            mu *= Fraction(dr, x) - 1
        g = genus(wr, dr)
        orb = orbits(E, wr)
        rows.append(
            {
                "polynomial": p,
                "weights": w + [d],
                "reduced": wr + [dr],
                "cf": cf,
                "char_poly": {str(m): c for m, c in sorted(cp.items(), reverse=True)},
                "milnor": int(mu),
                "genus": g,
                "orbits": orb,
                "e_st": 2 - 2 * g + sum(x - 1 for x in orb),
            }
        )
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    json.dump(rows, out, indent=1)
    out.write("\n")


if __name__ == "__main__":
    main()
