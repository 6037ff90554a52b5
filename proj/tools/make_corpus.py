#!/usr/bin/env python3
"""Builds data/corpus/manifest.json: good primes p <= 13 per cover, t values around each
rational branch point at distance 1, 2, 3 and off the branch locus. Fixtures are filled in
afterwards with `fiberscope corpus --manifest ... --write-fixtures`."""

import json
import os
import subprocess
import sys
from fractions import Fraction

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
COVERS = [
    "zsq_minus_t.json",
    "zcube_minus_t.json",
    "zsq_plus_1_squared_minus_t.json",
    "zsq_plus_1_cubed_minus_t.json",
    "zsq_minus_2_squared_minus_t.json",
    "zcube_plus_z_plus_t.json",
    "zsq_minus_quartic.json",
]
PRIMES = [2, 3, 5, 7, 11, 13]
LIFT = 4  # branch points are lifted mod p^LIFT, enough for distances up to 3


def check(binary, cover, p):
    out = subprocess.run([binary, "check", "--cover", cover, "--p", str(p)], capture_output=True, text=True)
    if out.returncode != 0:
        return None
    return json.loads(out.stdout)


def radical_roots(f_rows, p, residues):
    """Integer lifts mod p^LIFT of the branch points reducing to the given residues."""
    mod = p**LIFT

    def disc_at(t):
        coeffs = [sum(c * t**j for j, c in enumerate(row)) for row in f_rows]
        return discriminant(coeffs)

    seen = {}
    for r in residues:
        for k in range(mod // p):
            if disc_at(r + p * k) % mod == 0:
                seen[r] = r + p * k
                break
    return seen


def discriminant(c):
    # resultant of f and f' for monic f: Sylvester determinant over Q
    d = len(c) - 1
    df = [i * c[i] for i in range(1, d + 1)]
    n = d + d - 1
    rows = []
    for i in range(d - 1):
        rows.append([0] * i + list(reversed(c)) + [0] * (n - d - 1 - i))
    for i in range(d):
        rows.append([0] * i + list(reversed(df)) + [0] * (n - d - i))
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            k = m[r][col] / m[col][col]
            for j in range(col, n):
                m[r][j] -= k * m[col][j]
    return int(det)


def fstr(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def main():
    binary = sys.argv[1] if len(sys.argv) > 1 else os.path.join(ROOT, "build", "tools", "fiberscope")
    cover_dir = os.path.join(ROOT, "data", "covers")
    rows = []
    for name in COVERS:
        path = os.path.join(cover_dir, name)
        f_rows = json.load(open(path))["f"]
        for p in PRIMES:
            rep = check(binary, path, p)
            if rep is None or not rep["good"]:
                continue
            lifts = radical_roots(f_rows, p, rep["branch_points_mod_p"])
            ts = []
            for tbar in rep["branch_points_mod_p"]:
                b = lifts[tbar]
                for v in (1, 2, 3):
                    for u in (Fraction(1), Fraction(-1), Fraction(1, p + 1)):
                        ts.append(b + p**v * u)
            off = [t for t in range(p) if t not in rep["branch_points_mod_p"]]
            for t in off[:3]:
                ts.append(Fraction(t))
                ts.append(Fraction(t) + Fraction(p, p + 1))
            ts = sorted(set(ts))
            rows.append({"cover": "../covers/" + name, "p": p, "cases": [{"t": fstr(t)} for t in ts]})
    out = os.path.join(ROOT, "data", "corpus", "manifest.json")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        json.dump({"schema": 1, "rows": rows}, fh, indent=1)
        fh.write("\n")
    print(f"{len(rows)} rows, {sum(len(r['cases']) for r in rows)} cases -> {out}")


if __name__ == "__main__":
    main()
