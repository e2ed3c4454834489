#!/usr/bin/env python3
"""Regenerate src/curvelab/data/moduli.txt.

For each characteristic p the script picks, degree by degree, the first
monic polynomial (candidates ordered by their base-p integer encoding)
that is irreducible, has x as a generator of the multiplicative group,
and is norm-compatible with the polynomials already chosen for the
proper divisors of its degree.  Norm compatibility is what makes
subfield embedding a plain exponent scaling at runtime: if f_d was
chosen for degree d and d divides m, then f_d(x^((p^m-1)/(p^d-1))) = 0
mod f_m.

The search is deterministic, so rerunning the script reproduces the
file byte for byte.
"""

import math
import os
import sys

OUT = os.path.join(os.path.dirname(__file__), os.pardir,
                   "src", "curvelab", "data", "moduli.txt")

DEGREES = {2: range(1, 21), 3: range(1, 7), 5: range(1, 5), 7: range(1, 3)}


def prime_factors(n):
    fs = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return sorted(fs)


# ---------------------------------------------------------------------------
# GF(2)[x]: polynomials as bitmasks, bit i = coefficient of x^i.

def deg2(a):
    return a.bit_length() - 1


def mod2(a, f):
    df = deg2(f)
    while deg2(a) >= df:
        a ^= f << (deg2(a) - df)
    return a


def mulmod2(a, b, f):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a = mod2(a << 1, f)
    return r


def powmod2(a, e, f):
    r = 1
    while e:
        if e & 1:
            r = mulmod2(r, a, f)
        a = mulmod2(a, a, f)
        e >>= 1
    return r


def gcd2(a, b):
    while b:
        a, b = b, mod2(a, b)
    return a


def irreducible2(f, m):
    # Rabin: x^(2^m) = x mod f, and gcd(x^(2^(m/r)) - x, f) = 1 for prime r | m
    if powmod2(2, 1 << m, f) != mod2(2, f):
        return False
    for r in prime_factors(m):
        if gcd2(powmod2(2, 1 << (m // r), f) ^ 2, f) != 1:
            return False
    return True


def primitive2(f, m):
    order = (1 << m) - 1
    if m == 1:
        return True
    return all(powmod2(2, order // l, f) != 1 for l in prime_factors(order))


def compatible2(f, m, chosen):
    order = (1 << m) - 1
    for d, fd in chosen.items():
        if d < m and m % d == 0:
            u = powmod2(2, order // ((1 << d) - 1), f)
            acc = 0
            for i in range(deg2(fd), -1, -1):
                acc = mulmod2(acc, u, f) ^ ((fd >> i) & 1)
            if acc != 0:
                return False
    return True


def search_p2(m, chosen):
    for f in range(1 << m | 1, 1 << (m + 1), 2):
        if irreducible2(f, m) and primitive2(f, m) and compatible2(f, m, chosen):
            return f
    raise AssertionError(f"no compatible primitive polynomial for (2, {m})")


# ---------------------------------------------------------------------------
# GF(p)[x] for odd p: polynomials as coefficient tuples, low to high.

def trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def polymod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(trim(tuple(a))) - 1 >= df:
        a = list(trim(tuple(a)))
        k = len(a) - 1 - df
        c = (a[-1] * inv_lead) % p
        for i, fi in enumerate(f):
            a[k + i] = (a[k + i] - c * fi) % p
        a = a[:-1] + [a[-1]]
    return trim(tuple(a))


def polymulmod(a, b, f, p):
    r = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    return polymod(tuple(r), f, p)


def polypowmod(a, e, f, p):
    r = (1,)
    while e:
        if e & 1:
            r = polymulmod(r, a, f, p)
        a = polymulmod(a, a, f, p)
        e >>= 1
    return r


def polygcd(a, b, p):
    while b:
        inv_lead = pow(b[-1], -1, p)
        r = list(a)
        while len(trim(tuple(r))) >= len(b):
            r = list(trim(tuple(r)))
            k = len(r) - len(b)
            c = (r[-1] * inv_lead) % p
            for i, bi in enumerate(b):
                r[k + i] = (r[k + i] - c * bi) % p
            r = trim(tuple(r))
        a, b = b, trim(tuple(r))
    return a


def irreducible_p(f, m, p):
    x = (0, 1)
    if polypowmod(x, p ** m, f, p) != polymod(x, f, p):
        return False
    for r in prime_factors(m):
        g = polypowmod(x, p ** (m // r), f, p)
        diff = tuple((gi - xi) % p for gi, xi in
                     zip(list(g) + [0] * 3, list(x) + [0] * 3))
        if len(polygcd(f, trim(diff), p)) > 1:
            return False
    return True


def generator_of(f, m, p):
    # degree 1: f = x - c up to scaling, the generator is the root c
    if m == 1:
        return ((-f[0]) * pow(f[1], -1, p)) % p
    return None  # generator is x itself


def primitive_p(f, m, p):
    order = p ** m - 1
    g = ((generator_of(f, m, p),) if m == 1 else (0, 1))
    return all(polypowmod(g, order // l, f, p) != (1,) for l in prime_factors(order))


def compatible_p(f, m, p, chosen):
    order = p ** m - 1
    g = ((generator_of(f, m, p),) if m == 1 else (0, 1))
    for d, fd in chosen.items():
        if d < m and m % d == 0:
            u = polypowmod(g, order // (p ** d - 1), f, p)
            acc = ()
            for c in reversed(fd):
                acc = polymulmod(acc, u, f, p)
                acc = trim(tuple((a + b) % p for a, b in
                                 zip(list(acc) + [0] * m, [c] + [0] * m)))
            if acc != ():
                return False
    return True


def search_podd(p, m, chosen):
    for enc in range(p ** m, 2 * p ** m):
        digits = []
        e = enc
        for _ in range(m + 1):
            digits.append(e % p)
            e //= p
        f = tuple(digits)
        if f[0] == 0 or f[-1] != 1:
            continue
        if irreducible_p(f, m, p) and primitive_p(f, m, p) and compatible_p(f, m, p, chosen):
            return f
    raise AssertionError(f"no compatible primitive polynomial for ({p}, {m})")


def main():
    lines = [
        "# Default moduli for curvelab fields, one per line: p m c0 c1 ... cm",
        "# (coefficients low to high).  Every polynomial is irreducible over",
        "# GF(p) with a primitive root (x for m >= 2, the root of x - c for",
        "# m = 1), and the system is norm-compatible across divisor pairs of",
        "# degrees, so subfield embeddings are exponent scalings.",
        "# Regenerate with scripts/gen_moduli.py.",
    ]
    for p, degrees in DEGREES.items():
        chosen = {}
        for m in degrees:
            if p == 2:
                f = search_p2(m, chosen)
                coeffs = [(f >> i) & 1 for i in range(m + 1)]
            else:
                f = search_podd(p, m, chosen)
                coeffs = list(f)
            chosen[m] = f
            lines.append(f"{p} {m} " + " ".join(str(c) for c in coeffs))
            print(f"p={p} m={m}: {coeffs}", file=sys.stderr)
    with open(OUT, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
