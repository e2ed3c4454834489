"""Pure-Python (numpy) kernel implementations.

Same contracts as the compiled extension module; selected at import time
when the extension is unavailable or CURVELAB_PURE=1 is set.  All inputs
are int64 arrays; field arithmetic arrives as exponent/log tables (the
exp table doubled so exponent sums index directly) and addition is XOR,
so these kernels serve characteristic-2 fields only, which is where every
large scan in the package lives.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

_CHUNK = 1 << 18


def pair_match_count(lhs, rhs):
    """Number of index pairs (i, j) with lhs[i] == rhs[j], by exhaustive scan."""
    lhs = np.ascontiguousarray(lhs, dtype=np.int64)
    rhs = np.ascontiguousarray(rhs, dtype=np.int64)
    rows = max(1, _CHUNK // max(1, rhs.size))
    total = 0
    for start in range(0, lhs.size, rows):
        block = lhs[start : start + rows]
        total += int(np.count_nonzero(block[:, None] == rhs[None, :]))
    return total


def axiom_violation_count(exp, log, order):
    """Violations of field axioms over all of GF(2^m), exhaustively.

    Scans every (a, b, c) triple for multiplicative associativity and
    distributivity over XOR addition, and every (a, b) pair for
    commutativity; unit, inverse, and Frobenius-closure checks run per
    element.  Returns the total violation count (zero for a field).
    """
    exp = np.ascontiguousarray(exp, dtype=np.int64)
    log = np.ascontiguousarray(log, dtype=np.int64)
    n = int(order)
    # dense multiplication table, zero row/column included
    mul = np.zeros((n, n), dtype=np.int64)
    nz = np.arange(1, n, dtype=np.int64)
    mul[1:, 1:] = exp[log[nz][:, None] + log[nz][None, :]]
    violations = 0

    elements = np.arange(n, dtype=np.int64)
    xor = elements[:, None] ^ elements[None, :]

    # pair scans: commutativity of both operations
    violations += int(np.count_nonzero(mul != mul.T))
    violations += int(np.count_nonzero(xor != xor.T))

    # element scans: identities, inverses, Frobenius closure x^(2^m) = x
    violations += int(np.count_nonzero(mul[1] != elements))
    violations += int(np.count_nonzero(xor[0] != elements))
    inv = np.zeros(n, dtype=np.int64)
    inv[1:] = exp[(n - 1) - log[nz]]
    violations += int(np.count_nonzero(mul[nz, inv[nz]] != 1))
    m = int(np.log2(n).round())
    frob = elements.copy()
    for _ in range(m):
        frob = mul[frob, frob]
    violations += int(np.count_nonzero(frob != elements))

    # triple scans, vectorized over (b, c) for each a
    for a in range(n):
        row = mul[a]
        # (a*b)*c == a*(b*c)
        left = mul[row[:, None], elements[None, :]]
        right = mul[a, mul]
        violations += int(np.count_nonzero(left != right))
        # a*(b^c) == (a*b)^(a*c)
        dist_left = row[xor]
        dist_right = row[:, None] ^ row[None, :]
        violations += int(np.count_nonzero(dist_left != dist_right))
        # (a^b)^c == a^(b^c) for completeness (true for XOR by construction)
        violations += int(np.count_nonzero((xor[a][:, None] ^ elements[None, :]) != a ^ xor))
    return violations


def secant_excess_count(points, exp, log, order):
    """Total extra incidences of lines through point pairs with the point set.

    points is an (n, 5) array of projective coordinates over GF(2^m),
    each row normalized so its first nonzero coordinate is 1.  For every
    unordered pair (P, Q) and every mu in the field's nonzero elements,
    the candidate P + mu*Q is normalized and looked up in the set; each
    hit is a third collinear point.  Returns the number of hits (zero for
    an ovoid-style cap).
    """
    pts = np.ascontiguousarray(points, dtype=np.int64)
    exp = np.ascontiguousarray(exp, dtype=np.int64)
    log = np.ascontiguousarray(log, dtype=np.int64)
    n = int(order)
    if n > (1 << 12):
        raise ValueError("secant scan packs 5 coordinates into 60 bits; order must be <= 4096")
    npts = pts.shape[0]

    mul = np.zeros((n, n), dtype=np.int64)
    nz = np.arange(1, n, dtype=np.int64)
    mul[1:, 1:] = exp[log[nz][:, None] + log[nz][None, :]]
    inv = np.zeros(n, dtype=np.int64)
    inv[1:] = exp[(n - 1) - log[nz]]

    def pack(rows):
        key = np.zeros(rows.shape[:-1], dtype=np.int64)
        for k in range(5):
            key = (key << 12) | rows[..., k]
        return key

    keys = np.sort(pack(pts))
    mus = np.arange(1, n, dtype=np.int64)
    hits = 0
    for i in range(npts - 1):
        p = pts[i]
        rest = pts[i + 1 :]
        # candidates[j, t, k] = p[k] + mus[t] * rest[j, k]
        cand = mul[mus[None, :, None], rest[:, None, :]] ^ p[None, None, :]
        lead_idx = np.argmax(cand != 0, axis=-1)
        lead = np.take_along_axis(cand, lead_idx[..., None], axis=-1)[..., 0]
        # projective normalization; all-zero rows cannot occur for distinct points
        cand = mul[cand, inv[lead][..., None]]
        cand_keys = pack(cand)
        found = np.minimum(np.searchsorted(keys, cand_keys), keys.size - 1)
        hits += int(np.count_nonzero(keys[found] == cand_keys))
    return hits
