"""Candidate numerator polynomials of zeta functions, and count verification.

The two families studied here have fully explicit Frobenius
characteristic polynomials: a repeated quadratic (t^2 + b*t + c)^g for
the Suzuki curve (b = 2*q0, c = q) and a repeated linear factor
(t + a)^(2g) for the Hermitian curve (a = sqrt(q)).  Power sums of the
reciprocal roots then satisfy a two-term linear recurrence, and point
counts over extensions follow as N_n = q^n + 1 - p_n.

Everything is arbitrary-precision integer arithmetic; square roots are
integer square roots with exactness checks.  Verification always runs
candidate -> counts: the polynomial is never reconstructed from counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "LPolynomial",
    "factored_quadratic",
    "repeated_linear",
    "suzuki_lpolynomial",
    "hermitian_lpolynomial",
    "power_sums",
    "predicted_count",
    "verify_lpoly_against_counts",
    "maximality_check",
    "expand_coefficients",
    "functional_equation_holds",
]


@dataclass(frozen=True)
class LPolynomial:
    """h(t) = (t^2 + b t + c)^multiplicity or (t + a)^multiplicity.

    form is "factored" (quadratic factor, multiplicity = genus, degree
    2g) or "linear" (multiplicity = 2g).  Coefficients are exact ints.
    """

    form: str
    a: int = 0
    b: int = 0
    c: int = 0
    multiplicity: int = 0

    def __post_init__(self):
        if self.form == "factored":
            if self.b * self.b > 4 * self.c:
                raise ValueError(
                    f"t^2 + {self.b}t + {self.c} has real roots; reciprocal roots "
                    "must be complex of absolute value sqrt(c)"
                )
        elif self.form == "linear":
            if self.a <= 0:
                raise ValueError("linear factor t + a needs a positive a")
        else:
            raise ValueError(f"unknown form {self.form!r}")
        if self.multiplicity < 0:
            raise ValueError("multiplicity must be nonnegative")

    @property
    def degree(self):
        return 2 * self.multiplicity if self.form == "factored" else self.multiplicity

    def describe(self):
        if self.form == "factored":
            return f"(t^2 + {self.b}t + {self.c})^{self.multiplicity}"
        return f"(t + {self.a})^{self.multiplicity}"


def factored_quadratic(b, c, multiplicity):
    return LPolynomial(form="factored", b=b, c=c, multiplicity=multiplicity)


def repeated_linear(a, multiplicity):
    return LPolynomial(form="linear", a=a, multiplicity=multiplicity)


def suzuki_lpolynomial(params):
    """(t^2 + 2 q0 t + q)^g with g = q0 (q - 1)."""
    g = params.q0 * (params.q - 1)
    return factored_quadratic(2 * params.q0, params.q, g)


def hermitian_lpolynomial(q):
    """(t + sqrt(q))^(2g) with g = sqrt(q) (sqrt(q) - 1) / 2."""
    r = math.isqrt(q)
    if r * r != q:
        raise ValueError(f"Hermitian base order must be a perfect square, got {q}")
    g = r * (r - 1) // 2
    return repeated_linear(r, 2 * g)


def power_sums(h, n_max):
    """[p_1, ..., p_n_max], p_n the n-th power sum of reciprocal roots.

    Factored form: the two roots of one quadratic factor have power sums
    u_n with u_0 = 2, u_1 = -b, u_n = -b u_(n-1) - c u_(n-2); the full
    polynomial scales by the multiplicity.  Linear form: all roots equal
    -a.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if h.form == "linear":
        return [h.multiplicity * (-h.a) ** n for n in range(1, n_max + 1)]
    out = []
    u_prev, u_cur = 2, -h.b
    for _ in range(n_max):
        out.append(h.multiplicity * u_cur)
        u_prev, u_cur = u_cur, -h.b * u_cur - h.c * u_prev
    return out


def _check_base(h, q):
    if h.multiplicity == 0:
        return
    if h.form == "factored" and h.c != q:
        raise ValueError(f"factored candidate has c = {h.c}, base size is {q}")
    if h.form == "linear" and h.a * h.a != q:
        raise ValueError(f"linear candidate has a^2 = {h.a * h.a}, base size is {q}")


def predicted_count(h, q, n):
    """N_n = q^n + 1 - p_n for the candidate h over a base of size q."""
    _check_base(h, q)
    if h.multiplicity == 0:
        return q**n + 1
    return q**n + 1 - power_sums(h, n)[-1]


def verify_lpoly_against_counts(h, q, counts):
    """Compare predicted and enumerated counts for every n in counts.

    counts maps extension degree n to the enumerated #X(GF(q^n)).  A
    mismatch is reported, never raised.
    """
    checks = []
    for n in sorted(counts):
        predicted = predicted_count(h, q, n)
        counted = counts[n]
        checks.append(
            {"n": n, "predicted": predicted, "counted": counted, "pass": predicted == counted}
        )
    return {
        "candidate": h.describe(),
        "checks": checks,
        "overall": all(c["pass"] for c in checks),
    }


def maximality_check(q, g, N):
    """Whether N meets the upper Weil bound q + 2 g sqrt(q) + 1 exactly."""
    r = math.isqrt(q)
    if r * r != q:
        raise ValueError(f"maximality is tested over square bases only, got {q}")
    return N == q + 2 * g * r + 1


def expand_coefficients(h):
    """Coefficients of h(t) expanded, ascending degree, exact ints."""
    if h.form == "factored":
        base = [h.c, h.b, 1]
    else:
        base = [h.a, 1]
    out = [1]
    for _ in range(h.multiplicity):
        nxt = [0] * (len(out) + len(base) - 1)
        for i, u in enumerate(out):
            for j, v in enumerate(base):
                nxt[i + j] += u * v
        out = nxt
    return out


def functional_equation_holds(h, q):
    """Coefficient symmetry a_(2g-i) = q^(g-i) a_i of the expanded h.

    Indexing starts at the monic leading coefficient (a_0 = 1), so a_i
    multiplies t^(2g-i); the relation for i from 0 to g covers all pairs.
    """
    _check_base(h, q)
    a = list(reversed(expand_coefficients(h)))
    deg = len(a) - 1
    if deg % 2 != 0:
        return False
    g = deg // 2
    return all(a[deg - i] == q ** (g - i) * a[i] for i in range(g + 1))
