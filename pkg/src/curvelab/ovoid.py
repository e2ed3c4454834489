"""The Suzuki-Tits ovoid in P^4 and the curve's rational image.

Two independent constructions of the same q^2 + 1 point set:

  * `generate_ovoid` writes down (1 : a : b : f(a,b) : a f(a,b) + b^2)
    for all (a, b) in GF(q)^2, with f(a, b) = a^(2q0+1) + b^(2q0),
    plus the distinguished point (0:0:0:0:1);
  * `pi_image` pushes every rational point of the Suzuki curve through
    pi = (1 : x : y : z : w) with z = x^(2q0+1) + y^(2q0) and
    w = x y^(2q0) + z^(2q0), sending the place at infinity to
    (0:0:0:0:1).

Set equality of the two, injectivity of pi, and the no-three-collinear
property (an exhaustive pencil scan over all point pairs, delegated to
the compiled kernel when available) are the checks.  All coordinates
are field encodings; points normalize so the first nonzero coordinate
is 1, which makes equality plain tuple equality.
"""

from __future__ import annotations

import numpy as np

from curvelab.curves import enumerate_points, suzuki_curve
from curvelab.fields import build_field
from curvelab.kernels import secant_excess_count

__all__ = [
    "ProjectivePoint",
    "OvoidSet",
    "generate_ovoid",
    "pi_image",
    "check_injectivity",
    "secant_check",
    "ovoid_report",
]


class ProjectivePoint:
    """Point of P^4 over a finite field, normalized on construction.

    The first nonzero coordinate is scaled to 1; equality and hashing
    then reduce to tuple equality.  Construction rejects the zero tuple.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = tuple(coords)
        if len(coords) != 5:
            raise ValueError("projective points here live in P^4: need 5 coordinates")
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("the zero tuple is not a projective point")
        if lead != 1:
            s = field.inv(lead)
            coords = tuple(field.mul(c, s) for c in coords)
        self.field = field
        self.coords = coords

    def __eq__(self, other):
        return (
            isinstance(other, ProjectivePoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        fmt = self.field.format_element
        return "(" + " : ".join(fmt(c) for c in self.coords) + ")"


class OvoidSet:
    """Immutable set of normalized projective points over one field."""

    __slots__ = ("field", "points")

    def __init__(self, field, points):
        pts = frozenset(points)
        for P in pts:
            if P.field != field:
                raise ValueError("all points must share the ambient field")
        self.field = field
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, P):
        return P in self.points

    def __eq__(self, other):
        return (
            isinstance(other, OvoidSet)
            and self.field == other.field
            and self.points == other.points
        )


def _f_value(field, q0, a, b):
    return field.add(field.pow(a, 2 * q0 + 1), field.pow(b, 2 * q0))


def generate_ovoid(params):
    """The ovoid from the closed parameterization; exactly q^2 + 1 points.

    A duplicate among the parameterized points would mean the formula
    was transcribed wrong, so the cardinality is asserted.
    """
    q0, q = params.q0, params.q
    F = build_field(2, params.s * 2 + 1)
    pts = set()
    for a in F.elements():
        for b in F.elements():
            f = _f_value(F, q0, a, b)
            tail = F.add(F.mul(a, f), F.pow(b, 2))
            pts.add(ProjectivePoint(F, (1, a, b, f, tail)))
    pts.add(ProjectivePoint(F, (0, 0, 0, 0, 1)))
    if len(pts) != q * q + 1:
        raise RuntimeError(
            f"ovoid parameterization produced {len(pts)} points, expected {q*q+1}"
        )
    return OvoidSet(F, pts)


def _zw_values(field, q0, a, b):
    z = field.add(field.pow(a, 2 * q0 + 1), field.pow(b, 2 * q0))
    w = field.add(field.mul(a, field.pow(b, 2 * q0)), field.pow(z, 2 * q0))
    return z, w


def pi_image(params):
    """Image of the rational points under pi = (1 : x : y : z : w).

    The place at infinity maps to (0:0:0:0:1).
    """
    curve = suzuki_curve(params.s)
    F = curve.base_field
    q0 = params.q0
    pts = set()
    for a, b in enumerate_points(curve, 1):
        z, w = _zw_values(F, q0, a, b)
        pts.add(ProjectivePoint(F, (1, a, b, z, w)))
    pts.add(ProjectivePoint(F, (0, 0, 0, 0, 1)))
    return OvoidSet(F, pts)


def check_injectivity(points, sources):
    """True iff no two distinct sources share a normalized image point."""
    if len(points) != len(sources):
        raise ValueError("points and sources must be parallel lists")
    seen = {}
    for pt, src in zip(points, sources):
        seen.setdefault(pt, set()).add(src)
    return all(len(srcs) == 1 for srcs in seen.values())


def secant_check(O):
    """True iff no projective line meets the set in three or more points.

    Scans every unordered pair's pencil P + mu*Q over nonzero mu; a hit
    against a third set member is a secant violation.  Sets of fewer
    than three points are trivially secant-free.
    """
    if len(O) < 3:
        return True
    F = O.field
    if F.p != 2:
        raise ValueError("the pencil scan packs characteristic-2 coordinates")
    rows = np.array(sorted(P.coords for P in O), dtype=np.int64)
    exp, log = F.numpy_tables()
    excess = secant_excess_count(rows, exp, log, F.order)
    return excess == 0


def ovoid_report(params, include_secant=True):
    """Every ovoid check in one JSON-friendly dict.

    include_secant=False skips the quadratic pair scan (the one
    superlinear piece) and omits its key from the checks.
    """
    q0, q = params.q0, params.q
    O = generate_ovoid(params)
    image = pi_image(params)
    F = O.field

    curve = suzuki_curve(params.s)
    affine = list(enumerate_points(curve, 1))
    images = []
    zw_identity = True
    for a, b in affine:
        z, w = _zw_values(F, q0, a, b)
        f = _f_value(F, q0, a, b)
        tail = F.add(F.mul(a, f), F.pow(b, 2))
        if z != f or w != tail:
            zw_identity = False
        images.append(ProjectivePoint(F, (1, a, b, z, w)))
    sources = list(affine) + ["infinity"]
    images.append(ProjectivePoint(F, (0, 0, 0, 0, 1)))

    checks = {
        "cardinality": len(O) == q * q + 1,
        "sets_equal": O == image,
        "injective": check_injectivity(images, sources),
        "image_cardinality": len(image) == len(affine) + 1,
        "z_equals_f_pointwise": zw_identity,
    }
    if include_secant:
        checks["secant_free"] = secant_check(O)
    return {
        "family": "suzuki",
        "s": params.s,
        "q": q,
        "size": len(O),
        "checks": checks,
        "pass": all(checks.values()),
    }
