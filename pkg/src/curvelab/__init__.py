"""Exact-arithmetic verification lab for Suzuki and Hermitian curves.

Point counts over small finite fields, zeta/L-polynomial bookkeeping,
Weierstrass numerical semigroups, order sequences of linear series with
their ramification divisors, Hasse-derivative identities, and the ovoid
image of the Suzuki curve in P^4, all checked exactly at desk scale.
"""

from curvelab.curves import (
    SuzukiParams,
    count_points,
    enumerate_points,
    hermitian_curve,
    suzuki_curve,
)
from curvelab.fields import Field, FieldElement, build_field, embed
from curvelab.funcfield import (
    hermitian_basis,
    hermitian_ring,
    suzuki_basis,
    suzuki_ring,
    vanishing_sequence,
)
from curvelab.ovoid import generate_ovoid, ovoid_report, pi_image
from curvelab.semigroups import NumericalSemigroup, apery_blocks, from_generators
from curvelab.zeta import (
    hermitian_lpolynomial,
    predicted_count,
    suzuki_lpolynomial,
    verify_lpoly_against_counts,
)

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "NumericalSemigroup",
    "SuzukiParams",
    "apery_blocks",
    "build_field",
    "count_points",
    "embed",
    "enumerate_points",
    "from_generators",
    "generate_ovoid",
    "hermitian_basis",
    "hermitian_curve",
    "hermitian_lpolynomial",
    "hermitian_ring",
    "ovoid_report",
    "pi_image",
    "predicted_count",
    "suzuki_basis",
    "suzuki_curve",
    "suzuki_lpolynomial",
    "suzuki_ring",
    "vanishing_sequence",
    "verify_lpoly_against_counts",
    "__version__",
]
