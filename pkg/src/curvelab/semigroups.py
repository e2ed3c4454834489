"""Numerical semigroups: gaps, Apery sets, and the Suzuki gap bookkeeping.

A numerical semigroup here is the set of nonnegative integer combinations
of finitely many generators with gcd 1.  Membership is a bitmask (bit n
set when n is a member) grown by shift-or dynamic programming until a run
of `multiplicity` consecutive members appears; such a run proves every
larger integer is a member, so the run's start is exactly the conductor.
The window starts at the product of the two smallest generators and
doubles as needed, which stays safe even when those two generators share
a common factor (e.g. <4, 6, 25>, whose Frobenius number 27 exceeds 24).

The Suzuki-specific piece is `apery_blocks`: the explicit per-residue
element lists for the semigroup <q, q+2q0-1, q+2q0, q+2q0+1>, emitted
exactly as printed in the source material and then verified three ways
(residue coverage, the Apery property of each element, and the gap count
via the Selmer coefficient sum) rather than repaired if a transcription
were off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "NumericalSemigroup",
    "AperySet",
    "from_generators",
    "selmer_genus",
    "apery_blocks",
    "semigroup_json_dict",
]


@dataclass(frozen=True)
class AperySet:
    """Least member per residue class modulo a member m; elements[r] = r mod m."""

    modulus: int
    elements: tuple

    def __post_init__(self):
        if len(self.elements) != self.modulus:
            raise ValueError("need exactly one element per residue")
        for r, w in enumerate(self.elements):
            if w % self.modulus != r:
                raise ValueError(f"element {w} is not in residue class {r}")
        if self.elements[0] != 0:
            raise ValueError("residue-0 element of an Apery set is 0")


class NumericalSemigroup:
    """Immutable semigroup <generators> with exact conductor and gap data."""

    __slots__ = ("generators", "multiplicity", "conductor", "_mask", "_limit")

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise ValueError("need at least one generator")
        if gens[0] < 1:
            raise ValueError("generators must be positive")
        if math.gcd(*gens) != 1:
            raise ValueError(f"generators {gens} have gcd > 1; not a numerical semigroup")
        self.generators = tuple(gens)
        self.multiplicity = gens[0]

        m = gens[0]
        window = max((gens[1] if len(gens) > 1 else m) * m, 4 * m, 64)
        while True:
            mask = self._grow_mask(window)
            top_gap = (~mask & ((1 << window) - 1)).bit_length() - 1
            # a tail of m consecutive members proves [top_gap+1, infinity)
            # is inside the semigroup, so the window sufficed
            if window - (top_gap + 1) >= m:
                break
            window *= 2
        self.conductor = top_gap + 1
        self._mask = mask
        self._limit = window

    def _grow_mask(self, window):
        cap = (1 << window) - 1
        mask = 1
        for g in self.generators:
            # shift-or with doubling offsets g, 2g, 4g, ... covers every
            # multiple of g below the window
            shift = g
            while shift < window:
                mask = (mask | (mask << shift)) & cap
                shift *= 2
        return mask

    def __contains__(self, n):
        if not isinstance(n, int):
            return False
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool((self._mask >> n) & 1)

    def members_below(self, bound):
        return [n for n in range(bound) if n in self]

    @property
    def frobenius_number(self):
        """Largest gap; -1 when the semigroup is all of N."""
        return self.conductor - 1

    @property
    def genus(self):
        members_below_conductor = (self._mask & ((1 << self.conductor) - 1)).bit_count()
        return self.conductor - members_below_conductor

    def gaps(self):
        return [n for n in range(self.conductor) if n not in self]

    def is_symmetric(self):
        """x in S iff F - x not in S, over 0 <= x <= F."""
        F = self.frobenius_number
        return all((x in self) != ((F - x) in self) for x in range(F + 1))

    def apery_set(self, m):
        """Least member in each residue class mod m; m must be a member."""
        if m <= 0 or m not in self:
            raise ValueError(f"Apery modulus must be a positive member, got {m}")
        found = {}
        n = 0
        while len(found) < m:
            if n in self:
                r = n % m
                if r not in found:
                    found[r] = n
            n += 1
        elements = tuple(found[r] for r in range(m))
        for w in elements:
            if w in self and (w - m) in self:
                raise AssertionError(f"Apery element {w} has {w - m} in the semigroup")
        return AperySet(modulus=m, elements=elements)

    def __repr__(self):
        return f"NumericalSemigroup{self.generators}"


def from_generators(gens):
    return NumericalSemigroup(gens)


def selmer_genus(apery):
    """Sum of floor(w/m) over the nonzero Apery elements; equals the genus."""
    return sum(w // apery.modulus for w in apery.elements if w)


# ---------------------------------------------------------------------------
# The explicit residue blocks for <q, q+2q0-1, q+2q0, q+2q0+1>.

def _block_lists(q0, q):
    """The printed element lists, keyed by block index 1..2q0-1."""
    blocks = {}
    for i in range(1, q0):
        blocks[i] = [i * q + i * (2 * q0 - 1) + j for j in range(2 * i + 1)]
    blocks[q0] = [q0 * q + q - q0 + j for j in range(q0)]
    blocks[q0 + 1] = [(q0 + 1) * q + 1 + j for j in range(q0)]
    for i in range(2, q0 // 2 + 1):
        first = [(q0 + i) * q + (2 * i - 3) * q0 + i - 1 + j for j in range(q0 - 2 * i + 2)]
        second = [(q0 + i) * q + (2 * i - 2) * q0 + i + j for j in range(q0)]
        blocks[q0 + i] = first + second
    for i in range(1, q0 // 2):
        base = (3 * q0 // 2 + i) * q + (q0 // 2 + i - 1) * (2 * q0 - 1) + q0 + 2 * i - 1
        blocks[3 * q0 // 2 + i] = [base + j for j in range(q0 - 2 * i)]
    return blocks


def _coefficient_sum_closed_form(q0):
    """The displayed five-part sum for the gap count of the block semigroup."""
    total = sum(i * (2 * i + 1) for i in range(1, q0))
    total += q0 * q0
    total += (q0 + 1) * q0
    total += sum((q0 + i) * (2 * q0 - 2 * i + 2) for i in range(2, q0 // 2 + 1))
    total += sum((3 * q0 // 2 + i) * (q0 - 2 * i) for i in range(1, q0 // 2))
    return total


def apery_blocks(params):
    """Emit and verify the explicit Apery blocks of <q, q+2q0-1, q+2q0, q+2q0+1>.

    Returns a report with the blocks as printed, and three checks:
      residue_cover: the union plus {0} hits each residue mod q exactly once;
      apery_property: each element w has w in H and w - q not in H, and the
        union plus {0} equals the Apery set of H at q computed from the bitmap;
      selmer_sum: the per-element floor(w/q) sum equals both the displayed
        closed-form part sum and q0(q-1) - q0^2/4, and matches genus(H).
    Failures are reported (with offending block indices), never repaired.
    """
    q0, q = params.q0, params.q
    blocks = _block_lists(q0, q)
    union = [w for idx in sorted(blocks) for w in blocks[idx]]

    H = NumericalSemigroup([q, q + 2 * q0 - 1, q + 2 * q0, q + 2 * q0 + 1])

    residue_seen = {}
    colliding = set()
    for idx in sorted(blocks):
        for w in blocks[idx]:
            r = w % q
            if r in residue_seen and residue_seen[r] != idx:
                colliding.add(idx)
                colliding.add(residue_seen[r])
            residue_seen.setdefault(r, idx)
    residues_ok = sorted(residue_seen) == list(range(1, q)) and not colliding and len(
        union
    ) == q - 1

    bad_apery = []
    for idx in sorted(blocks):
        for w in blocks[idx]:
            if w not in H or (w - q) in H:
                bad_apery.append(idx)
                break
    apery = H.apery_set(q)
    union_matches_apery = sorted(union + [0]) == sorted(apery.elements)

    coeff_sum = sum(w // q for w in union)
    closed_form = _coefficient_sum_closed_form(q0)
    target = q0 * (q - 1) - q0 * q0 // 4
    genus_H = H.genus

    return {
        "q0": q0,
        "q": q,
        "blocks": {idx: blocks[idx] for idx in sorted(blocks)},
        "union_size": len(union),
        "residue_cover": {"ok": residues_ok, "colliding_blocks": sorted(colliding)},
        "apery_property": {
            "ok": not bad_apery and union_matches_apery,
            "offending_blocks": bad_apery,
            "union_is_apery_set": union_matches_apery,
        },
        "selmer_sum": {
            "computed": coeff_sum,
            "closed_form_parts": closed_form,
            "target": target,
            "genus_of_semigroup": genus_H,
            "ok": coeff_sum == closed_form == target == genus_H,
        },
        "ok": (
            residues_ok
            and not bad_apery
            and union_matches_apery
            and coeff_sum == closed_form == target == genus_H
        ),
    }


def semigroup_json_dict(S):
    """JSON-ready summary: generators, genus, Frobenius, symmetry, Apery data."""
    apery = S.apery_set(S.multiplicity)
    return {
        "generators": list(S.generators),
        "genus": S.genus,
        "frobenius": S.frobenius_number,
        "symmetric": S.is_symmetric(),
        "apery": {"modulus": apery.modulus, "elements": list(apery.elements)},
        "selmer_genus": selmer_genus(apery),
    }
