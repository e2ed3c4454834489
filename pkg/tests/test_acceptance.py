"""The acceptance gate: one test per published claim, stated tolerances.

Each test prints one `[acceptance] <name>: PASS` line on success; a
failure surfaces as an ordinary pytest failure.  Criteria with a stated
runtime cap assert it with a monotonic clock.
"""

import math
import random
import time
from fractions import Fraction

from curvelab.curves import (
    SuzukiParams,
    count_points,
    enumerate_points,
    hermitian_curve,
    suzuki_curve,
)
from curvelab import funcfield as ff
from curvelab import semigroups as sg
from curvelab import zeta as zt
from curvelab.ovoid import generate_ovoid, ovoid_report, pi_image

P1 = SuzukiParams.from_s(1)
P2 = SuzukiParams.from_s(2)


def _report(name):
    print(f"[acceptance] {name}: PASS")


def test_criterion_01_point_counts():
    t0 = time.monotonic()
    X = suzuki_curve(1)
    for n in (1, 2, 3):
        assert count_points(X, n) == 65
    assert 65 == 8**2 + 1
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0, f"counting took {elapsed:.2f}s"
    _report("point counts 65/65/65 under 10s")


def test_criterion_02_zeta_consistency():
    X = suzuki_curve(1)
    h = zt.suzuki_lpolynomial(P1)
    for n in (1, 2, 3):
        assert zt.predicted_count(h, 8, n) == count_points(X, n)
    assert zt.functional_equation_holds(h, 8)
    g = 14
    for n, p_n in enumerate(zt.power_sums(h, 12), start=1):
        assert p_n * p_n <= 4 * g * g * 8**n
    _report("zeta candidate vs counts, symmetry, growth")


def test_criterion_03_hermitian_maximality():
    t0 = time.monotonic()
    for q, N, g in ((4, 9, 1), (16, 65, 6)):
        H = hermitian_curve(q)
        assert H.genus == g
        assert count_points(H, 1) == N
        assert zt.maximality_check(q, g, N)
        h = zt.hermitian_lpolynomial(q)
        for n in (1, 2):
            assert zt.predicted_count(h, q, n) == count_points(H, n)
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0, f"maximality checks took {elapsed:.2f}s"
    _report("Hermitian maximality q=4, q=16 under 5s")


def test_criterion_04_semigroups():
    S = sg.from_generators([8, 10, 12, 13])
    assert S.genus == 14
    assert S.is_symmetric()
    assert S.frobenius_number == 27

    T = sg.from_generators([8, 11, 12, 13])
    assert T.genus == 13 == P1.q0 * (P1.q - 1) - P1.q0**2 // 4

    for U in (S, T):
        assert sg.selmer_genus(U.apery_set(U.multiplicity)) == U.genus

    rng = random.Random(20260821)
    for _ in range(100):
        while True:
            gens = sorted(rng.sample(range(2, 60), rng.randrange(3, 6)))
            if math.gcd(*gens) == 1:
                break
        U = sg.from_generators(gens)
        assert sg.selmer_genus(U.apery_set(U.multiplicity)) == U.genus
    _report("semigroup examples and 100-sample Selmer suite")


def test_criterion_05_block_partition():
    for params, coeff_sum in ((P1, 13), (P2, 120)):
        rep = sg.apery_blocks(params)
        assert rep["residue_cover"]["ok"]
        assert rep["apery_property"]["ok"]
        assert rep["selmer_sum"]["computed"] == coeff_sum
        assert rep["selmer_sum"]["ok"]
        assert rep["selmer_sum"]["genus_of_semigroup"] == coeff_sum
    _report("block partition s=1 and s=2")


def test_criterion_06_derivative_identities():
    X = suzuki_curve(1)
    ring = ff.suzuki_ring(X)
    _, x, y, z, w = ff.suzuki_basis(ring)
    q0 = P1.q0
    # the evaluation side of the oracle must see more than 4096 points
    assert len(enumerate_points(X, 4)) == 5888 >= 4096
    assert ff.verify_derivative_identity(ring, y, ring.x**q0, extension=4)
    assert ff.verify_derivative_identity(ring, z, ring.x ** (2 * q0), extension=4)
    assert ff.verify_derivative_identity(ring, w, ring.y ** (2 * q0), extension=4)
    root = ff.power_2k_root({2 * q0: 1}, 1, X.base_field)
    assert root == {q0: 1}
    _report("difference identities symbolic + 5888-point evaluation")


def test_criterion_07_order_sequences():
    t0 = time.monotonic()
    X = suzuki_curve(1)
    ring = ff.suzuki_ring(X)
    basis = ff.suzuki_basis(ring)
    rational = list(enumerate_points(X, 1))[:5]
    assert len(rational) >= 5
    for P in rational:
        assert tuple(ff.vanishing_sequence(ring, basis, P)) == (0, 1, 3, 5, 13)
    far = ff.sample_nonrational_points(X, count=5)
    assert len(far["points"]) >= 5
    for P in far["points"]:
        seq = ff.vanishing_sequence(ring, basis, P, field=far["field"])
        assert tuple(seq) == (0, 1, 2, 4, 8)

    H = hermitian_curve(4)
    hring = ff.hermitian_ring(H)
    hbasis = ff.hermitian_basis(hring)
    for P in list(enumerate_points(H, 1))[:5]:
        assert tuple(ff.vanishing_sequence(hring, hbasis, P)) == (0, 1, 3)
    hfar = ff.sample_nonrational_points(H, count=5)
    for P in hfar["points"]:
        seq = ff.vanishing_sequence(hring, hbasis, P, field=hfar["field"])
        assert tuple(seq) == (0, 1, 2)
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0, f"order sequences took {elapsed:.2f}s"
    _report("order sequences rational + non-rational, both families, under 30s")


def test_criterion_08_stohr_voloch_degrees():
    rep = ff.suzuki_stohr_voloch_report(P1)
    assert rep["deg_S"] == 520 == (4 + 2 * P1.q0) * 65
    assert rep["deg_R"] == 455 == (2 * P1.q0 + 3) * 65
    direct = ff.stohr_voloch_degrees(rep["data"])
    assert direct["deg_S"] == 520 and direct["deg_R"] == 455

    rep2 = ff.suzuki_stohr_voloch_report(P2)
    assert rep2["deg_S"] == 12300 == 12 * 1025
    _report("divisor degrees 520/455 and 12300, two routes")


def test_criterion_09_bound_checks():
    d, g = 13, 14
    b4 = ff.castelnuovo_bound(d, 4)
    assert b4 == Fraction(147, 4)
    assert float(b4) == 36.75
    assert Fraction(2 * g) < b4
    assert ff.castelnuovo_verdict(d, 4, g) == "within"

    b6 = ff.castelnuovo_bound(d, 6)
    assert b6 == Fraction(361, 20)
    assert float(b6) == 18.05
    assert Fraction(2 * g) > b6
    assert ff.castelnuovo_verdict(d, 6, g) == "exceeds"

    assert ff.lewittes_bound(8, 8) == 65
    assert ff.lewittes_verdict(8, 8, 65) == "tight"
    _report("genus bounds: 36.75 within, 18.05 exceeded, 65 tight")


def test_criterion_10_ovoid():
    t0 = time.monotonic()
    rep1 = ovoid_report(P1, include_secant=True)
    assert rep1["pass"], rep1["checks"]
    assert rep1["size"] == 65

    assert generate_ovoid(P2) == pi_image(P2)
    rep2 = ovoid_report(P2, include_secant=False)
    assert rep2["pass"], rep2["checks"]
    assert rep2["size"] == 1025
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0, f"ovoid suite took {elapsed:.2f}s"
    _report("ovoid equality/injectivity s=1,2 and secant-free s=1 under 30s")


def test_criterion_11_canonical_witnesses():
    rep = ff.canonical_orders_report(P1)
    assert rep["cardinality"] == 12 <= 14
    assert rep["max"] == 16 <= 26
    assert rep["contains_q0q"] and 16 > 14 - 1
    assert rep["q0q_exceeds_g_minus_1"]
    _report("canonical order set witnesses non-classicality")
