"""Coordinate rings, local expansions, order sequences, divisor degrees."""

import random
from fractions import Fraction

import pytest

from curvelab.curves import SuzukiParams, hermitian_curve, suzuki_curve
from curvelab.fields import build_field
from curvelab.funcfield import (
    OrderSequence,
    PrecisionExhausted,
    Series,
    StohrVolochData,
    canonical_orders_report,
    castelnuovo_bound,
    castelnuovo_verdict,
    duality_orders,
    frobenius_point,
    hasse_derivative,
    hermitian_basis,
    hermitian_pole_orders,
    hermitian_ring,
    lewittes_bound,
    lewittes_verdict,
    local_expansion,
    osculation_report,
    power_2k_root,
    sample_nonrational_points,
    smallest_extension_with_nonrational,
    stohr_voloch_degrees,
    subadditivity_check,
    suzuki_basis,
    suzuki_pole_orders,
    suzuki_ring,
    suzuki_stohr_voloch_report,
    vanishing_data,
    vanishing_sequence,
    verify_derivative_identity,
)

S1 = suzuki_curve(1)
R1 = suzuki_ring(S1)


# ---------------------------------------------------------------------------
# Ring reduction.


def test_defining_equation_reduces_to_zero():
    for ring in (R1, suzuki_ring(suzuki_curve(2)), hermitian_ring(hermitian_curve(4)),
                 hermitian_ring(hermitian_curve(9))):
        lhs = ring.zero
        for e in ring.curve.lhs_exponents:
            lhs = lhs + ring.y**e
        rhs = ring.zero
        for e in ring.curve.rhs_exponents:
            rhs = rhs + ring.x**e
        assert (lhs - rhs).is_zero()


def test_canonical_y_degree():
    big = R1.y**23 * R1.x**3 + R1.y**8
    assert all(j < R1.y_bound for (_, j) in big.terms)


def test_suzuki_basis_canonical_forms():
    one, x, y, z, w = suzuki_basis(R1)
    assert z.terms == {(5, 0): 1, (0, 4): 1}
    # w = x y^4 + z^4 and z^4 collapses to y^2 + x^6 after the y^16 rewrite
    assert w.terms == {(1, 4): 1, (0, 2): 1, (6, 0): 1}
    assert one.terms == {(0, 0): 1}


def test_hermitian_rewrite_odd_characteristic():
    ring = hermitian_ring(hermitian_curve(9))
    cube = ring.y**3
    # y^3 = x^4 - y over GF(9); the encoded -1 is the prime-field 2
    assert cube.terms == {(4, 0): 1, (0, 1): 2}


def raw_eval(ring, raw_terms, field, x, y):
    """Term-by-term evaluation of an unreduced exponent dict."""
    base = ring.field
    acc = 0
    for (i, j), c in raw_terms.items():
        if not c:
            continue
        c_ext = base.embed_enc(field, c)
        acc = field.add(acc, field.mul(c_ext, field.mul(field.pow(x, i), field.pow(y, j))))
    return acc


def test_reduction_respects_evaluation():
    # reduction is modulo the curve equation, so raw and canonical forms
    # must agree at every curve point over every extension
    from curvelab.curves import enumerate_points

    rng = random.Random(11)
    F8 = R1.field
    raws = []
    for _ in range(6):
        raws.append(
            {
                (rng.randrange(18), rng.randrange(20)): rng.randrange(1, 8)
                for _ in range(7)
            }
        )
    base_pts = enumerate_points(S1, 1)
    far = sample_nonrational_points(S1)
    for raw in raws:
        reduced = R1.element(raw)
        for px, py in base_pts:
            assert raw_eval(R1, raw, F8, px, py) == reduced.evaluate(F8, px, py)
        for px, py in far["points"]:
            assert raw_eval(R1, raw, far["field"], px, py) == reduced.evaluate(
                far["field"], px, py
            )


def test_ring_element_algebra():
    x, y = R1.x, R1.y
    assert (x + y) ** 2 == x**2 + y**2
    assert (x + y) * (x + y) == x * x + y * y
    assert (x - x).is_zero()
    assert x**0 == R1.one
    with pytest.raises(ValueError):
        x**-1
    assert x.scale(0).is_zero()
    assert hash(x + y) == hash(y + x)
    assert "x" in repr(x) and repr(R1.zero) == "0"


def test_pole_orders_and_duality():
    p1 = SuzukiParams.from_s(1)
    assert suzuki_pole_orders(p1) == (0, 8, 10, 12, 13)
    assert tuple(duality_orders(suzuki_pole_orders(p1))) == (0, 1, 3, 5, 13)
    p2 = SuzukiParams.from_s(2)
    assert suzuki_pole_orders(p2) == (0, 32, 36, 40, 41)
    assert tuple(duality_orders(suzuki_pole_orders(p2))) == (0, 1, 5, 9, 41)
    assert hermitian_pole_orders(2) == (0, 2, 3)
    assert tuple(duality_orders(hermitian_pole_orders(2))) == (0, 1, 3)
    assert tuple(duality_orders(hermitian_pole_orders(3))) == (0, 1, 4)


# ---------------------------------------------------------------------------
# Series and local expansions.


def test_series_basics():
    F = build_field(2, 3)
    s = Series.linear(F, 3, 1, 6)
    assert s.precision == 6
    assert (s + s).valuation() is None
    sq = s * s
    assert sq.coeffs[0] == F.mul(3, 3)
    assert sq.coeffs[1] == 0
    assert s**3 == s * s * s
    two = s.p_power(2)
    assert two.coeffs[0] == F.pow(3, 2)
    assert two.coeffs[2] == 1
    assert two.coeffs[1] == 0
    assert Series.constant(F, 0, 4).valuation() is None
    assert Series.constant(F, 5, 4).valuation() == 0


def test_y_expansion_at_origin():
    exp = local_expansion(R1, (0, 0), R1.y)
    assert exp.precision == 14
    expected = [0] * 14
    expected[3] = 1
    expected[10] = 1
    assert list(exp.series.coeffs) == expected
    assert exp.valuation() == 3


def test_x_expansion_is_linear():
    exp = local_expansion(R1, (0, 0), R1.x)
    assert exp.series.coeffs[:2] == (0, 1)
    assert exp.valuation() == 1


def test_expansion_off_curve_raises():
    F64 = build_field(2, 6)
    with pytest.raises(ValueError):
        local_expansion(R1, (F64.generator, 0), R1.x, field=F64)
    ring9 = hermitian_ring(hermitian_curve(9))
    with pytest.raises(ValueError):
        local_expansion(ring9, (1, 0), ring9.x)


def test_expansion_consistency_with_equation():
    # expansions of both equation sides agree as series at several centers
    from curvelab.curves import enumerate_points

    pts = list(enumerate_points(S1, 1))[:6]
    for P in pts:
        lhs = local_expansion(R1, P, R1.y**8 + R1.y)
        rhs = local_expansion(R1, P, R1.x**10 + R1.x**3)
        assert lhs.series == rhs.series


# ---------------------------------------------------------------------------
# Vanishing sequences.


def test_rational_orders_all_base_points():
    from curvelab.curves import enumerate_points

    basis = suzuki_basis(R1)
    for P in enumerate_points(S1, 1):
        assert tuple(vanishing_sequence(R1, basis, P)) == (0, 1, 3, 5, 13)


def test_combination_achieves_order():
    basis = suzuki_basis(R1)
    data = vanishing_data(R1, basis, (0, 0))
    assert [o for o, _ in data] == [0, 1, 3, 5, 13]
    for order, combo in data:
        combined = R1.zero
        for c, f in zip(combo, basis):
            combined = combined + f.scale(c)
        assert local_expansion(R1, (0, 0), combined).valuation() == order


def test_hermitian_rational_orders():
    from curvelab.curves import enumerate_points

    for q, expect in ((4, (0, 1, 3)), (9, (0, 1, 4))):
        H = hermitian_curve(q)
        ring = hermitian_ring(H)
        basis = hermitian_basis(ring)
        for P in list(enumerate_points(H, 1))[:5]:
            assert tuple(vanishing_sequence(ring, basis, P)) == expect


def test_hermitian_generic_orders():
    for q, expect in ((4, (0, 1, 2)), (9, (0, 1, 3))):
        H = hermitian_curve(q)
        ring = hermitian_ring(H)
        basis = hermitian_basis(ring)
        far = sample_nonrational_points(H, count=3)
        for P in far["points"]:
            assert tuple(
                vanishing_sequence(ring, basis, P, field=far["field"])
            ) == expect


def test_dependent_basis_exhausts_precision():
    basis = [R1.one, R1.x, R1.one + R1.x]
    with pytest.raises(PrecisionExhausted):
        vanishing_data(R1, basis, (0, 0))


def test_order_sequence_validation():
    with pytest.raises(ValueError):
        OrderSequence((0, 2, 1))
    with pytest.raises(ValueError):
        OrderSequence((-1, 0))
    with pytest.raises(ValueError):
        OrderSequence((0, 1, 1))
    seq = OrderSequence((0, 1, 3))
    assert len(seq) == 3
    assert seq[2] == 3
    assert list(seq) == [0, 1, 3]


# ---------------------------------------------------------------------------
# Non-rational sampling and the Frobenius geometry.


def test_smallest_extension():
    assert smallest_extension_with_nonrational(S1) == 4
    assert smallest_extension_with_nonrational(hermitian_curve(4)) == 3
    assert smallest_extension_with_nonrational(hermitian_curve(9)) == 3


def test_sampling_determinism():
    a = sample_nonrational_points(S1)
    b = sample_nonrational_points(S1)
    assert a["points"] == b["points"]
    assert a["extension"] == 4
    assert a["seed"] == 20260821
    assert a["total_nonrational"] == 5888 - 64
    assert len(a["points"]) == 10
    c = sample_nonrational_points(S1, seed=1)
    assert c["lexicographic"] == a["lexicographic"]


def test_hermitian_nonrational_total():
    far = sample_nonrational_points(hermitian_curve(4))
    assert far["extension"] == 3
    assert far["total_nonrational"] == 80 - 8


def test_frobenius_point_action():
    far = sample_nonrational_points(S1, count=2)
    F = far["field"]
    for P in far["points"]:
        FrP = frobenius_point(S1, F, P)
        assert FrP != P
        orbit = {P, FrP}
        cur = FrP
        for _ in range(3):
            cur = frobenius_point(S1, F, cur)
            orbit.add(cur)
        # degree-4 points close up after four steps
        assert cur == P
        assert len(orbit) == 4
    base_pt = (0, 0)
    assert frobenius_point(S1, S1.base_field, base_pt) == base_pt


def test_osculation_at_nonrational_points():
    basis = suzuki_basis(R1)
    far = sample_nonrational_points(S1, count=3)
    F = far["field"]
    expected = {
        "orders": (0, 1, 2, 4, 8),
        "nu": (0, 2, 4, 8),
        "top_multiplicities": (4, 1),
    }
    for P in far["points"]:
        rep = osculation_report(R1, basis, P, F, expected)
        assert rep["pass"], rep["checks"]
        assert rep["top_order"] == 8
        assert rep["valuation_at_frobenius_image"] == 4
        assert rep["valuation_at_second_image"] == 1
        # the orbit triple exhausts the intersection divisor's degree
        assert rep["top_order"] + 4 + 1 == R1.degree


# ---------------------------------------------------------------------------
# Hasse derivatives.


def test_hasse_derivative_examples():
    assert hasse_derivative({2: 1}, 1) == {}
    assert hasse_derivative({3: 1}, 1) == {2: 1}
    assert hasse_derivative({6: 1, 5: 1}, 2) == {4: 1}
    assert hasse_derivative({4: 3}, 0) == {4: 3}
    with pytest.raises(ValueError):
        hasse_derivative({1: 1}, -1)


def test_hasse_composition_law():
    rng = random.Random(5)
    f = {rng.randrange(24): rng.randrange(1, 8) for _ in range(8)}
    for i in range(5):
        for j in range(5):
            lhs = hasse_derivative(hasse_derivative(f, j), i)
            full = hasse_derivative(f, i + j)
            expected = full if ((i + j) & i) == i else {}
            assert lhs == expected, (i, j)


def test_power_2k_root():
    F8 = build_field(2, 3)
    assert power_2k_root({4: 1}, 1, F8) == {2: 1}
    assert power_2k_root({1: 1}, 1, F8) is None
    g = {3: 5, 1: 2, 0: 7}
    f = {2 * n: F8.mul(c, c) for n, c in g.items()}
    assert power_2k_root(f, 1, F8) == g
    f4 = {4 * n: F8.pow(c, 4) for n, c in g.items()}
    assert power_2k_root(f4, 2, F8) == g
    assert power_2k_root(g, 0, F8) == g
    with pytest.raises(ValueError):
        power_2k_root({2: 1}, 1, build_field(3, 2))
    with pytest.raises(ValueError):
        power_2k_root({2: 1}, -1, F8)


def test_root_recovers_first_derivative():
    # D^(1) y = x^q0 arrives as the 2^s-th root of x^(2 q0)
    q0 = 2
    root = power_2k_root({2 * q0: 1}, 1, S1.base_field)
    assert root == {q0: 1}
    assert hasse_derivative({2 * q0: 1}, 1) == {}


# ---------------------------------------------------------------------------
# The Frobenius-difference identities.


def test_derivative_identities_symbolic_and_evaluated():
    _, x, y, z, w = suzuki_basis(R1)
    q0 = 2
    for f, d in ((y, R1.x**q0), (z, R1.x ** (2 * q0)), (w, R1.y ** (2 * q0))):
        assert verify_derivative_identity(R1, f, d, extension=2)
        assert verify_derivative_identity(R1, f, d, extension=4)


def test_derivative_identity_rejects_wrong_input():
    y = suzuki_basis(R1)[2]
    assert not verify_derivative_identity(R1, y, R1.x**3, extension=2)
    assert not verify_derivative_identity(R1, y, R1.x**3, extension=4)


def test_z_identity_explicit():
    # z^8 + z = x^4 (x^8 + x) written out: x^12 + x^5
    z = suzuki_basis(R1)[3]
    diff = z**8 - z
    assert diff.terms == {(12, 0): 1, (5, 0): 1}


# ---------------------------------------------------------------------------
# Divisor degrees and classical bounds.


def test_stohr_voloch_data_validation():
    good = dict(g=14, r=4, d=13, q=8, epsilons=(0, 1, 2, 4, 8), nus=(0, 2, 4, 8), N=65)
    StohrVolochData(**good)
    with pytest.raises(ValueError):
        StohrVolochData(**{**good, "epsilons": (1, 2, 3, 4, 8)})
    with pytest.raises(ValueError):
        StohrVolochData(**{**good, "epsilons": (0, 2, 1, 4, 8)})
    with pytest.raises(ValueError):
        StohrVolochData(**{**good, "epsilons": (0, 1, 2, 4)})
    with pytest.raises(ValueError):
        StohrVolochData(**{**good, "nus": (0, 2, 4)})


def test_stohr_voloch_degrees_s1():
    rep = suzuki_stohr_voloch_report(SuzukiParams.from_s(1))
    assert rep["deg_S"] == 520 == 8 * 65
    assert rep["deg_R"] == 455 == 7 * 65
    assert rep["point_weight_S"] == 8
    assert rep["point_weight_R"] == 7
    assert rep["pass"], rep["checks"]
    degs = stohr_voloch_degrees(rep["data"])
    assert degs == {"deg_S": 520, "deg_R": 455}


def test_stohr_voloch_degrees_s2():
    rep = suzuki_stohr_voloch_report(SuzukiParams.from_s(2))
    assert rep["deg_S"] == 12300 == 12 * 1025
    assert rep["deg_R"] == 11275 == 11 * 1025
    assert rep["pass"]


def test_castelnuovo():
    assert castelnuovo_bound(13, 4) == Fraction(147, 4)
    assert castelnuovo_verdict(13, 4, 14) == "within"
    assert castelnuovo_bound(13, 6) == Fraction(361, 20)
    assert castelnuovo_verdict(13, 6, 14) == "exceeds"
    assert castelnuovo_bound(4, 3) == Fraction(2)
    assert castelnuovo_verdict(4, 3, 1) == "tight"
    with pytest.raises(ValueError):
        castelnuovo_bound(13, 1)


def test_lewittes():
    assert lewittes_bound(8, 8) == 65
    assert lewittes_verdict(8, 8, 65) == "tight"
    assert lewittes_verdict(8, 8, 64) == "within"
    assert lewittes_verdict(8, 8, 66) == "exceeds"


def test_subadditivity():
    assert subadditivity_check(OrderSequence((0, 1, 2, 4, 8)))
    assert subadditivity_check(OrderSequence((0, 1, 3, 5, 13)))
    assert not subadditivity_check(OrderSequence((0, 3, 4)))


def test_canonical_orders_s1():
    rep = canonical_orders_report(SuzukiParams.from_s(1))
    assert rep["elements"] == [0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16]
    assert rep["cardinality"] == 12
    assert rep["max"] == 16
    assert rep["cardinality_at_most_g"]
    assert rep["contains_q0q"]
    assert rep["q0q_exceeds_g_minus_1"]
    assert rep["all_at_most_2g_minus_2"]


def test_canonical_orders_s2():
    rep = canonical_orders_report(SuzukiParams.from_s(2))
    assert rep["cardinality_at_most_g"]
    assert rep["contains_q0q"]
    assert rep["q0q_exceeds_g_minus_1"]
    assert rep["all_at_most_2g_minus_2"]
    assert rep["max"] == 6 * 32
