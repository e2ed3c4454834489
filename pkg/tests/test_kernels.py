"""Kernel contracts: brute-force oracles and compiled/pure backend parity."""

import numpy as np
import pytest

from curvelab.fields import build_field
from curvelab.kernels import _ref

try:
    from curvelab.kernels import _core
except ImportError:
    _core = None

BACKENDS = [_ref] + ([_core] if _core is not None else [])


def _ids():
    return ["pure"] + (["compiled"] if _core is not None else [])


@pytest.fixture(params=BACKENDS, ids=_ids())
def backend(request):
    return request.param


def test_pair_match_count_oracle(backend):
    rng = np.random.default_rng(7)
    lhs = rng.integers(0, 9, size=37)
    rhs = rng.integers(0, 9, size=29)
    expected = sum(int(a == b) for a in lhs for b in rhs)
    assert backend.pair_match_count(lhs, rhs) == expected


def test_pair_match_count_empty(backend):
    assert backend.pair_match_count(np.array([], dtype=np.int64), np.array([1])) == 0


def test_axioms_clean_tables(backend):
    for m in (2, 4, 6):
        F = build_field(2, m)
        exp, log = F.numpy_tables()
        assert backend.axiom_violation_count(exp, log, F.order) == 0


def test_axioms_catch_corruption(backend):
    F = build_field(2, 4)
    exp, log = F.numpy_tables()
    exp = exp.copy()
    exp[3], exp[4] = exp[4], exp[3]
    assert backend.axiom_violation_count(exp, log, F.order) > 0


def test_backend_parity_on_corruption():
    if _core is None:
        pytest.skip("compiled backend not built")
    F = build_field(2, 5)
    exp, log = F.numpy_tables()
    bad_exp = exp.copy()
    bad_exp[7], bad_exp[11] = bad_exp[11], bad_exp[7]
    assert _ref.axiom_violation_count(
        bad_exp, log, F.order
    ) == _core.axiom_violation_count(bad_exp, log, F.order)


def _tiny_cap_rows(F):
    """A small no-3-collinear configuration: the standard frame of P^4."""
    rows = []
    for i in range(5):
        coords = [0] * 5
        coords[i] = 1
        rows.append(coords)
    return np.array(rows, dtype=np.int64)


def test_secant_kernel_frame(backend):
    F = build_field(2, 3)
    exp, log = F.numpy_tables()
    rows = _tiny_cap_rows(F)
    assert backend.secant_excess_count(rows, exp, log, F.order) == 0


def test_secant_kernel_detects_collinear(backend):
    F = build_field(2, 3)
    exp, log = F.numpy_tables()
    rows = _tiny_cap_rows(F)
    # e0 + e1 lies on the line through e0 and e1
    extra = np.array([[1, 1, 0, 0, 0]], dtype=np.int64)
    rows = np.concatenate([rows, extra])
    assert backend.secant_excess_count(rows, exp, log, F.order) > 0


def test_secant_backend_parity_on_violations():
    if _core is None:
        pytest.skip("compiled backend not built")
    F = build_field(2, 3)
    exp, log = F.numpy_tables()
    g = F.generator
    rows = np.concatenate(
        [
            _tiny_cap_rows(F),
            np.array([[1, 1, 0, 0, 0], [1, g, 0, 0, 0], [0, 1, 1, 1, 0]], dtype=np.int64),
        ]
    )
    assert _ref.secant_excess_count(rows, exp, log, F.order) == _core.secant_excess_count(
        rows, exp, log, F.order
    )


def test_secant_order_cap(backend):
    F = build_field(2, 13)
    exp, log = F.numpy_tables()
    rows = np.array([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]], dtype=np.int64)
    with pytest.raises(ValueError):
        backend.secant_excess_count(rows, exp, log, F.order)


def test_backend_selection_env(monkeypatch):
    import importlib

    import curvelab.kernels as K

    monkeypatch.setenv("CURVELAB_PURE", "1")
    K = importlib.reload(K)
    assert K.BACKEND == "pure"
    monkeypatch.delenv("CURVELAB_PURE")
    K = importlib.reload(K)
    assert K.BACKEND in ("compiled", "pure")
