import itertools
from math import prod

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hallwin import motivic
from hallwin.finite_field import field, gl_order
from hallwin.motivic import CurveZeta, MotivicExpr

import oracles


@pytest.mark.parametrize("q,d,expected", [(2, 3, 15), (5, 0, 1), (3, 1, 4)])
def test_sym_point_count_genus_zero(q, d, expected):
    assert motivic.sym_point_count(CurveZeta(q), d) == expected


def test_sym_point_count_elliptic():
    # y^2 = x^3 + x + 1 over F_5 has 9 points, so P(t) = 1 + 3t + 5t^2
    zeta = CurveZeta(5, (1, 3, 5))
    assert zeta.genus == 1
    assert motivic.sym_point_count(zeta, 1) == 9


def test_curve_zeta_validation():
    with pytest.raises(ValueError):
        CurveZeta(2, (2,))
    with pytest.raises(ValueError):
        CurveZeta(2, (1, 1))
    with pytest.raises(ValueError):
        motivic.sym_point_count(CurveZeta(2, (1, -9, 0)), 1)


def test_quot_class_examples():
    assert motivic.bfp_class(1, 4) == MotivicExpr.monomial(0, (4,))
    assert motivic.bfp_class(2, 1) == MotivicExpr.monomial(0, (1,)) + MotivicExpr.monomial(1, (1,))
    expected = MotivicExpr.monomial(0, (2,)) + MotivicExpr.monomial(1, (1, 1)) + MotivicExpr.monomial(2, (2,))
    assert motivic.bfp_class(2, 2) == expected
    assert str(expected) == "Sym2 + Sym1^2*q + Sym2*q^2"


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("d", range(0, 6))
@pytest.mark.parametrize("q", [2, 3, 5])
def test_quot_class_genus_zero_specialization(r, d, q):
    expected = 0
    for parts in itertools.product(range(d + 1), repeat=r):
        if sum(parts) == d:
            twist = sum(i * di for i, di in enumerate(parts))
            expected += q**twist * prod(sum(q**j for j in range(di + 1)) for di in parts)
    count = motivic.bfp_class(r, d).specialize(q, lambda k: motivic.sym_point_count(CurveZeta(q), k))
    assert count == expected


def test_motivic_arithmetic():
    a = MotivicExpr.monomial(1, (2,), 3)
    b = MotivicExpr.monomial(0, (0, 1))
    assert a * b == MotivicExpr.monomial(1, (1, 2), 3)
    assert (a + a).terms == {(1, (2,)): 6}
    with pytest.raises(ValueError):
        MotivicExpr.monomial(-1)


@pytest.mark.parametrize("r,d,coeffs,text", [
    (1, 2, (0, 0, 1), "q^2"),
    (2, 1, (0, 1, 1), "q(q+1)"),
    (2, 2, (0, 0, 1, 1, 1), "q^2(q^2+q+1)"),
])
def test_affine_formula_examples(r, d, coeffs, text):
    assert motivic.quot_affine_formula(r, d) == coeffs
    assert motivic.format_qpoly(coeffs) == text


def test_format_qpoly_signs():
    assert motivic.format_qpoly((3, 0, -2)) == "-2q^2+3"
    assert motivic.format_qpoly(()) == "0"


@pytest.mark.parametrize("a,b,d,q,side,expected", [
    (1, 0, 1, 2, "+", 2),
    (2, 0, 1, 2, "+", 6),
    (1, 0, 2, 2, "+", 4),
    (0, 0, 0, 3, "+", 1),
    (0, 2, 1, 2, "+", 0),
    (0, 1, 1, 2, "-", 2),
])
def test_brute_force_examples(a, b, d, q, side, expected):
    assert motivic.brute_force_stable_count(a, b, d, q, side) == expected


@pytest.mark.parametrize("q,a,b,d", [(2, 1, 0, 1), (2, 2, 0, 1), (2, 1, 0, 2), (2, 2, 1, 1), (3, 1, 0, 1), (3, 2, 0, 1), (2, 1, 1, 2)])
def test_raw_counts_against_span_closure(q, a, b, d):
    res = motivic.stable_count(a, b, d, q, "+")
    assert res.raw == oracles.count_stable_plus(q, a, b, d)
    assert res.gl_order == oracles.gl_order_by_enumeration(q, d)


@pytest.mark.parametrize("a,b,d", [(2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 0, 2)])
def test_sides_are_dual(a, b, d):
    plus = motivic.brute_force_stable_count(a, b, d, 2, "+")
    minus = motivic.brute_force_stable_count(b, a, d, 2, "-")
    assert plus == minus


def test_budget_is_enforced():
    with pytest.raises(motivic.BudgetExceeded):
        motivic.stable_count(5, 0, 3, 3, "+", max_enum=1000)


def test_parallel_workers_match_serial():
    serial = motivic.count_cyclic_pairs(2, 2, 2, workers=1)
    assert motivic.count_cyclic_pairs(2, 2, 2, workers=2) == serial


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_field_axioms(q):
    F = field(q)
    x = np.arange(q)
    add, mul = F.add_t, F.mul_t
    assert np.all(add == add.T) and np.all(mul == mul.T)
    assert np.all(add[:, 0] == x) and np.all(mul[:, 1] == x)
    for u, v, w in itertools.product(range(q), repeat=3):
        assert mul[u, add[v, w]] == add[mul[u, v], mul[u, w]]
        assert mul[u, mul[v, w]] == mul[mul[u, v], w]
    assert all(mul[u, F.inv_t[u]] == 1 for u in range(1, q))
    assert all(add[u, F.neg_t[u]] == 0 for u in range(q))


def test_field_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        field(6)
    with pytest.raises(ValueError):
        field(1)


@pytest.mark.parametrize("q,d", [(2, 1), (2, 2), (3, 2), (4, 2), (2, 3)])
def test_gl_order(q, d):
    F = field(q)
    mats = np.array(list(itertools.product(range(q), repeat=d * d))).reshape(-1, d, d)
    assert int(np.count_nonzero(F.batch_rank(mats) == d)) == gl_order(d, q)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False))
def test_batch_rank_matches_row_reduction_over_f5(rows, cols, rng):
    F = field(5)
    mats = np.array([[[rng.randrange(5) for _ in range(cols)] for _ in range(rows)] for _ in range(8)])
    got = F.batch_rank(mats)
    for m, r in zip(mats, got):
        a = [[int(v) for v in row] for row in m]
        rank = 0
        for col in range(cols):
            piv = next((i for i in range(rank, rows) if a[i][col] % 5), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            inv = pow(a[rank][col], -1, 5)
            a[rank] = [(v * inv) % 5 for v in a[rank]]
            for i in range(rows):
                if i != rank and a[i][col]:
                    f = a[i][col]
                    a[i] = [(v - f * w) % 5 for v, w in zip(a[i], a[rank])]
            rank += 1
        assert r == rank
