import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hallwin import hall, lattice
from hallwin.hall import HallTerm
from hallwin.laurent import SymLaurent

import oracles


def X(*exp, coeff=1):
    return SymLaurent.monomial(exp, coeff)


def test_attracting_set_examples():
    assert hall.attracting_set(1, 2, 1) == Counter({(-1, 0): 1, (-1, 1): 1})
    assert hall.attracting_set(0, 3, 2) == Counter({(-1, 0, 1): 1, (0, -1, 1): 1})
    assert hall.attracting_set(2, 2, 2) == Counter({(-1, 0): 2, (0, -1): 2})
    with pytest.raises(ValueError):
        hall.attracting_set(1, 2, 3)


@pytest.mark.parametrize("chi,k,b,expected", [
    ((0, 1), 1, 1, [((0, 1), 0, 1), ((1, 1), 1, 2)]),
    ((0, 0), 1, 0, [((0, 0), 0, 2)]),
    ((0, 1), 1, 2, [((0, 1), 0, 1), ((1, 1), 1, 4), ((1, 2), 2, 1)]),
])
def test_bwb_examples(chi, k, b, expected):
    assert hall.bwb_terms(chi, k, b, len(chi)) == [HallTerm(*t) for t in expected]


def _levi_dominant(d_max=3, top=2):
    for d in range(d_max + 1):
        for k in range(d + 1):
            for head in itertools.combinations_with_replacement(range(-1, top + 1), k):
                for tail in itertools.combinations_with_replacement(range(0, top + 1), d - k):
                    yield head + tail, k


@pytest.mark.parametrize("b", range(3))
def test_bwb_against_labelled_subsets(b):
    for chi, k in _levi_dominant():
        got = Counter({(t.weight, t.shift): t.multiplicity for t in hall.bwb_terms(chi, k, b, len(chi))})
        assert got == oracles.hall_terms_by_subsets(chi, k, b), (chi, k, b)


def test_bwb_rejects_non_levi_dominant():
    with pytest.raises(ValueError):
        hall.bwb_terms((0, 2, 1), 1, 1, 3)
    with pytest.raises(ValueError):
        hall.bwb_terms((0, 1), 1, 1, 3)


@pytest.mark.parametrize("chi,k,c,b,d", [((1,), 1, 2, 1, 2), ((1,), 1, 3, 2, 2), ((1, 2), 0, 3, 1, 2)])
def test_verify_leading_examples(chi, k, c, b, d):
    rep = hall.verify_leading(chi, k, c, b, d)
    assert rep.passed, rep.failures
    if k == 0:
        assert rep.terms == [HallTerm(tuple(chi), 0, 1)]


def test_verify_leading_companion_terms():
    rep = hall.verify_leading((1,), 1, 3, 2, 2)
    others = [t for t in rep.terms if t.weight != (0, 1)]
    assert all(lattice.stratum_index(t.weight) == 0 and lattice.in_window(t.weight, 3) for t in others)


@pytest.mark.parametrize("args", [((0,), 1, 2, 1, 2), ((2,), 1, 2, 1, 2), ((1,), 1, 1, 1, 2), ((1,), 3, 2, 1, 2)])
def test_verify_leading_rejects_bad_input(args):
    with pytest.raises(ValueError):
        hall.verify_leading(*args)


@pytest.mark.parametrize("b,c", [(b, c) for b in range(3) for c in range(b + 1, 5)])
def test_verify_leading_wide_range(b, c):
    for d in range(5):
        for k in range(d + 1):
            for inner in lattice.iter_window(c - 1, d - k):
                chi = tuple(x + 1 for x in inner)
                assert hall.verify_leading(chi, k, c, b, d).passed


@pytest.mark.parametrize("chi,expected", [
    ((0, 1), X(1, 0) + X(0, 1)),
    ((1, 1), X(1, 1)),
    ((0, 2), X(2, 0) + X(1, 1) + X(0, 2)),
    ((-1, 0), X(-1, 0) + X(0, -1)),
])
def test_schur_examples(chi, expected):
    assert hall.schur(chi) == expected


@pytest.mark.parametrize("d", range(0, 5))
def test_schur_dimension_and_symmetry(d):
    for chi in itertools.combinations_with_replacement(range(4), d):
        s = hall.schur(chi)
        assert s.at_ones() == oracles.weyl_dimension(chi)
        assert s.is_symmetric()
        top = max(s.terms, key=lambda e: e[::-1]) if s.terms else ()
        assert tuple(sorted(top)) == chi


def test_shuffle_examples():
    one = SymLaurent.one(1)
    x2 = X(1)
    assert hall.kclass_shuffle(one, x2, 1) == X(1, 0) + X(0, 1) - X(1, 1, coeff=2)
    assert hall.kclass_shuffle(one, one, 0) == 2
    expected = X(1, 0) + X(0, 1) - X(1, 1, coeff=4) + X(2, 1) + X(1, 2)
    assert hall.kclass_shuffle(one, x2, 2) == expected


@pytest.mark.parametrize("chi,k,b,expected", [
    ((0, 1), 1, 1, X(1, 0) + X(0, 1) - X(1, 1, coeff=2)),
    ((0, 0), 1, 0, SymLaurent.one(2) * 2),
    ((0, 1), 1, 2, X(1, 0) + X(0, 1) - X(1, 1, coeff=4) + X(2, 1) + X(1, 2)),
])
def test_kclass_bwb_examples(chi, k, b, expected):
    assert hall.kclass_bwb(chi, k, b, 2) == expected


@pytest.mark.parametrize("b", range(3))
def test_kclass_routes_agree_with_nonzero_first_block(b):
    for chi, k in _levi_dominant(d_max=3, top=2):
        lhs = hall.kclass_bwb(chi, k, b, len(chi))
        rhs = hall.kclass_shuffle(hall.schur(chi[:k]), hall.schur(chi[k:]), b)
        assert lhs == rhs, (chi, k, b)


blocks = st.integers(0, 2).flatmap(
    lambda n: st.lists(st.integers(-1, 2), min_size=n, max_size=n).map(lambda v: tuple(sorted(v))))


@settings(max_examples=40, deadline=None)
@given(blocks, blocks, st.integers(0, 2))
def test_shuffle_twist_compatibility(f_chi, g_chi, b):
    f, g = hall.schur(f_chi), hall.schur(g_chi)
    twisted = hall.kclass_shuffle(f.times_det(), g.times_det(), b)
    assert twisted == hall.kclass_shuffle(f, g, b).times_det()


@settings(max_examples=40, deadline=None)
@given(blocks, blocks, blocks, st.integers(0, 2))
def test_shuffle_module_associativity(f_chi, g_chi, h_chi, b):
    f, g, h = hall.schur(f_chi), hall.schur(g_chi), hall.schur(h_chi)
    left = hall.kclass_shuffle(hall.kclass_shuffle(f, g, 0), h, b)
    right = hall.kclass_shuffle(f, hall.kclass_shuffle(g, h, b), b)
    assert left == right


def test_semiorthogonality_example():
    rep = hall.semiorthogonality_report(2, 1, 2, 2)
    assert rep.passed
    assert lattice.min_orbit_pairing((0, 1), (1, 1)) == 1
    assert all(ch.source != ch.target for ch in rep.checks)
    assert {(ch.source, ch.target) for ch in rep.checks} == {((0,), (1,)), ((0,), (2,)), ((1,), (2,))}


def _source_weights_oracle(c, b, n, k):
    """Weights of the Hall products O_{M(k)} * V(chi) over chi in B_{c,0}(n-k)."""
    for inner in itertools.combinations_with_replacement(range(1, c), n - k):
        chi = (0,) * k + inner
        for weight, _ in oracles.hall_terms_by_subsets(chi, k, b):
            yield weight


@pytest.mark.parametrize("a", range(1, 4))
def test_semiorthogonality_against_orbit_oracle(a):
    for b in range(a):
        for d in range(4):
            rep = hall.semiorthogonality_report(a, b, a, d)
            assert rep.passed
            for ch in rep.checks:
                n = d - sum(ch.target[: ch.depth])
                lam = (1,) * ch.k_prime + (0,) * (n - ch.k_prime)
                values = [p for w in _source_weights_oracle(a - ch.depth, b, n, ch.k) for p in oracles.orbit_pairings(w, lam)]
                expected = min(values) if values else None
                assert ch.min_source_pairing == expected
