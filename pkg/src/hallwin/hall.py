"""Categorified Hall products at the level of weights and K-classes.

For the one-parameter subgroup ``lambda = (t^k, 1^(d-k))`` the Hall product
``O_{M_Q(k)} * (V(chi) x O)`` is a successive extension of objects
``V((chi - sigma_I)^+) x O [#I - l(I)]`` with ``I`` running over sub-multisets
of the lambda-negative weights of ``Hom(A, V) + Hom(V, B) + End(V)``.  This
module enumerates those terms, sums them into K-classes, and checks the
result against an independent shuffle formula.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .lattice import (
    Weight,
    bounded_tuples,
    embed_window,
    in_window,
    is_dominant,
    iter_window,
    lex_succ,
    max_orbit_pairing,
    min_orbit_pairing,
    normalize_dotted,
    stratum_index,
)
from .laurent import SymLaurent


@dataclass(frozen=True, order=True)
class HallTerm:
    weight: Weight
    shift: int
    multiplicity: int


def attracting_set(b: int, d: int, k: int) -> Counter:
    """Weights of ``Y_{a,b}(d)`` pairing negatively with ``(t^k, 1^(d-k))``.

    ``-e_j`` (``b`` copies each) for ``j <= k`` and ``e_i - e_j`` for
    ``j <= k < i``.  Weights are returned as length-d tuples, 0-indexed.
    """
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k}, d={d}")
    out: Counter = Counter()
    for j in range(k):
        if b:
            out[tuple(-1 if t == j else 0 for t in range(d))] += b
    for j in range(k):
        for i in range(k, d):
            out[tuple(1 if t == i else -1 if t == j else 0 for t in range(d))] += 1
    return out


def _check_levi_dominant(chi: Sequence[int], k: int):
    if not (is_dominant(chi[:k]) and is_dominant(chi[k:])):
        raise ValueError(f"{tuple(chi)} is not dominant for GL({k}) x GL({len(chi) - k})")


@lru_cache(maxsize=None)
def _bwb_terms_cached(chi: Weight, k: int, b: int) -> tuple[HallTerm, ...]:
    d = len(chi)
    cross = [(i, j) for j in range(k) for i in range(k, d)]
    acc: Counter = Counter()
    for s in itertools.product(range(b + 1), repeat=k):
        mult = 1
        for sj in s:
            mult *= comb(b, sj)
        for s_cross in itertools.product((0, 1), repeat=len(cross)):
            # chi - sigma_I
            v = list(chi)
            for j, sj in enumerate(s):
                v[j] += sj
            for (i, j), sij in zip(cross, s_cross):
                if sij:
                    v[j] += 1
                    v[i] -= 1
            norm = normalize_dotted(v)
            if norm is None:
                continue
            size = sum(s) + sum(s_cross)
            acc[(norm.dominant, size - norm.inversions)] += mult
    return tuple(sorted(HallTerm(w, sh, m) for (w, sh), m in acc.items()))


def bwb_terms(chi: Sequence[int], k: int, b: int, d: int) -> list[HallTerm]:
    """Borel-Weil-Bott terms of ``V_{GL(k) x GL(d-k)}(chi) * O`` pushed to GL(d).

    ``chi`` has length ``d`` and is dominant on each Levi block; the usual
    input is a window weight with its first ``k`` entries zero.  Equal
    ``(weight, shift)`` pairs are merged, and multiplicities count the ways of
    picking ``s_j`` of the ``b`` identical copies of ``-e_j``.
    """
    chi = tuple(chi)
    if len(chi) != d:
        raise ValueError(f"weight {chi} does not have length d={d}")
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k}, d={d}")
    if b < 0:
        raise ValueError(f"b must be nonnegative, got {b}")
    _check_levi_dominant(chi, k)
    return list(_bwb_terms_cached(chi, k, b))


@dataclass
class LeadingReport:
    chi: Weight
    k: int
    c: int
    b: int
    d: int
    terms: list[HallTerm]
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_leading(chi: Sequence[int], k: int, c: int, b: int, d: int) -> LeadingReport:
    """Check that ``O_{M_Q(k)} * V(chi)`` has ``V(chi)`` exactly once, rest in lower strata.

    ``chi`` is taken from ``B_{c,0}(d-k)``.  Bad input raises ``ValueError``;
    failed checks are collected in the returned report.
    """
    chi = tuple(chi)
    if c <= b:
        raise ValueError(f"need c > b, got c={c}, b={b}")
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k}, d={d}")
    if len(chi) != d - k or not in_window(chi, c) or any(x < 1 for x in chi):
        raise ValueError(f"{chi} is not in B_{{{c},0}}({d - k})")
    lead = embed_window(chi, d)
    terms = bwb_terms(lead, k, b, d)
    report = LeadingReport(chi, k, c, b, d, terms)
    lead_terms = [t for t in terms if t.weight == lead]
    if len(lead_terms) != 1 or lead_terms[0].shift != 0 or lead_terms[0].multiplicity != 1:
        report.failures.append(f"leading weight {lead} occurs as {lead_terms}")
    for t in terms:
        if not in_window(t.weight, c):
            report.failures.append(f"{t.weight} is outside B_{c}({d})")
        elif t.weight != lead and stratum_index(t.weight) >= k and k > 0:
            report.failures.append(f"{t.weight} lies in stratum {stratum_index(t.weight)} >= {k}")
        elif t.weight != lead and k == 0:
            report.failures.append(f"unexpected term {t} for k=0")
    return report


@lru_cache(maxsize=None)
def _ssyt_contents(shape: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    cells = [(r, col) for r, length in enumerate(shape) for col in range(length)]
    counts: Counter = Counter()
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int, content: list[int]):
        if idx == len(cells):
            counts[tuple(content)] += 1
            return
        r, col = cells[idx]
        lo = 1
        if col > 0:
            lo = max(lo, filling[(r, col - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, col)] + 1)
        for v in range(lo, n + 1):
            filling[(r, col)] = v
            content[v - 1] += 1
            fill(idx + 1, content)
            content[v - 1] -= 1

    if len(shape) <= n:
        fill(0, [0] * n)
    return tuple(counts.items())


def schur(chi: Sequence[int], d: int | None = None) -> SymLaurent:
    """Character of ``V(chi)`` for an ascending weight, via semistandard tableaux.

    The weight is first twisted by a power of the determinant to make it a
    partition; the twist is undone on the result.
    """
    chi = tuple(chi)
    d = len(chi) if d is None else d
    if len(chi) != d:
        raise ValueError(f"weight {chi} does not have length d={d}")
    if not is_dominant(chi):
        raise ValueError(f"{chi} is not dominant")
    if d == 0:
        return SymLaurent.one(0)
    low = chi[0]
    shape = tuple(x - low for x in reversed(chi) if x - low > 0)
    return SymLaurent(d, _ssyt_contents(shape, d)).times_det(low)


def _shuffles(d1: int, d: int):
    for block in itertools.combinations(range(d), d1):
        rest = [i for i in range(d) if i not in block]
        yield list(block) + rest


def kclass_shuffle(f: SymLaurent, g: SymLaurent, b: int) -> SymLaurent:
    """Shuffle product ``sum_w w[f(x_A) g(x_B) prod_{j in A} (1 - x_j)^b]``.

    ``w`` runs over the ``(d1, d2)`` shuffles, ``f`` lives on the first
    ``d1`` variables and ``g`` on the remaining ones.
    """
    d1, d = f.nvars, f.nvars + g.nvars
    kernel = SymLaurent.one(d1)
    for j in range(d1):
        x_j = SymLaurent.monomial(tuple(1 if t == j else 0 for t in range(d1)))
        kernel = kernel * (SymLaurent.one(d1) - x_j) ** b
    base = (f * kernel).concat(g)
    out = SymLaurent(d)
    for perm in _shuffles(d1, d):
        out = out + base.permute(perm)
    return out


def kclass_bwb(chi: Sequence[int], k: int, b: int, d: int) -> SymLaurent:
    """Alternating sum of the Borel-Weil-Bott terms."""
    out = SymLaurent(d)
    for t in bwb_terms(chi, k, b, d):
        sign = -1 if t.shift % 2 else 1
        out = out + schur(t.weight, d) * (sign * t.multiplicity)
    return out


@dataclass
class PairCheck:
    """Weight test behind ``Hom(C(source), C(target)) = 0``.

    At the first index ``depth`` where the two summand indices differ, the
    source object is a Hall product along ``(t^k, 1^(n-k))`` and the target one
    along ``lambda' = (t^k', 1^(n-k'))`` with ``k < k'``.  Every weight of the
    source pairs positively with ``lambda'`` while the target's
    ``lambda'``-fixed block has weight zero.
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    depth: int
    k: int
    k_prime: int
    generator_pairs: int
    min_source_pairing: int | None
    target_pairing: tuple[int, int] | None

    @property
    def passed(self) -> bool:
        src_ok = self.min_source_pairing is None or self.min_source_pairing > 0
        tgt_ok = self.target_pairing is None or self.target_pairing == (0, 0)
        return src_ok and tgt_ok


@dataclass
class SemiorthogonalityReport:
    a: int
    b: int
    c: int
    d: int
    checks: list[PairCheck]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def failures(self) -> list[PairCheck]:
        return [ch for ch in self.checks if not ch.passed]


@lru_cache(maxsize=None)
def _source_min_pairing(c: int, b: int, n: int, k: int, k_prime: int) -> tuple[int, int | None]:
    lam = (1,) * k_prime + (0,) * (n - k_prime)
    count, best = 0, None
    for inner in iter_window(c - 1, n - k):
        chi = embed_window(tuple(x + 1 for x in inner), n)
        count += 1
        for t in bwb_terms(chi, k, b, n):
            p = min_orbit_pairing(t.weight, lam)
            best = p if best is None else min(best, p)
    return count, best


@lru_cache(maxsize=None)
def _target_pairing(c: int, n: int, k_prime: int) -> tuple[int, tuple[int, int] | None]:
    # q_{lambda'}^* (O_{M_Q(k')} x V(chi')): only the second Levi block carries weight
    count, lo, hi = 0, None, None
    fixed, ones = (0,) * k_prime, (1,) * k_prime
    for _ in iter_window(c - 1, n - k_prime):
        count += 1
        p_lo, p_hi = min_orbit_pairing(fixed, ones), max_orbit_pairing(fixed, ones)
        lo = p_lo if lo is None else min(lo, p_lo)
        hi = p_hi if hi is None else max(hi, p_hi)
    return count, None if lo is None else (lo, hi)


def semiorthogonality_report(a: int, b: int, c: int, d: int) -> SemiorthogonalityReport:
    """Run the Hom-vanishing weight test on every ordered pair of summands."""
    if c <= b:
        raise ValueError(f"need c > b, got c={c}, b={b}")
    if b < 0 or d < 0:
        raise ValueError("b and d must be nonnegative")
    length = c - b
    indices = list(bounded_tuples(length, d))
    checks = []
    for src in indices:
        for tgt in indices:
            if not lex_succ(src, tgt):
                continue
            depth = next(m for m in range(length) if src[m] != tgt[m])
            n = d - sum(tgt[:depth])
            c_here = c - depth
            k, k_prime = src[depth], tgt[depth]
            n_src, min_src = _source_min_pairing(c_here, b, n, k, k_prime)
            n_tgt, tgt_pair = _target_pairing(c_here, n, k_prime)
            checks.append(PairCheck(src, tgt, depth, k, k_prime, n_src * n_tgt, min_src, tgt_pair))
    return SemiorthogonalityReport(a, b, c, d, checks)
