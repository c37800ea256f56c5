"""Index tables of the semiorthogonal decompositions of window categories.

Summands of ``W_c(d)`` are indexed by ``d_. in Z_{>=0}^l`` with ``l = c - b``
and listed in decomposition order: ``Hom`` from a later summand to an earlier
one vanishes, so indices appear lexicographically *descending*.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, prod
from typing import Sequence

from .lattice import bounded_tuples, compositions, window_size


@dataclass(frozen=True)
class Summand:
    index: tuple[int, ...]
    residual: int
    generator_count: int
    label: str
    refinements: tuple = ()


@dataclass
class SodTable:
    params: dict
    summands: list[Summand] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(s.generator_count for s in self.summands)


def _chi0(power: int) -> str:
    return "chi0" if power == 1 else f"chi0^{power}"


def summand_label(index: Sequence[int], residual: int, b: int) -> str:
    """Render ``W(d_1) * (W(d_2) x chi0) * ... * (W_b(m) x chi0^l)``."""
    pieces = [f"W({di})" if i == 0 else f"(W({di}) x {_chi0(i)})" for i, di in enumerate(index)]
    l = len(index)
    pieces.append(f"W_{b}({residual})" if l == 0 else f"(W_{b}({residual}) x {_chi0(l)})")
    return " * ".join(pieces)


def sod_table(a: int, b: int, c: int, d: int, prune_empty: bool = False) -> SodTable:
    """Summands ``W(d_1) * (W(d_2) x chi_0) * ... * (W_b(m) x chi_0^l)`` of ``W_c(d)``."""
    if c <= b:
        raise ValueError(f"need c > b, got c={c}, b={b}")
    if b < 0 or a < b:
        raise ValueError(f"need a >= b >= 0, got a={a}, b={b}")
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    table = SodTable({"a": a, "b": b, "c": c, "d": d})
    for index in bounded_tuples(c - b, d):
        m = d - sum(index)
        count = window_size(b, m)
        if prune_empty and count == 0:
            continue
        table.summands.append(Summand(index, m, count, summand_label(index, m, b)))
    return table


def sod_table_multi(a: int, b: int, dims: Sequence[int], prune_empty: bool = False) -> SodTable:
    """Summands of ``W_a`` on a product of loop vertices, grouped by ``|d_i^(*)|``."""
    dims = tuple(dims)
    if not dims or any(x < 0 for x in dims):
        raise ValueError(f"dims must be a nonempty list of nonnegative ints, got {dims}")
    if a <= b or b < 0:
        raise ValueError(f"need a > b >= 0, got a={a}, b={b}")
    length = a - b
    total = sum(dims)
    table = SodTable({"a": a, "b": b, "c": a, "dims": list(dims)})
    # per-vertex summand indices, grouped by their sum over vertices
    per_vertex = [list(bounded_tuples(length, dj)) for dj in dims]
    groups: dict[tuple[int, ...], list] = {}
    for choice in itertools.product(*per_vertex):
        index = tuple(sum(col) for col in zip(*choice)) if length else ()
        groups.setdefault(index, []).append(choice)
    for index in bounded_tuples(length, total):
        refinements = []
        count = 0
        for choice in groups.get(index, []):
            weight = prod(window_size(b, dj - sum(v)) for dj, v in zip(dims, choice))
            count += weight
            # refinement (d_1^(*), ..., d_l^(*)): transpose of the per-vertex choice
            refinements.append((tuple(zip(*choice)), weight))
        if prune_empty and count == 0:
            continue
        m = total - sum(index)
        table.summands.append(
            Summand(index, m, count, summand_label(index, m, b), tuple(refinements))
        )
    return table


def multi_total(a: int, dims: Sequence[int]) -> int:
    return prod(comb(a + dj - 1, dj) if dj else 1 for dj in dims)


@dataclass(frozen=True)
class QuotSummand:
    parts: tuple[int, ...]
    label: str
    exceptional_count: int | None


def quot_curve_table(r: int, d: int, genus: int = 0) -> list[QuotSummand]:
    """Summands ``D^b(Sym^{d_1} C x ... x Sym^{d_r} C)`` of ``D^b(Quot_C(E, d))``.

    For a rational curve each summand also carries its number of exceptional
    objects, ``prod (d_i + 1)``.
    """
    if r < 1:
        raise ValueError(f"rank must be positive, got r={r}")
    if genus < 0 or d < 0:
        raise ValueError("genus and d must be nonnegative")
    out = []
    for parts in compositions(d, r):
        label = " x ".join(f"Sym^{p}(C)" for p in parts)
        out.append(QuotSummand(parts, label, prod(p + 1 for p in parts) if genus == 0 else None))
    return out


def exceptional_count_p1(r: int, d: int) -> tuple[int, int, bool]:
    """Both sides of ``sum_{d_1+...+d_r=d} prod (d_i+1) = binom(2r+d-1, d)``."""
    if r < 1:
        raise ValueError(f"rank must be positive, got r={r}")
    lhs = sum(prod(p + 1 for p in parts) for parts in compositions(d, r))
    rhs = comb(2 * r + d - 1, d)
    return lhs, rhs, lhs == rhs
