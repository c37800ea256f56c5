"""Kempf-Ness strata of the framed one-loop quiver stacks and window intervals.

The stack is ``[Hom(A, V) + Hom(V, B) + End(V) / GL(V)]`` with ``dim A = a``,
``dim B = b``, ``dim V = d``, linearized by ``chi_0`` (side ``+``) or its
inverse (side ``-``).  Several loop vertices sharing the framing vertex are
handled as a product over vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .lattice import Weight, chi0, max_orbit_pairing, min_orbit_pairing, pairing

PLUS = "+"
MINUS = "-"


def _side(side: str) -> str:
    aliases = {"+": PLUS, "plus": PLUS, "-": MINUS, "minus": MINUS}
    try:
        return aliases[side]
    except KeyError:
        raise ValueError(f"side must be '+' or '-', got {side!r}") from None


@dataclass(frozen=True)
class QuiverSpec:
    a: int
    b: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        if self.a < 0 or self.b < 0:
            raise ValueError(f"arrow counts must be nonnegative, got a={self.a}, b={self.b}")
        if not self.dims or any(x < 0 for x in self.dims):
            raise ValueError(f"dims must be a nonempty list of nonnegative ints, got {self.dims}")

    @classmethod
    def single(cls, a: int, b: int, d: int) -> "QuiverSpec":
        return cls(a, b, (d,))

    @property
    def r(self) -> int:
        return self.a - self.b

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def d(self) -> int:
        if len(self.dims) != 1:
            raise ValueError("d is only defined for a single loop vertex")
        return self.dims[0]


@dataclass(frozen=True)
class Stratum:
    """One KN stratum.

    ``decomps`` lists the per-vertex indices ``(i_1, ..., i_m)`` with
    ``sum = index``; ``cochars`` holds the matching one-parameter subgroups
    (exponent vectors, concatenated over vertices).
    """

    index: int
    side: str
    decomps: tuple[tuple[int, ...], ...]
    cochars: tuple[Weight, ...]
    slope_sq: int
    eta: int

    @property
    def cochar(self) -> Weight:
        if len(self.cochars) != 1:
            raise ValueError(f"stratum {self.index} has {len(self.cochars)} cocharacters")
        return self.cochars[0]


def kn_cochar(d: int, i: int, side: str) -> Weight:
    """``lambda_i^+ = (1^i, t^-1 ^(d-i))`` and ``lambda_i^- = (t^(d-i), 1^i)`` as exponents."""
    side = _side(side)
    if side == PLUS:
        return (0,) * i + (-1,) * (d - i)
    return (1,) * (d - i) + (0,) * i


def _slope_sq(cochar: Weight, side: str) -> int:
    # mu = -wt(l|_Z) / |lambda| with l = chi_0^{+-1}
    sign = 1 if side == PLUS else -1
    wt = sign * pairing(chi0(len(cochar)), cochar)
    norm_sq = sum(x * x for x in cochar)
    if wt >= 0 or (wt * wt) % norm_sq:
        raise ArithmeticError(f"unexpected slope data for cocharacter {cochar}")
    return wt * wt // norm_sq


def _eta(spec: QuiverSpec, rank_drop: int, side: str) -> int:
    return (spec.a if side == PLUS else spec.b) * rank_drop


def kn_strata(spec: QuiverSpec, side: str) -> list[Stratum]:
    """Strata ``S_0, ..., S_{d-1}`` of a single-vertex stack, unstable-most first."""
    side = _side(side)
    d = spec.d
    out = []
    for i in range(d):
        lam = kn_cochar(d, i, side)
        out.append(Stratum(i, side, ((i,),), (lam,), _slope_sq(lam, side), _eta(spec, d - i, side)))
    return out


def multi_strata(spec: QuiverSpec, side: str) -> list[Stratum]:
    """Strata ``S_0, ..., S_{|d|-1}`` of the product over loop vertices.

    Stratum ``i`` is the union of the products of per-vertex strata (or the
    stable locus, index ``d^(j)``) whose indices add up to ``i``.
    """
    side = _side(side)
    total = spec.total
    by_index: dict[int, list[tuple[int, ...]]] = {i: [] for i in range(total)}
    for decomp in itertools.product(*(range(dj + 1) for dj in spec.dims)):
        i = sum(decomp)
        if i < total:
            by_index[i].append(decomp)
    out = []
    for i in range(total):
        decomps = tuple(sorted(by_index[i], reverse=True))
        cochars = tuple(
            sum((kn_cochar(dj, ij, side) for dj, ij in zip(spec.dims, dec)), ())
            for dec in decomps
        )
        slopes = {_slope_sq(lam, side) for lam in cochars}
        assert len(slopes) == 1
        out.append(Stratum(i, side, decomps, cochars, slopes.pop(), _eta(spec, total - i, side)))
    return out


class Interval(NamedTuple):
    """Closed integer interval ``[lo, hi]``; empty when ``lo > hi``."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_range(self, lo: int, hi: int) -> bool:
        return not self.empty and self.lo <= lo and hi <= self.hi


def window_interval(stratum: Stratum, choice: str) -> Interval:
    """Allowed integral lambda-weights on the stratum center.

    The plus window takes ``m = -eta + eps``, leaving ``(-eta, 0]``; the minus
    window takes ``m = 0``, leaving ``[0, eta)``.
    """
    choice = _side(choice)
    eta = stratum.eta
    if eta <= 0:
        return Interval(0, -1)
    if choice == PLUS:
        return Interval(-eta + 1, 0)
    return Interval(0, eta - 1)


def generator_in_window(chi: Sequence[int], spec: QuiverSpec, choice: str) -> bool:
    """Whether ``V(chi) x O`` satisfies every stratum's window condition.

    The lambda-weights of ``V(chi)`` fill the range between the extreme
    pairings over the Weyl orbit of ``chi``.
    """
    choice = _side(choice)
    if len(chi) != spec.d:
        raise ValueError(f"weight {tuple(chi)} does not have length d={spec.d}")
    for stratum in kn_strata(spec, choice):
        lam = stratum.cochar
        lo, hi = min_orbit_pairing(chi, lam), max_orbit_pairing(chi, lam)
        if not window_interval(stratum, choice).contains_range(lo, hi):
            return False
    return True
