"""Weight-lattice combinatorics for GL(d).

Weights are plain tuples of ints.  The dominant chamber is the *ascending*
one, ``x_1 <= x_2 <= ... <= x_d``, and the Weyl vector is replaced by the
integral shift ``rho_tilde = (0, 1, ..., d-1)``, which differs from the
half-integral rho by a multiple of the all-ones weight and therefore gives
the same dotted-action normal forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional, Sequence

Weight = tuple[int, ...]


class Normalized(NamedTuple):
    """Regular outcome of the dotted Weyl action: dominant part and Weyl length."""

    dominant: Weight
    inversions: int


def rho_tilde(d: int) -> Weight:
    return tuple(range(d))


def chi0(d: int, t: int = 1) -> Weight:
    """The weight ``t * (1, ..., 1)`` of length d."""
    return (t,) * d


def is_dominant(chi: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(chi, chi[1:]))


def count_inversions(v: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(v)), 2) if v[i] > v[j])


def normalize_dotted(chi: Sequence[int]) -> Optional[Normalized]:
    """Bring ``chi`` into the dominant chamber under ``w * chi = w(chi + rho) - rho``.

    Returns ``None`` when ``chi + rho`` has a repeated entry (nontrivial
    stabilizer, so the Borel-Weil-Bott term vanishes).  Otherwise returns the
    dominant representative together with the length of the Weyl element that
    sorts ``chi + rho``.
    """
    shifted = [x + i for i, x in enumerate(chi)]
    if len(set(shifted)) != len(shifted):
        return None
    inv = count_inversions(shifted)
    shifted.sort()
    return Normalized(tuple(x - i for i, x in enumerate(shifted)), inv)


@dataclass
class WindowSet:
    """The window ``B_c(d)`` split into its strata ``B_{c,k}(d)``.

    Stratum ``k`` holds the weights with exactly ``k`` leading zeros
    (``x_1 = ... = x_k = 0 < x_{k+1}``); stratum ``d`` is ``{0}``.
    """

    c: int
    d: int
    strata: dict[int, list[Weight]] = field(default_factory=dict)

    def weights(self) -> list[Weight]:
        return sorted(w for ws in self.strata.values() for w in ws)

    def __len__(self) -> int:
        return sum(len(ws) for ws in self.strata.values())

    def __contains__(self, chi) -> bool:
        return in_window(chi, self.c) and len(chi) == self.d


def leading_zeros(chi: Sequence[int]) -> int:
    k = 0
    for x in chi:
        if x != 0:
            break
        k += 1
    return k


def stratum_index(chi: Sequence[int]) -> int:
    """Index k with ``chi in B_{c,k}(d)`` for a weight of the window."""
    return leading_zeros(chi)


def in_window(chi: Sequence[int], c: int) -> bool:
    return is_dominant(chi) and all(0 <= x <= c - 1 for x in chi)


def iter_window(c: int, d: int):
    """Weakly ascending vectors in ``[0, c-1]^d``, lexicographically ascending."""
    if c < 1:
        return iter(())
    return itertools.combinations_with_replacement(range(c), d)


def enumerate_window(c: int, d: int) -> WindowSet:
    if c < 1:
        raise ValueError(f"window width must be positive, got c={c}")
    if d < 0:
        raise ValueError(f"rank must be nonnegative, got d={d}")
    strata: dict[int, list[Weight]] = {k: [] for k in range(d + 1)}
    for chi in iter_window(c, d):
        strata[stratum_index(chi)].append(tuple(chi))
    return WindowSet(c, d, strata)


def window_size(c: int, d: int) -> int:
    """|B_c(d)| in closed form; ``B_0(0)`` is the single empty weight."""
    if d == 0:
        return 1
    if c <= 0:
        return 0
    return comb(c + d - 1, d)


def embed_window(chi: Sequence[int], d: int) -> Weight:
    """Pad a weight of ``B_c(d')`` with leading zeros to length ``d``."""
    if d < len(chi):
        raise ValueError(f"cannot embed a length-{len(chi)} weight into rank {d}")
    return (0,) * (d - len(chi)) + tuple(chi)


def kapranov_diagrams(r: int, d: int) -> list[Weight]:
    """Young diagrams in a ``d x (r-d)`` box as ascending length-d vectors."""
    if d < 0 or d > r:
        raise ValueError(f"need 0 <= d <= r, got r={r}, d={d}")
    return [tuple(x) for x in itertools.combinations_with_replacement(range(r - d + 1), d)]


def md_generators(d: int, delta_t) -> set[Weight]:
    """Generators of the magic window ``W_delta(d)`` for ``delta = t * chi_0``.

    The window is nonzero exactly for integral ``t`` and then is generated by
    the single character ``t * chi_0``.
    """
    t = Fraction(delta_t)
    if d == 0:
        # M_R = 0, so every delta is the zero weight
        return {()}
    if t.denominator != 1:
        return set()
    return {chi0(d, int(t))}


def min_orbit_pairing(chi: Sequence[int], lam: Sequence[int]) -> int:
    """Minimum of ``<lam, w chi>`` over permutations w (rearrangement inequality)."""
    if len(chi) != len(lam):
        raise ValueError("weight and cocharacter must have the same length")
    return sum(x * y for x, y in zip(sorted(lam), sorted(chi, reverse=True)))


def max_orbit_pairing(chi: Sequence[int], lam: Sequence[int]) -> int:
    if len(chi) != len(lam):
        raise ValueError("weight and cocharacter must have the same length")
    return sum(x * y for x, y in zip(sorted(lam), sorted(chi)))


def pairing(chi: Sequence[int], lam: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(chi, lam))


def format_weight(chi: Sequence[int]) -> str:
    return ",".join(str(x) for x in chi)


def parse_weight(text: str) -> Weight:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def bounded_tuples(length: int, total: int):
    """All ``d in Z_{>=0}^length`` with ``sum(d) <= total``, lexicographically descending."""
    if length == 0:
        yield ()
        return
    for first in range(total, -1, -1):
        for rest in bounded_tuples(length - 1, total - first):
            yield (first,) + rest


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def lex_succ(d_prime: Sequence[int], d: Sequence[int]) -> bool:
    """``d' > d`` in the summand order: at the first difference ``d_m > d'_m``."""
    for x_p, x in zip(d_prime, d):
        if x_p != x:
            return x > x_p
    return False
