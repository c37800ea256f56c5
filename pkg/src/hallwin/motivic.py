"""Grothendieck-ring expressions for Quot schemes and finite-field point counts."""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .finite_field import field, gl_order
from .lattice import compositions

DEFAULT_MAX_ENUM = 10**7
CHUNK = 1 << 16


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CurveZeta:
    """Numerator ``P(t)`` of the zeta function of a smooth projective curve over F_q."""

    q: int
    numerator: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        if not self.numerator or self.numerator[0] != 1:
            raise ValueError("zeta numerator must satisfy P(0) = 1")
        if len(self.numerator) % 2 != 1:
            raise ValueError("zeta numerator must have even degree 2g")

    @property
    def genus(self) -> int:
        return (len(self.numerator) - 1) // 2


def sym_point_count(zeta: CurveZeta, d: int) -> int:
    """``#Sym^d(C)(F_q)``: coefficient of ``t^d`` in ``P(t) / ((1-t)(1-qt))``."""
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    # 1/((1-t)(1-qt)) = sum_n (1 + q + ... + q^n) t^n
    partial = [0] * (d + 1)
    acc = 0
    for n in range(d + 1):
        acc += zeta.q**n
        partial[n] = acc
    count = sum(c * partial[d - i] for i, c in enumerate(zeta.numerator) if i <= d)
    if count < 0:
        raise ValueError(f"negative point count {count}: invalid zeta numerator {zeta.numerator}")
    return count


class MotivicExpr:
    """Integer combination of monomials ``q^e * Sym_{k_1} * ... * Sym_{k_n}``.

    Keys are ``(e, ks)`` with ``ks`` a sorted tuple of positive integers;
    ``Sym_0`` is the unit and is dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (e, ks), coeff in items:
            if e < 0:
                raise ValueError("negative power of q")
            acc[(e, tuple(sorted(k for k in ks if k)))] += coeff
        self.terms = {key: c for key, c in acc.items() if c}

    @classmethod
    def monomial(cls, q_exp: int = 0, syms: Sequence[int] = (), coeff: int = 1) -> "MotivicExpr":
        return cls({(q_exp, tuple(syms)): coeff})

    def __add__(self, other: "MotivicExpr") -> "MotivicExpr":
        return MotivicExpr(list(self.terms.items()) + list(other.terms.items()))

    def __mul__(self, other: "MotivicExpr") -> "MotivicExpr":
        out = []
        for (e1, k1), c1 in self.terms.items():
            for (e2, k2), c2 in other.terms.items():
                out.append(((e1 + e2, k1 + k2), c1 * c2))
        return MotivicExpr(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, MotivicExpr) and self.terms == other.terms

    def specialize(self, q: int, sym_count: Callable[[int], int]) -> int:
        total = 0
        for (e, ks), coeff in self.terms.items():
            term = coeff * q**e
            for k in ks:
                term *= sym_count(k)
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e, ks), coeff in sorted(self.terms.items()):
            factors = []
            for k in sorted(set(ks)):
                mult = ks.count(k)
                factors.append(f"Sym{k}" + (f"^{mult}" if mult > 1 else ""))
            if e:
                factors.append("q" if e == 1 else f"q^{e}")
            body = "*".join(factors) or "1"
            parts.append(body if coeff == 1 else f"{coeff}*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def _twist_exponent(parts: Sequence[int]) -> int:
    # l_r = sum_i (i-1) d_i
    return sum(i * di for i, di in enumerate(parts))


def bfp_class(r: int, d: int) -> MotivicExpr:
    """Class of ``Quot_C(E, d)`` for ``rank E = r`` as a sum over compositions of d."""
    if r < 1:
        raise ValueError(f"rank must be positive, got r={r}")
    return MotivicExpr(
        ((_twist_exponent(parts), parts), 1) for parts in compositions(d, r)
    )


def quot_affine_formula(r: int, d: int) -> tuple[int, ...]:
    """Point-count polynomial of the Quot scheme of ``O^r`` on the affine line.

    Returned as coefficients ``(c_0, c_1, ...)`` of ``q^d * sum q^{l_r}``,
    i.e. the class above with every ``Sym^k`` replaced by ``A^k``.
    """
    if r < 1:
        raise ValueError(f"rank must be positive, got r={r}")
    coeffs: dict[int, int] = defaultdict(int)
    for parts in compositions(d, r):
        coeffs[d + _twist_exponent(parts)] += 1
    top = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(top + 1))


def eval_qpoly(coeffs: Sequence[int], q: int) -> int:
    return sum(c * q**i for i, c in enumerate(coeffs))


def format_qpoly(coeffs: Sequence[int]) -> str:
    """Render as ``q^m(...)`` with the lowest power of q pulled out, e.g. ``q(q+1)``."""
    nonzero = [i for i, c in enumerate(coeffs) if c]
    if not nonzero:
        return "0"
    low = nonzero[0]

    def qpow(e: int) -> str:
        return "" if e == 0 else "q" if e == 1 else f"q^{e}"

    inner_terms = []
    for i in sorted(nonzero, reverse=True):
        c, e = coeffs[i], i - low
        body = qpow(e)
        if not body:
            body = str(abs(c))
        elif abs(c) != 1:
            body = f"{abs(c)}{body}"
        inner_terms.append(("-" if c < 0 else "+", body))
    inner = ("-" if inner_terms[0][0] == "-" else "") + inner_terms[0][1]
    for sign, body in inner_terms[1:]:
        inner += f"{sign}{body}"
    if low == 0:
        return inner
    if inner == "1":
        return qpow(low)
    return f"{qpow(low)}({inner})"


@dataclass(frozen=True)
class StableCount:
    a: int
    b: int
    d: int
    q: int
    side: str
    raw: int
    gl_order: int

    @property
    def count(self) -> int:
        return self.raw // self.gl_order


def _cyclic_pairs_chunk(args) -> int:
    """Number of ``(alpha, gamma)`` in a slice of the enumeration generating ``F_q^d``."""
    q, a, d, start, stop = args
    F = field(q)
    idx = np.arange(start, stop, dtype=np.int64)
    n_digits = a * d + d * d
    digits = (idx[:, None] // (q ** np.arange(n_digits, dtype=np.int64))[None, :]) % q
    alpha = digits[:, : a * d].reshape(-1, d, a)
    gamma = digits[:, a * d :].reshape(-1, d, d)
    # Krylov matrix [alpha, gamma alpha, ..., gamma^{d-1} alpha]; higher powers are
    # redundant by Cayley-Hamilton
    blocks = [alpha]
    for _ in range(d - 1):
        blocks.append(F.matmul(gamma, blocks[-1]))
    krylov = np.concatenate(blocks, axis=2)
    return int(np.count_nonzero(F.batch_rank(krylov) == d))


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("HALLWIN_THREADS", "1")))
    except ValueError:
        return 1


def count_cyclic_pairs(q: int, a: int, d: int, workers: int | None = None) -> int:
    """Pairs ``(alpha in F_q^{d x a}, gamma in F_q^{d x d})`` whose Krylov span is all of F_q^d."""
    if d == 0:
        return 1
    if a == 0:
        return 0
    field(q)  # validates q
    total = q ** (a * d + d * d)
    tasks = [(q, a, d, s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    workers = _workers() if workers is None else workers
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_cyclic_pairs_chunk, tasks))
    return sum(_cyclic_pairs_chunk(t) for t in tasks)


def stable_count(a: int, b: int, d: int, q: int, side: str = "+", max_enum: int = DEFAULT_MAX_ENUM) -> StableCount:
    """Raw count of stable ``(alpha, beta, gamma)`` over F_q together with ``|GL_d(F_q)|``.

    Side ``+`` asks that the image of alpha generate ``V`` under gamma; side
    ``-`` is the same condition for ``(beta^T, gamma^T)``.  The arrows not
    involved in the condition contribute a free factor.
    """
    if side in ("plus", "+"):
        side, gen, free = "+", a, b
    elif side in ("minus", "-"):
        side, gen, free = "-", b, a
    else:
        raise ValueError(f"side must be '+' or '-', got {side!r}")
    if min(a, b, d) < 0:
        raise ValueError("a, b, d must be nonnegative")
    size = q ** ((a + b) * d + d * d)
    if size > max_enum:
        raise BudgetExceeded(f"enumeration of {size} tuples exceeds the budget of {max_enum}")
    raw = count_cyclic_pairs(q, gen, d) * q ** (free * d)
    order = gl_order(d, q)
    if raw % order:
        raise ArithmeticError(f"raw count {raw} is not divisible by |GL_{d}(F_{q})| = {order}")
    return StableCount(a, b, d, q, side, raw, order)


def brute_force_stable_count(a: int, b: int, d: int, q: int, side: str = "+", max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """Number of F_q-points of the GIT quotient ``G^{side}_{a,b}(d)`` by enumeration."""
    return stable_count(a, b, d, q, side, max_enum).count
