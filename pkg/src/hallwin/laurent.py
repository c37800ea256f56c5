"""Integer Laurent polynomials in x_1..x_n, used as GL(n) K-classes."""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterable, Mapping, Sequence


class SymLaurent:
    """Finitely supported map from exponent vectors to nonzero integer coefficients.

    Nothing forces symmetry at construction time; ``is_symmetric`` checks it.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | Iterable = ()):
        self.nvars = nvars
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            acc[exp] += coeff
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def one(cls, nvars: int) -> "SymLaurent":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "SymLaurent":
        return cls(len(exp), {tuple(exp): coeff})

    def __add__(self, other: "SymLaurent") -> "SymLaurent":
        self._check(other)
        return SymLaurent(self.nvars, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "SymLaurent":
        return SymLaurent(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymLaurent") -> "SymLaurent":
        return self + (-other)

    def __mul__(self, other) -> "SymLaurent":
        if isinstance(other, int):
            return SymLaurent(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
        return SymLaurent(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SymLaurent":
        out = SymLaurent.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SymLaurent.one(self.nvars) * other
        if not isinstance(other, SymLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def concat(self, other: "SymLaurent") -> "SymLaurent":
        """Product of ``self(x_1..x_n)`` and ``other(x_{n+1}..x_{n+m})``."""
        return SymLaurent(
            self.nvars + other.nvars,
            ((e1 + e2, c1 * c2) for e1, c1 in self.terms.items() for e2, c2 in other.terms.items()),
        )

    def permute(self, perm: Sequence[int]) -> "SymLaurent":
        """Send variable ``x_i`` to ``x_{perm[i]}``."""
        out = {}
        for exp, coeff in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            out[tuple(new)] = coeff
        return SymLaurent(self.nvars, out)

    def is_symmetric(self) -> bool:
        return all(
            self.terms.get(p) == c for e, c in self.terms.items() for p in set(itertools.permutations(e))
        )

    def times_det(self, power: int = 1) -> "SymLaurent":
        return SymLaurent(self.nvars, {tuple(x + power for x in e): c for e, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for exp, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, exp):
                term = term * x**e
            total = total + term
        return total

    def at_ones(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        return f"SymLaurent({self.nvars}, {self.to_string()!r})"

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            coeff = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e != 0
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list:
        return [[list(e), c] for e, c in sorted(self.terms.items())]
