"""Small finite fields as lookup tables, with batched Gaussian elimination.

Elements of GF(p^n) are encoded as ints ``0..q-1`` whose base-p digits are the
coefficients of a polynomial reduced modulo a fixed irreducible of degree n.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"field order must be a prime power, got {q}")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    n, rest = 0, q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise ValueError(f"field order must be a prime power, got {q}")
    return p, n


def _poly_mulmod(x: list[int], y: list[int], modulus: list[int], p: int) -> list[int]:
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            prod[i + j] = (prod[i + j] + a * b) % p
    for deg in range(len(prod) - 1, n - 1, -1):
        coef = prod[deg]
        if coef:
            for t in range(n + 1):
                prod[deg - n + t] = (prod[deg - n + t] - coef * modulus[t]) % p
    return prod[:n]


def _is_irreducible(modulus: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree <= n/2
    n = len(modulus) - 1
    for deg in range(1, n // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=deg):
            divisor = list(coeffs) + [1]
            rem = list(modulus)
            for shift in range(n - deg, -1, -1):
                coef = rem[shift + deg]
                if coef:
                    for t in range(deg + 1):
                        rem[shift + t] = (rem[shift + t] - coef * divisor[t]) % p
            if not any(rem):
                return False
    return True


class GF:
    """The field with ``q`` elements, backed by ``q x q`` numpy tables."""

    def __init__(self, q: int):
        p, n = _factor_prime_power(q)
        self.q, self.p, self.n = q, p, n
        self.prime = n == 1
        if self.prime:
            idx = np.arange(q)
            self.add_t = (idx[:, None] + idx[None, :]) % q
            self.mul_t = (idx[:, None] * idx[None, :]) % q
        else:
            modulus = next(
                list(c) + [1]
                for c in itertools.product(range(p), repeat=n)
                if c[0] != 0 and _is_irreducible(list(c) + [1], p)
            )
            digits = [[(e // p**i) % p for i in range(n)] for e in range(q)]
            encode = lambda poly: sum(c * p**i for i, c in enumerate(poly))
            self.add_t = np.array(
                [[encode([(x + y) % p for x, y in zip(digits[u], digits[v])]) for v in range(q)] for u in range(q)]
            )
            self.mul_t = np.array(
                [[encode(_poly_mulmod(digits[u], digits[v], modulus, p)) for v in range(q)] for u in range(q)]
            )
        self.neg_t = np.array([int(np.nonzero(self.add_t[x] == 0)[0][0]) for x in range(q)])
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            inv[x] = int(np.nonzero(self.mul_t[x] == 1)[0][0])
        self.inv_t = inv

    def add(self, x, y):
        return (x + y) % self.q if self.prime else self.add_t[x, y]

    def mul(self, x, y):
        return (x * y) % self.q if self.prime else self.mul_t[x, y]

    def sub(self, x, y):
        return (x - y) % self.q if self.prime else self.add_t[x, self.neg_t[y]]

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Batched product of ``(B, m, t)`` and ``(B, t, n)`` arrays."""
        if self.prime:
            return np.einsum("bij,bjk->bik", left, right) % self.q
        out = np.zeros(left.shape[:2] + right.shape[2:], dtype=np.int64)
        for t in range(left.shape[2]):
            out = self.add(out, self.mul(left[:, :, t, None], right[:, t, None, :]))
        return out

    def batch_rank(self, mats: np.ndarray) -> np.ndarray:
        """Row rank of each matrix in a ``(B, rows, cols)`` stack."""
        m = np.array(mats, dtype=np.int64, copy=True)
        batch, rows, cols = m.shape
        rank = np.zeros(batch, dtype=np.int64)
        used = np.zeros((batch, rows), dtype=bool)
        for col in range(cols):
            cand = (m[:, :, col] != 0) & ~used
            has = np.nonzero(cand.any(axis=1))[0]
            if has.size == 0:
                continue
            piv = np.argmax(cand[has], axis=1)
            sub = m[has]
            prow = sub[np.arange(has.size), piv]
            prow = self.mul(self.inv_t[prow[:, col]][:, None], prow)
            factors = sub[:, :, col]
            sub = self.sub(sub, self.mul(factors[:, :, None], prow[:, None, :]))
            sub[np.arange(has.size), piv] = prow
            m[has] = sub
            used[has, piv] = True
            rank[has] += 1
        return rank


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def gl_order(d: int, q: int) -> int:
    """``|GL_d(F_q)| = prod_{i<d} (q^d - q^i)``."""
    out = 1
    for i in range(d):
        out *= q**d - q**i
    return out
