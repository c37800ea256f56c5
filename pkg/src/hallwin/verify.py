"""Named verification suites: exact identities checked by enumeration.

Each suite yields ``Check`` rows; a suite passes when all of its rows pass.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, prod
from typing import Callable, Iterator

from . import hall, lattice, motivic, sod, strata
from .laurent import SymLaurent


@dataclass
class Check:
    suite: str
    name: str
    cases: int
    passed: bool
    detail: str = ""

    def row(self) -> dict:
        return {"suite": self.suite, "check": self.name, "cases": self.cases,
                "pass": "true" if self.passed else "false", "detail": self.detail}


def _brute_dotted(chi):
    """Scan all of S_d for the permutations that land ``chi`` in the dominant chamber."""
    d = len(chi)
    v = [x + i for i, x in enumerate(chi)]
    hits = []
    for perm in itertools.permutations(range(d)):
        image = [v[p] for p in perm]
        if all(image[i] < image[i + 1] for i in range(d - 1)):
            hits.append((tuple(x - i for i, x in enumerate(image)), lattice.count_inversions(perm)))
    return hits


def lattice_suite(max_d: int, seed: int = 0, samples: int = 2000) -> Iterator[Check]:
    top = min(max_d, 8)
    cases, ok = 0, True
    for c in range(1, 7):
        for d in range(top + 1):
            ws = lattice.enumerate_window(c, d)
            cases += 1
            ok &= len(ws) == comb(c + d - 1, d) == len(set(ws.weights()))
    yield Check("lattice", "window size = binom(c+d-1, d)", cases, ok)

    cases, ok = 0, True
    for r in range(11):
        for d in range(r + 1):
            cases += 1
            ok &= len(lattice.kapranov_diagrams(r, d)) == comb(r, d)
    yield Check("lattice", "kapranov count = binom(r, d)", cases, ok)

    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        d = rng.randint(1, min(max(max_d, 1), 6))
        chi = tuple(rng.randint(-3, 3) for _ in range(d))
        got = lattice.normalize_dotted(chi)
        hits = _brute_dotted(chi)
        if got is None:
            ok &= not hits
        else:
            ok &= hits == [tuple(got)]
    yield Check("lattice", "dotted normalization vs S_d scan", samples, ok)

    cases, ok = 0, True
    for d in range(1, min(max_d, 4) + 1):
        for chi in itertools.product(range(-1, 3), repeat=d):
            lam = tuple(rng.randint(-2, 2) for _ in range(d))
            orbit = [lattice.pairing(p, lam) for p in itertools.permutations(chi)]
            cases += 1
            ok &= lattice.min_orbit_pairing(chi, lam) == min(orbit)
            ok &= lattice.max_orbit_pairing(chi, lam) == max(orbit)
    yield Check("lattice", "orbit pairing extrema vs permutation scan", cases, ok)

    cases, ok = 0, True
    for a in range(1, 5):
        for b in range(a):
            for d in range(min(max_d, 4) + 1):
                spec = strata.QuiverSpec.single(a, b, d)
                for chi in lattice.iter_window(a, d):
                    cases += 1
                    ok &= strata.generator_in_window(chi, spec, "+")
                for chi in lattice.iter_window(b, d):
                    cases += 1
                    ok &= strata.generator_in_window(chi, spec, "-")
    yield Check("lattice", "window generators satisfy the KN weight bounds", cases, ok)


LEADING_PAIRS = ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))


def hall_suite(max_d: int) -> Iterator[Check]:
    cases, bad = 0, []
    for b, c in LEADING_PAIRS:
        for d in range(min(max_d, 4) + 1):
            for k in range(d + 1):
                for inner in lattice.iter_window(c - 1, d - k):
                    chi = tuple(x + 1 for x in inner)
                    cases += 1
                    rep = hall.verify_leading(chi, k, c, b, d)
                    if not rep.passed:
                        bad.append(f"{chi},k={k},b={b},c={c}")
    yield Check("hall", "leading term appears exactly once", cases, not bad, "; ".join(bad[:3]))

    cases, bad = 0, []
    for a in range(1, 4):
        for b in range(a):
            for d in range(min(max_d, 3) + 1):
                rep = hall.semiorthogonality_report(a, b, a, d)
                cases += len(rep.checks)
                if not rep.passed:
                    bad.append(f"a={a},b={b},d={d}")
    yield Check("hall", "semiorthogonality weight criterion", cases, not bad, "; ".join(bad[:3]))


def kclass_suite(max_d: int) -> Iterator[Check]:
    cases, bad = 0, []
    for b in range(3):
        for d in range(min(max_d, 3) + 1):
            for k in range(d + 1):
                for g in itertools.combinations_with_replacement(range(3), d - k):
                    chi = (0,) * k + g
                    cases += 1
                    lhs = hall.kclass_bwb(chi, k, b, d)
                    rhs = hall.kclass_shuffle(SymLaurent.one(k), hall.schur(g), b)
                    if lhs != rhs:
                        bad.append(f"{chi},k={k},b={b}")
    yield Check("kclass", "BWB expansion = shuffle formula", cases, not bad, "; ".join(bad[:3]))


def sod_suite(max_d: int) -> Iterator[Check]:
    top = min(max_d, 8)
    cases, ok = 0, True
    for c in range(1, 7):
        for b in range(c):
            l = c - b
            for d in range(top + 1):
                lhs = len(lattice.enumerate_window(c, d))
                rhs = 0
                for idx in lattice.bounded_tuples(l, d):
                    m = d - sum(idx)
                    rhs += len(lattice.enumerate_window(b, m)) if b else int(m == 0)
                cases += 1
                ok &= lhs == rhs == sod.sod_table(c, b, c, d).total
    yield Check("sod", "generator count of the decomposition", cases, ok)

    cases, ok = 0, True
    for r in range(1, 6):
        for d in range(top + 1):
            cases += 1
            ok &= sod.exceptional_count_p1(r, d)[2]
    yield Check("sod", "exceptional objects on Quot of P^1", cases, ok)

    cases, ok = 0, True
    for a in range(1, 4):
        for b in range(a):
            for dims in itertools.product(range(min(max_d, 3) + 1), repeat=2):
                cases += 1
                ok &= sod.sod_table_multi(a, b, dims).total == sod.multi_total(a, dims)
    yield Check("sod", "multi-vertex total = product of single-vertex totals", cases, ok)


def motivic_suite(max_d: int, max_enum: int = motivic.DEFAULT_MAX_ENUM) -> Iterator[Check]:
    cases, bad, indivisible = 0, [], []
    for q in (2, 3):
        for d in range(min(max_d, 3) + 1):
            for r in range(1, 14):
                if r * d + d * d > 13:
                    continue
                cases += 1
                try:
                    res = motivic.stable_count(r, 0, d, q, "+", max_enum)
                except ArithmeticError:
                    indivisible.append(f"r={r},d={d},q={q}")
                    continue
                if res.count != motivic.eval_qpoly(motivic.quot_affine_formula(r, d), q):
                    bad.append(f"r={r},d={d},q={q}")
    yield Check("motivic", "brute-force Quot count = affine formula", cases, not bad, "; ".join(bad[:3]))
    yield Check("motivic", "|GL_d(F_q)| divides raw counts", cases, not indivisible, "; ".join(indivisible[:3]))

    cases, ok = 0, True
    p1 = lambda q: (lambda k: motivic.sym_point_count(motivic.CurveZeta(q), k))
    for r in range(1, 5):
        for d in range(min(max_d, 5) + 1):
            for q in (2, 3, 5):
                expected = sum(
                    q ** sum(i * di for i, di in enumerate(parts))
                    * prod((q ** (di + 1) - 1) // (q - 1) for di in parts)
                    for parts in lattice.compositions(d, r)
                )
                cases += 1
                ok &= motivic.bfp_class(r, d).specialize(q, p1(q)) == expected
    yield Check("motivic", "genus-0 specialization of the Quot class", cases, ok)


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "lattice": lattice_suite,
    "hall": hall_suite,
    "kclass": kclass_suite,
    "sod": sod_suite,
    "motivic": motivic_suite,
}


def run_suite(name: str, max_d: int = 3, **kwargs) -> list[Check]:
    if name == "all":
        return [ch for key in SUITES for ch in run_suite(key, max_d, **kwargs)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    fn = SUITES[name]
    if name != "motivic":
        kwargs.pop("max_enum", None)
    return list(fn(max_d, **kwargs))
