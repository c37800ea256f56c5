"""Hall products at the level of weights: BWB terms against the shuffle formula."""

from hallwin import hall
from hallwin.laurent import SymLaurent

# O_{M(1)} * V((1)) on rank 2 with one outgoing arrow: resolve over the
# attracting weights and normalize each shifted weight
for t in hall.bwb_terms((0, 1), k=1, b=1, d=2):
    print(t)

# the leading weight (0, 1) appears once; the rest sits in lower strata
rep = hall.verify_leading((1,), k=1, c=2, b=1, d=2)
print("leading term check:", rep.passed)

# the same K-class two ways
bwb = hall.kclass_bwb((0, 1), 1, 2, 2)
shuffle = hall.kclass_shuffle(SymLaurent.one(1), hall.schur((1,)), 2)
print(bwb.to_string())
print("routes agree:", bwb == shuffle)

# Schur polynomials evaluate to dimensions at x = 1
for chi in [(0, 1), (0, 2), (0, 1, 2)]:
    print(chi, hall.schur(chi).to_string(), "dim", hall.schur(chi).at_ones())

# vanishing of Hom between summands, reduced to a pairing sign check
rep = hall.semiorthogonality_report(3, 1, 3, 3)
print(len(rep.checks), "ordered pairs checked, all positive:", rep.passed)
