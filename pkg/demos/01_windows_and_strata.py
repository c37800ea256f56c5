"""Window weights, Kempf-Ness strata and which generators survive each window."""

from hallwin import lattice, strata
from hallwin.strata import QuiverSpec

# B_c(d): weakly ascending vectors with entries in [0, c-1], split by how many
# leading zeros they carry
ws = lattice.enumerate_window(3, 2)
for k, members in sorted(ws.strata.items()):
    print(f"B_3,{k}(2):", members)
print("size", len(ws), "= binom(4, 2)")

# dotted normalization: add (0, 1, ..., d-1), sort, subtract again
print(lattice.normalize_dotted((3, 1)))   # dominant (2, 2) after one swap
print(lattice.normalize_dotted((1, 0)))   # tie after the shift, so None

# strata of the framed one-loop quiver with 2 arrows in and 1 out, rank 3
spec = QuiverSpec.single(2, 1, 3)
for side in "+-":
    for s in strata.kn_strata(spec, side):
        iv = strata.window_interval(s, side)
        print(side, s.index, s.cochar, "slope^2 =", s.slope_sq, "eta =", s.eta, "window", tuple(iv))

# every weight of B_2(3) fits the plus window; pushing one entry to 2 breaks it
print(all(strata.generator_in_window(chi, spec, "+") for chi in lattice.iter_window(2, 3)))
print(strata.generator_in_window((0, 1, 2), spec, "+"))

# Young diagrams in a 2 x 2 box index the exceptional collection on Gr(4, 2)
print(lattice.kapranov_diagrams(4, 2))
