"""Grothendieck-ring classes of Quot schemes and brute-force counts over F_q."""

from hallwin import motivic
from hallwin.motivic import CurveZeta

print(motivic.bfp_class(2, 2))

# specialize on P^1 over F_3 and on an elliptic curve over F_5 with 9 points
p1 = CurveZeta(3)
elliptic = CurveZeta(5, (1, 3, 5))
print(motivic.bfp_class(2, 2).specialize(3, lambda k: motivic.sym_point_count(p1, k)))
print(motivic.bfp_class(2, 2).specialize(5, lambda k: motivic.sym_point_count(elliptic, k)))

# on the affine line the class becomes a polynomial in q; compare with a count
# of stable quiver representations over small fields
for r, d in [(2, 1), (1, 2), (2, 2), (3, 2)]:
    poly = motivic.quot_affine_formula(r, d)
    for q in (2, 3):
        res = motivic.stable_count(r, 0, d, q, "+")
        print(f"r={r} d={d} q={q}: raw {res.raw} / {res.gl_order} = {res.count},",
              motivic.format_qpoly(poly), "=", motivic.eval_qpoly(poly, q))

# GF(4) works through lookup tables
print(motivic.brute_force_stable_count(2, 0, 1, 4, "+"))
