"""Summand tables of window categories and of Quot schemes on curves."""

from hallwin import sod

# W_2(2) for 2 incoming and 1 outgoing arrow: three summands, one generator each
for s in sod.sod_table(2, 1, 2, 2).summands:
    print(s.index, s.generator_count, s.label)

# with no outgoing arrows only the compositions of d carry generators
table = sod.sod_table(3, 0, 3, 2, prune_empty=True)
print([s.index for s in table.summands], "total", table.total)

# two loop vertices: summands group per-vertex refinements
multi = sod.sod_table_multi(2, 1, (2, 1))
for s in multi.summands:
    print(s.index, s.generator_count, s.refinements)
print("total", multi.total, "=", sod.multi_total(2, (2, 1)))

# Quot schemes of a rank 3 bundle on P^1, length 3
for s in sod.quot_curve_table(3, 3):
    print(s.parts, s.label, s.exceptional_count)
print(sod.exceptional_count_p1(3, 3))
