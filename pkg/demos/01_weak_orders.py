"""
Weak orders as height words
===========================

A weak order on [n] ranks n elements with ties allowed.  Writing down, for
each element, how many strict steps sit below it gives a word over
0..n-1 whose letters always form an initial run 0, 1, ..., h.
"""

from weakcycles import all_weak_orders, format_relation, parse_relation, to_ordered_partition
from weakcycles.core import format_partition, rotate, validate
from weakcycles.errors import GapError

# %%
# The thirteen weak orders on [3], in three notations.
for w in all_weak_orders(3).enumerate():
    print("".join(map(str, w)), format_relation(w).ljust(6), format_partition(to_ordered_partition(w)))

# %%
# Parsing goes the other way.  Ties are written with "=", strict steps with "<".
print(parse_relation("2<1=3"))

# %%
# Gaps are not allowed: 002 would put element 3 two steps up with nothing
# in between.
try:
    validate([0, 0, 2])
except GapError as exc:
    print("rejected:", exc)

# %%
# Any rearrangement of a valid word is valid again, so rotating keeps us
# inside the family.  This is what makes every transition graph balanced.
w = (1, 0, 2, 0)
print([w := rotate(w) for _ in range(4)])
