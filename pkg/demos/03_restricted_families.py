"""
Fixed height, fixed weight
==========================

Restricting height or weight changes which representation admits a
universal cycle.
"""

import math

from weakcycles import fixed_height, fixed_weight, fixed_weight_prefix, generate, verify
from weakcycles.errors import NotConnected

# %%
# Fixed height h: a ucycle exists once there is room for a repeated level.
# With h = n - 1 every word is a permutation and the graph falls apart into
# rotation classes (except for tiny n, where there is only one class).
for n in range(1, 6):
    row = []
    for h in range(n):
        try:
            generate(fixed_height(n, h))
            row.append("yes")
        except NotConnected as exc:
            row.append(f"no ({exc.diagnosis['components']} comps)")
    print(f"n={n}:", ", ".join(row))

# %%
# Fixed weight k on [5]: full words have no ucycle once k >= 2, because
# the first n-1 letters already pin down the last one.  Dropping the last letter fixes
# that: the prefix family has a ucycle with overlap n-2.
n = 5
for k in range(math.comb(n, 2) + 1):
    try:
        generate(fixed_weight(n, k))
        full = "yes"
    except NotConnected:
        full = "no"
    c = generate(fixed_weight_prefix(n, k))
    print(f"k={k:2d}: full words {full:3s}  prefixes: length {len(c):3d} ok={verify(c.symbols, fixed_weight_prefix(n, k)).ok}")
