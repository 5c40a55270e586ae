"""
The least vertex of the fixed-weight graph
==========================================

Write k = C(a, 2) + b with a as large as possible.  The weak order using
levels 0..a-1 once, b once more, and zeros elsewhere, sorted, has the
smallest possible first n-2 letters among all weak orders of weight k.
"""

import math

from weakcycles.oracle import decompose_weight, min_vertex_formula, min_vertex_oracle, min_word_formula

# %%
for k in (0, 3, 4, 10):
    print(k, decompose_weight(k))

# %%
n = 6
for k in range(1, math.comb(n, 2) + 1):
    w = min_word_formula(n, k)
    print(k, "".join(map(str, w)), "vertex", "".join(map(str, min_vertex_formula(n, k))),
          "exhaustive", "".join(map(str, min_vertex_oracle(n, k))))

# %%
# Placing the top run at a instead of a - 1 overshoots the weight by a.
w = min_word_formula(6, 3, literal=True)
print("uncorrected shape for n=6, k=3:", "".join(map(str, w)), "weight", sum(w))
