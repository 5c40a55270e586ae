"""
Overlap cycles and a disconnected example
=========================================

With overlap s < L - 1, consecutive objects share only s letters.  For
weak orders on [n] every 1 <= s <= n - 1 works.  For permutations of a
multiset the tool needs gcd(s, n) = 1 to guarantee a cycle; permutations
of {1,2,3,4} with s = 2 show why.
"""

import math

from weakcycles import all_weak_orders, build, export_dot, generate, multiset_perms, verify
from weakcycles.errors import CycleNotFound
from weakcycles.graph import summary

# %%
for s in range(1, 5):
    c = generate(all_weak_orders(5), s)
    print(f"W(5), s={s}: length {len(c)} = 541 x {5 - s}, ok={verify(c.symbols, all_weak_orders(5), s).ok}")

# %%
# Three components of four vertices each.
g = build(multiset_perms([1, 2, 3, 4]), 2)
print(summary(g))
print(export_dot(g))

# %%
# The gcd condition is sufficient, not necessary: some gcd > 1 cases
# are still connected.
for m in ([0, 0, 1, 1], [0, 0, 0, 1, 1, 2]):
    n = len(m)
    for s in range(1, n - 1):
        try:
            generate(multiset_perms(m), s)
            verdict = "cycle"
        except CycleNotFound as exc:
            verdict = type(exc).__name__
        print(m, f"s={s} gcd={math.gcd(s, n)}:", verdict)
