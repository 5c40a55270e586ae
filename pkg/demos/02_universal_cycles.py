"""
Universal cycles for W(n)
=========================

Vertices are the (n-1)-letter prefixes and suffixes of weak orders; each
weak order is an edge from its prefix to its suffix.  An Euler tour of the
graph reads off a cyclic word in which every weak order appears exactly
once as a window.
"""

import time

from weakcycles import all_weak_orders, binary, build, generate, verify, weakly_connected_components

# %%
# The de Bruijn case first, as a sanity check on the machinery.
c = generate(binary(3), canonical=True)
print("binary, n=3:", "".join(map(str, c.symbols)))

# %%
# The transition graph for W(3) has 8 vertices and 13 edges.
g = build(all_weak_orders(3), 2)
print(g.num_vertices, "vertices,", g.num_edges, "edges,", len(weakly_connected_components(g)), "component")

c = generate(all_weak_orders(3))
print("W(3):", "".join(map(str, c.symbols)))
print("windows:", ["".join(map(str, w)) for w in c.windows()])

# %%
# Sizes grow like the ordered Bell numbers.
for n in range(1, 8):
    t = time.perf_counter()
    c = generate(all_weak_orders(n))
    ok = verify(c.symbols, all_weak_orders(n)).ok
    print(f"n={n}: length {len(c):6d}  verified={ok}  {time.perf_counter() - t:.2f}s")
