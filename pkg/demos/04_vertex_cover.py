# Capacitated vertex cover by bisecting every edge.
# Run: python3 demos/04_vertex_cover.py

# %%
from capdom import PtasConfig
from capdom.cvcp import VcInstance, reduce_to_cdp, solve_cvcp
from capdom.oracle import brute_force_cvcp

# A 4-cycle with a chord. Edge demands in the third slot.
vc = VcInstance.build(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)], c=[3, 1, 2, 1])

inst, bisector = reduce_to_cdp(vc)
print("reduced n", inst.n)
for e, b in sorted(bisector.items()):
    print(f"  edge {e} -> vertex {b} d={inst.d[b]} c={inst.c[b]}")

# %%
sol = solve_cvcp(vc, PtasConfig(epsilon=1))
print("cover", sorted(sol.cover), "size", sol.size)
for (f, e), mult in sorted(sol.coverage.items()):
    print(f"  {f} covers {e} x{mult}")

# %%
ref = brute_force_cvcp(vc.graph, vc.edge_demand, vc.c)
print("optimum", ref.opt_size)
