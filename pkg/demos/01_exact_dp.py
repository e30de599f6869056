# Exact capacitated domination on a small grid with the branch-decomposition DP.
# Run: python3 demos/01_exact_dp.py

# %%
from capdom import bfs_levels, build_decomposition, cdp_dp, strict_validate
from capdom.io import generate
from capdom.oracle import brute_force_cdp

inst = generate("grid", rows=3, cols=4, dmax=2, cmax=2, seed=11)
print("n =", inst.n, "edges =", len(inst.edges))
print("demand  ", inst.d)
print("capacity", inst.c)

# %%
# The decomposition is a caterpillar over a greedy edge order.
bd = build_decomposition(inst)
print("width", bd.width)
print(bd.dump()[:400])

# %%
a = cdp_dp(inst)
if a is None:
    print("no feasible assignment")
else:
    print("dominating set", sorted(a.dominating_set()), "size", a.size)
    strict_validate(a, inst)
    for (f, v), mult in a.items():
        print(f"  {f} -> {v} x{mult}")

# %%
# Same instance, exhaustive search. The sizes agree.
ref = brute_force_cdp(inst)
print("oracle", ref.opt_size, "dp", None if a is None else a.size)
