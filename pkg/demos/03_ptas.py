# Shifting over BFS levels on a larger grid, one exact solve per slab and patch.
# Run: python3 demos/03_ptas.py

# %%
import time
from fractions import Fraction

from capdom import PtasConfig, solve_ptas, strict_validate
from capdom.feasibility import normalize_instance
from capdom.io import generate

inst = normalize_instance(generate("grid", rows=10, cols=10, dmax=2, cmax=2, seed=1))
print("n", inst.n, "c*", inst.c_star, "d*", inst.d_star)

# %%
# Smaller eps means taller slabs and wider tables; eps=1/2 here gives k=16.
for eps in (Fraction(4), Fraction(2), Fraction(1)):
    t0 = time.perf_counter()
    res = solve_ptas(inst, PtasConfig(epsilon=eps))
    dt = time.perf_counter() - t0
    strict_validate(res.assignment, inst)
    print(f"eps={eps} k={res.k} levels={res.levels} best shift={res.shift} "
          f"size={res.assignment.size} width<={res.max_width} ({dt:.2f}s)")

# %%
# Per-shift sizes before picking the best.
res = solve_ptas(inst, PtasConfig(k=4))
for s in res.shifts:
    size = None if s.assignment is None else s.assignment.size
    print("shift", s.shift, "union", s.union.size, "smoothed", size)
