# Repairing an overlapping assignment: trim overloads, then push along
# semi-alternating paths until every demand is met.
# Run: python3 demos/02_smoothing.py

# %%
import random

from capdom import Assignment, Instance, smooth
from capdom.assignment import is_proper, unmet_demand
from capdom.smoothing import find_semi_alternating_path, improve, remove_overloads

# Path 0-1-2-3-4, one unit of demand and capacity everywhere.
inst = Instance.build(5, [(0, 1), (1, 2), (2, 3), (3, 4)], d=[1] * 5, c=[1] * 5)

# Vertex 1 is asked to serve three clients, 4 serves nothing.
a = Assignment([(1, 0), (1, 1), (1, 2), (3, 3)])
print("proper?", is_proper(a, inst), "unmet", unmet_demand(a, inst))

# %%
trimmed = remove_overloads(a, inst)
print("after trim", sorted(trimmed.items()), "unmet", unmet_demand(trimmed, inst))
print("path", find_semi_alternating_path(trimmed, inst))

# %%
cur = trimmed
while unmet_demand(cur, inst):
    cur = improve(cur, inst)
    print("step: unmet", unmet_demand(cur, inst), "size", cur.size)

# %%
final = smooth(a, inst)
print("smoothed", sorted(final.items()))

# %%
# Random proper starts on a larger instance.
from capdom.io import generate

big = generate("trigrid", rows=4, cols=5, dmax=2, cmax=3, seed=4)
rng = random.Random(0)
pairs = []
for v in big.vertices:
    for u in big.graph.closed_neighborhood(v):
        if rng.random() < 0.2:
            pairs.append((u, v))
start = remove_overloads(Assignment(pairs), big)
out = smooth(start, big)
print("start unmet", unmet_demand(start, big), "->", None if out is None else unmet_demand(out, big))
