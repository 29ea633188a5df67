# coding: utf-8

# # Building a witness by induction on k
#
# Above the extremal number, the finder removes the three vertices whose
# deletion keeps the most colors, solves the smaller instance, then puts the
# three vertices back by releasing a few components and re-searching.

# In[1]:

import random
from collections import Counter

from arlab import ForestShape, find_constructive, random_surjective_coloring, spanning_threshold
from arlab.finder import run_trials

k, t = 3, 2
n = 3 * k + 2 * t
c = random_surjective_coloring(n, spanning_threshold(k, t) + 1, random.Random(1))
res = find_constructive(c, ForestShape(k, t))
print(res.witness)
for tr in res.traces:
    print(tr.k, tr.removed, tr.retained_colors, tr.radius, tr.released, tr.edge_pool)


# How far does repair have to reach? The recorded radius is the number of
# inherited components that had to be released.

# In[2]:

for k, t in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)]:
    rows = run_trials(k, t, 100, seed=0)
    print((k, t), Counter(r["max_radius"] for r in rows), "fallbacks:", sum(r["fallback"] for r in rows))
