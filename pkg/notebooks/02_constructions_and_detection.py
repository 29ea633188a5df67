# coding: utf-8

# # The extremal coloring and the rainbow-forest detector
#
# A rainbow K_{n-3} plus one extra color on every other edge uses exactly the
# extremal number of colors. Any spanning kP3 ∪ tP2 must touch the three
# outside vertices, and they only see the shared color.

# In[1]:

import numpy as np

from arlab import ForestShape, build_lower_bound, find_rainbow_forest, spanning_threshold

c = build_lower_bound(1, 2)
print(np.array(c.matrix))
print(c.class_count, spanning_threshold(1, 2))


# The detector proves absence with a complete search. For the construction the
# root check already fails, since three vertices see a single color.

# In[2]:

for k, t in [(1, 2), (2, 2), (2, 3), (3, 3), (4, 2)]:
    out = find_rainbow_forest(build_lower_bound(k, t), ForestShape(k, t))
    print((k, t), out.found, out.complete, out.nodes_explored)


# Recoloring one outside edge with a fresh color creates a rainbow copy.

# In[3]:

from arlab import EdgeColoring, edge_index

colors = list(c.colors)
colors[edge_index(5, 6, 7)] = 99
bumped = EdgeColoring(7, tuple(colors))
out = find_rainbow_forest(bumped, ForestShape(1, 2))
print(out.witness)


# For n <= 10 every labeled copy can be enumerated; the numpy copy table makes a
# whole-coloring check one vectorized comparison. Both methods return the same
# canonical witness.

# In[4]:

import random

from arlab import detect_by_enumeration, random_coloring

rng = random.Random(0)
shape = ForestShape(1, 2)
disagree = 0
for _ in range(300):
    col = random_coloring(7, rng.randint(3, 21), rng)
    a, b = find_rainbow_forest(col, shape), detect_by_enumeration(col, shape)
    disagree += (a.found != b.found) or (a.witness != b.witness)
print("disagreements:", disagree)
