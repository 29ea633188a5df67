# coding: utf-8

# # Exact values on tiny complete graphs
#
# The oracle walks restricted-growth colorings edge by edge, rejecting a prefix
# as soon as some copy becomes rainbow, and cuts branches that cannot beat the
# best coloring found so far.

# In[1]:

from arlab import ForestShape, compute_ar, compute_ar_triangle, evaluate

for n, (k, t) in [(5, (1, 1)), (6, (1, 1)), (5, (0, 2)), (6, (0, 3))]:
    res = compute_ar(n, ForestShape(k, t))
    print(n, (k, t), res.value, res.status, res.nodes_explored)


# Triangles: the oracle gives n − 1, while the printed cycle formula at k = 3
# gives n. This is the one informational mismatch in the crosscheck report.

# In[2]:

for n in range(3, 7):
    print(n, compute_ar_triangle(n).value, evaluate("CYCLE", n=n, t=3).value)


# The spanning case at n = 7 takes about half a minute and confirms the value 7.

# In[3]:

res = compute_ar(7, ForestShape(1, 2), node_budget=2_000_000)
print(res.value, res.status, res.nodes_explored)
