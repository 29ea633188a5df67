# coding: utf-8

# # Closed-form anti-Ramsey values
#
# The catalog evaluates every formula exactly, with `Fraction` arithmetic, and
# says which branch it used. Out-of-range parameters come back with a reason
# instead of a number.

# In[1]:

from arlab import evaluate, spanning_threshold
from arlab.catalog import FAMILIES, consistency_report

print(FAMILIES)


# The spanning case n = 3k + 2t is the main result. A few values:

# In[2]:

for k, t in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)]:
    print(k, t, 3 * k + 2 * t, spanning_threshold(k, t))


# With k = 1 the spanning value has to agree with the P3 ∪ tP2 formula at
# n = 2t + 3, which has two branches around a boundary μ.

# In[3]:

for t in range(2, 8):
    res = evaluate("P3_TP2", n=2 * t + 3, t=t)
    print(t, res.value, res.branch, evaluate("SPANNING_KP3_TP2", k=1, t=t).value)


# In[4]:

rows = consistency_report(50)
print(len(rows), "identities,", sum(r.passed for r in rows), "hold")


# Families that only hold for large n carry an `n_min` guard (default three
# times the number of vertices of the forbidden graph).

# In[5]:

print(evaluate("GR_TP3", n=9, t=2).reason)
print(evaluate("GR_TP3", n=9, t=2, n_min=9).value)


# The printed path formula goes negative at t = 2, so it is reported as out of domain.

# In[6]:

print(evaluate("PATH", n=30, t=2).to_dict())
