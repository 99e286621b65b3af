# coding: utf-8

# # Spatial search on a torus of 8-cliques

# Each torus cell holds an 8-clique; the red tessellation leaves the edges of
# one marked cell uncovered, which acts as the oracle. The walk starts in the
# uniform state and we watch the probability of sitting in the marked cell.

# In[1]:

import numpy as np

from sqwalk import amplified_cost, peak, run_search, torus_instance
from sqwalk.search import fit_sweep, random_walk_hitting_time, search_sweep


# In[2]:

inst = torus_instance(10)
res = run_search(inst, 60)
t_star, p_star = peak(res.p)
print(f"N={inst.N} p(0)={res.p[0]:.5f} peak t*={t_star} p*={p_star:.4f}")
print("max norm drift:", res.norm_drift.max())


# p(t) comes in equal consecutive pairs, so the peak is taken at the first
# plateau that is followed by a drop.

# In[3]:

print(np.round(res.p[:20], 4))


# In[4]:

rows = search_sweep(range(4, 25, 2))
fit = fit_sweep(rows)
print(f"t* ~ {fit.a:.3f} N^{fit.b:.3f}")
print(f"p* ~ {fit.c:.3f} / (ln N)^{fit.d:.3f}")


# Compare with a classical random walk that has to hit the marked cell.

# In[5]:

for n, N, t, p, _ in rows:
    if n >= 8 and n % 4 == 0:
        inst = torus_instance(n)
        rw = random_walk_hitting_time(inst.graph, inst.marked, walkers=1000)
        print(f"N={N:5d} classical {rw:8.1f}  quantum {amplified_cost(t, p):6.1f}")
