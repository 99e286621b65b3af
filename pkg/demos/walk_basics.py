# coding: utf-8

# # A staggered walk on a five-vertex graph

# Two tessellations cover the graph with cliques. Each one gives a reflection,
# and one step of the walk applies the blue reflection first, then the red one.

# In[1]:

import numpy as np

from sqwalk import named_graph, staggered_walk, dense_matrix, apply_step
from sqwalk.models import fig1_pair
from sqwalk.tessellation import union_covers_edges, intersection_edges


# In[2]:

g = named_graph("fig1")
pair = fig1_pair()
print(g.n, "vertices,", len(g.edges), "edges")
print("blue:", pair.blue.polygons)
print("red: ", pair.red.polygons)


# Every edge must sit in some polygon of one tessellation or the other.

# In[3]:

covered, missing = union_covers_edges(g, pair)
print("edges covered:", covered, missing)
print("edges in both:", intersection_edges(pair))


# With uniform polygon vectors the evolution matrix has entries in multiples of 1/6.

# In[4]:

u = dense_matrix(staggered_walk(g.n, pair.blue, pair.red))
np.set_printoptions(precision=3, suppress=True)
print(np.real(u) * 6)
print("unitary:", np.allclose(u.conj().T @ u, np.eye(g.n)))


# In[5]:

ev = staggered_walk(g.n, pair.blue, pair.red)
psi = np.zeros(g.n, dtype=complex)
psi[4] = 1
for t in range(6):
    print(t, np.round(np.abs(psi) ** 2, 3))
    psi = apply_step(ev, psi)
