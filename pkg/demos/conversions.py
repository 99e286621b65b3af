# coding: utf-8

# # Rewriting staggered walks as Szegedy and coined walks

# When no edge lies in both tessellations, the staggered walk is a block of an
# extended Szegedy walk on a larger space. When the red tessellation is a
# perfect matching, the walk is a coined walk on a multigraph.

# In[1]:

import numpy as np

from sqwalk import coined_reduce, grover_coin, named_graph, staggered_walk, szegedy_convert, verify_block_structure
from sqwalk.errors import EdgeInIntersectionError
from sqwalk.models import barbell_pair, honeycomb, honeycomb_walk, three_state
from sqwalk.operators import dense_matrix


# ## Barbell

# In[2]:

g = named_graph("barbell")
pair = barbell_pair("b")
inst = szegedy_convert(g, pair)
ok, dev = verify_block_structure(inst, staggered_walk(g.n, pair.blue, pair.red))
print(f"m={inst.m} n={inst.n} idle={inst.idle_dimension} block ok={ok} dev={dev:.1e}")


# The other pair of tessellations shares two edges, so no conversion exists.

# In[3]:

try:
    szegedy_convert(g, barbell_pair("a"))
except EdgeInIntersectionError as exc:
    print(exc.code, exc)


# ## Honeycomb

# In[4]:

h = honeycomb(2)
cw = coined_reduce(h.graph, h.pair)
print("coin blocks equal Grover:", all(np.allclose(b, grover_coin(3)) for b in cw.coin_blocks))
print("recomposition error:", np.max(np.abs(cw.recompose() - dense_matrix(honeycomb_walk(h)))))


# ## Three-state walk on a ring

# In[5]:

t = three_state(8, 1 / np.sqrt(3))
print(np.round(t.coin(), 3))
cw = coined_reduce(t.graph, t.pair, t.blue_vectors())
print("loops:", len(cw.loops), "recomposition error:",
      np.max(np.abs(cw.recompose() - dense_matrix(t.walk()))))
