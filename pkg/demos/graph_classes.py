# coding: utf-8

# # Which graphs support which walks

# A graph is 2-tessellable exactly when its clique graph is 2-colourable.
# Line graphs split further depending on whether a Krausz partition can be
# 2-coloured and whether the graph admits a perfect matching whose complement
# is a union of cliques.

# In[1]:

from sqwalk import classify_graph, is_two_tessellable, named_graph
from sqwalk.models import honeycomb, three_state
from sqwalk.search import torus_instance


# In[2]:

graphs = {
    "claw": named_graph("claw"),
    "fig1": named_graph("fig1"),
    "hajos": named_graph("hajos"),
    "barbell": named_graph("barbell"),
    "cycle(6)": named_graph("cycle(6)"),
    "three-state L=6": three_state(6, 0.5).graph,
    "honeycomb m=2": honeycomb(2).graph,
    "search torus n=3": torus_instance(3).graph,
}

for name, g in graphs.items():
    ev = classify_graph(g)
    print(f"{name:18s} 2-tessellable={is_two_tessellable(g, max_vertices=g.n)!s:5s} {ev.label}")


# The evidence object records a witness: a forbidden subgraph for non line
# graphs, or the Krausz partition and root graph otherwise.

# In[3]:

ev = classify_graph(named_graph("claw"))
print(ev.to_dict())
ev = classify_graph(honeycomb(2).graph)
print(sorted(ev.to_dict()))
