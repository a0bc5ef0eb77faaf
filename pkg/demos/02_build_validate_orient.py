"""Build a moment graph by hand, validate the axioms, orient it.

The graph here is the projected 3-simplex with the complete edge set: four
vertices, six edges, every vertex 3-valent.  Validation checks valence,
pairwise independence of the weights at each vertex, moment compatibility
of every edge, and the congruence matching across each edge.
"""

from gkm import Edge, GkmGraph, Vector, Vertex, orient

vertices = [
    Vertex("A", Vector((0, 0))),
    Vertex("B", Vector((1, 0))),
    Vertex("C", Vector((0, 1))),
    Vertex("D", Vector((-1, -2))),
]
positions = {v.id: v.mu for v in vertices}

# Weight from the first endpoint toward the second: here simply the moment
# difference (every edge has stretch ratio 1 for this instance).
edges = [
    Edge(u, v, positions[v] - positions[u])
    for u, v in [("A", "B"), ("A", "C"), ("A", "D"),
                 ("B", "C"), ("B", "D"), ("C", "D")]
]

graph = GkmGraph(rank=2, valence=3, vertices=vertices, edges=edges)
print(graph.validate())

# A generic covector orients every edge toward larger moment pairing.
og = orient(graph, Vector((1, 3)))
print("\npairings  :", {v: og.mu_xi(v) for v in graph.vertex_ids()})
print("down-deg  :", {v: og.down_degree(v) for v in graph.vertex_ids()})
print("betti     :", og.betti())
print("increasing:", og.is_index_increasing())
print("bottom/top:", og.o_vertex(), og.r_vertex())

# Reachability drives the Thom-class supports.
print("above A   :", sorted(og.ascending_reachable("A")))
print("cycle at A:", og.ascending_cycle("A"))

# Reversing the covector flips every down-degree to 3 - d.
rev = orient(graph, Vector((-1, -3)))
print("reversed  :", {v: rev.down_degree(v) for v in graph.vertex_ids()})
