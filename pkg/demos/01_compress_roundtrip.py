"""Walk through compressing and recovering a small marked graph.

The running example is a 16-vertex graph: a red hub joined to five blue
spokes, each spoke holding a pair of red leaves that also share an edge.
With depth 2 and degree cap 4 the hub's neighborhood exceeds the cap, so
the five hub edges travel through the star side channel while everything
else is ranked inside two partition graphs.
"""

from lwcg import (
    canonical_edges,
    decode_marked_graph,
    encode_marked_graph,
    format_edge_list,
    parse_edge_list,
)

TEXT = """\
# 16 vertices, 20 edges, two vertex marks, two edge marks
16 20 2 2
2 1 1 1 1 1 2 2 2 2 2 2 2 2 2 2
1 2 2 1
1 3 2 1
1 4 2 1
1 5 2 1
1 6 2 1
2 7 1 1
2 8 1 1
3 9 1 1
3 10 1 1
4 11 1 1
4 12 1 1
5 13 1 1
5 14 1 1
6 15 1 1
6 16 1 1
7 8 2 2
9 10 2 2
11 12 2 2
13 14 2 2
15 16 2 2
"""

graph = parse_edge_list(TEXT)
print(f"input: n={graph.n}, m={graph.m}, |edge marks|={graph.sigma_e}, "
      f"|vertex marks|={graph.sigma_v}")

blob = encode_marked_graph(graph, h=2, delta=4)
print(f"compressed to {len(blob)} bytes ({8 * len(blob) / graph.m:.2f} bits/link)")

decoded = decode_marked_graph(blob)
assert decoded.theta == graph.theta
assert canonical_edges(decoded) == canonical_edges(graph)
print("decoded graph matches the input exactly (canonical edge order):")
print(format_edge_list(decoded))
