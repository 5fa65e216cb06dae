"""
A short tour of graphlet degree distributions on a few familiar graphs.

Run from the repository root:  python demos/gdd_tour.py
"""

from graphlets import compute_gdd, load_catalog, motifs_from_gdd
from graphlets.catalog import describe
from graphlets.connectivity import articulation_analysis, cut_core_report
from graphlets.graph import Graph, cycle_graph, path_graph, petersen_graph

cat = load_catalog(5)
print("catalog up to size 5:", len(cat.graph_classes), "graph classes,",
      len(cat.graphlet_classes), "graphlet classes")

# C5 up to size 4. Every vertex looks the same, so every row is equal
c5 = cycle_graph(5)
D = compute_gdd(c5, 4, cat)
print("\nC5, graphlets up to size 4")
print(D.to_csv())

# which columns are nonzero, in words
for item in describe(cat, [t for t in D.columns if D.value(0, t)]):
    print("  theta", item["theta"], "size", item["size"], "code", item["code"], "orbit", item["orbit"])

# the same matrix with the published orbit numbering as header
print(D.to_csv(przulj=True).splitlines()[0])

# whole-graph counts fall out of the column sums
M = motifs_from_gdd(D)
print("\nmotif vector in published graph order:", M.przulj_order(cat))

# Petersen graph: 3-regular, girth 5
pet = petersen_graph()
row = compute_gdd(pet, 5, cat).row(0)
print("\nPetersen, vertex 0: %d nonzero classes out of %d, largest count %d"
      % ((row > 0).sum(), len(row), row.max()))

"""
Connectivity read off the matrix alone.

A size-(n-1) graphlet at v is the graph minus one other vertex, so v sees
n-1 of them exactly when no single deletion disconnects the rest.
"""

for name, g in [("P3", path_graph(3)), ("P4", path_graph(4)), ("C5", c5)]:
    n = g.n
    rep = articulation_analysis(compute_gdd(g, n - 1, cat).block(n - 1), n)
    print(f"{name}: {rep.describe()}   row sums {rep.per_vertex_sums}")

# two 4-cycles sharing the edge 0-1: {0, 1} is the only 2-cut
bowtie = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 1)])
rep = cut_core_report(compute_gdd(bowtie, 4, cat).block(4), 6, 3)
print("two squares on an edge, k=3:", rep.describe())
