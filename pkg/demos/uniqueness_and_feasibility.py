"""
When do graphlet counts fail to pin a vertex down, and which count
matrices can occur at all?
"""

from graphlets import collision_search, decide_realizability, same_gds_pair
from graphlets.engine import rooted_census
from graphlets.feasibility import Gds3Matrix, filter_candidate, gds3
from graphlets.formats import write_graph6
from graphlets.graph import cycle_graph

# A path closed by a triangle, and the same path closed by a fork. The far
# endpoint sees the same counts in both, for every n
for n in (4, 6, 9):
    pair = same_gds_pair(n)
    census = rooted_census(pair.g1, pair.v1, n - 1)
    print(f"n={n}: {write_graph6(pair.g1)} vs {write_graph6(pair.g2)}, "
          f"{sum(census.values())} graphlets at the endpoint")

# Exhaustive search: on up to six vertices this is the only coincidence
for n in range(4, 7):
    recs = collision_search(n)
    print(f"n={n}: {len(recs)} vertex collision(s), triangle/fork: "
          f"{[r.is_triangle_fork_instance for r in recs]}, whole-matrix collisions: "
          f"{len(collision_search(n, 'whole_gdd'))}")

"""
Size-2/3 counts: (degree, P3 as an end, triangles) per vertex.
"""

M = gds3(cycle_graph(5))
print("\nC5 rows:", M.rows, "->", decide_realizability(M).status)

bad = Gds3Matrix(((3, 0, 1), (1, 0, 1), (1, 0, 1), (1, 0, 1), (1, 0, 1)))
print("filter:", filter_candidate(bad).reason)

# passes every cheap test, still impossible
sneaky = Gds3Matrix(((2, 0, 1), (2, 0, 1), (2, 0, 1), (2, 0, 0)))
print("filter passes:", bool(filter_candidate(sneaky)), "| decision:", decide_realizability(sneaky).status)
