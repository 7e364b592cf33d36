"""Sweep a polygon in several directions and compare the resulting Reeb
graphs: leaf/branch counts, node heights, and how holes create cycles."""

from ruledpoly import (
    Direction,
    NonGenericDirectionError,
    Polygon,
    annulus_polygon,
    is_generic,
    reeb_graph,
)

L = Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


def describe(P, v, label):
    g = reeb_graph(P, v)
    print(f"{label}: l={g.l} b={g.b} h={g.h} cycle_rank={g.cycle_rank}")
    for idx, nd in enumerate(g.nodes):
        print(f"  node {idx}: {nd.kind:6s} height={nd.height} "
              f"at vertex {nd.vertex} ({nd.witness.x},{nd.witness.y})")
    print("  edges:", list(g.edges))


# the diagonal (1,1) ties the two arm tips of the L at equal height, so it
# is rejected; a slight tilt resolves the tie
print("is_generic L (1,1):", is_generic(L, Direction(1, 1)))
try:
    reeb_graph(L, Direction(1, 1))
except NonGenericDirectionError as e:
    print(f"rejected: vertices {e.first} and {e.second} share a height\n")

tilt = Direction(1024, 1025)
describe(L, tilt, "L near the diagonal")
print()
# exactly vertical ties the bottom edge's endpoints, so tilt a little
describe(L, Direction(1, 1000), "L nearly straight up")

# an annulus: one hole, so every generic direction gives cycle rank 1
A = annulus_polygon(10, 4)
print()
describe(A, Direction(3, 10), "annulus, tilted")
