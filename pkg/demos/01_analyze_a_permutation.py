"""Walk through the basic objects: one permutation, its graph, and the
exact domination solver.

Run:  python3 demos/01_analyze_a_permutation.py
"""
from permdom import (
    all_minimum_dominating_sets,
    build_graph,
    classify_neighbors,
    components,
    domination_number_exact,
    heuristic_dominating_set,
    is_connected,
    parse_permutation,
)

p = parse_permutation("4,6,1,3,7,2,5")
g = build_graph(p)

print(f"permutation: {p}")
print(f"edges (inverted pairs): {sorted(g.edges())}")
print(f"degrees: {list(g.degrees())}")
print(f"connected: {is_connected(g)}")

result = domination_number_exact(g)
print(f"\ndomination number: {result.gamma}")
print(f"canonical witness: {sorted(result.witness)}")
print(f"all minimum dominating sets: "
      f"{[sorted(d) for d in all_minimum_dominating_sets(g)]}")

cls = classify_neighbors(g, result.witness)
print(f"private neighbors: {dict(sorted(cls.private_of.items()))}")
print(f"shared neighbors: {sorted(cls.shared)}")

h = heuristic_dominating_set(g)
print(f"\nclique heuristic found a set of size {h.gamma}: "
      f"{sorted(h.witness)} (repaired: {h.repaired})")

q = parse_permutation("2,1,3,5,4,7,6")
print(f"\na disconnected example, {q}:")
for offset, block in components(build_graph(q)):
    print(f"  component on values {offset + 1}..{offset + block.n}, "
          f"relabeled: {block}")
