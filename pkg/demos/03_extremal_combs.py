"""Extremal constructions: combs achieve the gamma = n/2 ceiling for
connected graphs, an insertion step grows a graph without changing gamma,
and any feasible (n, k) has a connected witness.

Run:  python3 demos/03_extremal_combs.py
"""
from permdom import (
    build_graph,
    comb_sigma,
    comb_tau,
    connected_with_gamma,
    domination_number_exact,
    extend_preserving_gamma,
    is_comb,
    is_connected,
)

for n in (6, 8, 12):
    for build in (comb_sigma, comb_tau):
        p = build(n)
        g = build_graph(p)
        w = is_comb(g)
        gamma = domination_number_exact(g).gamma
        print(f"{build.__name__}({n}) = {p}")
        print(f"  spine {sorted(w.spine)}, teeth {sorted(w.teeth)}, "
              f"gamma = {gamma} = n/2")

print("\ngrow a graph while preserving gamma and connectivity:")
p = comb_sigma(6)
for _ in range(4):
    q = extend_preserving_gamma(p)
    print(f"  {p} -> {q} "
          f"(gamma stays {domination_number_exact(build_graph(q)).gamma})")
    p = q

print("\na connected witness for every feasible (n, k):")
for n, k in ((7, 1), (9, 3), (12, 6), (11, 4)):
    p = connected_with_gamma(n, k)
    g = build_graph(p)
    assert is_connected(g) and domination_number_exact(g).gamma == k
    print(f"  n={n:2d}, k={k}: {p}")
