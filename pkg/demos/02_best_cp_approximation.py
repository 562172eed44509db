"""Best CP approximation of an impossible map.

The trace inner product makes eta-space Euclidean, so the best CP
approximation of a positive non-CP map is the nearest point of the
tetrahedron: drop a perpendicular to the closest face. The universal NOT
lands on (-1/3, -1/3, -1/3) -- realisable by picking one of the three
pi-rotations uniformly at random -- and the "pancake" map (1, 1, 0) on
(2/3, 2/3, 1/3). Constraining the approximation to a slice (here
eta_z = 0) moves the optimum to (1/2, 1/2, 0).
"""

import qubitgeom as qg

unot = qg.catalog("universal_not").eta
print("universal NOT     ", unot, "->", qg.project_to_D(unot))
print("  as Pauli mixture:", qg.pauli_weights(qg.project_to_D(unot)).p)

pancake = qg.catalog("pancake").eta
print("pancake           ", pancake, "->", qg.project_to_D(pancake))
print("pancake, eta_z = 0:", pancake, "->",
      qg.project_constrained(pancake, [True, True, False], [0.0]))
