"""Which single-qubit maps are physical?

Walks through the classic examples: the transpose and the universal NOT
are positive (they send states to states) but not completely positive,
which the Choi-matrix spectrum detects immediately. The CP diagonal unital
maps form a tetrahedron in (eta_x, eta_y, eta_z) space, and membership,
Pauli-mixture weights and the Choi test all agree.
"""

import numpy as np

import qubitgeom as qg

for name in ("identity", "rot_x", "transpose", "universal_not", "pancake"):
    ch = qg.catalog(name)
    cp, min_eig = qg.is_cp(ch)
    positive = qg.is_positive_unital(ch)
    print(f"{name:14s} eta={ch.eta}  positive={positive}  "
          f"CP={cp}  (Choi min eigenvalue {min_eig:+.4f})")

print()
print("The three equivalent CP tests on random points of the cube:")
rng = np.random.default_rng(1)
for eta in rng.uniform(-1, 1, (5, 3)):
    member = qg.in_D(eta)
    weights = qg.pauli_weights(eta)
    cp, _ = qg.is_cp(qg.AffineChannel.from_eta(eta))
    print(f"  eta={np.round(eta, 3)}  in tetrahedron={member}  "
          f"weights nonneg={not weights.signed}  Choi PSD={cp}")
