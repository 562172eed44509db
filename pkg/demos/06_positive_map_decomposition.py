"""Every positive diagonal unital map splits into CP + CP-after-transpose.

A point of the cube outside the tetrahedron sits in one of four pyramids,
each capped by a non-CP corner; the line from that corner through the
point exits through the opposite face, giving the convex split
p * CP1 + (1 - p) * CP2 o T with both CP parts inside the tetrahedron.
Each non-CP corner is itself a tetrahedron vertex composed with the
transpose.
"""

import numpy as np

import qubitgeom as qg
from qubitgeom.geometry import NONCP_CORNERS, TRANSPOSE_ETA

for eta in ([-0.9, -0.9, -0.9], [0.8, -0.9, 0.7], [0.2, 0.1, -0.3]):
    dec = qg.sw_decompose(np.asarray(eta))
    print(f"eta={eta}")
    print(f"  p={dec.p:.4f}  cp1={np.round(dec.cp1, 4)}  corner={dec.corner}"
          f"  cp2={dec.cp2}")
    print(f"  reconstruction error: "
          f"{np.max(np.abs(dec.reconstruct() - np.asarray(eta))):.2e}")

print()
print("corner = vertex o transpose identities:")
for corner in NONCP_CORNERS:
    cp2 = qg.compose(corner, TRANSPOSE_ETA)
    print(f"  {corner} = {cp2} o T")
