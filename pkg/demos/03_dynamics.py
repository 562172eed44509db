"""Generating channels dynamically.

Coupling the qubit to a 4-dimensional ancilla with normalised strengths
(alpha_x, alpha_y, alpha_z) traces a straight line in eta-space from the
identity towards a mixture of the pi-rotations. With equal couplings the
line hits the maximally-mixing point at t = pi/3 and the best
universal-NOT approximation at t = pi/2. design_coupling inverts the map:
given any CP diagonal target it returns the couplings and the time.
The closed form is cross-checked against the full 8-dimensional unitary.
"""

import numpy as np

import qubitgeom as qg

equal = qg.CouplingSpec.from_alpha2([1 / 3, 1 / 3, 1 / 3])
for t in (0.0, np.pi / 6, np.pi / 3, np.pi / 2):
    print(f"t = {t:5.3f}   eta(t) = {np.round(qg.eta_of_t(equal, t), 6)}")

print()
target = np.array([0.2, -0.1, 0.05])
spec, t = qg.design_coupling(target)
print(f"target {target}: alpha^2 = {np.round(spec.alpha**2, 6)}, t = {t:.6f}")
print("  closed form:", np.round(qg.eta_of_t(spec, t), 12))

rho0 = qg.bloch_to_density([0.6, 0.0, 0.8])
rho_t = qg.simulate_reduced(spec, t, rho0)
print("  full-space oracle bloch:", np.round(qg.density_to_bloch(rho_t), 12))
print("  expected               :",
      np.round(qg.eta_of_t(spec, t) * np.array([0.6, 0.0, 0.8]), 12))

print()
print(qg.trajectory_to_csv(qg.trajectory(equal, np.linspace(0, np.pi / 2, 6))))
