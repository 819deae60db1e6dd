"""
Spin-parity entanglement of a single bi-spinor
==============================================

A free particle gives a mixed state with no entanglement. Switching on a
tensor coupling to a magnetic field makes the state pure, and its spin and
parity become entangled once the field tilts away from the momentum.
"""
import numpy as np

from bispinor import scenarios as sc
from bispinor.ansatz import build_state
from bispinor.correlations import full_report
from bispinor.potentials import PotentialConfig

free = PotentialConfig.from_kinetic(m=1.0, P=(1, 0, 0))
st = build_state(free, n=2)
print("free particle: purity", round(st.purity, 6), "class", st.purity_class.name)

# m = kappa = B = P = 1 with the field perpendicular to the momentum
rep = full_report(build_state(sc.tensor_config(1.0, 0.0, 1.0, 1.0, 1.0, np.pi / 2)).rho)
print("tensor, theta = pi/2: C = %.12f  EoF = %.6f" % (rep.concurrence, rep.eof))

# concurrence against the tilt angle for a few momenta
print("\n sin(theta)" + "".join(f"   P={P:<5g}" for P in (1, 4, 10, 100)))
for x in np.linspace(0, 1, 6):
    row = [sc.case_tensor_pseudoscalar(1.0, 0.0, 1.0, 1.0, P, np.arcsin(x)).concurrence
           for P in (1, 4, 10, 100)]
    print(f"   {x:5.2f}  " + "".join(f"   {c:7.4f}" for c in row))
