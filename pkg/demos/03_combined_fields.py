"""
Combined pseudovector and tensor couplings
==========================================

With W perpendicular to the momentum-field plane the concurrence jumps at a
critical angle. At very large momentum it approaches |B| / sqrt(B^2 + W^2 cos^2).
"""
import numpy as np

from bispinor import scenarios as sc
from bispinor.ansatz import build_state
from bispinor.correlations import concurrence_wootters

P = 1.5
tc = sc.critical_angle(1.0, 1.0, P, 1.0)
print(f"critical angle for mu = W = B = 1, P = {P}: {tc:.4f} rad")
for t in (-tc - 1e-3, -tc + 1e-3):
    c = concurrence_wootters(build_state(sc.combined_w_perp_config(1.0, 1.0, P, 1.0, t), 2, 2).rho)
    print(f"  theta = {t:+.4f}: C = {c:.6f}")

print("\nultrarelativistic limit, P = 1e6, B = 0.5")
for t in np.linspace(0, np.pi / 2, 5):
    c = concurrence_wootters(build_state(sc.combined_b_perp_config(1.0, 1.0, 1e6, 0.5, t)).rho)
    print(f"  theta = {t:.3f}: C = {c:.6f}  limit = {sc.ur_limit_combined(1.0, 0.5, t):.6f}")
