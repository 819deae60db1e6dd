"""
Discord without entanglement
============================

A pseudoscalar potential keeps the state mixed. The concurrence stays at
zero while the geometric discord peaks near P = sqrt(m^2 + mu^2).
"""
import numpy as np

from bispinor import scenarios as sc
from bispinor.ansatz import build_state
from bispinor.correlations import bloch_decompose, concurrence_wootters, geometric_discord

P = np.linspace(0, 30, 301)
for mu in (0.0, 1.0, 5.0, 10.0):
    d, c = [], []
    for p in P:
        rho = build_state(sc.pseudoscalar_config(1.0, mu, p)).rho
        d.append(geometric_discord(bloch_decompose(rho), 1))
        c.append(concurrence_wootters(rho))
    k = int(np.argmax(d))
    print(f"mu = {mu:4g}: max D = {d[k]:.4f} at P = {P[k]:.2f} "
          f"(sqrt(1 + mu^2) = {np.hypot(1, mu):.2f}), max C = {max(c):.1e}")
