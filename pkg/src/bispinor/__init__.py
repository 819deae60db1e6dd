"""Entanglement and quantum correlations of Dirac bi-spinors in external fields.

A Dirac bi-spinor is treated as a two-qubit state: factor 1 is intrinsic
parity, factor 2 is spin. The package builds the Dirac Hamiltonian for
constant external potentials of every Poincare class, forms the stationary
density-matrix ansatz that commutes with it, and evaluates concurrence,
entanglement of formation, entropies and geometric discord.

>>> from bispinor import PotentialConfig, build_state, full_report
>>> cfg = PotentialConfig.from_kinetic(m=1.0, kappa=1.0, P=(1, 0, 0), B=(0, 1, 0))
>>> rep = full_report(build_state(cfg, s=1, n=2).rho)
>>> round(rep.concurrence, 12)
0.707106781187
"""
from .ansatz import (AnsatzInputs, AnsatzState, PurityClass, build_O, build_state,
                     closed_form_invariants, compute_invariants, eigenvalue_lambda,
                     purity_condition)
from .clifford import (GammaBasis, GammaSet, build_gamma_basis, build_gamma_set,
                       decompose_in_basis)
from .correlations import (BlochDecomposition, CorrelationReport, bloch_decompose,
                           concurrence_pure, concurrence_wootters,
                           entanglement_of_formation, full_report, geometric_discord,
                           partial_trace, von_neumann_entropy)
from .errors import *  # noqa: F401,F403
from .potentials import (DiracHamiltonian, PotentialConfig, build_hamiltonian,
                         covariant_potentials, su2su2_form, su2su2_potentials)

__version__ = "0.1.0"
