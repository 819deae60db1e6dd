"""Numerical tolerances used across the package.

Relative tolerances are multiplied by a Frobenius norm (or ``max(1, norm)``)
at the point of use, so they behave as absolute-relative hybrids.
"""

#: ||M - M^dagger||_F <= HERMITIAN_RTOL * ||M||_F
HERMITIAN_RTOL = 1e-10

#: eigenvalues above -PSD_CLAMP are clamped to zero in PSD contexts
PSD_CLAMP = 1e-10

#: |Tr H| <= TRACELESS_RTOL * max(1, ||H||_F)
TRACELESS_RTOL = 1e-10

#: |Tr rho - 1| for something to count as a density matrix
TRACE_ATOL = 1e-9

#: ||O^2 - c2 I||_F <= PURE_RTOL * max(1, c2)
PURE_RTOL = 1e-10

#: c2 must exceed this for the pure-projector branch
PURE_C2_MIN = 1e-12

#: ||O||_F <= NULL_O_RTOL * max(1, c1)  ->  O treated as null
NULL_O_RTOL = 1e-12

#: radicand of the energy parameter below this (times max(1, c1)) is degenerate
DEGENERATE_ATOL = 1e-14

#: purity at or above 1 - PURITY_ATOL counts as a pure state
PURITY_ATOL = 1e-8

#: spectral weights below this are dropped from entropy sums
ENTROPY_CUTOFF = 1e-14

#: allowed imaginary residue in Wootters spectra
WOOTTERS_IMAG_ATOL = 1e-8

#: constraint residuals for closed-form cases
CONSTRAINT_ATOL = 1e-10
