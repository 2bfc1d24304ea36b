"""Frozen generic parameter points shared across the test suite.

Every tuple below is a literal that was validated against the independent
oracles (brute-force lattice sums, generating-function fits, closed forms)
before being frozen here.  The sine-domain tuples keep Re(omega) strictly
inside the dual-cone interior of the named cone; the gamma-domain tuples keep
Im(omega) there.  Small off-axis components keep every period ratio away from
the real axis so all infinite products converge quickly.
"""
from __future__ import annotations

import cmath
import math

# A generic evaluation point used by most identity checks.
Z_GENERIC = 0.31 - 0.17j

# sine-domain periods: Re(omega) in the dual interior, modest imaginary jitter
SINE_OMEGAS = {
    "standard-2": (0.8 + 0.11j, 0.9 - 0.13j),
    "wedge21": (-0.9 + 0.12j, 1.1 + 0.07j),
    "wedge53": (-0.8 + 0.09j, 1.5 - 0.06j),
    "standard-3": (0.9 + 0.08j, 0.75 - 0.11j, 1.05 + 0.05j),
    "cone-over-square": (1.7 + 0.10j, -0.5 + 0.13j, -0.6 - 0.08j),
}

# gamma-domain periods: Im(omega) in the dual interior
GAMMA_OMEGAS = {
    "standard-2": (0.21 + 0.55j, -0.13 + 0.62j),
    "wedge21": (0.09 - 0.60j, -0.04 + 0.65j),
    "wedge53": (0.11 - 0.55j, -0.06 + 0.40j),
    "standard-3": (0.14 + 0.52j, -0.08 + 0.61j, 0.05 + 0.47j),
    "cone-over-square": (0.06 + 0.95j, -0.04 - 0.28j, 0.05 - 0.33j),
}

# nearly-real periods with Re(omega) in the dual interior: the lattice
# generating-function oracle converges fastest here
BERNOULLI_OMEGAS = {
    "wedge21": (-0.25 + 0.021j, 0.35 + 0.013j),
    "wedge53": (-0.22 + 0.017j, 0.41 + 0.011j),
    "cone-over-square": (0.42 + 0.014j, -0.13 + 0.009j, -0.17 - 0.012j),
}
Z_BERNOULLI_2D = 0.27 - 0.11j
Z_BERNOULLI_3D = 0.19 + 0.07j

# oracle ray directions for the lifted (extra-period) polynomials: the ray
# must make Re(ray * omega_pairing) positive for every lattice direction of
# the lifted cone, including the pairing with the extra period eta
LIFT_RAY = {
    -1.0: cmath.exp(1j * (-math.pi + 0.35)),
    1.0: cmath.exp(-0.35j),
}
Z_LIFTED = 0.21 - 0.13j


def rel(a: complex, b: complex) -> float:
    """Symmetric relative difference, zero when both values vanish."""
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale
