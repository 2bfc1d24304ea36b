"""Generalized Bernoulli polynomials, plain and cone-restricted.

``bernoulli_multiple`` expands ``t^r e^{zt} / prod_i (e^{omega_i t} - 1)`` as
a power series in ``t`` and reads off ``n!`` times the ``t^n`` coefficient.
The cone-restricted variants sum such polynomials over a unimodular wedge
decomposition of the cone so that the total is the degree-``n`` coefficient
of the lattice generating function over the open cone interior; an
independent numeric oracle (direct lattice sum plus a Chebyshev fit) ships
alongside for verification.
"""

from __future__ import annotations

from math import comb, factorial

from .errors import DomainError
from .lattice_cones import (
    Cone,
    WedgeSubdivision,
    cone_chain_2d,
    det2,
    edge_rays,
    gorenstein_frame,
    lattice_points,
)

MAX_ORDER = 8


# ---------------------------------------------------------------------------
# truncated power series in t (lists of complex coefficients)


def _series_mul(a: list[complex], b: list[complex], n: int) -> list[complex]:
    out = [0j] * n
    for i, ai in enumerate(a[:n]):
        if ai == 0:
            continue
        top = min(n - i, len(b))
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _series_recip(a: list[complex], n: int) -> list[complex]:
    """Newton iteration for 1/a mod t^n; requires a[0] != 0."""
    if a[0] == 0:
        raise DomainError("series has no reciprocal: constant term vanishes")
    r = [1.0 / a[0]]
    m = 1
    while m < n:
        m = min(2 * m, n)
        ar = _series_mul(a[:m], r, m)
        corr = [-c for c in ar]
        corr[0] += 2.0
        r = _series_mul(r, corr, m)
    return r


def bernoulli_multiple(z: complex, omegas: tuple[complex, ...], n: int, max_order: int = MAX_ORDER) -> complex:
    """Degree-n generalized Bernoulli polynomial with r = len(omegas) periods.

    Coefficient of t^n/n! in t^r e^{zt} / prod_i (e^{omega_i t} - 1).  The
    periods must be nonzero; n must lie in [0, max_order].
    """
    omegas = tuple(complex(w) for w in omegas)
    if not omegas:
        raise DomainError("at least one period is required")
    if any(w == 0 for w in omegas):
        raise DomainError("periods must be nonzero")
    if not (0 <= n <= max_order):
        raise DomainError(f"order {n} outside [0, {max_order}]")
    terms = n + 2
    den = [1.0 + 0j]
    for w in omegas:
        fac = [w ** (k + 1) / factorial(k + 1) for k in range(terms)]
        den = _series_mul(den, fac, terms)
    inv = _series_recip(den, terms)
    ez = [complex(z) ** k / factorial(k) for k in range(terms)]
    coeffs = _series_mul(inv, ez, terms)
    return coeffs[n] * factorial(n)


# ---------------------------------------------------------------------------
# domain check: a damping phase must exist


def _exists_damping_phase(rays: list[tuple[int, ...]], omegas: tuple[complex, ...]) -> bool:
    """True if some phase c = e^{i theta} has Re(c omega) positive on all rays."""
    import cmath

    pairings = [sum(r[k] * omegas[k] for k in range(len(omegas))) for r in rays]
    for step in range(360):
        c = cmath.exp(1j * cmath.pi * step / 180.0)
        if all((c * p).real > 0 for p in pairings):
            return True
    return False


def _require_damping_phase(rays: list[tuple[int, ...]], omegas: tuple[complex, ...]) -> None:
    if not _exists_damping_phase(rays, omegas):
        raise DomainError(
            "no phase makes Re(c omega) positive on the cone: the lattice "
            "generating function has no convergent direction for these periods"
        )


# ---------------------------------------------------------------------------
# cone-restricted polynomials


def _chain_pairs(chain: WedgeSubdivision):
    lines = chain.lines
    return [(lines[j], lines[j + 1]) for j in range(len(lines) - 1)]


def _omega_cross(omegas, u) -> complex:
    return omegas[0] * u[1] - omegas[1] * u[0]


def bernoulli_cone_2d(
    cone: Cone,
    z: complex,
    omegas: tuple[complex, ...],
    n: int,
    chain: WedgeSubdivision | None = None,
) -> complex:
    """Degree-n cone polynomial of a 2d cone: the chain sum of plain ones.

    Equals n! times the t^n coefficient of t^2 e^{zt} sum_{m in interior(C)}
    e^{-(omega . m) t}: each shifted term covers its half-open wedge with the
    upper edge included, and the final unshifted term covers the last wedge
    with both edges excluded, so the union is exactly the open cone.
    ``chain`` may be any unimodular refinement of the default chain; the
    value does not depend on the refinement.
    """
    if cone.dim != 2:
        raise DomainError("bernoulli_cone_2d needs a 2d cone")
    omegas = tuple(complex(w) for w in omegas)
    if len(omegas) != 2:
        raise DomainError("a 2d cone takes two periods")
    _require_damping_phase(list(edge_rays(cone)), omegas)
    if chain is None:
        chain = cone_chain_2d(cone)
    pairs = _chain_pairs(chain)
    total = 0j
    for u, up in pairs[:-1]:
        a = _omega_cross(omegas, u)
        b = _omega_cross(omegas, up)
        total += bernoulli_multiple(z + a, (a, b), n)
    u, up = pairs[-1]
    total += bernoulli_multiple(z, (_omega_cross(omegas, u), _omega_cross(omegas, up)), n)
    return total


def bernoulli_cone_22(cone: Cone, z: complex, omegas: tuple[complex, ...]) -> complex:
    """The quadratic cone polynomial of a 2d cone (degree and rank both 2)."""
    return bernoulli_cone_2d(cone, z, omegas, 2)


def bernoulli_cone_3d(cone: Cone, z: complex, omegas: tuple[complex, ...], n: int) -> complex:
    """Degree-n cone polynomial of a good Gorenstein 3d cone.

    The facet wedges tile the punctured plane of apex vectors, so the chain
    sum misses exactly the points on the straightened first axis; their
    generating function contributes n(n-1) B_{1,n-2}(z|w1), which is added
    back.  Equals n! times the t^n coefficient of
    t^3 e^{zt} sum_{m in interior(C)} e^{-(omega . m) t}.
    """
    if cone.dim != 3:
        raise DomainError("bernoulli_cone_3d needs a 3d cone")
    omegas = tuple(complex(w) for w in omegas)
    if len(omegas) != 3:
        raise DomainError("a 3d cone takes three periods")
    _require_damping_phase(list(edge_rays(cone)), omegas)
    frame = gorenstein_frame(cone)
    w1 = frame.transformed_omegas(omegas)[0]
    per_facet = frame.facet_omegas(omegas)
    total = 0j
    for fo, chain in zip(per_facet, frame.chains):
        for u, up in _chain_pairs(chain):
            a = _omega_cross(fo, u)
            b = _omega_cross(fo, up)
            total += bernoulli_multiple(z + a, (w1, a, b), n)
    if n >= 2:
        total += n * (n - 1) * bernoulli_multiple(z, (w1,), n - 2)
    return total


def bernoulli_cone_33(cone: Cone, z: complex, omegas: tuple[complex, ...]) -> complex:
    """The cubic cone polynomial of a good Gorenstein 3d cone."""
    return bernoulli_cone_3d(cone, z, omegas, 3)


def bernoulli_cone(cone: Cone, z: complex, omegas: tuple[complex, ...], n: int) -> complex:
    """Degree-n cone polynomial for either supported dimension."""
    if cone.dim == 2:
        return bernoulli_cone_2d(cone, z, omegas, n)
    return bernoulli_cone_3d(cone, z, omegas, n)


def bernoulli_cone_lifted(cone: Cone, z: complex, omegas: tuple[complex, ...], eta: complex) -> complex:
    """Top-degree cone polynomial of the cylinder lift C x R+.

    The lift's generating function factors, so the coefficient is a binomial
    convolution of the base cone polynomials with the one-period polynomials
    at z = 0 evaluated on the lift parameter eta.  Degree is dim + 1.
    """
    eta = complex(eta)
    if eta == 0:
        raise DomainError("lift parameter must be nonzero")
    omegas = tuple(complex(w) for w in omegas)
    lifted_rays = [tuple(r) + (0,) for r in edge_rays(cone)]
    lifted_rays.append((0,) * cone.dim + (1,))
    _require_damping_phase(lifted_rays, omegas + (eta,))
    m = cone.dim + 1
    total = 0j
    for k in range(m + 1):
        base = bernoulli_cone(cone, z, omegas, k)
        axis = bernoulli_multiple(0, (eta,), m - k)
        total += comb(m, k) * base * axis
    return total


# ---------------------------------------------------------------------------
# independent oracle: direct lattice sum + Chebyshev fit


def _interior_lattice_sum(cone: Cone, omegas: tuple[complex, ...], t: complex, radius: int) -> complex:
    """sum over interior lattice points of e^{-(omega . m) t}, summing each
    fiber along the last axis as an exact geometric series.

    Only the transverse coordinates are truncated (at sup-norm ``radius``), so
    the truncation tail decays one dimension lower than a raw box sum.  Fibers
    that are infinite require the corresponding geometric ratio to damp;
    otherwise the sum diverges and a DomainError is raised.
    """
    import numpy as np

    normals = np.asarray(cone.normals, dtype=np.int64)
    dim = cone.dim
    a = normals[:, -1]
    base_n = normals[:, :-1]
    rng = np.arange(-radius, radius + 1, dtype=np.int64)
    if dim == 2:
        base = rng.reshape(-1, 1)
    else:
        base = np.stack(np.meshgrid(rng, rng, indexing="ij"), axis=-1).reshape(-1, 2)
    dots = base @ base_n.T  # (count, n_normals)
    alive = np.ones(len(base), dtype=bool)
    lower = None
    upper = None
    for i in range(len(cone.normals)):
        ai = int(a[i])
        need = 1 - dots[:, i]  # constraint ai * s >= need
        if ai == 0:
            alive &= need <= 0
        elif ai > 0:
            lo_i = -((-need) // ai)  # ceil division
            lower = lo_i if lower is None else np.maximum(lower, lo_i)
        else:
            hi_i = need // ai  # floor of need/ai with ai < 0
            upper = hi_i if upper is None else np.minimum(upper, hi_i)
    om = np.asarray(omegas, dtype=complex)
    w_fiber = om[-1]
    pair_base = base @ om[:-1]
    q = np.exp(-w_fiber * t)
    if lower is not None and upper is not None:
        mask = alive & (lower <= upper)
        lo = lower[mask]
        hi = upper[mask]
        head = np.exp(-(pair_base[mask] + lo * w_fiber) * t)
        tail = np.exp(-(pair_base[mask] + (hi + 1) * w_fiber) * t)
        terms = (head - tail) / (1 - q)
    elif lower is not None:
        if not abs(q) < 1:
            raise DomainError("fiber sums diverge upward: Re(omega_last * t) must be positive")
        mask = alive
        terms = np.exp(-(pair_base[mask] + lower[mask] * w_fiber) * t) / (1 - q)
    elif upper is not None:
        qinv = np.exp(w_fiber * t)
        if not abs(qinv) < 1:
            raise DomainError("fiber sums diverge downward: Re(omega_last * t) must be negative")
        mask = alive
        terms = np.exp(-(pair_base[mask] + upper[mask] * w_fiber) * t) / (1 - qinv)
    else:  # unreachable for a strictly convex cone
        raise DomainError("cone imposes no constraint along the fiber axis")
    return complex(terms.sum())


def bernoulli_cone_oracle(
    cone: Cone,
    z: complex,
    omegas: tuple[complex, ...],
    n: int,
    *,
    radius: int | None = None,
    ray: complex = 1.0,
    t_window: tuple[float, float] | None = None,
    degree: int = 14,
    samples: int = 56,
    eta: complex | None = None,
) -> complex:
    """Numeric estimate of the cone polynomial from the raw lattice sum.

    Evaluates t^r e^{zt} sum_{m in interior} e^{-(omega.m) t} at t = ray*s for
    s in a window (fiber sums along the last axis are exact geometric series,
    transverse coordinates truncated at ``radius``), fits a Chebyshev
    polynomial in s of the given degree and reads off the power coefficient.
    ``ray`` must make Re(ray * omega . m) positive on the cone; with ``eta``
    set, the cylinder lift is summed instead, its extra coordinate handled by
    one more exact geometric factor.

    Inputs are rescaled internally so the slowest lattice direction damps at a
    fixed rate (the coefficients are homogeneous of degree n - r under joint
    scaling of z and the periods), which keeps the truncated tail negligible
    without enlarging the grid.
    """
    import numpy as np
    from numpy.polynomial import chebyshev

    omegas = tuple(complex(w) for w in omegas)
    if radius is None:
        radius = 2400 if cone.dim == 2 else 700
    if t_window is None:
        t_window = (0.1, 1.0)
    r = cone.dim + (0 if eta is None else 1)

    pairings = [sum(w * c for w, c in zip(omegas, ray_vec)) for ray_vec in edge_rays(cone)]
    if eta is not None:
        pairings.append(complex(eta))
    damp = min((complex(ray) * p).real for p in pairings)
    if damp <= 0:
        raise DomainError("ray does not damp the lattice sum along every edge")
    # rescale so the slowest direction damps briskly, but keep the nearest
    # pole of the summed series (at 2*pi over the largest pairing) away from
    # the sampling window
    kappa = min(0.5 / damp, 2.4 / max(abs(p) for p in pairings))
    z = complex(z) * kappa
    omegas = tuple(w * kappa for w in omegas)
    if eta is not None:
        eta = complex(eta) * kappa

    lo, hi = t_window
    s_vals = np.cos(np.pi * (np.arange(samples) + 0.5) / samples)  # Chebyshev nodes
    s_vals = lo + (hi - lo) * (s_vals + 1) / 2
    f_vals = np.empty(samples, dtype=complex)
    for idx, s in enumerate(s_vals):
        t = complex(ray) * s
        total = _interior_lattice_sum(cone, omegas, t, radius)
        if eta is not None:
            qe = complex(np.exp(-complex(eta) * t))
            if not abs(qe) < 1:
                raise DomainError("lift fiber diverges: Re(eta * t) must be positive")
            total = total * qe / (1 - qe)
        f_vals[idx] = (t ** r) * np.exp(complex(z) * t) * total
    u_vals = (2 * s_vals - (lo + hi)) / (hi - lo)
    coef_re = chebyshev.chebfit(u_vals, f_vals.real, degree)
    coef_im = chebyshev.chebfit(u_vals, f_vals.imag, degree)
    pow_u = chebyshev.cheb2poly(coef_re + 1j * coef_im)
    scale = 2.0 / (hi - lo)
    shift = -(lo + hi) / (hi - lo)
    # u = scale*s + shift: expand sum_k pow_u[k] (scale*s + shift)^k
    pow_s = np.zeros(degree + 1, dtype=complex)
    for k, ck in enumerate(pow_u):
        for j in range(k + 1):
            pow_s[j] += ck * comb(k, j) * (scale ** j) * (shift ** (k - j))
    coeff_t_n = pow_s[n] / (complex(ray) ** n)
    return complex(coeff_t_n * factorial(n) * kappa ** (r - n))
