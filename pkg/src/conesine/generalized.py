"""Cone-restricted multiple sine and elliptic gamma functions.

Each object comes with two independent evaluation routes:

* a finite decomposition into ordinary multiple sines / elliptic gammas over
  a unimodular subdivision of the cone (``*_decomposed`` / ``*_direct``), and
* a Bernoulli exponential times one q-factorial or elliptic-gamma factor per
  codimension-1 face, built from the face transforms (``*_factorized``).

The two routes share only the q-factorial primitive, so their agreement is a
meaningful identity check; ``verify_theorem`` drives that comparison over
seeded random parameter samples and returns a serializable report.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Sequence

from .errors import DomainError
from .bernoulli import (
    _chain_pairs,
    _omega_cross,
    bernoulli_cone_22,
    bernoulli_cone_33,
    bernoulli_cone_lifted,
)
from .lattice_cones import (
    Cone,
    FaceTransform,
    WedgeSubdivision,
    cone_chain_2d,
    det2,
    dual_contains,
    face_matrices,
    group_action,
    gorenstein_frame,
    lattice_points,
    mat_mul,
    mat_vec,
    s_matrix,
    unimodular_inverse,
)
from .qseries import (
    DEFAULT_CONFIG,
    EvalConfig,
    _rel_residual,
    e2,
    elliptic_gamma,
    multiple_sine,
    qfactorial_xq,
)

__all__ = [
    "FaceFactor",
    "VerificationReport",
    "sine_cone_2d_decomposed",
    "sine_cone_2d_factorized",
    "sine_cone_3d_decomposed",
    "sine_cone_3d_factorized",
    "gamma_cone_2d_direct",
    "gamma_cone_2d_factorized",
    "gamma_cone_3d_direct",
    "gamma_cone_3d_factorized",
    "sine_face_factors",
    "gamma_face_factors",
    "gamma_cone_lattice_oracle",
    "face_modularity_check",
    "wedge_product_check",
    "verify_theorem",
    "THEOREM_IDS",
]


def _as_period_tuple(omegas: Sequence[complex], dim: int) -> tuple[complex, ...]:
    out = tuple(complex(w) for w in omegas)
    if len(out) != dim:
        raise DomainError(f"a {dim}d cone takes {dim} periods, got {len(out)}")
    return out


def _require_gamma_domain(cone: Cone, omegas: tuple[complex, ...]) -> None:
    imag = tuple(w.imag for w in omegas)
    if not dual_contains(cone, imag, strict=True):
        raise DomainError(
            "Im(periods) must lie strictly inside the dual cone for the "
            "cone elliptic gamma functions to converge"
        )


# ---------------------------------------------------------------------------
# decomposition routes (finite products of the ordinary functions)


def sine_cone_2d_decomposed(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
    chain: WedgeSubdivision | None = None,
) -> complex:
    """Cone double sine via the finite product of ordinary double sines.

    Follows the chain subdividing the dual wedge: every wedge factor except
    the last is shifted by its opening pairing, matching the cone polynomial
    convention.  ``chain`` may be any unimodular refinement of the default
    (the value is invariant under refinement).
    """
    if cone.dim != 2:
        raise DomainError("sine_cone_2d_decomposed needs a 2d cone")
    omegas = _as_period_tuple(omegas, 2)
    if chain is None:
        chain = cone_chain_2d(cone)
    pairs = _chain_pairs(chain)
    total = 1.0 + 0j
    for u, up in pairs[:-1]:
        a = _omega_cross(omegas, u)
        b = _omega_cross(omegas, up)
        total *= multiple_sine(z + a, (a, b), cfg)
    u, up = pairs[-1]
    total *= multiple_sine(z, (_omega_cross(omegas, u), _omega_cross(omegas, up)), cfg)
    return total


def sine_cone_3d_decomposed(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Cone triple sine via ordinary triple sines over the facet wedges.

    Requires a good Gorenstein cone.  In the straightened frame the facet
    wedges tile the punctured apex plane (every factor shifted), and the
    points on the straightened axis contribute one ordinary sine factor.
    """
    if cone.dim != 3:
        raise DomainError("sine_cone_3d_decomposed needs a 3d cone")
    omegas = _as_period_tuple(omegas, 3)
    frame = gorenstein_frame(cone)
    w1 = frame.transformed_omegas(omegas)[0]
    total = multiple_sine(z, (w1,), cfg)
    for fo, chain in zip(frame.facet_omegas(omegas), frame.chains):
        for u, up in _chain_pairs(chain):
            a = _omega_cross(fo, u)
            b = _omega_cross(fo, up)
            total *= multiple_sine(z + a, (w1, a, b), cfg)
    return total


def gamma_cone_2d_direct(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
    chain: WedgeSubdivision | None = None,
) -> complex:
    """Cone elliptic gamma of a 2d cone via ordinary elliptic gammas.

    Same chain layout as the sine decomposition; requires Im(periods)
    strictly inside the dual cone.
    """
    if cone.dim != 2:
        raise DomainError("gamma_cone_2d_direct needs a 2d cone")
    omegas = _as_period_tuple(omegas, 2)
    _require_gamma_domain(cone, omegas)
    if chain is None:
        chain = cone_chain_2d(cone)
    pairs = _chain_pairs(chain)
    total = 1.0 + 0j
    for u, up in pairs[:-1]:
        a = _omega_cross(omegas, u)
        b = _omega_cross(omegas, up)
        total *= elliptic_gamma(z + a, (a, b), cfg)
    u, up = pairs[-1]
    total *= elliptic_gamma(z, (_omega_cross(omegas, u), _omega_cross(omegas, up)), cfg)
    return total


def gamma_cone_3d_direct(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Cone elliptic gamma of a good Gorenstein 3d cone, decomposition route.

    One ordinary factor per facet wedge (all shifted) times the factor of the
    straightened axis.
    """
    if cone.dim != 3:
        raise DomainError("gamma_cone_3d_direct needs a 3d cone")
    omegas = _as_period_tuple(omegas, 3)
    _require_gamma_domain(cone, omegas)
    frame = gorenstein_frame(cone)
    w1 = frame.transformed_omegas(omegas)[0]
    total = elliptic_gamma(z, (w1,), cfg)
    for fo, chain in zip(frame.facet_omegas(omegas), frame.chains):
        for u, up in _chain_pairs(chain):
            a = _omega_cross(fo, u)
            b = _omega_cross(fo, up)
            total *= elliptic_gamma(z + a, (w1, a, b), cfg)
    return total


# ---------------------------------------------------------------------------
# factorization routes (Bernoulli exponential times one factor per face)


@dataclass(frozen=True)
class FaceFactor:
    """One face's contribution to a factorized cone function.

    ``params`` holds the transformed parameter vector (the image of
    (periods, 1) under the S-composed face matrix, before any division by
    the scale entry); ``value`` is the factor itself.
    """

    face_id: str
    params: tuple[complex, ...]
    value: complex


def sine_face_factors(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> tuple[FaceFactor, ...]:
    """The q-factorial factor contributed by each codimension-1 face.

    The transformed parameters are tau = S K_f (periods, 1); the factor is
    (e^{2 pi i z/tau_last} | e^{2 pi i tau_j/tau_last}) over the middle
    entries.
    """
    omegas = _as_period_tuple(omegas, cone.dim)
    s = s_matrix(cone.dim + 1)
    out = []
    for ft in face_matrices(cone):
        g = mat_mul(s, ft.embedded)
        tau = mat_vec(g, omegas + (1,))
        scale = tau[-1]
        if abs(scale) < 1e-12:
            raise DomainError(f"face {ft.face_id}: transformed scale vanishes")
        x = e2(z / scale)
        qs = tuple(e2(tj / scale) for tj in tau[1:-1])
        out.append(FaceFactor(face_id=ft.face_id, params=tuple(tau), value=qfactorial_xq(x, qs, cfg)))
    return tuple(out)


def sine_cone_2d_factorized(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Cone double sine as a Bernoulli exponential times two face factors."""
    if cone.dim != 2:
        raise DomainError("sine_cone_2d_factorized needs a 2d cone")
    omegas = _as_period_tuple(omegas, 2)
    total = cmath.exp(0.5j * math.pi * bernoulli_cone_22(cone, z, omegas))
    for factor in sine_face_factors(cone, z, omegas, cfg):
        total *= factor.value
    return total


def sine_cone_3d_factorized(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Cone triple sine as a Bernoulli exponential times one factor per
    1-dimensional face."""
    if cone.dim != 3:
        raise DomainError("sine_cone_3d_factorized needs a 3d cone")
    omegas = _as_period_tuple(omegas, 3)
    total = cmath.exp(-1j * math.pi / 6.0 * bernoulli_cone_33(cone, z, omegas))
    for factor in sine_face_factors(cone, z, omegas, cfg):
        total *= factor.value
    return total


def gamma_face_factors(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
    variant: str = "primary",
) -> tuple[FaceFactor, ...]:
    """The transformed ordinary elliptic gamma contributed by each face.

    ``variant="primary"`` composes the face matrices with the S matrix,
    ``variant="alternative"`` with its inverse.
    """
    omegas = _as_period_tuple(omegas, cone.dim)
    s = s_matrix(cone.dim + 1)
    if variant == "alternative":
        s = unimodular_inverse(s)
    elif variant != "primary":
        raise DomainError(f"unknown variant {variant!r}: use 'primary' or 'alternative'")
    out = []
    for ft in face_matrices(cone):
        g = mat_mul(s, ft.embedded)
        w_full = mat_vec(g, omegas + (1,))
        zp, wp = group_action(g, z, omegas)
        out.append(
            FaceFactor(
                face_id=ft.face_id,
                params=tuple(w_full),
                value=elliptic_gamma(zp, wp, cfg),
            )
        )
    return tuple(out)


def gamma_cone_2d_factorized(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Cone elliptic gamma (2d) as a lifted-Bernoulli exponential times the
    face-transformed ordinary elliptic gammas."""
    if cone.dim != 2:
        raise DomainError("gamma_cone_2d_factorized needs a 2d cone")
    omegas = _as_period_tuple(omegas, 2)
    _require_gamma_domain(cone, omegas)
    total = cmath.exp(1j * math.pi / 3.0 * bernoulli_cone_lifted(cone, z, omegas, -1.0))
    for factor in gamma_face_factors(cone, z, omegas, cfg, variant="primary"):
        total *= factor.value
    return total


def gamma_cone_3d_factorized(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
    variant: str = "primary",
) -> complex:
    """Cone elliptic gamma (3d) as a lifted-Bernoulli exponential times the
    face-transformed ordinary elliptic gammas.

    The primary variant lifts with parameter -1 and composes faces with the
    S matrix; the alternative lifts with +1, uses the inverse S matrix and
    the opposite sign in the exponent.  Both evaluate the same function.
    """
    if cone.dim != 3:
        raise DomainError("gamma_cone_3d_factorized needs a 3d cone")
    omegas = _as_period_tuple(omegas, 3)
    _require_gamma_domain(cone, omegas)
    if variant == "primary":
        eta, sign = -1.0, 1.0
    elif variant == "alternative":
        eta, sign = 1.0, -1.0
    else:
        raise DomainError(f"unknown variant {variant!r}: use 'primary' or 'alternative'")
    total = cmath.exp(sign * 1j * math.pi / 12.0 * bernoulli_cone_lifted(cone, z, omegas, eta))
    for factor in gamma_face_factors(cone, z, omegas, cfg, variant=variant):
        total *= factor.value
    return total


# ---------------------------------------------------------------------------
# independent lattice oracle for the gamma functions


def gamma_cone_lattice_oracle(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
    radius: int | None = None,
) -> complex:
    """Brute-force truncated lattice product for the cone elliptic gamma.

    Multiplies (1 - e^{2 pi i (z + m.omega)})^{s} over closed-cone points m
    and (1 - e^{2 pi i (-z + m.omega)}) over interior points, with s = -1 in
    2d and +1 in 3d.  Convergence needs Im(periods) strictly inside the dual
    cone; the discarded tail decays geometrically in the dual pairing.
    """
    import numpy as np

    omegas = _as_period_tuple(omegas, cone.dim)
    _require_gamma_domain(cone, omegas)
    if radius is None:
        radius = cfg.oracle_radius if cone.dim == 2 else 40
    om = np.asarray(omegas)
    closed = lattice_points(cone, radius, interior=False)
    opened = lattice_points(cone, radius, interior=True)
    phase_closed = closed @ om
    phase_open = opened @ om
    two_pi_i = 2j * np.pi
    plus = np.prod(1 - np.exp(two_pi_i * (complex(z) + phase_closed)))
    minus = np.prod(1 - np.exp(two_pi_i * (-complex(z) + phase_open)))
    if cone.dim == 2:
        return complex(minus / plus)
    return complex(minus * plus)


# ---------------------------------------------------------------------------
# wedge chains of q-factorials


def wedge_product_check(
    chain: Sequence[Sequence[int]],
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
    closed: bool = False,
) -> float:
    """Residual of the telescoping product of wedge q-factorials.

    ``chain`` is a list of integer 2-vectors with unit consecutive
    determinants (cyclically when ``closed``).  Each consecutive pair
    contributes (e^{2 pi i z} | e^{2 pi i w(u_i)}, e^{-2 pi i w(u_{i+1})}),
    with w(u) the pairing of the periods against the rotated u.  An open
    chain telescopes to the two-endpoint factor; a closed chain's product
    equals 1 - e^{2 pi i z}.
    """
    us = [tuple(int(c) for c in u) for u in chain]
    if len(us) < 2 + (1 if closed else 0):
        raise DomainError("chain needs at least two lines (three when closed)")
    omegas = tuple(complex(w) for w in omegas)
    if len(omegas) != 2:
        raise DomainError("wedge chains take two periods")
    pairs = list(zip(us, us[1:]))
    if closed:
        pairs.append((us[-1], us[0]))
    for u, up in pairs:
        if det2(u, up) != 1:
            raise DomainError(f"consecutive chain lines {u}, {up} must have determinant 1")
    x = e2(z)
    total = 1.0 + 0j
    for u, up in pairs:
        qa = e2(_omega_cross(omegas, u))
        qb = e2(-_omega_cross(omegas, up))
        total *= qfactorial_xq(x, (qa, qb), cfg)
    if closed:
        expected = 1 - x
    else:
        qa = e2(_omega_cross(omegas, us[0]))
        qb = e2(-_omega_cross(omegas, us[-1]))
        expected = qfactorial_xq(x, (qa, qb), cfg)
    return _rel_residual(total, expected)


# ---------------------------------------------------------------------------
# verification driver


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sampling one identity over seeded random parameters.

    Serializable via ``to_json_dict`` (schema 1); ``skipped`` carries the
    reason when the cone fails the identity's hypotheses, in which case no
    samples were evaluated.
    """

    theorem_id: str
    cone: dict
    seed: int
    tolerance: float
    config: dict
    points: tuple = ()
    lhs: tuple = ()
    rhs: tuple = ()
    residuals: tuple = ()
    max_residual: float = 0.0
    passed: bool = False
    skipped: str | None = None

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def to_json_dict(self) -> dict:
        def c2(v: complex) -> list[float]:
            return [float(v.real), float(v.imag)]

        return {
            "schema": 1,
            "theorem": self.theorem_id,
            "cone": self.cone,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "config": self.config,
            "status": self.status,
            "skipped": self.skipped,
            "points": [
                {"z": c2(z), "omegas": [c2(w) for w in om]} for z, om in self.points
            ],
            "lhs": [c2(v) for v in self.lhs],
            "rhs": [c2(v) for v in self.rhs],
            "residuals": [float(r) for r in self.residuals],
            "max_residual": float(self.max_residual),
        }


def _sample_sine_params(cone: Cone, rng: Random) -> tuple[complex, tuple[complex, ...]]:
    """Periods with real part inside the dual cone (so the chain damps along
    the real direction) and a small generic imaginary jitter."""
    dim = cone.dim
    re = [0.0] * dim
    for nv in cone.normals:
        mu = rng.uniform(0.3, 1.0)
        for k in range(dim):
            re[k] += mu * nv[k]
    omegas = tuple(
        complex(re[k], rng.uniform(-0.2, 0.2)) for k in range(dim)
    )
    z = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.45, 0.45))
    return z, omegas


def _sample_gamma_params(cone: Cone, rng: Random) -> tuple[complex, tuple[complex, ...]]:
    """Periods with imaginary part inside the dual cone (the convergence
    domain of the cone elliptic gammas) and bounded random real parts."""
    dim = cone.dim
    im = [0.0] * dim
    for nv in cone.normals:
        mu = rng.uniform(0.25, 0.6)
        for k in range(dim):
            im[k] += mu * nv[k]
    omegas = tuple(
        complex(rng.uniform(-0.5, 0.5), im[k]) for k in range(dim)
    )
    z = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.45, 0.45))
    return z, omegas


def _needs_frame(cone: Cone) -> str | None:
    if cone.dim != 3:
        return None
    try:
        gorenstein_frame(cone)
    except DomainError as exc:
        return str(exc)
    return None


_Sampler = Callable[[Cone, Random], tuple[complex, tuple[complex, ...]]]
_Side = Callable[[Cone, complex, tuple[complex, ...], EvalConfig], complex]


@dataclass(frozen=True)
class _Theorem:
    dim: int
    tolerance: float
    sampler: _Sampler
    lhs: _Side
    rhs: _Side
    gorenstein: bool = False


def _face_product_reduced(cone: Cone, z, omegas, cfg) -> complex:
    """Product of face-transformed two-period elliptic gammas, dropping the
    first transformed component (the reduced action)."""
    s = s_matrix(cone.dim + 1)
    total = 1.0 + 0j
    for ft in face_matrices(cone):
        g = mat_mul(s, ft.embedded)
        w = mat_vec(g, tuple(omegas) + (1,))
        scale = w[-1]
        if abs(scale) < 1e-12:
            raise DomainError(f"face {ft.face_id}: transformed scale vanishes")
        total *= elliptic_gamma(z / scale, (w[1] / scale, w[2] / scale), cfg)
    return total


THEOREMS: dict[str, _Theorem] = {
    "s2c-factorization": _Theorem(
        dim=2,
        tolerance=1e-8,
        sampler=_sample_sine_params,
        lhs=sine_cone_2d_decomposed,
        rhs=sine_cone_2d_factorized,
    ),
    "s3c-factorization": _Theorem(
        dim=3,
        tolerance=1e-7,
        sampler=_sample_sine_params,
        lhs=sine_cone_3d_decomposed,
        rhs=sine_cone_3d_factorized,
        gorenstein=True,
    ),
    "g1c-factorization": _Theorem(
        dim=2,
        tolerance=1e-8,
        sampler=_sample_gamma_params,
        lhs=gamma_cone_2d_direct,
        rhs=gamma_cone_2d_factorized,
    ),
    "g2c-factorization": _Theorem(
        dim=3,
        tolerance=1e-7,
        sampler=_sample_gamma_params,
        lhs=gamma_cone_3d_direct,
        rhs=lambda cone, z, om, cfg: gamma_cone_3d_factorized(cone, z, om, cfg, variant="primary"),
        gorenstein=True,
    ),
    "g2c-alternative": _Theorem(
        dim=3,
        tolerance=1e-7,
        sampler=_sample_gamma_params,
        lhs=lambda cone, z, om, cfg: gamma_cone_3d_factorized(cone, z, om, cfg, variant="primary"),
        rhs=lambda cone, z, om, cfg: gamma_cone_3d_factorized(cone, z, om, cfg, variant="alternative"),
        gorenstein=True,
    ),
    "face-modularity": _Theorem(
        dim=3,
        tolerance=1e-7,
        sampler=_sample_gamma_params,
        lhs=lambda cone, z, om, cfg: cmath.exp(
            -1j * math.pi / 3.0 * bernoulli_cone_33(cone, z, om)
        ),
        rhs=_face_product_reduced,
        gorenstein=True,
    ),
}

THEOREM_IDS = tuple(sorted(THEOREMS))

_MAX_SAMPLE_ATTEMPTS = 24


def verify_theorem(
    theorem_id: str,
    cone: Cone,
    samples: int = 5,
    seed: int = 0,
    cfg: EvalConfig = DEFAULT_CONFIG,
    tolerance: float | None = None,
) -> VerificationReport:
    """Sample one identity at seeded random generic points and report.

    A cone that fails the identity's hypotheses yields a SKIP report (with
    the reason) rather than a failure.  Sampling is deterministic in the
    seed; parameter draws that hit degenerate configurations (resonant
    ratios, poles) are rejected and redrawn, which is also deterministic.
    """
    if theorem_id not in THEOREMS:
        raise DomainError(
            f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}"
        )
    thm = THEOREMS[theorem_id]
    if samples < 1:
        raise DomainError("need at least one sample")
    tol = thm.tolerance if tolerance is None else float(tolerance)
    base = dict(
        theorem_id=theorem_id,
        cone=cone.to_json_dict(),
        seed=seed,
        tolerance=tol,
        config={
            "tail_tol": cfg.tail_tol,
            "comparison_tol": cfg.comparison_tol,
            "max_terms": cfg.max_terms,
            "oracle_radius": cfg.oracle_radius,
            "samples": samples,
        },
    )
    if cone.dim != thm.dim:
        return VerificationReport(**base, skipped=f"needs a {thm.dim}d cone, got {cone.dim}d")
    if thm.gorenstein:
        reason = _needs_frame(cone)
        if reason is not None:
            return VerificationReport(**base, skipped=reason)

    rng = Random(seed)
    points, lhs_vals, rhs_vals, residuals = [], [], [], []
    for _ in range(samples):
        for attempt in range(_MAX_SAMPLE_ATTEMPTS):
            z, omegas = thm.sampler(cone, rng)
            try:
                a = thm.lhs(cone, z, omegas, cfg)
                b = thm.rhs(cone, z, omegas, cfg)
            except DomainError:
                continue
            break
        else:
            raise DomainError(
                f"could not draw a generic sample for {theorem_id} after "
                f"{_MAX_SAMPLE_ATTEMPTS} attempts"
            )
        points.append((z, omegas))
        lhs_vals.append(a)
        rhs_vals.append(b)
        residuals.append(_rel_residual(a, b))
    worst = max(residuals)
    return VerificationReport(
        **base,
        points=tuple(points),
        lhs=tuple(lhs_vals),
        rhs=tuple(rhs_vals),
        residuals=tuple(residuals),
        max_residual=worst,
        passed=worst < tol,
    )


def face_modularity_check(
    cone: Cone,
    z: complex,
    omegas: Sequence[complex],
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """One-point report for the face-product form of the cubic Bernoulli
    exponential (reduced action, good Gorenstein 3d cones)."""
    if cone.dim != 3:
        raise DomainError("face_modularity_check needs a 3d cone")
    omegas = _as_period_tuple(omegas, 3)
    thm = THEOREMS["face-modularity"]
    base = dict(
        theorem_id="face-modularity",
        cone=cone.to_json_dict(),
        seed=0,
        tolerance=thm.tolerance,
        config={
            "tail_tol": cfg.tail_tol,
            "comparison_tol": cfg.comparison_tol,
            "max_terms": cfg.max_terms,
            "oracle_radius": cfg.oracle_radius,
            "samples": 1,
        },
    )
    reason = _needs_frame(cone)
    if reason is not None:
        return VerificationReport(**base, skipped=reason)
    a = thm.lhs(cone, z, omegas, cfg)
    b = thm.rhs(cone, z, omegas, cfg)
    res = _rel_residual(a, b)
    return VerificationReport(
        **base,
        points=((z, omegas),),
        lhs=(a,),
        rhs=(b,),
        residuals=(res,),
        max_residual=res,
        passed=res < thm.tolerance,
    )
