"""Multivariate q-shifted factorials, multiple sine and elliptic gamma
functions, and residual checks for their functional equations.

The central primitive is the infinite product

    (x | q_0, ..., q_r) = prod_{j_0, ..., j_r >= 0} (1 - x q_0^{j_0} ... q_r^{j_r})

defined for all |q_i| < 1 and extended to mixed moduli by inverting every
|q_i| > 1: each inversion multiplies the argument by that q's reciprocal and
flips the product to its reciprocal, so an odd number of inversions yields
1 over the all-small product.  |q_i| = 1 (including near-resonant values) is
outside the domain.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bernoulli import bernoulli_multiple
from .errors import BudgetError, DomainError

TWO_PI_I = 2j * math.pi
RESONANCE_FLOOR = 1e-6
X_REDUCTION_THRESHOLD = 0.75


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation budget and tolerances shared by all numeric routines.

    ``tail_tol`` bounds every truncated tail (so values carry roughly that
    relative accuracy), ``comparison_tol`` is the default pass threshold for
    identity residuals, ``max_terms`` caps series iterations, and
    ``oracle_radius`` is the default lattice truncation for oracles.
    """

    tail_tol: float = 1e-14
    comparison_tol: float = 1e-8
    max_terms: int = 5_000_000
    oracle_radius: int = 60

    def __post_init__(self):
        if not (0 < self.tail_tol < self.comparison_tol < 1):
            raise DomainError(
                "tolerances must satisfy 0 < tail_tol < comparison_tol < 1, got "
                f"tail_tol={self.tail_tol}, comparison_tol={self.comparison_tol}"
            )
        if self.max_terms < 1000:
            raise DomainError("max_terms is too small to evaluate anything")
        if self.oracle_radius < 1:
            raise DomainError("oracle_radius must be positive")


DEFAULT_CONFIG = EvalConfig()


def e2(w: complex) -> complex:
    """exp(2 pi i w)."""
    return cmath.exp(TWO_PI_I * w)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, max_terms: int):
        self.left = max_terms

    def spend(self, k: int = 1):
        self.left -= k
        if self.left < 0:
            raise BudgetError("evaluation exceeded the configured max_terms budget")


def _qfac_small(x: complex, qs: tuple[complex, ...], cfg: EvalConfig, budget: _Budget) -> complex:
    """(x | qs) with every |q| < 1, via the shift identity and a log series."""
    if not qs:
        return 1.0 - x
    prefactor = 1.0 + 0j
    absq = [abs(q) for q in qs]
    jmin = absq.index(min(absq))
    while abs(x) >= X_REDUCTION_THRESHOLD:
        budget.spend()
        reduced = qs[:jmin] + qs[jmin + 1 :]
        prefactor *= _qfac_small(x, reduced, cfg, budget)
        x = x * qs[jmin]
    # log form: -sum_{n>=1} x^n / (n prod_j (1 - q_j^n)), tail bounded by
    # |x|^{n+1} / ((n+1)(1-|x|)) * prod_j (1 - |q_j|^{n+1})^{-1}
    ax = abs(x)
    if ax == 0:
        return prefactor
    acc = 0j
    xn = x
    axn = ax
    qn = list(qs)
    aqn = list(absq)
    n = 1
    while True:
        budget.spend()
        denom = 1.0 + 0j
        for q in qn:
            denom *= 1.0 - q
        acc += xn / (n * denom)
        bound = axn * ax / ((n + 1) * (1.0 - ax))
        for a in aqn:
            bound /= 1.0 - a * a ** n
        if bound < cfg.tail_tol:
            break
        xn *= x
        axn *= ax
        for j in range(len(qn)):
            qn[j] *= qs[j]
            aqn[j] *= absq[j]
        n += 1
    return prefactor * cmath.exp(-acc)


def qfactorial_xq(x: complex, qs: tuple[complex, ...], cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The q-shifted factorial on raw multiplicative arguments.

    ``qs`` may mix moduli above and below 1 but none may sit on (or within
    the resonance floor of) the unit circle.  Factors whose q underflowed to
    exactly zero contribute their exact limit and are dropped.
    """
    x = complex(x)
    clean: list[complex] = []
    invert: list[complex] = []
    for q in qs:
        q = complex(q)
        if q == 0:
            continue
        m = abs(q)
        if abs(math.log(m)) < RESONANCE_FLOOR:
            raise DomainError(
                f"|q| = {m} is within {RESONANCE_FLOOR} of the unit circle: "
                "the product does not converge (resonant or near-resonant periods)"
            )
        if m > 1:
            invert.append(q)
        else:
            clean.append(q)
    for q in invert:
        x = x / q
    budget = _Budget(cfg.max_terms)
    val = _qfac_small(x, tuple(clean) + tuple(1.0 / q for q in invert), cfg, budget)
    if len(invert) % 2 == 1:
        if val == 0:
            raise DomainError("evaluation point is a pole of the inverted product")
        return 1.0 / val
    return val


def qfactorial(z: complex, omegas: tuple[complex, ...], cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The q-shifted factorial in additive parameters.

    Evaluates (e^{2 pi i z} | e^{2 pi i omega_0}, ..., e^{2 pi i omega_r}).
    Any omega with integer real part shift changes nothing; omegas with
    vanishing imaginary part are rejected by the resonance guard.
    """
    return qfactorial_xq(e2(z), tuple(e2(w) for w in omegas), cfg)


# ---------------------------------------------------------------------------
# multiple elliptic gamma hierarchy


def elliptic_gamma(z: complex, omegas: tuple[complex, ...], cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The r-th elliptic gamma function, r = len(omegas) - 1 >= -1.

    g_0 is the theta-like product; each level is
    (e^{2 pi i (-z + sum omegas)} | q) times (e^{2 pi i z} | q)^{(-1)^r}.
    Depends on z and each omega only modulo 1.  The empty-period level
    (the base case of the period-shift recursion) is -e^{-2 pi i z}.
    """
    omegas = tuple(complex(w) for w in omegas)
    r = len(omegas) - 1
    if r == -1:
        return -e2(-z)
    qs = tuple(e2(w) for w in omegas)
    num = qfactorial_xq(e2(-z + sum(omegas)), qs, cfg)
    den = qfactorial_xq(e2(z), qs, cfg)
    if r % 2 == 0:
        return num * den
    if den == 0:
        raise DomainError("evaluation point is a pole (the denominator product vanishes)")
    return num / den


def q_theta(z: complex, tau: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The Jacobi-type theta product (x q | q)(x^{-1} q ... ); level 0 of the elliptic gamma family."""
    return elliptic_gamma(z, (tau,), cfg)


# ---------------------------------------------------------------------------
# multiple sine hierarchy


def multiple_sine(
    z: complex,
    omegas: tuple[complex, ...],
    cfg: EvalConfig = DEFAULT_CONFIG,
    form: int = 1,
) -> complex:
    """The r-th multiple sine, r = len(omegas) >= 1, via its factorization.

    ``form`` selects between the two equivalent boundary factorizations
    (form 1 uses ratios e^{2 pi i z / omega_k}, form 2 their reciprocals);
    both need every pairwise ratio omega_j / omega_k off the real axis for
    r >= 2.  r = 1 is 2 sin(pi z / omega).
    """
    omegas = tuple(complex(w) for w in omegas)
    r = len(omegas)
    if r < 1:
        raise DomainError("the multiple sine needs at least one period")
    if any(w == 0 for w in omegas):
        raise DomainError("periods must be nonzero")
    if form not in (1, 2):
        raise DomainError("form must be 1 or 2")
    if r == 1:
        return 2.0 * cmath.sin(math.pi * z / omegas[0])
    sign = 1 if (r % 2 == 0) == (form == 1) else -1
    b = bernoulli_multiple(z, omegas, r)
    val = cmath.exp(sign * 1j * math.pi / math.factorial(r) * b)
    flip = 1 if form == 1 else -1
    for k in range(r):
        wk = omegas[k]
        x = e2(flip * z / wk)
        qs = tuple(e2(flip * omegas[j] / wk) for j in range(r) if j != k)
        val *= qfactorial_xq(x, qs, cfg)
    return val


# ---------------------------------------------------------------------------
# residual checks for the functional equations


def _rel_residual(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale


def qfactorial_gluing_check(
    z: complex,
    omega0: complex,
    omega1: complex,
    rest: tuple[complex, ...] = (),
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """Residual of the three-factor splitting of the q-shifted factorial.

    Checks (x|q0,q1,R) * (x|q1^{-1}, q0 q1, R) / (x|q0, q0 q1, R) = 1 in
    additive parameters; returns |product - 1|.
    """
    rest = tuple(complex(w) for w in rest)
    a = qfactorial(z, (omega0, omega1) + rest, cfg)
    b = qfactorial(z, (omega0, omega0 + omega1) + rest, cfg)
    c = qfactorial(z, (-omega1, omega0 + omega1) + rest, cfg)
    if b == 0:
        raise DomainError("gluing check hit a zero of the reference product")
    return abs(a * c / b - 1.0)


def q_theta_modularity_check(z: complex, tau: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Residual of the level-0 modularity: theta at (z/tau, -1/tau) against
    e^{-i pi B_{2,2}(z | (tau, -1))} times theta at (z, tau).  Needs Im tau > 0."""
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError("theta modularity requires Im tau > 0")
    lhs = q_theta(z / tau, -1.0 / tau, cfg)
    pref = cmath.exp(-1j * math.pi * bernoulli_multiple(z, (tau, -1.0), 2))
    rhs = pref * q_theta(z, tau, cfg)
    return _rel_residual(lhs, rhs)


def elliptic_gamma_gluing_check(z: complex, omegas: tuple[complex, ...], cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Residual of the period-splitting identity for the elliptic gamma in the first two
    periods: g(.|w0,w1,R) * g(.|-w1, w0+w1, R) / g(.|w0, w0+w1, R) = 1."""
    omegas = tuple(complex(w) for w in omegas)
    if len(omegas) < 2:
        raise DomainError("the splitting identity needs at least two periods")
    w0, w1, rest = omegas[0], omegas[1], omegas[2:]
    a = elliptic_gamma(z, (w0, w1) + rest, cfg)
    b = elliptic_gamma(z, (w0, w0 + w1) + rest, cfg)
    c = elliptic_gamma(z, (-w1, w0 + w1) + rest, cfg)
    if b == 0:
        raise DomainError("splitting check hit a zero of the reference value")
    return abs(a * c / b - 1.0)


def elliptic_gamma_modularity_check(
    z: complex,
    omegas: tuple[complex, ...],
    cfg: EvalConfig = DEFAULT_CONFIG,
    variant: int = 1,
) -> float:
    """Residual of the SL(r+2) modularity of the elliptic gamma against its product form.

    Variant 1 compares elliptic_gamma(z|w) with
    e^{2 pi i B_{r+2,r+2}(z|(w,-1)) / (r+2)!} prod_k elliptic_gamma(z/w_k | (w_j/w_k)_{j != k}, -1/w_k);
    variant 2 uses the reflected product with the +1 lift and the opposite
    exponent sign.
    """
    omegas = tuple(complex(w) for w in omegas)
    r = len(omegas) - 1
    if r < 0:
        raise DomainError("needs at least one period")
    if variant not in (1, 2):
        raise DomainError("variant must be 1 or 2")
    lhs = elliptic_gamma(z, omegas, cfg)
    if variant == 1:
        b = bernoulli_multiple(z, omegas + (-1.0,), r + 2)
        pref = cmath.exp(TWO_PI_I / math.factorial(r + 2) * b)
        prod = 1.0 + 0j
        for k, wk in enumerate(omegas):
            rest = tuple(omegas[j] / wk for j in range(len(omegas)) if j != k)
            prod *= elliptic_gamma(z / wk, rest + (-1.0 / wk,), cfg)
    else:
        b = bernoulli_multiple(z, omegas + (1.0,), r + 2)
        pref = cmath.exp(-TWO_PI_I / math.factorial(r + 2) * b)
        prod = 1.0 + 0j
        for k, wk in enumerate(omegas):
            rest = tuple(-omegas[j] / wk for j in range(len(omegas)) if j != k)
            prod *= elliptic_gamma(-z / wk, rest + (-1.0 / wk,), cfg)
    return _rel_residual(lhs, pref * prod)


def elliptic_gamma_three_term_check(z: complex, omegas: tuple[complex, ...], cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Residual of the closed product identity two levels down:
    prod_k g_{r-2}(z/w_k | (w_j/w_k)_{j != k}) = e^{-2 pi i B_{r,r}(z|w) / r!}
    with r = len(omegas) >= 2."""
    omegas = tuple(complex(w) for w in omegas)
    r = len(omegas)
    if r < 2:
        raise DomainError("the closed product identity needs at least two periods")
    prod = 1.0 + 0j
    for k, wk in enumerate(omegas):
        rest = tuple(omegas[j] / wk for j in range(r) if j != k)
        prod *= elliptic_gamma(z / wk, rest, cfg)
    rhs = cmath.exp(-TWO_PI_I / math.factorial(r) * bernoulli_multiple(z, omegas, r))
    return _rel_residual(prod, rhs)
