"""Coordinates on the pair of pants and the conversions between them.

Two global coordinate systems are supported:

* ``GoldmanPants``: the three boundary invariants (lambda_i, tau_i) plus the
  two internal parameters s, t > 0.
* ``FGPants``: the Fock-Goncharov data of the two ideal triangles, namely
  the shear invariants sigma_1(B_i), sigma_2(B_i) of the three spiraling
  lines and the triangle invariants tau_111 of the upper and lower triangle.

Arrays are 0-based: index i holds the object labelled i+1 in the usual
1-based cyclic notation (B_1 is sigma1[0], A_1 is boundary[0], and so on);
cyclic neighbours are (i+1) % 3 and (i-1) % 3.

The conversion formulas are closed-form.  Going from shears to Goldman data,
the two length functions of boundary A_i are

    ell1(A_i) = -sigma1(B_{i+1}) - sigma2(B_{i-1})
    ell2(A_i) = -sigma2(B_{i+1}) - sigma1(B_{i-1}) - tau_plus - tau_minus

and lambda_i, mu_i, nu_i follow from ell1, ell2 and lambda*mu*nu = 1, while

    s = exp((sum sigma1 - sum sigma2) / 6)
    t = exp(-tau_plus) * (e^{-sigma2(B_2)}+1)(e^{-sigma2(B_3)}+1) / (e^{sigma1(B_3)}+1).

In the other direction

    sigma1(B_i) = log(s * mu_{i-1} * sqrt(lambda_{i-1} lambda_{i+1} / lambda_i))
    sigma2(B_i) = log((mu_{i+1} / s) * sqrt(lambda_{i-1} lambda_{i+1} / lambda_i))

with tau_plus obtained by solving the expression for t, and tau_minus pinned
down by the identity tau_plus + tau_minus = -(log mu_1 + log mu_2 + log mu_3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainViolation, NoPositiveRoot
from .spectral import BoundaryInvariant, LengthPair, eigen_from_boundary

# Residual allowed for the internal redundancy check in goldman_to_fg.
_TAU_SUM_TOL = 1e-9


def _log1pexp(x: float) -> float:
    """log(1 + e^x) without overflow for large positive x."""
    if x > 0.0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


@dataclass(frozen=True)
class GoldmanPants:
    """Goldman's eight parameters for a convex projective pair of pants."""

    boundary: tuple[BoundaryInvariant, BoundaryInvariant, BoundaryInvariant]
    s: float
    t: float

    def __post_init__(self):
        if len(self.boundary) != 3:
            raise ValueError("exactly three boundary invariants are required")
        for name in ("s", "t"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"internal parameter {name} must be positive, got {value!r}")


@dataclass(frozen=True)
class FGPants:
    """Fock-Goncharov invariants of a pair of pants.

    Construction checks only that the entries are finite reals; whether the
    tuple lies in the valid domain is a separate, explicit test
    (`validate_fg_domain`), so that invalid data can still be loaded and
    diagnosed.
    """

    sigma1: tuple[float, float, float]
    sigma2: tuple[float, float, float]
    tau_plus: float
    tau_minus: float

    def __post_init__(self):
        for name in ("sigma1", "sigma2"):
            values = getattr(self, name)
            if len(values) != 3 or not all(math.isfinite(v) for v in values):
                raise ValueError(f"{name} must hold three finite reals, got {values!r}")
        for name in ("tau_plus", "tau_minus"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class DomainCheck:
    """Result of the length-positivity test, listing all six lengths."""

    ok: bool
    lengths: tuple[LengthPair, LengthPair, LengthPair]
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def boundary_lengths(f: FGPants) -> tuple[LengthPair, LengthPair, LengthPair]:
    """The (ell1, ell2) pair of each boundary component, from the shear data."""
    total = f.tau_plus + f.tau_minus
    out = []
    for i in range(3):
        ell1 = -f.sigma1[(i + 1) % 3] - f.sigma2[(i - 1) % 3]
        ell2 = -f.sigma2[(i + 1) % 3] - f.sigma1[(i - 1) % 3] - total
        out.append(LengthPair(ell1, ell2))
    return tuple(out)


def validate_fg_domain(f: FGPants) -> DomainCheck:
    """A tuple is admissible iff all six boundary lengths are positive."""
    lengths = boundary_lengths(f)
    failures = []
    for i, pair in enumerate(lengths):
        if not pair.ell1 > 0:
            failures.append(f"ell1(A{i + 1}) = {pair.ell1!r} is not positive")
        if not pair.ell2 > 0:
            failures.append(f"ell2(A{i + 1}) = {pair.ell2!r} is not positive")
    return DomainCheck(not failures, lengths, tuple(failures))


def fg_to_goldman(f: FGPants) -> GoldmanPants:
    """Evaluate the closed-form map from shear/triangle data to Goldman data.

    Raises DomainViolation when the length-positivity test fails; on the
    valid domain every produced boundary pair satisfies the window.
    """
    check = validate_fg_domain(f)
    if not check:
        raise DomainViolation("; ".join(check.failures))
    total = f.tau_plus + f.tau_minus
    invariants = []
    for i in range(3):
        a1 = f.sigma1[(i + 1) % 3]
        a2 = f.sigma2[(i + 1) % 3]
        b1 = f.sigma1[(i - 1) % 3]
        b2 = f.sigma2[(i - 1) % 3]
        log_lam = (a1 + 2.0 * a2 + 2.0 * b1 + b2 + 2.0 * total) / 3.0
        log_mu = (a1 - a2 - b1 + b2 - total) / 3.0
        ell1 = -a1 - b2
        # tau = mu + nu = mu * (1 + e^ell1)
        tau = math.exp(log_mu + _log1pexp(ell1))
        invariants.append(BoundaryInvariant(math.exp(log_lam), tau))
    s = math.exp((sum(f.sigma1) - sum(f.sigma2)) / 6.0)
    t = math.exp(
        -f.tau_plus
        + _log1pexp(-f.sigma2[1])
        + _log1pexp(-f.sigma2[2])
        - _log1pexp(f.sigma1[2])
    )
    return GoldmanPants(tuple(invariants), s, t)


def goldman_to_fg(g: GoldmanPants) -> FGPants:
    """Evaluate the inverse map, from Goldman data to shear/triangle data.

    tau_minus is evaluated from its own closed-form quotient and the sum
    identity tau_plus + tau_minus = -sum(log mu_i) is asserted afterwards as
    a redundancy check.
    """
    eigen = [eigen_from_boundary(b) for b in g.boundary]
    log_lam = [math.log(e.lam) for e in eigen]
    log_mu = [math.log(e.mu) for e in eigen]
    log_s = math.log(g.s)
    sigma1 = []
    sigma2 = []
    for i in range(3):
        half = 0.5 * (log_lam[(i - 1) % 3] + log_lam[(i + 1) % 3] - log_lam[i])
        sigma1.append(log_s + log_mu[(i - 1) % 3] + half)
        sigma2.append(-log_s + log_mu[(i + 1) % 3] + half)
    tau_plus = (
        _log1pexp(-sigma2[1])
        + _log1pexp(-sigma2[2])
        - math.log(g.t)
        - _log1pexp(sigma1[2])
    )
    tau_minus = (
        math.log(g.t)
        + _log1pexp(sigma1[2])
        - sum(log_mu)
        - _log1pexp(-sigma2[1])
        - _log1pexp(-sigma2[2])
    )
    assert abs(tau_plus + tau_minus + sum(log_mu)) <= _TAU_SUM_TOL, (
        "triangle invariants violate the sum identity"
    )
    return FGPants(tuple(sigma1), tuple(sigma2), tau_plus, tau_minus)


def crossratios(f: FGPants) -> tuple[float, float, float]:
    """The three crossratios of the four lines through each inner vertex.

    In terms of the normalized configuration these are rho_1 = b3*c2,
    rho_2 = a3*c1, rho_3 = a2*b1; substituting the shear dictionary gives

        rho_1 = (e^{-sigma2(B_3)}+1)(e^{sigma1(B_2)}+1)
        rho_2 = (e^{sigma1(B_3)}+1)(e^{-sigma2(B_1)}+1)
        rho_3 = (e^{-sigma2(B_2)}+1)(e^{sigma1(B_1)}+1)

    (the triangle invariant cancels in rho_2).  Each factor exceeds 1 or the
    product does, so every crossratio is greater than 1.
    """
    rho1 = math.exp(_log1pexp(-f.sigma2[2]) + _log1pexp(f.sigma1[1]))
    rho2 = math.exp(_log1pexp(f.sigma1[2]) + _log1pexp(-f.sigma2[0]))
    rho3 = math.exp(_log1pexp(-f.sigma2[1]) + _log1pexp(f.sigma1[0]))
    return (rho1, rho2, rho3)


def solve_s(rho: float, lam_prev: float, lam_self: float, lam_next: float,
            tau_self: float) -> float:
    """Unique positive root of the crossratio quadratic

        (lam_next/lam_self) s^2 + tau_self sqrt(lam_prev lam_next/lam_self) s + (1 - rho) = 0.

    All coefficients but the constant term are positive, so for rho > 1 the
    two roots have opposite signs and exactly one is positive.  The root is
    computed in the cancellation-free form q = -(b + sign(b) sqrt(b^2-4ac))/2,
    s = c/q, which is stable when tau_self dominates the discriminant.
    """
    if not rho > 1.0:
        raise NoPositiveRoot(f"crossratio must exceed 1, got {rho!r}")
    a = lam_next / lam_self
    b = tau_self * math.sqrt(lam_prev * lam_next / lam_self)
    c = 1.0 - rho
    disc = b * b - 4.0 * a * c
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    return c / q


def quadratic_value(g: GoldmanPants, i: int) -> float:
    """Right-hand side of the i-th crossratio equation (0-based i)."""
    lam = [b.lam for b in g.boundary]
    coeff = lam[(i - 1) % 3] / lam[(i + 1) % 3]
    middle = g.boundary[i].tau * math.sqrt(lam[i] * lam[(i - 1) % 3] / lam[(i + 1) % 3])
    return 1.0 + middle * g.s + coeff * g.s * g.s


@dataclass(frozen=True)
class ConsistencyReport:
    """Residuals of the three crossratio identities for one Goldman tuple.

    The identities involve (lambda_i, tau_i) and s only; the parameter t
    does not enter any of them.
    """

    crossratios: tuple[float, float, float]
    residuals: tuple[float, float, float]
    max_residual: float
    involves_t: bool = False


def internal_consistency(g: GoldmanPants) -> ConsistencyReport:
    """Convert to shear data, form the crossratios, and check all three
    quadratic identities against g's own (lambda_i, tau_i, s)."""
    f = goldman_to_fg(g)
    rho = crossratios(f)
    residuals = tuple(abs(rho[i] - quadratic_value(g, i)) for i in range(3))
    return ConsistencyReport(rho, residuals, max(residuals))
