"""Eigenvalue algebra for boundary holonomies.

A boundary holonomy of a convex projective structure is conjugate to a real
matrix with distinct positive eigenvalues lam < mu < nu whose product is 1.
Goldman's boundary invariants keep lam together with tau = mu + nu, subject
to the open window

    2/sqrt(lam) < tau < lam + 1/lam**2,

which is exactly the condition for (lam, tau) to come from such a spectrum.
This module converts between the two presentations, evaluates the two
length functions, and computes the effect of reversing the orientation of
the curve (which inverts the spectrum).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import WindowViolation

# Type invariants are enforced at construction with this relative tolerance;
# the window is open, so equality within EDGE_TOL of a bound is rejected.
REL_TOL = 1e-12
EDGE_TOL = 1e-12


@dataclass(frozen=True)
class WindowCheck:
    """Outcome of the boundary-window test, with the bounds that were used."""

    ok: bool
    lam: float
    tau: float
    lower: float
    upper: float
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_window(lam: float, tau: float) -> WindowCheck:
    """Test 2/sqrt(lam) < tau < lam + 1/lam**2 with strict inequalities.

    Total: never raises. The returned object is truthy iff the pair is
    admissible; otherwise ``failures`` names each violated bound.
    """
    failures = []
    if not (isinstance(lam, (int, float)) and math.isfinite(lam) and lam > 0):
        failures.append(f"lambda must be a positive finite real, got {lam!r}")
        return WindowCheck(False, lam, tau, math.nan, math.nan, tuple(failures))
    lower = 2.0 / math.sqrt(lam)
    upper = lam + 1.0 / (lam * lam)
    if not (isinstance(tau, (int, float)) and math.isfinite(tau)):
        failures.append(f"tau must be a finite real, got {tau!r}")
    else:
        if tau - lower <= EDGE_TOL:
            failures.append(
                f"tau={tau!r} is not above the lower bound 2/sqrt(lambda)={lower!r}"
            )
        if upper - tau <= EDGE_TOL:
            failures.append(
                f"tau={tau!r} is not below the upper bound lambda+1/lambda^2={upper!r}"
            )
    return WindowCheck(not failures, lam, tau, lower, upper, tuple(failures))


@dataclass(frozen=True)
class EigenTriple:
    """Sorted positive spectrum (lam, mu, nu) with lam*mu*nu = 1."""

    lam: float
    mu: float
    nu: float

    def __post_init__(self):
        if not (0.0 < self.lam < self.mu < self.nu):
            raise ValueError(
                f"eigenvalues must satisfy 0 < lam < mu < nu, got "
                f"({self.lam!r}, {self.mu!r}, {self.nu!r})"
            )
        product = self.lam * self.mu * self.nu
        if abs(product - 1.0) > REL_TOL:
            raise ValueError(f"eigenvalue product must be 1, got {product!r}")


@dataclass(frozen=True)
class BoundaryInvariant:
    """Goldman's (lambda, tau) pair for one boundary holonomy."""

    lam: float
    tau: float

    def __post_init__(self):
        check = check_window(self.lam, self.tau)
        if not check:
            raise WindowViolation("; ".join(check.failures))


@dataclass(frozen=True)
class LengthPair:
    """The two length functions ell1 = log nu - log mu, ell2 = log mu - log lam."""

    ell1: float
    ell2: float


def eigen_from_boundary(b: BoundaryInvariant) -> EigenTriple:
    """Recover the full spectrum from (lambda, tau).

    mu and nu are the roots of z**2 - tau*z + 1/lambda = 0; the smaller root
    is computed from the product of roots to avoid cancellation when the
    discriminant is close to tau**2.
    """
    disc = b.tau * b.tau - 4.0 / b.lam
    nu = 0.5 * (b.tau + math.sqrt(disc))
    mu = 1.0 / (b.lam * nu)
    return EigenTriple(b.lam, mu, nu)


def boundary_from_eigen(e: EigenTriple) -> BoundaryInvariant:
    """Project a spectrum to Goldman's (lambda, mu + nu)."""
    return BoundaryInvariant(e.lam, e.mu + e.nu)


def length_functions(e: EigenTriple) -> LengthPair:
    """Both values are positive precisely because the spectrum is sorted."""
    return LengthPair(math.log(e.nu) - math.log(e.mu), math.log(e.mu) - math.log(e.lam))


def reverse_orientation(b: BoundaryInvariant) -> BoundaryInvariant:
    """Invariants of the inverse holonomy, whose spectrum is (1/nu, 1/mu, 1/lam).

    This is an involution: applying it twice returns the input up to
    floating-point error.
    """
    e = eigen_from_boundary(b)
    return BoundaryInvariant(1.0 / e.nu, 1.0 / e.lam + 1.0 / e.mu)
