"""Independent recomputation of the shear and triangle invariants from flags.

The conversions in `pants` are closed-form, so a bug there would silently
produce self-consistent garbage.  This module provides the cross-check: it
realizes a shear/triangle tuple as an explicit configuration of flags in
homogeneous coordinates, then recomputes every invariant from first
principles with wedge products, and can also rebuild the three boundary
holonomy matrices from the triangle dynamics.

The configuration is normalized so that the inner ideal triangle is the
coordinate triangle [1,0,0], [0,1,0], [0,0,1] and the flag planes of the
first and third vertex meet in the point [1,-1,1].  The planes of vertices
1/2 and 2/3 then meet in [x,1,-1] and [-x,x,1] for a single scale x > 0,
and the outer triangle vertices are [-1,b1,c1], [a2,-1,c2], [a3,b3,-1].
The seven scalars (x, a2, a3, b1, b3, c1, c2) are equivalent to the shear
dictionary

    sigma1(B_1) = log(b1 - 1)        sigma2(B_1) = -log(x*c1 - 1)
    sigma1(B_2) = log(c2 - 1)        sigma2(B_2) = -log(a2 - 1)
    sigma1(B_3) = log(a3/x - 1)      sigma2(B_3) = -log(b3 - 1)
    tau_111(upper triangle) = log x
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateConfiguration,
    DomainViolation,
    NonPositiveRatio,
    NoValidBranch,
)
from .pants import FGPants, fg_to_goldman, validate_fg_domain
from .spectral import EigenTriple, eigen_from_boundary

# Pairings/determinants of normalized vectors below this magnitude are
# treated as genuine degeneracy rather than roundoff.
DEGENERACY_TOL = 1e-12

# Agreement required of a reconstructed holonomy spectrum.
SPECTRUM_TOL = 1e-8

_IDENTITY_WITNESS_TOL = 1e-12


def wedge2(u, v) -> np.ndarray:
    """Covector of the plane spanned by u and v (their cross product)."""
    return np.cross(np.asarray(u, dtype=float), np.asarray(v, dtype=float))


def wedge3(u, v, w) -> float:
    """Determinant of the 3x3 matrix with rows u, v, w."""
    return float(np.dot(wedge2(u, v), np.asarray(w, dtype=float)))


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("zero vector has no direction")
    return v / norm


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """Point of the projective plane, stored as homogeneous coordinates.

    Two points are equal when their canonical representatives agree; the
    canonical representative rescales so the first coordinate of nonsmall
    magnitude becomes +1.
    """

    coords: np.ndarray

    def __init__(self, coords):
        arr = np.asarray(coords, dtype=float).reshape(3)
        if not np.all(np.isfinite(arr)) or np.all(arr == 0.0):
            raise ValueError(f"homogeneous coordinates must be finite and not all zero: {coords!r}")
        object.__setattr__(self, "coords", arr)

    def canonical(self) -> np.ndarray:
        scale_floor = DEGENERACY_TOL * np.max(np.abs(self.coords))
        for value in self.coords:
            if abs(value) > scale_floor:
                return self.coords / value
        raise ValueError("no usable pivot coordinate")

    def isclose(self, other: "ProjPoint", tol: float = 1e-8) -> bool:
        return bool(np.allclose(self.canonical(), other.canonical(), rtol=tol, atol=tol))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.isclose(other)


@dataclass(frozen=True, eq=False)
class Flag:
    """A point together with a line through it.

    The point carries the 1-dimensional part, the line covector the
    2-dimensional part; incidence is required at construction.
    """

    point: np.ndarray
    line: np.ndarray

    def __init__(self, point, line):
        pt = np.asarray(point, dtype=float).reshape(3)
        ln = np.asarray(line, dtype=float).reshape(3)
        if np.all(pt == 0.0) or np.all(ln == 0.0):
            raise ValueError("flag components must be nonzero")
        if abs(float(np.dot(_unit(ln), _unit(pt)))) > 1e-12:
            raise ValueError("flag line does not pass through the flag point")
        object.__setattr__(self, "point", pt)
        object.__setattr__(self, "line", ln)

    def normalized(self) -> "Flag":
        return Flag(_unit(self.point), _unit(self.line))


def _pairing(line: np.ndarray, point: np.ndarray, what: str) -> float:
    value = float(np.dot(line, point))
    if abs(value) < DEGENERACY_TOL:
        raise DegenerateConfiguration(f"pairing {what} is numerically zero ({value!r})")
    return value


def triple_ratio_log(f1: Flag, f2: Flag, f3: Flag) -> float:
    """Logarithm of the triple ratio of three flags.

    The ratio is the product of the three line/point pairings taken one way
    around the triangle divided by the product taken the other way; it is
    invariant under rescaling each flag and under volume-preserving linear
    changes of coordinates, and is cyclically invariant.
    """
    f1, f2, f3 = f1.normalized(), f2.normalized(), f3.normalized()
    ratio = (
        _pairing(f1.line, f2.point, "l1.p2")
        / _pairing(f3.line, f2.point, "l3.p2")
        * _pairing(f3.line, f1.point, "l3.p1")
        / _pairing(f2.line, f1.point, "l2.p1")
        * _pairing(f2.line, f3.point, "l2.p3")
        / _pairing(f1.line, f3.point, "l1.p3")
    )
    if ratio <= 0.0:
        raise NonPositiveRatio(f"triple ratio must be positive, got {ratio!r}")
    return math.log(ratio)


def _det(u, v, w, what: str) -> float:
    value = wedge3(u, v, w)
    if abs(value) < DEGENERACY_TOL:
        raise DegenerateConfiguration(f"determinant {what} is numerically zero ({value!r})")
    return value


def shear_logs(fpos: Flag, fneg: Flag, fup: Flag, fdown_point: ProjPoint) -> tuple[float, float]:
    """Both shear invariants of one oriented line shared by two triangles.

    `fpos` and `fneg` are the flags at the positive and negative endpoint of
    the line, `fup` is the flag at the third vertex of the upper triangle,
    and `fdown_point` is the third vertex of the lower triangle (only its
    point enters).  Returns (sigma1, sigma2).
    """
    fpos, fneg, fup = fpos.normalized(), fneg.normalized(), fup.normalized()
    down = _unit(fdown_point.coords)
    d_up = _det(fpos.point, fneg.point, fup.point, "pos^neg^up")
    d_down = _det(fpos.point, fneg.point, down, "pos^neg^down")
    ratio1 = -(d_up / d_down) * (
        _pairing(fneg.line, down, "lneg.down") / _pairing(fneg.line, fup.point, "lneg.up")
    )
    ratio2 = -(d_down / d_up) * (
        _pairing(fpos.line, fup.point, "lpos.up") / _pairing(fpos.line, down, "lpos.down")
    )
    if ratio1 <= 0.0 or ratio2 <= 0.0:
        raise NonPositiveRatio(
            f"shear ratios must be positive, got ({ratio1!r}, {ratio2!r})"
        )
    return (math.log(ratio1), math.log(ratio2))


@dataclass(frozen=True)
class PantsFlagConfig:
    """The normalized flag configuration of a pair of pants.

    Positivity constraints keep every logarithm of the shear dictionary
    defined: b1, c2, b3, a2 > 1, a3 > x and x*c1 > 1.
    """

    x: float
    a2: float
    a3: float
    b1: float
    b3: float
    c1: float
    c2: float

    def __post_init__(self):
        for name in ("x", "a2", "a3", "b1", "b3", "c1", "c2"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite real, got {value!r}")
        for name, value, bound in (
            ("b1", self.b1, 1.0),
            ("c2", self.c2, 1.0),
            ("b3", self.b3, 1.0),
            ("a2", self.a2, 1.0),
            ("a3", self.a3, self.x),
            ("x*c1", self.x * self.c1, 1.0),
        ):
            if not value > bound:
                raise ValueError(f"{name} = {value!r} must exceed {bound!r}")
        # Collinearity of each inner flag line with its two intersection
        # points is an algebraic identity in x; a failure means a code bug.
        scale = max(1.0, self.x)
        witnesses = (
            wedge3([1, 0, 0], [1, -1, 1], [self.x, 1, -1]),
            wedge3([0, 1, 0], [self.x, 1, -1], [-self.x, self.x, 1]),
            wedge3([0, 0, 1], [1, -1, 1], [-self.x, self.x, 1]),
        )
        for k, w in enumerate(witnesses):
            if abs(w) > _IDENTITY_WITNESS_TOL * scale:
                raise ValueError(f"collinearity witness {k} is nonzero: {w!r}")

    @property
    def inner_points(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (np.eye(3)[0], np.eye(3)[1], np.eye(3)[2])

    @property
    def intersection_points(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Pairwise meets of the inner flag planes: (1&3, 1&2, 2&3)."""
        return (
            np.array([1.0, -1.0, 1.0]),
            np.array([self.x, 1.0, -1.0]),
            np.array([-self.x, self.x, 1.0]),
        )

    @property
    def inner_flags(self) -> tuple[Flag, Flag, Flag]:
        meet13, meet12, meet23 = self.intersection_points
        p1, p2, p3 = self.inner_points
        return (
            Flag(p1, wedge2(p1, meet13)),
            Flag(p2, wedge2(p2, meet12)),
            Flag(p3, wedge2(p3, meet13)),
        )

    @property
    def outer_points(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return (
            ProjPoint([-1.0, self.b1, self.c1]),
            ProjPoint([self.a2, -1.0, self.c2]),
            ProjPoint([self.a3, self.b3, -1.0]),
        )


def config_from_fg(sigma1, sigma2, tau_plus: float) -> PantsFlagConfig:
    """Build the normalized configuration realizing the given invariants."""
    s1 = tuple(float(v) for v in sigma1)
    s2 = tuple(float(v) for v in sigma2)
    return PantsFlagConfig(
        x=math.exp(tau_plus),
        a2=math.exp(-s2[1]) + 1.0,
        a3=math.exp(tau_plus) * (math.exp(s1[2]) + 1.0),
        b1=math.exp(s1[0]) + 1.0,
        b3=math.exp(-s2[2]) + 1.0,
        c1=math.exp(-tau_plus) * (math.exp(-s2[0]) + 1.0),
        c2=math.exp(s1[1]) + 1.0,
    )


def fg_from_config(c: PantsFlagConfig) -> tuple[tuple[float, float, float],
                                                tuple[float, float, float], float]:
    """Read the shear dictionary off a configuration (inverse of config_from_fg)."""
    sigma1 = (math.log(c.b1 - 1.0), math.log(c.c2 - 1.0), math.log(c.a3 / c.x - 1.0))
    sigma2 = (-math.log(c.x * c.c1 - 1.0), -math.log(c.a2 - 1.0), -math.log(c.b3 - 1.0))
    return (sigma1, sigma2, math.log(c.x))


def _shear_flag_arguments(c: PantsFlagConfig, i: int):
    """Flags feeding shear_logs for line B_{i+1}: its positive endpoint
    carries flag i+1, its negative endpoint flag i-1, the third vertex of
    the upper triangle is flag i, and the lower third vertex is outer point i."""
    flags = c.inner_flags
    outer = c.outer_points
    return (flags[(i + 1) % 3], flags[(i - 1) % 3], flags[i], outer[i])


@dataclass(frozen=True)
class OracleReport:
    """Residuals of the wedge-product recomputation against the input tuple."""

    sigma1_residuals: tuple[float, float, float]
    sigma2_residuals: tuple[float, float, float]
    tau_plus_residual: float
    tau_sum_residual: float
    max_residual: float


def oracle_check(f: FGPants) -> OracleReport:
    """Certify a shear/triangle tuple against the flag geometry.

    Rebuilds the normalized configuration, recomputes all six shears and the
    upper triangle invariant with wedge products (not the dictionary), and
    checks tau_plus + tau_minus against -sum(log mu_i) computed from the
    boundary spectra.
    """
    check = validate_fg_domain(f)
    if not check:
        raise DomainViolation("; ".join(check.failures))
    c = config_from_fg(f.sigma1, f.sigma2, f.tau_plus)
    res1 = []
    res2 = []
    for i in range(3):
        s1, s2 = shear_logs(*_shear_flag_arguments(c, i))
        res1.append(abs(s1 - f.sigma1[i]))
        res2.append(abs(s2 - f.sigma2[i]))
    tau_res = abs(triple_ratio_log(*c.inner_flags) - f.tau_plus)
    g = fg_to_goldman(f)
    log_mu_sum = sum(math.log(eigen_from_boundary(b).mu) for b in g.boundary)
    tau_sum_res = abs(f.tau_plus + f.tau_minus + log_mu_sum)
    all_res = (*res1, *res2, tau_res, tau_sum_res)
    return OracleReport(tuple(res1), tuple(res2), tau_res, tau_sum_res, max(all_res))


@dataclass(frozen=True)
class MonodromyBranch:
    """One real solution of the scaling equations, with its quality measures."""

    matrix: np.ndarray
    beta: float
    gamma: float
    spectrum_residual: float
    flag_residual: float


@dataclass(frozen=True)
class MonodromyResult:
    """Reconstructed holonomies and, per matrix, every admissible branch."""

    matrices: tuple[np.ndarray, np.ndarray, np.ndarray]
    branches: tuple[tuple[MonodromyBranch, ...], ...]


def _quadratic_roots(a: float, b: float, c: float) -> list[float]:
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b if b != 0.0 else 1.0))
    roots = [q / a]
    if q != 0.0:
        roots.append(c / q)
    return roots


def _branch_quality(m: np.ndarray, target: EigenTriple, line: np.ndarray):
    """(spectrum residual, flag residual) of a candidate matrix, or None when
    the spectrum is not real positive in the target's order."""
    values, vectors = np.linalg.eig(m)
    if np.any(np.abs(values.imag) > SPECTRUM_TOL * np.maximum(1.0, np.abs(values.real))):
        return None
    values = values.real
    order = np.argsort(values)
    spectrum = values[order]
    wanted = np.array([target.lam, target.mu, target.nu])
    if np.any(spectrum <= 0.0):
        return None
    spectrum_residual = float(np.max(np.abs(spectrum - wanted) / wanted))
    if spectrum_residual > SPECTRUM_TOL:
        return None
    mu_vector = np.real(vectors[:, order[1]])
    flag_residual = abs(float(np.dot(_unit(line), _unit(mu_vector))))
    return spectrum_residual, flag_residual


def reconstruct_monodromy(c: PantsFlagConfig, eigen) -> MonodromyResult:
    """Rebuild the three boundary holonomies from the triangle dynamics.

    The matrix attached to inner vertex i fixes that vertex with its
    smallest eigenvalue (repelling fixed point) and carries the adjacent
    lower triangle across the inner one: vertex i+2 of the inner triangle
    goes out to outer vertex i+2 and outer vertex i+1 comes in to inner
    vertex i+1.  Those image points are only projective, so two scalings
    remain free; they are pinned down by det = 1 together with
    trace = lam + mu + nu, which reduces to one quadratic.  Every real
    branch automatically has the required spectrum, so the unstable-flag
    condition (the middle eigenvector must lie on the flag line of vertex i)
    selects the holonomy among them.

    Returns all admissible branches; the primary matrices are the ones with
    the smallest flag residual.
    """
    eigen = tuple(eigen)
    if len(eigen) != 3:
        raise ValueError("exactly three eigenvalue triples are required")
    points = c.inner_points
    outer = [p.coords for p in c.outer_points]
    lines = [f.line for f in c.inner_flags]
    matrices = []
    all_branches = []
    for i in range(3):
        lam = eigen[i].lam
        trace = eigen[i].lam + eigen[i].mu + eigen[i].nu
        sources = [points[i], points[(i + 2) % 3], outer[(i + 1) % 3]]
        images = [points[i], outer[(i + 2) % 3], points[(i + 1) % 3]]
        v = np.column_stack(sources)
        v_inv = np.linalg.inv(v)
        blocks = [np.outer(images[j], v_inv[j]) for j in range(3)]
        traces = [float(np.trace(b)) for b in blocks]
        det_ratio = float(np.linalg.det(np.column_stack(images))) / float(np.linalg.det(v))
        # det M = lam * beta * gamma * det_ratio = 1, so beta*gamma is fixed;
        # substituting gamma into the trace condition gives the quadratic.
        product = 1.0 / (lam * det_ratio)
        roots = _quadratic_roots(traces[1], lam * traces[0] - trace, product * traces[2])
        branches = []
        for beta in roots:
            if beta == 0.0:
                continue
            gamma = product / beta
            m = lam * blocks[0] + beta * blocks[1] + gamma * blocks[2]
            quality = _branch_quality(m, eigen[i], lines[i])
            if quality is None:
                continue
            branches.append(MonodromyBranch(m, beta, gamma, quality[0], quality[1]))
        if not branches:
            raise NoValidBranch(
                f"no scaling branch for vertex {i + 1} matches the required spectrum"
            )
        branches.sort(key=lambda br: br.flag_residual)
        matrices.append(branches[0].matrix)
        all_branches.append(tuple(branches))
    return MonodromyResult(tuple(matrices), tuple(all_branches))
