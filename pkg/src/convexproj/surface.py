"""Coordinates for a general surface built from a pants decomposition.

A decomposition cuts a genus-g surface with n boundary components along
3g+n-3 disjoint simple closed curves into 2g+n-2 pairs of pants.  Each
pants has three ordered slots; an internal curve glues two distinct slots
(possibly of the same pants), every remaining slot is a boundary curve.

Two coordinate bundles live on top of this combinatorics:

* ``SurfaceGoldman``: (lambda, tau) per curve (stored for the plus-slot
  orientation), (s, t) per pants, and a twist/bulge pair (u, v) per
  internal curve, for a total of 16g+8n-16 numbers.
* ``SurfaceBD``: a full shear/triangle tuple per pants and a shear pair
  (sigma1_C, sigma2_C) per internal curve, 22g+10n-22 raw numbers subject
  to two closure equalities per internal curve.

The (u, v) pair is only canonical up to translation; this module fixes the
gauge u = (sigma1_C + sigma2_C)/2, v = (-sigma1_C + sigma2_C)/6, i.e. the
offsets are chosen to vanish.  Twisting along a curve adds (+u, +u) to its
shear pair and bulging adds (-3v, +3v), so both flows are translations in
either coordinate system and commute with all conversions.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import (
    BoundaryCurve,
    ClosureViolation,
    CountMismatch,
    DomainViolation,
    NonNegativeEuler,
    SlotReuse,
    UnknownCurve,
    WindowViolation,
)
from .pants import FGPants, GoldmanPants, boundary_lengths, fg_to_goldman, goldman_to_fg
from .spectral import BoundaryInvariant, LengthPair, reverse_orientation

# Residual accepted when validating closure of externally produced data;
# internally converted data stays far below this.
CLOSURE_TOL = 1e-9

Slot = tuple[str, int]


@dataclass(frozen=True)
class ArcData:
    """Transverse-arc datum of an internal curve.

    Selects the spiraling leaf hitting the curve's positive endpoint from
    the left and its negative endpoint from the right, as leaf indices
    (1..3) inside the plus-side and minus-side pants.  The pair is carried
    through serialization but the conversions consume only the curve's
    shear pair.
    """

    left: int
    right: int

    def __post_init__(self):
        for name in ("left", "right"):
            value = getattr(self, name)
            if value not in (1, 2, 3):
                raise ValueError(f"arc leaf index {name} must be 1, 2 or 3, got {value!r}")


@dataclass(frozen=True)
class Gluing:
    curve: str
    plus: Slot
    minus: Slot
    arc: ArcData = field(default=ArcData(1, 1))


@dataclass(frozen=True)
class BoundarySlot:
    curve: str
    slot: Slot


@dataclass(frozen=True)
class PantsDecomposition:
    pants: tuple[str, ...]
    gluings: tuple[Gluing, ...]
    boundaries: tuple[BoundarySlot, ...]
    genus: int
    boundary_count: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    def internal_curves(self) -> tuple[str, ...]:
        return tuple(g.curve for g in self.gluings)

    def curve_names(self) -> tuple[str, ...]:
        return tuple(g.curve for g in self.gluings) + tuple(b.curve for b in self.boundaries)

    def slot_assignment(self, pants_key: str) -> list[tuple[str, str]]:
        """For each slot of a pants: (curve key, role), role in plus/minus/boundary."""
        roles: dict[int, tuple[str, str]] = {}
        for g in self.gluings:
            if g.plus[0] == pants_key:
                roles[g.plus[1]] = (g.curve, "plus")
            if g.minus[0] == pants_key:
                roles[g.minus[1]] = (g.curve, "minus")
        for b in self.boundaries:
            if b.slot[0] == pants_key:
                roles[b.slot[1]] = (b.curve, "boundary")
        return [roles[k] for k in range(3)]


def build_decomposition(pants, gluings, boundaries) -> PantsDecomposition:
    """Validate the combinatorics and derive (genus, boundary count).

    The number of pants determines the Euler characteristic and the unglued
    slots determine n, so g = (2 - n + #pants) / 2 must come out a
    nonnegative integer and every slot must be used exactly once.
    """
    pants = tuple(pants)
    gluings = tuple(gluings)
    boundaries = tuple(boundaries)
    if len(set(pants)) != len(pants):
        raise CountMismatch("pants keys must be unique")
    if not pants:
        raise NonNegativeEuler("a decomposition needs at least one pair of pants")
    names = [g.curve for g in gluings] + [b.curve for b in boundaries]
    if len(set(names)) != len(names):
        raise CountMismatch("curve keys must be unique")
    seen: set[Slot] = set()
    valid = {(p, k) for p in pants for k in range(3)}

    def claim(slot: Slot, owner: str):
        if slot not in valid:
            raise CountMismatch(f"{owner} references unknown slot {slot!r}")
        if slot in seen:
            raise SlotReuse(f"slot {slot!r} is used more than once ({owner})")
        seen.add(slot)

    for g in gluings:
        if g.plus == g.minus:
            raise SlotReuse(f"gluing {g.curve!r} pairs slot {g.plus!r} with itself")
        claim(g.plus, f"gluing {g.curve!r}")
        claim(g.minus, f"gluing {g.curve!r}")
    for b in boundaries:
        claim(b.slot, f"boundary {b.curve!r}")
    if len(seen) != 3 * len(pants):
        missing = sorted(valid - seen)
        raise CountMismatch(f"unused slots: {missing!r}")
    n = len(boundaries)
    twice_genus = 2 - n + len(pants)
    if twice_genus < 0 or twice_genus % 2 != 0:
        raise CountMismatch(
            f"{len(pants)} pants with {n} boundary slots do not close up to a surface"
        )
    genus = twice_genus // 2
    if 2 - 2 * genus - n >= 0:
        raise NonNegativeEuler(f"Euler characteristic {2 - 2 * genus - n} is not negative")
    return PantsDecomposition(pants, gluings, boundaries, genus, n)


@dataclass(frozen=True)
class SurfaceGoldman:
    """Goldman coordinates on a decomposed surface.

    ``curves`` maps every curve (internal and boundary) to its invariant in
    the plus-slot orientation, ``uv`` maps internal curves to their
    twist/bulge pair, ``pants`` maps each pants to (s, t).
    """

    curves: dict[str, BoundaryInvariant]
    uv: dict[str, tuple[float, float]]
    pants: dict[str, tuple[float, float]]


@dataclass(frozen=True)
class SurfaceBD:
    """Bonahon-Dreyer coordinates: per-pants shear/triangle tuples plus a
    shear pair per internal curve."""

    pants: dict[str, FGPants]
    curve_shears: dict[str, tuple[float, float]]


def _check_goldman_keys(d: PantsDecomposition, g: SurfaceGoldman):
    if set(g.curves) != set(d.curve_names()):
        raise CountMismatch("curve values do not match the decomposition")
    if set(g.uv) != set(d.internal_curves()):
        raise CountMismatch("uv values must cover exactly the internal curves")
    if set(g.pants) != set(d.pants):
        raise CountMismatch("pants values do not match the decomposition")


def _check_bd_keys(d: PantsDecomposition, b: SurfaceBD):
    if set(b.pants) != set(d.pants):
        raise CountMismatch("pants values do not match the decomposition")
    if set(b.curve_shears) != set(d.internal_curves()):
        raise CountMismatch("curve shears must cover exactly the internal curves")


def _pants_goldman(d: PantsDecomposition, g: SurfaceGoldman, pants_key: str) -> GoldmanPants:
    """Assemble one pants' Goldman tuple, reversing minus-slot orientations."""
    invariants = []
    for curve, role in d.slot_assignment(pants_key):
        inv = g.curves[curve]
        if role == "minus":
            inv = reverse_orientation(inv)
        invariants.append(inv)
    s, t = g.pants[pants_key]
    return GoldmanPants(tuple(invariants), s, t)


def goldman_to_bd(d: PantsDecomposition, g: SurfaceGoldman) -> SurfaceBD:
    """Convert every pants and apply the twist/bulge gauge to every curve."""
    _check_goldman_keys(d, g)
    fg = {}
    for pants_key in d.pants:
        try:
            fg[pants_key] = goldman_to_fg(_pants_goldman(d, g, pants_key))
        except (WindowViolation, DomainViolation) as err:
            raise type(err)(f"pants {pants_key!r}: {err}") from err
    shears = {
        curve: (u - 3.0 * v, u + 3.0 * v) for curve, (u, v) in g.uv.items()
    }
    return SurfaceBD(fg, shears)


@dataclass(frozen=True)
class CurveClosure:
    """Length comparison across one internal curve.

    Reversing orientation swaps the two length functions, so the plus-side
    ell1 must match the minus-side ell2 and vice versa.
    """

    curve: str
    plus_lengths: LengthPair
    minus_lengths: LengthPair

    @property
    def residuals(self) -> tuple[float, float]:
        return (
            abs(self.plus_lengths.ell1 - self.minus_lengths.ell2),
            abs(self.plus_lengths.ell2 - self.minus_lengths.ell1),
        )


@dataclass(frozen=True)
class ClosureReport:
    curves: dict[str, CurveClosure]

    @property
    def max_residual(self) -> float:
        worst = 0.0
        for closure in self.curves.values():
            worst = max(worst, *closure.residuals)
        return worst

    def ok(self, tol: float = CLOSURE_TOL) -> bool:
        return self.max_residual <= tol


def validate_closure(d: PantsDecomposition, b: SurfaceBD) -> ClosureReport:
    """Per-curve closure residuals (total: never raises on finite data)."""
    _check_bd_keys(d, b)
    out = {}
    for g in d.gluings:
        plus_pants, plus_slot = g.plus
        minus_pants, minus_slot = g.minus
        lp = boundary_lengths(b.pants[plus_pants])[plus_slot]
        lm = boundary_lengths(b.pants[minus_pants])[minus_slot]
        out[g.curve] = CurveClosure(g.curve, lp, lm)
    return ClosureReport(out)


def bd_to_goldman(d: PantsDecomposition, b: SurfaceBD) -> SurfaceGoldman:
    """Convert back, reading each internal curve off its plus-side pants."""
    report = validate_closure(d, b)
    if not report.ok():
        bad = {
            key: closure.residuals
            for key, closure in report.curves.items()
            if max(closure.residuals) > CLOSURE_TOL
        }
        raise ClosureViolation(f"closure fails for curves {bad!r}", report)
    goldman = {}
    for pants_key in d.pants:
        try:
            goldman[pants_key] = fg_to_goldman(b.pants[pants_key])
        except DomainViolation as err:
            raise DomainViolation(f"pants {pants_key!r}: {err}") from err
    curves = {}
    for g in d.gluings:
        pants_key, slot = g.plus
        curves[g.curve] = goldman[pants_key].boundary[slot]
    for bslot in d.boundaries:
        pants_key, slot = bslot.slot
        curves[bslot.curve] = goldman[pants_key].boundary[slot]
    uv = {
        curve: (0.5 * (s1 + s2), (-s1 + s2) / 6.0)
        for curve, (s1, s2) in b.curve_shears.items()
    }
    pants = {key: (gp.s, gp.t) for key, gp in goldman.items()}
    return SurfaceGoldman(curves, uv, pants)


def _internal_curve(coords, curve: str, d: Optional[PantsDecomposition]):
    if isinstance(coords, SurfaceGoldman):
        known = coords.curves
        internal = coords.uv
    else:
        internal = coords.curve_shears
        known = dict(internal)
        if d is not None:
            known = {name: None for name in d.curve_names()}
    if curve not in known:
        raise UnknownCurve(f"no curve {curve!r} in these coordinates")
    if curve not in internal:
        raise BoundaryCurve(f"curve {curve!r} is a boundary component, flows need an internal curve")


def twist_flow(coords, curve: str, u: float, *, decomposition: Optional[PantsDecomposition] = None):
    """Translate the coordinates by a twist of size u along an internal curve.

    Acts on the curve's shear pair by (+u, +u), equivalently on the Goldman
    pair by (u, v) -> (u + u0, v); everything else is untouched.
    """
    _internal_curve(coords, curve, decomposition)
    if isinstance(coords, SurfaceGoldman):
        u0, v0 = coords.uv[curve]
        return replace(coords, uv={**coords.uv, curve: (u0 + u, v0)})
    s1, s2 = coords.curve_shears[curve]
    return replace(coords, curve_shears={**coords.curve_shears, curve: (s1 + u, s2 + u)})


def bulge_flow(coords, curve: str, v: float, *, decomposition: Optional[PantsDecomposition] = None):
    """Translate by a bulge of size v: shear pair moves by (-3v, +3v)."""
    _internal_curve(coords, curve, decomposition)
    if isinstance(coords, SurfaceGoldman):
        u0, v0 = coords.uv[curve]
        return replace(coords, uv={**coords.uv, curve: (u0, v0 + v)})
    s1, s2 = coords.curve_shears[curve]
    return replace(coords, curve_shears={**coords.curve_shears, curve: (s1 - 3.0 * v, s2 + 3.0 * v)})


@dataclass(frozen=True)
class CoordinateCount:
    goldman_total: int
    bd_raw: int
    closure_constraints: int


def coordinate_count(genus: int, boundary_count: int) -> CoordinateCount:
    """Coordinate tallies for a surface of the given type.

    goldman_total = 16g + 8n - 16 = 8|chi|, and the raw shear count exceeds
    it by exactly two closure constraints per internal curve.
    """
    chi = 2 - 2 * genus - boundary_count
    if chi >= 0:
        raise NonNegativeEuler(f"Euler characteristic {chi} is not negative")
    counts = CoordinateCount(
        goldman_total=16 * genus + 8 * boundary_count - 16,
        bd_raw=22 * genus + 10 * boundary_count - 22,
        closure_constraints=2 * (3 * genus + boundary_count - 3),
    )
    assert counts.goldman_total == 8 * abs(chi)
    assert counts.bd_raw - counts.closure_constraints == counts.goldman_total
    return counts
