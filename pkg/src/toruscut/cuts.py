"""Contact cuts: validation, reduction, classification, and slicing.

A cut datum is a contact form on T^2 x [0, 1] together with two primitive
collapse vectors v0, v1.  The cut space collapses each boundary orbit of
the circle generated by v0 at t = 0 and by v1 at t = 1; for that to make
sense the corresponding moment functions must vanish exactly on their
boundary torus and be positive just inside.  Both conditions are decided
exactly from the angle data.

The closed cut space is two solid tori glued along their boundary, so it
is S^3, S^1 x S^2, or a lens space; classify_lens normalizes the pair
(v0, v1) by an integral basis change of determinant one and reports the
resulting slope and shear-normal form.

contact_reduce computes the reduced circles sitting over the zeros of a
moment function, with the coefficient of the reduced 1-form, and
slice_by_ray chops a form on a long interval into the maximal cut pieces
carved out by one moment inequality f_eta >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .angles import (
    Angle,
    Direction,
    QUARTER_TURN,
    add_half_turns,
    add_turns,
    angle_add,
    angle_compare,
    angle_sub,
    ceil_turns,
    direction_angle,
    floor_turns,
)
from .errors import (
    InvalidCutSpec,
    NonMonotone,
    SliceNotRepresentable,
    ZeroSlopeSegment,
)
from .forms import (
    InvariantContactForm,
    ProfilePoint,
    contact_check,
)


def _dir(v) -> Direction:
    if isinstance(v, Direction):
        return v
    return Direction(*v)


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(r, s) with r*a + s*b = gcd(a, b), by the extended Euclid scheme."""
    r0, s0, g0 = 1, 0, a
    r1, s1, g1 = 0, 1, b
    while g1:
        q = g0 // g1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        g0, g1 = g1, g0 - q * g1
    if g0 < 0:
        return -r0, -s0
    return r0, s0


@dataclass(frozen=True)
class CutSpec:
    """Cut datum: a form on T^2 x [0, 1] with collapse vectors at the ends.

    Forms on other intervals are reparametrized affinely onto [0, 1] on
    construction; nothing downstream depends on the parametrization.
    """

    form: InvariantContactForm
    v0: Direction
    v1: Direction

    def __post_init__(self):
        object.__setattr__(self, "v0", _dir(self.v0))
        object.__setattr__(self, "v1", _dir(self.v1))
        if self.form.domain != (Fraction(0), Fraction(1)):
            object.__setattr__(self, "form", self.form.reparametrized(0, 1))


@dataclass(frozen=True)
class Violation:
    """One failed validity condition of a cut datum."""

    code: str  # "not-contact" | "nonzero-boundary-moment" | "wrong-sign"
    end: int | None  # boundary side 0 or 1; None for form-level failures
    message: str


class LensKind(Enum):
    SPHERE = "Sphere3"
    S1XS2 = "S1xS2"
    LENS = "Lens"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LensDescriptor:
    """Classification of the closed cut space.

    raw_basis_data is the image (x, y) of v1 under a determinant-one basis
    change sending v0 to (0, 1); x = -cross(v0, v1) is canonical while y is
    defined up to the shear y + n*x, which normal_form = (x, y mod x)
    absorbs.  slope is y/x in lowest terms (None when x = 0, where the
    space is S^1 x S^2); an integer slope gives the 3-sphere.
    """

    kind: LensKind
    slope: Fraction | None
    normal_form: tuple[int, int] | None
    raw_basis_data: tuple[int, int]


@dataclass(frozen=True)
class ReducedCircle:
    """A reduced circle over one zero of the eta-moment.

    The zero sits where phi crosses the half-turn lattice through
    Arg(-n, m); index is the lattice index j of the crossing, angle the
    exact value phi(t*), and point the exact parameter description.  The
    reduced 1-form on the quotient circle is coefficient * dv in the
    coordinate v dual to the recorded complement of eta; the coefficient
    is (-1)^(j+1) r(t*) / |eta|, never zero.
    """

    index: int
    angle: Angle
    point: ProfilePoint
    sign: int
    coefficient: float
    complement: Direction


def _boundary_checks(
    form: InvariantContactForm, v: Direction, end: int, orientation: int
) -> list[Violation]:
    phi = form.phi
    value = phi.values[0] if end == 0 else phi.values[-1]
    base = direction_angle((-v.y, v.x))
    rel = angle_sub(value, base)
    if rel.dir.as_tuple() not in ((1, 0), (-1, 0)):
        f = form.covector_float(float(phi.t0 if end == 0 else phi.t1))
        return [
            Violation(
                "nonzero-boundary-moment",
                end,
                f"moment of ({v.x},{v.y}) at t={end} is "
                f"{v.x * f[0] + v.y * f[1]:.12g}, not zero",
            )
        ]
    # Just inside, phi moves by +orientation*dt from t=0 (by -orientation*dt
    # into t=1), so the moment's interior sign is the sign of the dot
    # product of the quarter-turned boundary direction with v.
    d = value.dir
    inward = orientation if end == 0 else -orientation
    rotated = (-d.y * inward, d.x * inward)
    if rotated[0] * v.x + rotated[1] * v.y < 0:
        return [
            Violation(
                "wrong-sign",
                end,
                f"moment of ({v.x},{v.y}) is negative just inside t={end}",
            )
        ]
    return []


def validate_cutspec(spec: CutSpec) -> list[Violation]:
    """All violated cut conditions; an empty list means the datum is valid.

    Conditions: the form is contact; the v0-moment vanishes exactly at
    t = 0 and is positive on (0, eps); mirror conditions for v1 at t = 1.
    Everything is decided in integer arithmetic on the angle data.
    """
    try:
        orientation = contact_check(spec.form)
    except (ZeroSlopeSegment, NonMonotone) as e:
        return [Violation("not-contact", None, str(e))]
    return _boundary_checks(spec.form, spec.v0, 0, orientation) + _boundary_checks(
        spec.form, spec.v1, 1, orientation
    )


def require_valid(spec: CutSpec) -> None:
    violations = validate_cutspec(spec)
    if violations:
        raise InvalidCutSpec(violations)


def classify_lens(spec: CutSpec) -> LensDescriptor:
    """Classify the closed cut space of a valid cut datum.

    Chooses A in SL(2, Z) with A v0 = (0, 1) and reads off A v1 = (x, y).
    x = -cross(v0, v1) does not depend on the choice; y does, up to adding
    multiples of x.  x = 0 gives S^1 x S^2, integer slope y/x gives the
    3-sphere, anything else a genuine lens space.
    """
    require_valid(spec)
    a, b = spec.v0.as_tuple()
    c, d = spec.v1.as_tuple()
    r, s = _bezout(a, b)
    x = b * c - a * d
    y = r * c + s * d
    if x == 0:
        return LensDescriptor(LensKind.S1XS2, None, None, (x, y))
    slope = Fraction(y, x)
    kind = LensKind.SPHERE if y % x == 0 else LensKind.LENS
    return LensDescriptor(kind, slope, (x, y % x), (x, y))


def complement_vector(eta: Direction) -> Direction:
    """The canonical complement zeta with cross(zeta, eta) = 1.

    Among the solutions zeta + k*eta, picks the one whose projection onto
    eta lies in [0, 1), i.e. 0 <= dot(zeta, eta) < |eta|^2.
    """
    # cross((p, q), (m, n)) = p*n - q*m = 1
    p, s = _bezout(eta.y, -eta.x)
    zeta = (p, s)
    norm2 = eta.x * eta.x + eta.y * eta.y
    k = (zeta[0] * eta.x + zeta[1] * eta.y) // norm2
    return Direction(zeta[0] - k * eta.x, zeta[1] - k * eta.y)


def contact_reduce(form: InvariantContactForm, eta) -> list[ReducedCircle]:
    """All reduced circles of the eta-moment's zero level, ordered by t."""
    eta = _dir(eta)
    contact_check(form)
    base = direction_angle((-eta.y, eta.x))
    zeta = complement_vector(eta)
    mag = math.hypot(eta.x, eta.y)
    out = []
    for j, pt in form.phi.solve_half_turn_lattice(base):
        t = pt.t_fraction()
        r = (
            float(form.radial.evaluate(t))
            if t is not None
            else form.radial.evaluate_float(pt.t_float())
        )
        sign = 1 if j % 2 else -1
        out.append(
            ReducedCircle(
                index=j,
                angle=add_half_turns(base, j),
                point=pt,
                sign=sign,
                coefficient=sign * r / mag,
                complement=zeta,
            )
        )
    return out


def slice_by_ray(
    line_form: InvariantContactForm, eta, window: tuple[Angle, Angle]
) -> list[CutSpec]:
    """Cut pieces carved out of a long form by the inequality f_eta >= 0.

    The window is a pair of angle values restricting the relevant range of
    phi.  The moment of eta is nonnegative exactly where phi lies in
    [Arg(eta) - pi/2 + 2 pi j, Arg(eta) + pi/2 + 2 pi j]; every such
    interval contained in both the window and the swept range becomes one
    CutSpec with both collapse vectors equal to eta, while intervals cut
    off by the window or the domain are dropped.  Raises
    SliceNotRepresentable when an interval endpoint is not a rational
    parameter (never the case for the profiles built by this package's
    constructors with breakpoint values commensurable with eta's angle).
    """
    eta = _dir(eta)
    orientation = contact_check(line_form)
    w0, w1 = window
    if angle_compare(w0, w1) >= 0:
        raise ValueError("window must be an increasing pair of angles")
    phi = line_form.phi
    beta = direction_angle(eta)
    v_lo, v_hi = phi.value_bounds()
    lo = max(w0, v_lo)
    hi = min(w1, v_hi)
    start = angle_sub(beta, QUARTER_TURN)
    stop = angle_add(beta, QUARTER_TURN)
    j_min = ceil_turns(angle_sub(lo, start), 1)
    j_max = floor_turns(angle_sub(hi, stop), 1)
    pieces = []
    for j in range(j_min, j_max + 1):
        a, b = add_turns(start, j), add_turns(stop, j)
        pa, pb = phi.solve(a), phi.solve(b)
        ta, tb = pa.t_fraction(), pb.t_fraction()
        if ta is None or tb is None:
            raise SliceNotRepresentable(
                f"slice endpoint at phi = {b if ta is not None else a} "
                "is not a rational parameter"
            )
        if orientation > 0:
            t_l, v_l, t_r, v_r = ta, a, tb, b
        else:
            t_l, v_l, t_r, v_r = tb, b, ta, a
        piece = InvariantContactForm(
            phi.restricted_exact(t_l, v_l, t_r, v_r),
            line_form.radial.restricted(t_l, t_r),
        )
        pieces.append((t_l, CutSpec(piece, eta, eta)))
    pieces.sort(key=lambda p: p[0])
    return [spec for _, spec in pieces]
