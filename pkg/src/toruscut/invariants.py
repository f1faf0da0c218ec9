"""Equivariant invariants of cut spaces and their certificates.

The central invariant counts connected components of the preimage of an
open ray under the torus moment map.  For a cut datum this is a lattice
count: the ray through xi meets the moment image once for every angle
congruent to Arg(xi) mod 2 pi inside the swept interval [phi(0), phi(1)],
and each hit is one component (a torus at interior parameters, a circle
at a collapsed boundary).  Everything here is therefore derived from
exact angle arithmetic; no invariant ever depends on the radial profile.

cc_profile packages the whole function xi -> count: it is constant on the
two arcs cut out by the endpoint directions, taking values q and q + 1
with q the number of whole turns swept.  distinguish searches those arcs
for directions witnessing that two cut data cannot be matched by an
equivariant contactomorphism (in either orientation of the ray), or
compares the relabeling-invariant summary (min, max) when torus
automorphisms are allowed.

detect_overtwisted locates the standard disk family: as soon as the sweep
strictly exceeds pi, the parameter t* where phi has advanced by exactly pi
from a collapsed end bounds a disk whose boundary is tangent to the
contact planes.  homotopy_certificate connects two cut forms with the
same boundary directions through the straight-line interpolation of unit
covectors pushed off zero by the bump s(1 - s) in a third coordinate;
its planar zeros are enumerated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .angles import (
    Angle,
    Direction,
    ZERO_ANGLE,
    add_half_turns,
    add_turns,
    angle_add,
    angle_compare,
    angle_mul_int,
    angle_sub,
    ceil_turns,
    count_lattice,
    direction_angle,
    floor_div_2pi,
    floor_turns,
    is_zero,
)
from .cuts import CutSpec, require_valid
from .errors import EndpointMismatch
from .forms import AngleProfile, InvariantContactForm, ProfilePoint

MODE_FIXED = "fixed-action"
MODE_GL2Z = "modulo-GL2Z"

_STANDARD_DIRECTIONS = (
    Direction(1, 0),
    Direction(1, 1),
    Direction(0, 1),
    Direction(-1, 1),
    Direction(-1, 0),
    Direction(-1, -1),
    Direction(0, -1),
    Direction(1, -1),
)


def _phi_of(obj) -> AngleProfile:
    # cut data are validated; bare forms and profiles are taken as-is
    if isinstance(obj, CutSpec):
        require_valid(obj)
        return obj.form.phi
    if isinstance(obj, InvariantContactForm):
        return obj.phi
    return obj


def _form_of(obj) -> InvariantContactForm:
    return obj.form if isinstance(obj, CutSpec) else obj


@dataclass(frozen=True)
class Arc:
    """One arc of directions with a constant ray-component count.

    start/end are direction angles in the standard branch; the first arc
    of a profile is closed (count attained at both endpoints), the second
    open.  span is exact; sum over arcs of span x count telescopes to the
    sweep.
    """

    start: Angle
    end: Angle
    span: Angle
    count: int


@dataclass(frozen=True)
class CCProfile:
    """The full ray-count function of a cut datum.

    q whole turns plus a partial arc rho are swept, so the count is q + 1
    for rays meeting the partial arc (a single closed arc of length rho)
    and q elsewhere.  max_count is q + 1 even when rho = 0: the single
    endpoint direction then still collects both interval endpoints.
    """

    arcs: tuple[Arc, ...]
    min_count: int
    max_count: int
    swept: Angle


def cc_count(spec, xi) -> int:
    """Components of the preimage of the open ray through xi.

    One lattice count: solutions of phi(t) = Arg(xi) mod 2 pi over the
    closed parameter interval, both endpoints included.
    """
    phi = _phi_of(spec)
    lo, hi = phi.value_bounds()
    return count_lattice(direction_angle(xi), lo, hi)


def cc_profile(spec) -> CCProfile:
    """The count as a function of the ray, as exact arcs."""
    phi = _phi_of(spec)
    lo, hi = phi.value_bounds()
    swept = angle_sub(hi, lo)
    q = floor_div_2pi(swept)
    c_lo = Angle(lo.dir)
    c_hi = Angle(hi.dir)
    rho = angle_sub(c_hi, c_lo)
    if angle_compare(rho, ZERO_ANGLE) < 0:
        rho = add_turns(rho, 1)
    if is_zero(rho):
        arcs = (Arc(c_lo, c_lo, add_turns(ZERO_ANGLE, 1), q),)
    else:
        arcs = (
            Arc(c_lo, c_hi, rho, q + 1),
            Arc(c_hi, c_lo, angle_sub(add_turns(ZERO_ANGLE, 1), rho), q),
        )
    return CCProfile(arcs=arcs, min_count=q, max_count=q + 1, swept=swept)


@dataclass(frozen=True)
class DistinguishWitness:
    """Directions certifying two cut data carry different invariants.

    In fixed-action mode both fields are set: counts differ along xi_plus,
    and along xi_minus with the second datum's ray negated (the two
    orientation cases an equivariant map could induce).  In
    modulo-GL2Z mode the comparison is between the relabeling-invariant
    summaries (min, max); xi_plus records one direction realizing the
    difference and xi_minus is None.
    """

    mode: str
    xi_plus: Direction
    counts_plus: tuple[int, int]
    xi_minus: Direction | None
    counts_minus: tuple[int, int] | None
    summary_a: tuple[int, int]
    summary_b: tuple[int, int]


def _critical_directions(*specs) -> list[Direction]:
    dirs = set(_STANDARD_DIRECTIONS)
    for spec in specs:
        phi = _phi_of(spec)
        for v in (phi.values[0], phi.values[-1]):
            dirs.add(v.dir)
            dirs.add(-v.dir)
    ordered = sorted(dirs, key=lambda d: (Angle(d),))
    # One representative inside each gap; consecutive standard directions
    # are pi/4 apart, so every gap is shorter than pi and the vector sum
    # of its endpoints lies strictly inside it.
    out = list(ordered)
    for d1, d2 in zip(ordered, ordered[1:] + ordered[:1]):
        if d1 == d2:
            continue
        out.append(Direction.reduced(d1.x + d2.x, d1.y + d2.y))
    out.sort(key=lambda d: (Angle(d),))
    return out


def distinguish(a, b, mode: str = MODE_FIXED) -> DistinguishWitness | None:
    """A witness that the two cut data differ, or None if this invariant
    cannot tell them apart.

    fixed-action mode requires both orientation cases to be witnessed;
    modulo-GL2Z mode compares the (min, max) summaries, which relabelings
    of the torus by GL(2, Z) cannot change since they permute rays.
    """
    pa, pb = cc_profile(a), cc_profile(b)
    sa = (pa.min_count, pa.max_count)
    sb = (pb.min_count, pb.max_count)
    if mode == MODE_GL2Z:
        if sa == sb:
            return None
        for xi in _critical_directions(a, b):
            ca, cb = cc_count(a, xi), cc_count(b, xi)
            if ca != cb:
                return DistinguishWitness(mode, xi, (ca, cb), None, None, sa, sb)
        return None  # unreachable: differing summaries force a differing ray
    if mode != MODE_FIXED:
        raise ValueError(f"unknown mode: {mode!r}")
    plus = minus = None
    for xi in _critical_directions(a, b):
        ca = cc_count(a, xi)
        if plus is None:
            cb = cc_count(b, xi)
            if ca != cb:
                plus = (xi, (ca, cb))
        if minus is None:
            cbn = cc_count(b, -xi)
            if ca != cbn:
                minus = (xi, (ca, cbn))
        if plus and minus:
            return DistinguishWitness(
                mode, plus[0], plus[1], minus[0], minus[1], sa, sb
            )
    return None


@dataclass(frozen=True)
class OvertwistedCertificate:
    """Data of one disk of the standard overtwisted family.

    The profile advances by exactly j pi from the collapsed boundary on
    the recorded side to the interior parameter t*; the disk over the
    segment from that boundary to t*, at any fixed value c of the
    complementary invariant circle coordinate, has boundary tangent to
    the contact planes.
    """

    side: int
    j: int
    point: ProfilePoint
    target: Angle
    fixed_coordinate: float
    description: str


def detect_overtwisted(spec) -> OvertwistedCertificate | None:
    """The smallest disk certificate of the standard family, or None.

    A disk exists as soon as the total sweep strictly exceeds pi: the
    parameter where phi has advanced by pi from the t = 0 boundary is
    then interior.  Ties at exactly pi put the advance on the far
    boundary, which is collapsed, so no certificate.  None is not a
    tightness proof, only the absence of this family.
    """
    phi = _phi_of(spec)
    orientation = phi.orientation()
    swept = angle_sub(phi.values[-1], phi.values[0])
    magnitude = swept if orientation > 0 else angle_sub(ZERO_ANGLE, swept)
    if angle_compare(magnitude, add_half_turns(ZERO_ANGLE, 1)) <= 0:
        return None
    target = add_half_turns(phi.values[0], orientation)
    point = phi.solve(target)
    return OvertwistedCertificate(
        side=0,
        j=1,
        point=point,
        target=target,
        fixed_coordinate=0.0,
        description=(
            "disk over t in [0, t*] at fixed complementary coordinate; "
            "boundary tangent to the contact planes where the profile has "
            "advanced by pi from the collapsed side"
        ),
    )


@dataclass(frozen=True)
class PlanarZero:
    """A parameter where the interpolated planar covectors cancel.

    At s = 1/2 the straight-line interpolation of the two unit covectors
    vanishes exactly where the profiles differ by an odd multiple of pi;
    the third component of the homotopy is then 1/4.
    """

    point: ProfilePoint
    odd_multiple: int
    s: float = 0.5
    third_component: Fraction = Fraction(1, 4)


@dataclass(frozen=True)
class HomotopyCertificate:
    """An explicit nowhere-zero homotopy between two cut covector fields.

    H(s, t) = ((1-s) cos a(t) + s cos b(t), (1-s) sin a(t) + s sin b(t),
    s(1-s)) with a, b the two angle profiles.  The third component
    vanishes only at s in {0, 1}, where the planar part is a unit vector,
    so H is never zero; the planar part vanishes only at s = 1/2 over the
    enumerated zeros and intervals, where |H| = 1/4.
    """

    form_a: InvariantContactForm
    form_b: InvariantContactForm
    rule: str
    zeros: tuple[PlanarZero, ...]
    zero_intervals: tuple[tuple[Fraction, Fraction], ...]
    argument: str


_H_RULE = (
    "H(s,t) = ((1-s) cos a(t) + s cos b(t), (1-s) sin a(t) + s sin b(t), s(1-s))"
)
_H_ARGUMENT = (
    "the third component s(1-s) is positive for 0 < s < 1; at s = 0 and "
    "s = 1 the planar part is a unit covector; hence H never vanishes, "
    "and |H| = 1/4 at the planar zeros listed"
)


def _scaled_value(phi: AngleProfile, seg: int, lam: Fraction, q: int) -> Angle:
    """q * phi at the point of segment seg with local coordinate lam."""
    v = phi.values[seg]
    sweep = angle_sub(phi.values[seg + 1], phi.values[seg])
    scaled = angle_mul_int(v, q)
    step = lam * q
    assert step.denominator == 1
    return angle_add(scaled, angle_mul_int(sweep, step.numerator))


def _lambda_pair(
    phi: AngleProfile, u0: Fraction, u1: Fraction
) -> tuple[int, Fraction, Fraction]:
    """Segment index of phi containing [u0, u1] with both local coordinates.

    Assumes [u0, u1] comes from a refinement of phi's breakpoints, so it
    lies inside a single segment.
    """
    i = phi._segment_of(u0)
    t_lo, t_hi = phi.breaks[i], phi.breaks[i + 1]
    den = t_hi - t_lo
    return i, (u0 - t_lo) / den, (u1 - t_lo) / den


def homotopy_certificate(a, b) -> HomotopyCertificate:
    """Nowhere-zero interpolation between the unit covector fields.

    Requires both boundary directions to agree (turn counts are free); the
    planar zeros, where the profiles differ by an odd multiple of pi, are
    enumerated exactly segment by segment after clearing denominators.
    """
    fa, fb = _form_of(a), _form_of(b)
    if fa.domain != fb.domain:
        raise ValueError("forms must share their parameter domain")
    pa, pb = fa.phi, fb.phi
    for end, (va, vb) in enumerate(
        ((pa.values[0], pb.values[0]), (pa.values[-1], pb.values[-1]))
    ):
        if va.dir != vb.dir:
            raise EndpointMismatch(end, va.dir, vb.dir)

    merged = sorted(set(pa.breaks) | set(pb.breaks))
    zeros: list[tuple[float, PlanarZero]] = []
    intervals: list[tuple[Fraction, Fraction]] = []
    for seg, (u0, u1) in enumerate(zip(merged, merged[1:])):
        ia, la0, la1 = _lambda_pair(pa, u0, u1)
        ib, lb0, lb1 = _lambda_pair(pb, u0, u1)
        q = math.lcm(
            la0.denominator, la1.denominator, lb0.denominator, lb1.denominator
        )
        q0 = angle_sub(_scaled_value(pa, ia, la0, q), _scaled_value(pb, ib, lb0, q))
        q1 = angle_sub(_scaled_value(pa, ia, la1, q), _scaled_value(pb, ib, lb1, q))
        half = add_half_turns(ZERO_ANGLE, q)  # q * pi
        span = angle_sub(q1, q0)
        if is_zero(span):
            rel = angle_sub(q0, half)
            if rel.dir.as_tuple() == (1, 0) and rel.turns % q == 0:
                if intervals and intervals[-1][1] == u0:
                    intervals[-1] = (intervals[-1][0], u1)
                else:
                    intervals.append((u0, u1))
            continue
        v_lo, v_hi = (q0, q1) if angle_compare(q0, q1) < 0 else (q1, q0)
        n_lo = ceil_turns(angle_sub(v_lo, half), q)
        n_hi = floor_turns(angle_sub(v_hi, half), q)
        for n in range(n_lo, n_hi + 1):
            target = add_turns(half, q * n)
            offset = angle_sub(target, q0)
            if is_zero(offset) and seg > 0:
                continue  # the hit belongs to the previous segment's end
            pt = ProfilePoint(seg, u0, u1, offset, span)
            zeros.append((pt.t_float(), PlanarZero(pt, odd_multiple=2 * n + 1)))
    intervals_t = tuple(intervals)
    kept = []
    for pos, z in sorted(zeros, key=lambda x: x[0]):
        t = z.point.t_fraction()
        if t is not None and any(lo <= t <= hi for lo, hi in intervals_t):
            continue  # already covered by a constant zero interval
        kept.append(z)
    return HomotopyCertificate(
        form_a=fa,
        form_b=fb,
        rule=_H_RULE,
        zeros=tuple(kept),
        zero_intervals=intervals_t,
        argument=_H_ARGUMENT,
    )
