"""Reeb complexity over parallel rulings: rotational cone sweep.

A reflex vertex p stops producing a branch node exactly when the sweep
direction v lies in its closed double cone C_p, so the minimum leaf
count over all parallel rulings is k - c_max + 2 - 2h where c_max is the
maximum number of cones any single direction stabs. Directions live on
the circle mod 180 degrees; each cone is a closed angular interval, so
c_max is a 1-dimensional stabbing problem: sort the 2k interval
endpoints, initialize a counter with the number of cones already
containing the start direction v0 = (0, -1), and walk the circle once,
counting entries before exits at shared angles because the intervals are
closed.

The walk tracks two maxima. The interval maximum is the best coverage
over open arcs between events, i.e. the best any generic direction can
achieve; that is what bounds the ruling leaf count, so it is the c_max
the complexity result reports. The pointwise maximum also counts
isolated event angles and can exceed the interval maximum, e.g. at the
shared edge normal of two adjacent reflex vertices; such a direction
ties two vertex heights, so no valid ruling realizes the higher count.
A gap between the two maxima is reported as the degenerate flag, and
max_cone_coverage (a pure stabbing query, no genericity constraint)
reports the pointwise maximum.

The sweep is implemented twice over the same core: max_cone_coverage
takes materialized DoubleCone objects, while parallel_reeb_complexity
builds the event arrays straight from polygon coordinate arrays, since
constructing tens of thousands of exact cone objects would dominate the
runtime budget. Angles are ordered by float keys with rigorous per-event
error radii; only events whose radii overlap are re-ordered by exact
cross product comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Sequence

import numpy as np

from .exactmath import U, diff_error_bound, overlap_runs, sign
from .geometry import Direction, DoubleCone, Polygon
from .reeb import is_generic

__all__ = [
    "AngularEvent",
    "ComplexityResult",
    "cone_events",
    "max_cone_coverage",
    "parallel_reeb_complexity",
]

_V0 = (Fraction(0), Fraction(-1))      # angular sweep starts straight down
_V0_END = (Fraction(0), Fraction(1))   # v0 rotated by 180 degrees


@dataclass(frozen=True)
class AngularEvent:
    """One cone boundary crossing met by the rotating direction."""

    angle: Direction
    kind: str  # "entry" or "exit"
    cone: DoubleCone


@dataclass(frozen=True)
class ComplexityResult:
    """Minimum leaf count over parallel rulings, with its witness.

    c_max is the interval coverage maximum, so the witness is always a
    generic direction lying in exactly c_max cones and min_leaves is
    attained by an actual ruling. degenerate means some isolated cone
    boundary angle is covered by strictly more than c_max cones; that
    direction ties vertex heights and admits no valid ruling.
    """

    min_leaves: int
    witness: Direction
    c_max: int
    k: int
    h: int
    degenerate: bool

    def as_dict(self) -> dict:
        return {
            "min_leaves": self.min_leaves,
            "c_max": self.c_max,
            "k": self.k,
            "h": self.h,
            "witness": [float(self.witness.dx), float(self.witness.dy)],
            "degenerate": self.degenerate,
        }


def cone_events(cones: Sequence[DoubleCone]) -> tuple[AngularEvent, ...]:
    """The 2k boundary events: one entry and one exit per cone."""
    out = []
    for c in cones:
        out.append(AngularEvent(c.arc_start, "entry", c))
        out.append(AngularEvent(c.arc_end, "exit", c))
    return tuple(out)


# -- shared sweep core ------------------------------------------------------
#
# Directions are parametrized by the rotation s in [0, pi) taking v0
# counterclockwise onto them; the "sweep representative" of a canonical
# direction u is R = -u when u.dx < 0 (s in (0, pi/2)) and R = u when
# u.dx > 0 (s in [pi/2, pi)). R ranges over the seam-free half circle
# from (0,-1) through (1,0) to (0,1), so float angle keys never wrap.
# Directions with u.dx == 0 sit exactly at s = 0: their entries are
# already counted in the initial coverage and their exits happen before
# any positive angle.


class _EventSet:
    """Non-seam events plus exact accessors for tie resolution."""

    __slots__ = ("sf", "kind", "radius", "ids", "exact_vec", "int_pair",
                 "init_count", "seam_exits", "seam_entries")

    def __init__(self, sf, kind, radius, ids, exact_vec, int_pair,
                 init_count, seam_exits, seam_entries):
        self.sf = sf
        self.kind = kind
        self.radius = radius
        self.ids = ids
        self.exact_vec = exact_vec          # original event id -> canonical (dx, dy)
        self.int_pair = int_pair            # same direction, integer components
        self.init_count = init_count
        self.seam_exits = seam_exits
        self.seam_entries = seam_entries


def _cmp_canonical(u, w) -> int:
    """Exact sweep order of two canonical non-seam direction vectors.

    Components may be Fractions or denominator-cleared integers; tie
    clusters use the integer form since symmetric polygons produce one
    coincident event pair per cone and Fraction products are the
    bottleneck at that volume.
    """
    pu = 0 if u[0] < 0 else 1
    pw = 0 if w[0] < 0 else 1
    if pu != pw:
        return pu - pw
    return -sign(u[0] * w[1] - u[1] * w[0])


def _sweep_rep(vec: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Exact sweep representative R of a canonical non-seam direction."""
    if vec[0] < 0:
        return (-vec[0], -vec[1])
    return vec


@dataclass(frozen=True)
class _SweepProfile:
    """Both coverage maxima of one sweep, with their attainment."""

    closed_max: int     # counts isolated event angles (entries before exits)
    interior_max: int   # best coverage over open arcs between events
    interior_arc: tuple  # (lo_R, hi_R): first open arc attaining interior_max
    closed_sel: tuple   # ("interval", lo, hi) or ("point", canonical vec)


def _sweep_select(ev: _EventSet) -> _SweepProfile:
    """Run the angular sweep and locate both coverage maxima.

    interior_arc endpoints are sweep representatives (lo may be v0, hi
    may be v0 + 180 degrees); the arc is never empty because seam events
    were stripped, so every event group sits strictly between the two.
    closed_sel prefers an arc and falls back to the first isolated
    angle, canonical components, when only points attain closed_max.
    """
    init0 = ev.init_count - ev.seam_exits
    m = len(ev.sf)
    if m == 0:
        # no angular events at all: constant coverage
        full = ("interval", _V0, _V0_END)
        return _SweepProfile(ev.init_count, ev.init_count, (_V0, _V0_END), full)

    order = np.argsort(ev.sf, kind="stable")
    group_start = np.ones(m, dtype=bool)
    runs = overlap_runs(ev.sf[order], ev.radius[order])
    if runs:
        order = order.copy()
        for lo, hi in runs:
            pair = {int(t): ev.int_pair(int(ev.ids[t])) for t in order[lo:hi]}
            if hi - lo == 2:
                # by far the common cluster shape: one comparison settles it
                a, b = int(order[lo]), int(order[lo + 1])
                c = _cmp_canonical(pair[a], pair[b])
                if c > 0:
                    order[lo], order[lo + 1] = b, a
                group_start[lo + 1] = c != 0
                continue
            seg = sorted(pair, key=cmp_to_key(lambda a, b: _cmp_canonical(pair[a], pair[b])))
            order[lo:hi] = seg
            for t in range(lo + 1, hi):
                same = _cmp_canonical(pair[int(order[t - 1])], pair[int(order[t])]) == 0
                group_start[t] = not same

    kinds = ev.kind[order]
    starts = np.flatnonzero(group_start)
    ent = np.add.reduceat((kinds > 0).astype(np.int64), starts)
    ext = np.add.reduceat((kinds < 0).astype(np.int64), starts)
    net = np.cumsum(ent - ext)
    c_before = init0 + np.concatenate(([0], net[:-1]))
    point_cov = c_before + ent
    interval_cov = point_cov - ext
    # period identity: cones seen at v0 are the seam entries plus everything
    # still covering the last interval (seam exits end at 180 degrees)
    assert int(interval_cov[-1]) == ev.init_count - ev.seam_entries, \
        "sweep counter did not close the period"
    assert int(interval_cov.min()) >= 0, "negative coverage: entry/exit mislabeled"

    closed_max = max(ev.init_count, int(point_cov.max()))
    interior_max = max(init0, int(interval_cov.max()))

    def group_vec(g: int) -> tuple[Fraction, Fraction]:
        return ev.exact_vec(int(ev.ids[int(order[starts[g]])]))

    n_groups = len(starts)

    def arc_after(g: int):
        # the open arc following event group g; g == -1 is the arc from v0
        lo = _V0 if g < 0 else _sweep_rep(group_vec(g))
        hi = _V0_END if g == n_groups - 1 else _sweep_rep(group_vec(g + 1))
        return lo, hi

    if init0 == interior_max:
        interior_arc = arc_after(-1)
    else:
        interior_arc = arc_after(int(np.flatnonzero(interval_cov == interior_max)[0]))

    if closed_max == interior_max:
        closed_sel = ("interval",) + interior_arc
    elif ev.init_count == closed_max:
        closed_sel = ("point", (Fraction(0), Fraction(1)))
    else:
        g = int(np.flatnonzero(point_cov == closed_max)[0])
        closed_sel = ("point", group_vec(g))
    return _SweepProfile(closed_max, interior_max, interior_arc, closed_sel)


def _angle_keys(xf, yf, ex, ey, phase):
    """Float sweep angles and rigorous radii for canonical components.

    phase is the exact sign of the canonical dx (never 0 here). The
    sweep representative has a nonnegative first component, clamped at 0
    so rounding can never wrap the atan2 across the seam.
    """
    rx = np.maximum(phase * xf, 0.0)
    ry_neg = -(phase * yf)  # minus the representative's second component
    sf = np.arctan2(rx, ry_neg)
    rho2 = np.maximum(rx * rx + ry_neg * ry_neg, np.finfo(float).tiny)
    radius = 4.0 * (ex * np.abs(ry_neg) + ey * rx) / rho2 + 1e-14
    return sf, radius


def _strictly_inside_arc(w: tuple[Fraction, Fraction],
                         lo: tuple[Fraction, Fraction],
                         hi: tuple[Fraction, Fraction]) -> bool:
    """Whether direction w lies strictly inside the open arc lo -> hi.

    lo and hi are sweep representatives less than 180 degrees apart, so
    strict cross product tests against one of w's two vector
    representatives decide membership.
    """

    def inside(wx, wy):
        return (lo[0] * wy - lo[1] * wx > 0) and (wx * hi[1] - wy * hi[0] > 0)

    return inside(w[0], w[1]) or inside(-w[0], -w[1])


def _dyadic_positions():
    """1/4, 3/4, 1/8, 3/8, ...: deterministic bisection order."""
    depth = 2
    while True:
        step = 1.0 / (1 << depth)
        for odd in range(1, 1 << depth, 2):
            yield odd * step
        depth += 1


def _rep_angle(vec: tuple[Fraction, Fraction]) -> float:
    """Float sweep angle of an exact representative (for searching only)."""
    return math.atan2(float(vec[0]), -float(vec[1]))


def _generic_witness(P: Polygon, lo: tuple[Fraction, Fraction],
                     hi: tuple[Fraction, Fraction], budget: int = 512) -> Direction:
    """A generic direction strictly inside the open arc lo -> hi.

    Tries the angular midpoint first, then the exact positive
    combination lo + hi (always strictly inside), then bisects toward
    either endpoint, verifying every candidate exactly, until some
    candidate separates all vertex heights.
    """
    s_lo = _rep_angle(lo)
    s_hi = _rep_angle(hi)

    def try_angle(s: float) -> Direction | None:
        vec = (Fraction(math.sin(s)), Fraction(-math.cos(s)))
        if (vec[0] or vec[1]) and _strictly_inside_arc(vec, lo, hi):
            cand = Direction(vec[0], vec[1])
            if is_generic(P, cand):
                return cand
        return None

    found = try_angle(0.5 * (s_lo + s_hi))
    if found is not None:
        return found
    mx, my = lo[0] + hi[0], lo[1] + hi[1]
    if mx or my:
        cand = Direction(mx, my)
        if is_generic(P, cand):
            return cand
    tried = 0
    for t in _dyadic_positions():
        found = try_angle(s_lo + (s_hi - s_lo) * t)
        if found is not None:
            return found
        tried += 1
        if tried >= budget:
            raise RuntimeError(
                "no generic direction found inside the optimal angular interval")


def max_cone_coverage(cones: Sequence[DoubleCone]) -> tuple[int, Direction]:
    """Maximum number of closed cones a single direction lies in.

    Returns (c_max, witness). This is the pointwise count: two cones
    sharing a single boundary direction score 2 there. The witness
    attains c_max, strictly inside an attaining arc when one exists,
    otherwise the isolated boundary direction itself. It is not
    genericity adjusted; that is the caller's concern.
    """
    events = cone_events(cones)
    if not events:
        return 0, Direction(1, 0)
    v0 = Direction(0, -1)
    init = sum(1 for c in cones if c.contains(v0))

    keep_ids = []
    seam_entries = seam_exits = 0
    for j, evt in enumerate(events):
        if evt.angle.dx == 0:
            if evt.kind == "entry":
                seam_entries += 1
            else:
                seam_exits += 1
        else:
            keep_ids.append(j)

    ids = np.array(keep_ids, dtype=np.intp)
    xf = np.array([events[j].angle.fdx for j in keep_ids])
    yf = np.array([events[j].angle.fdy for j in keep_ids])
    phase = np.array([-1.0 if events[j].angle.dx < 0 else 1.0 for j in keep_ids])
    kind = np.array([1 if events[j].kind == "entry" else -1 for j in keep_ids],
                    dtype=np.int8)
    sf, radius = _angle_keys(xf, yf, U * np.abs(xf), U * np.abs(yf), phase)

    def exact_vec(j: int) -> tuple[Fraction, Fraction]:
        d = events[j].angle
        return (d.dx, d.dy)

    def int_pair(j: int) -> tuple[int, int]:
        vx, vy = exact_vec(j)
        return (vx.numerator * vy.denominator, vy.numerator * vx.denominator)

    ev = _EventSet(sf, kind, radius, ids, exact_vec, int_pair,
                   init, seam_exits, seam_entries)
    prof = _sweep_select(ev)
    skind, *data = prof.closed_sel
    if skind == "interval":
        lo, hi = data
        witness = Direction(lo[0] + hi[0], lo[1] + hi[1])
    else:
        (vec,) = data
        witness = Direction(vec[0], vec[1])
    return prof.closed_max, witness


def _filtered_sign_array(vals: np.ndarray, errs: np.ndarray,
                         exact_at: Callable[[int], Fraction]) -> np.ndarray:
    """Per-element exact signs, resolving uncertain lanes with Fractions."""
    out = np.where(vals > errs, 1, np.where(vals < -errs, -1, 0)).astype(np.int64)
    for i in np.flatnonzero(np.abs(vals) <= errs):
        out[i] = sign(exact_at(int(i)))
    return out


def parallel_reeb_complexity(P: Polygon) -> ComplexityResult:
    """Reeb complexity of P over parallel rulings: min_leaves with witness.

    Builds the cone boundary events directly from the polygon's
    coordinate arrays (one vectorized pass plus exact fallback lanes)
    and runs the angular sweep. The witness is always drawn from the
    interior of a best open arc and perturbed within it until generic,
    so reeb_graph(P, witness) realizes min_leaves even when the flag
    marks a higher boundary-only pointwise count.
    """
    reflex_ids = P.reflex_indices()
    k = len(reflex_ids)
    h = P.h
    if k == 0:
        witness = _generic_witness(P, _V0, _V0_END)
        return ComplexityResult(2 - 2 * h, witness, 0, 0, h, False)

    r = np.array(reflex_ids, dtype=np.intp)
    X = P._coords[:, 0]
    Y = P._coords[:, 1]
    rp = P._prev[r]
    rn = P._next[r]
    d1x = X[rp] - X[r]
    d1y = Y[rp] - Y[r]
    d2x = X[rn] - X[r]
    d2y = Y[rn] - Y[r]
    e1x = diff_error_bound(d1x, X[rp], X[r])
    e1y = diff_error_bound(d1y, Y[rp], Y[r])
    e2x = diff_error_bound(d2x, X[rn], X[r])
    e2y = diff_error_bound(d2y, Y[rn], Y[r])

    pts = P._pts
    prev = P._prev
    nxt = P._next

    def exact_d(i: int, which: int) -> tuple[Fraction, Fraction]:
        gid = int(r[i])
        p = pts[gid]
        q = pts[int(prev[gid])] if which == 1 else pts[int(nxt[gid])]
        return (q.x - p.x, q.y - p.y)

    s1x = _filtered_sign_array(d1x, e1x, lambda i: exact_d(i, 1)[0])
    s1y = _filtered_sign_array(d1y, e1y, lambda i: exact_d(i, 1)[1])
    s2x = _filtered_sign_array(d2x, e2x, lambda i: exact_d(i, 2)[0])
    s2y = _filtered_sign_array(d2y, e2y, lambda i: exact_d(i, 2)[1])

    # v0 = (0,-1) lies in the cone iff sign(d1y) * sign(d2y) <= 0
    init = int(np.count_nonzero(s1y * s2y <= 0))

    # raw normals: entry (d1y, -d1x), exit (d2y, -d2x); canonical flip when
    # the y component is negative, or zero with negative x component
    def build(dy, dx, sy, sx, e_dx, e_dy):
        # event direction raw = (dy, -dx): x error is e_dy, y error is e_dx
        flip = (sx > 0) | ((sx == 0) & (sy < 0))
        fsign = np.where(flip, -1.0, 1.0)
        cx = fsign * dy
        cy = fsign * (-dx)
        seam = sy == 0
        phase = np.where(flip, -sy, sy).astype(np.float64)
        return cx, cy, e_dy, e_dx, phase, seam

    en_cx, en_cy, en_xe, en_ye, en_ph, en_seam = build(d1y, d1x, s1y, s1x, e1x, e1y)
    ex_cx, ex_cy, ex_xe, ex_ye, ex_ph, ex_seam = build(d2y, d2x, s2y, s2x, e2x, e2y)

    seam_entries = int(np.count_nonzero(en_seam))
    seam_exits = int(np.count_nonzero(ex_seam))

    keep_en = ~en_seam
    keep_ex = ~ex_seam
    cx = np.concatenate([en_cx[keep_en], ex_cx[keep_ex]])
    cy = np.concatenate([en_cy[keep_en], ex_cy[keep_ex]])
    x_err = np.concatenate([en_xe[keep_en], ex_xe[keep_ex]])
    y_err = np.concatenate([en_ye[keep_en], ex_ye[keep_ex]])
    phase = np.concatenate([en_ph[keep_en], ex_ph[keep_ex]])
    kind = np.concatenate([
        np.ones(int(np.count_nonzero(keep_en)), dtype=np.int8),
        -np.ones(int(np.count_nonzero(keep_ex)), dtype=np.int8),
    ])
    ids = np.concatenate([np.flatnonzero(keep_en), k + np.flatnonzero(keep_ex)])
    sf, radius = _angle_keys(cx, cy, x_err, y_err, phase)

    def exact_vec(event_id: int) -> tuple[Fraction, Fraction]:
        i, which = (event_id, 1) if event_id < k else (event_id - k, 2)
        dx, dy = exact_d(i, which)
        vx, vy = dy, -dx
        if vy < 0 or (vy == 0 and vx < 0):
            vx, vy = -vx, -vy
        return (vx, vy)

    # denominator-cleared vertex coordinates, built on the first angular
    # tie; symmetric polygons tie on nearly every event, so the clusters
    # must run on machine/big ints rather than Fractions
    int_coords: dict = {}

    def int_pair(event_id: int) -> tuple[int, int]:
        if not int_coords:
            dens = set()
            for p_ in pts:
                dens.add(p_.x.denominator)
                dens.add(p_.y.denominator)
            s = math.lcm(*dens)
            int_coords["x"] = [p_.x.numerator * (s // p_.x.denominator) for p_ in pts]
            int_coords["y"] = [p_.y.numerator * (s // p_.y.denominator) for p_ in pts]
        ix = int_coords["x"]
        iy = int_coords["y"]
        i, which = (event_id, 1) if event_id < k else (event_id - k, 2)
        gid = int(r[i])
        nb = int(prev[gid]) if which == 1 else int(nxt[gid])
        vx = iy[nb] - iy[gid]
        vy = ix[gid] - ix[nb]
        if vy < 0 or (vy == 0 and vx < 0):
            vx, vy = -vx, -vy
        return (vx, vy)

    ev = _EventSet(sf, kind, radius, ids, exact_vec, int_pair,
                   init, seam_exits, seam_entries)
    prof = _sweep_select(ev)
    c_max = prof.interior_max
    witness = _generic_witness(P, *prof.interior_arc)
    degenerate = prof.closed_max > c_max
    return ComplexityResult(k - c_max + 2 - 2 * h, witness, c_max, k, h, degenerate)
