"""Polygons with holes over exact rational coordinates.

Coordinates are Fractions and every geometric decision is made from
exact signs; float mirrors of all coordinates are kept alongside for
numpy fast paths and filtered scalar predicates (see exactmath).

The polygon file format is a UTF-8 JSON document

    {"outer": [[x, y], ...], "holes": [[[x, y], ...], ...]}

with numbers given as decimal literals. Decimals parse to exact
Fractions and are re-emitted as exact decimal strings, so a
generate -> load -> emit cycle is byte identical.

Vertices are addressed by a single global index (the outer ring first,
then each hole in order); edge i joins vertex i to the next vertex of
the same ring.
"""

from __future__ import annotations

import decimal
import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exactmath import (
    U,
    cross_error_bound,
    diff_error_bound,
    exact_cross,
    exact_dot,
    orient_sign,
    sign,
)

__all__ = [
    "PolygonError",
    "PolygonParseError",
    "TooFewVerticesError",
    "SlitVertexError",
    "SelfIntersectionError",
    "HolePlacementError",
    "NonReflexVertexError",
    "Point",
    "Direction",
    "Ring",
    "Polygon",
    "DoubleCone",
    "load_polygon",
    "dump_polygon",
    "is_reflex",
    "reflex_vertices",
    "cone_of",
    "cone_contains",
    "as_fraction",
]

# Above this many vertices per ring the dense all-pairs bbox prefilter
# for self-intersection would allocate too much; fall back to a sweep.
_DENSE_VALIDATION_LIMIT = 4096


class PolygonError(ValueError):
    """Base class for polygon validation failures."""


class PolygonParseError(PolygonError):
    """Malformed polygon document: bad JSON, bad schema, or non-finite numbers."""


class TooFewVerticesError(PolygonError):
    """A ring has fewer than 3 corners after normalization."""


class SlitVertexError(PolygonError):
    """A vertex whose incident edges double back (interior angle 360 degrees)."""


class SelfIntersectionError(PolygonError):
    """Two edges of one ring share a point they should not."""


class HolePlacementError(PolygonError):
    """A hole outside the outer ring, nested in another hole, or touching."""


class NonReflexVertexError(ValueError):
    """cone_of was asked for the cone of a convex vertex."""


def as_fraction(value) -> Fraction:
    """Coerce a coordinate-like value to an exact Fraction.

    Accepts int, Fraction, Decimal, finite float (converted exactly from
    its binary value), and decimal literal strings.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise PolygonParseError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, decimal.Decimal):
        if not value.is_finite():
            raise PolygonParseError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(decimal.Decimal(value))
        except decimal.InvalidOperation as exc:
            raise PolygonParseError(f"bad coordinate literal {value!r}") from exc
    raise PolygonParseError(f"unsupported coordinate type {type(value).__name__}")


class Point:
    """Exact planar point with float mirrors for filtered predicates."""

    __slots__ = ("x", "y", "xf", "yf")

    def __init__(self, x, y):
        self.x = as_fraction(x)
        self.y = as_fraction(y)
        self.xf = float(self.x)
        self.yf = float(self.y)

    def __eq__(self, other):
        return isinstance(other, Point) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


class Direction:
    """A sweep direction modulo 180 degrees.

    (dx, dy) and (-dx, -dy) name the same Direction; the canonical
    representative has dy > 0, or dy == 0 and dx > 0. Equality and
    ordering are decided by exact cross product signs; the float angle
    is only a sort key that exact comparisons refine.
    """

    __slots__ = ("dx", "dy", "fdx", "fdy", "_pair")

    def __init__(self, dx, dy):
        dx = as_fraction(dx)
        dy = as_fraction(dy)
        if not dx and not dy:
            raise ValueError("the zero vector has no direction")
        if dy < 0 or (dy == 0 and dx < 0):
            dx, dy = -dx, -dy
        self.dx = dx
        self.dy = dy
        self.fdx = float(dx)
        self.fdy = float(dy)
        self._pair = None

    def canonical_pair(self) -> tuple[int, int]:
        """Coprime integer representative of the direction; hash/equality key."""
        if self._pair is None:
            m = math.lcm(self.dx.denominator, self.dy.denominator)
            a = int(self.dx * m)
            b = int(self.dy * m)
            g = math.gcd(a, b)
            self._pair = (a // g, b // g)
        return self._pair

    @property
    def angle(self) -> float:
        """Float angle in [0, pi); a sort key, never a decision value."""
        return math.atan2(self.fdy, self.fdx)

    def perpendicular(self) -> "Direction":
        return Direction(-self.dy, self.dx)

    def __eq__(self, other):
        return isinstance(other, Direction) and self.canonical_pair() == other.canonical_pair()

    def __hash__(self):
        return hash(self.canonical_pair())

    def __repr__(self):
        return f"Direction({self.dx}, {self.dy})"


def direction_cross(u: Direction, v: Direction) -> Fraction:
    """Exact cross product of two direction representatives."""
    return u.dx * v.dy - u.dy * v.dx


class DoubleCone:
    """The closed double cone of directions eliminating one reflex vertex.

    Membership test: v lies in the cone iff <v, d1> * <v, d2> <= 0 where
    d1, d2 point from the apex to its two ring neighbors. Under such v
    both incident edges fall on one side of the ruling line through the
    apex, so the level set does not branch there; the set is closed and
    symmetric under v -> -v.

    boundary1 and boundary2 are the outward normals of the incoming and
    outgoing edges. Swept counterclockwise (mod 180 degrees) the cone is
    entered at arc_start and left at arc_end; for a reflex vertex
    arc_start is always boundary1, the incoming edge's normal.
    """

    __slots__ = ("apex", "boundary1", "boundary2", "arc_start", "arc_end", "_d1", "_d2")

    def __init__(self, apex: Point, prev_point: Point, next_point: Point):
        d1 = (prev_point.x - apex.x, prev_point.y - apex.y)
        d2 = (next_point.x - apex.x, next_point.y - apex.y)
        if exact_cross(d1[0], d1[1], d2[0], d2[1]) <= 0:
            raise NonReflexVertexError(f"vertex at {apex!r} is not reflex")
        self.apex = apex
        self._d1 = d1
        self._d2 = d2
        self.boundary1 = Direction(d1[1], -d1[0])
        self.boundary2 = Direction(d2[1], -d2[0])
        self.arc_start = self.boundary1
        self.arc_end = self.boundary2

    @property
    def interval(self) -> tuple[Direction, Direction]:
        """Closed angular interval (start, end), counterclockwise mod 180."""
        return (self.arc_start, self.arc_end)

    def contains(self, v: Direction) -> bool:
        """Exact closed containment test."""
        s1 = sign(exact_dot(v.dx, v.dy, self._d1[0], self._d1[1]))
        s2 = sign(exact_dot(v.dx, v.dy, self._d2[0], self._d2[1]))
        return s1 * s2 <= 0

    def __repr__(self):
        return f"DoubleCone(apex={self.apex!r}, {self.boundary1!r}..{self.boundary2!r})"


def cone_contains(c: DoubleCone, v: Direction) -> bool:
    """True iff direction v lies in the closed double cone c."""
    return c.contains(v)


class Ring:
    """One boundary loop. Vertices are normalized and oriented by Polygon."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point]):
        self.vertices = tuple(vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __repr__(self):
        return f"Ring({len(self.vertices)} vertices)"


def _coerce_points(ring_like) -> list[Point]:
    if isinstance(ring_like, Ring):
        return list(ring_like.vertices)
    pts = []
    for item in ring_like:
        if isinstance(item, Point):
            pts.append(item)
        else:
            xy = tuple(item)
            if len(xy) != 2:
                raise PolygonParseError(f"coordinate pair expected, got {item!r}")
            pts.append(Point(xy[0], xy[1]))
    return pts


def _no_merge_candidates(pts: list[Point]) -> bool:
    """Vectorized proof that a ring has no duplicate or collinear corners.

    When every corner's float cross product clears its error bound, the
    exact merge loop could not change anything, so it can be skipped.
    A zero difference vector forces the exact cross to 0, which the
    bound can never clear, so duplicate suspects are caught too.
    """
    n = len(pts)
    xs = np.fromiter((p.xf for p in pts), dtype=float, count=n)
    ys = np.fromiter((p.yf for p in pts), dtype=float, count=n)
    xp = np.roll(xs, 1)
    yp = np.roll(ys, 1)
    xn = np.roll(xs, -1)
    yn = np.roll(ys, -1)
    d1x = xs - xp
    d1y = ys - yp
    d2x = xn - xs
    d2y = yn - ys
    e1x = diff_error_bound(d1x, xs, xp)
    e1y = diff_error_bound(d1y, ys, yp)
    e2x = diff_error_bound(d2x, xn, xs)
    e2y = diff_error_bound(d2y, yn, ys)
    t1 = d1x * d2y
    t2 = d1y * d2x
    cr = t1 - t2
    err = cross_error_bound(d1x, d1y, d2x, d2y, e1x, e1y, e2x, e2y, t1, t2, cr)
    return bool(np.all(np.abs(cr) > err))


_MERGE_PRESCREEN_MIN = 64


def _merge_ring(pts: list[Point]) -> list[Point]:
    """Drop duplicate and straight-through vertices; reject slit corners.

    Iterates to a fixed point because removing a vertex can make its
    neighbor collinear in turn.
    """
    if len(pts) >= _MERGE_PRESCREEN_MIN and _no_merge_candidates(pts):
        return pts
    while True:
        n = len(pts)
        if n < 3:
            raise TooFewVerticesError(f"ring has {n} corners after merging")
        out = []
        changed = False
        for i in range(n):
            prv = pts[i - 1]
            p = pts[i]
            nxt = pts[(i + 1) % n]
            if p == nxt:
                changed = True
                continue
            if prv == p:
                out.append(p)  # duplicate resolved at the previous index next pass
                changed = True
                continue
            d1x, d1y = p.x - prv.x, p.y - prv.y
            d2x, d2y = nxt.x - p.x, nxt.y - p.y
            cr = exact_cross(d1x, d1y, d2x, d2y)
            if cr == 0:
                if exact_dot(d1x, d1y, d2x, d2y) > 0:
                    changed = True
                    continue
                raise SlitVertexError(f"edges double back at {p!r}")
            out.append(p)
        pts = out
        if not changed:
            return pts


def _orientation_sign(pts: Sequence[Point]) -> int:
    """Sign of the signed area: +1 counterclockwise, -1 clockwise.

    Filtered float shoelace with a conservative accumulated bound; exact
    Fraction shoelace when indecisive.
    """
    n = len(pts)
    xs = np.fromiter((p.xf for p in pts), dtype=float, count=n)
    ys = np.fromiter((p.yf for p in pts), dtype=float, count=n)
    xn = np.roll(xs, -1)
    yn = np.roll(ys, -1)
    t1 = xs * yn
    t2 = xn * ys
    area2 = float(np.sum(t1 - t2))
    magnitude = float(np.sum(np.abs(t1) + np.abs(t2)))
    err = U * (n + 4) * magnitude
    if area2 > err:
        return 1
    if area2 < -err:
        return -1
    total = Fraction(0)
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        total += a.x * b.y - a.y * b.x
    s = sign(total)
    if s == 0:
        raise SelfIntersectionError("ring encloses zero area")
    return s


def _on_segment(a: Point, b: Point, c: Point) -> bool:
    """Whether c, known collinear with a-b, lies on the closed segment."""
    return (min(a.x, b.x) <= c.x <= max(a.x, b.x)
            and min(a.y, b.y) <= c.y <= max(a.y, b.y))


def _segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff closed segments ab and cd share at least one point. Exact."""
    o1 = orient_sign(a, b, c)
    o2 = orient_sign(a, b, d)
    o3 = orient_sign(c, d, a)
    o4 = orient_sign(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def _edge_boxes(pts: Sequence[Point]):
    n = len(pts)
    xs = np.fromiter((p.xf for p in pts), dtype=float, count=n)
    ys = np.fromiter((p.yf for p in pts), dtype=float, count=n)
    xn = np.roll(xs, -1)
    yn = np.roll(ys, -1)
    # inflate so mirror rounding can never exclude a true overlap
    pad = 4.0 * U * max(1.0, float(np.max(np.abs(xs))), float(np.max(np.abs(ys))))
    return (np.minimum(xs, xn) - pad, np.maximum(xs, xn) + pad,
            np.minimum(ys, yn) - pad, np.maximum(ys, yn) + pad)


def _check_ring_simple(pts: Sequence[Point]) -> None:
    """Reject any contact between non-adjacent edges of one ring."""
    n = len(pts)
    xmin, xmax, ymin, ymax = _edge_boxes(pts)
    if n <= _DENSE_VALIDATION_LIMIT:
        overlap = ((xmin[:, None] <= xmax[None, :]) & (xmax[:, None] >= xmin[None, :])
                   & (ymin[:, None] <= ymax[None, :]) & (ymax[:, None] >= ymin[None, :]))
        ii, jj = np.nonzero(np.triu(overlap, k=2))
        candidates = [(int(i), int(j)) for i, j in zip(ii, jj) if not (i == 0 and j == n - 1)]
    else:
        order = np.argsort(xmin, kind="stable")
        active: list[int] = []
        candidates = []
        for idx in order:
            i = int(idx)
            lo = xmin[i]
            active = [j for j in active if xmax[j] >= lo]
            for j in active:
                if ymin[i] <= ymax[j] and ymax[i] >= ymin[j]:
                    a, b = (i, j) if i < j else (j, i)
                    if b - a >= 2 and not (a == 0 and b == n - 1):
                        candidates.append((a, b))
            active.append(i)
    for i, j in candidates:
        a, b = pts[i], pts[(i + 1) % n]
        c, d = pts[j], pts[(j + 1) % n]
        if _segments_touch(a, b, c, d):
            raise SelfIntersectionError(
                f"edges {i} and {j} of a ring intersect near {pts[i]!r}")


def _point_strictly_inside(pts: Sequence[Point], q: Point) -> bool:
    """Exact crossing-number test; q must not lie on the boundary."""
    n = len(pts)
    inside = False
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        if (a.y > q.y) != (b.y > q.y):
            xq = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if xq > q.x:
                inside = not inside
    return inside


def _rings_touch(pts1: Sequence[Point], pts2: Sequence[Point]) -> bool:
    """Whether any edge of ring 1 contacts any edge of ring 2. Exact."""
    xmin1, xmax1, ymin1, ymax1 = _edge_boxes(pts1)
    xmin2, xmax2, ymin2, ymax2 = _edge_boxes(pts2)
    n1, n2 = len(pts1), len(pts2)
    for i in range(n1):
        a, b = pts1[i], pts1[(i + 1) % n1]
        for j in range(n2):
            if (xmin1[i] > xmax2[j] or xmax1[i] < xmin2[j]
                    or ymin1[i] > ymax2[j] or ymax1[i] < ymin2[j]):
                continue
            if _segments_touch(a, b, pts2[j], pts2[(j + 1) % n2]):
                return True
    return False


def _check_hole_placement(rings: list[list[Point]]) -> None:
    outer = rings[0]
    for g, hole in enumerate(rings[1:], start=1):
        if _rings_touch(outer, hole):
            raise HolePlacementError(f"hole {g - 1} touches the outer boundary")
        if not _point_strictly_inside(outer, hole[0]):
            raise HolePlacementError(f"hole {g - 1} lies outside the outer ring")
    for g1 in range(1, len(rings)):
        for g2 in range(g1 + 1, len(rings)):
            if _rings_touch(rings[g1], rings[g2]):
                raise HolePlacementError(f"holes {g1 - 1} and {g2 - 1} touch")
            if _point_strictly_inside(rings[g2], rings[g1][0]):
                raise HolePlacementError(f"hole {g1 - 1} is nested inside hole {g2 - 1}")
            if _point_strictly_inside(rings[g1], rings[g2][0]):
                raise HolePlacementError(f"hole {g2 - 1} is nested inside hole {g1 - 1}")


class Polygon:
    """Simple polygon with holes.

    The outer ring is counterclockwise and holes are clockwise, so the
    interior always lies to the left of traversal and one cross product
    rule classifies reflex vertices on every ring.

    Constructing with validate=False skips the pairwise simplicity and
    hole placement checks (normalization and orientation still run); it
    exists for generators that certify simplicity structurally.
    """

    __slots__ = ("outer", "holes", "n", "h", "_pts", "_ring_start", "_ring_id",
                 "_prev", "_next", "_coords", "_reflex", "_cones")

    def __init__(self, outer, holes: Iterable = (), *, validate: bool = True):
        rings = [_merge_ring(_coerce_points(outer))]
        for hole in holes:
            rings.append(_merge_ring(_coerce_points(hole)))
        for idx in range(len(rings)):
            want = 1 if idx == 0 else -1
            if _orientation_sign(rings[idx]) != want:
                rings[idx] = rings[idx][::-1]
        if validate:
            for pts in rings:
                _check_ring_simple(pts)
            if len(rings) > 1:
                _check_hole_placement(rings)

        self.outer = Ring(rings[0])
        self.holes = tuple(Ring(r) for r in rings[1:])
        flat: list[Point] = []
        ring_start = []
        for pts in rings:
            ring_start.append(len(flat))
            flat.extend(pts)
        self._pts = flat
        self.n = len(flat)
        self.h = len(rings) - 1
        ring_start.append(self.n)
        self._ring_start = tuple(ring_start)

        prev = np.empty(self.n, dtype=np.intp)
        nxt = np.empty(self.n, dtype=np.intp)
        ring_id = np.empty(self.n, dtype=np.intp)
        for r in range(len(rings)):
            lo, hi = ring_start[r], ring_start[r + 1]
            idx = np.arange(lo, hi)
            nxt[idx] = np.roll(idx, -1)
            prev[idx] = np.roll(idx, 1)
            ring_id[idx] = r
        self._prev = prev
        self._next = nxt
        self._ring_id = ring_id
        coords = np.empty((self.n, 2), dtype=float)
        for i, p in enumerate(flat):
            coords[i, 0] = p.xf
            coords[i, 1] = p.yf
        self._coords = coords
        self._reflex = None
        self._cones = {}

    # -- vertex addressing ------------------------------------------------

    def vertex(self, i: int) -> Point:
        """Point at global vertex index i."""
        return self._pts[i]

    def ring_index(self, i: int) -> int:
        """Which ring (0 = outer, g+1 = hole g) vertex i belongs to."""
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int(self._ring_id[i])

    def neighbors(self, i: int) -> tuple[int, int]:
        """Global indices of the ring-previous and ring-next vertices."""
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int(self._prev[i]), int(self._next[i])

    @property
    def rings(self) -> tuple[Ring, ...]:
        return (self.outer,) + self.holes

    def bounding_box(self) -> tuple[float, float, float, float]:
        """(xmin, ymin, xmax, ymax) of the float mirrors."""
        xs = self._coords[:, 0]
        ys = self._coords[:, 1]
        return float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max())

    # -- reflex machinery --------------------------------------------------

    def _reflex_mask(self) -> np.ndarray:
        """Boolean mask over global indices; filtered, exact on demand."""
        if self._reflex is not None:
            return self._reflex
        xs = self._coords[:, 0]
        ys = self._coords[:, 1]
        px, py = xs[self._prev], ys[self._prev]
        nx, ny = xs[self._next], ys[self._next]
        d1x, d1y = xs - px, ys - py
        d2x, d2y = nx - xs, ny - ys
        t1 = d1x * d2y
        t2 = d1y * d2x
        cr = t1 - t2
        err = cross_error_bound(
            d1x, d1y, d2x, d2y,
            diff_error_bound(d1x, xs, px), diff_error_bound(d1y, ys, py),
            diff_error_bound(d2x, nx, xs), diff_error_bound(d2y, ny, ys),
            t1, t2, cr)
        mask = cr < -err
        for i in np.flatnonzero(np.abs(cr) <= err):
            p = self._pts[i]
            a = self._pts[int(self._prev[i])]
            b = self._pts[int(self._next[i])]
            s = sign(exact_cross(p.x - a.x, p.y - a.y, b.x - p.x, b.y - p.y))
            if s == 0:
                raise PolygonError(f"collinear corner at {p!r} in unvalidated ring data")
            mask[i] = s < 0
        self._reflex = mask
        return mask

    def reflex_indices(self) -> tuple[int, ...]:
        """Sorted global indices of reflex vertices."""
        return tuple(int(i) for i in np.flatnonzero(self._reflex_mask()))

    def cone(self, i: int) -> DoubleCone:
        """DoubleCone at reflex vertex i (cached)."""
        c = self._cones.get(i)
        if c is None:
            if not self._reflex_mask()[i]:
                raise NonReflexVertexError(f"vertex {i} at {self._pts[i]!r} is not reflex")
            c = DoubleCone(self._pts[i],
                           self._pts[int(self._prev[i])],
                           self._pts[int(self._next[i])])
            self._cones[i] = c
        return c

    def __repr__(self):
        return f"Polygon(n={self.n}, h={self.h})"


def is_reflex(P: Polygon, i: int) -> bool:
    """Whether the interior angle at global vertex index i exceeds 180 degrees."""
    if not 0 <= i < P.n:
        raise IndexError(i)
    return bool(P._reflex_mask()[i])


def reflex_vertices(P: Polygon) -> frozenset[int]:
    """Global indices of all reflex vertices of P; k = len(result)."""
    return frozenset(P.reflex_indices())


def cone_of(P: Polygon, i: int) -> DoubleCone:
    """The closed double cone of directions eliminating reflex vertex i."""
    return P.cone(i)


# -- file format ----------------------------------------------------------


def _reject_constant(token: str):
    raise PolygonParseError(f"non-finite number {token!r} in polygon document")


def _number_hook(token: str) -> Fraction:
    return Fraction(decimal.Decimal(token))


def load_polygon(source) -> Polygon:
    """Parse and validate a polygon document.

    Accepts bytes, str, or a readable file object. Numbers are parsed
    exactly; NaN and infinities are rejected.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        doc = json.loads(source, parse_float=_number_hook, parse_int=_number_hook,
                         parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise PolygonParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise PolygonParseError("top level must be an object")
    unknown = set(doc) - {"outer", "holes"}
    if unknown:
        raise PolygonParseError(f"unknown keys {sorted(unknown)}")
    if "outer" not in doc:
        raise PolygonParseError('missing required key "outer"')
    outer = _parse_ring_spec(doc["outer"], "outer")
    holes_spec = doc.get("holes", [])
    if not isinstance(holes_spec, list):
        raise PolygonParseError('"holes" must be a list of rings')
    holes = [_parse_ring_spec(r, f"holes[{i}]") for i, r in enumerate(holes_spec)]
    return Polygon(outer, holes)


def _parse_ring_spec(spec, label: str) -> list[Point]:
    if not isinstance(spec, list) or len(spec) < 3:
        raise PolygonParseError(f"{label} must be a list of at least 3 coordinate pairs")
    pts = []
    for item in spec:
        if not isinstance(item, list) or len(item) != 2:
            raise PolygonParseError(f"{label} contains a non-pair entry {item!r}")
        pts.append(Point(item[0], item[1]))
    return pts


def _format_coordinate(x: Fraction) -> str:
    """Exact decimal rendering when the denominator is 2^a * 5^b; float repr otherwise."""
    den = x.denominator
    if den == 1:
        return str(x.numerator)
    d = den
    exp2 = 0
    while d % 2 == 0:
        d //= 2
        exp2 += 1
    exp5 = 0
    while d % 5 == 0:
        d //= 5
        exp5 += 1
    if d != 1:
        return repr(float(x))
    exp = max(exp2, exp5)
    scaled = abs(x.numerator) * (10 ** exp) // den
    whole, frac = divmod(scaled, 10 ** exp)
    text = f"{whole}.{str(frac).rjust(exp, '0').rstrip('0')}"
    return "-" + text if x.numerator < 0 else text


def dump_polygon(P: Polygon) -> str:
    """Serialize to the polygon file format, exactly and deterministically."""

    def ring_text(ring: Ring) -> str:
        return "[" + ",".join(
            f"[{_format_coordinate(p.x)},{_format_coordinate(p.y)}]" for p in ring.vertices
        ) + "]"

    holes_text = ",".join(ring_text(g) for g in P.holes)
    return '{"outer":' + ring_text(P.outer) + ',"holes":[' + holes_text + "]}\n"
