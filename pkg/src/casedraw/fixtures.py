"""Deterministic test drawings, including reconstructions of classic constructions.

Every generator returns a :class:`~casedraw.geometry.Drawing` whose edge ``i``
runs between vertices ``2i`` and ``2i+1`` unless the construction shares
vertices (``pentagram``).
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction as F

from .exceptions import DegenerateOverlap
from .geometry import Drawing, point_segment_dist2, segment_intersection, validate_drawing

DEFAULT_WIDTH = F(1, 10)


def from_segments(segments, casing_width=DEFAULT_WIDTH) -> Drawing:
    vertices, edges = [], []
    for i, (p, q) in enumerate(segments):
        vertices += [(2 * i, F(p[0]), F(p[1])), (2 * i + 1, F(q[0]), F(q[1]))]
        edges.append((i, 2 * i, 2 * i + 1))
    return Drawing(vertices, edges, casing_width)


def grid(h=3, v=3, spacing=1, casing_width=DEFAULT_WIDTH) -> Drawing:
    """``h`` horizontal and ``v`` vertical segments on a unit-spaced lattice.

    Horizontals get edge ids ``0..h-1`` (bottom to top), verticals follow.
    """
    s = F(spacing)
    segs = [((-s, i * s), (v * s, i * s)) for i in range(h)]
    segs += [((j * s, -s), (j * s, h * s)) for j in range(v)]
    return from_segments(segs, casing_width)


def triangle(offset=(0, 0), casing_width=DEFAULT_WIDTH) -> Drawing:
    """Three pairwise crossing segments extending the sides of a triangle."""
    return from_segments(_triangle_segments(offset), casing_width)


def _triangle_segments(offset):
    ox, oy = F(offset[0]), F(offset[1])
    raw = [((-1, 0), (5, 0)), ((5, F(-3, 2)), (1, F(9, 2))), ((3, F(9, 2)), (-1, F(-3, 2)))]
    return [((p[0] + ox, p[1] + oy), (q[0] + ox, q[1] + oy)) for p, q in raw]


def two_triangles(casing_width=DEFAULT_WIDTH) -> Drawing:
    return from_segments(_triangle_segments((0, 0)) + _triangle_segments((10, 0)), casing_width)


def pentagram(casing_width=DEFAULT_WIDTH) -> Drawing:
    """Star polygon {5/2}; its crossing graph is a 5-cycle."""
    pts = [(F(0), F(10)), (F("9.51"), F("3.09")), (F("5.88"), F("-8.09")), (F("-5.88"), F("-8.09")), (F("-9.51"), F("3.09"))]
    vertices = [(i, x, y) for i, (x, y) in enumerate(pts)]
    edges = [(i, i, (i + 2) % 5) for i in range(5)]
    return Drawing(vertices, edges, casing_width)


def _lines_to_segments(lines, partners=None, margin=F(1, 2)):
    """Clip lines ``(point, direction)`` to cover their crossings with ``partners``.

    ``partners[i]`` lists the line indices whose crossings segment ``i`` must
    include (all non-parallel lines by default).
    """
    segs = []
    for i, ((px, py), (dx, dy)) in enumerate(lines):
        ts = []
        for j in partners[i] if partners is not None else range(len(lines)):
            if j == i:
                continue
            (qx, qy), (ex, ey) = lines[j]
            den = dx * ey - dy * ex
            if den == 0:
                continue
            ts.append(((qx - px) * ey - (qy - py) * ex) / den)
        norm = max(abs(dx), abs(dy))
        lo, hi = min(ts) - margin / norm, max(ts) + margin / norm
        segs.append(((px + lo * dx, py + lo * dy), (px + hi * dx, py + hi * dy)))
    return segs


def parallel_triangles(p=3, casing_width=F(1, 20)) -> Drawing:
    """Three families of ``p`` parallel lines, offset to avoid triple points.

    Each near-triple point leaves a small vertex-free triangle, so the number
    of odd faces grows quadratically in ``p``.
    """
    c = F(1, 5)
    lines = [((F(0), F(i)), (F(1), F(0))) for i in range(p)]
    lines += [((F(j), F(0)), (F(1), F(2))) for j in range(p)]
    lines += [((F(j) + c, F(0)), (F(-1), F(2))) for j in range(p)]
    return from_segments(_lines_to_segments(lines), casing_width)


def _diamond_bundles(c, radius, spacing):
    """Four bundles of ``c`` parallel lines on the sides of a diamond.

    Returns lines in the order B1 (upper-left, slope +1), B2 (upper-right,
    slope -1), B3 (lower-right, +1), B4 (lower-left, -1).
    """
    R, s = F(radius), F(spacing)
    b1 = [((F(0), R + t * s), (F(1), F(1))) for t in range(c)]
    b2 = [((F(0), R + t * s), (F(1), F(-1))) for t in range(c)]
    b3 = [((F(0), -R - t * s), (F(1), F(1))) for t in range(c)]
    b4 = [((F(0), -R - t * s), (F(1), F(-1))) for t in range(c)]
    return b1, b2, b3, b4


def _diamond_drawing(c, verticals, horizontals, radius, spacing, casing_width):
    b1, b2, b3, b4 = _diamond_bundles(c, radius, spacing)
    vs = [((F(x), F(0)), (F(0), F(1))) for x in verticals]
    hs = [((F(0), F(y)), (F(1), F(0))) for y in horizontals]
    lines = b1 + b2 + b3 + b4 + vs + hs
    idx = {}
    pos = 0
    for name, group in (("b1", b1), ("b2", b2), ("b3", b3), ("b4", b4), ("v", vs), ("h", hs)):
        idx[name] = list(range(pos, pos + len(group)))
        pos += len(group)
    left_v = [i for i, x in zip(idx["v"], verticals) if x < 0]
    right_v = [i for i, x in zip(idx["v"], verticals) if x > 0]
    upper_h = [i for i, y in zip(idx["h"], horizontals) if y > 0]
    lower_h = [i for i, y in zip(idx["h"], horizontals) if y < 0]
    partners = {}
    for i in idx["b1"]:
        partners[i] = idx["b2"] + idx["b4"] + left_v + upper_h
    for i in idx["b2"]:
        partners[i] = idx["b1"] + idx["b3"] + right_v + upper_h
    for i in idx["b3"]:
        partners[i] = idx["b2"] + idx["b4"] + right_v + lower_h
    for i in idx["b4"]:
        partners[i] = idx["b1"] + idx["b3"] + left_v + lower_h
    for i in left_v:
        partners[i] = idx["b1"] + idx["b4"] + idx["h"]
    for i in right_v:
        partners[i] = idx["b2"] + idx["b3"] + idx["h"]
    for i in upper_h:
        partners[i] = idx["b1"] + idx["b2"] + idx["v"]
    for i in lower_h:
        partners[i] = idx["b4"] + idx["b3"] + idx["v"]
    segs = _lines_to_segments(lines, [partners[i] for i in range(len(lines))], margin=F(1, 4))
    return from_segments(segs, casing_width), idx


def bundle_square(c=5, casing_width=DEFAULT_WIDTH) -> Drawing:
    """Four bundles of ``c`` parallel edges in a crossing cycle plus four single segments.

    The bundles sit on the sides of a diamond, each crossing its two
    neighbours.  Two vertical singles cross the left pair and the right pair
    of bundles, two horizontal singles the upper and lower pair, and the
    singles cross each other in the middle.  For ``c > 4`` each single is
    forced to switch once, so the optimum is four switches.

    Reconstructed from the prose description only: in this geometry an
    optimal casing can also be stacked, so it does not separate the stacking
    and weaving models the way the original figure does.
    """
    d, _ = _diamond_drawing(c, [-3, 3], [3, -3], radius=10, spacing=F(1, 2), casing_width=casing_width)
    return d


def _weave_layout(c):
    s = F(1, 2)
    g = (c - 1) * s / 2 + 2
    inner = [-(g + 4), -g, g, g + 4]
    radius = 2 * (g + 4) + 6
    return inner, radius, s


def weave_grid(c=13, casing_width=DEFAULT_WIDTH) -> Drawing:
    """Bundles of ``c`` parallel edges framing a 4 x 4 grid of normal edges.

    Same diamond of bundles as :func:`bundle_square`, with four vertical and
    four horizontal normal edges crossing in a 4 x 4 grid.  Reconstructed
    from the prose description.

    Verified deviation: the optimum of this geometry is 8 switches for c = 5
    and c = 13, not the 12 of the original figure.  The odd-face lower bound
    is 4 and :func:`weave_grid_certificate` attains 8 independently.  In an
    optimal casing each of the eight normal edges switches exactly once;
    forcing a perfect 4 x 4 weave among the normals would cost 24 switches
    on its own.  The figure's exact coordinates evidently force more than
    this reading of the prose does.
    """
    inner, radius, s = _weave_layout(c)
    d, _ = _diamond_drawing(c, inner, inner[::-1], radius=radius, spacing=s, casing_width=casing_width)
    return d


def weave_grid_certificate(c=13):
    """Explicit casing for :func:`weave_grid` built without the switch solver.

    Slope +1 bundles lie above slope -1 bundles and the normals sit between
    the two layers, which fixes every bundle crossing.  The 16 crossings
    among normals are then chosen by exhaustive search (first minimum in
    mask order).  Returns ``(drawing, casing)``.
    """
    from .arrangement import build_arrangement
    from .crossing_graph import Casing

    inner, radius, s = _weave_layout(c)
    d, idx = _diamond_drawing(c, inner, inner[::-1], radius=radius, spacing=s, casing_width=DEFAULT_WIDTH)
    layer = {}
    for i in idx["b1"] + idx["b3"]:
        layer[i] = 2
    for i in idx["b2"] + idx["b4"]:
        layer[i] = 0
    for i in idx["v"] + idx["h"]:
        layer[i] = 1
    arr = build_arrangement(d)
    fixed, free = {}, []
    for cr in arr.crossings:
        a, b = cr.key
        if layer[a] != layer[b]:
            fixed[cr.key] = a if layer[a] > layer[b] else b
        else:
            free.append(cr.key)
    normals = idx["v"] + idx["h"]

    def switches(mask):
        top = dict(fixed)
        for bit, key in enumerate(free):
            top[key] = key[0] if mask >> bit & 1 else key[1]
        total = 0
        for e in normals:
            flags = [top[arr.crossings[cid].key] == e for cid in arr.per_edge[e]]
            total += sum(x != y for x, y in zip(flags, flags[1:]))
        return total, top

    best = None
    for mask in range(1 << len(free)):
        total, top = switches(mask)
        if best is None or total < best[0]:
            best = (total, top)
    return d, Casing(best[1])


NP_SLOPES = ((F(1), F(4)), (F(4), F(-1)), (F(1), F(-4)), (F(4), F(1)))  # slopes 4, -1/4, -4, 1/4


def np_slopes_cycle(length=4, casing_width=DEFAULT_WIDTH) -> Drawing:
    """A cycle of segments with slopes cycling through 4, -1/4, -4, 1/4.

    Consecutive segments cross near their ends, alternating perpendicular and
    non-perpendicular crossings.  Orientations are searched in a fixed order;
    the first choice whose closing lengths are positive and whose crossing
    graph is exactly the cycle is returned.  Polygon sides differ in length but every
    segment is extended to the same total length.
    """
    if length < 4 or length % 4:
        raise ValueError("length must be a positive multiple of 4")
    if length > 12:
        raise ValueError("length above 12 is not supported")
    dirs = [NP_SLOPES[i % 4] for i in range(length)]
    for signs in itertools.product((1, -1), repeat=length):
        vecs = [(s * dx, s * dy) for s, (dx, dy) in zip(signs, dirs)]
        # fix all lengths to 1 except the last two, solve closure exactly
        sx = sum(v[0] for v in vecs[:-2])
        sy = sum(v[1] for v in vecs[:-2])
        (ax, ay), (bx, by) = vecs[-2], vecs[-1]
        den = ax * by - ay * bx
        if den == 0:
            continue
        la = (-sx * by + sy * bx) / den
        lb = (-ax * sy + ay * sx) / den
        if la <= 0 or lb <= 0:
            continue
        lens = [F(1)] * (length - 2) + [la, lb]
        pts = [(F(0), F(0))]
        for ln, (dx, dy) in zip(lens, vecs):
            x, y = pts[-1]
            pts.append((x + ln * dx, y + ln * dy))
        # all direction vectors have the same norm, so equal multiples of
        # them give segments of equal Euclidean length
        full = max(lens) * F(6, 5)
        segs = []
        for i in range(length):
            (x0, y0), (x1, y1) = pts[i], pts[i + 1]
            ext = (full - lens[i]) / 2
            dx, dy = vecs[i]
            segs.append(((x0 - ext * dx, y0 - ext * dy), (x1 + ext * dx, y1 + ext * dy)))
        try:
            d = from_segments([(tuple(p), tuple(q)) for p, q in segs], casing_width)
            if not validate_drawing(d).ok:
                continue
        except ValueError:
            continue
        from .geometry import find_crossings

        crossings, _ = find_crossings(d)
        want = {tuple(sorted((i, (i + 1) % length))) for i in range(length)}
        if {c.key for c in crossings} == want:
            return d
    raise ValueError(f"no simple slope cycle of length {length} found")


def random_segments(count=8, seed=0, extent=20, max_length=None, casing_width=DEFAULT_WIDTH) -> Drawing:
    """``count`` segments with integer endpoints in ``[0, extent]^2``.

    With ``max_length`` the second endpoint is offset from the first by at
    most that much in each coordinate (it may leave the square).

    Candidates that would break the input restrictions (overlap, a vertex on
    or near an edge, three edges through a point) are rejected and redrawn.
    """
    rng = random.Random(seed)
    w = F(casing_width)
    tol2 = (w / 2) ** 2
    segs = []
    crossing_points = set()
    attempts = 0
    while len(segs) < count:
        attempts += 1
        if attempts > 1000 * (count + 1):
            raise RuntimeError("could not place segments; enlarge extent")
        p = (F(rng.randint(0, extent)), F(rng.randint(0, extent)))
        if max_length is None:
            q = (F(rng.randint(0, extent)), F(rng.randint(0, extent)))
        else:
            q = (
                p[0] + rng.randint(-max_length, max_length),
                p[1] + rng.randint(-max_length, max_length),
            )
        if p == q:
            continue
        new = (p, q)
        ok = True
        hits = []
        for s in segs:
            if (max(s[0][0], s[1][0]) + 1 < min(p[0], q[0]) or min(s[0][0], s[1][0]) - 1 > max(p[0], q[0])
                    or max(s[0][1], s[1][1]) + 1 < min(p[1], q[1]) or min(s[0][1], s[1][1]) - 1 > max(p[1], q[1])):
                continue
            try:
                hit = segment_intersection(s, new)
            except DegenerateOverlap:
                ok = False
                break
            if (point_segment_dist2(p, s) <= tol2 or point_segment_dist2(q, s) <= tol2
                    or point_segment_dist2(s[0], new) <= tol2 or point_segment_dist2(s[1], new) <= tol2):
                ok = False
                break
            if hit is not None:
                if hit.point in crossing_points or hit.point in hits:
                    ok = False
                    break
                hits.append(hit.point)
        if not ok:
            continue
        segs.append(new)
        crossing_points.update(hits)
    return from_segments(segs, w)


GENERATORS = {
    "grid": grid,
    "triangle": triangle,
    "two-triangles": two_triangles,
    "pentagram": pentagram,
    "parallel-triangles": parallel_triangles,
    "bundle-square": bundle_square,
    "weave-grid": weave_grid,
    "np-slopes-cycle": np_slopes_cycle,
    "random-segments": random_segments,
}


def generate_fixture(name, params=None, seed=None) -> Drawing:
    """Build the named fixture; ``params`` are keyword arguments of its generator."""
    if name not in GENERATORS:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(GENERATORS)}")
    kwargs = dict(params or {})
    if seed is not None:
        if name != "random-segments":
            raise ValueError(f"fixture {name!r} takes no seed")
        kwargs["seed"] = seed
    try:
        return GENERATORS[name](**kwargs)
    except TypeError as exc:
        raise ValueError(f"invalid parameters for {name}: {exc}") from None
