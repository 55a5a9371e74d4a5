"""
Deterministic SVG drawings.

``interval``
    windows as horizontal intervals (boundary 0 below, the others above) with
    bands of width proportional to weight.
``circle``
    boundary 0 as the outer circle, the others inside it at equal angular
    spacing, with each band's footprint marked on its circles.
``planar-loop``
    the circles of a loop configuration, circle 0 left implicit, with circles
    that share a point drawn tangent to each other.

Coordinates are rounded to three decimals, so the same input always gives the
same bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cacti import Cactus, cactus_configuration
from .core import ArcFamily, end_interval, is_exhaustive, total_weight
from .loop import CircleConfiguration, loop_of

MODELS = ("interval", "circle", "planar-loop")
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f")


class RenderError(ValueError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    model: str = "interval"
    size: int = 480
    labels: bool = True


def _n(x) -> str:
    s = "%.3f" % x
    s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Canvas:
    def __init__(self, width, height):
        self.width, self.height = width, height
        self.items = []

    def add(self, tag, text=None, **attrs):
        parts = []
        for k in sorted(attrs):
            v = attrs[k]
            parts.append('%s="%s"' % (k.rstrip("_").replace("_", "-"), _n(v) if isinstance(v, (int, float)) else v))
        head = "<%s %s" % (tag, " ".join(parts))
        self.items.append(head + (">%s</%s>" % (text, tag) if text is not None else "/>"))

    def svg(self) -> bytes:
        out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" viewBox="0 0 %s %s">'
               % (_n(self.width), _n(self.height), _n(self.width), _n(self.height)),
               '<rect width="100%" height="100%" fill="white"/>']
        out += self.items
        out.append("</svg>")
        return ("\n".join(out) + "\n").encode("ascii")


def _color(k):
    return PALETTE[k % len(PALETTE)]


# ---------------------------------------------------------------------------
# interval model

def _footprints(f: ArcFamily, lengths):
    """Per boundary, the list of (arc, end, start, width) in drawing units."""
    out = {}
    for b in range(f.boundaries):
        ends = end_interval(f, b)
        tot = total_weight(f, b)
        x = 0.0
        out[b] = []
        for be in ends:
            w = float(be.width / tot) * lengths[b] if tot else 0.0
            out[b].append((be.arc, be.end, x, w))
            x += w
    return out


def render_interval(f: ArcFamily, spec: RenderSpec) -> bytes:
    W = spec.size
    margin, gap = 30.0, 20.0
    n = f.arity
    top_len = (W - 2 * margin - gap * max(n - 1, 0)) / max(n, 1)
    lengths = {0: W - 2 * margin}
    origin = {0: (margin, 0.0)}
    for b in range(1, n + 1):
        lengths[b] = top_len
        origin[b] = (margin + (b - 1) * (top_len + gap), 0.0)
    H = W * 0.6
    y_top, y_bot = 60.0, H - 60.0
    c = _Canvas(W, H)
    feet = _footprints(f, lengths)

    def span(b, x, w):
        x0 = origin[b][0] + x
        return x0, x0 + w, (y_bot if b == 0 else y_top)

    for a, ((b0, _), (b1, _)) in enumerate(f.arcs):
        ends = {}
        for b in (b0, b1):
            for arc, e, x, w in feet[b]:
                if arc == a:
                    ends[e] = span(b, x, w)
        (p0, p1, py), (q0, q1, qy) = ends[0], ends[1]
        if py != qy:
            mid = (py + qy) / 2
            d = ("M %s %s C %s %s %s %s %s %s L %s %s C %s %s %s %s %s %s Z"
                 % tuple(map(_n, (p0, py, p0, mid, q1, mid, q1, qy, q0, qy, q0, mid, p1, mid, p1, py))))
        else:
            bulge = 80.0 if py == y_top else -80.0
            yb = py + bulge
            yi = py + bulge * 0.5
            d = ("M %s %s C %s %s %s %s %s %s L %s %s C %s %s %s %s %s %s Z"
                 % tuple(map(_n, (p0, py, p0, yb, q1, yb, q1, qy, q0, qy, q0, yi, p1, yi, p1, py))))
        c.add("path", d=d, fill=_color(a), fill_opacity="0.45", stroke=_color(a), stroke_width=1)
        if spec.labels:
            c.add("text", str(f.weights[a]), x=(p0 + p1 + q0 + q1) / 4, y=(py + qy) / 2 + (0 if py != qy else 30),
                  font_size=11, text_anchor="middle")
    for b in range(f.boundaries):
        x0, _ = origin[b]
        y = y_bot if b == 0 else y_top
        dashed = {} if feet[b] else {"stroke_dasharray": "4 3"}
        c.add("line", x1=x0, y1=y, x2=x0 + lengths[b], y2=y, stroke="black", stroke_width=3, **dashed)
        if spec.labels:
            c.add("text", "%d" % b, x=x0 - 12, y=y + 4, font_size=13)
    return c.svg()


# ---------------------------------------------------------------------------
# circle model

def render_circle(f: ArcFamily, spec: RenderSpec) -> bytes:
    W = spec.size
    c = _Canvas(W, W)
    cx = cy = W / 2
    R = W / 2 - 30
    n = f.arity
    ring = R * 0.5 if n > 1 else 0.0
    r = min(R * 0.22, (math.pi * ring / n) * 0.8) if n > 1 else R * 0.3
    centers = {0: (cx, cy, R)}
    for b in range(1, n + 1):
        t = 2 * math.pi * (b - 1) / n - math.pi / 2
        centers[b] = (cx + ring * math.cos(t), cy + ring * math.sin(t), r)
    lengths = {b: 1.0 for b in range(f.boundaries)}
    feet = _footprints(f, lengths)

    def point(b, s):
        x, y, rad = centers[b]
        # boundary 0 runs with the induced orientation, inner ones against it
        t = 2 * math.pi * s * (1 if b == 0 else -1) - math.pi / 2
        return x + rad * math.cos(t), y + rad * math.sin(t)

    for b in range(f.boundaries):
        x, y, rad = centers[b]
        c.add("circle", cx=x, cy=y, r=rad, fill="none", stroke="black", stroke_width=2)
        px, py = point(b, 0)
        c.add("circle", cx=px, cy=py, r=3.5, fill="black")
        if spec.labels:
            c.add("text", "%d" % b, x=x + (0 if b else R * 0.92), y=y + 4 - (0 if b else R * 0.92),
                  font_size=13, text_anchor="middle")
    for a in range(len(f.arcs)):
        mids = []
        for b in range(f.boundaries):
            for arc, e, s, w in feet[b]:
                if arc == a:
                    steps = max(2, int(24 * w))
                    pts = [point(b, s + w * k / steps) for k in range(steps + 1)]
                    d = "M " + " L ".join("%s %s" % (_n(x), _n(y)) for x, y in pts)
                    c.add("path", d=d, fill="none", stroke=_color(a), stroke_width=6, stroke_opacity="0.8")
                    mids.append(point(b, s + w / 2))
        (x0, y0), (x1, y1) = mids
        c.add("path", d="M %s %s Q %s %s %s %s" % tuple(map(_n, (x0, y0, cx, cy, x1, y1))),
              fill="none", stroke=_color(a), stroke_width=1.5)
        if spec.labels:
            c.add("text", str(f.weights[a]), x=(x0 + x1 + 2 * cx) / 4, y=(y0 + y1 + 2 * cy) / 4,
                  font_size=11, text_anchor="middle")
    return c.svg()


# ---------------------------------------------------------------------------
# planar-loop model

def _touching(K: CircleConfiguration):
    """Edges (i, pos_i, j, pos_j) between circles other than 0 that share a point."""
    edges = []
    for cls in K.multiple_points:
        inner = {}
        for circ, x in cls:
            if circ:
                inner.setdefault(circ, x)
        labs = sorted(inner)
        for j in labs[1:]:
            edges.append((labs[0], inner[labs[0]], j, inner[j]))
    for I in K.identifications:
        if I.a and I.b and I.a != I.b:
            edges.append((I.a, I.start_a + I.length / 2, I.b, I.start_b + I.length / 2))
    return edges


def render_loop(K: CircleConfiguration, spec: RenderSpec) -> bytes:
    inner = list(range(1, K.circles)) or [0]
    rad = {i: float(K.circumferences[i]) / (2 * math.pi) for i in inner}
    angle = lambda i, x: 2 * math.pi * float(Fraction(x) / K.circumferences[i]) - math.pi / 2
    place = {}
    adj = {i: [] for i in inner}
    for i, xi, j, xj in _touching(K):
        if i in adj and j in adj:
            adj[i].append((j, xi, xj))
            adj[j].append((i, xj, xi))
    shift = 0.0
    for root in inner:
        if root in place:
            continue
        place[root] = (shift + rad[root], 0.0, 0.0)
        queue = [root]
        while queue:
            i = queue.pop(0)
            for j, xi, xj in sorted(adj[i]):
                if j in place:
                    continue
                xi0, yi0, roti = place[i]
                t = angle(i, xi) + roti
                px, py = xi0 + rad[i] * math.cos(t), yi0 + rad[i] * math.sin(t)
                # rotate circle j so that its touching point faces circle i
                place[j] = (px + rad[j] * math.cos(t), py + rad[j] * math.sin(t), t + math.pi - angle(j, xj))
                queue.append(j)
        shift = max(place[k][0] + rad[k] for k in place) + max(rad.values()) * 0.5
    rot = {i: place[i][2] for i in inner}
    xs = [place[i][0] - rad[i] for i in inner] + [place[i][0] + rad[i] for i in inner]
    ys = [place[i][1] - rad[i] for i in inner] + [place[i][1] + rad[i] for i in inner]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    W = spec.size
    scale = (W - 60) / span
    ox, oy = 30 - min(xs) * scale, 30 - min(ys) * scale
    c = _Canvas(W, W)

    def at(i, x):
        t = angle(i, x) + rot[i]
        return (ox + (place[i][0] + rad[i] * math.cos(t)) * scale,
                oy + (place[i][1] + rad[i] * math.sin(t)) * scale)

    for i in inner:
        c.add("circle", cx=ox + place[i][0] * scale, cy=oy + place[i][1] * scale, r=rad[i] * scale,
              fill="none", stroke="black", stroke_width=2)
        bx, by = at(i, 0)
        c.add("circle", cx=bx, cy=by, r=3.5, fill="black")
        if spec.labels:
            c.add("text", "%d" % i, x=ox + place[i][0] * scale, y=oy + place[i][1] * scale + 4,
                  font_size=13, text_anchor="middle")
    for k, I in enumerate(K.identifications):
        if not (I.a and I.b):
            continue
        for circ, s in ((I.a, I.start_a), (I.b, I.start_b)):
            steps = 16
            pts = [at(circ, s + I.length * q / steps) for q in range(steps + 1)]
            c.add("path", d="M " + " L ".join("%s %s" % (_n(x), _n(y)) for x, y in pts),
                  fill="none", stroke=_color(k), stroke_width=5, stroke_opacity="0.7")
    return c.svg()


# ---------------------------------------------------------------------------

def render(x, spec: RenderSpec | None = None, **kw) -> bytes:
    spec = spec or RenderSpec(**kw)
    if spec.model not in MODELS:
        raise RenderError("unknown model %r; choose one of %s" % (spec.model, ", ".join(MODELS)))
    if isinstance(x, Cactus):
        if spec.model != "planar-loop":
            raise RenderError("cacti render only in the planar-loop model")
        x = cactus_configuration(x)
    if isinstance(x, CircleConfiguration):
        if spec.model != "planar-loop":
            raise RenderError("configurations render only in the planar-loop model")
        return render_loop(x, spec)
    if isinstance(x, ArcFamily):
        if spec.model == "interval":
            return render_interval(x, spec)
        if spec.model == "circle":
            return render_circle(x, spec)
        if not is_exhaustive(x):
            raise RenderError("the planar-loop model needs an exhaustive family")
        return render_loop(loop_of(x), spec)
    raise RenderError("cannot render %s" % type(x).__name__)
