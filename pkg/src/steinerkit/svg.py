"""Static SVG figures: profiles over the line, top views over the plane."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .field import PwAffineField, facet_traces, positive_support

W, H, PAD = 640, 400, 40


def _f(x) -> str:
    return f"{float(x):.3f}"


class _Frame:
    def __init__(self, xs, ys):
        self.x0, self.x1 = float(min(xs)), float(max(xs))
        self.y0, self.y1 = float(min(ys)), float(max(ys))
        if self.x1 == self.x0:
            self.x1 += 1
        if self.y1 == self.y0:
            self.y1 += 1

    def __call__(self, x, y):
        px = PAD + (float(x) - self.x0) / (self.x1 - self.x0) * (W - 2 * PAD)
        py = H - PAD - (float(y) - self.y0) / (self.y1 - self.y0) * (H - 2 * PAD)
        return px, py


def _doc(body: list, title: str) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">\n'
            f'<title>{escape(title)}</title>\n<rect width="{W}" height="{H}" fill="white"/>\n')
    return head + "\n".join(body) + "\n</svg>\n"


def profile_svg(v: PwAffineField, b: PwAffineField | None = None, title: str = "profile") -> str:
    """The set between ``b - v/2`` and ``b + v/2`` over each cell, the graph
    of ``b``, and a bar of height ``[v]`` at every facet."""
    cx = v.complex
    b = b or PwAffineField.zero(cx, "b")
    supp = sorted(positive_support(v))
    xs, ys = [], [0]
    polys = []
    for c in supp:
        (a,), (z,) = cx.cells[c].vertices
        lo = [b.value(c, (t,)) - v.value(c, (t,)) / 2 for t in (a, z)]
        hi = [b.value(c, (t,)) + v.value(c, (t,)) / 2 for t in (a, z)]
        polys.append((c, a, z, lo, hi))
        xs += [a, z]
        ys += lo + hi
    jumps = []
    for f in cx.facets:
        j = facet_traces(v, f).jump[0]
        if j > 0:
            jumps.append((f.endpoints[0][0], j))
            ys.append(-j)
    fr = _Frame(xs or [0, 1], ys)
    body = []
    for c, a, z, lo, hi in polys:
        pts = [fr(a, lo[0]), fr(z, lo[1]), fr(z, hi[1]), fr(a, hi[0])]
        body.append('<polygon points="' + " ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
                    + f'" fill="#9ecae1" stroke="#08519c"><title>{escape(cx.cells[c].label)}</title></polygon>')
        (x0, y0), (x1, y1) = fr(a, (lo[0] + hi[0]) / 2), fr(z, (lo[1] + hi[1]) / 2)
        body.append(f'<line x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" stroke="#d62728" stroke-dasharray="4 3"/>')
    for z, j in jumps:
        (x0, y0), (x1, y1) = fr(z, 0), fr(z, -j)
        body.append(f'<line x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" stroke="#2ca02c" stroke-width="3"/>')
    return _doc(body, title)


def topview_svg(v: PwAffineField, crossable: dict | None = None, title: str = "top view") -> str:
    """Cells shaded by the mean of ``v``; interior facets green when
    crossable, red when not, exterior facets grey."""
    cx = v.complex
    crossable = crossable or {}
    xs = [p[0] for c in cx.cells for p in c.vertices]
    ys = [p[1] for c in cx.cells for p in c.vertices]
    # keep the aspect ratio square
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    fr = _Frame([min(xs), min(xs) + span], [min(ys), min(ys) + span])
    means = {c: v.value(c, cx.cells[c].centroid) for c in positive_support(v)}
    top = max(means.values(), default=1) or 1
    body = []
    for cell in cx.cells:
        m = means.get(cell.index)
        shade = 255 if m is None else int(235 - 180 * float(m) / float(top))
        pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in (fr(*p) for p in cell.vertices))
        body.append(f'<polygon points="{pts}" fill="rgb({shade},{shade},255)" stroke="none">'
                    f'<title>{escape(cell.label)}</title></polygon>')
    for f in cx.facets:
        color = "#888888" if not f.interior else ("#2ca02c" if crossable.get(f.index) else "#d62728")
        (x0, y0), (x1, y1) = fr(*f.endpoints[0]), fr(*f.endpoints[1])
        body.append(f'<line x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" stroke="{color}" stroke-width="2"/>')
    return _doc(body, title)


def scene_svg(v: PwAffineField, b: PwAffineField | None = None, crossable: dict | None = None,
              title: str = "scene") -> str:
    if v.complex.dim == 1:
        return profile_svg(v, b, title)
    return topview_svg(v, crossable, title)
