"""SVG pictures of the Farey tessellation in the Poincare disc.

The upper half-plane maps to the unit disc through w = (z - i)/(z + i),
sending the boundary line to the unit circle and infinity to 1.  Geodesics
become circular arcs orthogonal to the unit circle; they are drawn as
sampled polylines, which sidesteps SVG arc-flag bookkeeping.  This is the
one place in the package where floating point appears, and it only ever
touches display coordinates.
"""

from __future__ import annotations

import math

from .core import BoundaryPoint, Slope, adjacent, enumerate_slopes
from .mapclass import FixedTriangle, MappingClass, Periodic, PseudoAnosov, Reducible
from .solver import solve

__all__ = ["render_svg"]

_ARC_SAMPLES = 48
_CLASS_COLORS = ("#d62728", "#1f77b4", "#9467bd", "#8c564b")


def _boundary_real(x: BoundaryPoint) -> float | None:
    """Real coordinate on the half-plane boundary; None for infinity."""
    if isinstance(x, Slope):
        if x.q == 0:
            return None
        return x.p / x.q
    return x.approx()


def _disc_point(x: BoundaryPoint) -> complex:
    r = _boundary_real(x)
    if r is None:
        return complex(1.0, 0.0)
    z = complex(r, 0.0)
    return (z - 1j) / (z + 1j)


def _geodesic_points(u: complex, v: complex) -> list[complex]:
    """Sample the geodesic between two unit-circle points inside the disc."""
    if abs(u + v) < 1e-12:  # diameter
        return [u + (v - u) * k / _ARC_SAMPLES for k in range(_ARC_SAMPLES + 1)]
    # center of the orthogonal circle: solves Re(c * conj(u)) = Re(c * conj(v)) = 1
    det = u.real * v.imag - u.imag * v.real
    if abs(det) < 1e-12:
        return [u, v]
    c = complex((v.imag - u.imag) / det, (u.real - v.real) / det)
    radius = math.sqrt(abs(c) ** 2 - 1.0)
    theta_u = math.atan2(u.imag - c.imag, u.real - c.real)
    theta_v = math.atan2(v.imag - c.imag, v.real - c.real)
    inner = c * (1.0 - radius / abs(c))  # point of the arc nearest the origin
    theta_p = math.atan2(inner.imag - c.imag, inner.real - c.real)
    ccw = (theta_v - theta_u) % (2 * math.pi)
    if (theta_p - theta_u) % (2 * math.pi) > ccw:
        ccw -= 2 * math.pi  # go clockwise instead
    return [
        c + radius * complex(math.cos(theta_u + ccw * k / _ARC_SAMPLES),
                             math.sin(theta_u + ccw * k / _ARC_SAMPLES))
        for k in range(_ARC_SAMPLES + 1)
    ]


def _polyline(points: list[complex], stroke: str, width: float) -> str:
    coords = " ".join(f"{p.real:.5f},{p.imag:.5f}" for p in points)
    return (
        f'<polyline fill="none" stroke="{stroke}" '
        f'stroke-width="{width}" points="{coords}"/>'
    )


def _geodesic_line(x: BoundaryPoint, y: BoundaryPoint, stroke: str, width: float) -> str:
    return _polyline(_geodesic_points(_disc_point(x), _disc_point(y)), stroke, width)


def _dot(x: BoundaryPoint, fill: str, radius: float) -> str:
    w = _disc_point(x)
    return f'<circle cx="{w.real:.5f}" cy="{w.imag:.5f}" r="{radius}" fill="{fill}"/>'


def render_svg(m: MappingClass, display_bound: int = 12) -> str:
    """Farey tessellation with the invariant structure of m highlighted.

    Draws every edge whose endpoints both lie in the slope universe of the
    display bound, then the axis and solution classes (pseudo-Anosov), the
    fixed cell (periodic) or the fixed slope (reducible).
    """
    universe = enumerate_slopes(display_bound)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="640" height="640" viewBox="-1.1 -1.1 2.2 2.2">',
        '<g transform="scale(1,-1)">',
        '<circle cx="0" cy="0" r="1" fill="white" stroke="#333" stroke-width="0.006"/>',
    ]
    for i, u in enumerate(universe):
        for w in universe[i + 1:]:
            if adjacent(u, w):
                parts.append(_geodesic_line(u, w, "#bbbbbb", 0.003))

    cls = m.classify()
    if isinstance(cls, PseudoAnosov):
        parts.append(_geodesic_line(cls.repelling, cls.attracting, "#ff7f0e", 0.010))
        for e in m.axis().edges:
            parts.append(_geodesic_line(e.low, e.high, "#2ca02c", 0.006))
        result = solve(m)
        for idx, arc_class in enumerate(result.classes):
            color = _CLASS_COLORS[idx % len(_CLASS_COLORS)]
            for member in arc_class.members:
                parts.append(_dot(member, color, 0.018))
            parts.append(_dot(arc_class.representative, color, 0.030))
    elif isinstance(cls, Periodic):
        cell = m.elliptic_fixed_cell()
        if isinstance(cell, FixedTriangle):
            edges = cell.triangle.edges()
            verts = cell.triangle.vertices
        else:
            edges = (cell.edge,)
            verts = cell.edge.endpoints
        for e in edges:
            parts.append(_geodesic_line(e.low, e.high, "#d62728", 0.008))
        for v in verts:
            parts.append(_dot(v, "#d62728", 0.022))
    elif isinstance(cls, Reducible):
        parts.append(_dot(cls.fixed_slope, "#d62728", 0.030))

    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts)
