"""Named pattern graphs.

G1-G5 and F1-F11 are kept as the coordinate drawings they were taken from:
marked points plus polylines.  A straight segment joins consecutive marked
points lying on it, so a polyline through a collinear marked point is two
edges.  Dotted segments are the extra edges that turn one member of a family
into the next (F3 -> F4, F5 -> F6, F7 -> F8 -> F9, F10 -> F11).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from irlab.graph import Graph, cycle, disjoint_union, path

Point = tuple[float, float]


@dataclass(frozen=True)
class Drawing:
    points: tuple[Point, ...]
    lines: tuple[tuple[Point, ...], ...]
    dotted: tuple[tuple[Point, ...], ...] = ()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    expected_ir: int
    expected_gamma: int
    provenance: str
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return self.graph.n


def _q(p: Point) -> tuple[Fraction, Fraction]:
    return Fraction(str(p[0])), Fraction(str(p[1]))


def _segment_edges(points, a, b):
    (x1, y1), (x2, y2) = _q(a), _q(b)
    on = []
    for p in points:
        x, y = _q(p)
        if (x - x1) * (y2 - y1) != (y - y1) * (x2 - x1):
            continue
        if not (min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2)):
            continue
        t = (x - x1) / (x2 - x1) if x2 != x1 else (y - y1) / (y2 - y1)
        on.append((t, p))
    on.sort()
    if on[0][1] != a or on[-1][1] != b:
        raise ValueError(f"segment {a}-{b} does not end on marked points")
    return [(on[i][1], on[i + 1][1]) for i in range(len(on) - 1)]


def graph_from_drawing(d: Drawing, dotted: int = 0) -> tuple[Graph, tuple[str, ...]]:
    """Graph of a drawing with its first ``dotted`` dotted segments included.

    Vertices are numbered by ascending (x, y) coordinate.
    """
    pts = sorted(set(d.points), key=_q)
    index = {p: i for i, p in enumerate(pts)}
    polylines = list(d.lines) + list(d.dotted[:dotted])
    edges = set()
    for line in polylines:
        for a, b in zip(line, line[1:]):
            for u, v in _segment_edges(pts, a, b):
                edges.add((min(index[u], index[v]), max(index[u], index[v])))
    labels = tuple(f"({p[0]:g},{p[1]:g})" for p in pts)
    return Graph.from_edges(len(pts), sorted(edges)), labels


# Drawings of G1-G5, coordinates as drawn.
G1_DRAWING = Drawing(
    points=((1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)),
    lines=(((1, 1), (1, 3), (2, 3), (2, 1)), ((1, 2), (2, 2))),
)
G2_DRAWING = Drawing(
    points=((4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)),
    lines=(((4, 1), (4, 3), (5, 3), (5, 1), (4, 1)), ((4, 2), (5, 2))),
)
G3_DRAWING = Drawing(
    points=((7, 1), (7, 2), (7, 3), (8, 1), (8, 2), (8, 3), (7.5, 3.5)),
    lines=(((7, 1), (7, 3), (7.5, 3.5), (8, 3), (8, 1)), ((7, 2), (8, 2))),
)
G4_DRAWING = Drawing(
    points=((10, 1), (10, 2), (10, 3), (11, 1), (11, 2), (11, 3), (10.5, 3.5)),
    lines=(((10, 1), (10, 3), (10.5, 3.5), (11, 3), (11, 1)), ((10, 2), (11, 2)),
           ((10, 3), (11, 3))),
)
G5_DRAWING = Drawing(
    points=((13, 1), (13, 2), (13, 3), (14, 1), (14, 2), (14, 3), (13.5, 3.5)),
    lines=(((13, 1), (13, 3), (13.5, 3.5), (14, 3), (14, 1), (13, 1)), ((13, 2), (14, 2)),
           ((13, 3), (14, 3))),
)

# Drawings of F1-F11; dotted segments are the optional edges.
F1_DRAWING = Drawing(
    points=((1, 2), (1, 3), (1, 4), (1.5, 1.5), (2, 2), (2, 3), (2, 4)),
    lines=(((1, 4), (1, 2), (1.5, 1.5), (2, 2), (2, 4)), ((1, 2), (2, 2)), ((1, 3), (2, 3))),
)
F2_DRAWING = Drawing(
    points=((4, 2), (4, 3), (4, 4), (4.5, 1.5), (5, 2), (5, 3), (5, 4), (4.5, 2.5)),
    lines=(((4, 4), (4, 2), (4.5, 1.5), (5, 2), (5, 4), (4, 4)), ((4, 2), (5, 2)),
           ((4, 3), (5, 3)), ((4, 3), (4.5, 2.5), (5, 3))),
)
F3_DRAWING = Drawing(
    points=((7, 2), (7, 3), (7, 4), (8, 1.5), (9, 2), (9, 3), (9, 4), (7.5, 3.5), (8.5, 3.5)),
    lines=(((7, 4), (7, 2), (8, 1.5), (9, 2), (9, 4), (7, 4)), ((7, 2), (9, 2)),
           ((7, 3), (9, 3)), ((8.5, 3.5), (7.5, 3.5)), ((7, 3), (8.5, 3.5), (9, 4)),
           ((7, 4), (7.5, 3.5), (9, 3))),
    dotted=(((7.5, 3.5), (7, 3)),),
)
F5_DRAWING = Drawing(
    points=((11, 2), (11, 3), (11, 4), (12, 1.5), (13, 2), (13, 3), (13, 4), (11.5, 3.5),
            (12.5, 3.5)),
    lines=(((11, 4), (11, 2), (12, 1.5), (13, 2), (13, 4), (11, 4)), ((11, 2), (13, 2)),
           ((11, 3), (13, 3)), ((11, 3), (11.5, 3.5)), ((13, 3), (12.5, 3.5)),
           ((11, 3), (12.5, 3.5), (13, 4)), ((11, 4), (11.5, 3.5), (13, 3))),
    dotted=(((12.5, 3.5), (11.5, 3.5)),),
)
F7_DRAWING = Drawing(
    points=((0, 1), (0, 2.5), (0, 4), (0.75, 0.5), (0.75, 3.25), (1.5, 1), (1.5, 2.5),
            (1.5, 4), (3, 3.25), (4.5, 1), (4.5, 2.5), (4.5, 4), (5.25, 0.5), (5.25, 3.25),
            (6, 1), (6, 2.5), (6, 4)),
    lines=(((0, 1), (0.75, 0.5), (1.5, 1), (0, 1), (0, 4), (1.5, 4), (1.5, 1)),
           ((0, 2.5), (1.5, 2.5), (0, 4)),
           ((0.75, 0.5), (3, 3.25), (0, 1)),
           ((1.5, 2.5), (3, 3.25), (0, 2.5)),
           ((0.75, 3.25), (3, 3.25), (1.5, 4)),
           ((4.5, 1), (5.25, 0.5), (6, 1), (4.5, 1), (4.5, 4), (6, 4), (6, 1)),
           ((6, 2.5), (4.5, 2.5), (6, 4)),
           ((5.25, 0.5), (3, 3.25), (6, 1)),
           ((4.5, 2.5), (3, 3.25), (6, 2.5)),
           ((5.25, 3.25), (3, 3.25), (4.5, 4))),
    dotted=(((0, 2.5), (0.75, 3.25)), ((6, 2.5), (5.25, 3.25))),
)
F10_DRAWING = Drawing(
    points=((8, 1), (8, 2.5), (8, 4), (8.75, 0.5), (8.75, 3.25), (9.5, 1), (9.5, 2.5),
            (9.5, 4), (11, 3.25), (12.5, 1), (12.5, 2.5), (12.5, 4), (12, 4.5), (14.5, 4.5),
            (14, 1), (14, 2.5), (14, 4)),
    lines=(((8, 1), (8.75, 0.5), (9.5, 1), (8, 1), (8, 4), (9.5, 4), (9.5, 1)),
           ((8, 2.5), (9.5, 2.5), (8, 4)),
           ((8.75, 0.5), (11, 3.25), (8, 1)),
           ((9.5, 2.5), (11, 3.25), (8, 2.5)),
           ((8.75, 3.25), (11, 3.25), (9.5, 4)),
           ((14, 2.5), (14, 1), (12.5, 1), (12.5, 4), (14, 4), (14, 2.5), (14.5, 4.5),
            (12, 4.5), (12.5, 2.5)),
           ((12, 4.5), (14, 4), (12.5, 4), (14.5, 4.5)),
           ((12.5, 1), (11, 3.25), (14, 1)),
           ((12.5, 4), (11, 3.25), (14, 4)),
           ((12, 4.5), (11, 3.25), (14.5, 4.5))),
    dotted=(((8, 2.5), (8.75, 3.25)),),
)

# name, drawing, dotted segments used, ir, gamma (frozen from the brute-force oracle), note
_DRAWN = (
    ("G1", G1_DRAWING, 0, 2, 2, "G1: six vertices"),
    ("G2", G2_DRAWING, 0, 2, 2, "G2: six-cycle with one long chord"),
    ("G3", G3_DRAWING, 0, 3, 3, "G3: seven vertices"),
    ("G4", G4_DRAWING, 0, 2, 3, "G4: seven vertices, two pendant vertices"),
    ("G5", G5_DRAWING, 0, 2, 2, "G5: G4 with its pendant vertices joined"),
    ("F1", F1_DRAWING, 0, 2, 3,
     "F1; 7 vertices as <v,f1,f2,y1,y2,u',u''> in the u'u'' non-edge case"),
    ("F2", F2_DRAWING, 0, 2, 3, "F2; 8 vertices as <v,f1,f2,y1,y2,c,a,b>"),
    ("F3", F3_DRAWING, 0, 2, 3, "F3 (drawing without dotted edge); 9 vertices"),
    ("F4", F3_DRAWING, 1, 2, 3, "F4 (F3 drawing plus dotted edge); 9 vertices"),
    ("F5", F5_DRAWING, 0, 2, 3, "F5 (drawing without dotted edge); 9 vertices"),
    ("F6", F5_DRAWING, 1, 2, 3, "F6 (F5 drawing plus dotted edge); 9 vertices"),
    ("F7", F7_DRAWING, 0, 4, 5, "F7 (no dotted edges); 17 vertices"),
    ("F8", F7_DRAWING, 1, 4, 5, "F8 (one dotted edge); 17 vertices"),
    ("F9", F7_DRAWING, 2, 4, 5, "F9 (both dotted edges); 17 vertices"),
    ("F10", F10_DRAWING, 0, 4, 5, "F10 (no dotted edge); 17 vertices"),
    ("F11", F10_DRAWING, 1, 4, 5, "F11 (dotted edge added); 17 vertices"),
)

F_NAMES = tuple(f"F{i}" for i in range(1, 12))
G_NAMES = tuple(f"G{i}" for i in range(1, 6))


def _h_graph() -> Graph:
    # G4 minus one of its pendant vertices; either choice gives the same graph.
    g4, _ = graph_from_drawing(G4_DRAWING)
    pendant = min(v for v in g4.vertices if g4.degree(v) == 1)
    return g4.delete_vertex(pendant)


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    """All named graphs, in a fixed order."""
    out = [
        CatalogEntry("P4", path(4), 2, 2, "induced path on four vertices"),
        CatalogEntry("P5", path(5), 2, 2, "induced path on five vertices"),
        CatalogEntry("P6", path(6), 2, 2, "induced path on six vertices"),
        CatalogEntry("C6", cycle(6), 2, 2, "six-cycle"),
        CatalogEntry("TWO_P4", disjoint_union(path(4), path(4)), 4, 4,
                     "disjoint union of two P4"),
    ]
    drawn = {}
    for name, drawing, dotted, ir, gamma, note in _DRAWN:
        g, labels = graph_from_drawing(drawing, dotted)
        drawn[name] = CatalogEntry(name, g, ir, gamma, note, labels)
    out.extend(drawn[n] for n in G_NAMES)
    out.append(CatalogEntry("H", _h_graph(), 2, 2, "G4 with one pendant vertex deleted"))
    out.extend(drawn[n] for n in F_NAMES)
    return tuple(out)


def names() -> list[str]:
    return [e.name for e in catalog()]


def get(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(f"unknown catalog name {name!r}")
