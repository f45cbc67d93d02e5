"""Link diagrams over combinatorial maps, in two flavors.

A TripleDiagram has 6-valent vertices where three strands cross at a
point; each vertex carries a height word, a permutation of "TMB" naming
the level (Top, Middle, Bottom) of its three strands.  A DoubleDiagram
has 4-valent vertices, each recording which of its two strands passes
over.  Either kind may instead consist of ``loops`` crossingless circles
(then the map is empty; mixing circles with crossings would make a split
diagram and is rejected).

Text format, '#' starts a comment, tokens separated by whitespace:

- triple crossing: ``T(a,b,c,d,e,f)/XYZ`` lists the six edge labels
  counterclockwise; strands are the opposite pairs (a,d), (b,e), (c,f)
  and XYZ gives their levels in that order.
- plain crossing: ``X(a,b,c,d)`` lists four labels counterclockwise with
  the under strand at (a,c) and the over strand at (b,d).
- ``loops=k`` declares k crossingless circles.

Across a diagram with n crossings the labels must be exactly 1..3n (or
1..2n), each appearing twice; equal labels are the two ends of one edge.

Faces of a validated diagram admit exactly two checkerboard colorings;
``majority_white`` picks the one with at least as many white faces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import (
    BadParameters,
    ColoringImpossible,
    Disconnected,
    LabelCountError,
    ParseError,
)
from .planarmap import (
    PlanarMap,
    build_map,
    directed_strand_orbits,
    strand_components,
)

__all__ = [
    "LEVEL_RANK",
    "Coloring",
    "checkerboard",
    "majority_white",
    "Orientation",
    "natural_orientation",
    "coloring_orientation",
    "component_orientations",
    "TripleDiagram",
    "DoubleDiagram",
    "parse_triple",
    "parse_double",
    "parse_diagram",
    "serialize_triple",
    "serialize_double",
]

LEVEL_RANK = {"B": 0, "M": 1, "T": 2}


# -- checkerboard colorings ------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A two-coloring of the faces of a map, by face index."""

    white: frozenset
    black: frozenset

    def is_white(self, face: int) -> bool:
        if face in self.white:
            return True
        if face in self.black:
            return False
        raise KeyError(face)

    def swapped(self) -> "Coloring":
        return Coloring(self.black, self.white)

    @property
    def n_white(self) -> int:
        return len(self.white)

    @property
    def n_black(self) -> int:
        return len(self.black)


def checkerboard(m: PlanarMap) -> Coloring:
    """Two-color the faces so edge-adjacent faces differ.

    Face 0 starts white; the other coloring is ``swapped()``.  A diagram
    map is bridgeless, so the coloring always exists; ColoringImpossible
    guards against maps where it does not.
    """
    if m.is_empty:
        return Coloring(frozenset(), frozenset())
    color = {0: True}
    queue = [0]
    while queue:
        f = queue.pop()
        for d in m.faces[f]:
            g = m.face_of(m.alpha[d])
            if g not in color:
                color[g] = not color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise ColoringImpossible(
                    f"faces {f} and {g} share an edge but need equal colors"
                )
    white = frozenset(f for f, c in color.items() if c)
    black = frozenset(f for f, c in color.items() if not c)
    return Coloring(white, black)


def majority_white(m: PlanarMap, coloring: Coloring | None = None) -> Coloring:
    """The checkerboard coloring with at least as many white faces.

    On a tie the input coloring (or the default from ``checkerboard``)
    is kept.
    """
    if coloring is None:
        coloring = checkerboard(m)
    if coloring.n_white < coloring.n_black:
        return coloring.swapped()
    return coloring


# -- orientations ----------------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    """A direction for every strand: the set of forward darts.

    Exactly one dart of each edge is forward; the forward darts of a
    component form one coherent straight-through traversal.
    """

    forward: frozenset

    def is_forward(self, d: int) -> bool:
        return d in self.forward


def natural_orientation(m: PlanarMap) -> Orientation:
    """Direct every component so its least dart is traversed forward."""
    fwd: set[int] = set()
    for orbit, _ in directed_strand_orbits(m):
        fwd.update(orbit)
    return Orientation(frozenset(fwd))


def coloring_orientation(m: PlanarMap, coloring: Coloring) -> Orientation:
    """Direct each strand so white faces sit to the right of travel.

    Only 6-valent maps admit this: colors alternate around a vertex, so
    each strand pair (opposite darts) holds one white-faced and one
    black-faced dart, and the white-faced darts form a coherent strand
    orientation.  At 4-valent vertices opposite darts share a color and
    the rule breaks down.
    """
    if m.is_empty:
        return Orientation(frozenset())
    if len(m.vertices[0]) == 4:
        raise BadParameters(
            "white-on-the-right directs strands only at 6-valent vertices"
        )
    fwd = frozenset(d for d in m.darts if coloring.is_white(m.face_of(d)))
    for a, b in m.edges:
        if (a in fwd) == (b in fwd):
            raise ColoringImpossible(
                f"edge ({a},{b}) does not separate the two colors"
            )
    return Orientation(fwd)


def component_orientations(m: PlanarMap) -> Iterator[Orientation]:
    """All orientations up to reversing every component at once.

    Yields 2^(r-1) orientations: the first component keeps its natural
    direction, the others take both.  Reversing all components of a link
    at once preserves every crossing sign, so this covers each class.
    """
    orbits = directed_strand_orbits(m)
    if not orbits:
        yield Orientation(frozenset())
        return
    head, tail = orbits[0], orbits[1:]
    for choice in product((0, 1), repeat=len(tail)):
        fwd = set(head[0])
        for bit, (f, r) in zip(choice, tail):
            fwd.update(r if bit else f)
        yield Orientation(frozenset(fwd))


# -- diagram classes -------------------------------------------------------


def _check_loops(m: PlanarMap, loops: int) -> None:
    if loops < 0:
        raise BadParameters("loops must be nonnegative")
    if loops > 0 and not m.is_empty:
        raise Disconnected(
            "crossings plus free circles form a split diagram"
        )


class TripleDiagram:
    """A diagram whose crossings are 6-valent triple points.

    ``heights`` maps each vertex (keyed by the least dart of its
    rotation) to a permutation of "TMB": with the rotation written
    (z0..z5), the letters give the levels of strands (z0,z3), (z1,z4),
    (z2,z5) in order.
    """

    __slots__ = ("map", "heights", "loops")

    def __init__(self, m: PlanarMap, heights: Mapping[int, str], loops: int = 0):
        _check_loops(m, loops)
        keys = {cyc[0] for cyc in m.vertices}
        if set(heights) != keys:
            raise BadParameters(
                "heights must be keyed by the least dart of every vertex"
            )
        for k, word in heights.items():
            if len(word) != 3 or set(word) != {"T", "M", "B"}:
                raise BadParameters(
                    f"height word {word!r} at vertex {k} is not a"
                    " permutation of TMB"
                )
        if m.darts and len(m.vertices[0]) != 6:
            raise BadParameters("triple diagrams need 6-valent vertices")
        self.map = m
        self.heights = dict(heights)
        self.loops = loops

    @property
    def n(self) -> int:
        """Number of triple crossings."""
        return self.map.n_vertices

    @property
    def r(self) -> int:
        """Number of link components, free circles included."""
        if self.map.is_empty:
            return self.loops
        return strand_components(self.map).r + self.loops

    def rotation(self, v: int) -> tuple[int, ...]:
        return self.map.vertices[v]

    def strand_pairs(self, v: int) -> tuple[tuple[int, int], ...]:
        c = self.map.vertices[v]
        return ((c[0], c[3]), (c[1], c[4]), (c[2], c[5]))

    def level_of(self, d: int) -> str:
        """The TMB letter of the strand carrying dart ``d``."""
        cyc = self.map.vertex_cycle(d)
        return self.heights[cyc[0]][cyc.index(d) % 3]

    def mirror(self) -> "TripleDiagram":
        """Swap top and bottom levels everywhere (reflect through the page)."""
        flip = {"T": "B", "M": "M", "B": "T"}
        heights = {
            k: "".join(flip[ch] for ch in word)
            for k, word in self.heights.items()
        }
        return TripleDiagram(self.map, heights, self.loops)

    def reflected(self) -> "TripleDiagram":
        """Reflect within the plane: reverse every rotation, keep levels.

        At a vertex whose rotation (c0..c5) becomes (c0, c5, c4, c3,
        c2, c1), the strands through positions 1 and 2 trade places, so
        the height word (w0, w1, w2) becomes (w0, w2, w1).
        """
        if self.map.is_empty:
            return self
        sigma_inv = {v: k for k, v in self.map.sigma.items()}
        new_map = build_map(self.map.darts, self.map.alpha, sigma_inv)
        heights = {
            k: w[0] + w[2] + w[1] for k, w in self.heights.items()
        }
        return TripleDiagram(new_map, heights, self.loops)

    def __repr__(self) -> str:
        return f"TripleDiagram(n={self.n}, loops={self.loops})"


class DoubleDiagram:
    """A diagram whose crossings are plain 4-valent crossings.

    ``over`` maps each vertex (keyed by the least dart of its rotation)
    to the frozenset of the two darts of its over strand, which are
    opposite in the rotation.
    """

    __slots__ = ("map", "over", "loops")

    def __init__(self, m: PlanarMap, over: Mapping[int, frozenset], loops: int = 0):
        _check_loops(m, loops)
        keys = {cyc[0] for cyc in m.vertices}
        if set(over) != keys:
            raise BadParameters(
                "over must be keyed by the least dart of every vertex"
            )
        if m.darts and len(m.vertices[0]) != 4:
            raise BadParameters("plain diagrams need 4-valent vertices")
        normalized = {}
        for k, pair in over.items():
            pair = frozenset(pair)
            cyc = m.vertex_cycle(k)
            if len(pair) != 2 or not pair <= set(cyc):
                raise BadParameters(f"over pair {set(pair)} not at vertex {k}")
            a, b = pair
            if m.opposite(a) != b:
                raise BadParameters(
                    f"over darts {set(pair)} are not opposite at vertex {k}"
                )
            normalized[k] = pair
        self.map = m
        self.over = normalized
        self.loops = loops

    @property
    def n(self) -> int:
        """Number of crossings."""
        return self.map.n_vertices

    @property
    def r(self) -> int:
        if self.map.is_empty:
            return self.loops
        return strand_components(self.map).r + self.loops

    def over_pair(self, v: int) -> frozenset:
        return self.over[self.map.vertices[v][0]]

    def under_pair(self, v: int) -> frozenset:
        cyc = self.map.vertices[v]
        return frozenset(set(cyc) - self.over_pair(v))

    def is_over(self, d: int) -> bool:
        return d in self.over[self.map.vertex_cycle(d)[0]]

    def mirror(self) -> "DoubleDiagram":
        """Exchange over and under strands at every crossing."""
        over = {}
        for cyc in self.map.vertices:
            over[cyc[0]] = frozenset(set(cyc) - self.over[cyc[0]])
        return DoubleDiagram(self.map, over, self.loops)

    def insert_kink(self, dart: int | None = None, positive: bool = True) -> "DoubleDiagram":
        """Add a small curl, raising the crossing count by one.

        With ``dart`` given, the curl is placed on that dart's edge;
        otherwise the diagram must have a free circle, which becomes a
        one-crossing loop.  ``positive`` selects the curl whose crossing
        has writhe sign +1.

        The new vertex takes four fresh darts m0..m3 in counterclockwise
        order (m0, m1, m2, m3): m0 and m1 pair into the curl's petal,
        m2 joins the given dart's side and m3 the other side.  The over
        strand is {m1, m3} for the positive curl, {m0, m2} otherwise.
        """
        m = self.map
        if dart is None:
            if self.loops == 0:
                raise BadParameters(
                    "no free circle to curl; name a dart instead"
                )
            sigma = {0: 1, 1: 2, 2: 3, 3: 0}
            alpha = {0: 1, 1: 0, 2: 3, 3: 2}
            new_map = build_map(range(4), alpha, sigma)
            over = {0: frozenset({1, 3}) if positive else frozenset({0, 2})}
            return DoubleDiagram(new_map, over, self.loops - 1)

        if dart not in set(m.darts):
            raise BadParameters(f"{dart} is not a dart of this diagram")
        base = max(m.darts) + 1
        m0, m1, m2, m3 = base, base + 1, base + 2, base + 3
        other = m.alpha[dart]
        alpha = dict(m.alpha)
        alpha[m0], alpha[m1] = m1, m0
        alpha[m2], alpha[dart] = dart, m2
        alpha[m3], alpha[other] = other, m3
        sigma = dict(m.sigma)
        sigma[m0], sigma[m1], sigma[m2], sigma[m3] = m1, m2, m3, m0
        new_map = build_map(list(m.darts) + [m0, m1, m2, m3], alpha, sigma)
        over = {
            cyc[0]: self.over[cyc[0]]
            for cyc in m.vertices
        }
        over[m0] = frozenset({m1, m3}) if positive else frozenset({m0, m2})
        return DoubleDiagram(new_map, over, self.loops)

    def __repr__(self) -> str:
        return f"DoubleDiagram(n={self.n}, loops={self.loops})"


# -- parsing ---------------------------------------------------------------

_TRIPLE_RE = re.compile(r"T\((\d+),(\d+),(\d+),(\d+),(\d+),(\d+)\)/([TMB]{3})\Z")
_DOUBLE_RE = re.compile(r"X\((\d+),(\d+),(\d+),(\d+)\)\Z")
_LOOPS_RE = re.compile(r"loops=(\d+)\Z")


def _tokens(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        out.extend(line.split())
    return out


def _pair_labels(
    occurrences: Mapping[int, list[int]], n_edges: int
) -> dict[int, int]:
    expected = set(range(1, n_edges + 1))
    got = set(occurrences)
    if got != expected or any(len(v) != 2 for v in occurrences.values()):
        bad = sorted(
            lbl
            for lbl in got | expected
            if len(occurrences.get(lbl, ())) != 2
        )
        raise LabelCountError(
            f"labels must be 1..{n_edges}, each twice; offending: {bad}"
        )
    alpha = {}
    for darts in occurrences.values():
        a, b = darts
        alpha[a], alpha[b] = b, a
    return alpha


def _parse(text: str):
    """Split a diagram text into crossing tuples and a loop count."""
    loops = 0
    triples: list[tuple[tuple[int, ...], str]] = []
    doubles: list[tuple[int, ...]] = []
    saw_loops = False
    for tok in _tokens(text):
        mt = _TRIPLE_RE.match(tok)
        md = _DOUBLE_RE.match(tok)
        ml = _LOOPS_RE.match(tok)
        if mt:
            word = mt.group(7)
            if set(word) != {"T", "M", "B"}:
                raise ParseError(f"height word {word} repeats a level")
            triples.append((tuple(int(g) for g in mt.groups()[:6]), word))
        elif md:
            doubles.append(tuple(int(g) for g in md.groups()))
        elif ml:
            if saw_loops:
                raise ParseError("loops= given twice")
            loops = int(ml.group(1))
            saw_loops = True
        else:
            raise ParseError(f"unrecognized token {tok!r}")
    if triples and doubles:
        raise ParseError("cannot mix triple and plain crossings")
    if not triples and not doubles and not saw_loops:
        raise ParseError("empty input: no crossings and no loops")
    return triples, doubles, loops


def parse_triple(text: str) -> TripleDiagram:
    """Read a triple-crossing diagram from its text form."""
    triples, doubles, loops = _parse(text)
    if doubles:
        raise ParseError("expected triple crossings, found X(...)")
    occurrences: dict[int, list[int]] = {}
    heights = {}
    for t, (labels, word) in enumerate(triples):
        for j, lbl in enumerate(labels):
            occurrences.setdefault(lbl, []).append(6 * t + j)
        heights[6 * t] = word
    alpha = _pair_labels(occurrences, 3 * len(triples))
    sigma = {
        6 * t + j: 6 * t + (j + 1) % 6
        for t in range(len(triples))
        for j in range(6)
    }
    m = build_map(range(6 * len(triples)), alpha, sigma)
    return TripleDiagram(m, heights, loops)


def parse_double(text: str) -> DoubleDiagram:
    """Read a plain diagram from its text form."""
    triples, doubles, loops = _parse(text)
    if triples:
        raise ParseError("expected plain crossings, found T(...)")
    occurrences: dict[int, list[int]] = {}
    over = {}
    for t, labels in enumerate(doubles):
        for j, lbl in enumerate(labels):
            occurrences.setdefault(lbl, []).append(4 * t + j)
        over[4 * t] = frozenset({4 * t + 1, 4 * t + 3})
    alpha = _pair_labels(occurrences, 2 * len(doubles))
    sigma = {
        4 * t + j: 4 * t + (j + 1) % 4
        for t in range(len(doubles))
        for j in range(4)
    }
    m = build_map(range(4 * len(doubles)), alpha, sigma)
    return DoubleDiagram(m, over, loops)


def parse_diagram(text: str) -> TripleDiagram | DoubleDiagram:
    """Read either diagram kind, deciding from the tokens present.

    A text with only circles parses as a (crossingless) triple diagram.
    """
    triples, doubles, _ = _parse(text)
    if doubles:
        return parse_double(text)
    return parse_triple(text)


# -- serialization ---------------------------------------------------------


def _emit(cycles: Iterable[tuple[int, ...]], alpha: Mapping[int, int]):
    """Assign edge labels in order of first appearance along the output."""
    label: dict[frozenset, int] = {}
    rows = []
    for cyc in cycles:
        row = []
        for d in cyc:
            e = frozenset({d, alpha[d]})
            if e not in label:
                label[e] = len(label) + 1
            row.append(label[e])
        rows.append(row)
    return rows


def serialize_triple(diag: TripleDiagram) -> str:
    """Canonical text form; one crossing per line, loops header if needed."""
    m = diag.map
    if m.is_empty:
        return f"loops={diag.loops}\n"
    rows = _emit(m.vertices, m.alpha)
    lines = [
        "T({},{},{},{},{},{})/{}".format(*row, diag.heights[cyc[0]])
        for row, cyc in zip(rows, m.vertices)
    ]
    return "\n".join(lines) + "\n"


def serialize_double(diag: DoubleDiagram) -> str:
    """Canonical text form with the under strand at positions 0 and 2."""
    m = diag.map
    if m.is_empty:
        return f"loops={diag.loops}\n"
    cycles = []
    for cyc in m.vertices:
        over = diag.over[cyc[0]]
        under = [d for d in cyc if d not in over]
        k = cyc.index(min(under))
        cycles.append(cyc[k:] + cyc[:k])
    rows = _emit(cycles, m.alpha)
    lines = ["X({},{},{},{})".format(*row) for row in rows]
    return "\n".join(lines) + "\n"
