"""Braid words and their closures as plain diagrams.

A braid word on p strands is a sequence of nonzero letters e with
1 <= |e| <= p-1; letter i crosses the strands in columns i and i+1, with
the strand entering from column i+1 passing over when e > 0 and under
when e < 0.  The closure joins each column's last exit back to its first
entry, reading the word top to bottom.

Every crossing of the closure diagram takes four darts, in
counterclockwise order (upper-right, upper-left, lower-left,
lower-right); strands enter at the top and leave at the bottom, which
orients the whole closure downward.  Smoothing along that orientation
splits every crossing vertically, so the Seifert circles are exactly the
p columns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagrams import DoubleDiagram, Orientation
from .errors import BadParameters, DisconnectedClosure, ParseError
from .planarmap import build_map
from .seifert import seifert_circles

__all__ = [
    "BraidWord",
    "ClosedBraid",
    "parse_braid",
    "torus_word",
    "braid_closure",
    "closure_genus",
]

_UR, _UL, _DL, _DR = 0, 1, 2, 3


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators on a fixed number of strands."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise BadParameters("a braid needs at least one strand")
        for e in self.letters:
            if e == 0 or abs(e) > self.strands - 1:
                raise BadParameters(
                    f"letter {e} is out of range for {self.strands} strands"
                )

    @property
    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Image of each strand 1..p under the word, read top to bottom."""
        perm = list(range(self.strands + 1))
        for e in self.letters:
            i = abs(e)
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm[1:])

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for i in range(self.strands):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
        return cycles


_BRAID_RE = re.compile(r"\s*(\d+)\s*:\s*((?:-?\d+(?:\s+-?\d+)*)?)\s*\Z")


def parse_braid(text: str) -> BraidWord:
    """Read "p: i1 i2 ... ik" into a braid word on p strands."""
    m = _BRAID_RE.match(text)
    if not m:
        raise ParseError(
            f"braid must look like 'p: i1 i2 ... ik', got {text!r}"
        )
    strands = int(m.group(1))
    letters = tuple(int(tok) for tok in m.group(2).split())
    try:
        return BraidWord(strands, letters)
    except BadParameters as exc:
        raise ParseError(str(exc)) from exc


def torus_word(p: int, q: int) -> BraidWord:
    """The braid whose closure winds p strands q times: (1 2 .. p-1)^q."""
    if p < 1 or q < 1:
        raise BadParameters("torus parameters must be positive")
    return BraidWord(p, tuple(range(1, p)) * q)


@dataclass(frozen=True)
class ClosedBraid:
    """A braid closure: the diagram plus its downward orientation."""

    word: BraidWord
    diagram: DoubleDiagram
    orientation: Orientation


def braid_closure(word: BraidWord) -> ClosedBraid:
    """Close a braid word into a plain diagram.

    Crossing t (letter e_t) takes darts 4t..4t+3; column j's entries and
    exits are chained in word order and wrapped around.  Letters must
    mention every column boundary 1..p-1, otherwise the closure falls
    apart into distant pieces.
    """
    p, letters = word.strands, word.letters
    if not letters:
        if p == 1:
            return ClosedBraid(
                word,
                DoubleDiagram(build_map((), {}, {}), {}, loops=1),
                Orientation(frozenset()),
            )
        raise DisconnectedClosure(
            f"an empty word on {p} strands closes into {p} split circles"
        )
    missing = set(range(1, p)) - {abs(e) for e in letters}
    if missing:
        raise DisconnectedClosure(
            f"letters never use columns {sorted(missing)}; "
            "the closure splits"
        )

    k = len(letters)
    sigma = {}
    for t in range(k):
        base = 4 * t
        for j in range(4):
            sigma[base + j] = base + (j + 1) % 4
    alpha: dict[int, int] = {}
    for col in range(1, p + 1):
        events = [t for t in range(k) if abs(letters[t]) in (col - 1, col)]
        for idx, t in enumerate(events):
            nxt = events[(idx + 1) % len(events)]
            down = 4 * t + (_DL if abs(letters[t]) == col else _DR)
            up = 4 * nxt + (_UL if abs(letters[nxt]) == col else _UR)
            alpha[down], alpha[up] = up, down

    m = build_map(range(4 * k), alpha, sigma)
    over = {}
    for t, e in enumerate(letters):
        base = 4 * t
        if e > 0:
            over[base] = frozenset({base + _UR, base + _DL})
        else:
            over[base] = frozenset({base + _UL, base + _DR})
    diagram = DoubleDiagram(m, over, 0)
    forward = frozenset(
        4 * t + j for t in range(k) for j in (_DL, _DR)
    )
    return ClosedBraid(word, diagram, Orientation(forward))


def closure_genus(word: BraidWord) -> int:
    """Genus of the surface from smoothing the closure downward.

    With k crossings, p strands (always p circles after smoothing), and
    r closure components, the genus is (2 + k - p - r) / 2.  For a
    positive word this surface has least genus among all Seifert
    surfaces of the closure.
    """
    closed = braid_closure(word)
    if closed.diagram.map.is_empty:
        return 0
    circles = seifert_circles(closed.diagram.map, closed.orientation)
    s = len(circles)
    assert s == word.strands, "smoothing must give one circle per column"
    k = word.length
    r = word.cycle_count()
    assert (2 + k - s - r) % 2 == 0
    return (2 + k - s - r) // 2
