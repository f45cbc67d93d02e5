"""Sampling, exhaustive enumeration, and canonical codes for triple diagrams.

A triple diagram with n crossings is assembled from n six-valent blocks:
vertex v owns darts 6v..6v+5 arranged counterclockwise, and building a
diagram means choosing a fixed-point-free pairing (the edge involution)
of all 6n darts that yields a connected map on the sphere.  Both the
random sampler and the exhaustive enumerator grow such a pairing one
edge at a time, maintaining two invariants that make every completed
pairing valid by construction:

* **planarity** - a new edge either joins two darts on the same boundary
  circle of the partial map (splitting that circle in two) or joins two
  different connected components (merging their circles).  Chords
  between distinct circles of one component would add a handle and are
  never offered.
* **connectivity** - an edge that would finish off a component while
  unpaired darts remain elsewhere is never offered.

Canonical codes give a label-independent fingerprint used to deduplicate
diagrams up to relabeling (and optionally reflection within the plane).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .diagrams import TripleDiagram
from .errors import BadParameters, GiveUp, TooLarge
from .planarmap import PlanarMap, build_map

__all__ = [
    "SampleStats",
    "canonical_code",
    "shadow_code",
    "enumerate_triple_diagrams",
    "random_triple_diagram",
    "sample_triple_diagrams",
]

_LEVEL_WORDS: Tuple[str, ...] = tuple(
    "".join(p) for p in itertools.permutations("TMB")
)

ENUMERATION_LIMIT = 3
"""Largest crossing count the exhaustive enumerator accepts."""


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------


def _traversal(
    sigma: Dict[int, int], alpha: Dict[int, int], root: int
) -> Tuple[Dict[int, int], Tuple[int, ...], Tuple[int, ...]]:
    """Breadth-first relabeling from ``root``.

    Darts receive fresh ids 0,1,2,... in discovery order; from each dart
    we first follow the rotation, then the edge involution.  Returns the
    relabeling together with the images of sigma and alpha written in
    fresh ids (position i holds the image of fresh dart i).
    """
    fresh = {root: 0}
    order = [root]
    cursor = 0
    while cursor < len(order):
        d = order[cursor]
        cursor += 1
        for neighbour in (sigma[d], alpha[d]):
            if neighbour not in fresh:
                fresh[neighbour] = len(order)
                order.append(neighbour)
    sigma_image = tuple(fresh[sigma[d]] for d in order)
    alpha_image = tuple(fresh[alpha[d]] for d in order)
    return fresh, sigma_image, alpha_image


def _height_component(
    diag: TripleDiagram, fresh: Dict[int, int]
) -> Tuple[str, ...]:
    """Height words in traversal order, each rotated to its vertex's
    freshest dart.

    For a vertex whose rotation starts (for the code) at position j of
    the stored rotation, the strand through code position k is the
    stored strand (j + k) % 3, so the stored word is read off with that
    shift.
    """
    entries = []
    for cyc in diag.map.vertices:
        word = diag.heights[cyc[0]]
        best = min(range(6), key=lambda i: fresh[cyc[i]])
        rotated = "".join(word[(best + k) % 3] for k in range(3))
        entries.append((fresh[cyc[best]], rotated))
    entries.sort()
    return tuple(word for _, word in entries)


def _map_codes(
    sigma: Dict[int, int],
    alpha: Dict[int, int],
    darts: Sequence[int],
    diag: Optional[TripleDiagram],
) -> Iterator[tuple]:
    for root in darts:
        fresh, sigma_image, alpha_image = _traversal(sigma, alpha, root)
        if diag is None:
            yield (sigma_image, alpha_image)
        else:
            yield (sigma_image, alpha_image, _height_component(diag, fresh))


def canonical_code(diag: TripleDiagram, reflect: bool = False) -> tuple:
    """Label-independent fingerprint of a triple diagram.

    Two diagrams get equal codes exactly when one is a relabeling of the
    other (same rotations, same pairing, same levels).  With
    ``reflect=True`` the code is additionally invariant under reflection
    within the plane (all rotations reversed, levels kept), so a chiral
    pair shares one code.  Reflection is unrelated to :meth:`~tricross.
    diagrams.TripleDiagram.mirror`, which swaps top and bottom levels.
    """
    m = diag.map
    if m.is_empty:
        return (0, diag.loops, (), (), ())
    best = min(_map_codes(m.sigma, m.alpha, m.darts, diag))
    if reflect:
        r = diag.reflected()
        best = min(best, min(_map_codes(r.map.sigma, r.map.alpha, r.map.darts, r)))
    return (m.n_vertices, diag.loops) + best


def shadow_code(m: PlanarMap, loops: int = 0, reflect: bool = False) -> tuple:
    """Like :func:`canonical_code` but blind to levels.

    Fingerprints the underlying map (the shadow), so all ``6**n`` level
    assignments over one shadow share a code.
    """
    if m.is_empty:
        return (0, loops, (), ())
    best = min(_map_codes(m.sigma, m.alpha, m.darts, None))
    if reflect:
        sigma_inv = {v: k for k, v in m.sigma.items()}
        best = min(best, min(_map_codes(sigma_inv, m.alpha, m.darts, None)))
    return (m.n_vertices, loops) + best


# ---------------------------------------------------------------------------
# Growing a pairing
# ---------------------------------------------------------------------------


class _Pairing:
    """Partial edge involution over the darts of n six-valent blocks.

    Tracks, incrementally: the pairing itself, connected components
    (union-find over darts, seeded so each vertex block is one group),
    and the number of unpaired darts per component.  The boundary walk
    ``b(y) = sigma[alpha[y]] if y is paired else sigma[y]`` traces the
    circle bounding the face-in-progress that a dart lies on.
    """

    __slots__ = ("n", "total", "sigma", "alpha", "parent", "free_in", "free")

    def __init__(self, n: int) -> None:
        self.n = n
        self.total = 6 * n
        self.sigma = {
            6 * v + i: 6 * v + (i + 1) % 6 for v in range(n) for i in range(6)
        }
        self.alpha: Dict[int, int] = {}
        self.parent = list(range(self.total))
        for v in range(n):
            for i in range(1, 6):
                self.parent[6 * v + i] = 6 * v
        self.free_in = {6 * v: 6 for v in range(n)}
        self.free = self.total

    def find(self, d: int) -> int:
        parent = self.parent
        while parent[d] != d:
            parent[d] = parent[parent[d]]
            d = parent[d]
        return d

    def boundary_circle(self, d: int) -> List[int]:
        """Unpaired darts (other than ``d``) on d's boundary circle."""
        found = []
        y = self.sigma[d]
        while y != d:
            if y in self.alpha:
                y = self.sigma[self.alpha[y]]
            else:
                found.append(y)
                y = self.sigma[y]
        return found

    def _circle_survey(self) -> Tuple[Dict[int, int], int, Dict[int, int]]:
        """Free counts per boundary circle and where the odd ones sit.

        Returns a map from every unpaired dart to the number of
        unpaired darts on its circle, the total number of odd circles,
        and the number of odd circles in each component (by root).
        """
        counts: Dict[int, int] = {}
        total_odd = 0
        odd_in: Dict[int, int] = {}
        for d in range(self.total):
            if d in self.alpha or d in counts:
                continue
            circle = [d] + self.boundary_circle(d)
            for y in circle:
                counts[y] = len(circle)
            if len(circle) % 2:
                total_odd += 1
                root = self.find(d)
                odd_in[root] = odd_in.get(root, 0) + 1
        return counts, total_odd, odd_in

    def legal_moves(self) -> Tuple[Optional[int], List[int]]:
        """Pick the next dart to pair and list its legal partners.

        The dart comes from a boundary circle with the fewest unpaired
        darts (ties broken by smallest dart) - the most constrained
        spot, so hopeless positions surface immediately instead of
        after an exponential detour.  Any fixed policy here reaches
        every completed pairing along exactly one path.

        Partners are pruned by a parity argument on top of the
        planarity and connectivity invariants.  Free darts on a circle
        pair among themselves or absorb a merge from another component;
        a split keeps a circle's odd count alive in one of the halves,
        so an odd circle never empties, and only a cross-component
        merge of two odd circles destroys odd circles - two at a time,
        one from each side.  A completion performs exactly one merge
        fewer than there are components, so a position is dead once the
        total odd-circle count exceeds ``2*(components-1)``, or any one
        component holds more than ``components-1`` of them (each of its
        odd circles needs a separate merge, paired with an odd circle
        from outside).  Moves entering dead positions are dropped.
        """
        counts, total_odd, odd_in = self._circle_survey()
        if not counts:
            return None, []
        d = min(counts, key=lambda x: (counts[x], x))
        root = self.find(d)
        components = len(self.free_in)
        k = counts[d]
        legal = []
        if self._closure_ok(root, root):
            bound = components - 1
            for j, x in enumerate(self.boundary_circle(d), start=1):
                gained = (j - 1) % 2 + (k - j - 1) % 2 - k % 2
                if (
                    total_odd + gained <= 2 * bound
                    and odd_in.get(root, 0) + gained <= bound
                ):
                    legal.append(x)
        for x in range(self.total):
            if x in self.alpha or x == d:
                continue
            other = self.find(x)
            if other == root or not self._closure_ok(root, other):
                continue
            kx = counts[x]
            gained = (k + kx) % 2 - k % 2 - kx % 2
            merged_odd = odd_in.get(root, 0) + odd_in.get(other, 0) + gained
            bound = components - 2
            if total_odd + gained > 2 * bound or merged_odd > bound:
                continue
            if all(
                o <= bound
                for r, o in odd_in.items()
                if r != root and r != other
            ):
                legal.append(x)
        legal.sort()
        return d, legal

    def _closure_ok(self, d_root: int, x_root: int) -> bool:
        if d_root == x_root:
            merged_free = self.free_in[d_root] - 2
        else:
            merged_free = self.free_in[d_root] + self.free_in[x_root] - 2
        return merged_free > 0 or self.free == 2

    def pair(self, d: int, x: int) -> None:
        self.alpha[d] = x
        self.alpha[x] = d
        a, b = self.find(d), self.find(x)
        if a == b:
            self.free_in[a] -= 2
        else:
            if self.free_in[a] < self.free_in[b]:
                a, b = b, a
            self.parent[b] = a
            self.free_in[a] += self.free_in.pop(b) - 2
        self.free -= 2

    def snapshot(self) -> tuple:
        return (
            dict(self.alpha),
            list(self.parent),
            dict(self.free_in),
            self.free,
        )

    def restore(self, state: tuple) -> None:
        alpha, parent, free_in, free = state
        self.alpha = dict(alpha)
        self.parent = list(parent)
        self.free_in = dict(free_in)
        self.free = free


def _finish(pairing: _Pairing, heights: Dict[int, str]) -> TripleDiagram:
    m = build_map(range(pairing.total), pairing.alpha, pairing.sigma)
    return TripleDiagram(m, heights)


def _circle() -> TripleDiagram:
    return TripleDiagram(build_map((), {}, {}), {}, loops=1)


# ---------------------------------------------------------------------------
# Random sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SampleStats:
    """Bookkeeping for a sampling run.

    ``leaves`` counts search-tree leaves visited (completed pairings
    plus dead ends); ``dead_ends`` counts the states where the smallest
    unpaired dart had no legal partner and the search backed out.
    """

    requested: int
    produced: int
    leaves: int
    dead_ends: int
    restarts: int

    @property
    def acceptance(self) -> float:
        """Fraction of visited leaves that were completed pairings."""
        if self.leaves == 0:
            return 1.0
        return self.produced / self.leaves


class _Restart(Exception):
    """Abandon the current search attempt and start over."""


_ATTEMPT_DEAD_ENDS = 200
"""Dead ends tolerated within one search attempt before restarting.

The feasibility pruning is deliberately incomplete, and exhausting a
large doomed subtree costs exponential time; abandoning the attempt and
re-rolling is overwhelmingly cheaper because most attempts finish with
a handful of dead ends.
"""


class _Budget:
    __slots__ = ("dead_ends", "limit", "attempt_dead")

    def __init__(self, limit: int) -> None:
        self.dead_ends = 0
        self.limit = limit
        self.attempt_dead = 0

    def new_attempt(self) -> None:
        self.attempt_dead = 0

    def spend(self) -> None:
        self.dead_ends += 1
        self.attempt_dead += 1
        if self.dead_ends > self.limit:
            raise GiveUp(
                f"gave up after {self.dead_ends} dead ends in the pairing "
                "search"
            )
        if self.attempt_dead > _ATTEMPT_DEAD_ENDS:
            raise _Restart


def _grow(pairing: _Pairing, rng: random.Random, budget: _Budget) -> bool:
    """Randomized depth-first search for one completed pairing.

    Shuffles the legal partners of the smallest unpaired dart and
    backtracks out of dead ends, so it terminates at the first leaf of
    the same search tree :func:`enumerate_triple_diagrams` walks
    exhaustively.  Every valid pairing is a leaf of that tree, hence
    every one is produced with positive probability.
    """
    d, legal = pairing.legal_moves()
    if d is None:
        return True
    if not legal:
        budget.spend()
        return False
    rng.shuffle(legal)
    for x in legal:
        state = pairing.snapshot()
        pairing.pair(d, x)
        if _grow(pairing, rng, budget):
            return True
        pairing.restore(state)
    return False


def sample_triple_diagrams(
    n: int,
    count: int,
    seed: int = 0,
    give_up: int = 10_000,
) -> Tuple[List[TripleDiagram], SampleStats]:
    """Draw ``count`` seeded n-crossing diagrams.

    Deterministic for fixed ``(n, seed)``.  Each diagram is grown edge
    by edge under the planarity and connectivity invariants by a
    randomized backtracking search, so every call that returns yields
    valid diagrams and every valid diagram occurs with positive
    probability.  An attempt that keeps hitting dead ends is abandoned
    and re-rolled rather than exhausted.  ``give_up`` caps the dead
    ends tolerated across the whole run (exceeding it raises
    :class:`~tricross.errors.GiveUp`); it is a safety valve rather than
    a working part.  Levels are drawn uniformly per vertex once the map
    is complete.  The distribution over diagrams is *not* uniform: the
    search order biases the shape.
    """
    if n < 0 or count < 0:
        raise BadParameters("need n >= 0 and count >= 0")
    rng = random.Random(f"{n}:{seed}")
    budget = _Budget(give_up)
    produced: List[TripleDiagram] = []
    restarts = 0
    while len(produced) < count:
        if n == 0:
            produced.append(_circle())
            continue
        pairing = _Pairing(n)
        budget.new_attempt()
        try:
            grown = _grow(pairing, rng, budget)
        except _Restart:
            restarts += 1
            continue
        assert grown, "backtracking search exhausted a tree with leaves"
        heights = {
            6 * v: "".join(rng.sample("TMB", 3)) for v in range(n)
        }
        produced.append(_finish(pairing, heights))
    stats = SampleStats(
        count,
        len(produced),
        len(produced) + budget.dead_ends,
        budget.dead_ends,
        restarts,
    )
    return produced, stats


def random_triple_diagram(
    n: int, seed: int = 0, give_up: int = 10_000
) -> TripleDiagram:
    """One seeded n-crossing diagram; see :func:`sample_triple_diagrams`."""
    diagrams, _ = sample_triple_diagrams(n, 1, seed=seed, give_up=give_up)
    return diagrams[0]


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


def _walk_pairings(pairing: _Pairing) -> Iterator[Dict[int, int]]:
    d, legal = pairing.legal_moves()
    if d is None:
        yield dict(pairing.alpha)
        return
    for x in legal:
        state = pairing.snapshot()
        pairing.pair(d, x)
        yield from _walk_pairings(pairing)
        pairing.restore(state)


def _all_pairings(n: int) -> Iterator[Dict[int, int]]:
    """Every completable pairing, each reached exactly once.

    At every step exactly one dart gets a partner (the one the move
    policy picks), so distinct leaves are distinct pairings and each
    pairing appears on exactly one root-to-leaf path.
    """
    return _walk_pairings(_Pairing(n))


def _shadows_under_prefix(
    n: int, first: Optional[Tuple[int, int]], reflect: bool
) -> Dict[tuple, PlanarMap]:
    """Shadows reachable from one first pairing move, keyed by code."""
    pairing = _Pairing(n)
    if first is not None:
        pairing.pair(*first)
    sigma = dict(pairing.sigma)
    found: Dict[tuple, PlanarMap] = {}
    for alpha in _walk_pairings(pairing):
        m = build_map(range(6 * n), alpha, sigma)
        found.setdefault(shadow_code(m, reflect=reflect), m)
    return found


def enumerate_triple_diagrams(
    n: int, reflect: bool = False, jobs: int = 1
) -> List[TripleDiagram]:
    """All n-crossing triple diagrams up to relabeling, sorted by code.

    Builds every legal pairing of the 6n darts, keeps one shadow per
    level-blind canonical code, decorates each shadow with all ``6**n``
    level assignments, and keeps one diagram per full canonical code
    (passing ``reflect`` through, so ``reflect=True`` also folds chiral
    pairs together).  Guarded by :data:`ENUMERATION_LIMIT`: the labeled
    pairing count grows factorially, so larger ``n`` raises
    :class:`~tricross.errors.TooLarge`.  With ``jobs > 1`` the pairing
    tree is split over the first move and the per-prefix shadow sets
    are merged; the result is identical and deterministically ordered
    regardless of ``jobs``.
    """
    if n < 0 or jobs < 1:
        raise BadParameters("need n >= 0 and jobs >= 1")
    if n > ENUMERATION_LIMIT:
        raise TooLarge(
            f"exhaustive enumeration is capped at {ENUMERATION_LIMIT} "
            f"crossings; got {n}"
        )
    if n == 0:
        return [_circle()]

    shadows: Dict[tuple, PlanarMap] = {}
    if jobs == 1:
        shadows = _shadows_under_prefix(n, None, reflect)
    else:
        opener = _Pairing(n)
        d, legal = opener.legal_moves()
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                lambda x: _shadows_under_prefix(n, (d, x), reflect), legal
            )
        for part in parts:
            for code, m in part.items():
                shadows.setdefault(code, m)

    decorated: Dict[tuple, TripleDiagram] = {}
    for _, m in sorted(shadows.items()):
        for words in itertools.product(_LEVEL_WORDS, repeat=n):
            heights = {6 * v: words[v] for v in range(n)}
            diag = TripleDiagram(m, heights)
            code = canonical_code(diag, reflect=reflect)
            decorated.setdefault(code, diag)
    return [diag for _, diag in sorted(decorated.items())]
