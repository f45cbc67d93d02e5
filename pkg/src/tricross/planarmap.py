"""Combinatorial maps on the sphere, encoded by darts.

A dart is an integer naming a half-edge.  A map is a pair of permutations
on the darts:

- ``alpha``, a fixed-point-free involution pairing the two darts of each
  edge, and
- ``sigma``, whose orbits list the darts leaving each vertex in
  counterclockwise order.

Faces are the orbits of phi, where ``phi(d) = sigma[alpha[d]]`` (apply
alpha first, then sigma; this convention is fixed project-wide).  With
counterclockwise rotations, the face of a dart lies to the RIGHT of travel
from the dart's vertex along its edge.

Only spherical maps pass validation: V - E + F must equal 2 and the map
must be connected.  Vertex valences must be uniformly 4 (crossings of a
plain diagram) or uniformly 6 (triple crossings); mixed maps are rejected.

Example: one vertex whose six darts 0..5 are paired into adjacent loops
(0,1), (2,3), (4,5) is a sphere map with 4 faces, while the opposite
pairing (0,3), (1,4), (2,5) closes up into a torus (2 faces) and is
rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    Disconnected,
    NotInvolution,
    NotSphere,
    OrientationInconsistent,
    WrongValence,
)

__all__ = [
    "PlanarMap",
    "build_map",
    "faces",
    "strand_components",
    "directed_strand_orbits",
    "StrandComponents",
    "DisjointSets",
]


class DisjointSets:
    """Union-find over an arbitrary hashable universe."""

    def __init__(self, items: Iterable[int] = ()):
        self.parent = {x: x for x in items}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [sorted(v) for v in sorted(out.values(), key=min)]


def _orbits(perm: Mapping[int, int], darts: Iterable[int]) -> list[tuple[int, ...]]:
    """Cycles of a permutation, each rotated to start at its least element."""
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for d in darts:
        if d in seen:
            continue
        cyc = [d]
        seen.add(d)
        x = perm[d]
        while x != d:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        k = cyc.index(min(cyc))
        out.append(tuple(cyc[k:] + cyc[:k]))
    return sorted(out, key=lambda c: c[0])


class PlanarMap:
    """A validated spherical combinatorial map.

    Construct through :func:`build_map`; instances are immutable by
    convention.  Precomputed views: ``vertices`` and ``faces`` are tuples
    of dart cycles (each rotated to start at its least dart), ``edges`` is
    a tuple of ``(d, alpha[d])`` pairs with the lesser dart first.
    """

    __slots__ = (
        "darts",
        "alpha",
        "sigma",
        "vertices",
        "faces",
        "edges",
        "_vertex_of",
        "_face_of",
        "_opposite",
    )

    def __init__(self, darts, alpha, sigma, vertices, faces, edges):
        self.darts = darts
        self.alpha = alpha
        self.sigma = sigma
        self.vertices = vertices
        self.faces = faces
        self.edges = edges
        self._vertex_of = {d: i for i, cyc in enumerate(vertices) for d in cyc}
        self._face_of = {d: i for i, cyc in enumerate(faces) for d in cyc}
        self._opposite = {}
        for cyc in vertices:
            half = len(cyc) // 2
            for i, d in enumerate(cyc):
                self._opposite[d] = cyc[(i + half) % len(cyc)]

    # -- sizes ---------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def is_empty(self) -> bool:
        return not self.darts

    # -- incidence -----------------------------------------------------

    def vertex_of(self, d: int) -> int:
        return self._vertex_of[d]

    def face_of(self, d: int) -> int:
        """Index of the face to the right of dart ``d``."""
        return self._face_of[d]

    def opposite(self, d: int) -> int:
        """The dart straight across d's vertex (sigma^(valence/2))."""
        return self._opposite[d]

    def phi(self, d: int) -> int:
        return self.sigma[self.alpha[d]]

    def valence(self, d: int) -> int:
        return len(self.vertices[self._vertex_of[d]])

    def vertex_cycle(self, d: int) -> tuple[int, ...]:
        return self.vertices[self._vertex_of[d]]

    def strand_next(self, d: int) -> int:
        """Continue a straight-through walk: cross d's edge, exit opposite."""
        return self._opposite[self.alpha[d]]

    def relabel(self, mapping: Mapping[int, int]) -> "PlanarMap":
        """The same map with darts renamed by a bijection."""
        alpha = {mapping[d]: mapping[a] for d, a in self.alpha.items()}
        sigma = {mapping[d]: mapping[s] for d, s in self.sigma.items()}
        return build_map(alpha.keys(), alpha, sigma)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return self.alpha == other.alpha and self.sigma == other.sigma

    def __hash__(self) -> int:
        return hash((self.darts, tuple(sorted(self.alpha.items()))))

    def __repr__(self) -> str:
        return (
            f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"
        )


def build_map(
    darts: Iterable[int],
    alpha: Mapping[int, int],
    sigma: Mapping[int, int],
) -> PlanarMap:
    """Validate (darts, alpha, sigma) and return the map.

    Raises NotInvolution, WrongValence, NotSphere, or Disconnected when the
    data fails the corresponding check.  The empty map (no darts) is valid
    and stands for a crossingless picture.
    """
    dartset = frozenset(darts)
    dart_tuple = tuple(sorted(dartset))
    if not dartset:
        return PlanarMap(dart_tuple, {}, {}, (), (), ())

    if set(alpha) != dartset:
        raise NotInvolution("alpha must be defined on exactly the darts")
    for d in dart_tuple:
        a = alpha[d]
        if a not in dartset:
            raise NotInvolution(f"alpha[{d}] = {a} is not a dart")
        if a == d:
            raise NotInvolution(f"alpha fixes dart {d}")
        if alpha[a] != d:
            raise NotInvolution(f"alpha is not an involution at dart {d}")

    if set(sigma) != dartset or set(sigma.values()) != dartset:
        raise WrongValence("sigma must be a permutation of the darts")

    vertices = tuple(_orbits(sigma, dart_tuple))
    valences = {len(c) for c in vertices}
    if not valences <= {4, 6} or len(valences) != 1:
        raise WrongValence(
            f"vertex valences must be uniformly 4 or 6, got {sorted(valences)}"
        )

    phi = {d: sigma[alpha[d]] for d in dart_tuple}
    face_cycles = tuple(_orbits(phi, dart_tuple))

    dsu = DisjointSets(dart_tuple)
    for d in dart_tuple:
        dsu.union(d, alpha[d])
        dsu.union(d, sigma[d])
    roots = {dsu.find(d) for d in dart_tuple}
    if len(roots) != 1:
        raise Disconnected(f"map splits into {len(roots)} pieces")

    n_edges = len(dart_tuple) // 2
    euler = len(vertices) - n_edges + len(face_cycles)
    if euler != 2:
        raise NotSphere(
            f"V - E + F = {len(vertices)} - {n_edges} + {len(face_cycles)}"
            f" = {euler}, need 2"
        )

    edges = tuple(
        sorted((d, alpha[d]) for d in dart_tuple if d < alpha[d])
    )
    return PlanarMap(
        dart_tuple, dict(alpha), dict(sigma), vertices, face_cycles, edges
    )


def faces(m: PlanarMap) -> tuple[tuple[int, ...], ...]:
    """The face cycles of a validated map (orbits of phi)."""
    return m.faces


@dataclass(frozen=True)
class StrandComponents:
    """Partition of the darts into underlying closed curves."""

    components: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.components)

    def component_of(self, d: int) -> int:
        for i, comp in enumerate(self.components):
            if d in comp:
                return i
        raise KeyError(d)


def strand_components(m: PlanarMap) -> StrandComponents:
    """Group darts by the closed curve that carries them.

    A strand enters a vertex on one dart and leaves on the opposite dart,
    so components are generated by d ~ alpha(d) and d ~ opposite(d).
    """
    dsu = DisjointSets(m.darts)
    for d in m.darts:
        dsu.union(d, m.alpha[d])
        dsu.union(d, m.opposite(d))
    return StrandComponents(tuple(tuple(g) for g in dsu.groups()))


def directed_strand_orbits(m: PlanarMap) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """For each strand component, its two coherent traversal orbits.

    The walk d -> opposite(alpha(d)) visits each edge of the component in
    one direction; the alpha image of that orbit is the reverse traversal.
    Returns (forward, reverse) pairs sorted by least dart, with forward the
    orbit containing the component's least dart, in traversal order.
    """
    comps = strand_components(m).components
    out = []
    for comp in comps:
        start = comp[0]
        orbit = [start]
        x = m.strand_next(start)
        while x != start:
            orbit.append(x)
            x = m.strand_next(x)
        reverse = tuple(m.alpha[d] for d in orbit)
        if set(orbit) | set(reverse) != set(comp) or set(orbit) & set(reverse):
            # A strand whose straight-through walk reverses onto itself has
            # no coherent direction, so no orientation can be assigned.
            raise OrientationInconsistent("strand walk reverses onto itself")
        out.append((tuple(orbit), reverse))
    return out
