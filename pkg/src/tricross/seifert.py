"""Turning triple crossings into plain ones, and genus from smoothing.

Each 6-valent vertex is replaced by a small triangle of three plain
crossings, one per pair of strands.  On a checkerboard-colored diagram
the replacement is pinned down by rotating the vertex so its first dart
borders a black face; the triangle then opens toward the white sectors,
every new triangle face is white, and the white face count grows by
exactly one per vertex.

Smoothing the result (splitting every crossing so arrows connect
coherently) along the coloring-directed orientation, the one with white
faces to the right of travel, yields one Seifert circle per white face.
With n triple crossings, 3n plain crossings, s circles, and r link
components, the resulting surface has genus g = (2 + 3n - s - r) / 2 and
witnesses the lower bound 2g + r - 1, which the white-majority coloring
keeps at most n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    LEVEL_RANK,
    Coloring,
    DoubleDiagram,
    Orientation,
    TripleDiagram,
    checkerboard,
    coloring_orientation,
    majority_white,
)
from .errors import (
    BadParameters,
    BoundViolation,
    ColoringImpossible,
    Disconnected,
    OrientationInconsistent,
    ParityError,
)
from .planarmap import DisjointSets, PlanarMap, build_map

__all__ = [
    "DeconstructResult",
    "GenusCertificate",
    "deconstruct",
    "seifert_circles",
    "canonical_genus",
]


@dataclass(frozen=True)
class DeconstructResult:
    """A triple diagram rebuilt with plain crossings.

    ``orientation`` is the strand orientation carried over from the
    input; ``coloring`` is the checkerboard coloring of the new map in
    which every triangle face is white; ``triangles`` lists those faces'
    indices, one per original vertex.
    """

    diagram: DoubleDiagram
    orientation: Orientation
    coloring: Coloring
    triangles: tuple


@dataclass(frozen=True)
class GenusCertificate:
    """Where a diagram's lower bound comes from.

    n triple crossings became c = 3n plain ones; smoothing produced s
    circles over r link components, giving a surface of genus ``genus``
    and the bound ``bound`` = 2*genus + r - 1.
    """

    n: int
    c: int
    s: int
    r: int
    genus: int
    bound: int
    white_in: int
    white_out: int

    @property
    def holds(self) -> bool:
        return self.bound <= self.n


def deconstruct(
    diag: TripleDiagram,
    coloring: Coloring | None = None,
    orientation: Orientation | None = None,
) -> DeconstructResult:
    """Replace every triple crossing by a triangle of plain crossings.

    At a vertex rotated to (z1..z6) with a black face right of z1, the
    three new crossings take fresh darts u1..u6 with rotations
    (z1, z2, u1, u2), (u3, z3, z4, u4), (u5, u6, z5, z6) and triangle
    edges (u1,u3), (u2,u5), (u4,u6).  Strand (z1,z4) runs over (z2,z5)
    at the first crossing exactly when its level is higher, and so on
    for the other two pairs.

    Unless overridden, strands are directed by the coloring itself
    (white faces to the right of travel); this is the orientation for
    which the smoothed circles match the white faces one to one.
    Strand directions persist through the surgery.
    """
    m = diag.map
    if m.is_empty:
        raise BadParameters("no triple crossings to deconstruct")
    col = majority_white(m) if coloring is None else coloring
    ori = coloring_orientation(m, col) if orientation is None else orientation

    alpha = dict(m.alpha)
    sigma: dict[int, int] = {}
    over: dict[int, frozenset] = {}
    forward = set(ori.forward)
    base = max(m.darts) + 1
    u2_darts = []

    for v, cyc in enumerate(m.vertices):
        if col.is_white(m.face_of(cyc[0])):
            cyc = cyc[1:] + cyc[:1]
        if col.is_white(m.face_of(cyc[0])):
            raise ColoringImpossible(
                "face colors fail to alternate around a vertex"
            )
        z = (None,) + cyc
        u1, u2, u3, u4, u5, u6 = (base + 6 * v + j for j in range(6))
        u2_darts.append(u2)

        for cycle in (
            (z[1], z[2], u1, u2),
            (u3, z[3], z[4], u4),
            (u5, u6, z[5], z[6]),
        ):
            for i, d in enumerate(cycle):
                sigma[d] = cycle[(i + 1) % 4]

        for a, b in ((u1, u3), (u2, u5), (u4, u6)):
            alpha[a], alpha[b] = b, a

        lev_a = LEVEL_RANK[diag.level_of(z[1])]
        lev_b = LEVEL_RANK[diag.level_of(z[2])]
        lev_c = LEVEL_RANK[diag.level_of(z[3])]
        x12 = (z[1], z[2], u1, u2)
        x34 = (u3, z[3], z[4], u4)
        x56 = (u5, u6, z[5], z[6])
        over[min(x12)] = (
            frozenset({z[1], u1}) if lev_a > lev_b else frozenset({z[2], u2})
        )
        over[min(x34)] = (
            frozenset({u3, z[4]}) if lev_a > lev_c else frozenset({z[3], u4})
        )
        over[min(x56)] = (
            frozenset({u5, z[5]}) if lev_b > lev_c else frozenset({u6, z[6]})
        )

        for u_dart, z_index in (
            (u1, 4), (u3, 1), (u2, 5), (u5, 2), (u4, 6), (u6, 3)
        ):
            if z[z_index] in forward:
                forward.add(u_dart)

    new_map = build_map(alpha.keys(), alpha, sigma)
    n = m.n_vertices
    assert new_map.n_vertices == 3 * n
    assert new_map.n_faces == 3 * n + 2

    new_col = checkerboard(new_map)
    if not new_col.is_white(new_map.face_of(u2_darts[0])):
        new_col = new_col.swapped()
    triangles = tuple(new_map.face_of(u2) for u2 in u2_darts)
    for u2, f in zip(u2_darts, triangles):
        assert new_col.is_white(f), "triangle face came out black"
        assert len(new_map.faces[f]) == 3, "triangle face is not a 3-cycle"
    assert new_col.n_white == col.n_white + n

    return DeconstructResult(
        diagram=DoubleDiagram(new_map, over, 0),
        orientation=Orientation(frozenset(forward)),
        coloring=new_col,
        triangles=triangles,
    )


def seifert_circles(
    m: PlanarMap, orientation: Orientation
) -> tuple[tuple[int, ...], ...]:
    """Split every plain crossing along the orientation; return circles.

    At each crossing the two incoming darts connect to their adjacent
    outgoing neighbors (arrows never cross after splitting).  Each circle
    is reported as its sorted tuple of darts.
    """
    if m.is_empty:
        return ()
    if len(m.vertices[0]) != 4:
        raise BadParameters("smoothing needs plain 4-valent crossings")
    fwd = orientation.forward
    for a, b in m.edges:
        if (a in fwd) == (b in fwd):
            raise OrientationInconsistent(
                f"edge ({a},{b}) needs exactly one forward dart"
            )
    dsu = DisjointSets(m.darts)
    for d in m.darts:
        dsu.union(d, m.alpha[d])
    for cyc in m.vertices:
        for x in cyc:
            if x in fwd:
                continue
            before = cyc[cyc.index(x) - 1]
            after = cyc[(cyc.index(x) + 1) % 4]
            y = after if after in fwd else before
            if y not in fwd:
                raise OrientationInconsistent(
                    f"incoming dart {x} has no outgoing neighbor"
                )
            dsu.union(x, y)
    return tuple(tuple(g) for g in dsu.groups())


def canonical_genus(diag: TripleDiagram) -> GenusCertificate:
    """Genus and lower bound from the white-majority reduction.

    Deconstructs with the white-majority coloring and the natural
    orientation, smooths, and reads the genus off the circle count.
    A single free circle is allowed (genus 0); a split diagram is not.
    """
    if diag.map.is_empty:
        if diag.loops == 0:
            raise BadParameters("the empty diagram has no genus")
        if diag.loops > 1:
            raise Disconnected("a split union of circles has no single genus")
        return GenusCertificate(
            n=0, c=0, s=1, r=1, genus=0, bound=0, white_in=0, white_out=0
        )
    col = majority_white(diag.map)
    result = deconstruct(diag, col)
    circles = seifert_circles(result.diagram.map, result.orientation)
    n = diag.n
    c = 3 * n
    s = len(circles)
    r = diag.r
    assert s == result.coloring.n_white, "circle count missed the white faces"
    if (2 + c - s - r) % 2:
        raise ParityError(f"c={c}, s={s}, r={r} give an odd genus numerator")
    genus = (2 + c - s - r) // 2
    bound = 2 * genus + r - 1
    if bound > n:
        raise BoundViolation(
            f"bound {bound} exceeded the crossing number {n}"
        )
    return GenusCertificate(
        n=n,
        c=c,
        s=s,
        r=r,
        genus=genus,
        bound=bound,
        white_in=col.n_white,
        white_out=result.coloring.n_white,
    )
