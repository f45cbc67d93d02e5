"""Triangle surgery, smoothing, and the genus pipeline."""

import pytest

from tricross.diagrams import (
    Orientation,
    TripleDiagram,
    coloring_orientation,
    majority_white,
    natural_orientation,
    parse_triple,
    serialize_double,
)
from tricross.errors import (
    BadParameters,
    Disconnected,
    OrientationInconsistent,
)
from tricross.planarmap import build_map
from tricross.seifert import canonical_genus, deconstruct, seifert_circles

PETAL = "T(1,1,2,2,3,3)/TMB"
DIPOLE = "T(1,2,3,4,5,6)/TMB\nT(1,6,5,4,3,2)/MTB\n"


class TestDeconstructPetal:
    """Every value here was computed by hand on the one-vertex petal."""

    def setup_method(self):
        self.diag = parse_triple(PETAL)
        self.result = deconstruct(self.diag)
        self.m = self.result.diagram.map

    def test_map_shape(self):
        assert (self.m.n_vertices, self.m.n_edges, self.m.n_faces) == (3, 6, 5)
        assert self.m.vertices == ((0, 1, 6, 7), (2, 3, 9, 8), (4, 5, 10, 11))
        assert self.m.sigma == {
            0: 1, 1: 6, 6: 7, 7: 0,
            8: 2, 2: 3, 3: 9, 9: 8,
            10: 11, 11: 4, 4: 5, 5: 10,
        }

    def test_triangle_edges(self):
        for a, b in ((6, 8), (7, 10), (9, 11)):
            assert self.m.alpha[a] == b

    def test_faces(self):
        assert self.m.faces == (
            (0, 6, 2, 9, 4, 10),
            (1,),
            (3,),
            (5,),
            (7, 11, 8),
        )

    def test_triangle_is_white(self):
        assert self.result.triangles == (4,)
        assert self.result.coloring.white == frozenset({1, 2, 3, 4})

    def test_over_pairs_follow_levels(self):
        over = self.result.diagram.over
        assert over[0] == frozenset({0, 6})   # top strand over middle
        assert over[2] == frozenset({8, 3})   # top strand over bottom
        assert over[4] == frozenset({10, 4})  # middle strand over bottom

    def test_inherited_orientation(self):
        # the coloring directs the strand along darts 1, 3, 5 (petal
        # faces are white); the triangle picks up u1, u4, u5
        col = majority_white(self.diag.map)
        assert coloring_orientation(self.diag.map, col).forward == frozenset(
            {1, 3, 5}
        )
        assert self.result.orientation.forward == frozenset(
            {1, 3, 5, 6, 9, 10}
        )

    def test_smoothing_circles(self):
        circles = seifert_circles(self.m, self.result.orientation)
        assert circles == ((0, 1), (2, 3), (4, 5), (6, 7, 8, 9, 10, 11))


class TestCanonicalGenus:
    def test_petal_certificate(self):
        cert = canonical_genus(parse_triple(PETAL))
        assert (cert.n, cert.c, cert.s, cert.r) == (1, 3, 4, 1)
        assert (cert.genus, cert.bound) == (0, 0)
        assert (cert.white_in, cert.white_out) == (3, 4)
        assert cert.holds

    def test_dipole_certificate(self):
        cert = canonical_genus(parse_triple(DIPOLE))
        assert (cert.n, cert.c, cert.s, cert.r) == (2, 6, 5, 3)
        assert (cert.genus, cert.bound) == (0, 2)
        assert (cert.white_in, cert.white_out) == (3, 5)
        assert cert.holds  # tight: bound equals the crossing count

    def test_free_circle(self):
        cert = canonical_genus(parse_triple("loops=1"))
        assert (cert.n, cert.genus, cert.bound, cert.r) == (0, 0, 0, 1)

    def test_split_circles_rejected(self):
        with pytest.raises(Disconnected):
            canonical_genus(parse_triple("loops=2"))

    def test_empty_diagram_rejected(self):
        empty = TripleDiagram(build_map((), {}, {}), {}, loops=0)
        with pytest.raises(BadParameters):
            canonical_genus(empty)


class TestMinorityColoring:
    """The swapped coloring still deconstructs, but the bound can grow."""

    def test_swapped_petal_by_hand(self):
        diag = parse_triple(PETAL)
        col = majority_white(diag.map).swapped()
        assert col.n_white == 1
        result = deconstruct(diag, col)
        m = result.diagram.map
        assert m.n_faces == 5
        assert result.coloring.n_white == 2  # white_in + 1
        circles = seifert_circles(m, result.orientation)
        assert circles == ((0, 1, 2, 3, 4, 5), (6, 7, 8, 9, 10, 11))
        s, c, r = len(circles), 3, diag.r
        genus = (2 + c - s - r) // 2
        assert genus == 1
        assert 2 * genus + r - 1 == 2  # exceeds n=1: majority matters

    def test_swapped_over_pairs(self):
        diag = parse_triple(PETAL)
        result = deconstruct(diag, majority_white(diag.map).swapped())
        over = result.diagram.over
        assert over[1] == frozenset({1, 6})
        assert over[3] == frozenset({3, 9})
        assert over[0] == frozenset({11, 0})


class TestOrientationChoices:
    def test_global_reversal_preserves_circles(self):
        diag = parse_triple(PETAL)
        m = diag.map
        ori = coloring_orientation(m, majority_white(m))
        rev = Orientation(frozenset(m.alpha[d] for d in ori.forward))
        a = deconstruct(diag, orientation=ori)
        b = deconstruct(diag, orientation=rev)
        ca = seifert_circles(a.diagram.map, a.orientation)
        cb = seifert_circles(b.diagram.map, b.orientation)
        assert len(ca) == len(cb) == 4
        assert serialize_double(a.diagram) == serialize_double(b.diagram)

    def test_coloring_direction_needs_triple_points(self):
        from tricross.diagrams import checkerboard, parse_double

        d = parse_double("X(1,2,3,4)\nX(4,3,2,1)\n")
        with pytest.raises(BadParameters):
            coloring_orientation(d.map, checkerboard(d.map))

    def test_dipole_both_colorings_match_white_faces(self):
        # with the coloring-directed strands, circles and white faces
        # agree for either checkerboard coloring; only the majority one
        # caps the bound at n
        diag = parse_triple(DIPOLE)
        base = majority_white(diag.map)
        for col in (base, base.swapped()):
            result = deconstruct(diag, col)
            circles = seifert_circles(result.diagram.map, result.orientation)
            assert len(circles) == result.coloring.n_white
            assert result.coloring.n_white == col.n_white + diag.n


class TestSmoothingErrors:
    def test_six_valent_map_rejected(self):
        m = parse_triple(PETAL).map
        with pytest.raises(BadParameters):
            seifert_circles(m, natural_orientation(m))

    def test_incoherent_orientation_rejected(self):
        result = deconstruct(parse_triple(PETAL))
        m = result.diagram.map
        bad = Orientation(frozenset(m.darts))
        with pytest.raises(OrientationInconsistent):
            seifert_circles(m, bad)
