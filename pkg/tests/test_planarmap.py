"""Core combinatorial map validation and traversal."""

import pytest
from hypothesis import given, strategies as st

from tricross.errors import (
    Disconnected,
    NotInvolution,
    NotSphere,
    OrientationInconsistent,
    WrongValence,
)
from tricross.planarmap import (
    PlanarMap,
    build_map,
    directed_strand_orbits,
    strand_components,
)


def petal_map():
    """One 6-valent vertex, adjacent darts paired into three loops."""
    sigma = {i: (i + 1) % 6 for i in range(6)}
    alpha = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
    return build_map(range(6), alpha, sigma)


def hopf_shadow():
    """Two 4-valent vertices joined by four edges (clasp shadow)."""
    sigma = {0: 1, 1: 2, 2: 3, 3: 0, 4: 5, 5: 6, 6: 7, 7: 4}
    alpha = {0: 4, 4: 0, 1: 7, 7: 1, 2: 6, 6: 2, 3: 5, 5: 3}
    return build_map(range(8), alpha, sigma)


class TestBuildMap:
    def test_petal_map_is_spherical(self):
        m = petal_map()
        assert m.n_vertices == 1
        assert m.n_edges == 3
        assert m.n_faces == 4
        assert m.faces == ((0, 2, 4), (1,), (3,), (5,))

    def test_opposite_pairing_is_rejected(self):
        # Pairing each dart with the one straight across closes into a
        # torus: 1 - 3 + 2 = 0.
        sigma = {i: (i + 1) % 6 for i in range(6)}
        alpha = {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}
        with pytest.raises(NotSphere):
            build_map(range(6), alpha, sigma)

    def test_hopf_shadow_counts(self):
        m = hopf_shadow()
        assert (m.n_vertices, m.n_edges, m.n_faces) == (2, 4, 4)

    def test_empty_map(self):
        m = build_map((), {}, {})
        assert m.is_empty
        assert m.n_vertices == m.n_edges == m.n_faces == 0

    def test_alpha_with_fixed_point(self):
        sigma = {i: (i + 1) % 6 for i in range(6)}
        alpha = {0: 0, 1: 1, 2: 3, 3: 2, 4: 5, 5: 4}
        with pytest.raises(NotInvolution):
            build_map(range(6), alpha, sigma)

    def test_alpha_not_involution(self):
        sigma = {i: (i + 1) % 6 for i in range(6)}
        alpha = {0: 1, 1: 2, 2: 0, 3: 4, 4: 5, 5: 3}
        with pytest.raises(NotInvolution):
            build_map(range(6), alpha, sigma)

    def test_alpha_wrong_domain(self):
        sigma = {i: (i + 1) % 6 for i in range(6)}
        alpha = {0: 1, 1: 0, 2: 3, 3: 2, 4: 9, 9: 4}
        with pytest.raises(NotInvolution):
            build_map(range(6), alpha, sigma)

    def test_odd_valence_rejected(self):
        sigma = {0: 1, 1: 0, 2: 3, 3: 2}
        alpha = {0: 2, 2: 0, 1: 3, 3: 1}
        with pytest.raises(WrongValence):
            build_map(range(4), alpha, sigma)

    def test_mixed_valence_rejected(self):
        # One 4-valent and one 6-valent vertex wired into a sphere still
        # fails: valences must be uniform.
        sigma = {0: 1, 1: 2, 2: 3, 3: 0, 4: 5, 5: 6, 6: 7, 7: 8, 8: 9, 9: 4}
        alpha = {0: 4, 4: 0, 1: 5, 5: 1, 2: 6, 6: 2, 3: 7, 7: 3, 8: 9, 9: 8}
        with pytest.raises(WrongValence):
            build_map(range(10), alpha, sigma)

    def test_sigma_not_permutation(self):
        sigma = {0: 1, 1: 1, 2: 3, 3: 2, 4: 5, 5: 0}
        alpha = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
        with pytest.raises(WrongValence):
            build_map(range(6), alpha, sigma)

    def test_disconnected_rejected(self):
        # Two separate figure-eight vertices: each piece is fine alone.
        sigma = {0: 1, 1: 2, 2: 3, 3: 0, 4: 5, 5: 6, 6: 7, 7: 4}
        alpha = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4, 6: 7, 7: 6}
        with pytest.raises(Disconnected):
            build_map(range(8), alpha, sigma)


class TestIncidence:
    def test_face_of_is_consistent_with_cycles(self):
        m = hopf_shadow()
        for i, cyc in enumerate(m.faces):
            for d in cyc:
                assert m.face_of(d) == i

    def test_opposite_is_an_involution_at_even_valence(self):
        m = petal_map()
        for d in m.darts:
            assert m.opposite(m.opposite(d)) == d
        assert m.opposite(0) == 3

    def test_phi_matches_faces(self):
        m = hopf_shadow()
        for cyc in m.faces:
            for i, d in enumerate(cyc):
                assert m.phi(d) == cyc[(i + 1) % len(cyc)]

    def test_relabel_preserves_structure(self):
        m = hopf_shadow()
        shift = {d: d + 100 for d in m.darts}
        m2 = m.relabel(shift)
        assert (m2.n_vertices, m2.n_edges, m2.n_faces) == (2, 4, 4)
        face_sizes = sorted(len(c) for c in m2.faces)
        assert face_sizes == sorted(len(c) for c in m.faces)


class TestStrands:
    def test_petal_is_one_component(self):
        m = petal_map()
        sc = strand_components(m)
        assert sc.r == 1
        assert sc.components == ((0, 1, 2, 3, 4, 5),)

    def test_hopf_shadow_has_two_components(self):
        m = hopf_shadow()
        sc = strand_components(m)
        assert sc.r == 2
        assert sc.component_of(0) != sc.component_of(1)

    def test_directed_orbits_partition_each_component(self):
        for m in (petal_map(), hopf_shadow()):
            comps = strand_components(m).components
            orbits = directed_strand_orbits(m)
            assert len(orbits) == len(comps)
            for (fwd, rev), comp in zip(orbits, comps):
                assert sorted(fwd + rev) == list(comp)
                assert set(fwd) == {m.alpha[d] for d in rev}

    def test_strand_next_closes_up(self):
        m = petal_map()
        d = 0
        seen = [d]
        x = m.strand_next(d)
        while x != d:
            seen.append(x)
            x = m.strand_next(x)
        assert len(seen) == 3  # one direction of a 3-edge closed strand


@st.composite
def petal_chain(draw):
    """A chain of 6-valent vertices, each with two private loops.

    Vertex i carries darts 6i..6i+5; darts 6i+1, 6i+2 and 6i+3, 6i+4 pair
    into loops; dart 6i+5 pairs with dart 6(i+1) of the next vertex (the
    last vertex closing back to the first when n > 1, or a loop at n == 1).
    This is always a valid sphere map, for any vertex count.
    """
    n = draw(st.integers(min_value=1, max_value=5))
    sigma = {}
    alpha = {}
    for i in range(n):
        base = 6 * i
        for j in range(6):
            sigma[base + j] = base + (j + 1) % 6
        for a, b in ((1, 2), (3, 4)):
            alpha[base + a] = base + b
            alpha[base + b] = base + a
    for i in range(n):
        j = (i + 1) % n
        if i == j:
            alpha[0], alpha[5] = 5, 0
        else:
            alpha[6 * i + 5] = 6 * j
            alpha[6 * j] = 6 * i + 5
    return build_map(range(6 * n), alpha, sigma)


@given(petal_chain(), st.randoms(use_true_random=False))
def test_relabel_by_random_bijection_preserves_counts(m, rng):
    targets = list(range(0, 1000, 7))[: len(m.darts)]
    rng.shuffle(targets)
    mapping = dict(zip(m.darts, targets))
    m2 = m.relabel(mapping)
    assert (m2.n_vertices, m2.n_edges, m2.n_faces) == (
        m.n_vertices,
        m.n_edges,
        m.n_faces,
    )
    assert strand_components(m2).r == strand_components(m).r
    assert sorted(len(c) for c in m2.faces) == sorted(len(c) for c in m.faces)


@given(petal_chain())
def test_euler_formula_holds(m):
    assert m.n_vertices - m.n_edges + m.n_faces == 2


@given(petal_chain())
def test_directed_orbits_never_self_reverse(m):
    try:
        orbits = directed_strand_orbits(m)
    except OrientationInconsistent:
        pytest.fail("sphere map strand walk reversed onto itself")
    for fwd, rev in orbits:
        assert not set(fwd) & set(rev)
