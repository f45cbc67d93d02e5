"""Kauffman bracket, writhe, and the normalized bracket polynomial.

Polynomials in A live in ``LaurentPoly``, a small exact integer Laurent
class (dict of exponent -> coefficient).  The bracket sums over all ways
of splitting each crossing: the A-split joins each under dart to its
counterclockwise neighbor, the B-split does the same for the over darts,
and a state with a A-splits, b B-splits, and k circles contributes
A^(a-b) * delta^(k-1) with delta = -A^2 - A^-2.

``bracket`` walks the state tree depth-first, merging circles in a
union-find that can roll back, so each crossing's work is shared across
the half of the tree below it.  ``bracket_naive`` recounts circles from
scratch for every state and exists to check the fast walk.

The normalized bracket f(D) = (-A^3)^(-w) * <D> with w the writhe is
unchanged by adding or removing curls, so it speaks about the link
itself (given orientations; reversing every component at once is free).
"""

from __future__ import annotations

from itertools import product

from .diagrams import (
    DoubleDiagram,
    Orientation,
    component_orientations,
    natural_orientation,
)
from .errors import BadParameters, TooLarge
from .planarmap import DisjointSets

__all__ = [
    "LaurentPoly",
    "DELTA",
    "bracket",
    "bracket_naive",
    "writhe",
    "normalized",
    "same_link_evidence",
]


class LaurentPoly:
    """An integer Laurent polynomial in one variable A."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for exp, c in dict(coeffs).items():
                if c:
                    data[int(exp)] = int(c)
        self.coeffs = data

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise BadParameters("negative powers are not defined here")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under A -> A^-1 (the mirror substitution)."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exp in sorted(self.coeffs):
            c = self.coeffs[exp]
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                var = "A" if exp == 1 else f"A^{exp}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


DELTA = LaurentPoly({2: -1, -2: -1})


class _RollbackSets:
    """Union-find with an undo trail and a live component count."""

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in items}
        self.trail: list[tuple[int, int] | None] = []
        self.count = len(self.parent)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.trail.append(None)
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        self.trail.append((rb, ra))

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry is not None:
                child, root = entry
                self.parent[child] = child
                self.size[root] -= self.size[child]
                self.count += 1


def _split_arcs(diag: DoubleDiagram):
    """Per crossing, the two dart pairs joined by each kind of split."""
    m = diag.map
    arcs = []
    for cyc in m.vertices:
        over = diag.over[cyc[0]]
        under = [d for d in cyc if d not in over]
        a_arcs = tuple((u, m.sigma[u]) for u in under)
        b_arcs = tuple((o, m.sigma[o]) for o in over)
        arcs.append((a_arcs, b_arcs))
    return arcs


def _check_cap(diag: DoubleDiagram, cap: int | None) -> None:
    if cap is not None and diag.n > cap:
        raise TooLarge(
            f"{diag.n} crossings exceed the state-sum cap of {cap}"
        )


def bracket(diag: DoubleDiagram, cap: int | None = None) -> LaurentPoly:
    """The Kauffman bracket, by depth-first state walk with rollback."""
    _check_cap(diag, cap)
    if diag.map.is_empty:
        if diag.loops == 0:
            raise BadParameters("the empty diagram has no bracket")
        return DELTA ** (diag.loops - 1)
    m = diag.map
    arcs = _split_arcs(diag)
    n = len(arcs)
    dsu = _RollbackSets(m.darts)
    for d in m.darts:
        dsu.union(d, m.alpha[d])
    delta_powers = [LaurentPoly.one()]
    for _ in range(m.n_edges + 1):
        delta_powers.append(delta_powers[-1] * DELTA)
    total: dict[int, int] = {}

    def walk(i: int, exp: int) -> None:
        if i == n:
            term = delta_powers[dsu.count - 1]
            for e, c in term.coeffs.items():
                total[e + exp] = total.get(e + exp, 0) + c
            return
        a_arcs, b_arcs = arcs[i]
        for delta_exp, pairs in ((1, a_arcs), (-1, b_arcs)):
            mark = len(dsu.trail)
            for x, y in pairs:
                dsu.union(x, y)
            walk(i + 1, exp + delta_exp)
            dsu.rollback(mark)

    walk(0, 0)
    return LaurentPoly(total)


def bracket_naive(diag: DoubleDiagram, cap: int | None = None) -> LaurentPoly:
    """The same state sum, one independent union-find per state."""
    _check_cap(diag, cap)
    if diag.map.is_empty:
        if diag.loops == 0:
            raise BadParameters("the empty diagram has no bracket")
        return DELTA ** (diag.loops - 1)
    m = diag.map
    arcs = _split_arcs(diag)
    total = LaurentPoly.zero()
    for state in product((0, 1), repeat=len(arcs)):
        dsu = DisjointSets(m.darts)
        for d in m.darts:
            dsu.union(d, m.alpha[d])
        exp = 0
        for choice, (a_arcs, b_arcs) in zip(state, arcs):
            exp += 1 if choice == 0 else -1
            for x, y in (a_arcs if choice == 0 else b_arcs):
                dsu.union(x, y)
        k = len({dsu.find(d) for d in m.darts})
        total = total + LaurentPoly.monomial(exp) * DELTA ** (k - 1)
    return total


def writhe(diag: DoubleDiagram, orientation: Orientation | None = None) -> int:
    """Sum of crossing signs under the given (or natural) orientation.

    At a crossing the over and under strands each have one outgoing
    dart; the sign is +1 exactly when turning counterclockwise from the
    over exit lands on the under exit.
    """
    m = diag.map
    if m.is_empty:
        return 0
    ori = natural_orientation(m) if orientation is None else orientation
    total = 0
    for cyc in m.vertices:
        over = diag.over[cyc[0]]
        over_out = next(d for d in cyc if d in over and d in ori.forward)
        under_out = next(
            d for d in cyc if d not in over and d in ori.forward
        )
        total += 1 if m.sigma[over_out] == under_out else -1
    return total


def normalized(
    diag: DoubleDiagram,
    orientation: Orientation | None = None,
    cap: int | None = None,
) -> LaurentPoly:
    """The curl-proof normalization f(D) = (-A^3)^(-writhe) * <D>."""
    w = writhe(diag, orientation)
    poly = bracket(diag, cap=cap)
    sign = -1 if w % 2 else 1
    return LaurentPoly(
        {e - 3 * w: sign * c for e, c in poly.coeffs.items()}
    )


def same_link_evidence(
    a: DoubleDiagram, b: DoubleDiagram, cap: int | None = None
) -> str:
    """Compare normalized brackets over all orientation classes.

    Returns "distinguished" when the two diagrams cannot be the same
    link, "consistent" when this invariant sees no difference.
    """
    values = []
    for diag in (a, b):
        values.append(
            frozenset(
                normalized(diag, ori, cap=cap)
                for ori in component_orientations(diag.map)
            )
        )
    return "consistent" if values[0] == values[1] else "distinguished"
