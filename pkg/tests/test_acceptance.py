"""The toolkit's eight headline guarantees, timed and reported.

Each test prints one `[criterion k] name: PASS/FAIL (time)` line on the
real stdout so the verdicts survive pytest's capture, then asserts both
the property and its time budget.
"""

import itertools
import math
import time

import pytest

from tricross.bounds import (
    bundled_table,
    certify,
    connected_sum,
    lower_from_genus,
    positive_braid_c3,
    torus_c3,
)
from tricross.bracket import bracket, bracket_naive, normalized
from tricross.braids import BraidWord, braid_closure, closure_genus, torus_word
from tricross.diagrams import (
    checkerboard,
    coloring_orientation,
    natural_orientation,
)
from tricross.generate import enumerate_triple_diagrams, random_triple_diagram
from tricross.seifert import canonical_genus, deconstruct

CORPUS_SIZE = 1000


def announce(capsys, number, name, ok, elapsed, budget):
    verdict = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(
            f"\n[criterion {number}] {name}: {verdict} "
            f"({elapsed:.2f}s, budget {budget:.0f}s)",
            flush=True,
        )


@pytest.fixture(scope="module")
def corpus():
    """1000 seeded random diagrams with 1..8 triple crossings."""
    start = time.perf_counter()
    diagrams = []
    for i in range(CORPUS_SIZE):
        n = 1 + i % 8
        diagrams.append((n, random_triple_diagram(n, seed=1000 + i)))
    return diagrams, time.perf_counter() - start


@pytest.fixture(scope="module")
def pipeline_evidence(corpus):
    """One pass of the full pipeline over the corpus.

    Collects lower-bound certificate failures and, in the same run,
    the coloring/orientation evidence: both colorability claims and
    the coherence of every white face boundary.
    """
    diagrams, _ = corpus
    start = time.perf_counter()
    bound_failures = []
    coloring_failures = []
    for i, (n, diag) in enumerate(diagrams):
        cert = canonical_genus(diag)
        c = deconstruct(diag).diagram.map.n_vertices
        if not (
            c == 3 * n
            and cert.c == 3 * n
            and cert.white_out == cert.white_in + n
            and cert.s == cert.white_out
            and cert.bound <= n
            and cert.holds
        ):
            bound_failures.append((i, n, cert))
        m = diag.map
        try:
            coloring = checkerboard(m)
            natural_orientation(m)
            orientation = coloring_orientation(m, coloring)
        except Exception as exc:  # any coloring/orientation failure counts
            coloring_failures.append((i, n, repr(exc)))
            continue
        forward = {x for x in m.darts if orientation.is_forward(x)}
        white_orbit = {x for x in m.darts if m.face_of(x) in coloring.white}
        if forward != white_orbit:
            coloring_failures.append((i, n, "incoherent white boundary"))
    elapsed = time.perf_counter() - start
    return bound_failures, coloring_failures, elapsed


def test_criterion_1_face_count_law(corpus, capsys):
    diagrams, gen_seconds = corpus
    start = time.perf_counter()
    failures = [
        (n, d.map.n_edges, d.map.n_faces)
        for n, d in diagrams
        if d.map.n_edges != 3 * n or d.map.n_faces != 2 * n + 2
    ]
    elapsed = gen_seconds + time.perf_counter() - start
    ok = not failures and elapsed < 10
    announce(capsys, 1, "face-count law on 1000 random diagrams", ok, elapsed, 10)
    assert failures == []
    assert elapsed < 10


def test_criterion_2_pipeline_properties(pipeline_evidence, capsys):
    bound_failures, _, elapsed = pipeline_evidence
    ok = not bound_failures and elapsed < 60
    announce(capsys, 2, "lower-bound pipeline on the corpus", ok, elapsed, 60)
    assert bound_failures == []
    assert elapsed < 60


def test_criterion_3_torus_formulas(capsys):
    start = time.perf_counter()
    failures = []
    for p in range(2, 10):
        for q in range(p + 1, 10):
            if math.gcd(p, q) != 1:
                continue
            value = torus_c3(p, q)
            formula_ok = value == (p - 1) * (q - 1)
            braid_ok = positive_braid_c3(torus_word(p, q)) == value
            genus_ok = 2 * closure_genus(torus_word(p, q)) == value
            if not (formula_ok and braid_ok and genus_ok):
                failures.append((p, q))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5
    announce(capsys, 3, "torus formulas for coprime p < q <= 9", ok, elapsed, 5)
    assert failures == []
    assert elapsed < 5


def test_criterion_4_trefoil_witness(capsys):
    start = time.perf_counter()
    closed = braid_closure(BraidWord(2, (1, 1, 1)))
    target = normalized(closed.diagram, closed.orientation)
    hits = []
    for diag in enumerate_triple_diagrams(2):
        result = deconstruct(diag)
        if normalized(result.diagram, result.orientation) == target:
            hits.append(diag)
    lower = lower_from_genus(1, 1)
    elapsed = time.perf_counter() - start
    ok = bool(hits) and lower == 2 and elapsed < 120
    announce(capsys, 4, "trefoil realized at two triple crossings", ok, elapsed, 120)
    assert hits, "no 2-crossing diagram matches the trefoil bracket"
    assert lower == 2
    # Upper bound 2 from any witness plus lower bound 2 pins the value.
    assert all(diag.n == 2 for diag in hits)
    assert elapsed < 120


SMALL_CERTIFIED = [
    "8_2", "8_5", "8_7", "8_9", "8_10", "8_16", "8_17", "8_18",
    "10_2", "10_5", "10_9", "10_17", "10_46", "10_47", "10_48",
    "10_62", "10_64", "10_79", "10_82", "10_85", "10_91", "10_94",
    "10_99", "10_100", "10_104", "10_106", "10_109", "10_112",
    "10_116", "10_118", "10_123", "10_139", "10_152",
]


def test_criterion_5_table_certification(capsys):
    start = time.perf_counter()
    table = {r.name: r for r in bundled_table()}
    failures = []
    for name in SMALL_CERTIFIED:
        record = table[name]
        cert = certify(record)
        if not (cert.exact == record.c2 - 2 == 2 * record.genus):
            failures.append((name, cert))
    spot_ok = (
        certify(table["8_2"]).exact == 6
        and certify(table["10_139"]).exact == 8
    )
    elapsed = time.perf_counter() - start
    ok = not failures and spot_ok and elapsed < 1
    announce(capsys, 5, "exact values for 33 table knots", ok, elapsed, 1)
    assert failures == []
    assert spot_ok
    assert elapsed < 1


def test_criterion_6_connected_sums(capsys):
    start = time.perf_counter()
    table = {r.name: r for r in bundled_table()}
    trefoil = certify(table["3_1"])        # T(2,3)
    t34 = certify(table["8_19"])           # T(3,4)
    eight = connected_sum([trefoil, t34], [1, 3])
    fourteen = connected_sum(
        [certify(table["8_2"]), certify(table["10_139"])], [3, 4]
    )
    elapsed = time.perf_counter() - start
    ok = eight.exact == 8 and fourteen.exact == 14 and elapsed < 1
    announce(capsys, 6, "connected-sum additivity", ok, elapsed, 1)
    assert eight.exact == 8
    assert fourteen.exact == 14
    assert elapsed < 1


def test_criterion_7_bracket_oracles(corpus, capsys):
    diagrams, _ = corpus
    start = time.perf_counter()
    failures = []

    # Unknots with up to three inserted kinks all normalize to 1.
    circle = braid_closure(BraidWord(1, ())).diagram
    kinked = []
    for signs in itertools.chain.from_iterable(
        itertools.product((True, False), repeat=k) for k in (1, 2, 3)
    ):
        diag = circle
        for j, sign in enumerate(signs):
            diag = diag.insert_kink(None if j == 0 else 4 * (j - 1), sign)
        kinked.append(diag)
        if normalized(diag) != normalized(circle).one():
            failures.append(("kink", signs))

    # The memoized bracket agrees with the 2^c state sum everywhere
    # both are affordable.
    pool = list(kinked)
    pool.append(braid_closure(BraidWord(2, (1, 1, 1))).diagram)
    for p, q in ((2, 3), (2, 5), (2, 7), (2, 9), (3, 4)):
        pool.append(braid_closure(torus_word(p, q)).diagram)
    deconstructed = [
        deconstruct(diag).diagram for n, diag in diagrams if n <= 3
    ]
    pool.extend(deconstructed)
    for i, diag in enumerate(pool):
        assert diag.map.n_vertices <= 10
        if bracket(diag) != bracket_naive(diag):
            failures.append(("state-sum", i))

    # Mirroring a diagram inverts the variable.
    mirror_sample = pool[-40:] + [braid_closure(torus_word(2, 3)).diagram]
    for i, diag in enumerate(mirror_sample):
        if normalized(diag.mirror()) != normalized(diag).substitute_inverse():
            failures.append(("mirror", i))

    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    announce(capsys, 7, "bracket self-consistency oracles", ok, elapsed, 60)
    assert failures == []
    assert elapsed < 60


def test_criterion_8_coloring_orientation_evidence(pipeline_evidence, capsys):
    _, coloring_failures, elapsed = pipeline_evidence
    ok = not coloring_failures
    announce(capsys, 8, "coloring and orientation evidence", ok, elapsed, 60)
    assert coloring_failures == []
