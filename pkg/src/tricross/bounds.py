"""Triple-crossing-number bounds, knot-table ingestion, and certificates.

A diagram with n triple crossings projects to a double-crossing diagram
with 3n crossings whose canonical Seifert surface has genus g and r
link components; that construction gives the lower bound
``c3 >= 2g + r - 1`` with the table genus standing in for the canonical
genus (a safe weakening).  Classical lower bounds in terms of the
double-crossing number c2, alternation, and braid index, and an upper
bound of ``c2 - 2`` for nontrivial knots other than T(2,n), combine
with exact torus-knot and positive-braid values to certify exact
triple-crossing numbers for many table knots: whenever the best lower
and upper bounds meet, the common value is exact.

Every bound carries a provenance tag so certificates record *why* a
number holds:

======================  =====================================================
tag                     meaning
======================  =====================================================
genus-bound             2*genus + components - 1
third-of-c2             ceil(c2 / 3)
half-of-c2-alternating  ceil(c2 / 2), alternating links only
braid-index             braid index minus 1
crossing-minus-2        c2 - 2, nontrivial non-T(2,n) knots only
torus-formula           (p-1)(q-1) for the named torus knot T(p,q)
positive-braid          k - p + 1 for a positive braid word
connected-sum           additivity over connected summands
======================  =====================================================
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .braids import BraidWord, closure_genus
from .errors import (
    BadParameters,
    NotAKnot,
    NotCoprime,
    ParseError,
    PreconditionViolated,
    RangeError,
)

__all__ = [
    "KnotRecord",
    "BoundCertificate",
    "TORUS_BY_NAME",
    "lower_from_genus",
    "lower_classical",
    "upper_nontorus",
    "torus_c3",
    "positive_braid_c3",
    "connected_sum",
    "load_knot_table",
    "bundled_table",
    "certify",
    "format_certificate",
]


TORUS_BY_NAME: Dict[str, Tuple[int, int]] = {
    "0_1": (1, 2),
    "3_1": (2, 3),
    "5_1": (2, 5),
    "7_1": (2, 7),
    "8_19": (3, 4),
    "9_1": (2, 9),
    "10_124": (3, 5),
}
"""Every torus knot in the standard table up to ten crossings."""


@dataclass(frozen=True)
class KnotRecord:
    """One knot-table row: standard invariants of a named knot or link.

    ``genus`` is the (Seifert) genus from the table; the lower-bound
    machinery may substitute it where the canonical genus would be
    sharper, which only ever weakens bounds.  ``is_t2n`` flags the
    T(2,n) torus links, the stated exception of the ``c2 - 2`` upper
    bound; it comes from the table, never from inference.
    """

    name: str
    c2: int
    genus: int
    components: int
    is_t2n: bool
    is_trivial: bool
    alternating: Optional[bool] = None
    braid_index: Optional[int] = None

    def __post_init__(self) -> None:
        if self.c2 < 0:
            raise RangeError(f"{self.name}: negative crossing number")
        if self.genus < 0:
            raise RangeError(f"{self.name}: negative genus")
        if self.components < 1:
            raise RangeError(f"{self.name}: fewer than one component")
        if self.braid_index is not None and self.braid_index < 1:
            raise RangeError(f"{self.name}: braid index below one")


@dataclass(frozen=True)
class BoundCertificate:
    """Best known lower and upper bounds on a triple-crossing number.

    ``exact`` is set precisely when the bounds meet; each bound carries
    the provenance tag of the rule that produced it.
    """

    name: str
    lower: int
    lower_tag: str
    upper: Optional[int] = None
    upper_tag: Optional[str] = None
    exact: Optional[int] = None
    notes: str = ""

    def __post_init__(self) -> None:
        if self.exact is not None and not (
            self.exact == self.lower == self.upper
        ):
            raise BadParameters(
                "an exact value must equal both the lower and upper bound"
            )


def lower_from_genus(genus: int, components: int) -> int:
    """Lower bound ``2*genus + components - 1``.

    Any diagram with n triple crossings yields a canonical Seifert
    surface whose genus caps the link genus, which rearranges to this
    bound on n.
    """
    if genus < 0 or components < 1:
        raise BadParameters("need genus >= 0 and components >= 1")
    return 2 * genus + components - 1


def _classical_candidates(
    c2: int, alternating: Optional[bool], braid_index: Optional[int]
) -> List[Tuple[int, str]]:
    candidates = [(-(-c2 // 3), "third-of-c2")]
    if alternating:
        candidates.append((-(-c2 // 2), "half-of-c2-alternating"))
    if braid_index is not None:
        candidates.append((braid_index - 1, "braid-index"))
    return candidates


def lower_classical(
    c2: int,
    alternating: Optional[bool] = None,
    braid_index: Optional[int] = None,
) -> int:
    """Best classical lower bound from double-crossing data.

    Takes the maximum of ``ceil(c2/3)`` (any link), ``ceil(c2/2)``
    (alternating links), and ``braid_index - 1`` (nonsplit links, which
    all table entries are), skipping bounds whose input is absent.
    Fractions are rounded up since crossing counts are integers.
    """
    if c2 < 0:
        raise RangeError("negative crossing number")
    if braid_index is not None and braid_index < 1:
        raise RangeError("braid index below one")
    return max(v for v, _ in _classical_candidates(c2, alternating, braid_index))


def upper_nontorus(c2: int, is_t2n: bool, is_trivial: bool) -> Optional[int]:
    """Upper bound ``c2 - 2`` for nontrivial knots other than T(2,n).

    Returns None when the bound does not apply (trivial, or a T(2,n)
    torus link, whose minimal diagrams resist the underlying folding
    construction).
    """
    if c2 < 0:
        raise RangeError("negative crossing number")
    if is_trivial or is_t2n:
        return None
    return c2 - 2


def torus_c3(p: int, q: int) -> int:
    """Exact triple-crossing number ``(p-1)(q-1)`` of the torus knot
    T(p,q), for coprime positive p, q."""
    if p < 1 or q < 1:
        raise BadParameters("need positive p and q")
    a, b = p, q
    while b:
        a, b = b, a % b
    if a != 1:
        raise NotCoprime(f"T({p},{q}) is a link, not a knot")
    return (p - 1) * (q - 1)


def positive_braid_c3(word: BraidWord) -> int:
    """Exact triple-crossing number ``k - p + 1`` of the closure of a
    positive braid word of length k on p strands, when that closure is
    a knot.

    The value doubles the Seifert genus of the closure; both sides are
    computed and compared, so a disagreement (impossible for valid
    inputs) would fail loudly rather than return silently.
    """
    if not word.is_positive:
        raise BadParameters("braid word must use positive letters only")
    genus = closure_genus(word)
    if word.cycle_count() != 1:
        raise NotAKnot(
            f"closure has {word.cycle_count()} components; need a knot"
        )
    value = word.length - word.strands + 1
    assert value == 2 * genus, (
        f"length - strands + 1 = {value} but smoothing gives genus {genus}"
    )
    return value


def connected_sum(
    certs: Sequence[BoundCertificate], genera: Sequence[int]
) -> BoundCertificate:
    """Certificate for a connected sum of exactly-certified knots.

    Requires each summand's exact value to equal twice its genus - the
    condition under which genus additivity forces the triple-crossing
    number of the sum to be the sum of the triple-crossing numbers.  A
    single summand is returned unchanged.
    """
    if not certs:
        raise BadParameters("need at least one summand")
    if len(certs) != len(genera):
        raise BadParameters("need one genus per certificate")
    for cert, genus in zip(certs, genera):
        if cert.exact is None:
            raise PreconditionViolated(
                f"{cert.name}: summand lacks an exact value"
            )
        if cert.exact != 2 * genus:
            raise PreconditionViolated(
                f"{cert.name}: exact value {cert.exact} is not twice the "
                f"genus {genus}"
            )
    if len(certs) == 1:
        return certs[0]
    total = sum(cert.exact for cert in certs)
    name = "#".join(cert.name for cert in certs)
    notes = "summands: " + ", ".join(
        f"{cert.name}={cert.exact}" for cert in certs
    )
    return BoundCertificate(
        name, total, "genus-bound", total, "connected-sum", total, notes
    )


_HEADER = [
    "name",
    "c2",
    "genus",
    "components",
    "is_t2n",
    "is_trivial",
    "alternating",
    "braid_index",
]


def _parse_flag(text: str, where: str) -> bool:
    if text == "0":
        return False
    if text == "1":
        return True
    raise ParseError(f"{where}: flag must be 0 or 1, got {text!r}")


def _parse_int(text: str, where: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{where}: expected an integer, got {text!r}") from None


def load_knot_table(path) -> List[KnotRecord]:
    """Read knot records from a CSV file.

    The header must be ``name,c2,genus,components,is_t2n,is_trivial``
    optionally followed by ``,alternating,braid_index``; those two
    trailing fields may also be left blank per row.  Malformed text
    raises ParseError; structurally valid but impossible values raise
    RangeError.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: empty table") from None
        if header not in (_HEADER, _HEADER[:6]):
            raise ParseError(
                f"{path}: bad header {','.join(header)!r}"
            )
        records = []
        for line, row in enumerate(reader, start=2):
            if not row:
                continue
            where = f"{path}:{line}"
            if len(row) not in (6, 8) or len(row) != len(header):
                raise ParseError(
                    f"{where}: expected {len(header)} fields, got {len(row)}"
                )
            alternating: Optional[bool] = None
            braid_index: Optional[int] = None
            if len(row) == 8:
                if row[6]:
                    alternating = _parse_flag(row[6], where)
                if row[7]:
                    braid_index = _parse_int(row[7], where)
            records.append(
                KnotRecord(
                    name=row[0],
                    c2=_parse_int(row[1], where),
                    genus=_parse_int(row[2], where),
                    components=_parse_int(row[3], where),
                    is_t2n=_parse_flag(row[4], where),
                    is_trivial=_parse_flag(row[5], where),
                    alternating=alternating,
                    braid_index=braid_index,
                )
            )
    return records


def bundled_table() -> List[KnotRecord]:
    """The knot table shipped with the package.

    Standard-table knots through ten crossings that the bounds engine
    can say something about, plus the twelve-crossing knots whose
    genus and crossing number force matching bounds.
    """
    source = resources.files("tricross").joinpath("data/knots.csv")
    with resources.as_file(source) as path:
        return load_knot_table(path)


def _first_best(candidates: List[Tuple[int, str]], want_max: bool):
    best, tag = candidates[0]
    for value, t in candidates[1:]:
        if (value > best) if want_max else (value < best):
            best, tag = value, t
    return best, tag


def certify(record: KnotRecord) -> BoundCertificate:
    """Best lower and upper triple-crossing bounds for a table record.

    The lower side maximizes the genus bound and the classical bounds;
    the upper side minimizes the torus formula (when the name is a
    known torus knot) and ``c2 - 2`` (when applicable).  ``exact`` is
    set when they meet.  A table row whose bounds cross is reported as
    a data error in the notes rather than certified.
    """
    if record.is_trivial:
        return BoundCertificate(
            record.name,
            0,
            "genus-bound",
            0,
            "torus-formula",
            0,
            "trivial: no crossings needed",
        )
    lowers = [
        (lower_from_genus(record.genus, record.components), "genus-bound")
    ]
    lowers.extend(
        _classical_candidates(
            record.c2, record.alternating, record.braid_index
        )
    )
    lower, lower_tag = _first_best(lowers, want_max=True)

    uppers: List[Tuple[int, str]] = []
    if record.name in TORUS_BY_NAME:
        p, q = TORUS_BY_NAME[record.name]
        uppers.append((torus_c3(p, q), "torus-formula"))
    crossing_bound = upper_nontorus(
        record.c2, record.is_t2n, record.is_trivial
    )
    if crossing_bound is not None:
        uppers.append((crossing_bound, "crossing-minus-2"))
    if not uppers:
        return BoundCertificate(
            record.name, lower, lower_tag, notes="no upper bound applies"
        )
    upper, upper_tag = _first_best(uppers, want_max=False)
    if lower > upper:
        return BoundCertificate(
            record.name,
            lower,
            lower_tag,
            notes=(
                f"data error: lower bound {lower} exceeds upper bound "
                f"{upper} ({upper_tag})"
            ),
        )
    exact = lower if lower == upper else None
    return BoundCertificate(
        record.name, lower, lower_tag, upper, upper_tag, exact
    )


def format_certificate(cert: BoundCertificate) -> str:
    """One-line report: ``name lower(tag) upper(tag) [exact=v]``."""
    parts = [cert.name, f"{cert.lower}({cert.lower_tag})"]
    if cert.upper is not None:
        parts.append(f"{cert.upper}({cert.upper_tag})")
    else:
        parts.append("-")
    if cert.exact is not None:
        parts.append(f"exact={cert.exact}")
    if cert.notes:
        parts.append(f"[{cert.notes}]")
    return " ".join(parts)
