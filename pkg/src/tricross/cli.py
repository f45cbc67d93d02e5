"""Command-line surface tying the toolkit together.

One binary, subcommand style::

    tricross validate FILE        structural checks + coloring summary
    tricross pipeline FILE        genus lower-bound certificate
    tricross gen N COUNT          seeded random triple diagrams
    tricross enum N               exhaustive enumeration with codes
    tricross bracket FILE         writhe-normalized bracket polynomial
    tricross torus P Q            torus-knot word, closure stats, formulas
    tricross certify [TABLE]      bound certificates for a knot table

``FILE`` may be ``-`` for standard input.  All randomness flows through
``--seed``, so identical invocations with identical inputs produce
byte-identical standard output; progress notes and timings go to
standard error only.  Exit codes: 0 success, 1 domain error, 2 parse
error (argparse uses 2 for bad usage as well), 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .bounds import bundled_table, certify, format_certificate, load_knot_table, torus_c3
from .bracket import normalized
from .braids import closure_genus, torus_word
from .diagrams import TripleDiagram, checkerboard, parse_diagram, parse_triple, serialize_triple
from .errors import ParseError, ResourceCap, TricrossError
from .generate import canonical_code, enumerate_triple_diagrams, sample_triple_diagrams
from .planarmap import strand_components
from .seifert import canonical_genus, deconstruct

__all__ = [
    "RunReport",
    "cmd_validate",
    "cmd_pipeline",
    "cmd_gen",
    "cmd_enum",
    "cmd_bracket",
    "cmd_torus",
    "cmd_certify",
    "main",
]


@dataclass
class RunReport:
    """Everything one command run produced.

    ``outputs`` are the standard-output lines, deterministic for fixed
    inputs and seed; ``timings`` (seconds per stage) and the input
    ``digest`` are reported on standard error.
    """

    command: str
    digest: str
    outputs: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    status: int = 0


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


class _Clock:
    """Accumulates named stage timings."""

    def __init__(self) -> None:
        self.timings: Dict[str, float] = {}
        self._last = time.perf_counter()

    def lap(self, stage: str) -> None:
        now = time.perf_counter()
        self.timings[stage] = now - self._last
        self._last = now


def _kv_or_csv(fmt: str, pairs: List[tuple]) -> List[str]:
    """Render key/value pairs as kv lines or a two-line CSV table."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in pairs])
        writer.writerow([v for _, v in pairs])
        return buf.getvalue().splitlines()
    return [f"{k}={v}" for k, v in pairs]


def _one_line(diag: TripleDiagram) -> str:
    return " ".join(serialize_triple(diag).split())


def _code_text(code: tuple) -> str:
    n, loops, sigma, alpha, words = code
    return ":".join(
        [
            str(n),
            str(loops),
            ",".join(map(str, sigma)),
            ",".join(map(str, alpha)),
            ",".join(words),
        ]
    )


def cmd_validate(text: str, fmt: str = "kv") -> RunReport:
    """Parse and validate a PD file; report counts and the coloring."""
    clock = _Clock()
    diag = parse_diagram(text)
    clock.lap("parse")
    m = diag.map
    kind = "triple" if isinstance(diag, TripleDiagram) else "double"
    components = len(strand_components(m).components) + diag.loops
    coloring = checkerboard(m)
    clock.lap("check")
    pairs = [
        ("kind", kind),
        ("crossings", m.n_vertices),
        ("loops", diag.loops),
        ("vertices", m.n_vertices),
        ("edges", m.n_edges),
        ("faces", m.n_faces),
        ("components", components),
        ("white_faces", len(coloring.white)),
        ("black_faces", len(coloring.black)),
    ]
    return RunReport(
        "validate", _digest(text), _kv_or_csv(fmt, pairs), clock.timings
    )


def cmd_pipeline(text: str, fmt: str = "kv") -> RunReport:
    """Run the full lower-bound pipeline and print the certificate."""
    clock = _Clock()
    diag = parse_triple(text)
    clock.lap("parse")
    cert = canonical_genus(diag)
    clock.lap("pipeline")
    pairs = [
        ("n", cert.n),
        ("crossings", cert.c),
        ("circles", cert.s),
        ("components", cert.r),
        ("genus", cert.genus),
        ("bound", cert.bound),
        ("white_in", cert.white_in),
        ("white_out", cert.white_out),
        ("holds", str(cert.holds).lower()),
    ]
    return RunReport(
        "pipeline", _digest(text), _kv_or_csv(fmt, pairs), clock.timings
    )


def cmd_gen(n: int, count: int, seed: int = 0) -> RunReport:
    """Emit seeded random triple diagrams, one PD line each."""
    clock = _Clock()
    diagrams, stats = sample_triple_diagrams(n, count, seed=seed)
    clock.lap("sample")
    outputs = [_one_line(d) for d in diagrams]
    clock.lap("serialize")
    report = RunReport(
        "gen", _digest(f"{n}:{count}:{seed}"), outputs, clock.timings
    )
    print(
        f"# produced={stats.produced} restarts={stats.restarts} "
        f"dead_ends={stats.dead_ends} acceptance={stats.acceptance:.3f}",
        file=sys.stderr,
    )
    return report


def cmd_enum(n: int, reflect: bool = False, jobs: int = 1) -> RunReport:
    """Emit every distinct diagram with n crossings, with its code."""
    clock = _Clock()
    diagrams = enumerate_triple_diagrams(n, reflect=reflect, jobs=jobs)
    clock.lap("enumerate")
    outputs = []
    for diag in diagrams:
        outputs.append(f"# code {_code_text(canonical_code(diag, reflect=reflect))}")
        outputs.append(_one_line(diag))
    outputs.append(f"# total {len(diagrams)}")
    clock.lap("serialize")
    return RunReport(
        "enum", _digest(f"{n}:{reflect}"), outputs, clock.timings
    )


def cmd_bracket(text: str, cap: int = 24, fmt: str = "kv") -> RunReport:
    """Print the writhe-normalized bracket of a diagram.

    Triple diagrams are first rebuilt with plain crossings; the
    polynomial is computed on the result.
    """
    clock = _Clock()
    diag = parse_diagram(text)
    clock.lap("parse")
    if isinstance(diag, TripleDiagram):
        result = deconstruct(diag)
        plain, orientation = result.diagram, result.orientation
    else:
        plain, orientation = diag, None
    poly = normalized(plain, orientation, cap=cap)
    clock.lap("bracket")
    pairs = [
        ("crossings", plain.map.n_vertices),
        ("normalized", str(poly)),
    ]
    return RunReport(
        "bracket", _digest(text), _kv_or_csv(fmt, pairs), clock.timings
    )


def cmd_torus(p: int, q: int, fmt: str = "kv") -> RunReport:
    """Torus-knot braid word, closure statistics, and both formulas."""
    clock = _Clock()
    value = torus_c3(p, q)
    word = torus_word(p, q)
    genus = closure_genus(word)
    clock.lap("compute")
    assert 2 * genus == value
    pairs = [
        ("word", f"{word.strands}: " + " ".join(map(str, word.letters))),
        ("strands", word.strands),
        ("crossings", word.length),
        ("components", word.cycle_count()),
        ("genus", genus),
        ("c3", value),
    ]
    return RunReport(
        "torus", _digest(f"{p}:{q}"), _kv_or_csv(fmt, pairs), clock.timings
    )


def cmd_certify(
    table_path: Optional[str] = None, fmt: str = "kv", jobs: int = 1
) -> RunReport:
    """Certificates for every table record plus an exact-hit summary."""
    clock = _Clock()
    if table_path is None:
        records = bundled_table()
        digest = "bundled"
    else:
        records = load_knot_table(table_path)
        with open(table_path) as fh:
            digest = _digest(fh.read())
    clock.lap("load")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            certs = list(pool.map(certify, records))
    else:
        certs = [certify(record) for record in records]
    clock.lap("certify")
    exact = sum(1 for cert in certs if cert.exact is not None)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["name", "lower", "lower_tag", "upper", "upper_tag", "exact", "notes"]
        )
        for cert in certs:
            writer.writerow(
                [
                    cert.name,
                    cert.lower,
                    cert.lower_tag,
                    "" if cert.upper is None else cert.upper,
                    cert.upper_tag or "",
                    "" if cert.exact is None else cert.exact,
                    cert.notes,
                ]
            )
        outputs = buf.getvalue().splitlines()
        print(f"# exact {exact} of {len(certs)} records", file=sys.stderr)
    else:
        outputs = [format_certificate(cert) for cert in certs]
        outputs.append(f"# exact {exact} of {len(certs)} records")
    clock.lap("render")
    return RunReport("certify", digest, outputs, clock.timings)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricross",
        description="Triple-crossing diagram toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("kv", "csv"), default="kv",
            help="output style (default kv)",
        )

    p = sub.add_parser("validate", help="parse and validate a PD file")
    p.add_argument("path", help="PD file, or - for stdin")
    add_format(p)

    p = sub.add_parser("pipeline", help="genus lower-bound certificate")
    p.add_argument("path", help="triple-PD file, or - for stdin")
    add_format(p)

    p = sub.add_parser("gen", help="seeded random triple diagrams")
    p.add_argument("n", type=int, help="triple crossings per diagram")
    p.add_argument("count", type=int, help="how many diagrams")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")

    p = sub.add_parser("enum", help="every distinct diagram with n crossings")
    p.add_argument("n", type=int, help="triple crossings")
    p.add_argument(
        "--reflect", action="store_true",
        help="identify mirror-image diagrams",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker threads")

    p = sub.add_parser("bracket", help="writhe-normalized bracket polynomial")
    p.add_argument("path", help="PD file, or - for stdin")
    p.add_argument(
        "--cap", type=int, default=24,
        help="largest crossing count to expand (default 24)",
    )
    add_format(p)

    p = sub.add_parser("torus", help="torus-knot statistics and formulas")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_format(p)

    p = sub.add_parser("certify", help="bound certificates for a knot table")
    p.add_argument(
        "table", nargs="?", default=None,
        help="knot-table CSV (default: bundled table)",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    add_format(p)

    return parser


def _run(args: argparse.Namespace) -> RunReport:
    if args.command == "validate":
        return cmd_validate(_read_input(args.path), args.format)
    if args.command == "pipeline":
        return cmd_pipeline(_read_input(args.path), args.format)
    if args.command == "gen":
        return cmd_gen(args.n, args.count, args.seed)
    if args.command == "enum":
        return cmd_enum(args.n, args.reflect, args.jobs)
    if args.command == "bracket":
        return cmd_bracket(_read_input(args.path), args.cap, args.format)
    if args.command == "torus":
        return cmd_torus(args.p, args.q, args.format)
    assert args.command == "certify"
    return cmd_certify(args.table, args.format, args.jobs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report = _run(args)
    except ResourceCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TricrossError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in report.outputs:
        print(line)
    stages = " ".join(
        f"{stage}={secs * 1000:.1f}ms"
        for stage, secs in report.timings.items()
    )
    print(
        f"# {report.command} digest={report.digest[:16]} {stages}",
        file=sys.stderr,
    )
    return report.status


if __name__ == "__main__":
    sys.exit(main())
