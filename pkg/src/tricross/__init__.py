"""Triple-crossing diagram toolkit: maps, genus bounds, brackets, braids.

A triple-crossing diagram draws a link with crossings where three
strands meet; this package validates such diagrams as combinatorial
maps, rebuilds them with plain crossings, reads off canonical Seifert
genus lower bounds, computes bracket polynomials as equality evidence,
generates and enumerates diagrams, and certifies exact triple-crossing
numbers for torus knots, positive braid closures, table knots, and
their connected sums.
"""

from .bounds import (
    BoundCertificate,
    KnotRecord,
    bundled_table,
    certify,
    connected_sum,
    load_knot_table,
    lower_classical,
    lower_from_genus,
    positive_braid_c3,
    torus_c3,
    upper_nontorus,
)
from .bracket import LaurentPoly, bracket, normalized, same_link_evidence, writhe
from .braids import BraidWord, braid_closure, closure_genus, parse_braid, torus_word
from .diagrams import (
    DoubleDiagram,
    TripleDiagram,
    checkerboard,
    coloring_orientation,
    natural_orientation,
    parse_diagram,
    parse_double,
    parse_triple,
    serialize_double,
    serialize_triple,
)
from .errors import TricrossError
from .generate import (
    canonical_code,
    enumerate_triple_diagrams,
    random_triple_diagram,
    sample_triple_diagrams,
    shadow_code,
)
from .planarmap import PlanarMap, build_map
from .seifert import GenusCertificate, canonical_genus, deconstruct, seifert_circles

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "BraidWord",
    "DoubleDiagram",
    "GenusCertificate",
    "KnotRecord",
    "LaurentPoly",
    "PlanarMap",
    "TricrossError",
    "TripleDiagram",
    "__version__",
    "bracket",
    "braid_closure",
    "build_map",
    "bundled_table",
    "canonical_code",
    "canonical_genus",
    "certify",
    "checkerboard",
    "closure_genus",
    "coloring_orientation",
    "connected_sum",
    "deconstruct",
    "enumerate_triple_diagrams",
    "load_knot_table",
    "lower_classical",
    "lower_from_genus",
    "natural_orientation",
    "normalized",
    "parse_braid",
    "parse_diagram",
    "parse_double",
    "parse_triple",
    "positive_braid_c3",
    "random_triple_diagram",
    "same_link_evidence",
    "sample_triple_diagrams",
    "seifert_circles",
    "serialize_double",
    "serialize_triple",
    "shadow_code",
    "torus_c3",
    "torus_word",
    "upper_nontorus",
    "writhe",
]
