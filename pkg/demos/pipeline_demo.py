"""From a random triple-crossing diagram to its genus lower bound.

Generates one diagram, shows the face-count law V - E + F = 2 holding
with E = 3n and F = 2n + 2, then walks the lower-bound pipeline:
checkerboard coloring, coloring-induced orientation, reconstruction
with plain crossings, Seifert smoothing, and the resulting certificate
2*genus + components - 1 <= n.
"""

from tricross import (
    canonical_genus,
    checkerboard,
    deconstruct,
    random_triple_diagram,
    serialize_triple,
)

diag = random_triple_diagram(4, seed=2026)
m = diag.map

print("diagram (triple-PD):")
print(serialize_triple(diag))
print(f"vertices={m.n_vertices} edges={m.n_edges} faces={m.n_faces}")
print(f"Euler characteristic: {m.n_vertices - m.n_edges + m.n_faces}")

coloring = checkerboard(m)
print(f"checkerboard: {len(coloring.white)} white, {len(coloring.black)} black faces")

result = deconstruct(diag)
print(f"rebuilt with plain crossings: {result.diagram.map.n_vertices} crossings")
print(f"white triangle faces created: {len(result.triangles)}")

cert = canonical_genus(diag)
print(
    f"smoothing: {cert.s} Seifert circles over {cert.r} link components"
)
print(
    f"certificate: 2*{cert.genus} + {cert.r} - 1 = {cert.bound} <= n = {cert.n}"
    f"  (holds: {cert.holds})"
)
