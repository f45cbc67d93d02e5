"""Generating triple-crossing diagrams: exhaustive and random.

Enumerates all diagrams with up to two triple crossings (shadows get
decorated with the six height words per crossing, then duplicates are
removed by canonical code), and samples larger diagrams with the
seeded generator, reporting its search statistics.
"""

from tricross import enumerate_triple_diagrams, sample_triple_diagrams, shadow_code

for n in (0, 1, 2):
    diagrams = enumerate_triple_diagrams(n)
    shadows = {shadow_code(d.map, d.loops) for d in diagrams}
    chiral = enumerate_triple_diagrams(n, reflect=True)
    print(
        f"n={n}: {len(shadows)} shadows, {len(diagrams)} diagrams, "
        f"{len(chiral)} up to reflection"
    )

print()
for n in (5, 8):
    diagrams, stats = sample_triple_diagrams(n, 50, seed=1)
    sizes = sorted({d.map.n_vertices for d in diagrams})
    print(
        f"n={n}: sampled {stats.produced} diagrams, "
        f"restarts={stats.restarts}, dead_ends={stats.dead_ends}, "
        f"acceptance={stats.acceptance:.2f}, crossing counts {sizes}"
    )
