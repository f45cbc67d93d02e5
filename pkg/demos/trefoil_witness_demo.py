"""The trefoil needs exactly two triple crossings.

Lower bound: the trefoil has genus 1, so any triple diagram of it has
at least 2*1 + 1 - 1 = 2 crossings.  Upper bound: exhaustively
enumerate every 2-crossing triple diagram and find ones whose
normalized bracket matches the trefoil's (computed from the closure of
the positive braid sigma_1^3).  Together: c3(trefoil) = 2.
"""

from tricross import (
    BraidWord,
    braid_closure,
    deconstruct,
    enumerate_triple_diagrams,
    lower_from_genus,
    normalized,
    serialize_triple,
)

closed = braid_closure(BraidWord(2, (1, 1, 1)))
target = normalized(closed.diagram, closed.orientation)
print(f"trefoil normalized bracket: {target}")

diagrams = enumerate_triple_diagrams(2)
print(f"enumerated {len(diagrams)} distinct 2-crossing triple diagrams")

hits = []
for diag in diagrams:
    result = deconstruct(diag)
    if normalized(result.diagram, result.orientation) == target:
        hits.append(diag)

print(f"bracket matches: {len(hits)}")
for diag in hits:
    print("  " + " ".join(serialize_triple(diag).split()))

lower = lower_from_genus(1, 1)
print(f"genus lower bound: {lower}")
if hits and lower == 2:
    print("=> a 2-crossing diagram realizes the trefoil: c3 = 2")
