"""The normalized bracket as equality evidence.

Shows the writhe normalization absorbing inserted curls, the bracket
distinguishing the trefoil from its mirror (chirality), and failing to
distinguish the figure-eight knot from its mirror (it is amphichiral).
"""

from tricross import (
    BraidWord,
    braid_closure,
    normalized,
    parse_double,
    same_link_evidence,
)

circle = braid_closure(BraidWord(1, ())).diagram
curled = circle.insert_kink(None, True).insert_kink(0, False).insert_kink(4, True)
print(f"unknot with three curls: normalized bracket = {normalized(curled)}")

trefoil = braid_closure(BraidWord(2, (1, 1, 1))).diagram
print(f"\ntrefoil:        {normalized(trefoil)}")
print(f"trefoil mirror: {normalized(trefoil.mirror())}")
print(f"evidence: {same_link_evidence(trefoil, trefoil.mirror())}")

figure8 = parse_double("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")
print(f"\nfigure-eight:        {normalized(figure8)}")
print(f"figure-eight mirror: {normalized(figure8.mirror())}")
print(f"evidence: {same_link_evidence(figure8, figure8.mirror())}")
