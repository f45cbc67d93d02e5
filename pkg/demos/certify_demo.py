"""Certifying exact triple-crossing numbers from a knot table.

Runs the certifier over the bundled table (standard knots through ten
crossings plus the twelve-crossing knots whose invariants force
matching bounds), prints some featured certificates, and finishes with
connected sums, whose values add.
"""

from tricross import bundled_table, certify, connected_sum
from tricross.bounds import format_certificate

records = {r.name: r for r in bundled_table()}
certs = {name: certify(r) for name, r in records.items()}

exact = [c for c in certs.values() if c.exact is not None]
print(f"{len(exact)} of {len(certs)} table records certified exactly\n")

for name in ("0_1", "3_1", "4_1", "5_2", "8_2", "8_19", "10_139", "12a_146", "8_1"):
    print(format_certificate(certs[name]))

print()
pair = connected_sum([certs["3_1"], certs["8_19"]], [1, 3])
print(format_certificate(pair))
pair = connected_sum([certs["8_2"], certs["10_139"]], [3, 4])
print(format_certificate(pair))
