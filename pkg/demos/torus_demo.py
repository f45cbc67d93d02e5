"""Exact triple-crossing numbers of torus knots, three ways.

For every coprime pair 2 <= p < q <= 9 the closed formula (p-1)(q-1),
the positive-braid formula k - p + 1 on the standard torus braid, and
twice the genus of the surface obtained by actually smoothing the
closure must all agree.
"""

from math import gcd

from tricross import closure_genus, positive_braid_c3, torus_c3, torus_word

print(f"{'knot':>8} {'formula':>8} {'braid':>6} {'2*genus':>8}")
for p in range(2, 10):
    for q in range(p + 1, 10):
        if gcd(p, q) != 1:
            continue
        word = torus_word(p, q)
        formula = torus_c3(p, q)
        braid = positive_braid_c3(word)
        doubled = 2 * closure_genus(word)
        tick = "ok" if formula == braid == doubled else "MISMATCH"
        print(f"T({p},{q}) {formula:>8} {braid:>6} {doubled:>8}   {tick}")
