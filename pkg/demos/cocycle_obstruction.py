#!/usr/bin/env python3

"""
Why A_q is quasi-Hopf and not merely a twisted Hopf algebra: the
associator restricts to a 3-cocycle on the grouplikes (Z/n)^r, and
that cocycle is not a coboundary.  The decision runs an exact linear
solver over Z/n (Smith normal form); at n = 3 an exhaustive sweep over
all 3^9 two-cochains confirms it independently.
"""

from qborel import (
    brute_force_decision,
    build_borel,
    closed_form_associator,
    decide_coboundary,
    restrict_associator,
)
import numpy as np

from qborel.cocycle import AdditiveCochain, axis_restriction, coboundary_of, is_cocycle

w = restrict_associator(closed_form_associator(build_borel("A1", 3)))
print("type A1, n = 3: restricted cochain w(b,c,d) on Z/3, additive exponents:")
print(w.table)
assert is_cocycle(w)
print("w is a 3-cocycle: exact")
print()

dec = decide_coboundary(w)
assert not dec.trivial
print(f"coboundary system unsolvable, obstruction: {dec.obstruction}")

brute = brute_force_decision(w)
assert not brute.trivial
print("exhaustive check over all 3^9 = 19683 two-cochains agrees: no witness")
print()

# a genuine coboundary is decided trivial and the witness is recovered
mu = AdditiveCochain(3, 1, 2, np.array([[0, 1, 2], [2, 0, 1], [1, 2, 0]]))
db = coboundary_of(mu)
dec2 = decide_coboundary(db)
assert dec2.trivial and coboundary_of(dec2.witness) == db
print("control: d(mu) for a 2-cochain mu is decided trivial, witness recovered")
print()

w2 = restrict_associator(closed_form_associator(build_borel("A2", 5)))
dec3 = decide_coboundary(w2)
assert not dec3.trivial
print(f"type A2, n = 5 on (Z/5)^2: nontrivial, obstruction {dec3.obstruction['kind']}")
for axis in range(2):
    sub = axis_restriction(w2, axis)
    assert not decide_coboundary(sub).trivial
    print(f"  coordinate {axis} restriction alone already carries the class")
