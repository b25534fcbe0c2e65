"""
Telling gauge groups apart
==========================

A gcd condition on the charges k and l must hold for the gauge groups G_k and
G_l to be homotopy equivalent.  When it fails they are distinct.
"""

from sungauge.gauge_orders import (
    known_orders,
    necessary_equiv_condition,
    necessary_modulus,
    sufficient_equiv_condition,
    wn_homotopy,
)

# group the charges 1..24 by the necessary condition for n = 3
n = 3
m = necessary_modulus(n)
classes: dict[bool, list[int]] = {}
for l in range(1, 25):
    classes.setdefault(necessary_equiv_condition(n, 1, l), []).append(l)
print(f"n={n}, modulus {m}")
print("  could be equivalent to G_1:", classes[True])
print("  certainly not equivalent to G_1:", classes[False])

# with the known value m' = 12 for SU(3), the sufficient test applies too
print("G_1 vs G_13 locally equivalent:", sufficient_equiv_condition(12, 1, 13))

# the literature values these statements rest on
for r in known_orders():
    print(f"{r.group}: m={r.m} m'={r.m_prime}  ({r.source})")

# homotopy groups of SU(inf)/SU(n) just above degree 2n
for parity in ("odd", "even"):
    print(parity, [wn_homotopy(parity, off).group for off in range(0, 4)])
