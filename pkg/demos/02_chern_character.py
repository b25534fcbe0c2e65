"""
Chern characters of the K-theory generators
===========================================

The generators of the K-theory of CP^2 smashed with CP^(n-1) have Chern
characters that are products of truncated exponential series.  Phi keeps two
scaled graded pieces and lands in Z^3.
"""

from sungauge.chern import KClass, RingContext, Space, ch_generator, generators, phi

n = 4
ctx = RingContext(n)

# the Chern character of one generator, as a polynomial in u and v
print("ch(L'1) =", ch_generator(ctx, "L'1"))

# Phi of every generator; the results are integral by construction
for g in generators(ctx):
    print(f"Phi({g}) = {phi(KClass.of(ctx, g)).as_tuple()}")

# Phi is additive on K-classes
a = KClass.of(ctx, "L1") + 2 * KClass.of(ctx, "L'2")
print("Phi(L1 + 2 L'2) =", phi(a).as_tuple())

# the smaller complex used for the classification step, odd n
odd = RingContext(5, Space.SMASH_C_ODD)
for g in generators(odd):
    print(f"n=5  Phi({g}) = {phi(KClass.of(odd, g)).as_tuple()}")
