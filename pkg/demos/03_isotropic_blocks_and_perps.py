#!/usr/bin/env python3
"""Bilinear pairings, isotropic subbundles and annihilator calculus.

The workhorse block lives in a hyperbolic pairing of dimension 2b: a
rank-2a isotropic subbundle with trivial perp quotient and ample dual.
"""

from twistlines import (
    QQ,
    Pairing,
    build_E2a2b,
    is_isotropic,
    perp,
    quotient_type,
    same_subsheaf,
)

print("== hyperbolic pairings ==")
for flavor in ("symmetric", "skew"):
    beta = Pairing.hyperbolic(QQ, 2, flavor)
    print(f"{flavor}: Gram matrix {[list(map(int, r)) for r in beta.matrix]}")

print()
print("== the rank-2a block ==")
for (a, b, flavor) in [(1, 2, "symmetric"), (1, 3, "symmetric"), (2, 5, "skew")]:
    beta, e = build_E2a2b(QQ, a, b, flavor)
    pq = quotient_type(e, perp(e, beta))
    print(f"(a,b)=({a},{b}) {flavor}:")
    print(f"  type {e.type}, isotropic: {is_isotropic(e, beta)}")
    print(f"  perp/E type: {pq} (rank 2b-4a = {2 * b - 4 * a})")
    print(f"  dual type {e.type.dual()} ample: {e.type.dual().is_ample}")

print()
print("== self-annihilating block ==")
beta, e = build_E2a2b(QQ, 1, 2, "symmetric")
print("b = 2a: the block equals its own annihilator:", same_subsheaf(e, perp(e, beta)))

print()
print("== perp is an involution ==")
beta, e = build_E2a2b(QQ, 1, 3, "skew")
print("perp(perp(E)) == E:", same_subsheaf(perp(perp(e, beta), beta), e))
