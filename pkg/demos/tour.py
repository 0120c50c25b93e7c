"""Quick tour: build a small algebra by hand and take it apart.

The running example is the two-dimensional algebra with x*x = x and x*y = x
over F_2: it satisfies both commutative-like identities on triple products
(bicommutative) while being neither commutative nor associative, and it has
no solvable ideals at all.
"""
from nonassoc import (
    Algebra,
    GF,
    IdentityKind,
    RadicalKind,
    check_identity,
    decompose_semisimple_bicommutative,
    first_identity_failure,
    radical,
)

F2 = GF(2)
A = Algebra.from_products(F2, 2, {(0, 0): {0: 1}, (0, 1): {0: 1}}, labels=("x", "y"))

print("identity classes:")
for kind in IdentityKind:
    print(f"  {kind.value}: {check_identity(A, kind)}")

part, indices, lhs, rhs = first_identity_failure(A, IdentityKind.COMMUTATIVE)
print(f"\ncommutativity fails on basis pair {indices}: {lhs} != {rhs}")

rad = radical(A, RadicalKind.SOLVABLE)
print(f"\nsolvable radical dimension: {rad.dim} (semisimple: {rad.is_zero()})")

dec = decompose_semisimple_bicommutative(A)
print("semisimple bicommutative decomposition:")
print(f"  simple summands: {[s.basis for s in dec.simples]}")
print(f"  square-zero complement: {dec.complement.basis}")
print(f"  action pattern (S*U zero, U*S zero): {dec.action_pattern}")
