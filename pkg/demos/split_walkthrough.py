"""Frattini-free splitting, on one algebra that splits and one that refuses.

An algebra with zero Frattini ideal decomposes as zero-socle ideal plus a
complement subalgebra; the truncated polynomial algebra t*F[t]/(t^4) has
Frattini ideal span{t^2, t^3}, so the split operation must refuse it.
"""
from nonassoc import PreconditionError, fixture_by_name, frattini, phi_free_split

nov = fixture_by_name("a_nov_f2")
A = nov.algebra
print(f"{nov.name}: {nov.note}")
result = phi_free_split(A)
print(f"  zero socle: {result.zero_socle.basis}")
print(f"  complement subalgebra: {result.complement.basis}")
extras = result.novikov
print(f"  radical: {extras.radical.basis}")
print(f"  annihilated overlap orientation: {extras.orientation}")

tpoly = fixture_by_name("tpoly3_f2")
B = tpoly.algebra
phi = frattini(B).ideal
print(f"\n{tpoly.name}: Frattini ideal has dimension {phi.dim}")
try:
    phi_free_split(B)
except PreconditionError as e:
    print(f"  split refused: {e}")
