"""Search small structure-constant tables for a class and verify each hit.

Enumerates every table over F_3 in dimension 2 with at most two nonzero
structure constants that satisfies the left Novikov identities, then runs
the whole theorem catalogue against each one. Exact arithmetic and a fixed
enumeration order make the output identical on every run.
"""
from nonassoc import GF, IdentityKind, search, verify_all

hits = list(search(GF(3), 2, IdentityKind.NOVIKOV_LEFT, mode="exhaustive", sparsity=2))
print(f"left Novikov tables over F_3, dim 2, sparsity <= 2: {len(hits)}")

worst = 0
for A in hits:
    reports = verify_all(A)
    failed = [r for r in reports if r.applicable and not r.holds]
    assert not failed, (A.table, [r.check.value for r in failed])
    worst = max(worst, sum(1 for r in reports if r.applicable))
print(f"no applicable check fails; up to {worst} checks apply to a single table")

sample = hits[7]
print("\none of the hits, as products of basis vectors e1, e2:")
for i in range(sample.dim):
    for j in range(sample.dim):
        vec = sample.table[i][j]
        if any(vec):
            combo = " + ".join(f"{c}*e{k + 1}" for k, c in enumerate(vec) if c)
            print(f"  e{i + 1}*e{j + 1} = {combo}")
