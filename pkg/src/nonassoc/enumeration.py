"""Exhaustive enumeration over finite fields: vectors, subspaces, ideals,
maximal subalgebras, Frattini data, and enumeration-based radicals.

Everything here requires a finite field and respects explicit budgets;
operations that would blow past a budget fail loudly instead of degrading.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .algebra import (
    Algebra,
    check_identity,
    ideal_closure,
    is_ideal,
    is_subalgebra,
    IdentityKind,
    subspace_product,
)
from .errors import BudgetExceededError, PreconditionError, UnsupportedOperationError
from .linalg import Echelon, Subspace, full_subspace, span, subspace_intersect, zero_subspace
from .series import SeriesKind, bracket_terminates, compute_series


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps for exhaustive sweeps; exceeding one raises BudgetExceededError."""

    max_vectors: int = 10**7
    max_subspaces: int = 10**6

    def __post_init__(self):
        if self.max_vectors < 1 or self.max_subspaces < 1:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = EnumerationBudget()


class RadicalKind(str, Enum):
    SOLVABLE = "solvable"
    NIL = "nil"
    RIGHT_NIL = "right-nil"
    LEFT_NIL = "left-nil"


# Identity classes for which sums of (one-sided) nilpotent ideals are again
# such ideals, making the nil-kind radicals well defined.
NATURAL_CLASSES = (
    IdentityKind.BICOMMUTATIVE,
    IdentityKind.ASSOSYMMETRIC,
    IdentityKind.NOVIKOV_LEFT,
    IdentityKind.NOVIKOV_RIGHT,
)


def _require_finite(field, what):
    if not field.is_finite:
        raise UnsupportedOperationError(f"{what} requires a finite field, not {field!r}")


def count_vectors(field, n: int) -> int:
    _require_finite(field, "vector enumeration")
    return field.order**n


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def count_subspaces(field, n: int, dim: int | None = None) -> int:
    _require_finite(field, "subspace enumeration")
    q = field.order
    if dim is not None:
        return gaussian_binomial(n, dim, q)
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _check_vector_budget(field, n, budget):
    total = count_vectors(field, n)
    if total > budget.max_vectors:
        raise BudgetExceededError(
            f"{total} vectors exceed the budget of {budget.max_vectors}"
        )
    return total


def iter_vectors(field, n: int, budget: EnumerationBudget = DEFAULT_BUDGET):
    """All of F_q^n in lexicographic order."""
    _check_vector_budget(field, n, budget)
    return itertools.product(tuple(field.elements()), repeat=n)


def iter_projective_vectors(field, n: int, budget: EnumerationBudget = DEFAULT_BUDGET):
    """One representative per line: first nonzero coordinate normalized to 1."""
    _check_vector_budget(field, n, budget)
    elements = tuple(field.elements())
    zero, one = field.zero, field.one
    for lead in range(n):
        head = (zero,) * lead + (one,)
        for tail in itertools.product(elements, repeat=n - lead - 1):
            yield head + tail


def iter_subspaces(
    field,
    n: int,
    dim: int | None = None,
    budget: EnumerationBudget = DEFAULT_BUDGET,
):
    """Canonical enumeration of subspaces of F_q^n via RREF pivot patterns.

    Ordered by dimension, then lexicographically by the RREF basis matrix;
    each basis comes out already in reduced row echelon form.
    """
    total = count_subspaces(field, n, dim)
    if total > budget.max_subspaces:
        raise BudgetExceededError(
            f"{total} subspaces exceed the budget of {budget.max_subspaces}"
        )
    elements = tuple(field.elements())
    zero, one = field.zero, field.one
    dims = range(n + 1) if dim is None else (dim,)
    for k in dims:
        if k == 0:
            yield zero_subspace(field, n)
            continue
        level = []
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivot_set
            ]
            for values in itertools.product(elements, repeat=len(free)):
                rows = [[zero] * n for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = one
                for (r, c), val in zip(free, values):
                    rows[r][c] = val
                level.append(
                    Subspace(field, n, tuple(tuple(r) for r in rows), tuple(pivots))
                )
        level.sort(key=lambda s: s.basis)
        yield from level


def minimal_overideals(A: Algebra, base: Subspace, inside: Subspace, budget=DEFAULT_BUDGET):
    """Ideals C with base < C <= inside whose image in A/base is a minimal ideal.

    Returned in ascending (dim, basis) order; the first entry is the
    deterministic tie-break used by chief series.
    """
    candidates = {}
    for v in iter_projective_vectors(A.field, A.dim, budget):
        if not inside.contains_vector(v) or base.contains_vector(v):
            continue
        c = ideal_closure(A, list(base.basis) + [v])
        if inside.contains_subspace(c):
            candidates[c.basis] = c
    items = sorted(candidates.values(), key=lambda s: s.sort_key())
    minimal = []
    for c in items:
        if not any(c.contains_subspace(m) for m in minimal):
            minimal.append(c)
    return minimal


def minimal_ideals(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET):
    """All minimal nonzero ideals, canonically ordered."""
    _require_finite(A.field, "minimal ideal enumeration")
    if A.dim == 0:
        return []
    return minimal_overideals(A, A.zero_space(), A.full_space(), budget)


def socle(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET) -> Subspace:
    """Sum of all minimal ideals."""
    ech = Echelon(A.field, A.dim)
    for b in minimal_ideals(A, budget):
        ech.add_subspace(b)
    return ech.subspace()


def zero_socle(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET) -> Subspace:
    """Sum of the minimal ideals that square to zero."""
    ech = Echelon(A.field, A.dim)
    for b in minimal_ideals(A, budget):
        if subspace_product(A, b, b).is_zero():
            ech.add_subspace(b)
    return ech.subspace()


def subalgebras(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET, proper=False):
    """All subalgebras (optionally proper only), in canonical enumeration order."""
    _require_finite(A.field, "subalgebra enumeration")
    out = []
    for s in iter_subspaces(A.field, A.dim, budget=budget):
        if proper and s.dim == A.dim:
            continue
        if is_subalgebra(A, s):
            out.append(s)
    return out


def ideals(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET):
    """All ideals, in canonical enumeration order."""
    _require_finite(A.field, "ideal enumeration")
    return [s for s in iter_subspaces(A.field, A.dim, budget=budget) if is_ideal(A, s)]


def maximal_subalgebras(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET):
    """Proper subalgebras maximal under inclusion, canonically ordered."""
    subs = subalgebras(A, budget, proper=True)
    subs.sort(key=lambda s: (-s.dim, s.basis))
    maximal = []
    for s in subs:
        if not any(m.contains_subspace(s) for m in maximal):
            maximal.append(s)
    maximal.sort(key=lambda s: s.sort_key())
    return maximal


def ideal_core(A: Algebra, sub: Subspace) -> Subspace:
    """Largest ideal of A contained in the subspace `sub`."""
    from .linalg import Matrix, kernel

    current = sub
    while True:
        if current.is_zero():
            return current
        k = current.dim
        nonpivots = [c for c in range(A.dim) if c not in set(current.pivots)]
        rows = []
        for i in range(A.dim):
            left = [current.reduce(A.left_mul_basis(i, b)) for b in current.basis]
            right = [current.reduce(A.right_mul_basis(b, i)) for b in current.basis]
            for images in (left, right):
                for c in nonpivots:
                    rows.append([img[c] for img in images])
        coeffs = kernel(Matrix(A.field, rows, ncols=k))
        if coeffs.dim == k:
            return current
        field = A.field
        new_basis = []
        for t in coeffs.basis:
            vec = [field.zero] * A.dim
            for coeff, b in zip(t, current.basis):
                if coeff != field.zero:
                    for idx, x in enumerate(b):
                        if x != field.zero:
                            vec[idx] = field.add(vec[idx], field.mul(coeff, x))
            new_basis.append(vec)
        current = span(field, A.dim, new_basis)


@dataclass(frozen=True)
class FrattiniData:
    """F(A): intersection of maximal subalgebras; phi(A): its ideal core."""

    subalgebra: Subspace
    ideal: Subspace


def frattini(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET) -> FrattiniData:
    """Frattini subalgebra and Frattini ideal (the whole space when dim 0)."""
    f = full_subspace(A.field, A.dim)
    for m in maximal_subalgebras(A, budget):
        f = subspace_intersect(f, m)
        if f.is_zero():
            break
    return FrattiniData(f, ideal_core(A, f))


def _qualifies(A, closure, kind):
    if kind is RadicalKind.SOLVABLE:
        return compute_series(A, SeriesKind.DERIVED, start=closure).terminated
    if kind is RadicalKind.RIGHT_NIL:
        return compute_series(A, SeriesKind.RIGHT_POWER, start=closure).terminated
    if kind is RadicalKind.LEFT_NIL:
        return compute_series(A, SeriesKind.LEFT_POWER, start=closure).terminated
    return bracket_terminates(A, start=closure)[0]


def radical(A: Algebra, kind, budget: EnumerationBudget = DEFAULT_BUDGET) -> Subspace:
    """Largest solvable / nilpotent / one-sided-nilpotent ideal, by enumeration.

    Sums every single-generator ideal closure with the requested property;
    the accumulated sum of qualifying ideals keeps the property (standard sum
    arguments; the nil kinds additionally require a natural identity class,
    where products of ideals are ideals).
    """
    kind = RadicalKind(kind)
    _require_finite(A.field, "radical enumeration")
    if kind is not RadicalKind.SOLVABLE and not any(
        check_identity(A, c) for c in NATURAL_CLASSES
    ):
        raise PreconditionError(
            "natural identity class",
            f"the {kind.value} radical is only defined here for bicommutative, "
            "assosymmetric, or Novikov algebras (either orientation): sums of "
            "one-sided nilpotent ideals need products of ideals to be ideals",
        )
    _check_vector_budget(A.field, A.dim, budget)
    acc = Echelon(A.field, A.dim)
    for v in iter_projective_vectors(A.field, A.dim, budget):
        if acc.contains(v):
            continue
        closure = ideal_closure(A, [v])
        if _qualifies(A, closure, kind):
            acc.add_subspace(closure)
    return acc.subspace()


def is_semisimple(A: Algebra, budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    """No nonzero solvable ideal."""
    return radical(A, RadicalKind.SOLVABLE, budget).is_zero()
