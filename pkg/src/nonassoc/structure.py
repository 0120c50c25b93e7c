"""Decomposition constructors for the structure theory of the supported classes.

Two main entry points:

* decompose_semisimple_bicommutative: a semisimple bicommutative algebra S
  splits as S = S^2 (+) U where S^2 is the direct sum of simple minimal
  ideals and U is a square-zero complement subalgebra.
* phi_free_split: an algebra whose Frattini ideal vanishes splits over its
  zero socle; for bicommutative and Novikov inputs extra refinement pieces
  are computed and verified.

Searches are exhaustive within the enumeration budget and deterministic
(canonical subspace order), so the first hit is reproducible.  A failed
search on an input that satisfies the hypotheses raises
TheoremViolationError: either an implementation bug or a genuine
counterexample, never ignored.
"""

from dataclasses import dataclass

from .errors import PreconditionError, TheoremViolationError
from .linalg import Echelon, Subspace, span, subspace_intersect, subspace_sum
from .algebra import (
    Algebra,
    IdentityKind,
    check_identity,
    is_ideal,
    is_subalgebra,
    quotient,
    restrict,
    subspace_product,
)
from .series import nilpotency_profile
from .enumeration import (
    DEFAULT_BUDGET,
    RadicalKind,
    frattini,
    ideals,
    is_semisimple,
    iter_subspaces,
    minimal_ideals,
    radical,
    zero_socle,
)


@dataclass(frozen=True)
class SemisimpleBicommutativeDecomposition:
    """S = square (+) complement with square = direct sum of the simples.

    action_pattern[i] is a pair of booleans (simple_times_complement_zero,
    complement_times_simple_zero); at least one is always True.
    """

    simples: tuple
    complement: Subspace
    square: Subspace
    action_pattern: tuple


@dataclass(frozen=True)
class BicommutativeSplitExtras:
    """Refinement of a phi-free bicommutative split.

    The complement C decomposes as zero_part (+) semisimple_part where
    zero_part = C intersect radical squares to zero, and the two pieces
    annihilate each other.  The semisimple part then decomposes like any
    semisimple bicommutative algebra.  The zero socle splits into the part
    that annihilates the radical from the left (socle_killing_radical,
    Z*R = 0) and the part the radical annihilates (radical_killing_socle,
    R*Z = 0).
    """

    radical: Subspace
    zero_part: Subspace
    semisimple_part: Subspace
    square: Subspace
    simples: tuple
    simple_complement: Subspace
    action_pattern: tuple
    socle_killing_radical: Subspace
    radical_killing_socle: Subspace


@dataclass(frozen=True)
class NovikovSplitExtras:
    """Witness that the whole algebra annihilates C intersect R.

    For the left orientation the verified product is A*(C&R); for the
    mirrored orientation it is (C&R)*A.
    """

    radical: Subspace
    overlap: Subspace
    product: Subspace
    orientation: str


@dataclass(frozen=True)
class PhiFreeSplit:
    zero_socle: Subspace
    complement: Subspace
    bicommutative: BicommutativeSplitExtras | None
    novikov: NovikovSplitExtras | None


@dataclass(frozen=True)
class AssosymmetricReport:
    applicable: bool
    reason: str | None
    semisimple: bool | None
    semisimple_associative: bool | None
    quotient_by_nilradical_associative: bool | None
    notes: tuple


@dataclass(frozen=True)
class NovikovRadicalReport:
    radical: Subspace
    product_with_radical: Subspace
    product_is_ideal: bool
    product_nilpotent: bool
    arr_in_phi: bool
    phi_in_square: bool
    phi: Subspace


def _require_finite_field(A, what):
    if not A.field.is_finite:
        raise PreconditionError("finite field", f"{what} requires a finite field")


def direct_sum_equals(field, ambient, parts, whole):
    """Do the parts sum directly (dims add) to exactly `whole`?"""
    ech = Echelon(field, ambient)
    total = 0
    for p in parts:
        ech.add_subspace(p)
        total += p.dim
    return total == ech.dim and ech.subspace() == whole


def lift_subspace(field, ambient, embedding_rows, sub):
    """Map a subspace given in restricted coordinates back to ambient ones."""
    vectors = []
    for row in sub.basis:
        vec = [field.zero] * ambient
        for c, emb in zip(row, embedding_rows):
            if c != field.zero:
                for i, e in enumerate(emb):
                    if e != field.zero:
                        vec[i] = field.add(vec[i], field.mul(c, e))
        vectors.append(tuple(vec))
    return span(field, ambient, vectors)


def simple_ideal_failure(A, b, budget=DEFAULT_BUDGET):
    """Why the subspace b is not simple as an algebra in its own right.

    Returns None when b is simple (nonzero square and no proper nonzero
    ideal of itself), else a small dict describing the obstruction.
    Requires a finite field to enumerate the ideals of the restriction.
    """
    if subspace_product(A, b, b).is_zero():
        return {"problem": "square is zero", "subspace": b}
    b_alg, emb = restrict(A, b)
    for i in ideals(b_alg, budget):
        if 0 < i.dim < b_alg.dim:
            return {
                "problem": "proper nonzero ideal",
                "subspace": b,
                "ideal": lift_subspace(A.field, A.dim, emb, i),
            }
    return None


def action_sides(A, left, right):
    """(left*right == 0, right*left == 0) as a pair of booleans."""
    return (
        subspace_product(A, left, right).is_zero(),
        subspace_product(A, right, left).is_zero(),
    )


def find_complement_subalgebra(A, sub, inside=None, budget=DEFAULT_BUDGET):
    """First subalgebra W in canonical order with W & sub = 0 and W + sub = inside.

    `inside` defaults to the whole algebra.  Returns None when the exhaustive
    search finds nothing.
    """
    target = inside if inside is not None else A.full_space()
    if not target.contains_subspace(sub):
        raise PreconditionError("containment", "complement target must contain the subspace")
    k = target.dim - sub.dim
    for w in iter_subspaces(A.field, A.dim, dim=k, budget=budget):
        if inside is not None and not target.contains_subspace(w):
            continue
        if not subspace_intersect(w, sub).is_zero():
            continue
        if not is_subalgebra(A, w):
            continue
        return w
    return None


def split_zero_socle_by_radical(A, zero_ideals, rad):
    """Sort minimal zero ideals by which side the radical annihilates.

    Returns (socle_killing_radical, radical_killing_socle, violation) where
    the first collects ideals Z with Z*rad = 0 (including both-sided zeros)
    and the second those with rad*Z = 0 only.  `violation` is a dict when
    some ideal is annihilated on neither side, which the theory forbids.
    """

    left = Echelon(A.field, A.dim)
    right = Echelon(A.field, A.dim)
    for z in zero_ideals:
        if subspace_product(A, z, rad).is_zero():
            left.add_subspace(z)
        elif subspace_product(A, rad, z).is_zero():
            right.add_subspace(z)
        else:
            return None, None, {"problem": "zero ideal annihilated on neither side", "subspace": z}
    return left.subspace(), right.subspace(), None


def decompose_semisimple_bicommutative(S: Algebra, budget=DEFAULT_BUDGET):
    """Split a semisimple bicommutative algebra as simples plus a square-zero complement."""
    _require_finite_field(S, "semisimple decomposition")
    if not check_identity(S, IdentityKind.BICOMMUTATIVE):
        raise PreconditionError("bicommutative")
    if not is_semisimple(S, budget):
        raise PreconditionError("semisimple")

    full = S.full_space()
    square = subspace_product(S, full, full)
    simples = tuple(
        b for b in minimal_ideals(S, budget) if square.contains_subspace(b)
    )
    if not direct_sum_equals(S.field, S.dim, simples, square):
        raise TheoremViolationError(
            "minimal ideals inside the square do not sum directly to it",
            {"square": square, "simples": simples},
        )
    for b in simples:
        bad = simple_ideal_failure(S, b, budget)
        if bad is not None:
            raise TheoremViolationError("a minimal ideal inside the square is not simple", bad)

    complement = find_complement_subalgebra(S, square, None, budget)
    if complement is None:
        raise TheoremViolationError(
            "no subalgebra complement to the square exists", {"square": square}
        )
    if not subspace_product(S, complement, complement).is_zero():
        raise TheoremViolationError(
            "complement to the square does not square to zero", {"complement": complement}
        )

    pattern = []
    for b in simples:
        sides = action_sides(A=S, left=b, right=complement)
        if not (sides[0] or sides[1]):
            raise TheoremViolationError(
                "a simple summand multiplies the complement nontrivially on both sides",
                {"simple": b, "complement": complement},
            )
        pattern.append(sides)
    return SemisimpleBicommutativeDecomposition(simples, complement, square, tuple(pattern))


def _bicommutative_extras(A, zsoc, comp, budget):
    rad = radical(A, RadicalKind.SOLVABLE, budget)
    zero_part = subspace_intersect(comp, rad)
    if not (
        subspace_sum(zsoc, zero_part) == rad
        and subspace_intersect(zsoc, zero_part).is_zero()
    ):
        raise TheoremViolationError(
            "radical is not the direct vector-space sum of zero socle and complement overlap",
            {"radical": rad, "zero_socle": zsoc, "overlap": zero_part},
        )
    if not subspace_product(A, zero_part, zero_part).is_zero():
        raise TheoremViolationError(
            "complement overlap with the radical does not square to zero",
            {"overlap": zero_part},
        )

    semi = find_complement_subalgebra(A, zero_part, inside=comp, budget=budget)
    if semi is None:
        raise TheoremViolationError(
            "no subalgebra complement to the radical part inside the complement",
            {"complement": comp, "zero_part": zero_part},
        )
    sides = action_sides(A, zero_part, semi)
    if not (sides[0] and sides[1]):
        raise TheoremViolationError(
            "zero part and semisimple part do not annihilate each other",
            {"zero_part": zero_part, "semisimple_part": semi},
        )

    semi_alg, emb = restrict(A, semi)
    if not is_semisimple(semi_alg, budget):
        raise TheoremViolationError(
            "semisimple part of the complement has a nonzero radical",
            {"semisimple_part": semi},
        )
    dec = decompose_semisimple_bicommutative(semi_alg, budget)
    simples = tuple(lift_subspace(A.field, A.dim, emb, s) for s in dec.simples)
    square = subspace_product(A, semi, semi)
    simple_comp = lift_subspace(A.field, A.dim, emb, dec.complement)
    for s in simples:
        s_alg, _ = restrict(A, s)
        if not (
            check_identity(s_alg, IdentityKind.COMMUTATIVE)
            and check_identity(s_alg, IdentityKind.ASSOCIATIVE)
        ):
            raise TheoremViolationError(
                "a simple summand is not commutative associative", {"simple": s}
            )

    zero_ideals = [
        b for b in minimal_ideals(A, budget) if subspace_product(A, b, b).is_zero()
    ]
    z_left, z_right, bad = split_zero_socle_by_radical(A, zero_ideals, rad)
    if bad is not None:
        raise TheoremViolationError(
            "a minimal zero ideal multiplies the radical nontrivially on both sides", bad
        )
    if not direct_sum_equals(A.field, A.dim, [z_left, z_right], zsoc):
        raise TheoremViolationError(
            "zero socle is not the direct sum of its two annihilation parts",
            {"left": z_left, "right": z_right, "zero_socle": zsoc},
        )
    return BicommutativeSplitExtras(
        radical=rad,
        zero_part=zero_part,
        semisimple_part=semi,
        square=square,
        simples=simples,
        simple_complement=simple_comp,
        action_pattern=dec.action_pattern,
        socle_killing_radical=z_left,
        radical_killing_socle=z_right,
    )


def _novikov_extras(A, comp, orientation, budget):
    rad = radical(A, RadicalKind.SOLVABLE, budget)
    overlap = subspace_intersect(comp, rad)
    if orientation == "left":
        product = subspace_product(A, A.full_space(), overlap)
    else:
        product = subspace_product(A, overlap, A.full_space())
    if not product.is_zero():
        raise TheoremViolationError(
            "the algebra does not annihilate the complement-radical overlap",
            {"overlap": overlap, "product": product, "orientation": orientation},
        )
    return NovikovSplitExtras(rad, overlap, product, orientation)


def phi_free_split(A: Algebra, budget=DEFAULT_BUDGET):
    """Split a phi-free algebra over its zero socle, with class-specific extras."""
    _require_finite_field(A, "phi-free splitting")
    fr = frattini(A, budget)
    if not fr.ideal.is_zero():
        raise PreconditionError(
            "phi-free", "not phi-free: the Frattini ideal is nonzero"
        )
    zsoc = zero_socle(A, budget)
    comp = find_complement_subalgebra(A, zsoc, None, budget)
    if comp is None:
        raise TheoremViolationError(
            "no subalgebra complement to the zero socle exists", {"zero_socle": zsoc}
        )

    bic = None
    nov = None
    if check_identity(A, IdentityKind.BICOMMUTATIVE):
        bic = _bicommutative_extras(A, zsoc, comp, budget)
    if check_identity(A, IdentityKind.NOVIKOV_LEFT):
        nov = _novikov_extras(A, comp, "left", budget)
    elif check_identity(A, IdentityKind.NOVIKOV_RIGHT):
        nov = _novikov_extras(A, comp, "right", budget)
    return PhiFreeSplit(zsoc, comp, bic, nov)


def assosymmetric_report(A: Algebra, budget=DEFAULT_BUDGET):
    """Associativity facts for an assosymmetric algebra away from characteristic 2, 3."""
    if not check_identity(A, IdentityKind.ASSOSYMMETRIC):
        raise PreconditionError("assosymmetric")
    if A.field.is_finite and A.field.order in (2, 3):
        return AssosymmetricReport(
            applicable=False,
            reason="characteristic 2 or 3",
            semisimple=None,
            semisimple_associative=None,
            quotient_by_nilradical_associative=None,
            notes=(),
        )
    if not A.field.is_finite:
        return AssosymmetricReport(
            applicable=True,
            reason=None,
            semisimple=None,
            semisimple_associative=None,
            quotient_by_nilradical_associative=None,
            notes=("radical parts require a finite field",),
        )
    semisimple = is_semisimple(A, budget)
    ss_assoc = check_identity(A, IdentityKind.ASSOCIATIVE) if semisimple else None
    nil = radical(A, RadicalKind.NIL, budget)
    q_alg, _ = quotient(A, nil)
    q_assoc = check_identity(q_alg, IdentityKind.ASSOCIATIVE)
    return AssosymmetricReport(
        applicable=True,
        reason=None,
        semisimple=semisimple,
        semisimple_associative=ss_assoc,
        quotient_by_nilradical_associative=q_assoc,
        notes=(),
    )


def novikov_radical_report(A: Algebra, budget=DEFAULT_BUDGET):
    """Nilpotency of A*R and the Frattini inclusions for a left Novikov algebra."""
    if not check_identity(A, IdentityKind.NOVIKOV_LEFT):
        raise PreconditionError("novikov-left")
    _require_finite_field(A, "novikov radical report")
    full = A.full_space()
    rad = radical(A, RadicalKind.SOLVABLE, budget)
    prod = subspace_product(A, full, rad)
    profile = nilpotency_profile(A, prod)
    fr = frattini(A, budget)
    arr = subspace_product(A, prod, rad)
    square = subspace_product(A, full, full)
    return NovikovRadicalReport(
        radical=rad,
        product_with_radical=prod,
        product_is_ideal=is_ideal(A, prod),
        product_nilpotent=profile.nilpotent,
        arr_in_phi=fr.ideal.contains_subspace(arr),
        phi_in_square=square.contains_subspace(fr.ideal),
        phi=fr.ideal,
    )
