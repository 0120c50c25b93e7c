"""Mechanical verification catalogue for the structure theory.

Each catalogued check takes one algebra, evaluates the hypotheses of the
corresponding statement (identity class, characteristic, solvability,
phi-freeness, ...), and then tests the conclusion.  The result is an
applicability-aware report: a check whose hypotheses fail is reported as
not applicable, never as a failure.

Universally quantified conclusions (over ideals, minimal ideals, maximal
subalgebras, elements) are settled by exhaustive enumeration over finite
fields.  Over the rationals enumeration is impossible, so checks accept a
`certified` mapping supplying the ingredients (radicals, Frattini ideal,
ideal lists, complements).  Certified values are trusted, and every use
is recorded in the report's `assumed` list; fixture loading is
responsible for validating certificates, not this module.
"""

import itertools
import random
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BudgetExceededError,
    PreconditionError,
    TheoremViolationError,
    UnsupportedOperationError,
    UsageError,
)
from .linalg import Echelon, Subspace, span, subspace_intersect, subspace_sum
from .algebra import (
    Algebra,
    IdentityKind,
    annihilator,
    check_identity,
    first_identity_failure,
    fitting_component,
    idealizer,
    is_ideal,
    is_left_ideal,
    is_right_nil,
    is_subalgebra,
    mul_operator,
    opposite,
    quotient,
    restrict,
    subspace_product,
)
from .series import SeriesKind, chief_series, compute_series, nilpotency_profile
from .enumeration import (
    DEFAULT_BUDGET,
    RadicalKind,
    NATURAL_CLASSES,
    frattini,
    ideals as enumerate_ideals,
    iter_projective_vectors,
    maximal_subalgebras as enumerate_maximal_subalgebras,
    minimal_ideals as enumerate_minimal_ideals,
    radical as enumerate_radical,
    subalgebras as enumerate_subalgebras,
)
from .structure import (
    action_sides,
    decompose_semisimple_bicommutative,
    direct_sum_equals,
    find_complement_subalgebra,
    lift_subspace,
    simple_ideal_failure,
    split_zero_socle_by_radical,
)


class CheckId(str, Enum):
    """Catalogue of verifiable statements, in fixed report order."""

    NATURAL_PRODUCT_BICOMMUTATIVE = "natural_product_bicommutative"
    NATURAL_PRODUCT_ASSOSYMMETRIC = "natural_product_assosymmetric"
    NATURAL_PRODUCT_NOVIKOV = "natural_product_novikov"
    NILPOTENT_MAX_SUBALG_IDEAL = "nilpotent_max_subalg_ideal"
    PHI_EQ_ASQ_NILPOTENT = "phi_eq_Asq_nilpotent"
    WEAKLY_NILPOTENT_IMPLIES_NILPOTENT = "weakly_nilpotent_implies_nilpotent"
    CHIEF_FACTOR_ANNIHILATED = "chief_factor_annihilated"
    DT1_ASQ_COMM_ASSOC = "dt1_Asq_comm_assoc"
    SOLVABLE_BICOMM_ASQ_NILPOTENT = "solvable_bicomm_Asq_nilpotent"
    AR_RA_NILPOTENT_BICOMM = "AR_RA_nilpotent_bicomm"
    FITTING_SUBALGEBRA = "fitting_subalgebra"
    FACTOR_ACTS_NILPOTENTLY = "factor_acts_nilpotently"
    PHI_RIGHT_NIL = "phi_right_nil"
    PHI_NILPOTENT_BICOMM = "phi_nilpotent_bicomm"
    MIN1_MINIMAL_IDEAL_SIDES = "min1_minimal_ideal_sides"
    BIMAX_RIGHT_NILPOTENT = "bimax_right_nilpotent"
    BIANN_SUBALGEBRAS = "biann_subalgebras"
    MINIMAL_IDEAL_ZERO_OR_SIMPLE = "minimal_ideal_zero_or_simple"
    SS_IDEALS_IN_ASQ = "ss_ideals_in_Asq"
    BISS_DECOMPOSITION = "biss_decomposition"
    KLEINFELD_SEMISIMPLE_ASSOCIATIVE = "kleinfeld_semisimple_associative"
    ASSOSYM_SOLVABLE_IS_NILPOTENT = "assosym_solvable_is_nilpotent"
    ASSOSYM_QUOTIENT_ASSOCIATIVE = "assosym_quotient_associative"
    ASSOSYM_PHI_NILPOTENT = "assosym_phi_nilpotent"
    NOVIKOV_EQUIVALENCES = "novikov_equivalences"
    LEFT_NILPOTENT_NOVIKOV_NILPOTENT = "left_nilpotent_novikov_nilpotent"
    NOVIKOV_SOLVABLE_PHI_NILPOTENT = "novikov_solvable_phi_nilpotent"
    NOVAR_AR_NILPOTENT = "novar_AR_nilpotent"
    NOVIKOV_ANN_SUBALGEBRAS = "novikov_ann_subalgebras"
    SPLIT_IFF_PHI_FREE = "split_iff_phi_free"
    T_SOCLE_EQUALITIES = "t_socle_equalities"
    BIPHIFREE_STRUCTURE = "biphifree_structure"
    PHIFREE_NOVIKOV = "phifree_novikov"
    ARR_INCLUSIONS = "arr_inclusions"
    CHAR0_NOVIKOV_SPLIT = "char0_novikov_split"
    CHAR0_RAD_ZERO_ALGEBRA = "char0_rad_zero_algebra"
    CHAR0_PHI_IN_RSQ = "char0_phi_in_Rsq"
    CHAR0_PHI_EQ_RSQ = "char0_phi_eq_Rsq"
    A3_NOVIKOV_IFF_BICOMM = "a3_novikov_iff_bicomm"
    NOVMAX_IMPLICATIONS = "novmax_implications"
    SOLVABLE_BICOMM_A3_IFF_LEFT_IDEALS = "solvable_bicomm_A3_iff_left_ideals"


@dataclass(frozen=True)
class VerificationReport:
    check: CheckId
    applicable: bool
    holds: bool | None
    reason: str | None
    witness: dict | None
    counterexample: dict | None
    assumed: tuple
    notes: tuple


class _NotApplicable(Exception):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


_MIRROR_KIND = {
    IdentityKind.RIGHT_COMMUTATIVE: IdentityKind.LEFT_COMMUTATIVE,
    IdentityKind.LEFT_COMMUTATIVE: IdentityKind.RIGHT_COMMUTATIVE,
    IdentityKind.LEFT_SYMMETRIC: IdentityKind.RIGHT_SYMMETRIC,
    IdentityKind.RIGHT_SYMMETRIC: IdentityKind.LEFT_SYMMETRIC,
    IdentityKind.NOVIKOV_LEFT: IdentityKind.NOVIKOV_RIGHT,
    IdentityKind.NOVIKOV_RIGHT: IdentityKind.NOVIKOV_LEFT,
    IdentityKind.BICOMMUTATIVE: IdentityKind.BICOMMUTATIVE,
    IdentityKind.ASSOSYMMETRIC: IdentityKind.ASSOSYMMETRIC,
    IdentityKind.ASSOCIATIVE: IdentityKind.ASSOCIATIVE,
    IdentityKind.COMMUTATIVE: IdentityKind.COMMUTATIVE,
}

_SAMPLE_SEED = 0x5EED
_SAMPLE_COUNT = 24

CERTIFIED_KEYS = (
    "identities",
    "radical_solvable",
    "radical_nil",
    "radical_right_nil",
    "radical_left_nil",
    "phi",
    "frattini_subalgebra",
    "maximal_subalgebras",
    "minimal_ideals",
    "ideals",
    "subalgebras",
    "chief_series",
    "zero_socle_complement",
    "square_complement",
    "semisimple_part",
    "radical_complement",
    "simple_summands",
)

# shape of each certifiable entry, used by the file format as well
CERTIFIED_SUBSPACE_KEYS = (
    "radical_solvable",
    "radical_nil",
    "radical_right_nil",
    "radical_left_nil",
    "phi",
    "frattini_subalgebra",
    "zero_socle_complement",
    "square_complement",
    "semisimple_part",
    "radical_complement",
)
CERTIFIED_SUBSPACE_LIST_KEYS = (
    "maximal_subalgebras",
    "minimal_ideals",
    "ideals",
    "subalgebras",
    "chief_series",
    "simple_summands",
)

_RADICAL_KEY = {
    RadicalKind.SOLVABLE: "radical_solvable",
    RadicalKind.NIL: "radical_nil",
    RadicalKind.RIGHT_NIL: "radical_right_nil",
    RadicalKind.LEFT_NIL: "radical_left_nil",
}

# reversing all products swaps the two one-sided nilpotency notions
_MIRROR_RADICAL = {
    RadicalKind.SOLVABLE: RadicalKind.SOLVABLE,
    RadicalKind.NIL: RadicalKind.NIL,
    RadicalKind.RIGHT_NIL: RadicalKind.LEFT_NIL,
    RadicalKind.LEFT_NIL: RadicalKind.RIGHT_NIL,
}


def _coerce_subspace(field, ambient, value):
    if isinstance(value, Subspace):
        if value.field != field or value.ambient != ambient:
            raise UsageError("certified subspace does not match the algebra")
        return value
    vectors = [tuple(field.coerce(c) for c in row) for row in value]
    return span(field, ambient, vectors)


def _coerce_subspace_list(field, ambient, value):
    return [_coerce_subspace(field, ambient, v) for v in value]


class Analyzer:
    """Cached computations over one algebra, with certified-data fallback over Q.

    Every use of a certified value appends a note to the current check's
    `assumed` list, so reports always show what was trusted versus computed.
    """

    def __init__(self, algebra, certified=None, budget=DEFAULT_BUDGET, _parent=None):
        self.algebra = algebra
        self.certified = dict(certified) if certified else {}
        for key in self.certified:
            if key not in CERTIFIED_KEYS:
                raise UsageError(f"unknown certified key: {key!r}")
        self.budget = budget
        self._cache = {}
        self._mirror_of = _parent
        if _parent is None:
            self._assumed = []
            self._notes = []
            # two-sided facts (ideals, radicals, Frattini data, products)
            # are shared with the mirrored view through the base analyzer
            self._shared_cache = {}
        else:
            self._assumed = _parent._assumed
            self._notes = _parent._notes
            self._shared_cache = _parent._shared_cache
        self._mirror = None

    # -- per-check bookkeeping ------------------------------------------------

    def begin_check(self):
        self._assumed.clear()
        self._notes.clear()

    def assume(self, text):
        if text not in self._assumed:
            self._assumed.append(text)

    def note(self, text):
        if text not in self._notes:
            self._notes.append(text)

    def snapshot(self):
        return tuple(self._assumed), tuple(self._notes)

    # -- mirrored view --------------------------------------------------------

    def mirrored(self):
        """The same algebra with all products reversed, sharing certificates.

        Two-sided notions (ideals, radicals, Frattini data, socles, chief
        series) are identical for an algebra and its opposite, so certified
        subspaces carry over; identity claims swap left/right kinds.
        """
        if self._mirror_of is not None:
            return self._mirror_of
        if self._mirror is None:
            cert = dict(self.certified)
            if "identities" in cert:
                cert["identities"] = {
                    _MIRROR_KIND[IdentityKind(k)].value: v
                    for k, v in cert["identities"].items()
                }
            self._mirror = Analyzer(
                opposite(self.algebra),
                cert,
                self.budget,
                _parent=self,
            )
        return self._mirror

    # -- computed facts -------------------------------------------------------

    def identity(self, kind):
        kind = IdentityKind(kind)
        cert = self.certified.get("identities")
        if cert is not None and kind.value in cert:
            self.assume(f"identity '{kind.value}' taken from certificate")
            return bool(cert[kind.value])
        key = ("identity", kind)
        if key not in self._cache:
            self._cache[key] = check_identity(self.algebra, kind)
        return self._cache[key]

    def profile(self, start=None):
        key = ("profile", start)
        if key not in self._cache:
            self._cache[key] = nilpotency_profile(self.algebra, start)
        return self._cache[key]

    def square(self):
        full = self.algebra.full_space()
        return self.prod(full, full)

    def prod(self, x, y):
        # the span of pairwise products does not depend on orientation once
        # the factors are swapped, so cache under the base orientation
        key = ("prod", y, x) if self._mirror_of is not None else ("prod", x, y)
        cache = self._shared_cache
        if key not in cache:
            cache[key] = subspace_product(self.algebra, x, y)
        return cache[key]

    # -- ingredients: enumerated over finite fields, certified over Q ---------

    def _ingredient(self, cache_key, cert_key, computed, coerce, what):
        """Look up a fact about the algebra, computing or trusting as needed.

        Facts handled here are two-sided (unchanged by reversing products), so
        the cache and the certificate dictionary of the base orientation serve
        the mirrored view as well; callers translate orientation-sensitive
        keys (the one-sided radicals) before calling.
        """
        base = self._mirror_of if self._mirror_of is not None else self
        cache = base._shared_cache
        if cache_key in cache:
            value, assumption, notes = cache[cache_key]
            if assumption:
                self.assume(assumption)
            for text in notes:
                self.note(text)
            return value
        if self.algebra.field.is_finite:
            try:
                value = computed()
            except BudgetExceededError as e:
                raise _NotApplicable(f"budget exceeded while computing {what}: {e}")
            cache[cache_key] = (value, None, ())
            return value
        if cert_key in base.certified:
            mark = len(self._notes)
            value = coerce(base.certified[cert_key])
            notes = tuple(self._notes[mark:])
            assumption = f"{what} taken from certificate"
            cache[cache_key] = (value, assumption, notes)
            self.assume(assumption)
            return value
        raise _NotApplicable(f"requires a finite field (no certified {what})")

    def radical(self, kind):
        kind = RadicalKind(kind)
        if self._mirror_of is not None:
            kind = _MIRROR_RADICAL[kind]
            A = self._mirror_of.algebra
            budget = self.budget
            return self._ingredient(
                ("radical", kind),
                _RADICAL_KEY[kind],
                lambda: enumerate_radical(A, kind, budget),
                lambda v: _coerce_subspace(A.field, A.dim, v),
                f"{kind.value} radical",
            )
        A = self.algebra
        return self._ingredient(
            ("radical", kind),
            _RADICAL_KEY[kind],
            lambda: enumerate_radical(A, kind, self.budget),
            lambda v: _coerce_subspace(A.field, A.dim, v),
            f"{kind.value} radical",
        )

    def phi(self):
        A = self.algebra
        return self._ingredient(
            "phi",
            "phi",
            lambda: frattini(A, self.budget).ideal,
            lambda v: _coerce_subspace(A.field, A.dim, v),
            "Frattini ideal",
        )

    def frattini_subalgebra(self):
        A = self.algebra
        return self._ingredient(
            "frattini_subalgebra",
            "frattini_subalgebra",
            lambda: frattini(A, self.budget).subalgebra,
            lambda v: _coerce_subspace(A.field, A.dim, v),
            "Frattini subalgebra",
        )

    def ideals(self):
        A = self.algebra

        def computed():
            return enumerate_ideals(A, self.budget)

        def coerce(v):
            out = _coerce_subspace_list(A.field, A.dim, v)
            for extra in (A.zero_space(), A.full_space()):
                if extra not in out:
                    out.append(extra)
            out.sort(key=lambda s: s.sort_key())
            return out

        return self._ingredient("ideals", "ideals", computed, coerce, "ideal list")

    def minimal_ideals(self):
        A = self.algebra
        return self._ingredient(
            "minimal_ideals",
            "minimal_ideals",
            lambda: enumerate_minimal_ideals(A, self.budget),
            lambda v: _coerce_subspace_list(A.field, A.dim, v),
            "minimal ideal list",
        )

    def subalgebras(self):
        A = self.algebra

        def coerce(v):
            self.note("subalgebra quantification sampled from certificate")
            return _coerce_subspace_list(A.field, A.dim, v)

        return self._ingredient(
            "subalgebras",
            "subalgebras",
            lambda: enumerate_subalgebras(A, self.budget),
            coerce,
            "subalgebra list",
        )

    def maximal_subalgebras(self):
        A = self.algebra
        return self._ingredient(
            "maximal_subalgebras",
            "maximal_subalgebras",
            lambda: enumerate_maximal_subalgebras(A, self.budget),
            lambda v: _coerce_subspace_list(A.field, A.dim, v),
            "maximal subalgebra list",
        )

    def chief_series_ideals(self):
        A = self.algebra

        def computed():
            return list(chief_series(A).ideals)

        return self._ingredient(
            "chief_series",
            "chief_series",
            computed,
            lambda v: _coerce_subspace_list(A.field, A.dim, v),
            "chief series",
        )

    def socle(self):
        ech = Echelon(self.algebra.field, self.algebra.dim)
        for b in self.minimal_ideals():
            ech.add_subspace(b)
        return ech.subspace()

    def zero_socle(self):
        ech = Echelon(self.algebra.field, self.algebra.dim)
        for b in self.minimal_ideals():
            if self.prod(b, b).is_zero():
                ech.add_subspace(b)
        return ech.subspace()

    def certified_subspace(self, key, what):
        A = self.algebra
        if key not in self.certified:
            raise _NotApplicable(f"requires a certified {what}")
        value = _coerce_subspace(A.field, A.dim, self.certified[key])
        self.assume(f"{what} taken from certificate")
        return value

    # -- element streams ------------------------------------------------------

    def element_stream(self, sub=None):
        """Vectors to quantify over: exhaustive up to scalar (finite) or sampled (Q)."""
        A = self.algebra
        field = A.field
        if sub is None:
            sub = A.full_space()
        if sub.is_zero():
            return []
        if field.is_finite:
            try:
                coeff_tuples = list(iter_projective_vectors(field, sub.dim, self.budget))
            except BudgetExceededError as e:
                raise _NotApplicable(f"budget exceeded while enumerating elements: {e}")
        else:
            self.note("element quantification sampled over the rationals")
            rng = random.Random(_SAMPLE_SEED + sub.dim)
            pool = [field.parse(s) for s in ("-2", "-1", "1", "2", "3")]
            coeff_tuples = [
                tuple(field.one if i == j else field.zero for j in range(sub.dim))
                for i in range(sub.dim)
            ]
            for _ in range(_SAMPLE_COUNT):
                coeff_tuples.append(tuple(rng.choice(pool) for _ in range(sub.dim)))
        out = []
        for coeffs in coeff_tuples:
            vec = [field.zero] * A.dim
            for c, row in zip(coeffs, sub.basis):
                if c != field.zero:
                    for i, r in enumerate(row):
                        if r != field.zero:
                            vec[i] = field.add(vec[i], field.mul(c, r))
            out.append(tuple(vec))
        return out


def _require(condition, reason):
    if not condition:
        raise _NotApplicable(reason)


def _matrix_is_zero(m):
    zero = m.field.zero
    return all(entry == zero for row in m.rows for entry in row)


def _operator_nilpotent(A, vec, side):
    m = mul_operator(A, vec, side).matrix
    power = m
    for _ in range(max(A.dim - 1, 0)):
        if _matrix_is_zero(power):
            return True
        power = power @ m
    return _matrix_is_zero(power)


def _holds(witness=None):
    return True, witness, None


def _fails(counterexample):
    return False, None, counterexample


# ---------------------------------------------------------------------------
# check implementations: each takes an Analyzer, returns (holds, witness, cx)
# ---------------------------------------------------------------------------


def _check_natural_product(z, kinds, extra_novikov=False):
    if not any(z.identity(k) for k in kinds):
        raise _NotApplicable(
            "requires one of: " + ", ".join(k.value for k in kinds)
        )
    A = z.algebra
    ideal_list = z.ideals()
    for left, right in itertools.product(ideal_list, repeat=2):
        product = z.prod(left, right)
        if not is_ideal(A, product):
            return _fails(
                {
                    "problem": "product of ideals is not an ideal",
                    "left": left,
                    "right": right,
                    "product": product,
                }
            )
    checked = {"ideal_pairs": len(ideal_list) ** 2}
    if extra_novikov:
        for kind in SeriesKind:
            terms = compute_series(A, kind).terms
            for power, term in enumerate(terms, start=1):
                if not is_ideal(A, term):
                    return _fails(
                        {
                            "problem": "series term is not an ideal",
                            "series": kind.value,
                            "power": power,
                            "term": term,
                        }
                    )
        for b in ideal_list:
            ann = annihilator(A, b)
            if not is_ideal(A, ann):
                return _fails(
                    {
                        "problem": "annihilator of an ideal is not an ideal",
                        "ideal": b,
                        "annihilator": ann,
                    }
                )
        checked["series_terms"] = True
        checked["annihilators"] = len(ideal_list)
    return _holds(checked)


def check_natural_product_bicommutative(z):
    return _check_natural_product(z, (IdentityKind.BICOMMUTATIVE,))


def check_natural_product_assosymmetric(z):
    return _check_natural_product(z, (IdentityKind.ASSOSYMMETRIC,))


def check_natural_product_novikov(z):
    return _check_natural_product(
        z,
        (IdentityKind.NOVIKOV_LEFT, IdentityKind.NOVIKOV_RIGHT),
        extra_novikov=True,
    )


def check_nilpotent_max_subalg_ideal(z):
    _require(z.profile().nilpotent, "requires a nilpotent algebra")
    A = z.algebra
    maximals = z.maximal_subalgebras()
    for m in maximals:
        if not is_ideal(A, m):
            return _fails({"problem": "maximal subalgebra is not an ideal", "subalgebra": m})
    return _holds({"maximal_subalgebras": len(maximals)})


def check_phi_eq_asq_nilpotent(z):
    _require(z.profile().nilpotent, "requires a nilpotent algebra")
    phi = z.phi()
    frat = z.frattini_subalgebra()
    square = z.square()
    if phi == frat == square:
        return _holds({"phi": phi, "square": square})
    return _fails(
        {
            "problem": "Frattini data differs from the square",
            "phi": phi,
            "frattini_subalgebra": frat,
            "square": square,
        }
    )


def _has_natural_identity(z):
    return any(z.identity(k) for k in NATURAL_CLASSES)


def _require_ideal_products(z):
    """Gate on the ideal-product hypothesis (products of ideals are ideals)."""
    if _has_natural_identity(z):
        return
    if z.algebra.field.is_finite:
        for left, right in itertools.product(z.ideals(), repeat=2):
            if not is_ideal(z.algebra, z.prod(left, right)):
                raise _NotApplicable(
                    "products of ideals are not all ideals, so the hypothesis fails"
                )
        z.note("ideal-product hypothesis verified by enumeration")
        return
    raise _NotApplicable(
        "requires a natural identity class or a finite field to test the "
        "ideal-product hypothesis"
    )


def check_weakly_nilpotent_implies_nilpotent(z):
    prof = z.profile()
    _require(
        prof.right_nilpotent and prof.left_nilpotent,
        "requires a weakly nilpotent algebra",
    )
    A = z.algebra
    _require_ideal_products(z)
    if not prof.nilpotent:
        return _fails(
            {
                "problem": "weakly nilpotent but not nilpotent",
                "right_index": prof.right_index,
                "left_index": prof.left_index,
            }
        )
    witness = {"nilpotent_index": prof.nilpotent_index}
    if A.field.is_finite:
        dims = []
        chain = z.chief_series_ideals()
        for below, above in zip(chain, chain[1:]):
            dims.append(above.dim - below.dim)
        witness["chief_factor_dims"] = tuple(dims)
        if any(d != 1 for d in dims):
            return _fails(
                {
                    "problem": "chief factor of a nilpotent algebra with dimension > 1",
                    "chief_factor_dims": tuple(dims),
                }
            )
    else:
        z.note("chief factor dimensions not checked (needs enumeration)")
    return _holds(witness)


def check_chief_factor_annihilated(z):
    _require(_has_natural_identity(z), "requires a natural identity class")
    right_nil = z.radical(RadicalKind.RIGHT_NIL)
    left_nil = z.radical(RadicalKind.LEFT_NIL)
    chain = z.chief_series_ideals()
    for index, (below, above) in enumerate(zip(chain, chain[1:])):
        bn = z.prod(above, right_nil)
        if not below.contains_subspace(bn):
            return _fails(
                {
                    "problem": "chief factor not annihilated by the right nilradical",
                    "factor_index": index,
                    "product": bn,
                    "below": below,
                }
            )
        nb = z.prod(left_nil, above)
        if not below.contains_subspace(nb):
            return _fails(
                {
                    "problem": "chief factor not annihilated by the left nilradical",
                    "factor_index": index,
                    "product": nb,
                    "below": below,
                }
            )
    return _holds({"factors": len(chain) - 1})


def check_dt1_asq_comm_assoc(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    A = z.algebra
    square = z.square()
    sq_alg, emb = restrict(A, square)
    for kind in (IdentityKind.COMMUTATIVE, IdentityKind.ASSOCIATIVE):
        failure = first_identity_failure(sq_alg, kind)
        if failure is not None:
            component, indices, lhs, rhs = failure
            return _fails(
                {
                    "problem": f"square is not {kind.value}",
                    "basis_indices": indices,
                    "square_basis": emb,
                    "lhs": lhs,
                    "rhs": rhs,
                }
            )
    return _holds({"square": square})


def check_solvable_bicomm_asq_nilpotent(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    prof = z.profile()
    one_sided = prof.right_nilpotent or prof.left_nilpotent
    _require(
        prof.solvable or one_sided,
        "requires a solvable (or one-sidedly nilpotent) algebra",
    )
    square_prof = z.profile(z.square())
    if not square_prof.nilpotent:
        return _fails(
            {
                "problem": "square is not nilpotent",
                "square": z.square(),
                "solvable": prof.solvable,
            }
        )
    if one_sided and not prof.solvable:
        return _fails(
            {
                "problem": "one-sidedly nilpotent but not solvable",
                "right_index": prof.right_index,
                "left_index": prof.left_index,
            }
        )
    return _holds({"square_nilpotent_index": square_prof.nilpotent_index})


def check_ar_ra_nilpotent_bicomm(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    A = z.algebra
    rad = z.radical(RadicalKind.SOLVABLE)
    full = A.full_space()
    for name, product in (("A*R", z.prod(full, rad)), ("R*A", z.prod(rad, full))):
        if not is_ideal(A, product):
            return _fails({"problem": f"{name} is not an ideal", "product": product})
        if not z.profile(product).nilpotent:
            return _fails({"problem": f"{name} is not nilpotent", "product": product})
    return _holds({"radical": rad})


def check_fitting_subalgebra(z):
    sides = []
    if z.identity(IdentityKind.RIGHT_COMMUTATIVE):
        sides.append("right")
    if z.identity(IdentityKind.LEFT_COMMUTATIVE):
        sides.append("left")
    _require(sides, "requires a right or left commutative algebra")
    A = z.algebra
    count = 0
    for side in sides:
        for vec in z.element_stream():
            component = fitting_component(A, vec, side)
            if not is_subalgebra(A, component):
                return _fails(
                    {
                        "problem": "one-sided Fitting component is not a subalgebra",
                        "side": side,
                        "element": vec,
                        "component": component,
                    }
                )
            count += 1
    return _holds({"elements_checked": count, "sides": tuple(sides)})


def _relative_right_nilpotent(z, sub, mod):
    term = sub
    for _ in range(z.algebra.dim + 1):
        if mod.contains_subspace(term):
            return True
        term = z.prod(term, sub)
    return mod.contains_subspace(term)


def check_factor_acts_nilpotently(z):
    orientations = []
    if z.identity(IdentityKind.RIGHT_COMMUTATIVE):
        orientations.append((z, "right"))
    if z.identity(IdentityKind.LEFT_COMMUTATIVE):
        orientations.append((z.mirrored(), "left"))
    _require(orientations, "requires a right or left commutative algebra")
    z.note("subideal quantification restricted to chief series terms")
    tested = 0
    for view, label in orientations:
        A = view.algebra
        phi = view.phi()
        for b in view.chief_series_ideals():
            if b.is_zero():
                continue
            c = subspace_intersect(phi, b)
            if not (
                c.contains_subspace(view.prod(b, c))
                and c.contains_subspace(view.prod(c, b))
            ):
                continue
            if not _relative_right_nilpotent(view, b, c):
                continue
            for vec in view.element_stream(b):
                if not _operator_nilpotent(A, vec, "right"):
                    return _fails(
                        {
                            "problem": "element of the subideal does not act nilpotently",
                            "orientation": label,
                            "element": vec,
                            "subideal": b,
                        }
                    )
                if not is_right_nil(A, vec):
                    return _fails(
                        {
                            "problem": "element of the subideal is not one-sidedly nil",
                            "orientation": label,
                            "element": vec,
                            "subideal": b,
                        }
                    )
                tested += 1
    return _holds({"elements_checked": tested})


def check_phi_right_nil(z):
    orientations = []
    if z.identity(IdentityKind.RIGHT_COMMUTATIVE):
        orientations.append((z, "right"))
    if z.identity(IdentityKind.LEFT_COMMUTATIVE):
        orientations.append((z.mirrored(), "left"))
    _require(orientations, "requires a right or left commutative algebra")
    count = 0
    for view, label in orientations:
        phi = view.phi()
        for vec in view.element_stream(phi):
            if not is_right_nil(view.algebra, vec):
                return _fails(
                    {
                        "problem": "Frattini element is not one-sidedly nil",
                        "orientation": label,
                        "element": vec,
                    }
                )
            count += 1
    return _holds({"elements_checked": count})


def check_phi_nilpotent_bicomm(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    phi = z.phi()
    prof = z.profile(phi)
    if not prof.nilpotent:
        return _fails({"problem": "Frattini ideal is not nilpotent", "phi": phi})
    return _holds({"phi": phi, "nilpotent_index": prof.nilpotent_index})


def check_min1_minimal_ideal_sides(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    rad = z.radical(RadicalKind.SOLVABLE)
    rad_sq = z.prod(rad, rad)
    for b in z.minimal_ideals():
        rb = z.prod(rad, b)
        br = z.prod(b, rad)
        first = rb.is_zero() and z.prod(b, rad_sq).is_zero()
        second = br.is_zero() and z.prod(rad_sq, b).is_zero()
        if not (first or second):
            return _fails(
                {
                    "problem": "minimal ideal fails both annihilation patterns",
                    "minimal_ideal": b,
                    "R*B": rb,
                    "B*R": br,
                }
            )
    return _holds({"minimal_ideals": len(z.minimal_ideals()), "radical": rad})


def check_bimax_right_nilpotent(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    prof = z.profile()
    _require(
        prof.right_nilpotent or prof.left_nilpotent,
        "requires a one-sidedly nilpotent algebra",
    )
    views = []
    if prof.right_nilpotent:
        views.append((z, "right"))
    if prof.left_nilpotent:
        views.append((z.mirrored(), "left"))
    for view, label in views:
        A = view.algebra
        phi = view.phi()
        cube = view.prod(view.square(), A.full_space())
        if not phi.contains_subspace(cube):
            return _fails(
                {
                    "problem": "third right power is not inside the Frattini ideal",
                    "orientation": label,
                    "cube": cube,
                    "phi": phi,
                }
            )
        for m in view.maximal_subalgebras():
            if not is_left_ideal(A, m):
                return _fails(
                    {
                        "problem": "maximal subalgebra is not a one-sided ideal",
                        "orientation": label,
                        "subalgebra": m,
                    }
                )
    return _holds({"orientations": tuple(label for _, label in views)})


def _check_ann_subalgebras(z, class_kinds, class_name):
    _require(
        any(z.identity(k) for k in class_kinds), f"requires a {class_name} algebra"
    )
    A = z.algebra
    subs = z.subalgebras()
    for b in subs:
        for name, value in (("idealizer", idealizer(A, b)), ("annihilator", annihilator(A, b))):
            if not is_subalgebra(A, value):
                return _fails(
                    {
                        "problem": f"{name} of a subalgebra is not a subalgebra",
                        "subalgebra": b,
                        name: value,
                    }
                )
    ideal_list = [b for b in z.ideals()]
    for b in ideal_list:
        ann = annihilator(A, b)
        if not is_ideal(A, ann):
            return _fails(
                {
                    "problem": "annihilator of an ideal is not an ideal",
                    "ideal": b,
                    "annihilator": ann,
                }
            )
    return _holds({"subalgebras": len(subs), "ideals": len(ideal_list)})


def check_biann_subalgebras(z):
    return _check_ann_subalgebras(z, (IdentityKind.BICOMMUTATIVE,), "bicommutative")


def check_minimal_ideal_zero_or_simple(z):
    kinds = (
        IdentityKind.BICOMMUTATIVE,
        IdentityKind.NOVIKOV_LEFT,
        IdentityKind.NOVIKOV_RIGHT,
    )
    _require(
        any(z.identity(k) for k in kinds),
        "requires a bicommutative or Novikov algebra",
    )
    A = z.algebra
    for b in z.minimal_ideals():
        square = z.prod(b, b)
        if square.is_zero():
            continue
        if square != b:
            # B*B is an ideal of the subalgebra B, so a simple B must equal it
            return _fails(
                {
                    "problem": "minimal ideal with nonzero square is not simple",
                    "minimal_ideal": b,
                    "square": square,
                }
            )
        if A.field.is_finite:
            bad = simple_ideal_failure(A, b, z.budget)
            if bad is not None:
                return _fails(
                    {
                        "problem": "minimal ideal with nonzero square is not simple",
                        "minimal_ideal": b,
                        "detail": bad,
                    }
                )
        else:
            z.assume("simplicity of certified minimal ideals not re-verified over Q")
    return _holds({"minimal_ideals": len(z.minimal_ideals())})


def check_ss_ideals_in_asq(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    rad = z.radical(RadicalKind.SOLVABLE)
    _require(rad.is_zero(), "requires a semisimple algebra")
    A = z.algebra
    square = z.square()
    mins = z.minimal_ideals()
    for b in z.ideals():
        if b.is_zero() or not square.contains_subspace(b):
            continue
        parts = [m for m in mins if b.contains_subspace(m)]
        if not direct_sum_equals(A.field, A.dim, parts, b):
            return _fails(
                {
                    "problem": "ideal inside the square is not a direct sum of minimal ideals",
                    "ideal": b,
                    "minimal_parts": parts,
                }
            )
        for m in parts:
            if A.field.is_finite:
                bad = simple_ideal_failure(A, m, z.budget)
                if bad is not None:
                    return _fails(
                        {
                            "problem": "summand of an ideal inside the square is not simple",
                            "ideal": b,
                            "detail": bad,
                        }
                    )
            elif z.prod(m, m) != m:
                return _fails(
                    {
                        "problem": "summand of an ideal inside the square is not simple",
                        "ideal": b,
                        "summand": m,
                    }
                )
            else:
                z.assume("simplicity of certified minimal ideals not re-verified over Q")
    return _holds({"square": square})


def check_biss_decomposition(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    rad = z.radical(RadicalKind.SOLVABLE)
    _require(rad.is_zero(), "requires a semisimple algebra")
    A = z.algebra
    square = z.square()
    simples = [m for m in z.minimal_ideals() if square.contains_subspace(m)]
    if not direct_sum_equals(A.field, A.dim, simples, square):
        return _fails(
            {
                "problem": "minimal ideals inside the square do not sum directly to it",
                "square": square,
                "simples": simples,
            }
        )
    for s in simples:
        if A.field.is_finite:
            bad = simple_ideal_failure(A, s, z.budget)
            if bad is not None:
                return _fails({"problem": "summand is not simple", "detail": bad})
        elif z.prod(s, s) != s:
            return _fails({"problem": "summand is not simple", "summand": s})
        else:
            z.assume("simplicity of certified minimal ideals not re-verified over Q")
    if A.field.is_finite:
        comp = find_complement_subalgebra(A, square, None, z.budget)
    else:
        comp = z.certified_subspace("square_complement", "complement to the square")
    if comp is None:
        return _fails({"problem": "no subalgebra complement to the square", "square": square})
    if not (
        subspace_intersect(comp, square).is_zero()
        and subspace_sum(comp, square) == A.full_space()
        and is_subalgebra(A, comp)
    ):
        return _fails(
            {
                "problem": "supplied complement is not a complement subalgebra",
                "complement": comp,
            }
        )
    if not z.prod(comp, comp).is_zero():
        return _fails(
            {"problem": "complement does not square to zero", "complement": comp}
        )
    pattern = []
    for s in simples:
        sides = action_sides(A, s, comp)
        if not (sides[0] or sides[1]):
            return _fails(
                {
                    "problem": "simple summand and complement multiply nontrivially both ways",
                    "simple": s,
                    "complement": comp,
                }
            )
        pattern.append(sides)
    return _holds(
        {
            "simples": simples,
            "complement": comp,
            "action_pattern": tuple(pattern),
        }
    )


def _characteristic_ok(z):
    field = z.algebra.field
    return not (field.is_finite and field.order in (2, 3))


def check_kleinfeld_semisimple_associative(z):
    _require(z.identity(IdentityKind.ASSOSYMMETRIC), "requires an assosymmetric algebra")
    _require(_characteristic_ok(z), "not applicable in characteristic 2 or 3")
    zsoc = z.zero_socle()
    _require(zsoc.is_zero(), "requires an algebra with no nonzero zero ideals")
    failure = first_identity_failure(z.algebra, IdentityKind.ASSOCIATIVE)
    if failure is not None:
        component, indices, lhs, rhs = failure
        return _fails(
            {
                "problem": "not associative",
                "basis_indices": indices,
                "lhs": lhs,
                "rhs": rhs,
            }
        )
    return _holds({"associative": True})


def check_assosym_solvable_is_nilpotent(z):
    _require(z.identity(IdentityKind.ASSOSYMMETRIC), "requires an assosymmetric algebra")
    _require(_characteristic_ok(z), "not applicable in characteristic 2 or 3")
    prof = z.profile()
    _require(prof.solvable, "requires a solvable algebra")
    if not prof.nilpotent:
        return _fails(
            {
                "problem": "solvable but not nilpotent",
                "solvable_index": prof.solvable_index,
            }
        )
    return _holds({"nilpotent_index": prof.nilpotent_index})


def check_assosym_quotient_associative(z):
    _require(z.identity(IdentityKind.ASSOSYMMETRIC), "requires an assosymmetric algebra")
    _require(_characteristic_ok(z), "not applicable in characteristic 2 or 3")
    nil = z.radical(RadicalKind.NIL)
    q_alg, _ = quotient(z.algebra, nil)
    failure = first_identity_failure(q_alg, IdentityKind.ASSOCIATIVE)
    if failure is not None:
        component, indices, lhs, rhs = failure
        return _fails(
            {
                "problem": "quotient by the nilradical is not associative",
                "quotient_basis_indices": indices,
                "lhs": lhs,
                "rhs": rhs,
            }
        )
    return _holds({"nilradical": nil, "quotient_dim": q_alg.dim})


def check_assosym_phi_nilpotent(z):
    _require(z.identity(IdentityKind.ASSOSYMMETRIC), "requires an assosymmetric algebra")
    _require(_characteristic_ok(z), "not applicable in characteristic 2 or 3")
    phi = z.phi()
    prof = z.profile(phi)
    if not prof.nilpotent:
        return _fails({"problem": "Frattini ideal is not nilpotent", "phi": phi})
    return _holds({"phi": phi, "nilpotent_index": prof.nilpotent_index})


def _novikov_view(z):
    if z.identity(IdentityKind.NOVIKOV_LEFT):
        return z
    if z.identity(IdentityKind.NOVIKOV_RIGHT):
        z.note("mirrored orientation: products analyzed in the opposite algebra")
        return z.mirrored()
    raise _NotApplicable("requires a Novikov algebra")


def check_novikov_equivalences(z):
    view = _novikov_view(z)
    prof = view.profile()
    square_prof = view.profile(view.square())
    conditions = {
        "right_nilpotent": prof.right_nilpotent,
        "square_nilpotent": square_prof.nilpotent,
        "solvable": prof.solvable,
    }
    values = set(conditions.values())
    if len(values) != 1:
        return _fails({"problem": "equivalent conditions disagree", **conditions})
    return _holds(conditions)


def check_left_nilpotent_novikov_nilpotent(z):
    view = _novikov_view(z)
    prof = view.profile()
    _require(prof.left_nilpotent, "requires a left nilpotent algebra")
    if not prof.nilpotent:
        return _fails(
            {
                "problem": "left nilpotent but not nilpotent",
                "left_index": prof.left_index,
            }
        )
    return _holds({"nilpotent_index": prof.nilpotent_index})


def check_novikov_solvable_phi_nilpotent(z):
    view = _novikov_view(z)
    _require(view.profile().solvable, "requires a solvable algebra")
    phi = view.phi()
    prof = view.profile(phi)
    if not prof.nilpotent:
        return _fails({"problem": "Frattini ideal is not nilpotent", "phi": phi})
    return _holds({"phi": phi, "nilpotent_index": prof.nilpotent_index})


def check_novar_ar_nilpotent(z):
    view = _novikov_view(z)
    A = view.algebra
    rad = view.radical(RadicalKind.SOLVABLE)
    product = view.prod(A.full_space(), rad)
    if not is_ideal(A, product):
        return _fails({"problem": "A*R is not an ideal", "product": product})
    prof = view.profile(product)
    if not prof.nilpotent:
        return _fails({"problem": "A*R is not nilpotent", "product": product})
    return _holds({"product": product, "nilpotent_index": prof.nilpotent_index})


def check_novikov_ann_subalgebras(z):
    return _check_ann_subalgebras(
        z, (IdentityKind.NOVIKOV_LEFT, IdentityKind.NOVIKOV_RIGHT), "Novikov"
    )


def check_split_iff_phi_free(z):
    phi = z.phi()
    _require(
        z.profile(phi).nilpotent,
        "requires a nilpotent Frattini ideal",
    )
    A = z.algebra
    zsoc = z.zero_socle()
    if phi.is_zero():
        if A.field.is_finite:
            comp = find_complement_subalgebra(A, zsoc, None, z.budget)
        else:
            comp = z.certified_subspace(
                "zero_socle_complement", "complement to the zero socle"
            )
        if comp is None or not (
            is_subalgebra(A, comp)
            and subspace_intersect(comp, zsoc).is_zero()
            and subspace_sum(comp, zsoc) == A.full_space()
        ):
            return _fails(
                {
                    "problem": "phi-free algebra does not split over its zero socle",
                    "zero_socle": zsoc,
                    "complement": comp,
                }
            )
        return _holds({"zero_socle": zsoc, "complement": comp, "phi_free": True})
    # The reverse direction (a split forces phi = 0) relies on minimal ideals
    # inside the nilpotent Frattini ideal being zero ideals, which needs
    # products of ideals to be ideals.
    _require_ideal_products(z)
    _require(
        A.field.is_finite,
        "requires a finite field to verify that no split exists",
    )
    comp = find_complement_subalgebra(A, zsoc, None, z.budget)
    if comp is not None:
        return _fails(
            {
                "problem": "algebra with nonzero Frattini ideal splits over its zero socle",
                "phi": phi,
                "zero_socle": zsoc,
                "complement": comp,
            }
        )
    return _holds({"zero_socle": zsoc, "phi": phi, "phi_free": False})


def check_t_socle_equalities(z):
    kinds = (
        IdentityKind.BICOMMUTATIVE,
        IdentityKind.ASSOSYMMETRIC,
        IdentityKind.NOVIKOV_LEFT,
        IdentityKind.NOVIKOV_RIGHT,
    )
    _require(
        any(z.identity(k) for k in kinds),
        "requires a bicommutative, assosymmetric or Novikov algebra",
    )
    phi = z.phi()
    _require(phi.is_zero(), "requires a phi-free algebra")
    zsoc = z.zero_socle()
    nil = z.radical(RadicalKind.NIL)
    ann = annihilator(z.algebra, z.socle())
    if zsoc == nil == ann:
        return _holds({"zero_socle": zsoc})
    return _fails(
        {
            "problem": "zero socle, nilradical and socle annihilator differ",
            "zero_socle": zsoc,
            "nilradical": nil,
            "socle_annihilator": ann,
        }
    )


def check_biphifree_structure(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    A = z.algebra
    phi = z.phi()
    rad = z.radical(RadicalKind.SOLVABLE)
    zsoc = z.zero_socle()
    if not phi.is_zero():
        _require(
            A.field.is_finite,
            "requires a finite field to verify that no split exists",
        )
        comp = find_complement_subalgebra(A, zsoc, None, z.budget)
        if comp is not None:
            return _fails(
                {
                    "problem": "algebra with nonzero Frattini ideal splits over its zero socle",
                    "phi": phi,
                    "complement": comp,
                }
            )
        return _holds({"phi": phi, "phi_free": False})
    if A.field.is_finite:
        comp = find_complement_subalgebra(A, zsoc, None, z.budget)
    else:
        comp = z.certified_subspace(
            "zero_socle_complement", "complement to the zero socle"
        )
    if comp is None or not (
        is_subalgebra(A, comp)
        and subspace_intersect(comp, zsoc).is_zero()
        and subspace_sum(comp, zsoc) == A.full_space()
    ):
        return _fails(
            {
                "problem": "no subalgebra complement to the zero socle",
                "zero_socle": zsoc,
                "complement": comp,
            }
        )
    zero_part = subspace_intersect(comp, rad)
    if not (
        subspace_sum(zsoc, zero_part) == rad
        and subspace_intersect(zsoc, zero_part).is_zero()
    ):
        return _fails(
            {
                "problem": "radical is not zero socle plus complement overlap",
                "radical": rad,
                "zero_socle": zsoc,
                "overlap": zero_part,
            }
        )
    if not z.prod(zero_part, zero_part).is_zero():
        return _fails(
            {"problem": "complement overlap does not square to zero", "overlap": zero_part}
        )
    if A.field.is_finite:
        semi = find_complement_subalgebra(A, zero_part, inside=comp, budget=z.budget)
    else:
        semi = z.certified_subspace("semisimple_part", "semisimple part of the complement")
    if semi is None or not (
        is_subalgebra(A, semi)
        and subspace_intersect(semi, zero_part).is_zero()
        and subspace_sum(semi, zero_part) == comp
    ):
        return _fails(
            {
                "problem": "complement does not split into zero part plus subalgebra",
                "complement": comp,
                "zero_part": zero_part,
                "semisimple_part": semi,
            }
        )
    sides = action_sides(A, zero_part, semi)
    if not (sides[0] and sides[1]):
        return _fails(
            {
                "problem": "zero part and semisimple part do not annihilate each other",
                "zero_part": zero_part,
                "semisimple_part": semi,
            }
        )
    square = z.prod(semi, semi)
    witness = {
        "zero_socle": zsoc,
        "complement": comp,
        "zero_part": zero_part,
        "semisimple_part": semi,
        "semisimple_square": square,
    }
    if A.field.is_finite:
        semi_alg, emb = restrict(A, semi)
        try:
            dec = decompose_semisimple_bicommutative(semi_alg, z.budget)
        except (PreconditionError, TheoremViolationError) as e:
            return _fails(
                {
                    "problem": "semisimple part does not decompose",
                    "semisimple_part": semi,
                    "detail": str(e),
                }
            )
        simples = [lift_subspace(A.field, A.dim, emb, s) for s in dec.simples]
        for s in simples:
            s_alg, _ = restrict(A, s)
            if not (
                check_identity(s_alg, IdentityKind.COMMUTATIVE)
                and check_identity(s_alg, IdentityKind.ASSOCIATIVE)
            ):
                return _fails(
                    {
                        "problem": "simple summand is not commutative associative",
                        "simple": s,
                    }
                )
        witness["simples"] = simples
        witness["simple_complement"] = lift_subspace(A.field, A.dim, emb, dec.complement)
    else:
        z.note("fine structure of the semisimple part skipped over the rationals")
    zero_ideals = [b for b in z.minimal_ideals() if z.prod(b, b).is_zero()]
    z_left, z_right, bad = split_zero_socle_by_radical(A, zero_ideals, rad)
    if bad is not None:
        return _fails(
            {"problem": "minimal zero ideal annihilated on neither side", **bad}
        )
    if not direct_sum_equals(A.field, A.dim, [z_left, z_right], zsoc):
        return _fails(
            {
                "problem": "zero socle is not the direct sum of its annihilation parts",
                "left_part": z_left,
                "right_part": z_right,
            }
        )
    witness["socle_killing_radical"] = z_left
    witness["radical_killing_socle"] = z_right
    return _holds(witness)


def check_phifree_novikov(z):
    view = _novikov_view(z)
    A = view.algebra
    phi = view.phi()
    _require(phi.is_zero(), "requires a phi-free algebra")
    zsoc = view.zero_socle()
    if A.field.is_finite:
        comp = find_complement_subalgebra(A, zsoc, None, view.budget)
    else:
        comp = view.certified_subspace(
            "zero_socle_complement", "complement to the zero socle"
        )
    if comp is None or not (
        is_subalgebra(A, comp)
        and subspace_intersect(comp, zsoc).is_zero()
        and subspace_sum(comp, zsoc) == A.full_space()
    ):
        return _fails(
            {
                "problem": "phi-free algebra does not split over its zero socle",
                "zero_socle": zsoc,
                "complement": comp,
            }
        )
    rad = view.radical(RadicalKind.SOLVABLE)
    overlap = subspace_intersect(comp, rad)
    product = view.prod(A.full_space(), overlap)
    if not product.is_zero():
        return _fails(
            {
                "problem": "algebra does not annihilate the complement-radical overlap",
                "overlap": overlap,
                "product": product,
            }
        )
    return _holds({"zero_socle": zsoc, "complement": comp, "overlap": overlap})


def check_arr_inclusions(z):
    view = _novikov_view(z)
    A = view.algebra
    rad = view.radical(RadicalKind.SOLVABLE)
    phi = view.phi()
    arr = view.prod(view.prod(A.full_space(), rad), rad)
    square = view.square()
    if not phi.contains_subspace(arr):
        return _fails(
            {"problem": "(A*R)*R is not inside the Frattini ideal", "arr": arr, "phi": phi}
        )
    if not square.contains_subspace(phi):
        return _fails(
            {"problem": "Frattini ideal is not inside the square", "phi": phi, "square": square}
        )
    return _holds({"arr": arr, "phi": phi, "square": square})


def _char0_novikov_base(z):
    view = _novikov_view(z)
    _require(
        not z.algebra.field.is_finite,
        "characteristic-zero statement; not applicable over finite fields",
    )
    rad = view.radical(RadicalKind.SOLVABLE)
    phi = view.phi()
    return view, rad, phi


def check_char0_novikov_split(z):
    view, rad, phi = _char0_novikov_base(z)
    _require(view.profile(rad).nilpotent, "requires a nilpotent radical")
    A = view.algebra
    rad_sq = view.prod(rad, rad)
    if not phi.is_zero():
        if rad_sq.is_zero():
            return _fails(
                {
                    "problem": "nonzero Frattini ideal although the radical squares to zero",
                    "phi": phi,
                    "radical": rad,
                }
            )
        z.note("non-split direction settled via the radical square")
        return _holds({"phi": phi, "radical_square": rad_sq})
    comp = view.certified_subspace("radical_complement", "complement to the radical")
    if not (
        is_subalgebra(A, comp)
        and subspace_intersect(comp, rad).is_zero()
        and subspace_sum(comp, rad) == A.full_space()
    ):
        return _fails(
            {
                "problem": "supplied complement to the radical is not a complement subalgebra",
                "complement": comp,
            }
        )
    if not rad_sq.is_zero():
        return _fails(
            {"problem": "radical is not a zero algebra", "radical_square": rad_sq}
        )
    comp_alg, emb = restrict(A, comp)
    for kind in (IdentityKind.COMMUTATIVE, IdentityKind.ASSOCIATIVE):
        if not check_identity(comp_alg, kind):
            return _fails(
                {
                    "problem": f"semisimple complement is not {kind.value}",
                    "complement": comp,
                }
            )
    witness = {"radical": rad, "complement": comp}
    if "simple_summands" in z.certified:
        summands = _coerce_subspace_list(A.field, A.dim, z.certified["simple_summands"])
        z.assume("simple summands taken from certificate")
        if not direct_sum_equals(A.field, A.dim, summands, comp):
            return _fails(
                {
                    "problem": "summands do not sum directly to the complement",
                    "summands": summands,
                }
            )
        for s in summands:
            sq = view.prod(s, s)
            if sq != s:
                return _fails(
                    {"problem": "summand does not square to itself", "summand": s}
                )
        z.assume("simplicity of certified summands not re-verified over Q")
        witness["summands"] = summands
    else:
        z.note("field decomposition of the complement not certified; skipped")
    return _holds(witness)


def check_char0_rad_zero_algebra(z):
    view, rad, phi = _char0_novikov_base(z)
    _require(view.profile(rad).nilpotent, "requires a nilpotent radical")
    rad_sq = view.prod(rad, rad)
    if phi.is_zero() != rad_sq.is_zero():
        return _fails(
            {
                "problem": "phi-freeness and radical-square-zero disagree",
                "phi": phi,
                "radical_square": rad_sq,
            }
        )
    return _holds({"phi_free": phi.is_zero(), "radical_square_zero": rad_sq.is_zero()})


def check_char0_phi_in_rsq(z):
    view, rad, phi = _char0_novikov_base(z)
    rad_sq = view.prod(rad, rad)
    if not rad_sq.contains_subspace(phi):
        return _fails(
            {
                "problem": "Frattini ideal is not inside the radical square",
                "phi": phi,
                "radical_square": rad_sq,
            }
        )
    prof = view.profile(phi)
    if not prof.nilpotent:
        return _fails({"problem": "Frattini ideal is not nilpotent", "phi": phi})
    return _holds({"phi": phi, "radical_square": rad_sq})


def check_char0_phi_eq_rsq(z):
    view, rad, phi = _char0_novikov_base(z)
    _require(view.profile(rad).nilpotent, "requires a nilpotent radical")
    rad_sq = view.prod(rad, rad)
    if phi != rad_sq:
        return _fails(
            {
                "problem": "Frattini ideal differs from the radical square",
                "phi": phi,
                "radical_square": rad_sq,
            }
        )
    return _holds({"phi": phi})


def check_a3_novikov_iff_bicomm(z):
    A = z.algebra
    full = A.full_space()
    square = z.square()
    sides = []
    if z.prod(square, full).is_zero():
        sides.append((IdentityKind.NOVIKOV_LEFT, "right"))
    if z.prod(full, square).is_zero():
        sides.append((IdentityKind.NOVIKOV_RIGHT, "left"))
    _require(sides, "requires a vanishing third power on at least one side")
    for kind, label in sides:
        nov = z.identity(kind)
        bic = z.identity(IdentityKind.BICOMMUTATIVE)
        if nov != bic:
            return _fails(
                {
                    "problem": "Novikov and bicommutative disagree under a vanishing cube",
                    "cube_side": label,
                    kind.value: nov,
                    "bicommutative": bic,
                }
            )
    return _holds({"sides": tuple(label for _, label in sides)})


def check_novmax_implications(z):
    view = _novikov_view(z)
    A = view.algebra
    prof = view.profile()
    phi = view.phi()
    cube = view.prod(view.square(), A.full_space())
    cond_i = prof.right_nilpotent
    cond_ii = phi.contains_subspace(cube)
    maximals = view.maximal_subalgebras()
    cond_iii = all(is_left_ideal(A, m) for m in maximals)
    if cond_i and not cond_ii:
        return _fails(
            {
                "problem": "right nilpotent but the third power is not inside phi",
                "cube": cube,
                "phi": phi,
            }
        )
    if cond_ii and not cond_iii:
        bad = next(m for m in maximals if not is_left_ideal(A, m))
        return _fails(
            {
                "problem": "third power inside phi but a maximal subalgebra is not a left ideal",
                "subalgebra": bad,
            }
        )
    return _holds(
        {"right_nilpotent": cond_i, "cube_in_phi": cond_ii, "maximals_left_ideals": cond_iii}
    )


def check_solvable_bicomm_a3_iff_left_ideals(z):
    _require(z.identity(IdentityKind.BICOMMUTATIVE), "requires a bicommutative algebra")
    _require(z.profile().solvable, "requires a solvable algebra")
    A = z.algebra
    phi = z.phi()
    cube = z.prod(z.square(), A.full_space())
    lhs = phi.contains_subspace(cube)
    maximals = z.maximal_subalgebras()
    rhs = all(is_left_ideal(A, m) for m in maximals)
    if lhs != rhs:
        return _fails(
            {
                "problem": "cube-in-phi and maximals-left-ideals disagree",
                "cube_in_phi": lhs,
                "maximals_left_ideals": rhs,
                "cube": cube,
                "phi": phi,
            }
        )
    return _holds({"cube_in_phi": lhs, "maximals_left_ideals": rhs})


_CHECK_FUNCS = {
    CheckId.NATURAL_PRODUCT_BICOMMUTATIVE: check_natural_product_bicommutative,
    CheckId.NATURAL_PRODUCT_ASSOSYMMETRIC: check_natural_product_assosymmetric,
    CheckId.NATURAL_PRODUCT_NOVIKOV: check_natural_product_novikov,
    CheckId.NILPOTENT_MAX_SUBALG_IDEAL: check_nilpotent_max_subalg_ideal,
    CheckId.PHI_EQ_ASQ_NILPOTENT: check_phi_eq_asq_nilpotent,
    CheckId.WEAKLY_NILPOTENT_IMPLIES_NILPOTENT: check_weakly_nilpotent_implies_nilpotent,
    CheckId.CHIEF_FACTOR_ANNIHILATED: check_chief_factor_annihilated,
    CheckId.DT1_ASQ_COMM_ASSOC: check_dt1_asq_comm_assoc,
    CheckId.SOLVABLE_BICOMM_ASQ_NILPOTENT: check_solvable_bicomm_asq_nilpotent,
    CheckId.AR_RA_NILPOTENT_BICOMM: check_ar_ra_nilpotent_bicomm,
    CheckId.FITTING_SUBALGEBRA: check_fitting_subalgebra,
    CheckId.FACTOR_ACTS_NILPOTENTLY: check_factor_acts_nilpotently,
    CheckId.PHI_RIGHT_NIL: check_phi_right_nil,
    CheckId.PHI_NILPOTENT_BICOMM: check_phi_nilpotent_bicomm,
    CheckId.MIN1_MINIMAL_IDEAL_SIDES: check_min1_minimal_ideal_sides,
    CheckId.BIMAX_RIGHT_NILPOTENT: check_bimax_right_nilpotent,
    CheckId.BIANN_SUBALGEBRAS: check_biann_subalgebras,
    CheckId.MINIMAL_IDEAL_ZERO_OR_SIMPLE: check_minimal_ideal_zero_or_simple,
    CheckId.SS_IDEALS_IN_ASQ: check_ss_ideals_in_asq,
    CheckId.BISS_DECOMPOSITION: check_biss_decomposition,
    CheckId.KLEINFELD_SEMISIMPLE_ASSOCIATIVE: check_kleinfeld_semisimple_associative,
    CheckId.ASSOSYM_SOLVABLE_IS_NILPOTENT: check_assosym_solvable_is_nilpotent,
    CheckId.ASSOSYM_QUOTIENT_ASSOCIATIVE: check_assosym_quotient_associative,
    CheckId.ASSOSYM_PHI_NILPOTENT: check_assosym_phi_nilpotent,
    CheckId.NOVIKOV_EQUIVALENCES: check_novikov_equivalences,
    CheckId.LEFT_NILPOTENT_NOVIKOV_NILPOTENT: check_left_nilpotent_novikov_nilpotent,
    CheckId.NOVIKOV_SOLVABLE_PHI_NILPOTENT: check_novikov_solvable_phi_nilpotent,
    CheckId.NOVAR_AR_NILPOTENT: check_novar_ar_nilpotent,
    CheckId.NOVIKOV_ANN_SUBALGEBRAS: check_novikov_ann_subalgebras,
    CheckId.SPLIT_IFF_PHI_FREE: check_split_iff_phi_free,
    CheckId.T_SOCLE_EQUALITIES: check_t_socle_equalities,
    CheckId.BIPHIFREE_STRUCTURE: check_biphifree_structure,
    CheckId.PHIFREE_NOVIKOV: check_phifree_novikov,
    CheckId.ARR_INCLUSIONS: check_arr_inclusions,
    CheckId.CHAR0_NOVIKOV_SPLIT: check_char0_novikov_split,
    CheckId.CHAR0_RAD_ZERO_ALGEBRA: check_char0_rad_zero_algebra,
    CheckId.CHAR0_PHI_IN_RSQ: check_char0_phi_in_rsq,
    CheckId.CHAR0_PHI_EQ_RSQ: check_char0_phi_eq_rsq,
    CheckId.A3_NOVIKOV_IFF_BICOMM: check_a3_novikov_iff_bicomm,
    CheckId.NOVMAX_IMPLICATIONS: check_novmax_implications,
    CheckId.SOLVABLE_BICOMM_A3_IFF_LEFT_IDEALS: check_solvable_bicomm_a3_iff_left_ideals,
}

CHECK_DESCRIPTIONS = {
    CheckId.NATURAL_PRODUCT_BICOMMUTATIVE: "products of ideals are ideals (bicommutative)",
    CheckId.NATURAL_PRODUCT_ASSOSYMMETRIC: "products of ideals are ideals (assosymmetric)",
    CheckId.NATURAL_PRODUCT_NOVIKOV: "products of ideals, series terms and annihilators are ideals (Novikov)",
    CheckId.NILPOTENT_MAX_SUBALG_IDEAL: "maximal subalgebras of a nilpotent algebra are ideals",
    CheckId.PHI_EQ_ASQ_NILPOTENT: "Frattini subalgebra = Frattini ideal = square for nilpotent algebras",
    CheckId.WEAKLY_NILPOTENT_IMPLIES_NILPOTENT: "weakly nilpotent implies nilpotent, with 1-dimensional chief factors",
    CheckId.CHIEF_FACTOR_ANNIHILATED: "chief factors are annihilated by the one-sided nilradicals",
    CheckId.DT1_ASQ_COMM_ASSOC: "the square of a bicommutative algebra is commutative and associative",
    CheckId.SOLVABLE_BICOMM_ASQ_NILPOTENT: "solvable bicommutative algebras have a nilpotent square",
    CheckId.AR_RA_NILPOTENT_BICOMM: "A*R and R*A are nilpotent ideals (bicommutative)",
    CheckId.FITTING_SUBALGEBRA: "one-sided Fitting components are subalgebras",
    CheckId.FACTOR_ACTS_NILPOTENTLY: "subideals nilpotent modulo a Frattini piece act nilpotently",
    CheckId.PHI_RIGHT_NIL: "Frattini elements are one-sidedly nil",
    CheckId.PHI_NILPOTENT_BICOMM: "the Frattini ideal of a bicommutative algebra is nilpotent",
    CheckId.MIN1_MINIMAL_IDEAL_SIDES: "minimal ideals annihilate the radical on one side",
    CheckId.BIMAX_RIGHT_NILPOTENT: "one-sidedly nilpotent bicommutative: maximals are one-sided ideals, cube in phi",
    CheckId.BIANN_SUBALGEBRAS: "idealizers and annihilators are subalgebras (bicommutative)",
    CheckId.MINIMAL_IDEAL_ZERO_OR_SIMPLE: "minimal ideals square to zero or are simple",
    CheckId.SS_IDEALS_IN_ASQ: "semisimple: ideals inside the square are sums of simple minimal ideals",
    CheckId.BISS_DECOMPOSITION: "semisimple bicommutative splits as simples plus a square-zero complement",
    CheckId.KLEINFELD_SEMISIMPLE_ASSOCIATIVE: "assosymmetric with no zero ideals is associative",
    CheckId.ASSOSYM_SOLVABLE_IS_NILPOTENT: "solvable assosymmetric algebras are nilpotent",
    CheckId.ASSOSYM_QUOTIENT_ASSOCIATIVE: "assosymmetric quotient by the nilradical is associative",
    CheckId.ASSOSYM_PHI_NILPOTENT: "the Frattini ideal of an assosymmetric algebra is nilpotent",
    CheckId.NOVIKOV_EQUIVALENCES: "right nilpotent = square nilpotent = solvable (Novikov)",
    CheckId.LEFT_NILPOTENT_NOVIKOV_NILPOTENT: "left nilpotent Novikov algebras are nilpotent",
    CheckId.NOVIKOV_SOLVABLE_PHI_NILPOTENT: "solvable Novikov: the Frattini ideal is nilpotent",
    CheckId.NOVAR_AR_NILPOTENT: "A*R is a nilpotent ideal (Novikov)",
    CheckId.NOVIKOV_ANN_SUBALGEBRAS: "idealizers and annihilators are subalgebras (Novikov)",
    CheckId.SPLIT_IFF_PHI_FREE: "phi-free if and only if the algebra splits over its zero socle",
    CheckId.T_SOCLE_EQUALITIES: "phi-free: zero socle = nilradical = annihilator of the socle",
    CheckId.BIPHIFREE_STRUCTURE: "phi-free bicommutative structure decomposition",
    CheckId.PHIFREE_NOVIKOV: "phi-free Novikov: the algebra annihilates the complement-radical overlap",
    CheckId.ARR_INCLUSIONS: "(A*R)*R inside phi inside the square (Novikov)",
    CheckId.CHAR0_NOVIKOV_SPLIT: "char 0 Novikov, nilpotent radical: phi-free iff zero radical plus fields",
    CheckId.CHAR0_RAD_ZERO_ALGEBRA: "char 0 Novikov, nilpotent radical: phi-free iff the radical squares to zero",
    CheckId.CHAR0_PHI_IN_RSQ: "char 0 Novikov: phi inside the radical square, and nilpotent",
    CheckId.CHAR0_PHI_EQ_RSQ: "char 0 Novikov, nilpotent radical: phi equals the radical square",
    CheckId.A3_NOVIKOV_IFF_BICOMM: "vanishing cube: Novikov if and only if bicommutative",
    CheckId.NOVMAX_IMPLICATIONS: "right nilpotent => cube in phi => maximals are left ideals (Novikov)",
    CheckId.SOLVABLE_BICOMM_A3_IFF_LEFT_IDEALS: "solvable bicommutative: cube in phi iff maximals are left ideals",
}


def describe(check) -> str:
    """One-line summary of what a check asserts."""
    return CHECK_DESCRIPTIONS[CheckId(check)]


def _run_check(analyzer, check):
    analyzer.begin_check()
    fn = _CHECK_FUNCS[check]
    try:
        holds, witness, counterexample = fn(analyzer)
    except _NotApplicable as e:
        assumed, notes = analyzer.snapshot()
        return VerificationReport(
            check=check,
            applicable=False,
            holds=None,
            reason=e.reason,
            witness=None,
            counterexample=None,
            assumed=assumed,
            notes=notes,
        )
    except (UnsupportedOperationError, PreconditionError) as e:
        assumed, notes = analyzer.snapshot()
        return VerificationReport(
            check=check,
            applicable=False,
            holds=None,
            reason=str(e),
            witness=None,
            counterexample=None,
            assumed=assumed,
            notes=notes,
        )
    assumed, notes = analyzer.snapshot()
    return VerificationReport(
        check=check,
        applicable=True,
        holds=holds,
        reason=None,
        witness=witness,
        counterexample=counterexample,
        assumed=assumed,
        notes=notes,
    )


def verify(A: Algebra, check, certified=None, budget=DEFAULT_BUDGET) -> VerificationReport:
    """Run one catalogued check against the algebra."""
    check = CheckId(check)
    analyzer = Analyzer(A, certified, budget)
    return _run_check(analyzer, check)


def verify_all(A: Algebra, certified=None, budget=DEFAULT_BUDGET):
    """Run every catalogued check, sharing cached computations."""
    analyzer = Analyzer(A, certified, budget)
    return [_run_check(analyzer, check) for check in CheckId]


def bracket_power_oracle(A: Algebra, n: int) -> Subspace:
    """Span of all fully parenthesized products of n basis elements.

    Independent oracle for the two-sided power series: association trees are
    enumerated explicitly, so the cost grows with the Catalan numbers and n
    is capped at 6.
    """
    if n < 1:
        raise UsageError("power must be at least 1")
    if n > 6:
        raise BudgetExceededError("tree enumeration is capped at 6 factors")
    levels = {1: tuple(dict.fromkeys(A.basis_vectors()))}
    for m in range(2, n + 1):
        values = {}
        for i in range(1, m):
            for u in levels[i]:
                for v in levels[m - i]:
                    values[A.multiply(u, v)] = None
        levels[m] = tuple(values)
    return span(A.field, A.dim, levels[n])
