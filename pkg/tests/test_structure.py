"""Splitting and decomposition theorems on concrete algebras."""
from __future__ import annotations

import pytest

from nonassoc.corpus import fixture_by_name
from nonassoc.errors import PreconditionError
from nonassoc.fields import GF
from nonassoc.linalg import span, subspace_intersect, subspace_sum
from nonassoc.algebra import is_subalgebra, subspace_product
from nonassoc.structure import (
    assosymmetric_report,
    decompose_semisimple_bicommutative,
    direct_sum_equals,
    find_complement_subalgebra,
    novikov_radical_report,
    phi_free_split,
    split_zero_socle_by_radical,
)

from conftest import make


def test_direct_sum_equals():
    f2 = GF(2)
    u = span(f2, 3, [(1, 0, 0)])
    v = span(f2, 3, [(0, 1, 0)])
    w = span(f2, 3, [(0, 0, 1)])
    assert direct_sum_equals(f2, 3, [u, v, w], span(f2, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert not direct_sum_equals(f2, 3, [u, v], span(f2, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    overlapping = span(f2, 3, [(1, 0, 0), (0, 1, 0)])
    assert not direct_sum_equals(f2, 3, [u, overlapping], span(f2, 3, [(1, 0, 0), (0, 1, 0)]))


def test_find_complement_subalgebra():
    A = fixture_by_name("a_nov_f2").algebra
    line_a = span(GF(2), 2, [(1, 0)])
    comp = find_complement_subalgebra(A, line_a)
    assert comp == span(GF(2), 2, [(0, 1)])
    assert is_subalgebra(A, comp)
    assert subspace_intersect(comp, line_a).is_zero()
    assert subspace_sum(comp, line_a) == A.full_space()


def test_phi_free_split_on_semisimple_bicommutative():
    A = fixture_by_name("a_ex_f2").algebra
    result = phi_free_split(A)
    assert result.zero_socle.is_zero()
    assert result.complement == A.full_space()
    assert result.novikov is None
    extras = result.bicommutative
    assert extras is not None
    assert extras.radical.is_zero()
    assert extras.zero_part.is_zero()
    assert extras.semisimple_part == A.full_space()
    assert extras.square == span(GF(2), 2, [(1, 0)])
    assert [s.basis for s in extras.simples] == [((1, 0),)]
    assert extras.simple_complement == span(GF(2), 2, [(0, 1)])
    # The complement annihilates each simple from the left: U * S = 0.
    assert extras.action_pattern == ((False, True),)
    assert subspace_product(A, extras.simple_complement, extras.simples[0]).is_zero()


def test_phi_free_split_on_novikov_fixture():
    A = fixture_by_name("a_nov_f2").algebra
    result = phi_free_split(A)
    assert result.zero_socle == span(GF(2), 2, [(1, 0)])
    assert result.complement == span(GF(2), 2, [(0, 1)])
    extras = result.novikov
    assert extras is not None
    assert extras.orientation == "left"
    assert extras.radical == span(GF(2), 2, [(1, 0)])
    assert extras.overlap.is_zero()
    assert extras.product.is_zero()


def test_phi_free_split_respects_mirror_orientation():
    # shift is right Novikov; the verified annihilation product flips sides.
    A = fixture_by_name("shift_f3").algebra
    result = phi_free_split(A)
    extras = result.novikov
    assert extras is not None
    assert extras.orientation == "right"


def test_split_refuses_when_phi_is_nonzero():
    tp3 = fixture_by_name("tpoly3_f2").algebra
    with pytest.raises(PreconditionError) as err:
        phi_free_split(tp3)
    assert err.value.precondition == "phi-free"
    assert "Frattini ideal is nonzero" in str(err.value)


def test_split_requires_finite_field():
    with pytest.raises(PreconditionError) as err:
        phi_free_split(fixture_by_name("a_ex_q").algebra)
    assert err.value.precondition == "finite field"


def test_decompose_semisimple_bicommutative():
    A = fixture_by_name("a_ex_f3").algebra
    dec = decompose_semisimple_bicommutative(A)
    assert [s.basis for s in dec.simples] == [((1, 0),)]
    assert dec.complement == span(GF(3), 2, [(0, 1)])
    assert dec.square == span(GF(3), 2, [(1, 0)])
    assert dec.action_pattern == ((False, True),)
    # Each simple is its own square (simple ideals are never zero algebras).
    for simple in dec.simples:
        assert subspace_product(A, simple, simple) == simple


def test_decompose_refusals():
    with pytest.raises(PreconditionError) as not_ss:
        decompose_semisimple_bicommutative(fixture_by_name("tpoly3_f2").algebra)
    assert not_ss.value.precondition == "semisimple"
    with pytest.raises(PreconditionError) as not_bi:
        decompose_semisimple_bicommutative(fixture_by_name("a_nov_f2").algebra)
    assert not_bi.value.precondition == "bicommutative"


def test_split_zero_socle_by_radical():
    # Zero socle splits into the part killing the radical and the part it kills.
    A = fixture_by_name("a_nov_f2").algebra
    rad = span(GF(2), 2, [(1, 0)])
    zero_ideals = [span(GF(2), 2, [(1, 0)])]
    z_left, z_right, violation = split_zero_socle_by_radical(A, zero_ideals, rad)
    assert violation is None
    assert subspace_sum(z_left, z_right) == span(GF(2), 2, [(1, 0)])
    assert subspace_product(A, z_left, rad).is_zero()
    assert subspace_product(A, rad, z_right).is_zero()


def test_split_zero_socle_violation_branch():
    A = fixture_by_name("a_ex_f2").algebra
    line_x = span(GF(2), 2, [(1, 0)])
    z_left, z_right, violation = split_zero_socle_by_radical(A, [line_x], A.full_space())
    assert z_left is None and z_right is None
    assert violation["problem"] == "zero ideal annihilated on neither side"


def test_assosymmetric_report_on_commutative_associative():
    tp3 = fixture_by_name("tpoly3_f5").algebra
    report = assosymmetric_report(tp3)
    assert report.applicable
    assert not report.semisimple
    assert report.semisimple_associative is None
    assert report.quotient_by_nilradical_associative


def test_assosymmetric_report_char_gate_and_refusal():
    tp3_f2 = fixture_by_name("tpoly3_f2").algebra
    gated = assosymmetric_report(tp3_f2)
    assert not gated.applicable
    assert gated.reason == "characteristic 2 or 3"
    with pytest.raises(PreconditionError):
        assosymmetric_report(fixture_by_name("a_ex_f5").algebra)


def test_novikov_radical_report():
    A = fixture_by_name("a_nov_f2").algebra
    report = novikov_radical_report(A)
    assert report.radical == span(GF(2), 2, [(1, 0)])
    assert report.product_with_radical.is_zero()
    assert report.product_is_ideal
    assert report.product_nilpotent
    assert report.arr_in_phi
    assert report.phi_in_square
    assert report.phi.is_zero()
    with pytest.raises(PreconditionError):
        novikov_radical_report(fixture_by_name("a_ex_f2").algebra)


def test_novikov_report_with_nonzero_ar():
    # b*b = b and a*b = a: the radical line span{a} absorbs A*R = span{a}.
    A = make(GF(2), 2, {(1, 1): {1: 1}, (0, 1): {0: 1}})
    report = novikov_radical_report(A)
    assert report.radical == span(GF(2), 2, [(1, 0)])
    assert report.product_with_radical.is_zero()


def test_split_complement_is_always_a_complement():
    for name in ["a_ex_f2", "a_ex_f3", "a_ex_f5", "a_nov_f2", "shift_f3", "ff_f2", "n1_f2"]:
        A = fixture_by_name(name).algebra
        try:
            result = phi_free_split(A)
        except PreconditionError:
            continue
        assert subspace_intersect(result.zero_socle, result.complement).is_zero()
        assert subspace_sum(result.zero_socle, result.complement) == A.full_space()
        assert is_subalgebra(A, result.complement)
