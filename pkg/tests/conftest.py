"""Shared helpers for the test suite."""
from __future__ import annotations

import pytest

from nonassoc.algebra import Algebra
from nonassoc.fields import GF, QQ


def make(field, dim, prods, labels=None):
    """Shorthand for Algebra.from_products with int coefficients."""
    return Algebra.from_products(field, dim, prods, labels=labels)


@pytest.fixture
def f2():
    return GF(2)


@pytest.fixture
def f3():
    return GF(3)


@pytest.fixture
def f5():
    return GF(5)


@pytest.fixture
def qq():
    return QQ
