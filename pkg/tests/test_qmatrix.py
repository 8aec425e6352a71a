import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oqmat.errors import SizeMismatch
from oqmat.qcoeff import ONE, ZERO
from oqmat.qmatrix import (
    X,
    comult_tensor,
    comultiply,
    counit,
    index_sets,
    indexset_leq,
    inversion_count,
    minor,
    minor_keys,
    oqm_presentation,
    quantum_minor_perm,
    transpose_tau,
)

from conftest import oqm_elements


@pytest.mark.parametrize("n, gens, rules", [(1, 1, 0), (2, 4, 6), (3, 9, 36)])
def test_presentation_sizes(n, gens, rules):
    A = oqm_presentation(n)
    assert A.ngens == gens
    assert len(A.rules) == rules


def test_small_minors():
    assert minor(2, (1,), (2,)) == X(2, 1, 2)
    assert minor(2, (), ()) == oqm_presentation(2).one()
    assert str(minor(2, (1, 2), (1, 2))) == "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]"
    assert quantum_minor_perm(2, (1, 2), (1, 2)) == minor(2, (1, 2), (1, 2))
    assert quantum_minor_perm(3, (1,), (1,)) == X(3, 1, 1)


def test_minor_key_validation():
    with pytest.raises(SizeMismatch):
        minor(3, (1, 2), (1,))
    with pytest.raises(ValueError):
        minor(2, (1, 3), (1, 2))
    with pytest.raises(ValueError):
        quantum_minor_perm(7, tuple(range(1, 8)), tuple(range(1, 8)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_laplace_matches_permutation_sum(n):
    for I, J in minor_keys(n):
        assert minor(n, I, J) == quantum_minor_perm(n, I, J)


def test_minor_key_counts():
    # sum_k C(4,k)^2 = C(8,4)
    assert len(minor_keys(4)) == 70
    assert len(minor_keys(3)) == 20


def test_comultiplication_examples():
    T = comult_tensor(2)
    assert comultiply(2, X(2, 1, 1)) == T.pure(X(2, 1, 1), X(2, 1, 1)) + T.pure(X(2, 1, 2), X(2, 2, 1))
    assert comultiply(2, oqm_presentation(2).one()) == T.one()
    det = minor(2, (1, 2), (1, 2))
    assert comultiply(2, det) == T.pure(det, det)


def test_counit_examples():
    assert counit(2, X(2, 1, 2)) == ZERO
    assert counit(2, X(2, 1, 1)) == ONE
    assert counit(2, minor(2, (1, 2), (1, 2))) == ONE
    assert counit(3, minor(3, (1, 2), (1, 3))) == ZERO


def test_transpose_examples():
    assert transpose_tau(2, X(2, 1, 2)) == X(2, 2, 1)
    det = minor(2, (1, 2), (1, 2))
    assert transpose_tau(2, det) == det
    for I, J in minor_keys(3):
        assert transpose_tau(3, minor(3, I, J)) == minor(3, J, I)


def test_index_set_order():
    assert indexset_leq((1, 3), (2, 3))
    assert not indexset_leq((1, 4), (2, 3))
    assert indexset_leq((2, 4), (2, 4))
    with pytest.raises(SizeMismatch):
        indexset_leq((1,), (1, 2))


def test_inversion_count():
    assert inversion_count((2,), (1,)) == 1
    assert inversion_count((1,), (2,)) == 0
    assert inversion_count((2, 3), (1, 2)) == 3


def test_index_sets():
    assert index_sets(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert len(index_sets(4)) == 16


@given(oqm_elements(2), oqm_elements(2))
@settings(max_examples=40, deadline=None)
def test_comultiplication_is_multiplicative(a, b):
    assert comultiply(2, a * b) == comultiply(2, a) * comultiply(2, b)


@given(oqm_elements(3, max_terms=2))
@settings(max_examples=40, deadline=None)
def test_tau_is_an_involution(x):
    assert transpose_tau(3, transpose_tau(3, x)) == x


@given(oqm_elements(2), oqm_elements(2))
@settings(max_examples=40, deadline=None)
def test_counit_is_multiplicative(a, b):
    assert counit(2, a * b) == counit(2, a) * counit(2, b)


@given(st.sampled_from(minor_keys(3)))
@settings(max_examples=20, deadline=None)
def test_counit_identity_on_minors(key):
    # (eps (x) id) Delta = id, checked through the left counit on minors
    I, J = key
    T = comult_tensor(3)
    d = comultiply(3, minor(3, I, J))
    A = oqm_presentation(3)
    acc = A.zero()
    for m, c in d.terms().items():
        left = T.left.element({m[: A.ngens]: 1})
        right = A.element({m[A.ngens:]: 1})
        acc = acc + right.scale(c * counit(3, left))
    assert acc == minor(3, I, J)
