import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oqmat.errors import LocalizedAmbient, NotHomogeneousError
from oqmat.gradedideal import GradedIdeal, homogeneous_component_basis, ideal_membership
from oqmat.linalg import RowSpace, left_kernel, primitive
from oqmat.pbwcore import localize, quotient_by_generators
from oqmat.qcoeff import ONE, Q, QHAT, LaurentInt
from oqmat.qmatrix import X, minor, oqm_presentation

A2 = oqm_presentation(2)
A3 = oqm_presentation(3)


def test_component_basis_examples():
    fmt = lambda ms: sorted(A2.format_monomial(m) for m in ms)  # noqa: E731
    assert fmt(homogeneous_component_basis(A2, (1, 1, 1, 1))) == ["X[1,1]*X[2,2]", "X[1,2]*X[2,1]"]
    assert fmt(homogeneous_component_basis(A2, (1, 0, 0, 1))) == ["X[1,2]"]
    assert homogeneous_component_basis(A2, (0, 0, 0, 0)) == [A2.identity]
    assert homogeneous_component_basis(A2, (-1, 1, 0, 0)) == []


def test_membership_examples():
    det = minor(2, (1, 2), (1, 2))
    L = GradedIdeal(A2, [X(2, 2, 1), X(2, 2, 2)])
    assert ideal_membership(L, det)
    assert not ideal_membership(GradedIdeal(A2, [X(2, 1, 2)]), X(2, 1, 1))
    # a minor congruence instance at n = 2
    L = GradedIdeal(A2, [X(2, 1, 1), X(2, 1, 2), X(2, 2, 1)])
    x22, x11 = X(2, 2, 2), X(2, 1, 1)
    f = x22 * x11 - (x11 * x22).scale(Q * Q)
    assert f == (x11 * x22).scale(ONE - Q * Q) - (X(2, 1, 2) * X(2, 2, 1)).scale(QHAT)
    assert ideal_membership(L, f)


def test_zero_and_negative_degrees():
    L = GradedIdeal(A2, [X(2, 1, 2)])
    assert ideal_membership(L, A2.zero())
    assert not ideal_membership(L, A2.one())


def test_errors():
    L = GradedIdeal(A2, [X(2, 1, 2)])
    with pytest.raises(NotHomogeneousError):
        ideal_membership(L, X(2, 1, 1) + X(2, 1, 2))
    with pytest.raises(NotHomogeneousError):
        GradedIdeal(A2, [X(2, 1, 1) + A2.one()])
    R = localize(quotient_by_generators(A2, ["X[1,2]", "X[2,2]"]).renamed("Y"), ["Y[1,1]"])
    with pytest.raises(LocalizedAmbient):
        GradedIdeal(R, [R.gen("Y[2,1]")])


def test_certificate_replays():
    L = GradedIdeal(A3, [X(3, 1, 2), X(3, 2, 1)])
    f = (X(3, 2, 2) * X(3, 1, 1) - X(3, 1, 1) * X(3, 2, 2)) * X(3, 3, 3)
    ok, cert = ideal_membership(L, f, certificate=True)
    assert ok
    assert cert.replay(L) == f.scale(cert.denominator)
    data = cert.to_json(L)
    assert set(data) == {"denominator", "terms"}
    ok, cert = ideal_membership(L, X(3, 1, 1) * X(3, 2, 2), certificate=True)
    assert not ok and cert is None


def test_two_sided_not_one_sided():
    # X11*X12 lies in the two-sided ideal of X12 only through a right factor
    L = GradedIdeal(A2, [X(2, 1, 2)])
    assert ideal_membership(L, X(2, 2, 1) * X(2, 1, 2) * X(2, 1, 1))


def test_rowspace_basics():
    sp = RowSpace()
    assert sp.insert({"a": ONE, "b": Q}) is None
    assert sp.insert({"a": Q, "b": Q * Q}) == {}
    assert sp.rank == 1
    assert sp.contains({"a": LaurentInt.monomial(3, -2), "b": LaurentInt.monomial(3, -1)})
    assert not sp.contains({"a": ONE})


def test_rowspace_certificates():
    sp = RowSpace(track=True)
    sp.insert({"a": ONE, "b": Q}, tag="r1")
    sp.insert({"b": QHAT, "c": ONE}, tag="r2")
    v = {"a": QHAT, "b": QHAT * Q + QHAT, "c": ONE}
    lead, combo = sp.certificate(v)
    rows = {"r1": {"a": ONE, "b": Q}, "r2": {"b": QHAT, "c": ONE}}
    for col in "abc":
        total = sum((coef * rows[t].get(col, LaurentInt()) for t, coef in combo.items()), LaurentInt())
        assert total == lead * v[col]


def test_left_kernel_and_primitive():
    rows = [{"x": ONE}, {"x": Q}, {"y": ONE}, {"x": QHAT, "y": Q}]
    ker = left_kernel(rows)
    assert len(ker) == 2
    for vec in ker:
        for col in ("x", "y"):
            assert sum((c * rows[i].get(col, LaurentInt()) for i, c in vec.items()), LaurentInt()) == LaurentInt()
    w, g = primitive({"a": Q * QHAT, "b": QHAT})
    assert g * w["b"] == QHAT


@given(st.sampled_from([(1, 1), (1, 2), (2, 1), (2, 2)]), st.sampled_from([(1, 1), (1, 2), (2, 1), (2, 2)]))
@settings(max_examples=16, deadline=None)
def test_products_with_a_generator_are_members(a, b):
    gen = X(2, *a)
    L = GradedIdeal(A2, [gen])
    other = X(2, *b)
    assert ideal_membership(L, other * gen * other)
    assert ideal_membership(L, gen * other - other * gen)
