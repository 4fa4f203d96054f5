import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypercatalan.closedform import hyper_catalan
from hypercatalan.errors import DomainError
from hypercatalan.typevec import TypeVec

T = TypeVec.parse

dense_vectors = st.lists(st.integers(0, 6), max_size=6)


@pytest.mark.parametrize("text,faces", [("", 0), ("1,1", 2), ("2,0,1", 3)])
def test_faces(text, faces):
    assert T(text).faces == faces


def test_edges_vertices():
    assert (T("1").edges, T("1").vertices) == (3, 3)
    assert (T("0,1").edges, T("0,1").vertices) == (4, 4)
    m = T("1,1")
    assert (m.edges, m.vertices) == (6, 5)
    # E/V form of the hyper-Catalan number: (E - 1)! / ((V - 1)! prod m!)
    assert hyper_catalan(m) == 5
    assert math.factorial(m.edges - 1) // math.factorial(m.vertices - 1) == 5


@pytest.mark.parametrize("text,count", [("", 0), ("1,1", 2), ("0,0,5", 1)])
def test_distinct_shapes(text, count):
    assert T(text).distinct_shapes == count


def test_lessers():
    assert T("1,1").lessers() == [(2, T("0,1")), (3, T("1"))]
    assert T("").lessers() == []
    assert T("0,0,2").lessers() == [(4, T("0,0,1"))]


def test_basis_ops():
    assert T("1").add_basis(3) == T("1,1")
    assert T("1,1").sub_basis(2) == T("0,1")
    with pytest.raises(DomainError):
        T("1").sub_basis(4)


def test_canonical_form():
    assert T("1,0,0") == T("1") == T("[1]") == T(" [ 1 , 0 ] ")
    assert hash(T("1,0")) == hash(T("1"))
    assert str(T("0,0,1")) == "[0,0,1]"
    assert T("12,3").dense() == [12, 3]


@pytest.mark.parametrize("bad", ["1,x", "-1", "1,,2"])
def test_parse_rejects(bad):
    with pytest.raises(DomainError):
        T(bad)


def test_rejects_bad_index():
    with pytest.raises(DomainError):
        TypeVec({1: 2})


def test_display_order_within_level():
    level2 = sorted([T("0,0,2"), T("0,1,1"), T("1,1"), T("2"), T("0,2"), T("1,0,1")])
    assert [str(m) for m in level2] == ["[2]", "[1,1]", "[1,0,1]", "[0,2]", "[0,1,1]", "[0,0,2]"]


@given(dense_vectors)
def test_euler_relation(values):
    m = TypeVec.from_dense(values)
    assert m.vertices - m.edges + (m.faces + 1) == 2


@given(dense_vectors)
def test_lessers_count_and_roundtrip(values):
    m = TypeVec.from_dense(values)
    pairs = m.lessers()
    assert len(pairs) == m.distinct_shapes
    assert [j for j, _ in pairs] == sorted(j for j, _ in pairs)
    for j, k in pairs:
        assert k.add_basis(j) == m


@given(dense_vectors, st.integers(0, 4))
def test_parse_trailing_zeros(values, pad):
    text = ",".join(map(str, values + [0] * pad))
    assert T(text) == TypeVec.from_dense(values)
