import numpy as np
import pytest

from conftest import interval_of, names_of
from lattice_analysis.Interval import Interval, all_intervals, interval
from lattice_analysis.LatticeException import NotComparable, OutsideInterval


def test_members(fig1):
    assert names_of(interval_of(fig1, "e", "h").members) == {"e", "f", "h"}
    assert interval_of(fig1, "0", "1").members == fig1.all_elements()
    single = interval_of(fig1, "c", "c")
    assert names_of(single.members) == {"c"}
    assert single.is_degenerate()
    assert str(interval_of(fig1, "e", "h")) == "[e, h]"


def test_not_comparable(fig1):
    with pytest.raises(NotComparable):
        interval(fig1, fig1.get_element_id("a"), fig1.get_element_id("b"))


@pytest.mark.parametrize("figure", ["fig1", "fig5"])
def test_members_are_closed_under_join_and_meet(figure, request):
    L = request.getfixturevalue(figure)
    for I in all_intervals(L):
        assert I.a in I and I.b in I
        for x in I:
            for y in I:
                assert L.join(x, y) in I and L.meet(x, y) in I


@pytest.mark.parametrize("figure", ["fig1", "fig2", "fig5"])
def test_relcomp_matrix_matches_definition(figure, request):
    L = request.getfixturevalue(figure)
    for I in all_intervals(L):
        members = list(I)
        expected = np.array([[L.join(x, y) == I.b and L.meet(x, y) == I.a for y in members] for x in members])
        assert (I.relcomp_matrix == expected.reshape(len(members), len(members))).all()
        for x in members:
            assert I.relcomp_bits[x] == sum(1 << y for y in members if L.join(x, y) == I.b and L.meet(x, y) == I.a)


def test_local_indices(fig5):
    I = interval_of(fig5, "e", "1")
    for i, x in enumerate(I.get_ids()):
        assert I.local_index(int(x)) == i
    assert I.to_global(I.to_local(I.members.bits)) == I.members.bits


def test_require(fig1):
    I = interval_of(fig1, "e", "h")
    with pytest.raises(OutsideInterval):
        I.require(fig1.get_element_id("a"))
    with pytest.raises(OutsideInterval):
        I.require_subset(fig1.elements("e", "g"))


def test_all_intervals_order(n5):
    pairs = [(I.a, I.b) for I in all_intervals(n5)]
    assert pairs == sorted(pairs)
    assert len(pairs) == len(n5.comparable_pairs())


def test_complemented(fig1, fig5):
    assert interval_of(fig5, "e", "1").is_complemented()
    assert not interval_of(fig1, "e", "h").is_complemented()
    assert Interval(fig1, fig1.get_bottom(), fig1.get_top()).is_complemented()
