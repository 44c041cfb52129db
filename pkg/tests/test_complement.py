import pytest

from conftest import ids, interval_of, names_of
from lattice_analysis.Complement import (
    bar,
    check_induced,
    complements,
    complements_of_set,
    hat,
    induced_by_complements,
    rel_complements,
    rel_complements_of_set,
)
from lattice_analysis.ElementSet import ElementSet
from lattice_analysis.Enumerate import enumerate_lattices
from lattice_analysis.Interval import all_intervals
from lattice_analysis.LatticeException import OutsideInterval
from lattice_analysis.Structure import is_complemented, is_modular


def test_complements(fig1, fig5):
    assert names_of(complements(fig1, fig1.get_element_id("g"))) == {"a", "c"}
    assert names_of(complements(fig5, fig5.get_element_id("i"))) == {"a", "b", "c", "d"}
    for L in (fig1, fig5):
        assert complements(L, L.get_bottom()) == ElementSet.of(L, [L.get_top()])


def test_complements_of_set(fig1):
    assert names_of(complements_of_set(fig1, fig1.elements("a", "c"))) == {"g"}
    assert complements_of_set(fig1, ElementSet.empty(fig1)) == fig1.all_elements()
    assert not complements_of_set(fig1, fig1.elements("0", "1"))


def test_rel_complements(fig1, fig5):
    assert names_of(rel_complements(interval_of(fig1, "a", "h"), fig1.get_element_id("f"))) == {"c"}
    assert names_of(rel_complements(interval_of(fig5, "e", "1"), fig5.get_element_id("h"))) == {"f", "g", "i"}
    for I in all_intervals(fig5):
        assert rel_complements(I, I.a) == ElementSet.of(fig5, [I.b])


def test_rel_complements_of_set(fig5):
    I = interval_of(fig5, "e", "1")
    assert rel_complements_of_set(I, ElementSet.empty(fig5)) == I.members
    assert names_of(rel_complements_of_set(I, fig5.elements("f", "g", "i"))) == {"h"}
    with pytest.raises(OutsideInterval):
        rel_complements_of_set(I, fig5.elements("a"))
    with pytest.raises(OutsideInterval):
        rel_complements(I, fig5.get_element_id("0"))


@pytest.mark.parametrize("n", range(1, 7))
def test_rel_complements_match_double_loop(n):
    for L in enumerate_lattices(n):
        for I in all_intervals(L):
            for x in I:
                expected = {y for y in I if L.join(x, y) == I.b and L.meet(x, y) == I.a}
                assert set(rel_complements(I, x)) == expected


def test_bar_hat(fig5, fig2):
    I = interval_of(fig5, "e", "1")
    h, i = fig5.get_element_id("h"), fig5.get_element_id("i")
    assert names_of(bar(I, h)) == names_of(hat(I, h)) == {"f", "g"}
    assert names_of(bar(I, i)) == names_of(hat(I, i)) == {"f", "g", "h", "1"}
    assert names_of(rel_complements(I, i)) == {"f", "g", "h"}
    J = interval_of(fig2, "0", "h")
    a = fig2.get_element_id("a")
    assert bar(J, a) == hat(J, a) == rel_complements(J, a)
    assert names_of(bar(J, a)) == {"b", "c"}


def test_bar_of_element_without_complement(chain3):
    I = interval_of(chain3, "0", "2")
    assert not bar(I, chain3.get_element_id("1"))
    assert not hat(I, chain3.get_element_id("1"))


def test_induced_by_complements(fig1):
    I = interval_of(fig1, "b", "1")
    induced = induced_by_complements(I, fig1.get_element_id("g"))
    d = fig1.get_element_id("d")
    assert [(u, v, w) for u, v, w in induced] == [(u, d, d) for u in ids(fig1, "a", "c")]


def test_induced_examples(fig1):
    e, f, g, d = ids(fig1, "e", "f", "g", "d")
    b, a, c = ids(fig1, "b", "a", "c")

    report = check_induced(interval_of(fig1, "e", "h"), f, b)
    assert report.cond1_holds and not report.cond2_holds
    assert report.v == e and report.v_in_relcomp is False

    report = check_induced(interval_of(fig1, "a", "h"), f, b)
    assert not report.cond1_holds
    assert report.v is None and report.v_in_relcomp is None

    for u in (a, c):
        report = check_induced(interval_of(fig1, "b", "1"), g, u)
        assert report.cond1_holds and report.cond2_holds
        assert report.v == d and report.v_in_relcomp

    report = check_induced(interval_of(fig1, "e", "1"), f, b)
    assert report.v == g and report.v_in_relcomp
    assert "v: g (in f^{e1})" in report.describe()


def test_induced_requires_z_in_interval(fig1):
    with pytest.raises(OutsideInterval):
        check_induced(interval_of(fig1, "e", "h"), fig1.get_element_id("a"), fig1.get_element_id("b"))


@pytest.mark.parametrize("n", range(1, 7))
def test_induced_equivalence(n):
    for L in enumerate_lattices(n):
        for I in all_intervals(L):
            for z in I:
                for u in range(len(L)):
                    report = check_induced(I, z, u)
                    if report.cond1_holds:
                        assert report.v in I
                        assert report.v_in_relcomp == report.cond2_holds
                    if is_modular(L):
                        assert report.cond1_holds


@pytest.mark.parametrize("n", range(1, 7))
def test_modular_complemented_bar_equals_hat(n):
    for L in enumerate_lattices(n):
        if not (is_modular(L) and is_complemented(L)):
            continue
        for I in all_intervals(L):
            for x in I:
                relcomp = rel_complements(I, x)
                assert bar(I, x) == hat(I, x)
                assert bar(I, x) <= relcomp
                assert relcomp
