from importlib import resources

import pytest

from lattice_analysis.Constructors import make_boolean, make_chain, make_mn
from lattice_analysis.Figures import load_figure
from lattice_analysis.Interval import Interval
from lattice_analysis.Lattice import Lattice, from_covers


def ids(L: Lattice, *names: str) -> list[int]:
    return [L.get_element_id(name) for name in names]


def interval_of(L: Lattice, a: str, b: str) -> Interval:
    return Interval(L, L.get_element_id(a), L.get_element_id(b))


def names_of(elements) -> set[str]:
    return set(elements.names())


@pytest.fixture
def figure_path():
    def path(name: str) -> str:
        return str(resources.files("lattice_analysis").joinpath("figures", f"{name}.lat"))
    return path


@pytest.fixture
def fig1() -> Lattice:
    return load_figure("fig1")


@pytest.fixture
def fig2() -> Lattice:
    return load_figure("fig2")


@pytest.fixture
def fig4() -> Lattice:
    return load_figure("fig4")


@pytest.fixture
def fig5() -> Lattice:
    return load_figure("fig5")


@pytest.fixture
def fig6() -> Lattice:
    return load_figure("fig6-pattern")


@pytest.fixture
def fig7() -> Lattice:
    return load_figure("fig7-pattern")


@pytest.fixture
def n5() -> Lattice:
    return from_covers(["0", "a", "b", "c", "d"], [("0", "a"), ("0", "b"), ("a", "c"), ("c", "d"), ("b", "d")], name="N5")


@pytest.fixture
def m3() -> Lattice:
    return make_mn(3)


@pytest.fixture
def b2() -> Lattice:
    return make_boolean(2)


@pytest.fixture
def chain3() -> Lattice:
    return make_chain(3)
