""" Lattices of the worked examples, shipped as .lat files in lattice_analysis/figures """
from importlib import resources

from lattice_analysis.Lattice import Lattice
from lattice_analysis.LatticeReader import parse_lattice

FIGURES = ("fig1", "fig2", "fig4", "fig5", "fig6-pattern", "fig7-pattern", "mn")


def figure_text(name: str) -> str:
    if name not in FIGURES:
        raise KeyError(f"Unknown figure {name}, expected one of {', '.join(FIGURES)}")
    return resources.files("lattice_analysis").joinpath("figures", f"{name}.lat").read_text(encoding="UTF-8")


def load_figure(name: str) -> Lattice:
    return parse_lattice(figure_text(name), default_name=name)
