import gzip

import pytest

from lattice_analysis.Figures import FIGURES, figure_text, load_figure
from lattice_analysis.Isomorphism import is_isomorphic
from lattice_analysis.Lattice import from_covers
from lattice_analysis.LatticeException import NoBounds, NotALattice, ParseError
from lattice_analysis.LatticeReader import LatticeReader, parse_lattice, read_lattice


@pytest.mark.parametrize("name, size, covers", [
    ("fig1", 10, 15),
    ("fig2", 16, 35),
    ("fig5", 11, 19),
    ("mn", 6, 8),
])
def test_read_figures(name, size, covers, figure_path):
    L = read_lattice(figure_path(name))
    assert len(L) == size
    assert len(L.get_edges()) == covers
    assert L == load_figure(name)


def test_name_from_directive_or_file(figure_path, tmp_path):
    assert read_lattice(figure_path("mn")).get_name() == "M4"
    path = tmp_path / "diamond.lat"
    path.write_text("elem 0 a b 1\ncover 0 a\ncover 0 b\ncover a 1\ncover b 1\n")
    assert read_lattice(str(path)).get_name() == "diamond"
    assert parse_lattice(path.read_text()).get_name() == "L"
    assert parse_lattice(path.read_text(), default_name="D").get_name() == "D"


def test_gzip(figure_path, tmp_path):
    path = tmp_path / "fig5.lat.gz"
    with gzip.open(path, "wt", encoding="UTF-8") as file:
        file.write(figure_text("fig5").replace("lattice fig5\n", ""))
    L = read_lattice(str(path))
    assert L.get_name() == "fig5"
    assert L == load_figure("fig5")


def test_undecodable_file(tmp_path):
    path = tmp_path / "bad.lat"
    path.write_bytes(b"elem 0 \xe9 1\n")
    with pytest.raises(ParseError, match="not valid UTF-8") as error:
        read_lattice(str(path))
    assert error.value.line == 0
    gzipped = tmp_path / "bad.lat.gz"
    with gzip.open(gzipped, "wb") as file:
        file.write(b"elem 0 \xe9 1\n")
    with pytest.raises(ParseError):
        read_lattice(str(gzipped))


def test_comments_and_blank_lines():
    L = parse_lattice("""
        # a three element chain
        lattice C3   # named
        elem 0 1     # elements may be split
        elem 2

        cover 0 1
        cover 1 2
    """)
    assert L.get_name() == "C3"
    assert L.get_node_names() == ["0", "1", "2"]
    assert L.lt(0, 2)


@pytest.mark.parametrize("text, line, message", [
    ("elem a\nnode b\n", 2, "Unknown directive"),
    ("lattice\nelem a\n", 1, "1 parameter"),
    ("lattice A\nlattice B\nelem a\n", 2, "given twice"),
    ("elem\n", 1, "at least 1 parameter"),
    ("elem a b\nelem b\n", 2, "Duplicate element b"),
    ("elem a b\ncover a c\n", 2, "Undeclared element c"),
    ("elem a b\ncover a\n", 2, "2 parameters"),
    ("elem a b\ncover a b\ncover a b\n", 3, "Duplicate cover"),
    ("# nothing here\n", 0, "No element declared"),
])
def test_parse_errors(text, line, message):
    with pytest.raises(ParseError, match=message) as error:
        parse_lattice(text)
    assert error.value.line == line


def test_structural_errors_after_parsing():
    with pytest.raises(NoBounds):
        parse_lattice("elem a b\n")
    with pytest.raises(NotALattice):
        parse_lattice("elem 0 a b c d 1\n" + "".join(
            f"cover {x} {y}\n" for x, y in
            [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]))


def test_reader_keeps_declaration_order():
    L = LatticeReader().read_text("elem 1 0\ncover 0 1\n")
    assert L.get_node_names() == ["1", "0"]
    assert L.get_bottom() == 1 and L.get_top() == 0


@pytest.mark.parametrize("name", FIGURES)
def test_round_trip(name):
    L = load_figure(name)
    again = parse_lattice(L.to_lat())
    assert again == L
    assert again.get_name() == L.get_name()
    assert is_isomorphic(again, L)


def test_names_with_whitespace(tmp_path):
    L = from_covers(["0", "1"], [("0", "1")], name="two words # three")
    assert L.to_lat().startswith("lattice two_words_three\n")
    assert parse_lattice(L.to_lat()).get_name() == "two_words_three"
    path = tmp_path / "my lattice.lat"
    path.write_text("elem 0 1\ncover 0 1\n")
    L = read_lattice(str(path))
    assert L.get_name() == "my_lattice"
    assert parse_lattice(L.to_lat()) == L
