import pytest

from lattice_analysis.cli import EXIT_BAD_QUERY, EXIT_INVALID, EXIT_OK, main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate(capsys, figure_path):
    assert run(capsys, "validate", figure_path("fig1")) == (EXIT_OK, "ok: fig1, 10 elements, 15 covers\n", "")


def test_info(capsys, figure_path):
    code, out, _ = run(capsys, "info", figure_path("fig5"))
    assert code == EXIT_OK
    assert "modular false\n" in out
    assert "complemented true\nrelatively-complemented false\n" in out
    assert out.startswith("lattice fig5\nelements 11\nbottom 0\ntop 1\n")


def test_comp_and_relcomp(capsys, figure_path):
    assert run(capsys, "comp", figure_path("fig1"), "0") == (EXIT_OK, "{1}\n", "")
    assert run(capsys, "relcomp", figure_path("fig5"), "e", "1", "h") == (EXIT_OK, "{f, g, i}\n", "")
    assert run(capsys, "bar", figure_path("fig5"), "e", "1", "h")[1] == "{f, g}\n"
    assert run(capsys, "hat", figure_path("fig5"), "e", "1", "h")[1] == "{f, g}\n"


def test_closure(capsys, figure_path):
    assert run(capsys, "closure", figure_path("fig2"), "0", "h", "a")[1] == "{a}\n"


def test_closed_sets(capsys, figure_path):
    code, out, _ = run(capsys, "closed-sets", figure_path("mn"), "0", "1")
    assert code == EXIT_OK
    assert out.endswith("closed sets\n")


def test_induced(capsys, figure_path):
    code, out, _ = run(capsys, "induced", figure_path("fig1"), "b", "1", "a", "g")
    assert code == EXIT_OK
    assert out


@pytest.mark.parametrize("argv", [
    ("comp", "fig1", "z"),
    ("relcomp", "fig1", "a", "b", "c"),
    ("relcomp", "fig1", "0", "d", "h"),
])
def test_bad_query(argv, capsys, figure_path):
    command, figure, *rest = argv
    code, out, err = run(capsys, command, figure_path(figure), *rest)
    assert code == EXIT_BAD_QUERY
    assert out == "" and err.startswith("error: ")


def test_bad_statement(capsys, figure_path):
    assert run(capsys, "check", figure_path("fig1"), "--statement", "prop9")[0] == EXIT_BAD_QUERY


def test_invalid_input(capsys, tmp_path):
    path = tmp_path / "broken.lat"
    path.write_text("elem a b\ncover a c\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == EXIT_INVALID
    assert "line 2" in err
    assert run(capsys, "validate", str(tmp_path / "missing.lat"))[0] == EXIT_INVALID


def test_undecodable_input(capsys, tmp_path):
    path = tmp_path / "latin1.lat"
    path.write_bytes(b"elem 0 \xff 1\ncover 0 \xff\ncover \xff 1\n")
    code, out, err = run(capsys, "validate", str(path))
    assert code == EXIT_INVALID
    assert out == ""
    assert "not valid UTF-8" in err


def test_validate_counts_true_covers(capsys, tmp_path):
    path = tmp_path / "chain.lat"
    path.write_text("elem 0 a 1\ncover 0 a\ncover a 1\ncover 0 1\n")
    assert run(capsys, "validate", str(path))[1] == "ok: chain, 3 elements, 2 covers\n"
    assert run(capsys, "dot", str(path))[1].count("->") == 2


def test_dot(capsys, figure_path):
    code, out, _ = run(capsys, "dot", figure_path("fig1"))
    assert code == EXIT_OK
    assert out.count("->") == 15


def test_check(capsys, figure_path):
    code, out, _ = run(capsys, "check", figure_path("fig2"), "--all")
    assert code == EXIT_OK
    assert "violated" not in out
    assert run(capsys, "check", figure_path("fig5"), "--statement", "prop1.*")[0] == EXIT_OK


def test_th1(capsys):
    assert run(capsys, "th1", "--boolean", "1", "--mn", "3")[0] == EXIT_OK
    assert run(capsys, "th1", "--mn", "2")[0] == EXIT_BAD_QUERY


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max", "4")
    assert code == EXIT_OK
    assert "size 4: 2 lattices\n" in out


def test_paper_regress(capsys):
    code, first, _ = run(capsys, "paper-regress")
    assert code == EXIT_OK
    assert all(line.startswith("PASS  ") for line in first.splitlines())
    assert "(expected false)" in first
    assert run(capsys, "paper-regress")[1] == first
