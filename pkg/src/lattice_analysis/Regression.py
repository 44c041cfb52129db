""" Assertions about the shipped example lattices, evaluated by the paper-regress command """
from collections.abc import Callable
from dataclasses import dataclass

from lattice_analysis.Closure import closure_bits
from lattice_analysis.Complement import bar, check_induced, complements, hat, rel_complements
from lattice_analysis.Constructors import direct_product, make_boolean, make_chain, make_mn
from lattice_analysis.Figures import load_figure
from lattice_analysis.Interval import Interval, all_intervals
from lattice_analysis.Isomorphism import is_isomorphic
from lattice_analysis.Lattice import Lattice
from lattice_analysis.Pattern import find_pattern, remark_patterns
from lattice_analysis.Structure import find_n5, is_complemented, is_modular, is_rel_complemented
from lattice_analysis.Verify import verify_distinct_induced, verify_remark_patterns, verify_th1


@dataclass(frozen=True)
class Assertion:
    figure: str
    claim: str
    check: Callable[[], bool]
    expected: bool = True

    def evaluate(self) -> tuple[bool, bool]:
        """(observed value, observed == expected)"""
        observed = bool(self.check())
        return observed, observed == self.expected


def _interval(L: Lattice, a: str, b: str) -> Interval:
    return Interval(L, L.get_element_id(a), L.get_element_id(b))


def _names(elements) -> set[str]:
    return set(elements.names())


def _induced(L: Lattice, a: str, b: str, z: str, u: str):
    return check_induced(_interval(L, a, b), L.get_element_id(z), L.get_element_id(u))


def _every_member_closed(L: Lattice) -> bool:
    return all(closure_bits(I, c) == 1 << c for I in all_intervals(L) for c in I)


def _bar_hat_relcomp_everywhere(L: Lattice) -> bool:
    return all(bar(I, c) == hat(I, c) == rel_complements(I, c) for I in all_intervals(L) for c in I)


def assertions() -> list[Assertion]:
    fig1 = load_figure("fig1")
    fig2 = load_figure("fig2")
    fig4 = load_figure("fig4")
    fig5 = load_figure("fig5")
    fig6, fig7 = remark_patterns()
    e1 = fig1.get_element_id
    e2 = fig2.get_element_id
    e5 = fig5.get_element_id

    return [
        Assertion("fig1", "complemented, not modular", lambda: is_complemented(fig1) and not is_modular(fig1)),
        Assertion("fig1", "not relatively complemented", lambda: not is_rel_complemented(fig1)),
        Assertion("fig1", "g+ = {a, c}", lambda: _names(complements(fig1, e1("g"))) == {"a", "c"}),
        Assertion("fig1", "a and c both induce d in g^{b1}",
                  lambda: all(r.cond1_holds and r.cond2_holds and r.v == e1("d") and r.v_in_relcomp
                              for r in (_induced(fig1, "b", "1", "g", "a"), _induced(fig1, "b", "1", "g", "c")))),
        Assertion("fig1", "f+ = {b}", lambda: _names(complements(fig1, e1("f"))) == {"b"}),
        Assertion("fig1", "u = b on [e, h]: cond1 holds, cond2 fails, e not in f^{eh}",
                  lambda: (lambda r: r.cond1_holds and not r.cond2_holds and r.v == e1("e") and not r.v_in_relcomp)(
                      _induced(fig1, "e", "h", "f", "b"))),
        Assertion("fig1", "g in f^{e1}", lambda: e1("g") in rel_complements(_interval(fig1, "e", "1"), e1("f"))),
        Assertion("fig1", "b+ = {f, h}", lambda: _names(complements(fig1, e1("b"))) == {"f", "h"}),
        Assertion("fig1", "a, c in b^{0d}",
                  lambda: {"a", "c"} <= _names(rel_complements(_interval(fig1, "0", "d"), e1("b")))),
        Assertion("fig1", "u = b on [a, h]: cond1 fails", lambda: not _induced(fig1, "a", "h", "f", "b").cond1_holds),
        Assertion("fig1", "f^{ah} = {c}", lambda: _names(rel_complements(_interval(fig1, "a", "h"), e1("f"))) == {"c"}),
        Assertion("fig1", "no sublattice shaped like either remark pattern",
                  lambda: not find_pattern(fig1, fig6) and not find_pattern(fig1, fig7)),
        Assertion("fig1", "distinct complements of z always induce distinct elements",
                  lambda: verify_distinct_induced(fig1).holds, expected=False),

        Assertion("fig2", "modular and complemented", lambda: is_modular(fig2) and is_complemented(fig2)),
        Assertion("fig2", "bar = hat = a^{0h} = {b, c}",
                  lambda: (lambda I: _names(bar(I, e2("a"))) == _names(hat(I, e2("a")))
                           == _names(rel_complements(I, e2("a"))) == {"b", "c"})(_interval(fig2, "0", "h"))),
        Assertion("fig2", "(a^{0h})^{0h} = {a}", lambda: closure_bits(_interval(fig2, "0", "h"), e2("a")) == 1 << e2("a")),
        Assertion("fig2", "every z of every [x, y]: bar = hat = z^{xy}", lambda: _bar_hat_relcomp_everywhere(fig2)),
        Assertion("fig2", "every z of every [x, y] is closed", lambda: _every_member_closed(fig2)),

        Assertion("fig4", "isomorphic to 2 x M3", lambda: is_isomorphic(fig4, direct_product([make_chain(2), make_mn(3)]))),
        Assertion("fig4", "every z of every [x, y] is closed", lambda: _every_member_closed(fig4)),
        Assertion("fig4", "closure identity and bar = hat on 2 x M3", lambda: verify_th1([make_boolean(1), make_mn(3)]).holds),

        Assertion("fig5", "not modular, pentagon {0, d, e, i, 1}",
                  lambda: not is_modular(fig5)
                  and {fig5.get_node_name(x) for x in find_n5(fig5)} == {"0", "d", "e", "i", "1"}),
        Assertion("fig5", "complemented", lambda: is_complemented(fig5)),
        # [0, i] is the chain 0 < e < i, so e has no relative complement there
        Assertion("fig5", "relatively complemented", lambda: is_rel_complemented(fig5), expected=False),
        Assertion("fig5", "e^{0i} is empty", lambda: not rel_complements(_interval(fig5, "0", "i"), e5("e"))),
        Assertion("fig5", "h+ = {a, b}", lambda: _names(complements(fig5, e5("h"))) == {"a", "b"}),
        Assertion("fig5", "bar = hat = {f, g} for h in [e, 1]",
                  lambda: (lambda I: _names(bar(I, e5("h"))) == _names(hat(I, e5("h"))) == {"f", "g"})(
                      _interval(fig5, "e", "1"))),
        Assertion("fig5", "h^{e1} = {f, g, i}",
                  lambda: _names(rel_complements(_interval(fig5, "e", "1"), e5("h"))) == {"f", "g", "i"}),
        Assertion("fig5", "i+ = {a, b, c, d}", lambda: _names(complements(fig5, e5("i"))) == {"a", "b", "c", "d"}),
        Assertion("fig5", "bar = hat = {f, g, h, 1} for i in [e, 1]",
                  lambda: (lambda I: _names(bar(I, e5("i"))) == _names(hat(I, e5("i"))) == {"f", "g", "h", "1"})(
                      _interval(fig5, "e", "1"))),
        Assertion("fig5", "i^{e1} = {f, g, h}",
                  lambda: _names(rel_complements(_interval(fig5, "e", "1"), e5("i"))) == {"f", "g", "h"}),

        Assertion("fig6", "one anchored self-match, induced elements coincide",
                  lambda: len(find_pattern(fig6, fig6)) == 1 and verify_remark_patterns(fig6).holds),
        Assertion("fig7", "one anchored self-match, induced elements coincide",
                  lambda: len(find_pattern(fig7, fig7)) == 1 and verify_remark_patterns(fig7).holds),
    ]


def paper_regress() -> list[tuple[Assertion, bool, bool]]:
    """(assertion, observed, passed) for every assertion, in table order"""
    return [(assertion, *assertion.evaluate()) for assertion in assertions()]
