import pytest

from conftest import interval_of
from lattice_analysis.CheckReport import CheckReport, CheckStatus
from lattice_analysis.Closure import closure_bits
from lattice_analysis.Constructors import direct_product, make_boolean, make_chain, make_mn
from lattice_analysis.Interval import all_intervals
from lattice_analysis.LatticeException import BadFactors, InjectivityFailed, NotComplemented, UnknownStatement
from lattice_analysis.Verify import (
    STATEMENTS,
    SUBSET_SAMPLE_SIZE,
    LocalGalois,
    find_biclosure_fixed_point,
    le1_conditions,
    resolve_statements,
    run_statements,
    verify_antichain_iff_n5,
    verify_closure_triple,
    verify_convexity,
    verify_distinct_induced,
    verify_galois_law,
    verify_le1_theorem,
    verify_modular_antichain,
    verify_prop3_modular,
    verify_remark_patterns,
    verify_th1,
    verify_th2,
)


def test_violated_report_needs_counterexample():
    with pytest.raises(ValueError):
        CheckReport("prop3", CheckStatus.VIOLATED)
    assert CheckReport("prop3", CheckStatus.HYPOTHESIS_FAILED).holds


def test_antichain_iff_n5(fig1, m3):
    report = verify_antichain_iff_n5(interval_of(fig1, "0", "1"))
    assert report.status is CheckStatus.VERIFIED
    assert verify_antichain_iff_n5(interval_of(m3, "0", "1")).holds


def test_antichain_iff_n5_needs_complemented_interval(fig1):
    assert verify_antichain_iff_n5(interval_of(fig1, "e", "h")).status is CheckStatus.HYPOTHESIS_FAILED


def test_closure_triple_and_convexity(fig5):
    I = interval_of(fig5, "e", "1")
    assert verify_closure_triple(I).status is CheckStatus.VERIFIED
    assert verify_convexity(I).status is CheckStatus.VERIFIED
    assert verify_closure_triple(interval_of(fig5, "a", "a")).holds


@pytest.mark.parametrize("law", ["extensive", "antitone", "triple", "adjunction", "nonempty"])
def test_galois_laws(law, fig2, fig5):
    assert verify_galois_law(interval_of(fig5, "e", "1"), law).status is CheckStatus.VERIFIED
    # 16 members: sampled subsets
    assert verify_galois_law(interval_of(fig2, "0", "1"), law).status is CheckStatus.VERIFIED


def test_galois_unknown_law(fig5):
    with pytest.raises(UnknownStatement):
        verify_galois_law(interval_of(fig5, "e", "1"), "monotone")


def test_sampling_on_wide_interval():
    L = make_boolean(6)
    I = interval_of(L, "000000", "111111")
    galois = LocalGalois(I)
    subsets = galois.subsets()
    assert galois.size == 64
    assert subsets == sorted(set(subsets))
    assert subsets[0] == 0 and subsets[-1] == galois.full == (1 << 64) - 1
    assert all(S >> 63 & 1 for S in subsets[-2:])
    pairs = galois.pairs()
    assert len(pairs) == 2 * SUBSET_SAMPLE_SIZE
    # second half: S is drawn inside T
    assert all(S & ~T == 0 for S, T in pairs[SUBSET_SAMPLE_SIZE:])
    for law in ("extensive", "antitone", "nonempty"):
        assert verify_galois_law(I, law).status is CheckStatus.VERIFIED
    assert verify_modular_antichain(I).status is CheckStatus.VERIFIED


def test_modular_antichain(fig5, fig1):
    assert verify_modular_antichain(interval_of(fig5, "e", "1")).status is CheckStatus.VERIFIED
    report = verify_modular_antichain(interval_of(fig1, "0", "d"))
    assert report.status is CheckStatus.HYPOTHESIS_FAILED
    assert "not modular" in report.note


def test_fixed_point(fig2):
    for I in all_intervals(fig2):
        for c in I:
            assert find_biclosure_fixed_point(I, c) == c


def test_fixed_point_on_product():
    # the returned member is always closed, whether or not c itself is
    L = direct_product([make_chain(2), make_mn(3)])
    for I in all_intervals(L):
        for c in I:
            d = find_biclosure_fixed_point(I, c)
            assert closure_bits(I, d) == 1 << d


def test_fixed_point_errors(n5, chain3):
    with pytest.raises(InjectivityFailed):
        find_biclosure_fixed_point(interval_of(n5, "0", "d"), n5.get_element_id("a"))
    with pytest.raises(NotComplemented):
        find_biclosure_fixed_point(interval_of(chain3, "0", "2"), chain3.get_element_id("0"))


def test_le1_theorem(m3, fig1, fig5):
    I = interval_of(m3, "0", "1")
    holds, failing = le1_conditions(I)
    assert set(holds) == {"i", "ii", "iii", "iv", "v", "vi"}
    assert set(failing) == {name for name, value in holds.items() if not value}
    assert verify_le1_theorem(I).status is CheckStatus.VERIFIED
    for L in (fig1, fig5):
        for J in all_intervals(L):
            assert verify_le1_theorem(J).holds


def test_th2(fig2, fig5, fig1):
    for I in all_intervals(fig2):
        assert verify_th2(I).status is CheckStatus.VERIFIED
    assert verify_th2(interval_of(fig5, "e", "1")).status is CheckStatus.VERIFIED
    assert verify_th2(interval_of(fig1, "0", "d")).status is CheckStatus.HYPOTHESIS_FAILED


def test_prop3_modular(fig2, fig5):
    assert verify_prop3_modular(fig2).status is CheckStatus.VERIFIED
    assert verify_prop3_modular(fig5).status is CheckStatus.HYPOTHESIS_FAILED


def test_th1_small():
    assert verify_th1([make_boolean(1), make_mn(3)]).status is CheckStatus.VERIFIED
    assert verify_th1([make_boolean(2)]).holds
    assert verify_th1([make_chain(2), make_mn(4)]).holds


def test_th1_rejects_other_factors(fig1):
    with pytest.raises(BadFactors):
        verify_th1([make_mn(3)])
    with pytest.raises(BadFactors):
        verify_th1([make_boolean(1), fig1])
    with pytest.raises(BadFactors):
        verify_th1([make_boolean(1), make_boolean(2)])
    with pytest.raises(BadFactors):
        verify_th1([make_chain(3), make_mn(3)])


@pytest.mark.slow
def test_th1_at_scale():
    report = verify_th1([make_boolean(2), make_mn(3), make_mn(4)])
    assert report.status is CheckStatus.VERIFIED
    assert report.subject == "B2×M3×M4"


def test_remark_patterns(fig6, fig7, fig1, m3):
    report = verify_remark_patterns(fig6)
    assert report.status is CheckStatus.VERIFIED and report.checked_instances >= 1
    assert verify_remark_patterns(fig7).status is CheckStatus.VERIFIED
    assert verify_remark_patterns(fig1).status is CheckStatus.VACUOUS
    assert verify_remark_patterns(m3).status is CheckStatus.VACUOUS


def test_distinct_induced_is_false_on_fig1(fig1):
    report = verify_distinct_induced(fig1)
    assert not report.holds
    assert report.checked_instances >= 1
    assert f"checked={report.checked_instances}" in report.describe()
    witness = report.counterexample
    x, y = witness["interval"].strip("[]").split(", ")
    z, u, w = (fig1.get_element_id(witness[key]) for key in ("z", "u", "w"))
    x, y = fig1.get_element_id(x), fig1.get_element_id(y)
    assert fig1.lt(x, z) and fig1.lt(z, y) and u != w
    assert fig1.complement_table[z, u] and fig1.complement_table[z, w]
    if witness["form"] == "(u v x) ^ y":
        assert fig1.meet(fig1.join(u, x), y) == fig1.meet(fig1.join(w, x), y)
    else:
        assert fig1.join(fig1.meet(u, y), x) == fig1.join(fig1.meet(w, y), x)


def test_resolve_statements():
    assert resolve_statements(["galois.*"]) == [
        "galois.extensive", "galois.antitone", "galois.triple", "galois.adjunction", "galois.nonempty"]
    assert resolve_statements(None) == list(STATEMENTS)
    assert resolve_statements(["all"]) == list(STATEMENTS)
    assert resolve_statements(["th2", "prop1.*"]) == ["prop1.i", "prop1.ii", "prop1.iii", "prop1.iv", "th2"]
    with pytest.raises(UnknownStatement):
        resolve_statements(["prop9"])


@pytest.mark.parametrize("figure", ["fig1", "fig2", "fig4", "fig5", "fig6", "m3", "n5"])
def test_every_statement_holds_on_figures(figure, request):
    L = request.getfixturevalue(figure)
    reports = run_statements(L, list(STATEMENTS))
    assert [report.statement for report in reports] == list(STATEMENTS)
    failures = [report.describe() for report in reports if not report.holds]
    assert failures == []


def test_distinct_induced_on_m3(m3):
    # one pair of complements per atom
    report = verify_distinct_induced(m3)
    assert report.status is CheckStatus.VERIFIED
    assert report.checked_instances == 3
