""" Complements x⁺, relative complements x^{ab}, the induced families x̄_{ab} and x̂_{ab}, and induced-element reports """
import logging
from dataclasses import dataclass

import numpy as np

from lattice_analysis.ElementSet import ElementSet
from lattice_analysis.Interval import Interval
from lattice_analysis.Lattice import Lattice
from lattice_analysis.LatticeException import ConsistencyError

logger = logging.getLogger(__name__)


def complements(L: Lattice, x: int) -> ElementSet:
    """x⁺ = {y | x ∨ y = 1 and x ∧ y = 0}"""
    return ElementSet.from_mask(L, L.complement_table[x])


def complements_of_set(L: Lattice, A: ElementSet) -> ElementSet:
    """A⁺, the common complements of every member of A; ∅⁺ = L"""
    L.all_elements()._check(A)
    if not A:
        return L.all_elements()
    return ElementSet.from_mask(L, L.complement_table[A.ids()].all(axis=0))


def rel_complements(I: Interval, x: int) -> ElementSet:
    """x^{ab} = {y in [a, b] | x ∨ y = b and x ∧ y = a}"""
    I.require(x)
    return ElementSet(I.lattice, I.relcomp_bits[x])


def rel_complements_of_set(I: Interval, A: ElementSet) -> ElementSet:
    """A^{ab}, the members of [a, b] complementing every member of A; ∅^{ab} = [a, b]"""
    I.require_subset(A)
    return ElementSet(I.lattice, I.prime_bits(A.bits))


def bar(I: Interval, x: int) -> ElementSet:
    """x̄_{ab} = (x⁺ ∨ a) ∧ b, defined for every x of the lattice"""
    L = I.lattice
    others = complements(L, x).ids()
    if not others:
        return ElementSet.empty(L)
    values = L.get_meet_table()[L.get_join_table()[others, I.a], I.b]
    return ElementSet.of(L, np.unique(values))


def hat(I: Interval, x: int) -> ElementSet:
    """x̂_{ab} = (x⁺ ∧ b) ∨ a"""
    L = I.lattice
    others = complements(L, x).ids()
    if not others:
        return ElementSet.empty(L)
    values = L.get_join_table()[L.get_meet_table()[others, I.b], I.a]
    return ElementSet.of(L, np.unique(values))


def induced_by_complements(I: Interval, z: int) -> list[tuple[int, int, int]]:
    """(u, (u ∨ a) ∧ b, (u ∧ b) ∨ a) for every complement u of z, ascending in u"""
    L = I.lattice
    return [(u, L.meet(L.join(u, I.a), I.b), L.join(L.meet(u, I.b), I.a)) for u in complements(L, z)]


@dataclass(frozen=True)
class InducedReport:
    """
    Conditions (1) and (2) for an element u and z in [x, y]:

        (1)  (u ∨ x) ∧ y = (u ∧ y) ∨ x
        (2)  (u ∨ x) ∧ z = x  and  (u ∧ y) ∨ z = y

    v = (u ∨ x) ∧ y is only reported when (1) holds.
    """
    u: int
    z: int
    interval: Interval
    cond1_holds: bool
    cond2_holds: bool
    v: int | None = None
    v_in_relcomp: bool | None = None

    def describe(self) -> str:
        name = self.interval.lattice.get_node_name
        out = f"u = {name(self.u)}, z = {name(self.z)}, interval {self.interval}\n"
        out += f"cond1: {'holds' if self.cond1_holds else 'fails'}\n"
        out += f"cond2: {'holds' if self.cond2_holds else 'fails'}\n"
        if self.v is None:
            out += "v: none\n"
        else:
            relation = "in" if self.v_in_relcomp else "not in"
            out += f"v: {name(self.v)} ({relation} {name(self.z)}^{{{name(self.interval.a)}{name(self.interval.b)}}})\n"
        return out


def evaluate_induced(I: Interval, z: int, u: int) -> InducedReport:
    """Evaluate both conditions without asserting their equivalence"""
    L = I.lattice
    x, y = I.a, I.b
    upper = L.meet(L.join(u, x), y)
    lower = L.join(L.meet(u, y), x)
    cond1 = upper == lower
    cond2 = L.meet(L.join(u, x), z) == x and L.join(L.meet(u, y), z) == y
    if not cond1:
        return InducedReport(u, z, I, False, cond2)
    return InducedReport(u, z, I, True, cond2, upper, bool(I.relcomp_bits[z] >> upper & 1))


def check_induced(I: Interval, z: int, u: int) -> InducedReport:
    I.require(z)
    report = evaluate_induced(I, z, u)
    if __debug__:
        if report.cond1_holds and report.v_in_relcomp != report.cond2_holds:
            L = I.lattice
            raise ConsistencyError(
                f"Induced element {L.get_node_name(report.v)} of u = {L.get_node_name(u)} in {I}: membership in "
                f"{L.get_node_name(z)}^{{ab}} is {report.v_in_relcomp} but cond2 is {report.cond2_holds}")
    return report
