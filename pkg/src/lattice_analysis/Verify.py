#!/usr/bin/env python
"""
Executable checkers for the statements about relative complementation.

Interval scoped checkers take an Interval; lattice scoped ones take a Lattice and run the interval
checker on every [a, b] with a <= b. Every checker returns a CheckReport, a VIOLATED report always
carries a counterexample naming the elements involved.
"""
import logging
from collections.abc import Callable
from dataclasses import replace
from fnmatch import fnmatchcase

import numpy as np

from lattice_analysis.CheckReport import CheckReport, CheckStatus
from lattice_analysis.Closure import build_closed_family, closure_bits, is_biclosure_injective, le1, prime_table
from lattice_analysis.Complement import bar, evaluate_induced, hat
from lattice_analysis.Constructors import direct_product
from lattice_analysis.ElementSet import ElementSet, bits_to_ids, join_set, meet_set
from lattice_analysis.Interval import Interval, all_intervals
from lattice_analysis.Lattice import Lattice
from lattice_analysis.LatticeException import (
    BadFactors,
    InjectivityFailed,
    NotComplemented,
    UnknownStatement,
)
from lattice_analysis.Pattern import find_pattern, remark_patterns
from lattice_analysis.Structure import (
    find_n5_through,
    is_antichain,
    is_complemented,
    is_convex,
    is_modular,
    is_modular_interval,
)

EXHAUSTIVE_SUBSET_LIMIT = 12
PAIR_EXHAUSTIVE_LIMIT = 7
SUBSET_SAMPLE_SIZE = 4096
SUBSET_SAMPLE_SEED = 20240117

VERIFIED = CheckStatus.VERIFIED
VIOLATED = CheckStatus.VIOLATED
VACUOUS = CheckStatus.VACUOUS
HYPOTHESIS_FAILED = CheckStatus.HYPOTHESIS_FAILED

logger = logging.getLogger(__name__)


def _set_name(L: Lattice, bits: int) -> str:
    return str(ElementSet(L, bits))


def _report(statement: str, I: Interval, checked: int) -> CheckReport:
    return CheckReport(statement, VERIFIED if checked else VACUOUS, checked, subject=I.lattice.get_name())


def _violation(statement: str, I: Interval, note: str = "", **witness: str) -> CheckReport:
    counterexample = {"lattice": I.lattice.get_name(), "interval": str(I)} | witness
    return CheckReport(statement, VIOLATED, counterexample=counterexample, note=note, subject=I.lattice.get_name())


def _hypothesis_failed(statement: str, I: Interval, note: str) -> CheckReport:
    return CheckReport(statement, HYPOTHESIS_FAILED, note=note, subject=I.lattice.get_name())


def _over_intervals(statement: str, L: Lattice, check: Callable[[Interval], CheckReport]) -> CheckReport:
    """Run check on every interval of L; the first violation wins, otherwise counts are summed"""
    checked = vacuous = failed = 0
    for I in all_intervals(L):
        report = check(I)
        if report.status is VIOLATED:
            return report
        checked += report.checked_instances
        vacuous += report.status is VACUOUS
        failed += report.status is HYPOTHESIS_FAILED
    if checked:
        status = VERIFIED
    elif failed:
        status = HYPOTHESIS_FAILED
    else:
        status = VACUOUS
    return CheckReport(statement, status, checked, subject=L.get_name(), hypothesis_failures=failed,
                       vacuous_instances=vacuous)


class LocalGalois:
    """A^{ab} on local bitmasks of an interval, tabulated over all subsets when the interval is small"""

    def __init__(self, I: Interval):
        self.interval = I
        self.size = len(I)
        self.full = (1 << self.size) - 1
        self.rows = I.local_relcomp_bits
        self.table = prime_table(I) if self.size <= EXHAUSTIVE_SUBSET_LIMIT else None
        members = I.members.bits
        self.up = [I.to_local(I.lattice.up_bits(int(x)) & members) for x in I.get_ids()]

    def prime(self, S: int) -> int:
        if self.table is not None:
            return self.table[S]
        result = self.full
        for i in bits_to_ids(S):
            result &= self.rows[i]
        return result

    def closure(self, S: int) -> int:
        return self.prime(self.prime(S))

    def is_antichain(self, S: int) -> bool:
        return all(self.up[i] & S == 1 << i for i in bits_to_ids(S))

    def subsets(self) -> list[int]:
        """Every subset when the interval is small, otherwise a seeded sample plus all singletons"""
        if self.table is not None:
            return list(range(1 << self.size))
        rng = np.random.default_rng(SUBSET_SAMPLE_SEED)
        sample = set(self.__draw(rng))
        sample |= {1 << i for i in range(self.size)}
        return sorted(sample | {0, self.full})

    def pairs(self) -> list[tuple[int, int]]:
        if self.size <= PAIR_EXHAUSTIVE_LIMIT:
            subsets = range(1 << self.size)
            return [(S, T) for S in subsets for T in subsets]
        rng = np.random.default_rng(SUBSET_SAMPLE_SEED + 1)
        drawn = list(zip(self.__draw(rng), self.__draw(rng), self.__draw(rng)))
        # the third draw thins T into a subset of it, so that inclusions get sampled too
        return [(S, T) for S, T, _ in drawn] + [(T & mask, T) for _, T, mask in drawn]

    def __draw(self, rng: np.random.Generator) -> list[int]:
        """SUBSET_SAMPLE_SIZE uniform subsets, one coin per member, packed into Python ints of any width"""
        coins = rng.integers(0, 2, size=(SUBSET_SAMPLE_SIZE, self.size), dtype=np.uint8)
        packed = np.packbits(coins, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]

    def names(self, S: int) -> str:
        return _set_name(self.interval.lattice, self.interval.to_global(S))


# Galois connection laws

def verify_galois_law(I: Interval, law: str) -> CheckReport:
    statement = f"galois.{law}"
    if not I.is_complemented():
        return _hypothesis_failed(statement, I, "interval not complemented")
    galois = LocalGalois(I)
    checked = 0
    if law in ("extensive", "triple", "nonempty"):
        for S in galois.subsets():
            P = galois.prime(S)
            checked += 1
            if law == "extensive" and S & ~galois.prime(P):
                return _violation(statement, I, A=galois.names(S), closure=galois.names(galois.prime(P)))
            if law == "triple" and galois.prime(galois.prime(P)) != P:
                return _violation(statement, I, A=galois.names(S), prime=galois.names(P))
            if law == "nonempty" and S and not galois.prime(P):
                return _violation(statement, I, A=galois.names(S))
    elif law in ("antitone", "adjunction"):
        for S, T in galois.pairs():
            PS, PT = galois.prime(S), galois.prime(T)
            checked += 1
            if law == "antitone" and S & ~T == 0 and PT & ~PS:
                return _violation(statement, I, A=galois.names(S), B=galois.names(T))
            if law == "adjunction" and (S & ~PT == 0) != (T & ~PS == 0):
                return _violation(statement, I, A=galois.names(S), B=galois.names(T))
    else:
        raise UnknownStatement(f"Unknown Galois law {law}")
    return _report(statement, I, checked)


# Properties of the operator ^{ab}

def verify_closure_triple(I: Interval) -> CheckReport:
    """c ∈ (c^{ab})^{ab} and ((c^{ab})^{ab})^{ab} = c^{ab}"""
    if not I.is_complemented():
        return _hypothesis_failed("prop1.i", I, "interval not complemented")
    L = I.lattice
    for c in I:
        prime = I.relcomp_bits[c]
        biclosure = I.prime_bits(prime)
        if not biclosure >> c & 1 or I.prime_bits(biclosure) != prime:
            return _violation("prop1.i", I, c=L.get_node_name(c), closure=_set_name(L, biclosure))
    return _report("prop1.i", I, len(I))


def verify_antichain_iff_n5(I: Interval) -> CheckReport:
    """Every x^{ab} is an antichain iff no pentagon of [a, b] has bounds a and b"""
    if not I.is_complemented():
        return _hypothesis_failed("prop1.ii", I, "interval not complemented")
    L = I.lattice
    not_antichain = [x for x in I if not is_antichain(ElementSet(L, I.relcomp_bits[x]))]
    pentagon = find_n5_through(I)
    if (not not_antichain) != (pentagon is None):
        witness = {"pentagon": "none" if pentagon is None else " ".join(L.get_node_name(x) for x in pentagon)}
        if not_antichain:
            x = not_antichain[0]
            witness["x"] = L.get_node_name(x)
            witness["relcomp"] = _set_name(L, I.relcomp_bits[x])
        return _violation("prop1.ii", I, **witness)
    return _report("prop1.ii", I, 1)


def verify_convexity(I: Interval) -> CheckReport:
    if not I.is_complemented():
        return _hypothesis_failed("prop1.iii", I, "interval not complemented")
    L = I.lattice
    for c in I:
        if not is_convex(ElementSet(L, I.relcomp_bits[c])):
            return _violation("prop1.iii", I, c=L.get_node_name(c), relcomp=_set_name(L, I.relcomp_bits[c]))
    return _report("prop1.iii", I, len(I))


def verify_noninjective_biclosure(I: Interval) -> CheckReport:
    """A non injective x -> (x^{ab})^{ab} rules out the identity (x^{ab})^{ab} = x"""
    if not I.is_complemented():
        return _hypothesis_failed("prop1.iv", I, "interval not complemented")
    if is_biclosure_injective(I):
        return _report("prop1.iv", I, 0)
    if all(closure_bits(I, c) == 1 << c for c in I):
        return _violation("prop1.iv", I, note="biclosure not injective yet every element is closed",
                          injective="false")
    return _report("prop1.iv", I, 1)


def verify_modular_antichain(I: Interval) -> CheckReport:
    """On a modular interval every A^{ab} (A non-empty) and every (c^{ab})^{ab} is an antichain"""
    if not is_modular_interval(I):
        return _hypothesis_failed("cor1", I, "interval not modular")
    if not I.is_complemented():
        return _hypothesis_failed("cor1", I, "interval not complemented")
    galois = LocalGalois(I)
    checked = 0
    for S in galois.subsets():
        if not S:
            continue
        checked += 1
        if not galois.is_antichain(galois.prime(S)):
            return _violation("cor1", I, A=galois.names(S), prime=galois.names(galois.prime(S)))
    for i in range(galois.size):
        checked += 1
        if not galois.is_antichain(galois.closure(1 << i)):
            return _violation("cor1", I, c=galois.names(1 << i), closure=galois.names(galois.closure(1 << i)))
    return _report("cor1", I, checked)


def find_biclosure_fixed_point(I: Interval, c: int) -> int:
    """
    Some d ∈ (c^{ab})^{ab} with (d^{ab})^{ab} = {d}, following the descending chain
    (c^{ab})^{ab} ⊋ (c1^{ab})^{ab} ⊋ ... where each c_{k+1} is the smallest other member of (c_k^{ab})^{ab}
    """
    I.require(c)
    if not I.is_complemented():
        raise NotComplemented(f"{I} is not complemented")
    if not is_biclosure_injective(I):
        raise InjectivityFailed(f"x -> (x^{{ab}})^{{ab}} is not injective on {I}")
    current = c
    biclosure = closure_bits(I, current)
    while biclosure != 1 << current:
        current = bits_to_ids(biclosure & ~(1 << current))[0]
        smaller = closure_bits(I, current)
        if smaller & ~biclosure or smaller == biclosure:
            raise InjectivityFailed(f"descending chain stalled at {I.lattice.get_node_name(current)} in {I}")
        biclosure = smaller
    return current


def verify_fixed_point(I: Interval) -> CheckReport:
    if not I.is_complemented():
        return _hypothesis_failed("fixedpoint", I, "interval not complemented")
    if not is_biclosure_injective(I):
        return _hypothesis_failed("fixedpoint", I, "biclosure not injective")
    L = I.lattice
    for c in I:
        d = find_biclosure_fixed_point(I, c)
        if not closure_bits(I, c) >> d & 1 or closure_bits(I, d) != 1 << d:
            return _violation("fixedpoint", I, c=L.get_node_name(c), d=L.get_node_name(d))
    return _report("fixedpoint", I, len(I))


def le1_conditions(I: Interval) -> tuple[dict[str, bool], dict[str, tuple[int, int]]]:
    """Conditions (i)..(vi) relating ^{ab} to the order, with a failing pair for each false one"""
    L = I.lattice
    relcomp = {x: ElementSet(L, bits) for x, bits in I.relcomp_bits.items()}
    holds = {name: True for name in ("i", "ii", "iii", "iv", "v", "vi")}
    failing = {}

    def record(name: str, ok: bool, x: int, y: int):
        if not ok and holds[name]:
            holds[name] = False
            failing[name] = (x, y)

    for x in I:
        for y in I:
            joined = join_set(relcomp[x], relcomp[y])
            met = meet_set(relcomp[x], relcomp[y])
            below = relcomp[L.meet(x, y)]
            above = relcomp[L.join(x, y)]
            record("i", le1(joined, below), x, y)
            if L.leq(x, y):
                record("ii", le1(relcomp[y], relcomp[x]), x, y)
            record("iii", le1(above, met), x, y)
            record("iv", joined <= below, x, y)
            record("v", met <= above, x, y)
            record("vi", le1(above, met) and le1(met, above), x, y)
    return holds, failing


LE1_IMPLICATIONS = (
    (("i",), "ii"),
    (("ii",), "iii"),
    (("iii",), "ii"),
    (("iv",), "i"),
    (("iv",), "ii"),
    (("iv",), "iii"),
    (("iv", "v"), "vi"),
)


def verify_le1_theorem(I: Interval) -> CheckReport:
    if not I.is_complemented():
        return _hypothesis_failed("le1.theorem", I, "interval not complemented")
    L = I.lattice
    holds, failing = le1_conditions(I)
    for premises, conclusion in LE1_IMPLICATIONS:
        if all(holds[p] for p in premises) and not holds[conclusion]:
            x, y = failing[conclusion]
            return _violation("le1.theorem", I, implication=f"({')+('.join(premises)}) => ({conclusion})",
                              x=L.get_node_name(x), y=L.get_node_name(y),
                              conditions=" ".join(f"{name}={int(value)}" for name, value in holds.items()))
    return _report("le1.theorem", I, len(I) ** 2)


def th2_sides(I: Interval) -> tuple[bool, bool]:
    """(identity (x^{ab})^{ab} = x holds, the order condition holds)"""
    L = I.lattice
    identity = all(closure_bits(I, x) == 1 << x for x in I)
    condition = all(
        any(L.meet(L.join(x, y), z) == I.a or L.join(L.meet(x, y), z) == I.b for z in bits_to_ids(I.relcomp_bits[y]))
        for x in I for y in bits_to_ids(closure_bits(I, x)))
    return identity, condition


def verify_th2(I: Interval) -> CheckReport:
    if not is_modular_interval(I):
        return _hypothesis_failed("th2", I, "interval not modular")
    if not I.is_complemented():
        return _hypothesis_failed("th2", I, "interval not complemented")
    identity, condition = th2_sides(I)
    if identity != condition:
        return _violation("th2", I, identity=str(identity), condition=str(condition))
    return _report("th2", I, 1)


def verify_closed_family(I: Interval) -> CheckReport:
    if I.is_degenerate():
        return _report("closure.ortholattice", I, 0)
    if not I.is_complemented():
        return _hypothesis_failed("closure.ortholattice", I, "interval not complemented")
    violations = build_closed_family(I).check_axioms()
    if violations:
        return _violation("closure.ortholattice", I, axiom=violations[0])
    return _report("closure.ortholattice", I, 1)


# Induced elements

def verify_prop3(I: Interval) -> CheckReport:
    """Whenever (1) holds, v = (u ∨ x) ∧ y is a relative complement of z iff (2) holds"""
    L = I.lattice
    checked = 0
    for z in I:
        for u in range(len(L)):
            report = evaluate_induced(I, z, u)
            if not report.cond1_holds:
                continue
            checked += 1
            if report.v_in_relcomp != report.cond2_holds:
                return _violation("prop3", I, z=L.get_node_name(z), u=L.get_node_name(u), v=L.get_node_name(report.v),
                                  cond2=str(report.cond2_holds))
    return _report("prop3", I, checked)


def _cond1_everywhere(I: Interval):
    """First u breaking (u ∨ a) ∧ b = (u ∧ b) ∨ a, or None"""
    L = I.lattice
    join = L.get_join_table()
    meet = L.get_meet_table()
    broken = np.nonzero(meet[join[:, I.a], I.b] != join[meet[:, I.b], I.a])[0]
    return int(broken[0]) if len(broken) else None


def verify_prop3_modular(L: Lattice) -> CheckReport:
    """In a modular lattice condition (1) holds for every element and every interval"""
    if not is_modular(L):
        return CheckReport("prop3.modular", HYPOTHESIS_FAILED, note="lattice not modular", subject=L.get_name())

    def check(I: Interval) -> CheckReport:
        u = _cond1_everywhere(I)
        if u is not None:
            return _violation("prop3.modular", I, u=L.get_node_name(u))
        return _report("prop3.modular", I, len(L))

    return _over_intervals("prop3.modular", L, check)


def verify_lemma(L: Lattice) -> CheckReport:
    """Modular and complemented: x̄_{ab} = x̂_{ab} ⊆ x^{ab} and x^{ab} is not empty"""
    if not is_modular(L):
        return CheckReport("lemma", HYPOTHESIS_FAILED, note="lattice not modular", subject=L.get_name())
    if not is_complemented(L):
        return CheckReport("lemma", HYPOTHESIS_FAILED, note="lattice not complemented", subject=L.get_name())

    def check(I: Interval) -> CheckReport:
        for x in I:
            b, h = bar(I, x), hat(I, x)
            relcomp = I.relcomp_bits[x]
            if b != h or b.bits & ~relcomp or not relcomp:
                return _violation("lemma", I, x=L.get_node_name(x), bar=str(b), hat=str(h), relcomp=_set_name(L, relcomp))
        return _report("lemma", I, len(I))

    return _over_intervals("lemma", L, check)


# Products of a Boolean algebra and M_n's

def _th1_factor_role(factor: Lattice) -> str:
    kind = factor.get_kind()
    if isinstance(kind, tuple) and len(kind) == 2:
        if kind[0] == "boolean" or (kind[0] == "chain" and kind[1] <= 2):
            return "boolean"
        if kind[0] == "mn":
            return "mn"
    raise BadFactors(f"{factor.get_name()} is neither a Boolean algebra nor an M_n built by a constructor")


def verify_th1(factors: list[Lattice]) -> CheckReport:
    """In a product of one Boolean algebra and M_n's: (c^{ab})^{ab} = c and x̄_{ab} = x̂_{ab} = c^{ab}"""
    roles = [_th1_factor_role(factor) for factor in factors]
    if roles.count("boolean") != 1:
        raise BadFactors(f"Expected exactly one Boolean factor, got {roles.count('boolean')}")
    L = direct_product(factors)
    logger.info("Checking the closure identity on %s (%d elements)", L.get_name(), len(L))

    def check(I: Interval) -> CheckReport:
        for c in I:
            relcomp = ElementSet(L, I.relcomp_bits[c])
            if closure_bits(I, c) != 1 << c:
                return _violation("th1", I, c=L.get_node_name(c), closure=_set_name(L, closure_bits(I, c)))
            b, h = bar(I, c), hat(I, c)
            if b != relcomp or h != relcomp:
                return _violation("th1", I, c=L.get_node_name(c), bar=str(b), hat=str(h), relcomp=str(relcomp))
        return _report("th1", I, len(I))

    return _over_intervals("th1", L, check)


# Sublattice patterns

def verify_remark_patterns(target: Lattice) -> CheckReport:
    """
    For every embedded pattern: d and e are distinct complements of c and induce the same
    relative complement of c in [a, b], through (d ∨ a) ∧ b for the first pattern and (d ∧ b) ∨ a for its dual
    """
    fig6, fig7 = remark_patterns()
    name = target.get_node_name
    checked = 0
    for pattern, dual in ((fig6, False), (fig7, True)):
        for match in find_pattern(target, pattern):
            a, b, c, d, e = (match[x] for x in ("a", "b", "c", "d", "e"))
            if dual:
                first = target.join(target.meet(d, b), a)
                second = target.join(target.meet(e, b), a)
            else:
                first = target.meet(target.join(d, a), b)
                second = target.meet(target.join(e, a), b)
            checked += 1
            I = Interval(target, a, b)
            complements = target.complement_table
            distinct_complements = d != e and complements[c, d] and complements[c, e]
            if not distinct_complements or first != second or not I.relcomp_bits[c] >> first & 1:
                return _violation("remark.patterns", I, pattern=pattern.get_name(), match=match.describe(),
                                  induced=f"{name(first)} {name(second)}")
    return CheckReport("remark.patterns", VERIFIED if checked else VACUOUS, checked, subject=target.get_name())


def verify_distinct_induced(L: Lattice) -> CheckReport:
    """
    Observation: for x < z < y, distinct complements of z induce distinct elements (u ∨ x) ∧ y, and distinct
    elements (u ∧ y) ∨ x. Not a theorem; reported as VIOLATED with the first coinciding pair.
    """
    checked = 0
    for x, y in L.comparable_pairs():
        I = Interval(L, x, y)
        for z in I:
            if z in (x, y):
                continue
            others = ElementSet.from_mask(L, L.complement_table[z]).ids()
            for i, u in enumerate(others):
                for w in others[i + 1:]:
                    checked += 1
                    for form, induce in (("(u v x) ^ y", lambda t: L.meet(L.join(t, x), y)),
                                         ("(u ^ y) v x", lambda t: L.join(L.meet(t, y), x))):
                        if induce(u) == induce(w):
                            report = _violation("distinct-induced", I, note="observation, not a theorem",
                                                z=L.get_node_name(z), u=L.get_node_name(u), w=L.get_node_name(w),
                                                form=form, induced=L.get_node_name(induce(u)))
                            return replace(report, checked_instances=checked)
    return CheckReport("distinct-induced", VERIFIED if checked else VACUOUS, checked, subject=L.get_name())


# Registry

def _interval_statement(statement: str, check: Callable[[Interval], CheckReport]) -> Callable[[Lattice], CheckReport]:
    return lambda L: _over_intervals(statement, L, check)


def _galois_statement(law: str) -> Callable[[Lattice], CheckReport]:
    return _interval_statement(f"galois.{law}", lambda I: verify_galois_law(I, law))


STATEMENTS: dict[str, Callable[[Lattice], CheckReport]] = {
    "galois.extensive": _galois_statement("extensive"),
    "galois.antitone": _galois_statement("antitone"),
    "galois.triple": _galois_statement("triple"),
    "galois.adjunction": _galois_statement("adjunction"),
    "galois.nonempty": _galois_statement("nonempty"),
    "prop1.i": _interval_statement("prop1.i", verify_closure_triple),
    "prop1.ii": _interval_statement("prop1.ii", verify_antichain_iff_n5),
    "prop1.iii": _interval_statement("prop1.iii", verify_convexity),
    "prop1.iv": _interval_statement("prop1.iv", verify_noninjective_biclosure),
    "cor1": _interval_statement("cor1", verify_modular_antichain),
    "fixedpoint": _interval_statement("fixedpoint", verify_fixed_point),
    "le1.theorem": _interval_statement("le1.theorem", verify_le1_theorem),
    "prop3": _interval_statement("prop3", verify_prop3),
    "prop3.modular": verify_prop3_modular,
    "lemma": verify_lemma,
    "th2": _interval_statement("th2", verify_th2),
    "closure.ortholattice": _interval_statement("closure.ortholattice", verify_closed_family),
    "remark.patterns": verify_remark_patterns,
}


def resolve_statements(patterns: list[str] | None) -> list[str]:
    """Statement ids matching any of the shell-style patterns, in registry order; None or "all" means every one"""
    if not patterns or "all" in patterns:
        return list(STATEMENTS)
    selected = set()
    for pattern in patterns:
        matched = [statement for statement in STATEMENTS if fnmatchcase(statement, pattern)]
        if not matched:
            raise UnknownStatement(f"No statement matches {pattern}; known: {', '.join(STATEMENTS)}")
        selected.update(matched)
    return [statement for statement in STATEMENTS if statement in selected]


def run_statements(L: Lattice, statements: list[str]) -> list[CheckReport]:
    reports = []
    for statement in statements:
        if statement not in STATEMENTS:
            raise UnknownStatement(f"Unknown statement {statement}")
        report = replace(STATEMENTS[statement](L), statement=statement)
        logger.debug("%s on %s: %s", statement, L.get_name(), report.status.value)
        reports.append(report)
    return reports
