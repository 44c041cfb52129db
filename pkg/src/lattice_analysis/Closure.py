""" The Galois connection (^{ab}, ^{ab}) on subsets of an interval, its closed sets, and the ≤₁ preorder """
import logging

import numpy as np

from lattice_analysis.ElementSet import ElementSet, bits_to_ids
from lattice_analysis.Interval import Interval
from lattice_analysis.LatticeException import ConsistencyError, DegenerateInterval

logger = logging.getLogger(__name__)


def closure(I: Interval, A: ElementSet) -> ElementSet:
    """(A^{ab})^{ab}"""
    I.require_subset(A)
    return ElementSet(I.lattice, I.prime_bits(I.prime_bits(A.bits)))


def closure_bits(I: Interval, x: int) -> int:
    return I.prime_bits(I.prime_bits(1 << x))


def prime_table(I: Interval) -> list[int]:
    """
    A^{ab} for every subset A of [a, b], both sides as local bitmasks (bit i is the i-th member ascending).
    table[S] = table[S without its lowest bit] & relcomp(lowest member of S)
    """
    m = len(I)
    rows = I.local_relcomp_bits
    table = [0] * (1 << m)
    table[0] = (1 << m) - 1
    for S in range(1, 1 << m):
        low = S & -S
        table[S] = table[S ^ low] & rows[low.bit_length() - 1]
    return table


def is_biclosure_injective(I: Interval) -> bool:
    """x -> (x^{ab})^{ab} is injective on [a, b]"""
    images = {closure_bits(I, x) for x in I}
    return len(images) == len(I)


def le1(A: ElementSet, B: ElementSet) -> bool:
    """A ≤₁ B iff every member of A is below some member of B"""
    A._check(B)
    lattice = A.universe
    return all(lattice.up_bits(x) & B.bits for x in A)


def eq1(A: ElementSet, B: ElementSet) -> bool:
    return le1(A, B) and le1(B, A)


class ClosedFamily:
    """
    Cl([a, b]) ordered by inclusion, with A ↦ A^{ab} as orthocomplement.
    Closed sets are indexed in (cardinality, ascending member ids) order; index 0 is ∅ and the last one is [a, b].
    """

    def __init__(self, interval: Interval, closed_bits: list[int]):
        self.__interval = interval
        self.__bits = sorted(closed_bits, key=lambda bits: (bits.bit_count(), bits_to_ids(bits)))
        self.__index = {bits: i for i, bits in enumerate(self.__bits)}
        n = len(self.__bits)

        self.__ortho = np.array([self.__index[interval.prime_bits(bits)] for bits in self.__bits], dtype=np.int64)
        self.__subset = np.array([[a & ~b == 0 for b in self.__bits] for a in self.__bits], dtype=bool).reshape(n, n)
        self.__meet = np.zeros((n, n), dtype=np.int64)
        self.__join = np.zeros((n, n), dtype=np.int64)
        for i, a in enumerate(self.__bits):
            for j in range(i, n):
                b = self.__bits[j]
                self.__meet[i, j] = self.__meet[j, i] = self.__index[a & b]
                self.__join[i, j] = self.__join[j, i] = self.__index[interval.prime_bits(interval.prime_bits(a | b))]
        for table in (self.__ortho, self.__subset, self.__meet, self.__join):
            table.flags.writeable = False
        logger.debug("Cl(%s) has %d closed sets", interval, n)

    @property
    def interval(self) -> Interval:
        return self.__interval

    @property
    def closed_sets(self) -> list[ElementSet]:
        return [ElementSet(self.__interval.lattice, bits) for bits in self.__bits]

    def __len__(self) -> int:
        return len(self.__bits)

    def __iter__(self):
        return iter(self.closed_sets)

    def index_of(self, A: ElementSet) -> int:
        """Index of a closed set, KeyError when A is not closed"""
        return self.__index[A.bits]

    def get(self, i: int) -> ElementSet:
        return ElementSet(self.__interval.lattice, self.__bits[i])

    def bottom(self) -> int:
        return 0

    def top(self) -> int:
        return len(self.__bits) - 1

    def ortho(self, i: int) -> int:
        return int(self.__ortho[i])

    def join(self, i: int, j: int) -> int:
        return int(self.__join[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.__meet[i, j])

    def leq(self, i: int, j: int) -> bool:
        return bool(self.__subset[i, j])

    def check_axioms(self) -> list[str]:
        """Ortholattice axioms; returns a description of every violated one"""
        violations = []
        n = len(self.__bits)
        members = self.__interval.members.bits
        S = self.__subset
        if self.__bits[0] != 0:
            violations.append("∅ is not closed")
        if self.__bits[-1] != members:
            violations.append("[a, b] is not closed")
        if not S[0, :].all() or not S[:, -1].all():
            violations.append("∅ and [a, b] are not the bounds")

        identity = np.arange(n)
        if (self.__ortho[self.__ortho] != identity).any():
            violations.append("orthocomplement is not an involution")
        if (S & ~S[self.__ortho][:, self.__ortho].T).any():
            violations.append("orthocomplement does not reverse inclusion")
        if (self.__join[identity, self.__ortho] != n - 1).any():
            violations.append("A ∨ A^{ab} is not [a, b]")
        if (self.__meet[identity, self.__ortho] != 0).any():
            violations.append("A ∧ A^{ab} is not ∅")

        for i in range(n):
            joins = self.__join[i]
            meets = self.__meet[i]
            if not (S[i, joins].all() and S[identity, joins].all()):
                violations.append(f"join with closed set {i} is not an upper bound")
                break
            if not (S[meets, i].all() and S[meets, identity].all()):
                violations.append(f"meet with closed set {i} is not a lower bound")
                break
            common_upper = S[i][None, :] & S
            if (common_upper & ~S[joins]).any():
                violations.append(f"join with closed set {i} is not the least upper bound")
                break
            common_lower = S[:, i][None, :] & S.T
            if (common_lower & ~S.T[meets]).any():
                violations.append(f"meet with closed set {i} is not the greatest lower bound")
                break
        return violations


def build_closed_family(I: Interval) -> ClosedFamily:
    """Intersections of the seeds {x^{ab}} ∪ {∅^{ab}, [a, b]^{ab}}, without scanning all subsets"""
    members = I.members.bits
    seeds = {I.relcomp_bits[x] for x in I} | {members, I.prime_bits(members)}
    closed = {members}
    for seed in seeds:
        closed |= {bits & seed for bits in closed}
    return ClosedFamily(I, list(closed))


def closed_family(I: Interval) -> ClosedFamily:
    if I.is_degenerate():
        raise DegenerateInterval(f"Cl({I}) is only an ortholattice when a < b")
    family = build_closed_family(I)
    violations = family.check_axioms()
    if violations:
        raise ConsistencyError(f"Cl({I}) is not an ortholattice: {'; '.join(violations)}")
    return family
