""" Structural queries: modularity, distributivity, complementation, pentagons, antichains and convex sets """
from collections.abc import Iterator

import numpy as np

from lattice_analysis.ElementSet import ElementSet
from lattice_analysis.Interval import Interval, all_intervals
from lattice_analysis.Lattice import Lattice


def _modular_law(leq: np.ndarray, join: np.ndarray, meet: np.ndarray) -> bool:
    """x <= z implies x ∨ (y ∧ z) = (x ∨ y) ∧ z, over local tables"""
    n = leq.shape[0]
    for x in range(n):
        left = join[x][meet]                 # [y, z] -> x ∨ (y ∧ z)
        right = meet[join[x, :], :]          # [y, z] -> (x ∨ y) ∧ z
        if ((left != right) & leq[x][None, :]).any():
            return False
    return True


def _local_tables(I: Interval) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lattice = I.lattice
    ids = I.get_ids()
    position = np.zeros(len(lattice), dtype=np.int64)
    position[ids] = np.arange(len(ids))
    leq = lattice.get_leq_table()[np.ix_(ids, ids)]
    join = position[lattice.get_join_table()[np.ix_(ids, ids)]]
    meet = position[lattice.get_meet_table()[np.ix_(ids, ids)]]
    return leq, join, meet


def is_modular(L: Lattice) -> bool:
    return _modular_law(L.get_leq_table(), L.get_join_table(), L.get_meet_table())


def is_modular_interval(I: Interval) -> bool:
    """[a, b] taken as a sublattice satisfies the modular law"""
    return _modular_law(*_local_tables(I))


def is_distributive(L: Lattice) -> bool:
    join = L.get_join_table()
    meet = L.get_meet_table()
    for x in range(len(L)):
        left = meet[x][join]                              # x ∧ (y ∨ z)
        right = join[meet[x][:, None], meet[x][None, :]]  # (x ∧ y) ∨ (x ∧ z)
        if (left != right).any():
            return False
    return True


def is_complemented(L: Lattice) -> bool:
    return bool(L.complement_table.any(axis=1).all())


def is_rel_complemented(L: Lattice) -> bool:
    return all(I.is_complemented() for I in all_intervals(L))


def iter_pentagons(L: Lattice) -> Iterator[tuple[int, int, int, int, int]]:
    """
    Every N5 sublattice as (bottom, lone, low, high, top) with low < high and lone incomparable to both,
    in ascending tuple order
    """
    found = []
    for low, high in L.comparable_pairs():
        if low == high:
            continue
        for lone in range(len(L)):
            if L.leq(lone, high) or L.leq(low, lone):
                continue
            bottom = L.meet(lone, low)
            top = L.join(lone, high)
            if L.meet(lone, high) == bottom and L.join(lone, low) == top:
                found.append((bottom, lone, low, high, top))
    yield from sorted(found)


def find_n5(L: Lattice):
    return next(iter_pentagons(L), None)


def find_n5_through(I: Interval):
    """
    A pentagon sublattice (a, d, e, f, b) of [a, b] with bottom a, top b, e < f and d incomparable to both,
    the smallest in (d, e, f) order, or None
    """
    lattice = I.lattice
    members = list(I)
    for d in members:
        for e in members:
            if lattice.leq(e, d) or lattice.leq(d, e) or lattice.join(d, e) != I.b:
                continue
            for f in members:
                if lattice.lt(e, f) and not lattice.leq(d, f) and lattice.meet(d, f) == I.a:
                    return I.a, d, e, f, I.b
    return None


def is_antichain(S: ElementSet) -> bool:
    lattice = S.universe
    return all(lattice.up_bits(x) & S.bits == 1 << x for x in S)


def is_convex(S: ElementSet) -> bool:
    lattice = S.universe
    for d in S:
        for e in S:
            if lattice.leq(d, e) and lattice.up_bits(d) & lattice.down_bits(e) & ~S.bits:
                return False
    return True
