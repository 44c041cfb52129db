""" Define an Interval [a, b] of a lattice, the universe of the relative complementation operators """
from functools import cached_property

import numpy as np

from lattice_analysis.ElementSet import ElementSet, bits_to_ids
from lattice_analysis.Lattice import Lattice
from lattice_analysis.LatticeException import NotComparable, OutsideInterval


class Interval:
    def __init__(self, lattice: Lattice, a: int, b: int):
        if not lattice.leq(a, b):
            raise NotComparable(
                f"{lattice.get_node_name(a)} is not below {lattice.get_node_name(b)} in {lattice.get_name()}")
        self.__lattice = lattice
        self.__a = a
        self.__b = b
        self.__members = ElementSet(lattice, lattice.up_bits(a) & lattice.down_bits(b))
        self.__ids = np.array(self.__members.ids(), dtype=np.int64)

    @property
    def lattice(self) -> Lattice:
        return self.__lattice

    @property
    def a(self) -> int:
        return self.__a

    @property
    def b(self) -> int:
        return self.__b

    @property
    def members(self) -> ElementSet:
        return self.__members

    def get_ids(self) -> np.ndarray:
        """Member ids in ascending order; position i is the local index of a member"""
        return self.__ids

    def __len__(self) -> int:
        return len(self.__ids)

    def __contains__(self, x: int) -> bool:
        return x in self.__members

    def __iter__(self):
        return iter(self.__members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return other.lattice is self.__lattice and other.a == self.__a and other.b == self.__b

    def __hash__(self) -> int:
        return hash((id(self.__lattice), self.__a, self.__b))

    def __str__(self) -> str:
        name = self.__lattice.get_node_name
        return f"[{name(self.__a)}, {name(self.__b)}]"

    def __repr__(self) -> str:
        return f"Interval({self.__lattice.get_name()}, {self})"

    def is_degenerate(self) -> bool:
        return self.__a == self.__b

    def require(self, x: int):
        if x not in self.__members:
            raise OutsideInterval(f"{self.__lattice.get_node_name(x)} is not in {self}")

    def require_subset(self, A: ElementSet):
        if not A <= self.__members:
            outside = ", ".join((A - self.__members).names())
            raise OutsideInterval(f"{outside} not in {self}")

    @cached_property
    def relcomp_matrix(self) -> np.ndarray:
        """Local boolean matrix: [i, j] iff member j is a relative complement of member i"""
        ids = self.__ids
        join = self.__lattice.get_join_table()[np.ix_(ids, ids)]
        meet = self.__lattice.get_meet_table()[np.ix_(ids, ids)]
        matrix = (join == self.__b) & (meet == self.__a)
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def local_relcomp_bits(self) -> list[int]:
        """Row i of relcomp_matrix packed as a local bitmask"""
        weights = [1 << j for j in range(len(self.__ids))]
        return [sum(w for w, hit in zip(weights, row) if hit) for row in self.relcomp_matrix]

    @cached_property
    def relcomp_bits(self) -> dict[int, int]:
        """Member id -> bitmask (over the whole lattice) of its relative complements"""
        out = {}
        for i, x in enumerate(self.__ids):
            out[int(x)] = self.to_global(self.local_relcomp_bits[i])
        return out

    def local_index(self, x: int) -> int:
        return int(np.searchsorted(self.__ids, x))

    def to_global(self, local_bits: int) -> int:
        bits = 0
        for i in bits_to_ids(local_bits):
            bits |= 1 << int(self.__ids[i])
        return bits

    def to_local(self, bits: int) -> int:
        local = 0
        for x in bits_to_ids(bits):
            local |= 1 << self.local_index(x)
        return local

    def prime_bits(self, bits: int) -> int:
        """A^{ab} for A given as a bitmask of members: the members complementing every element of A"""
        result = self.__members.bits
        relcomp = self.relcomp_bits
        for x in bits_to_ids(bits):
            result &= relcomp[x]
            if not result:
                break
        return result

    def is_complemented(self) -> bool:
        """Every member has at least one relative complement"""
        return bool(self.relcomp_matrix.any(axis=1).all())


def interval(lattice: Lattice, a: int, b: int) -> Interval:
    return Interval(lattice, a, b)


def all_intervals(lattice: Lattice) -> list[Interval]:
    """Every [a, b] with a <= b, ascending in (a, b)"""
    return [Interval(lattice, a, b) for a, b in lattice.comparable_pairs()]
