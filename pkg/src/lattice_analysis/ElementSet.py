""" Define ElementSet, an immutable subset of a lattice stored as a bit vector indexed by element id """
from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import TYPE_CHECKING

import numpy as np

from lattice_analysis.LatticeException import UniverseMismatch

if TYPE_CHECKING:
    from lattice_analysis.Lattice import Lattice


def mask_to_bits(mask: np.ndarray) -> int:
    """Pack a boolean vector into an int, bit i set iff mask[i]"""
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def bits_to_ids(bits: int) -> list[int]:
    ids = []
    while bits:
        low = bits & -bits
        ids.append(low.bit_length() - 1)
        bits ^= low
    return ids


class ElementSet:
    __slots__ = ("__universe", "__bits")

    def __init__(self, universe: Lattice, bits: int = 0):
        self.__universe = universe
        self.__bits = bits

    @classmethod
    def of(cls, universe: Lattice, ids: Iterable[int]) -> ElementSet:
        bits = 0
        for element in ids:
            bits |= 1 << int(element)
        return cls(universe, bits)

    @classmethod
    def from_mask(cls, universe: Lattice, mask: np.ndarray) -> ElementSet:
        return cls(universe, mask_to_bits(mask))

    @classmethod
    def empty(cls, universe: Lattice) -> ElementSet:
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: Lattice) -> ElementSet:
        return cls(universe, (1 << len(universe)) - 1)

    @property
    def universe(self) -> Lattice:
        return self.__universe

    @property
    def bits(self) -> int:
        return self.__bits

    def to_mask(self) -> np.ndarray:
        mask = np.zeros(len(self.__universe), dtype=bool)
        mask[self.ids()] = True
        return mask

    def ids(self) -> list[int]:
        return bits_to_ids(self.__bits)

    def names(self) -> list[str]:
        return sorted(self.__universe.get_node_name(x) for x in self)

    def __contains__(self, element: int) -> bool:
        return element >= 0 and (self.__bits >> element) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(bits_to_ids(self.__bits))

    def __len__(self) -> int:
        return self.__bits.bit_count()

    def __bool__(self) -> bool:
        return self.__bits != 0

    def _check(self, other: ElementSet):
        if not isinstance(other, ElementSet):
            raise TypeError(f"Expected an ElementSet, got {type(other).__name__}")
        if other.universe is not self.__universe:
            raise UniverseMismatch(
                f"Subsets of different lattices: {self.__universe.get_name()} and {other.universe.get_name()}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return other.universe is self.__universe and other.bits == self.__bits

    def __hash__(self) -> int:
        return hash((id(self.__universe), self.__bits))

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.__bits & ~other.bits == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.__bits != other.bits

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.__universe, self.__bits & other.bits)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.__universe, self.__bits | other.bits)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.__universe, self.__bits & ~other.bits)

    def __str__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"

    def __repr__(self) -> str:
        return f"ElementSet({self.__universe.get_name()}, {self})"


def join_set(A: ElementSet, B: ElementSet) -> ElementSet:
    """A ∨ B = {x ∨ y | x in A, y in B}"""
    A._check(B)
    lattice = A.universe
    if not A or not B:
        return ElementSet.empty(lattice)
    values = lattice.get_join_table()[np.ix_(A.ids(), B.ids())]
    return ElementSet.of(lattice, np.unique(values))


def meet_set(A: ElementSet, B: ElementSet) -> ElementSet:
    """A ∧ B = {x ∧ y | x in A, y in B}"""
    A._check(B)
    lattice = A.universe
    if not A or not B:
        return ElementSet.empty(lattice)
    values = lattice.get_meet_table()[np.ix_(A.ids(), B.ids())]
    return ElementSet.of(lattice, np.unique(values))
