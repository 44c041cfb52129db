#!/usr/bin/env python
""" Define a finite Lattice as a cover graph with its order relation and join/meet tables """
import logging
from functools import cached_property

import numpy as np

from lattice_analysis.ElementSet import ElementSet, mask_to_bits
from lattice_analysis.Graph import Graph
from lattice_analysis.LatticeException import (
    GraphException,
    NoBounds,
    NotALattice,
    SizeOverflow,
    UnknownElement,
)

MAX_ELEMENTS = 4096

logger = logging.getLogger(__name__)


def lat_token(name: str) -> str:
    """name as a single .lat token: whitespace and the comment sign become underscores"""
    return "_".join(name.replace("#", " ").split())


def covers_of(leq: np.ndarray) -> list[tuple[int, int]]:
    """Cover pairs (lower, upper) of a partial order given by its boolean leq matrix"""
    lt = leq.copy()
    lt[np.diag_indices_from(lt)] = False
    # path counts below MAX_ELEMENTS are exact in float32
    lt_float = lt.astype(np.float32)
    child = lt & ~(lt_float @ lt_float > 0)
    return [(int(lower), int(upper)) for lower, upper in zip(*np.nonzero(child))]


class Lattice(Graph):
    """
    Immutable finite lattice. Elements are the ids 0..n-1 in declaration order, named by get_node_name.

    leq[x, y] is True iff x <= y; join[x, y] and meet[x, y] are element ids.
    Use from_covers to build one from a Hasse diagram.
    """

    def __init__(self, name: str, names: list[str], covers: list[tuple[int, int]], kind=None, tables=None):
        super(Lattice, self).__init__(name)
        if len(names) > MAX_ELEMENTS:
            raise SizeOverflow(f"{name}: {len(names)} elements exceeds the limit of {MAX_ELEMENTS}")
        for element_name in names:
            self.add_node(element_name)
        for lower, upper in covers:
            self.add_edge(lower, upper)
        self.freeze()
        self.__kind = kind

        order = self.toposort()
        if tables is None:
            leq = self.__close(order)
            self.__bottom, self.__top = self.__bounds(leq)
            join, meet = self.__synthesize(leq)
        else:
            leq, join, meet = tables
            self.__bottom, self.__top = self.__bounds(leq)
        for table in (leq, join, meet):
            table.flags.writeable = False
        self.__leq = leq
        self.__join = join
        self.__meet = meet
        self.__up_bits = [mask_to_bits(leq[x, :]) for x in range(len(names))]
        self.__down_bits = [mask_to_bits(leq[:, x]) for x in range(len(names))]
        logger.debug("Built lattice %s with %d elements and %d covers", name, len(names), len(covers))

    def __close(self, order: list[int]) -> np.ndarray:
        n = len(order)
        leq = np.zeros((n, n), dtype=bool)
        for x in reversed(order):
            leq[x, x] = True
            for parent in self.get_parents(x):
                leq[x, :] |= leq[parent, :]
        return leq

    def __bounds(self, leq: np.ndarray) -> tuple[int, int]:
        n = leq.shape[0]
        bottoms = [x for x in range(n) if leq[x, :].all()]
        tops = [x for x in range(n) if leq[:, x].all()]
        if not bottoms:
            raise NoBounds(f"{self.get_name()}: no least element")
        if not tops:
            raise NoBounds(f"{self.get_name()}: no greatest element")
        return bottoms[0], tops[0]

    def __synthesize(self, leq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """The join of x and y is the element whose up-set is exactly the common up-set of x and y"""
        n = leq.shape[0]
        geq = leq.T
        lub_id = {np.packbits(leq[i, :]).tobytes(): i for i in range(n)}
        glb_id = {np.packbits(geq[i, :]).tobytes(): i for i in range(n)}
        join = np.zeros((n, n), dtype=np.int64)
        meet = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            above = np.packbits(leq[x, :][None, :] & leq, axis=1)
            below = np.packbits(geq[x, :][None, :] & geq, axis=1)
            for y in range(n):
                lub = lub_id.get(above[y].tobytes())
                if lub is None:
                    raise NotALattice(self.get_node_name(x), self.get_node_name(y), "join")
                glb = glb_id.get(below[y].tobytes())
                if glb is None:
                    raise NotALattice(self.get_node_name(x), self.get_node_name(y), "meet")
                join[x, y] = lub
                meet[x, y] = glb
        return join, meet

    def __len__(self) -> int:
        return self.__leq.shape[0]

    def get_kind(self):
        return self.__kind

    def get_bottom(self) -> int:
        return self.__bottom

    def get_top(self) -> int:
        return self.__top

    def get_leq_table(self) -> np.ndarray:
        return self.__leq

    def get_join_table(self) -> np.ndarray:
        return self.__join

    def get_meet_table(self) -> np.ndarray:
        return self.__meet

    def leq(self, x: int, y: int) -> bool:
        return bool(self.__leq[x, y])

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.__leq[x, y])

    def join(self, x: int, y: int) -> int:
        return int(self.__join[x, y])

    def meet(self, x: int, y: int) -> int:
        return int(self.__meet[x, y])

    def up_bits(self, x: int) -> int:
        return self.__up_bits[x]

    def down_bits(self, x: int) -> int:
        return self.__down_bits[x]

    def get_element_id(self, name: str) -> int:
        element = self.find_node(name)
        if element is None:
            raise UnknownElement(f"{self.get_name()} has no element named {name}")
        return element

    def elements(self, *names: str) -> ElementSet:
        return ElementSet.of(self, (self.get_element_id(name) for name in names))

    def all_elements(self) -> ElementSet:
        return ElementSet.full(self)

    @cached_property
    def complement_table(self) -> np.ndarray:
        """complement_table[x, y] iff x ∨ y = 1 and x ∧ y = 0"""
        table = (self.__join == self.__top) & (self.__meet == self.__bottom)
        table.flags.writeable = False
        return table

    def comparable_pairs(self) -> list[tuple[int, int]]:
        """All (a, b) with a <= b, ascending"""
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(self.__leq))]

    def to_lat(self) -> str:
        out = f"lattice {lat_token(self.get_name())}\n"
        out += "elem " + " ".join(self.get_node_names()) + "\n"
        for lower, upper in self.get_edges():
            out += f"cover {self.get_node_name(lower)} {self.get_node_name(upper)}\n"
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.get_name() == other.get_name()
                and self.get_node_names() == other.get_node_names()
                and self.get_edges() == other.get_edges())

    def __hash__(self) -> int:
        return hash((self.get_name(), tuple(self.get_node_names()), tuple(self.get_edges())))

    def __repr__(self) -> str:
        return f"Lattice({self.get_name()}, {len(self)} elements)"


def from_covers(names: list[str], covers: list[tuple[str, str]], name: str = "L", kind=None) -> Lattice:
    index = {}
    for position, element_name in enumerate(names):
        if element_name in index:
            raise GraphException(f"Duplicate element : {element_name}")
        index[element_name] = position
    pairs = []
    for lower, upper in covers:
        for element_name in (lower, upper):
            if element_name not in index:
                raise GraphException(f"Cover {lower} - {upper} references undeclared element {element_name}")
        pairs.append((index[lower], index[upper]))
    lattice = Lattice(name, list(names), pairs, kind=kind)
    leq = lattice.get_leq_table()
    covers = covers_of(leq)
    if covers != lattice.get_edges():
        redundant = sorted(set(lattice.get_edges()) - set(covers))
        logger.warning("%s: dropping %d edges implied by transitivity: %s", name, len(redundant),
                       ", ".join(f"{names[lower]} - {names[upper]}" for lower, upper in redundant))
        lattice = Lattice(name, list(names), covers, kind=kind,
                          tables=(leq, lattice.get_join_table(), lattice.get_meet_table()))
    return lattice


def from_order(names: list[str], leq: np.ndarray, name: str = "L", kind=None) -> Lattice:
    """Build a lattice from a partial order matrix, going through the cover relation"""
    covers = [(names[lower], names[upper]) for lower, upper in covers_of(leq)]
    return from_covers(names, covers, name, kind)
