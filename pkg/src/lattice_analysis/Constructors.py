""" Standard lattices: chains, Boolean algebras, M_n and direct products """
import logging
import math

import numpy as np

from lattice_analysis.Lattice import MAX_ELEMENTS, Lattice, from_covers
from lattice_analysis.LatticeException import LatticeException, MnTooSmall, SizeOverflow

logger = logging.getLogger(__name__)


def make_chain(k: int) -> Lattice:
    names = [str(i) for i in range(k)]
    covers = [(names[i], names[i + 1]) for i in range(k - 1)]
    return from_covers(names, covers, name=f"C{k}", kind=("chain", k))


def make_boolean(n: int) -> Lattice:
    """The powerset of an n-set; element m is the subset with bitmask m, named by its n-bit string"""
    if 2 ** n > MAX_ELEMENTS:
        raise SizeOverflow(f"B{n} has {2 ** n} elements, the limit is {MAX_ELEMENTS}")
    if n == 0:
        return from_covers(["0"], [], name="B0", kind=("boolean", 0))
    names = [format(m, f"0{n}b") for m in range(2 ** n)]
    covers = [(names[m], names[m | 1 << i]) for m in range(2 ** n) for i in range(n) if not m & 1 << i]
    return from_covers(names, covers, name=f"B{n}", kind=("boolean", n))


def make_mn(n: int) -> Lattice:
    """0 < a1, ..., an < 1"""
    if n < 3:
        raise MnTooSmall(f"M_n needs n >= 3, got {n}")
    atoms = [f"a{i}" for i in range(1, n + 1)]
    covers = [("0", atom) for atom in atoms] + [(atom, "1") for atom in atoms]
    return from_covers(["0"] + atoms + ["1"], covers, name=f"M{n}", kind=("mn", n))


def direct_product(lattices: list[Lattice]) -> Lattice:
    """Componentwise order, join and meet; element (x1, ..., xk) is named x1·...·xk"""
    if not lattices:
        raise LatticeException("Direct product of an empty list of lattices")
    if len(lattices) == 1:
        return lattices[0]
    size = math.prod(len(lattice) for lattice in lattices)
    if size > MAX_ELEMENTS:
        raise SizeOverflow(f"Product has {size} elements, the limit is {MAX_ELEMENTS}")

    first = lattices[0]
    names = first.get_node_names()
    covers = first.get_edges()
    leq = first.get_leq_table()
    join = first.get_join_table()
    meet = first.get_meet_table()
    for factor in lattices[1:]:
        n1, n2 = len(names), len(factor)
        names = [f"{x}·{y}" for x in names for y in factor.get_node_names()]
        covers = ([(i1 * n2 + i2, k1 * n2 + i2) for i1, k1 in covers for i2 in range(n2)]
                  + [(i1 * n2 + i2, i1 * n2 + k2) for i1 in range(n1) for i2, k2 in factor.get_edges()])
        leq = (leq[:, None, :, None] & factor.get_leq_table()[None, :, None, :]).reshape(n1 * n2, n1 * n2)
        join = (join[:, None, :, None] * n2 + factor.get_join_table()[None, :, None, :]).reshape(n1 * n2, n1 * n2)
        meet = (meet[:, None, :, None] * n2 + factor.get_meet_table()[None, :, None, :]).reshape(n1 * n2, n1 * n2)

    name = "×".join(lattice.get_name() for lattice in lattices)
    kind = ("product", tuple(lattice.get_kind() for lattice in lattices))
    logger.debug("Direct product %s has %d elements", name, size)
    return Lattice(name, names, sorted(covers), kind=kind,
                   tables=(np.array(leq, dtype=bool), np.array(join, dtype=np.int64), np.array(meet, dtype=np.int64)))
