""" Isomorphism of finite partial orders: colour refinement invariant plus backtracking on collisions """
import numpy as np

from lattice_analysis.Lattice import Lattice


def refine(leq: np.ndarray) -> tuple[list[int], tuple]:
    """
    Iterated colour refinement of a partial order.

    Every element starts with colour 0; each round recolours x by (colour, sorted colours strictly below,
    sorted colours strictly above), relabelled by rank among the sorted signatures. The relabelling only
    depends on signature contents, so the returned key (the per-round signature lists) is an isomorphism
    invariant and two orders with equal keys have directly comparable colours.
    """
    n = leq.shape[0]
    lt = leq.copy()
    lt[np.diag_indices_from(lt)] = False
    below = [np.nonzero(lt[:, x])[0] for x in range(n)]
    above = [np.nonzero(lt[x, :])[0] for x in range(n)]

    colors = [0] * n
    history = []
    classes = 1 if n else 0
    while True:
        signatures = [(colors[x], tuple(sorted(colors[y] for y in below[x])), tuple(sorted(colors[y] for y in above[x])))
                      for x in range(n)]
        ranked = sorted(set(signatures))
        rank = {signature: i for i, signature in enumerate(ranked)}
        colors = [rank[signature] for signature in signatures]
        history.append(tuple(ranked))
        if len(ranked) == classes:
            break
        classes = len(ranked)
    return colors, (n, tuple(history))


def invariant_key(leq: np.ndarray) -> tuple:
    return refine(leq)[1]


def find_order_isomorphism(leq1: np.ndarray, leq2: np.ndarray):
    """An order isomorphism as a list image[x] for x of the first order, or None"""
    if leq1.shape != leq2.shape:
        return None
    colors1, key1 = refine(leq1)
    colors2, key2 = refine(leq2)
    if key1 != key2:
        return None

    n = leq1.shape[0]
    # most constrained first: rarest colours
    frequency = {}
    for color in colors1:
        frequency[color] = frequency.get(color, 0) + 1
    order = sorted(range(n), key=lambda x: (frequency[colors1[x]], colors1[x], x))
    candidates = {x: [y for y in range(n) if colors2[y] == colors1[x]] for x in range(n)}

    image = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in candidates[x]:
            if used[y]:
                continue
            if all(leq1[x, p] == leq2[y, image[p]] and leq1[p, x] == leq2[image[p], y] for p in order[:depth]):
                image[x] = y
                used[y] = True
                if extend(depth + 1):
                    return True
                used[y] = False
                image[x] = -1
        return False

    return image if extend(0) else None


def find_isomorphism(L1: Lattice, L2: Lattice):
    """A lattice isomorphism L1 -> L2 as a list of element ids, or None. Order isomorphisms of lattices preserve ∨ and ∧"""
    return find_order_isomorphism(L1.get_leq_table(), L2.get_leq_table())


def is_isomorphic(L1: Lattice, L2: Lattice) -> bool:
    return find_isomorphism(L1, L2) is not None
