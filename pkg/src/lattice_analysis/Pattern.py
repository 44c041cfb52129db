""" Search a lattice for sublattices shaped like a given pattern lattice, bounds anchored to bounds """
import logging
from dataclasses import dataclass
from functools import cache

from lattice_analysis.Figures import load_figure
from lattice_analysis.Lattice import Lattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatternMatch:
    pattern: Lattice
    target: Lattice
    embedding: tuple[int, ...]

    def __getitem__(self, name: str) -> int:
        """Target element matched by the pattern element called name"""
        return self.embedding[self.pattern.get_element_id(name)]

    def image_bits(self) -> int:
        bits = 0
        for element in self.embedding:
            bits |= 1 << element
        return bits

    def describe(self) -> str:
        pairs = (f"{self.pattern.get_node_name(p)}->{self.target.get_node_name(t)}" for p, t in enumerate(self.embedding))
        return ", ".join(pairs)


def find_pattern(target: Lattice, pattern: Lattice) -> list[PatternMatch]:
    """
    Every injective map preserving ∨ and ∧ that sends the pattern's bounds to the target's bounds.
    One match is kept per image, the smallest embedding tuple; matches are sorted by embedding.
    """
    n = len(pattern)
    if n > len(target):
        return []
    order = pattern.toposort()
    pjoin = pattern.get_join_table()
    pmeet = pattern.get_meet_table()
    pleq = pattern.get_leq_table()
    tjoin = target.get_join_table()
    tmeet = target.get_meet_table()
    tleq = target.get_leq_table()
    # pairs (q, r) whose join is p, checked once p is placed
    joins_onto = {p: [(q, r) for q in range(n) for r in range(q + 1, n) if pjoin[q, r] == p and p not in (q, r)]
                  for p in range(n)}

    image = [-1] * n
    used = set()
    best = {}

    def consistent(p: int, t: int) -> bool:
        for q in range(n):
            s = image[q]
            if s < 0:
                continue
            if pleq[p, q] != tleq[t, s] or pleq[q, p] != tleq[s, t]:
                return False
            m = image[pmeet[p, q]]
            if m >= 0 and tmeet[t, s] != m:
                return False
            j = image[pjoin[p, q]]
            if j >= 0 and tjoin[t, s] != j:
                return False
        for q, r in joins_onto[p]:
            if image[q] >= 0 and image[r] >= 0 and tjoin[image[q], image[r]] != t:
                return False
        return True

    def extend(depth: int):
        if depth == n:
            embedding = tuple(image)
            key = frozenset(embedding)
            if key not in best or embedding < best[key]:
                best[key] = embedding
            return
        p = order[depth]
        if p == pattern.get_bottom():
            choices = [target.get_bottom()]
        elif p == pattern.get_top():
            choices = [target.get_top()]
        else:
            choices = range(len(target))
        for t in choices:
            if t in used or not consistent(p, t):
                continue
            image[p] = t
            used.add(t)
            extend(depth + 1)
            used.discard(t)
            image[p] = -1

    extend(0)
    matches = [PatternMatch(pattern, target, embedding) for embedding in sorted(best.values())]
    logger.debug("%d matches of %s in %s", len(matches), pattern.get_name(), target.get_name())
    return matches


@cache
def remark_patterns() -> tuple[Lattice, Lattice]:
    """The two sublattice shapes where distinct complements induce the same element"""
    return load_figure("fig6-pattern"), load_figure("fig7-pattern")
