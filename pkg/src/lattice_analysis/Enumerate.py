#!/usr/bin/env python
"""
Enumerate the finite lattices with n elements up to isomorphism, and run the statement checkers over them.

A lattice with n >= 2 elements is a poset on n - 2 points with a new bottom and top added, and it is a
lattice iff every pair has a join and a meet. Posets are grown one maximal element at a time: every poset
on k + 1 points arises from one on k points by adding an element above an order ideal. Isomorphic lattices
come from isomorphic inner posets, so de-duplicating the posets is enough.
"""
import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache

import numpy as np

from lattice_analysis.CheckReport import CheckReport
from lattice_analysis.Isomorphism import find_order_isomorphism, invariant_key
from lattice_analysis.Lattice import Lattice, from_covers, from_order
from lattice_analysis.LatticeException import NotALattice, SizeBound
from lattice_analysis.Verify import resolve_statements, run_statements

MAX_ENUMERATION_SIZE = 8
DEFAULT_SUITE_SIZE = 6
INNER_NAMES = "abcdef"

logger = logging.getLogger(__name__)


def _ideals(leq: np.ndarray) -> list[int]:
    """Down-closed subsets of a poset as bitmasks, ascending"""
    k = leq.shape[0]
    down = [sum(1 << y for y in range(k) if leq[y, x]) for x in range(k)]
    return [S for S in range(1 << k) if all(down[x] & ~S == 0 for x in range(k) if S >> x & 1)]


@cache
def posets(k: int) -> tuple[np.ndarray, ...]:
    """One leq matrix per isomorphism class of posets on k points, in generation order"""
    if k == 0:
        return (np.zeros((0, 0), dtype=bool),)
    found = []
    by_key = {}
    for smaller in posets(k - 1):
        for ideal in _ideals(smaller):
            leq = np.zeros((k, k), dtype=bool)
            leq[:k - 1, :k - 1] = smaller
            leq[k - 1, k - 1] = True
            for x in range(k - 1):
                if ideal >> x & 1:
                    leq[x, k - 1] = True
            key = invariant_key(leq)
            if any(find_order_isomorphism(leq, other) is not None for other in by_key.get(key, [])):
                continue
            leq.flags.writeable = False
            by_key.setdefault(key, []).append(leq)
            found.append(leq)
    logger.debug("%d posets on %d points", len(found), k)
    return tuple(found)


def _bounded(inner: np.ndarray) -> np.ndarray:
    k = inner.shape[0]
    leq = np.zeros((k + 2, k + 2), dtype=bool)
    leq[0, :] = True
    leq[:, k + 1] = True
    leq[1:k + 1, 1:k + 1] = inner
    return leq


def enumerate_lattices(n: int) -> Iterator[Lattice]:
    """One lattice per isomorphism class with exactly n elements, named L<n>.<k>"""
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise SizeBound(f"Lattices are enumerated for 1 <= n <= {MAX_ENUMERATION_SIZE}, got {n}")
    if n == 1:
        yield from_covers(["0"], [], name="L1.1")
        return
    names = ["0"] + list(INNER_NAMES[:n - 2]) + ["1"]
    count = 0
    for inner in posets(n - 2):
        try:
            lattice = from_order(names, _bounded(inner), name=f"L{n}.{count + 1}")
        except NotALattice:
            continue
        count += 1
        yield lattice
    logger.debug("%d lattices with %d elements", count, n)


@dataclass
class EnumerationRun:
    max_size: int
    statements: list[str]
    count_by_size: dict[int, int] = field(default_factory=dict)
    reports: list[CheckReport] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckReport]:
        return [report for report in self.reports if not report.holds]

    def summary(self) -> list[tuple[str, int, int, int, int]]:
        """Per statement: (statement, lattices verified, vacuous, hypothesis failed, violated)"""
        rows = []
        for statement in self.statements:
            mine = [report for report in self.reports if report.statement == statement]
            counts = [sum(report.status.name == status for report in mine)
                      for status in ("VERIFIED", "VACUOUS", "HYPOTHESIS_FAILED", "VIOLATED")]
            rows.append((statement, *counts))
        return rows


def _check_lattice(job: tuple[Lattice, list[str]]) -> list[CheckReport]:
    lattice, statements = job
    return run_statements(lattice, statements)


def run_suite(n: int, statements: list[str] | None = None, jobs: int = 1) -> EnumerationRun:
    """Every selected statement on every lattice with at most n elements; reports keep the enumeration order"""
    selected = resolve_statements(statements)
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise SizeBound(f"Lattices are enumerated for 1 <= n <= {MAX_ENUMERATION_SIZE}, got {n}")
    run = EnumerationRun(n, selected)
    lattices = []
    for size in range(1, n + 1):
        level = list(enumerate_lattices(size))
        run.count_by_size[size] = len(level)
        lattices.extend(level)
    logger.info("Checking %d statements on %d lattices", len(selected), len(lattices))

    work = [(lattice, selected) for lattice in lattices]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_check_lattice, work))
    else:
        results = [_check_lattice(job) for job in work]
    for reports in results:
        run.reports.extend(reports)
    for report in run.failures:
        logger.warning("%s fails on %s", report.statement, report.subject)
    for statement, verified, vacuous, failed, violated in run.summary():
        if not verified and not violated:
            logger.warning("%s was never exercised up to size %d: vacuous on %d lattices, hypothesis failed on %d",
                           statement, n, vacuous, failed)
    return run
