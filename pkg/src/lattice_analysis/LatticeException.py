#!/usr/bin/env python
"""List of Exceptions that can be raised"""


class LatticeException(Exception):
    pass


class GraphException(LatticeException):
    pass


class CycleError(GraphException):
    pass


class NotALattice(LatticeException):
    def __init__(self, left: str, right: str, operation: str):
        super().__init__(f"Not a lattice: {left} {operation} {right} is not unique or does not exist")
        self.left = left
        self.right = right
        self.operation = operation


class NoBounds(LatticeException):
    pass


class SizeOverflow(LatticeException):
    pass


class UniverseMismatch(LatticeException):
    pass


class NotComparable(LatticeException):
    pass


class MnTooSmall(LatticeException):
    pass


class OutsideInterval(LatticeException):
    pass


class DegenerateInterval(LatticeException):
    pass


class InjectivityFailed(LatticeException):
    pass


class NotComplemented(LatticeException):
    pass


class BadFactors(LatticeException):
    pass


class SizeBound(LatticeException):
    pass


class UnknownStatement(LatticeException):
    pass


class UnknownElement(LatticeException):
    pass


class ConsistencyError(LatticeException):
    pass


class ParseError(LatticeException):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
