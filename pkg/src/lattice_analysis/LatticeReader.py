""" Read a .lat file and load it to a Lattice object """

import gzip
from pathlib import Path

from lattice_analysis.Lattice import Lattice, from_covers, lat_token
from lattice_analysis.LatticeException import ParseError


class LatticeReader:
    """
    Line oriented format, '#' starts a comment:

        lattice <name>          optional, at most once
        elem <name> ...         may repeat, declaration order gives the element ids
        cover <lower> <upper>   one cover pair of the Hasse diagram
    """

    def __init__(self, default_name: str = "L"):
        self.name = None
        self.default_name = default_name
        self.names = []
        self.declared = set()
        self.covers = []
        self.seen_covers = set()

    def read_lattice(self, filename: str) -> Lattice:
        self.default_name = Path(filename).name.removesuffix(".gz").removesuffix(".lat")
        try:
            if filename.endswith(".gz"):
                with gzip.open(filename, 'rt', encoding='UTF-8') as file:
                    text = file.read()
            else:
                with open(filename, 'r', encoding='UTF-8') as file:
                    text = file.read()
        except UnicodeDecodeError as e:
            raise ParseError(0, f"{filename} is not valid UTF-8 (byte {e.start}: {e.reason})")
        return self.read_text(text)

    def read_text(self, text: str) -> Lattice:
        for number, line in enumerate(text.splitlines(), start=1):
            tokens = line.split("#", 1)[0].split()
            if not tokens:
                continue
            if tokens[0] == "lattice":
                self.__readline_lattice(number, tokens)
            elif tokens[0] == "elem":
                self.__readline_elem(number, tokens)
            elif tokens[0] == "cover":
                self.__readline_cover(number, tokens)
            else:
                raise ParseError(number, f"Unknown directive '{tokens[0]}'")
        if not self.names:
            raise ParseError(0, "No element declared")
        return from_covers(self.names, self.covers, name=self.name or lat_token(self.default_name))

    def __readline_lattice(self, number: int, tokens: list[str]):
        if len(tokens) != 2:
            raise ParseError(number, f"'lattice' should have 1 parameter - {' '.join(tokens)}")
        if self.name is not None:
            raise ParseError(number, f"'lattice' given twice: {self.name} and {tokens[1]}")
        self.name = tokens[1]

    def __readline_elem(self, number: int, tokens: list[str]):
        if len(tokens) < 2:
            raise ParseError(number, "'elem' should have at least 1 parameter")
        for name in tokens[1:]:
            if name in self.declared:
                raise ParseError(number, f"Duplicate element {name}")
            self.declared.add(name)
            self.names.append(name)

    def __readline_cover(self, number: int, tokens: list[str]):
        if len(tokens) != 3:
            raise ParseError(number, f"'cover' should have 2 parameters - {' '.join(tokens)}")
        lower, upper = tokens[1], tokens[2]
        for name in (lower, upper):
            if name not in self.declared:
                raise ParseError(number, f"Undeclared element {name} in cover {lower} {upper}")
        if (lower, upper) in self.seen_covers:
            raise ParseError(number, f"Duplicate cover {lower} {upper}")
        self.seen_covers.add((lower, upper))
        self.covers.append((lower, upper))


def parse_lattice(text: str, default_name: str = "L") -> Lattice:
    return LatticeReader(default_name).read_text(text)


def read_lattice(filename: str) -> Lattice:
    return LatticeReader().read_lattice(filename)
