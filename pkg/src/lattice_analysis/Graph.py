#!/usr/bin/env python
""" Define the cover graph (Hasse diagram) of a finite poset: named nodes and lower -> upper cover edges """
import logging
from collections import deque

from graphviz import Digraph, Source

from lattice_analysis.LatticeException import CycleError, GraphException

try:
    shell = get_ipython().__class__.__name__
    if shell == 'ZMQInteractiveShell':
        is_notebook = True
        from IPython.display import display
        from PIL import Image
    else:
        is_notebook = False
except NameError:
    is_notebook = False

logger = logging.getLogger(__name__)


class Graph:
    def __init__(self, name: str = "L"):
        self.__name = name
        self.__nodeNameTable = []
        self.__nodeIdTable = {}
        self.__predTable = {}
        self.__succTable = {}
        self._frozen = False

    def get_name(self) -> str:
        return self.__name

    def get_node_ids(self) -> list[int]:
        return list(range(len(self.__nodeNameTable)))

    def get_node_name(self, node_id: int) -> str:
        return self.__nodeNameTable[node_id]

    def get_node_names(self) -> list[str]:
        return list(self.__nodeNameTable)

    def find_node(self, name: str):
        return self.__nodeIdTable.get(name)

    def get_children(self, node_id: int) -> list[int]:
        """Lower covers of node_id"""
        if node_id in self.__predTable:
            return self.__predTable.get(node_id)
        return []

    def get_parents(self, node_id: int) -> list[int]:
        """Upper covers of node_id"""
        if node_id in self.__succTable:
            return self.__succTable.get(node_id)
        return []

    def get_edges(self) -> list[tuple[int, int]]:
        return sorted((lower, upper) for lower in self.get_node_ids() for upper in self.get_parents(lower))

    def add_node(self, name: str) -> int:
        if self._frozen:
            raise GraphException(f"Cannot add node {name}: graph is frozen")
        if name in self.__nodeIdTable:
            raise GraphException(f"Duplicate node : {name}")
        node_id = len(self.__nodeNameTable)
        self.__nodeNameTable.append(name)
        self.__nodeIdTable[name] = node_id
        return node_id

    @staticmethod
    def add_edge_table(node1: int, node2: int, table: dict):
        if node2 in table.keys():
            if node1 in table[node2]:
                raise GraphException(f"Duplicate edge : {node2} - {node1}")
        else:
            table[node2] = []
        table[node2].append(node1)

    def add_edge(self, lower_node: int, upper_node: int):
        if self._frozen:
            raise GraphException("Cannot add edge: graph is frozen")
        if lower_node is None or upper_node is None:
            raise GraphException("Undefined edge.")
        if not (0 <= lower_node < len(self.__nodeNameTable) and 0 <= upper_node < len(self.__nodeNameTable)):
            raise GraphException(f"Undefined edge : {lower_node} - {upper_node}")
        try:
            self.add_edge_table(upper_node, lower_node, self.__succTable)
        except GraphException:
            raise GraphException(
                f"Duplicate cover : {self.get_node_name(lower_node)} - {self.get_node_name(upper_node)}")
        self.add_edge_table(lower_node, upper_node, self.__predTable)

    def freeze(self):
        self._frozen = True

    def toposort(self) -> list[int]:
        """Bottom-up topological order of the nodes, raise CycleError when the cover relation is cyclic"""
        indeg = {node_id: len(self.get_children(node_id)) for node_id in self.get_node_ids()}
        queue = deque(node_id for node_id in self.get_node_ids() if indeg[node_id] == 0)
        order = []
        while queue:
            node_id = queue.popleft()
            order.append(node_id)
            for parent in self.get_parents(node_id):
                indeg[parent] -= 1
                if indeg[parent] == 0:
                    queue.append(parent)
        if len(order) != len(self.__nodeNameTable):
            stuck = sorted(self.get_node_name(node_id) for node_id, d in indeg.items() if d > 0)
            raise CycleError(f"Cover relation is cyclic through {', '.join(stuck)}")
        return order

    def to_dot(self) -> str:
        dot = Digraph(self.get_name(), graph_attr={"rankdir": "BT"})
        for node_id in self.get_node_ids():
            dot.node(str(node_id), label=self.get_node_name(node_id))
        for lower, upper in self.get_edges():
            dot.edge(str(lower), str(upper))
        return dot.source

    def show(self, filename="lattice.dot", format="png"):
        s = Source(self.to_dot(), filename=filename, format=format)
        path = s.render()
        logger.info("Rendered %s to %s", self.get_name(), path)
        if is_notebook:
            img = Image.open(path)
            display(img)
            return

