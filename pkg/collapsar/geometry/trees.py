#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Spiders and divisive trees

A face whose boundary reads w^n carries |w| spiders. Spider j has its legs
at the midpoints of the boundary edges in positions j, j + |w|, ...; gluing
all spiders along shared feet gives a graph whose components are the
divisive trees.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Tuple

import networkx as nx

from ..complex2 import dart_edge
from .ball import CayleyBall

logger = logging.getLogger(__name__)

Node = Tuple[str, int, int]


def spider_node(face: int, index: int) -> Node:
    return ('s', face, index)


def foot_node(edge: int) -> Node:
    return ('e', edge, 0)


@dataclass(frozen=True)
class Spider:
    """Legs from the centre of `face` to the feet at positions index + k * period"""
    face: int
    index: int
    positions: Tuple[int, ...]
    feet: Tuple[int, ...]

    @property
    def legs(self) -> int:
        return len(self.positions)

    def to_dict(self) -> Dict[str, Any]:
        return {'face': self.face, 'index': self.index,
                'positions': list(self.positions), 'feet': list(self.feet)}


def spiders(ball: CayleyBall) -> List[Spider]:
    """|w| spiders with n legs on every face reading w^n"""
    found = []
    for face in ball.complex.faces:
        period = face.period
        for index in range(period):
            positions = tuple(range(index, face.perimeter, period))
            feet = tuple(dart_edge(face.darts[p]) for p in positions)
            found.append(Spider(face.id, index, positions, feet))
    return found


@dataclass
class DivisiveTree:
    """One component of the glued spider graph"""
    graph: nx.MultiGraph
    spiders: List[Spider] = field(default_factory=list)
    is_tree: bool = True
    embedded: bool = True
    partial: bool = False

    @property
    def faces(self) -> FrozenSet[int]:
        return frozenset(s.face for s in self.spiders)

    @property
    def feet(self) -> FrozenSet[int]:
        return frozenset(e for s in self.spiders for e in s.feet)

    def cycle(self) -> List[Node]:
        """A cycle of the graph as a refutation artifact, or []"""
        if self.is_tree:
            return []
        simple = nx.Graph(self.graph)
        for u, v in simple.edges():
            if self.graph.number_of_edges(u, v) > 1:
                return [u, v, u]
        return [u for u, _ in nx.find_cycle(simple)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'spiders': [s.to_dict() for s in self.spiders],
            'faces': sorted(self.faces),
            'feet': sorted(self.feet),
            'nodes': self.graph.number_of_nodes(),
            'arcs': self.graph.number_of_edges(),
            'is_tree': self.is_tree,
            'embedded': self.embedded,
            'partial': self.partial,
            'cycle': [list(n) for n in self.cycle()],
        }


@dataclass
class DivisiveTreeReport:
    trees: List[DivisiveTree] = field(default_factory=list)

    @property
    def all_trees(self) -> bool:
        return all(t.is_tree for t in self.trees)

    @property
    def all_embedded(self) -> bool:
        return all(t.embedded for t in self.trees)

    @property
    def refutations(self) -> List[DivisiveTree]:
        return [t for t in self.trees if not (t.is_tree and t.embedded)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'trees': len(self.trees),
            'partial': sum(1 for t in self.trees if t.partial),
            'all_trees': self.all_trees,
            'all_embedded': self.all_embedded,
            'refutations': [t.to_dict() for t in self.refutations],
        }


def spider_graph(ball: CayleyBall) -> Tuple[nx.MultiGraph, Dict[Node, Spider]]:
    graph = nx.MultiGraph()
    owners: Dict[Node, Spider] = {}
    for spider in spiders(ball):
        centre = spider_node(spider.face, spider.index)
        owners[centre] = spider
        graph.add_node(centre)
        for edge in spider.feet:
            graph.add_edge(centre, foot_node(edge))
    return graph, owners


def divisive_trees(ball: CayleyBall) -> DivisiveTreeReport:
    """Components of the spider graph meeting the safe region, checked for acyclicity and embedding"""
    graph, owners = spider_graph(ball)
    safe = set(ball.safe_faces())
    report = DivisiveTreeReport()
    for nodes in sorted(nx.connected_components(graph), key=lambda c: min(c)):
        members = sorted((owners[n] for n in nodes if n in owners),
                         key=lambda s: (s.face, s.index))
        faces = [s.face for s in members]
        if not safe.intersection(faces):
            continue
        component = graph.subgraph(nodes).copy()
        tree = DivisiveTree(
            component, members,
            is_tree=nx.is_forest(component),
            embedded=len(faces) == len(set(faces)),
            partial=not set(faces) <= safe,
        )
        if not (tree.is_tree and tree.embedded):
            logger.warning("Divisive tree through faces %s is not an embedded tree", sorted(set(faces)))
        report.trees.append(tree)
    logger.debug("%d divisive trees meet the safe region", len(report.trees))
    return report
