#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DOT and JSON exports for complexes and links
"""
import json
from typing import Dict, Optional, Sequence

from .models import LinkGraph, TwoComplex, dart_edge, is_forward


def _edge_name(label: int, names: Optional[Sequence[str]]) -> str:
    if label < 0:
        return ""
    if names and label < len(names):
        return names[label]
    return f"x{label}"


def complex_to_dot(c: TwoComplex, names: Optional[Sequence[str]] = None,
                   highlight: Optional[Dict[int, str]] = None,
                   graph_name: str = "complex") -> str:
    """1-skeleton as a DOT digraph; highlight maps edge ids to colours"""
    highlight = highlight or {}
    lines = [f"digraph {graph_name} {{", "  node [shape=point];"]
    for v in c.vertices:
        lines.append(f'  v{v} [xlabel="{v}"];')
    for edge in c.edges:
        attrs = [f'label="{_edge_name(edge.label, names)}"']
        if edge.id in highlight:
            attrs.append(f'color="{highlight[edge.id]}"')
            attrs.append("penwidth=2")
        lines.append(f"  v{edge.tail} -> v{edge.head} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dart_name(dart: int, names: Optional[Sequence[str]]) -> str:
    suffix = "" if is_forward(dart) else "-"
    base = names[dart_edge(dart)] if names and dart_edge(dart) < len(names) else f"e{dart_edge(dart)}"
    return f"{base}{suffix}"


def link_to_dot(g: LinkGraph, names: Optional[Sequence[str]] = None) -> str:
    """Link graph as an undirected DOT graph"""
    lines = [f"graph link_v{g.vertex} {{"]
    for node in g.nodes:
        lines.append(f'  d{node} [label="{_dart_name(node, names)}"];')
    for arc in g.arcs:
        lines.append(f'  d{arc.first} -- d{arc.second} [label="f{arc.face}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_to_json(c: TwoComplex) -> str:
    return json.dumps(c.to_dict(), indent=2, sort_keys=True)
