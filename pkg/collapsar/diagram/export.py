#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DOT and JSON exports for disk and spherical diagrams
"""
import json
import math
from typing import Optional, Sequence, Union

from ..complex2 import complex_to_dot
from .models import DiskDiagram, SphericalDiagram

Diagram = Union[DiskDiagram, SphericalDiagram]


def diagram_to_dot(d: Diagram, names: Optional[Sequence[str]] = None,
                   graph_name: str = "diagram") -> str:
    """DOT of the 1-skeleton; boundary vertices are pinned around a circle"""
    dot = complex_to_dot(d.to_complex(), names, graph_name=graph_name)
    if not isinstance(d, DiskDiagram) or not d.boundary:
        return dot
    order = []
    for dart in d.boundary:
        v = d.tail(dart)
        if v not in order:
            order.append(v)
    radius = max(1.0, len(order) / 4.0)
    pins = []
    for i, v in enumerate(order):
        angle = 2 * math.pi * i / len(order)
        pins.append(f'  v{v} [pos="{radius * math.cos(angle):.3f},'
                    f'{radius * math.sin(angle):.3f}!"];')
    lines = dot.rstrip("\n").split("\n")
    return "\n".join(lines[:-1] + pins + lines[-1:]) + "\n"


def diagram_to_json(d: Diagram) -> str:
    """Planar map: dart labels, face dart cycles, boundary path"""
    data = d.to_dict()
    data['kind'] = 'disk' if isinstance(d, DiskDiagram) else 'sphere'
    return json.dumps(data, indent=2, sort_keys=True)
