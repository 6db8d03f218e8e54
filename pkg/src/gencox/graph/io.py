"""JSON and DOT serialisation of fully coloured graphs."""
from __future__ import annotations

import json

from ..errors import MalformedInputError
from .core import INF, FullyColouredGraph


def _m_out(x):
    return "inf" if x == INF else int(x)


def _m_in(x):
    if x == "inf":
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise MalformedInputError(f"m entry {x!r} is neither an integer nor \"inf\"")
    return x


def graph_to_dict(G: FullyColouredGraph) -> dict:
    return {
        "colours": list(G.colours),
        "vertices": G.vertex_count,
        "action": [list(row) for row in G.action],
        "m": [[[_m_out(x) for x in r] for r in block] for block in G.m],
        "base": G.base,
    }


def graph_from_dict(data: dict) -> FullyColouredGraph:
    try:
        colours = data["colours"]
        count = data["vertices"]
        action = data["action"]
        m = data["m"]
    except (KeyError, TypeError) as exc:
        raise MalformedInputError(f"graph JSON lacks field {exc}") from None
    if not isinstance(count, int) or len(action) != count:
        raise MalformedInputError(f"\"vertices\" is {count!r} but action has {len(action)} rows")
    try:
        m = [[[_m_in(x) for x in r] for r in block] for block in m]
    except TypeError:
        raise MalformedInputError("\"m\" is not a vertex x colour x colour array") from None
    return FullyColouredGraph.from_tables(colours, action, m, data.get("base", 0))


def dumps_graph(G: FullyColouredGraph) -> str:
    return json.dumps(graph_to_dict(G), separators=(",", ":"))


def loads_graph(text: str) -> FullyColouredGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def to_dot(G: FullyColouredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.vertex_count):
        attr = ' [shape=doublecircle]' if v == G.base else ''
        lines.append(f"  {v}{attr};")
    for v, w, s in G.edges():
        lines.append(f'  {v} -- {w} [label="{G.colours[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
