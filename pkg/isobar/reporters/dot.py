"""Graphviz DOT export."""

from typing import Iterable, Optional

from isobar.models.planar_map import Edge, PlanarMap, edge_key


def export_dot(
    planar_map: PlanarMap,
    highlight: Optional[Iterable[Edge]] = None,
    name: str = "map",
) -> str:
    """Render the map as an undirected DOT graph.

    Nodes are emitted in id order and edges in sorted order; highlighted
    edges are drawn bold.
    """
    bold = {edge_key(u, v) for u, v in highlight} if highlight is not None else set()
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(planar_map.vertex_count):
        lines.append(f"  {v};")
    for u, v in planar_map.edges:
        if (u, v) in bold:
            lines.append(f"  {u} -- {v} [style=bold, penwidth=3];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
