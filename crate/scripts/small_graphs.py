"""Writes graph6 fixtures of small graphs.

small_edges.g6: every graph with at most 7 edges and no isolated vertex,
up to isomorphism. upto6.g6: every graph on 1..6 vertices, up to isomorphism.
"""

import itertools
import sys
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

MAX_EDGES = 7


def connected_pieces():
    pieces = [g for g in graph_atlas_g() if g.number_of_nodes() > 1 and nx.is_connected(g)
              and g.number_of_edges() <= MAX_EDGES]
    pieces += list(nx.nonisomorphic_trees(MAX_EDGES + 1))
    return sorted(pieces, key=lambda g: (g.number_of_edges(), g.number_of_nodes(), nx.to_graph6_bytes(g, header=False)))


def small_edge_graphs():
    pieces = connected_pieces()
    out = []

    def rec(start, chosen, edges):
        if chosen:
            out.append(nx.convert_node_labels_to_integers(nx.disjoint_union_all(chosen)))
        for i in range(start, len(pieces)):
            m = pieces[i].number_of_edges()
            if edges + m <= MAX_EDGES:
                rec(i, chosen + [pieces[i]], edges + m)

    rec(0, [], 0)
    return out


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(out_dir):
    out_dir = Path(out_dir)
    small = sorted({g6(g) for g in small_edge_graphs()}, key=lambda s: (len(s), s))
    (out_dir / "small_edges.g6").write_text("\n".join(small) + "\n")
    upto6 = [g6(g) for g in graph_atlas_g() if 1 <= g.number_of_nodes() <= 6]
    (out_dir / "upto6.g6").write_text("\n".join(upto6) + "\n")
    print(len(small), len(upto6))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/data")
