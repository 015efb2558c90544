"""Regenerate the connected cubic graph census used by the test suite.

Samples random 3-regular graphs and keeps one representative per isomorphism
class until the known class counts are reached (OEIS A002851). Output is one
graph6 string per line, ordered by vertex count then by string.
"""
import random
import sys

import networkx as nx

COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def classes(n, want, rng):
    buckets = {}
    found = 0
    tries = 0
    while found < want:
        tries += 1
        g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
        if not nx.is_connected(g):
            continue
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        reps = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in reps):
            continue
        reps.append(g)
        found += 1
    print(f"n={n}: {found} classes after {tries} samples", file=sys.stderr)
    return [h for reps in buckets.values() for h in reps]


def main():
    rng = random.Random(20240611)
    out = []
    for n, want in COUNTS.items():
        lines = []
        for g in classes(n, want, rng):
            g = nx.convert_node_labels_to_integers(g, ordering="sorted")
            lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        out.extend(sorted(lines))
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
