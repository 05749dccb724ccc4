"""Shared helpers for the test suite: seeded generators and slow reference code."""

from __future__ import annotations

import random
from itertools import combinations

from itdom import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_bipartite(rng: random.Random, a: int, b: int, p: float) -> Graph:
    edges = [
        (i, a + j) for i in range(a) for j in range(b) if rng.random() < p
    ]
    return Graph(a + b, edges)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def girth(g: Graph) -> int | None:
    """Shortest cycle length by deleting each edge and measuring the detour."""
    best = None
    for u, v in g.edges():
        dist = _bfs_distance_without_edge(g, u, v)
        if dist is not None:
            length = dist + 1
            best = length if best is None or length < best else best
    return best


def _bfs_distance_without_edge(g: Graph, src: int, dst: int) -> int | None:
    dist = {src: 0}
    queue = [src]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in range(g.n):
            if not g.has_edge(x, y):
                continue
            if {x, y} == {src, dst}:
                continue
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist.get(dst)
