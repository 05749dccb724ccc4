"""Immutable bitset graphs, codecs and standard constructions.

Vertices are integers 0..n-1 and every vertex set is a plain int bitmask,
so set algebra used by the exact solvers is single-word arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_ORDER = 64

NAMED_FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star", "petersen")


class Graph6Error(ValueError):
    """Malformed graph6 text or an encoding request the format cannot express."""


class EdgeListError(ValueError):
    """Malformed edge-list text."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Immutable simple undirected graph on {0, ..., n-1}.

    ``adj[v]`` is the neighbor bitmask of ``v``.  Instances are expected to
    be treated as frozen; all operations below return new graphs.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"graph order must be in [0, {MAX_ORDER}], got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Build a graph from neighbor bitmasks, validating shape and symmetry."""
        n = len(adj)
        if n > MAX_ORDER:
            raise ValueError(f"graph order must be at most {MAX_ORDER}, got {n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} has bits outside [0, {n})")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for u in iter_bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g = cls(0)
        g.n = n
        g.adj = tuple(adj)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("minimum degree undefined for the empty graph")
        return min(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("maximum degree undefined for the empty graph")
        return max(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in iter_bits(rest):
                out.append((u, u + 1 + off))
        return out

    def isolated(self) -> int:
        """Bitmask of degree-zero vertices."""
        return mask_of(v for v in range(self.n) if self.adj[v] == 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Bipartition(NamedTuple):
    """Ordered two-coloring (X, Y) as bitmasks; no edge inside either side."""

    x: int
    y: int


# ---------------------------------------------------------------------------
# graph6 codec
#
# Format: one size byte n+63 for 0 <= n <= 62, then the upper-triangle bits
# x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
# each group offset by 63, zero-padded to a multiple of 6 bits.
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string into a labeled graph.

    Raises Graph6Error with a distinct message for each malformation:
    bad length, out-of-range byte, trailing garbage / nonzero padding.
    """
    if not text:
        raise Graph6Error("empty graph6 string")
    head = ord(text[0])
    if head < 63 or head > 126:
        raise Graph6Error(f"graph6 size byte out of range: {head}")
    if head == 126:
        raise Graph6Error("graph6 orders above 62 are not supported")
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"graph6 body too short: expected {nbytes} bytes, got {len(body)}"
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 body")
    groups = []
    for ch in body:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise Graph6Error(f"graph6 body byte out of range: {ord(ch)}")
        groups.append(val)
    if nbytes:
        pad = nbytes * 6 - nbits
        if groups[-1] & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits in graph6 body")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            group, off = divmod(idx, 6)
            if (groups[group] >> (5 - off)) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a labeled graph as graph6 text (inverse of parse_graph6)."""
    if g.n > 62:
        raise Graph6Error(f"graph6 cannot encode order {g.n} (maximum 62)")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Edge-list codec: first line "n m", then m lines "u v" (0-based).
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise EdgeListError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListError(f"bad edge-list header: {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise EdgeListError(f"bad edge-list header: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise EdgeListError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise EdgeListError(f"bad edge line: {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_adjacency([full & ~g.adj[v] & ~(1 << v) for v in range(g.n)])


def corona(h: Graph) -> Graph:
    """Attach one new pendant vertex to each vertex of ``h``.

    Vertices [0, h.n) induce ``h``; vertex h.n + i is pendant on i.
    """
    if h.n < 1:
        raise ValueError("corona requires at least one vertex")
    if 2 * h.n > MAX_ORDER:
        raise ValueError(f"corona of order {h.n} exceeds the {MAX_ORDER}-vertex limit")
    edges = h.edges()
    edges.extend((i, h.n + i) for i in range(h.n))
    return Graph(2 * h.n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph requires n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph requires both sides nonempty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """The star on k leaves, center 0."""
    if k < 1:
        raise ValueError("star requires k >= 1 leaves")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i--i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def named_graph(family: str, *params: int) -> Graph:
    """Build one of the standard families by name."""
    builders = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "star": star,
        "petersen": petersen,
    }
    if family not in builders:
        raise ValueError(f"unknown graph family {family!r}")
    g = builders[family](*params)
    if g.n > MAX_ORDER:
        raise ValueError(f"resulting order {g.n} exceeds {MAX_ORDER}")
    return g


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_ORDER:
        raise ValueError("disjoint union exceeds the order limit")
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph.from_adjacency(adj)


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``mask``; also returns the original vertex ids."""
    verts = members(mask)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if (mask >> u) & 1 and (mask >> v) & 1
    ]
    return Graph(len(verts), edges), verts


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex v of ``g`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex range")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph.from_adjacency(adj)


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by their minimum vertex."""
    out = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def bipartition(g: Graph) -> Bipartition | None:
    """Deterministic two-coloring, or None for non-bipartite graphs.

    In each component the color class containing the component's minimum
    vertex goes to X, so connected graphs get the side containing vertex 0.
    """
    color = [-1] * g.n
    for comp in components(g):
        root = (comp & -comp).bit_length() - 1
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in iter_bits(g.adj[v]):
                    if color[u] == -1:
                        color[u] = color[v] ^ 1
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            frontier = nxt
    x = mask_of(v for v in range(g.n) if color[v] == 0)
    return Bipartition(x, g.full_mask & ~x)


def pendant_vertices(g: Graph) -> int:
    """Bitmask of all degree-1 vertices."""
    return mask_of(v for v in range(g.n) if g.degree(v) == 1)
