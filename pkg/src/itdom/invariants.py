"""Exact solvers for independence, matching, domination and transversal invariants.

Every minimum-set search walks candidate sizes upward from a proven lower
bound and enumerates fixed-size vertex sets in increasing bitmask order
(Gosper's hack), so the first feasible set is simultaneously the optimum
value witness and the lexicographically least optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Bipartition, Graph, bipartition, iter_bits, members

DEFAULT_OMEGA_CAP = 1_000_000


class SolverLimitError(RuntimeError):
    """An instance exceeds a documented solver resource limit."""


class OmegaCapError(SolverLimitError):
    """More maximum independent sets than the configured materialization cap."""


@dataclass(frozen=True)
class OmegaFamily:
    """All maximum independent sets of one graph, as ascending bitmasks."""

    alpha: int
    sets: tuple[int, ...]


@dataclass(frozen=True)
class InvariantReport:
    """Every invariant of one graph plus one optimal witness mask per invariant."""

    n: int
    alpha: int
    beta: int
    matching: int
    gamma: int
    tau_i: int
    xi: int
    gamma_it: int
    gamma_t: int | None
    gamma_tt: int | None
    core: int
    witnesses: dict[str, int | None]


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("invariant is undefined for the order-0 graph")


def _ksubsets(n: int, k: int) -> Iterator[int]:
    """All k-subsets of [0, n) as bitmasks in increasing numeric order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def omega(g: Graph, max_sets: int = DEFAULT_OMEGA_CAP) -> OmegaFamily:
    """All maximum independent sets, found as maximal cliques of the complement.

    Bron-Kerbosch with pivoting; branches that cannot reach the best size
    found so far are cut, which keeps the family exact while skipping
    maximal-but-not-maximum sets.
    """
    _require_vertices(g)
    full = g.full_mask
    cadj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    best_size = 0
    best: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        nonlocal best_size, best
        if p == 0 and x == 0:
            size = r.bit_count()
            if size > best_size:
                best_size = size
                best = [r]
            elif size == best_size:
                best.append(r)
                if len(best) > max_sets:
                    raise OmegaCapError(
                        f"more than {max_sets} maximum independent sets"
                    )
            return
        if r.bit_count() + p.bit_count() < best_size:
            return
        pivot = -1
        pivot_deg = -1
        for u in iter_bits(p | x):
            deg = (cadj[u] & p).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = u, deg
        sub = p & ~cadj[pivot]
        for v in iter_bits(sub):
            bit = 1 << v
            expand(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return OmegaFamily(alpha=best_size, sets=tuple(sorted(best)))


# ---------------------------------------------------------------------------
# Matching
# ---------------------------------------------------------------------------


def _hopcroft_karp(g: Graph, bip: Bipartition) -> int:
    """Maximum matching size in a bipartite graph via layered augmenting paths."""
    left = members(bip.x)
    inf = g.n + 1
    match = [-1] * g.n
    dist = {}

    def bfs() -> bool:
        queue = []
        for u in left:
            if match[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in iter_bits(g.adj[u]):
                w = match[v]
                if w == -1:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in iter_bits(g.adj[u]):
            w = match[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match[u] = v
                match[v] = u
                return True
        dist[u] = inf
        return False

    size = 0
    while bfs():
        for u in left:
            if match[u] == -1 and dfs(u):
                size += 1
    return size


def _matching_branch_bound(g: Graph, avail: int, memo: dict[int, int]) -> int:
    """Maximum matching size inside ``avail`` by branching on the lowest vertex."""
    live = 0
    for v in iter_bits(avail):
        if g.adj[v] & avail:
            live |= 1 << v
    if live == 0:
        return 0
    cached = memo.get(live)
    if cached is not None:
        return cached
    v = (live & -live).bit_length() - 1
    bit = 1 << v
    best = _matching_branch_bound(g, live & ~bit, memo)
    for u in iter_bits(g.adj[v] & live):
        best = max(
            best, 1 + _matching_branch_bound(g, live & ~bit & ~(1 << u), memo)
        )
    memo[live] = best
    return best


def matching_number(g: Graph) -> int:
    """Maximum matching size; augmenting paths when bipartite, else branch and bound."""
    if g.n == 0:
        return 0
    bip = bipartition(g)
    if bip is not None:
        return _hopcroft_karp(g, bip)
    return _matching_branch_bound(g, g.full_mask, {})


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Lexicographically first maximum matching as an edge list.

    Walks edges in (u, v) order and keeps an edge whenever a maximum
    matching of the remaining graph still completes the target size.
    """
    memo: dict[int, int] = {}
    target = _matching_branch_bound(g, g.full_mask, memo)
    chosen: list[tuple[int, int]] = []
    avail = g.full_mask
    for u, v in g.edges():
        if len(chosen) == target:
            break
        if not ((avail >> u) & 1 and (avail >> v) & 1):
            continue
        rest = avail & ~(1 << u) & ~(1 << v)
        if _matching_branch_bound(g, rest, memo) == target - len(chosen) - 1:
            chosen.append((u, v))
            avail = rest
    return chosen


# ---------------------------------------------------------------------------
# Domination
# ---------------------------------------------------------------------------


def _dominates(closed: Sequence[int], full: int, s: int) -> bool:
    cover = 0
    for v in iter_bits(s):
        cover |= closed[v]
    return cover == full


def domination_number(g: Graph) -> int:
    """Minimum dominating set size via branch and bound on an undominated vertex."""
    _require_vertices(g)
    full = g.full_mask
    closed = [g.closed(v) for v in range(g.n)]
    max_cover = max(c.bit_count() for c in closed)

    # Greedy max-coverage upper bound.
    dominated = 0
    best = 0
    while dominated != full:
        pick = max(range(g.n), key=lambda v: (closed[v] & ~dominated).bit_count())
        dominated |= closed[pick]
        best += 1

    def search(dominated: int, count: int) -> None:
        nonlocal best
        if dominated == full:
            best = min(best, count)
            return
        missing = (full & ~dominated).bit_count()
        if count + (missing + max_cover - 1) // max_cover >= best:
            return
        v = ((full & ~dominated) & -(full & ~dominated)).bit_length() - 1
        for u in iter_bits(closed[v]):
            search(dominated | closed[u], count + 1)

    search(0, 0)
    return best


def domination_sets(g: Graph) -> tuple[int, tuple[int, ...]]:
    """The domination number together with every minimum dominating set."""
    gamma = domination_number(g)
    full = g.full_mask
    closed = [g.closed(v) for v in range(g.n)]
    sets = tuple(
        s for s in _ksubsets(g.n, gamma) if _dominates(closed, full, s)
    )
    return gamma, sets


def core_and_xi(g: Graph, family: OmegaFamily | None = None) -> tuple[int, int]:
    """Intersection of all maximum independent sets and its cardinality."""
    family = family if family is not None else omega(g)
    core = g.full_mask
    for s in family.sets:
        core &= s
    return core, core.bit_count()


# ---------------------------------------------------------------------------
# Transversals
# ---------------------------------------------------------------------------


def _min_hitting_size(sets: Sequence[int]) -> int:
    """Exact minimum hitting set size by branching on the first unhit set."""
    best = 0
    remaining = list(sets)
    used = 0
    # Greedy most-frequent-vertex upper bound.
    while remaining:
        counts: dict[int, int] = {}
        for s in remaining:
            for v in iter_bits(s):
                counts[v] = counts.get(v, 0) + 1
        pick = max(sorted(counts), key=lambda v: counts[v])
        used |= 1 << pick
        remaining = [s for s in remaining if not (s >> pick) & 1]
        best += 1

    def search(unhit: tuple[int, ...], depth: int) -> None:
        nonlocal best
        if not unhit:
            best = min(best, depth)
            return
        if depth + 1 >= best:
            return
        first = unhit[0]
        rest = unhit[1:]
        for v in iter_bits(first):
            search(tuple(s for s in rest if not (s >> v) & 1), depth + 1)

    search(tuple(sets), 0)
    return best


def tau_i(g: Graph, family: OmegaFamily | None = None) -> int:
    """Minimum size of a set meeting every maximum independent set."""
    _require_vertices(g)
    family = family if family is not None else omega(g)
    return _min_hitting_size(family.sets)


def _transversal_witness(g: Graph, family: OmegaFamily, size: int) -> int:
    for s in _ksubsets(g.n, size):
        if all(s & i for i in family.sets):
            return s
    raise AssertionError("no transversal at the computed optimum size")


def gamma_it(g: Graph, family: OmegaFamily | None = None) -> tuple[int, int]:
    """Minimum dominating set meeting every maximum independent set.

    Returns (value, witness); the witness is the least optimum by bitmask
    value.  The size loop starts at max(gamma, tau_i) and, for graphs
    without isolated vertices, cannot pass beta + 1.
    """
    _require_vertices(g)
    family = family if family is not None else omega(g)
    full = g.full_mask
    closed = [g.closed(v) for v in range(g.n)]
    low = max(domination_number(g), _min_hitting_size(family.sets))
    high = g.n if g.isolated() else min(g.n, (g.n - family.alpha) + 1)
    for k in range(low, high + 1):
        for s in _ksubsets(g.n, k):
            if _dominates(closed, full, s) and all(s & i for i in family.sets):
                return k, s
    raise AssertionError("no independent transversal dominating set found")


def gamma_it_sets(g: Graph, family: OmegaFamily | None = None) -> tuple[int, tuple[int, ...]]:
    """The optimum value together with every optimal witness."""
    family = family if family is not None else omega(g)
    value, _ = gamma_it(g, family)
    full = g.full_mask
    closed = [g.closed(v) for v in range(g.n)]
    sets = tuple(
        s
        for s in _ksubsets(g.n, value)
        if _dominates(closed, full, s) and all(s & i for i in family.sets)
    )
    return value, sets


# ---------------------------------------------------------------------------
# Total domination
# ---------------------------------------------------------------------------


def _totally_dominates(g: Graph, s: int) -> bool:
    cover = 0
    for v in iter_bits(s):
        cover |= g.adj[v]
    return cover == g.full_mask


def gamma_t(g: Graph) -> int | None:
    """Minimum total dominating set size; None when an isolated vertex exists."""
    if g.n == 0 or g.isolated():
        return None
    for k in range(2, g.n + 1):
        for s in _ksubsets(g.n, k):
            if _totally_dominates(g, s):
                return k
    raise AssertionError("no total dominating set found")


def gamma_tt(g: Graph, family: OmegaFamily | None = None) -> int | None:
    """Minimum total dominating set meeting every maximum independent set."""
    if g.n == 0 or g.isolated():
        return None
    family = family if family is not None else omega(g)
    low = max(2, _min_hitting_size(family.sets))
    for k in range(low, g.n + 1):
        for s in _ksubsets(g.n, k):
            if _totally_dominates(g, s) and all(s & i for i in family.sets):
                return k
    raise AssertionError("no independent transversal total dominating set found")


def _total_witness(g: Graph, family: OmegaFamily | None, size: int) -> int:
    for s in _ksubsets(g.n, size):
        if _totally_dominates(g, s) and (
            family is None or all(s & i for i in family.sets)
        ):
            return s
    raise AssertionError("no witness at the computed optimum size")


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------


def compute_report(g: Graph) -> InvariantReport:
    """Compute every invariant and a deterministic witness for each."""
    _require_vertices(g)
    family = omega(g)
    alpha = family.alpha
    beta = g.n - alpha
    match_edges = maximum_matching(g)
    matching = matching_number(g)
    assert matching == len(match_edges)
    gamma, gamma_list = domination_sets(g)
    core, xi = core_and_xi(g, family)
    tau = tau_i(g, family)
    git_value, git_witness = gamma_it(g, family)
    gt = gamma_t(g)
    gtt = gamma_tt(g, family)

    assert alpha + beta == g.n
    assert max(gamma, tau) <= git_value
    assert (gt is None) == bool(g.isolated() or g.n == 0)

    matched = 0
    for u, v in match_edges:
        matched |= (1 << u) | (1 << v)
    witnesses: dict[str, int | None] = {
        "alpha": family.sets[0],
        "beta": g.full_mask & ~family.sets[0],
        "matching": matched,
        "gamma": gamma_list[0],
        "tau_i": _transversal_witness(g, family, tau),
        "gamma_it": git_witness,
        "gamma_t": None if gt is None else _total_witness(g, None, gt),
        "gamma_tt": None if gtt is None else _total_witness(g, family, gtt),
    }
    return InvariantReport(
        n=g.n,
        alpha=alpha,
        beta=beta,
        matching=matching,
        gamma=gamma,
        tau_i=tau,
        xi=xi,
        gamma_it=git_value,
        gamma_t=gt,
        gamma_tt=gtt,
        core=core,
        witnesses=witnesses,
    )
