"""Machine-checkable verdicts for the verified inequalities and characterizations.

Each registry entry evaluates its hypotheses on a graph and then the claim,
yielding NotApplicable, Holds or Violated.  Entries marked ``proven`` must
never be Violated; ``refutable`` entries exist so the harness can report
genuine counterexamples without failing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .catalog import canonical_form, enumerate_connected_graphs, CatalogEntry
from .graphs import (
    Bipartition,
    Graph,
    bipartition,
    complement,
    components,
    cycle,
    encode_graph6,
    induced_subgraph,
    is_complete,
    is_connected,
    is_tree,
    iter_bits,
    members,
    pendant_vertices,
)
from .invariants import (
    OmegaFamily,
    SolverLimitError,
    domination_number,
    gamma_it,
    gamma_t,
    gamma_tt,
    matching_number,
    core_and_xi,
    omega,
    tau_i,
)

CHECK_MAX_ORDER = 20


class Status(enum.Enum):
    NOT_APPLICABLE = "NotApplicable"
    HOLDS = "Holds"
    VIOLATED = "Violated"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    status: Status
    witness: dict
    graph6: str


@dataclass(frozen=True)
class CharacterizationResult:
    holds: bool
    witness: dict


class InvariantCache:
    """Lazily computed invariants shared by all checks on one graph."""

    def __init__(self, g: Graph) -> None:
        self.g = g

    @cached_property
    def family(self) -> OmegaFamily:
        return omega(self.g)

    @cached_property
    def alpha(self) -> int:
        return self.family.alpha

    @cached_property
    def beta(self) -> int:
        return self.g.n - self.alpha

    @cached_property
    def matching(self) -> int:
        return matching_number(self.g)

    @cached_property
    def gamma(self) -> int:
        return domination_number(self.g)

    @cached_property
    def tau(self) -> int:
        return tau_i(self.g, self.family)

    @cached_property
    def xi(self) -> int:
        return core_and_xi(self.g, self.family)[1]

    @cached_property
    def gamma_it(self) -> int:
        return gamma_it(self.g, self.family)[0]

    @cached_property
    def gamma_t(self) -> int | None:
        return gamma_t(self.g)

    @cached_property
    def gamma_tt(self) -> int | None:
        return gamma_tt(self.g, self.family)

    @cached_property
    def bip(self) -> Bipartition | None:
        return bipartition(self.g)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def pendants(self) -> int:
        return pendant_vertices(self.g)

    @cached_property
    def has_isolated(self) -> bool:
        return bool(self.g.isolated())


# A check returns (None, info) when hypotheses fail, else (claim_ok, witness).
CheckFn = Callable[[Graph, InvariantCache], tuple[bool | None, dict]]


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    expected: str  # "proven" | "refutable"
    claim: str
    fn: CheckFn


def pendant_condition(g: Graph, x_mask: int) -> CharacterizationResult:
    """Every vertex of X is pendant or has at least two pendant neighbors.

    X must be an independent set (one side of a bipartition).
    """
    for v in iter_bits(x_mask):
        if g.adj[v] & x_mask:
            raise ValueError("X is not independent")
    pend = pendant_vertices(g)
    failing = [
        v
        for v in iter_bits(x_mask)
        if g.degree(v) != 1 and (g.adj[v] & pend).bit_count() < 2
    ]
    return CharacterizationResult(
        holds=not failing,
        witness={"pendants": members(pend), "failing_vertices": failing},
    )


def _strict_pendant_condition(g: Graph, x_mask: int) -> bool:
    # Original, incomplete form: two pendant neighbors required of every x.
    pend = pendant_vertices(g)
    return all((g.adj[v] & pend).bit_count() >= 2 for v in iter_bits(x_mask))


def is_corona(g: Graph) -> Graph | None:
    """Recover H when g is H with one pendant attached to every vertex.

    Present iff the degree-1 vertices are a perfect matching onto the rest,
    each non-pendant vertex having exactly one pendant neighbor.  The
    two-vertex complete graph counts, with a single vertex recovered.
    """
    if g.n < 2 or g.n % 2:
        return None
    if g.n == 2:
        return Graph(1) if g.m == 1 else None
    pend = pendant_vertices(g)
    if pend.bit_count() != g.n // 2:
        return None
    rest = g.full_mask & ~pend
    for q in iter_bits(rest):
        if (g.adj[q] & pend).bit_count() != 1:
            return None
    for p in iter_bits(pend):
        if not g.adj[p] & rest:
            return None
    return induced_subgraph(g, rest)[0]


def figure1_graph() -> Graph:
    """Five-vertex bipartite witness separating the two pendant conditions.

    X = {0, 1}, Y = {2, 3, 4}; vertex 0 is pendant on 2, vertex 1 is
    adjacent to all of Y.  Its domination number is 2 = |X| while the
    least dominating transversal has 3 vertices.
    """
    return Graph(5, [(0, 2), (1, 2), (1, 3), (1, 4)])


# ---------------------------------------------------------------------------
# Registry checks
# ---------------------------------------------------------------------------


def _eq1(g: Graph, c: InvariantCache):
    return c.alpha + c.beta == g.n, {"alpha": c.alpha, "beta": c.beta, "n": g.n}


def _eq2(g: Graph, c: InvariantCache):
    ok = 2 * c.matching <= g.n and c.matching <= c.beta
    return ok, {"matching": c.matching, "beta": c.beta, "n": g.n}


def _eq3(g: Graph, c: InvariantCache):
    if c.bip is None:
        return None, {"reason": "not bipartite"}
    return c.matching == c.beta, {"matching": c.matching, "beta": c.beta}


def _eq4(g: Graph, c: InvariantCache):
    return c.gamma <= c.alpha, {"gamma": c.gamma, "alpha": c.alpha}


def _eq5(g: Graph, c: InvariantCache):
    if c.has_isolated:
        return None, {"reason": "isolated vertex"}
    return c.gamma <= c.beta, {"gamma": c.gamma, "beta": c.beta}


def _eq6(g: Graph, c: InvariantCache):
    ok = max(c.gamma, c.tau) <= c.gamma_it
    return ok, {"gamma": c.gamma, "tau_i": c.tau, "gamma_it": c.gamma_it}


def _t11(g: Graph, c: InvariantCache):
    if c.has_isolated:
        return None, {"reason": "isolated vertex"}
    return c.gamma_it <= c.beta + 1, {"gamma_it": c.gamma_it, "beta": c.beta}


def _t12(g: Graph, c: InvariantCache):
    if not c.connected or is_complete(g) or 2 * c.alpha < g.n:
        return None, {"reason": "needs connected, non-complete, alpha >= n/2"}
    # Bound is ceil(n/2): the floor reading fails on odd orders (already P3).
    return c.gamma_it <= (g.n + 1) // 2, {"gamma_it": c.gamma_it, "n": g.n}


def _l21(g: Graph, c: InvariantCache):
    if is_complete(g):
        return None, {"reason": "complete graph"}
    comp = complement(g)
    if any(comp.adj[u] & comp.adj[v] for u, v in comp.edges()):
        return None, {"reason": "complement has a triangle"}
    comp_alpha = omega(comp).alpha
    cover = g.n - comp_alpha
    ok = c.tau == cover and c.gamma_it >= cover
    return ok, {
        "tau_i": c.tau,
        "complement_cover_number": cover,
        "gamma_it": c.gamma_it,
    }


def _t24(g: Graph, c: InvariantCache):
    # The single-vertex graph meets the literal hypotheses yet has xi = 1 < 2;
    # the result's implicit domain is graphs with at least one edge.
    if not c.connected or g.n < 2 or c.alpha <= c.matching:
        return None, {"reason": "needs connected with an edge and alpha > matching"}
    ok = c.xi >= c.alpha - c.matching + 1
    return ok, {"xi": c.xi, "alpha": c.alpha, "matching": c.matching}


def _c24a(g: Graph, c: InvariantCache):
    if not c.connected or c.alpha <= c.matching:
        return None, {"reason": "needs connected with alpha > matching"}
    return c.tau == 1, {"tau_i": c.tau}


def _t25(g: Graph, c: InvariantCache):
    if c.bip is None or c.bip.x.bit_count() == c.bip.y.bit_count():
        return None, {"reason": "needs bipartite with unequal sides"}
    return c.gamma_it <= c.gamma + 1, {"gamma_it": c.gamma_it, "gamma": c.gamma}


def _t26(g: Graph, c: InvariantCache):
    if not c.connected or c.bip is None:
        return None, {"reason": "needs connected bipartite"}
    ok = c.gamma_it in (c.gamma, c.gamma + 1)
    return ok, {"gamma_it": c.gamma_it, "gamma": c.gamma}


def _tree(g: Graph, c: InvariantCache):
    if not is_tree(g):
        return None, {"reason": "not a tree"}
    ok = c.gamma_it in (c.gamma, c.gamma + 1)
    return ok, {"gamma_it": c.gamma_it, "gamma": c.gamma}


def _sand(g: Graph, c: InvariantCache):
    if not c.connected:
        return None, {"reason": "not connected"}
    delta = g.min_degree()
    ok = c.gamma <= c.gamma_it <= c.gamma + delta
    return ok, {"gamma": c.gamma, "gamma_it": c.gamma_it, "delta": delta}


def _side_labelings(g: Graph, c: InvariantCache) -> list[tuple[int, int]]:
    """Bipartition labelings (X, Y) with |X| <= |Y| and gamma = |X|."""
    if c.bip is None:
        return []
    out = []
    for x, y in ((c.bip.x, c.bip.y), (c.bip.y, c.bip.x)):
        if x.bit_count() <= y.bit_count() and c.gamma == x.bit_count():
            if (x, y) not in out:
                out.append((x, y))
    return out


def _t32(g: Graph, c: InvariantCache):
    labelings = _side_labelings(g, c)
    if not labelings:
        return None, {"reason": "needs bipartite with gamma equal to the small side"}
    jump = c.gamma_it == c.gamma + 1
    for x, y in labelings:
        cond = pendant_condition(g, x)
        if jump != cond.holds:
            return False, {
                "X": members(x),
                "gamma": c.gamma,
                "gamma_it": c.gamma_it,
                "condition_holds": cond.holds,
                "condition_witness": cond.witness,
            }
    return True, {"gamma": c.gamma, "gamma_it": c.gamma_it}


def _t31_orig(g: Graph, c: InvariantCache):
    labelings = _side_labelings(g, c)
    if not labelings:
        return None, {"reason": "needs bipartite with gamma equal to the small side"}
    jump = c.gamma_it == c.gamma + 1
    for x, y in labelings:
        cond = _strict_pendant_condition(g, x)
        if jump != cond:
            return False, {
                "X": members(x),
                "gamma": c.gamma,
                "gamma_it": c.gamma_it,
                "strict_condition_holds": cond,
            }
    return True, {"gamma": c.gamma, "gamma_it": c.gamma_it}


def _component_shape(g: Graph, comp: int) -> str | None:
    """Classify one component as "C4", "corona" or None."""
    sub, _ = induced_subgraph(g, comp)
    if sub.n == 4 and sub.m == 4 and all(sub.degree(v) == 2 for v in range(4)):
        return "C4"
    if is_corona(sub) is not None:
        return "corona"
    return None


def _t33(g: Graph, c: InvariantCache):
    if g.n == 0 or g.n % 2 or c.has_isolated:
        return None, {"reason": "needs even order without isolated vertices"}
    shapes = [_component_shape(g, comp) for comp in components(g)]
    structured = all(shape is not None for shape in shapes)
    half = c.gamma == g.n // 2
    ok = half == structured
    return ok, {"gamma": c.gamma, "n": g.n, "components": shapes}


def _c34(g: Graph, c: InvariantCache):
    if not c.connected or g.n < 4 or g.n % 2 or c.gamma != g.n // 2:
        return None, {"reason": "needs connected even order >= 4 with gamma = n/2"}
    return c.gamma_it == g.n // 2, {"gamma_it": c.gamma_it, "n": g.n}


def _t35(g: Graph, c: InvariantCache):
    if c.bip is None or g.n == 0 or g.n % 2:
        return None, {"reason": "needs bipartite of even order"}
    if any(comp.bit_count() <= 2 for comp in components(g)):
        return None, {"reason": "has a component of order at most 2"}
    half = g.n // 2
    case1 = c.gamma == half
    case2 = False
    if c.gamma == half - 1:
        sizes = sorted((c.bip.x.bit_count(), c.bip.y.bit_count()))
        if sizes[0] == half - 1 and sizes[0] != sizes[1]:
            small = c.bip.x if c.bip.x.bit_count() == sizes[0] else c.bip.y
            case2 = pendant_condition(g, small).holds
    if not case1 and not case2:
        return None, {"reason": "neither hypothesis case applies"}
    return c.gamma_it == half, {
        "gamma_it": c.gamma_it,
        "gamma": c.gamma,
        "case": 1 if case1 else 2,
    }


def _t41(g: Graph, c: InvariantCache):
    if not c.connected or g.n < 3:
        return None, {"reason": "needs connected order >= 3"}
    assert c.gamma_t is not None
    return 3 * c.gamma_t <= 2 * g.n, {"gamma_t": c.gamma_t, "n": g.n}


def _gtt(g: Graph, c: InvariantCache):
    if c.has_isolated or g.n == 0:
        return None, {"reason": "isolated vertex"}
    assert c.gamma_tt is not None
    return c.gamma_tt >= c.gamma_it, {"gamma_tt": c.gamma_tt, "gamma_it": c.gamma_it}


def _conj1(g: Graph, c: InvariantCache):
    if not c.connected or is_complete(g):
        return None, {"reason": "needs connected non-complete"}
    bound = (g.n + 1) // 2
    return c.gamma_it <= bound, {"gamma_it": c.gamma_it, "bound": bound, "n": g.n}


_REGISTRY = (
    Theorem("EQ1", "proven", "alpha + beta = n", _eq1),
    Theorem("EQ2", "proven", "matching <= min(n/2, beta)", _eq2),
    Theorem("EQ3", "proven", "bipartite: matching = beta", _eq3),
    Theorem("EQ4", "proven", "gamma <= alpha", _eq4),
    Theorem("EQ5", "proven", "no isolated vertices: gamma <= beta", _eq5),
    Theorem("EQ6", "proven", "max(gamma, tau_i) <= gamma_it", _eq6),
    Theorem("T1.1", "proven", "no isolated vertices: gamma_it <= beta + 1", _t11),
    Theorem(
        "T1.2",
        "proven",
        "connected non-complete with alpha >= n/2: gamma_it <= n/2",
        _t12,
    ),
    Theorem(
        "L2.1",
        "proven",
        "complement of triangle-free, non-complete: tau_i equals the "
        "complement cover number and bounds gamma_it below",
        _l21,
    ),
    Theorem(
        "T2.4",
        "proven",
        "connected with alpha > matching: xi >= alpha - matching + 1",
        _t24,
    ),
    Theorem("C2.4a", "proven", "connected with alpha > matching: tau_i = 1", _c24a),
    Theorem("T2.5", "proven", "bipartite, unequal sides: gamma_it <= gamma + 1", _t25),
    Theorem("T2.6", "proven", "connected bipartite: gamma_it in {gamma, gamma+1}", _t26),
    Theorem("TREE", "proven", "tree: gamma_it in {gamma, gamma+1}", _tree),
    Theorem("SAND", "proven", "connected: gamma <= gamma_it <= gamma + delta", _sand),
    Theorem(
        "T3.2",
        "proven",
        "bipartite, gamma = |X| <= |Y|: gamma_it = gamma+1 iff every x in X "
        "is pendant or has two pendant neighbors",
        _t32,
    ),
    Theorem(
        "T3.1-ORIG",
        "refutable",
        "bipartite, gamma = |X| <= |Y|: gamma_it = gamma+1 iff every x in X "
        "has two pendant neighbors",
        _t31_orig,
    ),
    Theorem(
        "T3.3",
        "proven",
        "even order, no isolated vertices: gamma = n/2 iff every component "
        "is a 4-cycle or a pendant corona",
        _t33,
    ),
    Theorem(
        "C3.4",
        "proven",
        "connected, even n >= 4, gamma = n/2: gamma_it = n/2",
        _c34,
    ),
    Theorem(
        "T3.5",
        "proven",
        "bipartite, even order, components >= 3, case hypotheses: gamma_it = n/2",
        _t35,
    ),
    Theorem("T4.1", "proven", "connected, n >= 3: gamma_t <= 2n/3", _t41),
    Theorem("GTT", "proven", "no isolated vertices: gamma_tt >= gamma_it", _gtt),
    Theorem(
        "CONJ1",
        "refutable",
        "connected non-complete: gamma_it <= ceil(n/2)",
        _conj1,
    ),
)

THEOREMS: dict[str, Theorem] = {t.theorem_id: t for t in _REGISTRY}
PROVEN_IDS = tuple(t.theorem_id for t in _REGISTRY if t.expected == "proven")
REFUTABLE_IDS = tuple(t.theorem_id for t in _REGISTRY if t.expected == "refutable")


def check(theorem_id: str, g: Graph, cache: InvariantCache | None = None) -> TheoremVerdict:
    """Evaluate one registry entry on one graph."""
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    if g.n > CHECK_MAX_ORDER:
        raise SolverLimitError(
            f"theorem checks are limited to {CHECK_MAX_ORDER} vertices"
        )
    g6 = encode_graph6(g)
    if g.n == 0:
        return TheoremVerdict(
            theorem_id, Status.NOT_APPLICABLE, {"reason": "empty graph"}, g6
        )
    cache = cache if cache is not None else InvariantCache(g)
    ok, witness = THEOREMS[theorem_id].fn(g, cache)
    if ok is None:
        return TheoremVerdict(theorem_id, Status.NOT_APPLICABLE, witness, g6)
    status = Status.HOLDS if ok else Status.VIOLATED
    return TheoremVerdict(theorem_id, status, witness, g6)


# ---------------------------------------------------------------------------
# Extremal searches over the catalogs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalResult:
    entry: CatalogEntry
    values: dict[str, int]


SEARCH_MODES = ("max_tau_i", "bipartite_half_gammait")


def search_extremal(mode: str, n: int) -> list[ExtremalResult]:
    """Catalog sweeps behind the open questions.

    max_tau_i lists the connected graphs attaining the largest minimum
    transversal at order n.  bipartite_half_gammait lists the connected
    bipartite graphs of even order n >= 4 whose dominating transversal
    number is n/2, annotated with their domination number.
    """
    if mode not in SEARCH_MODES:
        raise ValueError(f"unknown search mode {mode!r}")
    entries = enumerate_connected_graphs(n)
    if mode == "max_tau_i":
        values = [(entry, tau_i(entry.graph)) for entry in entries]
        top = max(v for _, v in values)
        return [
            ExtremalResult(entry, {"tau_i": v}) for entry, v in values if v == top
        ]
    out = []
    if n < 3 or n % 2:
        return out
    for entry in entries:
        g = entry.graph
        if bipartition(g) is None:
            continue
        value, _ = gamma_it(g)
        if 2 * value == n:
            gamma = domination_number(g)
            assert gamma in (n // 2 - 1, n // 2)
            out.append(ExtremalResult(entry, {"gamma": gamma, "gamma_it": value}))
    return out


def is_c4(g: Graph) -> bool:
    return g.n == 4 and canonical_form(g) == canonical_form(cycle(4))
