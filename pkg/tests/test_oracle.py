"""Solvers against the definitional full-sweep oracles."""

import random

import pytest

from itdom import (
    Graph,
    complete,
    cycle,
    domination_number,
    gamma_it,
    gamma_t,
    gamma_tt,
    matching_number,
    naive_oracle,
    omega,
    petersen,
    tau_i,
)
from itdom.oracle import ORACLE_EDGE_LIMIT, OracleLimitError

from helpers import random_graph

SOLVERS = {
    "alpha": lambda g: omega(g).alpha,
    "beta": lambda g: g.n - omega(g).alpha,
    "gamma": domination_number,
    "tau_i": tau_i,
    "gamma_it": lambda g: gamma_it(g)[0],
    "gamma_t": gamma_t,
    "gamma_tt": gamma_tt,
    "matching": matching_number,
}


def test_oracle_known_values():
    assert naive_oracle(petersen(), "alpha") == 4
    assert naive_oracle(cycle(4), "gamma") == 2
    assert naive_oracle(cycle(4), "gamma_t") == 2
    assert naive_oracle(Graph(1), "gamma_t") is None
    assert naive_oracle(petersen(), "matching") == 5


def test_oracle_limits():
    with pytest.raises(OracleLimitError, match="16 vertices"):
        naive_oracle(Graph(17), "alpha")
    with pytest.raises(OracleLimitError, match="edges"):
        naive_oracle(complete(8), "matching")  # 28 edges
    with pytest.raises(ValueError, match="unknown oracle invariant"):
        naive_oracle(cycle(4), "chromatic")


def test_all_solvers_match_oracle_on_seeded_random_graphs():
    rng = random.Random(90210)
    for _ in range(120):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.75]))
        for which, solver in SOLVERS.items():
            if which == "matching" and g.m > ORACLE_EDGE_LIMIT:
                continue
            assert solver(g) == naive_oracle(g, which), (which, g.edges(), n)


def test_omega_family_matches_naive_enumeration():
    from itdom.oracle import _max_independent_sets

    rng = random.Random(808)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), 0.4)
        alpha, sets = _max_independent_sets(g)
        fam = omega(g)
        assert fam.alpha == alpha
        assert sorted(fam.sets) == sorted(
            sum(1 << v for v in s) for s in sets
        )
