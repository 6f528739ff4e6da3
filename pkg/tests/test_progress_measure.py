import random

import pytest

from paritytree.game_core import (
    ADAM,
    EVE,
    EVEN,
    Cycle,
    ParityGame,
    classify_cycle,
    generate_random_game,
)
from paritytree.oracle import solve_bruteforce
from paritytree.progress_measure import (
    LiftTable,
    lift_value,
    strategy_from_measure,
    tree_size,
    validate_signature,
    value_iteration,
    value_leq,
    winning_region_from_measure,
)
from paritytree.universal_tree import (
    TOP,
    leaf_codes,
    make_naive_tree,
    make_succinct_tree,
)
from paritytree.zielonka import solve_zielonka


def make(d, owner, priority, successors):
    return ParityGame(d, tuple(owner), tuple(priority),
                      tuple(tuple(s) for s in successors))


class TestValueOrder:
    def test_total_order(self):
        assert value_leq((0, 0), (0, 1))
        assert value_leq((0, 1), (1, 0))
        assert not value_leq((1, 0), (0, 1))
        assert value_leq((1, 0), (1, 0))

    def test_top_is_greatest(self):
        assert value_leq((5, 5), TOP)
        assert value_leq(TOP, TOP)
        assert not value_leq(TOP, (5, 5))


class TestLiftValue:
    def setup_method(self):
        self.tree = make_naive_tree(3, 1)  # leaves (0,), (1,), (2,)

    def test_eve_takes_minimum_option(self):
        g = make(2, [EVE, EVE, EVE], [0, 0, 0], [(1, 2), (1,), (2,)])
        mu = [(0,), (1,), (2,)]
        assert lift_value(g, self.tree, mu, 0) == (1,)

    def test_adam_takes_maximum_option(self):
        g = make(2, [ADAM, EVE, EVE], [0, 0, 0], [(1, 2), (1,), (2,)])
        mu = [(0,), (1,), (2,)]
        assert lift_value(g, self.tree, mu, 0) == (2,)

    def test_odd_priority_is_strict(self):
        g = make(2, [EVE, EVE], [1, 0], [(1,), (1,)])
        mu = [(0,), (1,)]
        assert lift_value(g, self.tree, mu, 0) == (2,)
        mu = [(0,), (2,)]
        assert lift_value(g, self.tree, mu, 0) == TOP

    def test_even_priority_is_nonstrict(self):
        g = make(2, [EVE, EVE], [0, 0], [(1,), (1,)])
        mu = [(0,), (2,)]
        assert lift_value(g, self.tree, mu, 0) == (2,)

    def test_joins_with_current_value(self):
        g = make(2, [EVE, EVE], [0, 0], [(1,), (1,)])
        mu = [(2,), (0,)]
        assert lift_value(g, self.tree, mu, 0) == (2,)

    def test_top_successor_forces_top_when_only_option(self):
        g = make(2, [EVE, EVE], [0, 1], [(1,), (1,)])
        mu = [(0,), TOP]
        assert lift_value(g, self.tree, mu, 0) == TOP


class TestLiftLaws:
    def test_inflationary_and_monotone_randomized(self):
        rng = random.Random(11)
        for trial in range(300):
            g = generate_random_game(2 + trial % 5, 2 + 2 * (trial % 3),
                                     (1, 2), trial)
            tree = make_succinct_tree(g.n, g.d // 2)
            codes = list(leaf_codes(tree)) + [TOP]
            table = LiftTable(tree, g.d)
            mu = [rng.choice(codes) for _ in range(g.n)]
            # nu pointwise above mu
            nu = [rng.choice([c for c in codes if value_leq(m, c)]) for m in mu]
            for v in range(g.n):
                lifted = lift_value(g, tree, mu, v, table)
                assert value_leq(mu[v], lifted)  # inflationary
                assert value_leq(lifted, lift_value(g, tree, nu, v, table))


class TestValueIteration:
    def test_matches_zielonka(self):
        for seed in range(120):
            g = generate_random_game(2 + seed % 5, 2 + 2 * (seed % 3), (1, 2), seed)
            expected = solve_zielonka(g)
            for mk in (make_naive_tree, make_succinct_tree):
                tree = mk(g.n, g.d // 2)
                _, region, _ = value_iteration(g, tree)
                assert region == expected, seed

    def test_policy_independence(self):
        for seed in range(40):
            g = generate_random_game(2 + seed % 5, 4, (1, 2), seed)
            tree = make_succinct_tree(g.n, g.d // 2)
            runs = [
                value_iteration(g, tree, policy="fifo")[0],
                value_iteration(g, tree, policy="roundrobin")[0],
                value_iteration(g, tree, policy="random", seed=seed)[0],
                value_iteration(g, tree, policy="random", seed=seed + 1)[0],
            ]
            assert all(mu == runs[0] for mu in runs[1:]), seed

    def test_lift_budget(self):
        for seed in range(60):
            g = generate_random_game(2 + seed % 5, 4, (1, 2), seed)
            tree = make_succinct_tree(g.n, g.d // 2)
            _, _, stats = value_iteration(g, tree)
            assert stats.total <= g.n * tree_size(tree)

    def test_odd_self_loop_lifts_through_entire_tree(self):
        g = make(4, [EVE], [1], [(0,)])
        for tree in (make_naive_tree(3, 2), make_succinct_tree(3, 2)):
            mu, region, stats = value_iteration(g, tree)
            assert mu[0] == TOP
            assert region.adam_wins == frozenset({0})
            # one change per leaf plus the final step to TOP... the walk
            # visits every leaf exactly once, so |T| value changes total
            assert stats.per_vertex[0] == tree_size(tree)

    def test_unknown_policy(self):
        g = make(2, [EVE], [0], [(0,)])
        with pytest.raises(ValueError):
            value_iteration(g, make_naive_tree(1, 1), policy="lifo")

    def test_initial_measure_respected(self):
        g = make(2, [EVE], [0], [(0,)])
        tree = make_naive_tree(2, 1)
        mu, _, stats = value_iteration(g, tree, initial=[(1,)])
        assert mu == [(1,)]
        assert stats.total == 0

    def test_shared_table_reuse(self):
        g = generate_random_game(5, 4, (1, 2), 3)
        tree = make_succinct_tree(g.n, g.d // 2)
        table = LiftTable(tree, g.d)
        a = value_iteration(g, tree, table=table)[0]
        b = value_iteration(g, tree, table=table)[0]
        assert a == b == value_iteration(g, tree)[0]


class TestValidateSignature:
    def test_accepts_fixed_point(self):
        for seed in range(60):
            g = generate_random_game(2 + seed % 5, 4, (1, 2), seed)
            tree = make_succinct_tree(g.n, g.d // 2)
            mu, _, _ = value_iteration(g, tree)
            ok, why = validate_signature(g, tree, mu)
            assert ok, (seed, why)

    def test_rejects_tampered_measure(self):
        g = make(2, [EVE, ADAM], [1, 2], [(1,), (0,)])  # Eve wins both
        tree = make_naive_tree(2, 1)
        mu, _, _ = value_iteration(g, tree)
        bad = list(mu)
        bad[0] = (0,) * tree.height  # breaks strictness at the odd vertex
        ok, failure = validate_signature(g, tree, bad)
        assert not ok
        assert failure[0] == 0

    def test_all_top_is_vacuously_valid(self):
        g = make(2, [EVE], [1], [(0,)])
        ok, _ = validate_signature(g, make_naive_tree(1, 1), [TOP])
        assert ok


class TestStrategyFromMeasure:
    def test_restricted_cycles_are_even(self):
        networkx = pytest.importorskip("networkx")
        for seed in range(60):
            g = generate_random_game(2 + seed % 5, 4, (1, 2), seed + 77)
            tree = make_succinct_tree(g.n, g.d // 2)
            mu, region, _ = value_iteration(g, tree)
            choice = strategy_from_measure(g, tree, mu)
            graph = networkx.DiGraph()
            for v in region.eve_wins:
                outs = [choice[v]] if g.owner[v] == EVE else [
                    w for w in g.successors[v] if w in region.eve_wins]
                for w in outs:
                    graph.add_edge(v, w)
            for cyc in networkx.simple_cycles(graph):
                assert classify_cycle(g, Cycle(tuple(cyc))) == EVEN, seed

    def test_invalid_measure_raises(self):
        g = make(2, [EVE, EVE], [1, 0], [(1,), (1,)])
        tree = make_naive_tree(2, 1)
        with pytest.raises(ValueError):
            strategy_from_measure(g, tree, [(0,), (0,)])


def test_winning_region_from_measure():
    region = winning_region_from_measure([(0, 0), TOP, (1, 2)])
    assert region == winning_region_from_measure([(9, 9), TOP, (0, 0)])
    assert region.eve_wins == frozenset({0, 2})
    assert region.adam_wins == frozenset({1})
