import pytest

from paritytree.game_core import ADAM, EVE, ParityGame, generate_random_game
from paritytree.oracle import solve_bruteforce
from paritytree.universal_tree import signature_to_tree
from paritytree.progress_measure import validate_signature
from paritytree.zielonka import (
    EQUAL,
    GREATER,
    LESS,
    TOP,
    SignatureTuple,
    SubGame,
    eve_winning_strategy,
    extract_signature,
    pre,
    solve_odd,
    solve_reach_safe,
    solve_zielonka,
    tuple_compare,
)


def make(d, owner, priority, successors):
    return ParityGame(d, tuple(owner), tuple(priority),
                      tuple(tuple(s) for s in successors))


class TestTupleCompare:
    # with d = 8 the positions hold the components for priorities 7, 5, 3, 1
    def test_full_lexicographic(self):
        x = SignatureTuple((2, 2, 3, 0))
        y = SignatureTuple((1, 5, 5, 5))
        assert tuple_compare(x, y, 1, 8) == GREATER
        assert tuple_compare(y, x, 1, 8) == LESS
        assert tuple_compare(x, x, 1, 8) == EQUAL

    def test_restriction_drops_low_positions(self):
        x = SignatureTuple((2, 2, 3, 0))
        y = SignatureTuple((2, 2, 9, 9))
        # restricted to priorities >= 5 both are (2, 2); p = 4 keeps the
        # same odd positions, p = 3 brings in the third component
        assert tuple_compare(x, y, 5, 8) == EQUAL
        assert tuple_compare(x, y, 4, 8) == EQUAL
        assert tuple_compare(x, y, 3, 8) == LESS

    def test_top_priority_restriction_is_vacuous(self):
        x = SignatureTuple((0, 0))
        y = SignatureTuple((3, 3))
        assert tuple_compare(x, y, 4, 4) == EQUAL

    def test_even_and_odd_priority_same_keep(self):
        x = SignatureTuple((1, 0))
        y = SignatureTuple((0, 9))
        assert tuple_compare(x, y, 3, 4) == GREATER
        assert tuple_compare(x, y, 2, 4) == GREATER

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            tuple_compare(SignatureTuple((1,)), SignatureTuple((1, 2)), 1, 4)


class TestPre:
    def test_eve_needs_one_adam_needs_all(self):
        g = make(2, [EVE, ADAM, EVE], [0, 0, 0], [(1, 2), (1, 2), (2,)])
        sg = SubGame(g, frozenset({0, 1, 2}), frozenset(), frozenset(), 2)
        assert pre(sg, {2}) == frozenset({0, 2})
        assert pre(sg, {1, 2}) == frozenset({0, 1, 2})
        assert pre(sg, set()) == frozenset()

    def test_only_active_vertices_report(self):
        g = make(2, [EVE, EVE], [0, 0], [(1,), (1,)])
        sg = SubGame(g, frozenset({1}), frozenset(), frozenset(), 2)
        assert pre(sg, {1}) == frozenset({1})


class TestReachSafe:
    def test_attractor(self):
        # 0 -> 1 -> terminal win 2; Adam at 1 cannot deviate
        g = make(2, [EVE, ADAM, EVE], [1, 1, 0], [(1,), (2,), (2,)])
        sg = SubGame(g, frozenset({0, 1}), frozenset({2}), frozenset(), 1)
        assert solve_reach_safe(sg) == frozenset({0, 1})

    def test_adam_avoids(self):
        g = make(2, [EVE, ADAM, EVE], [1, 1, 0], [(1,), (0, 2), (2,)])
        sg = SubGame(g, frozenset({0, 1}), frozenset({2}), frozenset(), 1)
        assert solve_reach_safe(sg) == frozenset()


class TestSolve:
    def test_self_loops(self):
        g = make(2, [EVE], [0], [(0,)])
        assert solve_zielonka(g).eve_wins == frozenset({0})
        g = make(2, [EVE], [1], [(0,)])
        assert solve_zielonka(g).adam_wins == frozenset({0})

    def test_forced_cycles(self):
        g = make(2, [EVE, ADAM], [1, 2], [(1,), (0,)])
        assert solve_zielonka(g).eve_wins == frozenset({0, 1})
        g = make(4, [EVE, ADAM], [1, 3], [(1,), (0,)])
        assert solve_zielonka(g).adam_wins == frozenset({0, 1})

    def test_matches_bruteforce_randomized(self):
        for seed in range(300):
            g = generate_random_game(2 + seed % 6, 2 + 2 * (seed % 3), (1, 2), seed + 10_000)
            assert solve_zielonka(g) == solve_bruteforce(g), seed

    def test_rejects_invalid(self):
        g = make(2, [EVE], [0], [()])
        with pytest.raises(ValueError):
            solve_zielonka(g)


class TestStages:
    def test_stage_sequence_is_nondecreasing(self):
        for seed in range(60):
            g = generate_random_game(5, 4, (1, 2), seed)
            p = max(g.priority) | 1
            if p > g.d:
                p -= 2
            active = frozenset(v for v in g.vertices() if g.priority[v] <= p)
            stages = []
            solve_odd(SubGame(g, active, frozenset(), frozenset(), p), stages=stages)
            for earlier, later in zip(stages, stages[1:]):
                assert earlier <= later


class TestStrategy:
    def test_domain_is_eve_owned_winning(self):
        for seed in range(100):
            g = generate_random_game(2 + seed % 5, 4, (1, 2), seed)
            region = solve_zielonka(g)
            sigma = eve_winning_strategy(g)
            assert set(sigma) == {
                v for v in region.eve_wins if g.owner[v] == EVE}
            for v, w in sigma.items():
                assert w in g.successors[v]
                assert w in region.eve_wins


class TestExtractSignature:
    def test_top_exactly_on_adam_region(self):
        for seed in range(80):
            g = generate_random_game(2 + seed % 5, 2 + 2 * (seed % 3), (1, 2), seed)
            region = solve_zielonka(g)
            mu = extract_signature(g)
            assert {v for v in g.vertices() if mu[v] == TOP} == set(region.adam_wins)
            for v in region.eve_wins:
                values = mu[v].values
                assert len(values) == g.d // 2
                assert all(0 <= c <= g.n for c in values)

    def test_signatures_validate(self):
        for seed in range(150):
            g = generate_random_game(2 + seed % 6, 2 + 2 * (seed % 3), (1, 2), seed + 500)
            mu = extract_signature(g)
            tree, codes = signature_to_tree(mu, g.n, g.d)
            as_list = [TOP if mu[v] == TOP else codes[v] for v in g.vertices()]
            ok, why = validate_signature(g, tree, as_list)
            assert ok, (seed, why)

    def test_known_game(self):
        # forced cycle with priorities {1, 2}: the odd vertex must sit one
        # stage later than the even vertex it feeds
        g = make(2, [EVE, ADAM], [1, 2], [(1,), (0,)])
        mu = extract_signature(g)
        assert mu[1].values == (0,)
        assert mu[0].values == (1,)
