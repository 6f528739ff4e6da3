"""Generic value iteration over an arbitrary universal tree: the per-vertex
lift operator, the fixed-point loop under pluggable selection policies,
signature validation, strategy extraction, and lift-count statistics.

Measure values are leaf codes of the chosen tree, or TOP.  TOP is strictly
greater than every leaf in every p-order, and absorbs: once a vertex hits
TOP it stays there.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field

from .game_core import ADAM, EVE, ParityGame, Region, require_valid
from .universal_tree import (
    TOP,
    LeafCode,
    LevelMap,
    OrderedTree,
    compare_leaves_at,
    leaf_count,
    min_leaf_geq,
)

MeasureValue = LeafCode | str  # a leaf code or TOP

POLICIES = ("fifo", "roundrobin", "random")


def value_leq(a: MeasureValue, b: MeasureValue) -> bool:
    """Total order on measure values: leaf codes lexicographically, TOP on top."""
    if b == TOP:
        return True
    if a == TOP:
        return False
    return a <= b


def _value_max(a: MeasureValue, b: MeasureValue) -> MeasureValue:
    return b if value_leq(a, b) else a


@dataclass
class LiftStats:
    """Bookkeeping for one value-iteration run.  ``total`` counts lifts
    that changed a value, which is the quantity bounded by n * |T|."""

    total: int = 0
    per_vertex: list[int] = field(default_factory=list)
    duration: float = 0.0


class LiftTable:
    """Caches min_leaf_geq answers for one (tree, d) pair; strictness is
    implied by the parity of p.  Sharing a table across many solves over
    the same tree makes sweeps cheap."""

    def __init__(self, tree: OrderedTree, d: int):
        self.tree = tree
        self.lm = LevelMap(d)
        self._cache: dict[tuple[MeasureValue, int], MeasureValue] = {}

    def min_geq(self, target: MeasureValue, p: int) -> MeasureValue:
        key = (target, p)
        hit = self._cache.get(key)
        if hit is None:
            hit = min_leaf_geq(self.tree, target, p, strict=p % 2 == 1, lm=self.lm)
            self._cache[key] = hit
        return hit


def lift_value(
    g: ParityGame,
    tree: OrderedTree,
    mu: list[MeasureValue],
    v: int,
    table: LiftTable | None = None,
) -> MeasureValue:
    """New value for v: Eve takes the best (minimum) successor option,
    Adam the worst (maximum), each option being the least leaf dominating
    that successor's value, strictly when v's priority is odd.

    Adam's case is a max over per-successor minima: each per-successor
    qualifying set is upward closed in the total leaf order, so the least
    leaf dominating all successors is the largest of the per-successor
    least leaves.  The result is joined with the current value so the
    operator is inflationary from any starting measure, not only along
    the all-minimum trajectory.
    """
    if table is None:
        table = LiftTable(tree, g.d)
    p = g.priority[v]
    best: MeasureValue | None = None
    for w in g.successors[v]:
        cand = table.min_geq(mu[w], p)
        if best is None:
            best = cand
        elif g.owner[v] == EVE:
            best = cand if value_leq(cand, best) else best
        else:
            best = _value_max(best, cand)
    assert best is not None  # no dead ends in valid games
    return _value_max(mu[v], best)


def validate_signature(
    g: ParityGame, tree: OrderedTree, mu: list[MeasureValue]
) -> tuple[bool, tuple[int, int, str] | None]:
    """Check the per-vertex dominance conditions directly (independent of
    the lift machinery): Eve vertices need one successor dominated by
    their value, Adam vertices need all of them, strictly at odd
    priorities.  TOP vertices pass vacuously.

    Returns (True, None) or (False, (vertex, successor, reason)).
    """
    lm = LevelMap(g.d)
    for v in g.vertices():
        if mu[v] == TOP:
            continue
        p = g.priority[v]
        strict = p % 2 == 1
        failure: tuple[int, int, str] | None = None
        ok_any = False
        for w in g.successors[v]:
            if mu[w] == TOP:
                holds = False
            else:
                cmp = compare_leaves_at(tree, mu[v], mu[w], p, lm)
                holds = cmp > 0 if strict else cmp >= 0
            if holds:
                ok_any = True
            elif failure is None:
                rel = ">" if strict else ">="
                failure = (v, w, f"mu({v}) is not {rel}_p mu({w}) at p={p}")
            if g.owner[v] == ADAM and not holds:
                return False, (v, w, f"Adam vertex {v}: successor {w} not dominated at p={p}")
        if g.owner[v] == EVE and not ok_any:
            assert failure is not None
            return False, failure
    return True, None


def value_iteration(
    g: ParityGame,
    tree: OrderedTree,
    policy: str = "fifo",
    seed: int | None = None,
    table: LiftTable | None = None,
    initial: list[MeasureValue] | None = None,
) -> tuple[list[MeasureValue], Region, LiftStats]:
    """Run lifts to the least simultaneous fixed point above the initial
    measure (default: everything at the smallest leaf).

    The tree must be (n, d/2)-universal for the answer to be the true
    winning region; a smaller tree still reaches a fixed point but may
    under-approximate Eve's region.

    Policies: "fifo" (worklist, predecessors re-enqueued on change),
    "roundrobin" (cyclic passes), "random" (seeded choice among pending
    vertices).  All policies reach the same fixed point.
    """
    require_valid(g)
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}, expected one of {POLICIES}")
    if table is None:
        table = LiftTable(tree, g.d)
    n = g.n
    l_min = (0,) * tree.height
    mu: list[MeasureValue] = list(initial) if initial is not None else [l_min] * n
    stats = LiftStats(per_vertex=[0] * n)
    started = time.perf_counter()
    preds = g.predecessors()

    def apply(v: int) -> bool:
        new = lift_value(g, tree, mu, v, table)
        if new != mu[v]:
            mu[v] = new
            stats.total += 1
            stats.per_vertex[v] += 1
            return True
        return False

    if policy == "roundrobin":
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if apply(v):
                    changed = True
    else:
        pending = set(range(n))
        queue = deque(range(n))
        rng = random.Random(seed) if policy == "random" else None
        while pending:
            if rng is None:
                v = queue.popleft()
                if v not in pending:
                    continue
            else:
                v = rng.choice(sorted(pending))
            pending.discard(v)
            if apply(v):
                for u in preds[v]:
                    if u not in pending:
                        pending.add(u)
                        queue.append(u)
    stats.duration = time.perf_counter() - started
    region = winning_region_from_measure(mu)
    return mu, region, stats


def winning_region_from_measure(mu: list[MeasureValue]) -> Region:
    """Eve wins exactly at the non-TOP vertices."""
    eve = frozenset(v for v, m in enumerate(mu) if m != TOP)
    return Region(eve, frozenset(range(len(mu))) - eve)


def strategy_from_measure(
    g: ParityGame, tree: OrderedTree, mu: list[MeasureValue]
) -> dict[int, int]:
    """Positional Eve strategy on her non-TOP vertices: the smallest-id
    successor witnessing the dominance condition.  Every cycle the
    strategy allows inside the non-TOP region has an even top priority."""
    lm = LevelMap(g.d)
    choice: dict[int, int] = {}
    for v in g.vertices():
        if g.owner[v] != EVE or mu[v] == TOP:
            continue
        p = g.priority[v]
        strict = p % 2 == 1
        for w in sorted(g.successors[v]):
            if mu[w] == TOP:
                continue
            cmp = compare_leaves_at(tree, mu[v], mu[w], p, lm)
            if cmp > 0 if strict else cmp >= 0:
                choice[v] = w
                break
        else:
            raise ValueError(f"measure does not validate at vertex {v}")
    return choice


def tree_size(tree: OrderedTree) -> int:
    """Number of leaves; the |T| of the lift budget n * |T|."""
    return leaf_count(tree)
