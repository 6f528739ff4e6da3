"""Zielonka's recursive algorithm, formulated as alternating greatest and
least fixed points over subgames with terminal Win/Lose colors, plus
extraction of classical signatures from the least-fixed-point stages.

Subgames never copy the arena: they are masks (active set + terminal
colors + priority cap) over one base game, so vertex ids stay stable
throughout the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game_core import ADAM, EVE, ParityGame, Region, require_valid

LESS = -1
EQUAL = 0
GREATER = 1

TOP = "TOP"  # signature value for vertices Eve loses


@dataclass(frozen=True)
class SubGame:
    """Masked view of ``base``: only ``active`` vertices are in play,
    ``terminal_win``/``terminal_lose`` stop the game immediately, and all
    active priorities are <= ``priority_cap``."""

    base: ParityGame
    active: frozenset[int]
    terminal_win: frozenset[int]
    terminal_lose: frozenset[int]
    priority_cap: int


@dataclass(frozen=True)
class SignatureTuple:
    """Element of [0, n]^{d/2}; position i holds the component for odd
    priority d-1-2i (most significant first)."""

    values: tuple[int, ...]


def tuple_compare(x: SignatureTuple, y: SignatureTuple, p: int, d: int) -> int:
    """Lexicographic comparison of the restrictions to odd priorities >= p,
    most significant (largest priority) first."""
    if len(x.values) != len(y.values):
        raise ValueError("mismatched tuple lengths")
    keep = d // 2 - p // 2  # number of odd priorities in [p, d]
    a, b = x.values[:keep], y.values[:keep]
    return LESS if a < b else GREATER if a > b else EQUAL


def pre(sg: SubGame, U: frozenset[int] | set[int]) -> frozenset[int]:
    """Active vertices from which Eve can force entering U in one step:
    her vertices need some successor in U, Adam's need all of them there."""
    g = sg.base
    out = set()
    for v in sg.active:
        succs = g.successors[v]
        if g.owner[v] == EVE:
            if any(w in U for w in succs):
                out.add(v)
        else:
            if all(w in U for w in succs):
                out.add(v)
    return frozenset(out)


def _first_succ_in(g: ParityGame, v: int, target) -> int:
    for w in g.successors[v]:
        if w in target:
            return w
    raise AssertionError(f"vertex {v} has no successor in the target set")


def _reach_safe(sg: SubGame) -> tuple[frozenset[int], dict[int, int]]:
    """Attractor to the Win terminals plus the Eve choices realizing it."""
    g = sg.base
    u: frozenset[int] = sg.terminal_win
    sigma: dict[int, int] = {}
    while True:
        added = pre(sg, u) - u
        if not added:
            return frozenset(u & sg.active), sigma
        for v in added:
            if g.owner[v] == EVE:
                sigma[v] = _first_succ_in(g, v, u)
        u = u | added


def solve_reach_safe(sg: SubGame) -> frozenset[int]:
    """Attractor base case: least fixed point of U -> terminal_win | pre(U),
    i.e. the active vertices from which Eve forces reaching a Win terminal
    without touching a Lose terminal."""
    return _reach_safe(sg)[0]


def _solve(sg: SubGame) -> tuple[frozenset[int], dict[int, int]]:
    """Winning active vertices plus a positional Eve strategy on them."""
    if not sg.active:
        return frozenset(), {}
    p = sg.priority_cap
    g = sg.base
    if p == 1 and all(g.priority[v] == 1 for v in sg.active):
        return _reach_safe(sg)
    if p % 2 == 0:
        return _solve_even(sg)
    return _solve_odd(sg)


def _solve_even(sg: SubGame) -> tuple[frozenset[int], dict[int, int]]:
    g = sg.base
    p = sg.priority_cap
    vp = frozenset(v for v in sg.active if g.priority[v] == p)
    rest = sg.active - vp
    y = sg.active | sg.terminal_win
    while True:
        win_k = pre(sg, y) & vp
        lose_k = vp - win_k
        lower, lower_sigma = _solve(SubGame(
            g, rest, sg.terminal_win | win_k, sg.terminal_lose | lose_k, p - 1))
        y_new = sg.terminal_win | win_k | lower
        if y_new == y:
            # p is even: any successor inside the final winning set will do
            sigma = dict(lower_sigma)
            for v in win_k:
                if g.owner[v] == EVE:
                    sigma[v] = _first_succ_in(g, v, y)
            return frozenset(y - sg.terminal_win), sigma
        y = y_new


def _solve_odd(
    sg: SubGame, stages: list[frozenset[int]] | None = None
) -> tuple[frozenset[int], dict[int, int]]:
    g = sg.base
    p = sg.priority_cap
    vp = frozenset(v for v in sg.active if g.priority[v] == p)
    rest = sg.active - vp
    x: frozenset[int] = frozenset()
    # p is odd: every vertex keeps the choice from the stage it first
    # entered -- priority-p vertices step back into the previous stage and
    # lower vertices use the sub-strategy of their entry iteration -- so
    # the stage index never increases along a play and strictly decreases
    # at each visit to p, making p occur only finitely often
    sigma: dict[int, int] = {}
    while True:
        win_k = pre(sg, x) & vp
        for v in win_k:
            if g.owner[v] == EVE and v not in sigma:
                sigma[v] = _first_succ_in(g, v, x)
        lose_k = vp - win_k
        lower, lower_sigma = _solve(SubGame(
            g, rest, sg.terminal_win | win_k, sg.terminal_lose | lose_k, p - 1))
        for v, w in lower_sigma.items():
            sigma.setdefault(v, w)
        x_new = sg.terminal_win | win_k | lower
        if stages is not None:
            stages.append(x_new)
        if x_new == x:
            winners = frozenset(x - sg.terminal_win)
            return winners, {v: w for v, w in sigma.items() if v in winners}
        x = x_new


def solve_even(sg: SubGame) -> frozenset[int]:
    """Greatest fixed point (the priority cap p is even): iterate downward
    from everything-possibly-winning; at each stage the priority-p vertices
    become terminal (Win if in pre(Y), Lose otherwise) and the rest is
    solved recursively with cap p-1."""
    return _solve_even(sg)[0]


def solve_odd(sg: SubGame, stages: list[frozenset[int]] | None = None) -> frozenset[int]:
    """Least fixed point (the priority cap p is odd), iterating upward from
    the empty seed.  When ``stages`` is given, the non-decreasing stage
    sequence X_0 <= X_1 <= ... (terminal Win vertices included) is appended
    to it; signature extraction reads component values off these stages."""
    return _solve_odd(sg, stages)[0]


def _solve_full(g: ParityGame) -> tuple[Region, dict[int, int]]:
    all_verts = frozenset(g.vertices())
    sg = SubGame(g, all_verts, frozenset(), frozenset(), max(g.priority))
    eve, sigma = _solve(sg)
    return Region(eve, all_verts - eve), sigma


def solve_zielonka(g: ParityGame) -> Region:
    """Winning regions via the recursive algorithm (d-1 alternating fixed
    points, dispatched on the parity of the top priority present)."""
    require_valid(g)
    return _solve_full(g)[0]


def eve_winning_strategy(g: ParityGame) -> dict[int, int]:
    """Positional strategy for Eve, defined exactly on the Eve-owned
    vertices of her winning region, assembled from the recursion."""
    require_valid(g)
    return _solve_full(g)[1]


def _restrict_to_strategy(g: ParityGame, sigma: dict[int, int]) -> ParityGame:
    succs = tuple(
        (sigma[v],) if v in sigma else g.successors[v] for v in g.vertices())
    return ParityGame(g.d, g.owner, g.priority, succs, g.names)


def extract_signature(g: ParityGame) -> dict[int, SignatureTuple | str]:
    """Classical signature from the least-fixed-point stage sequences.

    A single positional winning strategy is fixed first and Eve's moves on
    her winning region are frozen to it; running the per-priority stage
    iterations on independent Eve choices can pick different witnesses for
    different priorities and break the lexicographic conditions.

    For each odd priority p, the priority-<=p part of the restricted game
    is re-solved with terminals taken from the full-game winning regions
    restricted to priorities strictly above p; component p of mu(v) is the
    first stage index containing v.  Vertices in Adam's region map to TOP.
    """
    require_valid(g)
    region, sigma = _solve_full(g)
    eve, adam = region.eve_wins, region.adam_wins
    gs = _restrict_to_strategy(g, sigma)
    h = g.d // 2
    comp = {v: [0] * h for v in eve}
    for i, p in enumerate(range(g.d - 1, 0, -2)):
        active = frozenset(v for v in g.vertices() if g.priority[v] <= p)
        win = frozenset(v for v in eve if g.priority[v] > p)
        lose = frozenset(v for v in adam if g.priority[v] > p)
        stages: list[frozenset[int]] = []
        _solve_odd(SubGame(gs, active, win, lose, p), stages=stages)
        for v in eve:
            for k, stage in enumerate(stages):
                if v in stage:
                    comp[v][i] = k
                    break
            else:
                raise AssertionError(
                    f"vertex {v} won by Eve but missing from all stages at p={p}")
    mu: dict[int, SignatureTuple | str] = {v: TOP for v in adam}
    for v in eve:
        mu[v] = SignatureTuple(tuple(comp[v]))
    return mu
