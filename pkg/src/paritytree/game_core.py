"""Parity game data model, validation, PGSolver-style I/O, cycle semantics,
and seeded random instance generation.

Conventions used throughout the package:

* vertices are dense ids ``0..n-1``;
* ``owner[v]`` is ``EVE`` (0) or ``ADAM`` (1);
* priorities live in ``[0, d]`` with ``d`` even, ``d >= 2``;
* Eve wins an infinite play iff the largest priority seen infinitely
  often is even (max-parity convention, fixed globally);
* every vertex has at least one successor (dead ends are invalid input).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

EVE = 0
ADAM = 1

EVEN = "even"
ODD = "odd"


class PGParseError(ValueError):
    """Malformed PGSolver input.  ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class ParityGame:
    """Immutable parity game arena.

    ``successors[v]`` is an ordered tuple of successor ids.  ``names`` is
    an optional per-vertex label tuple (entries may be None).
    """

    d: int
    owner: tuple[int, ...]
    priority: tuple[int, ...]
    successors: tuple[tuple[int, ...], ...]
    names: tuple[str | None, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.owner)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.successors)

    def vertices(self) -> range:
        return range(self.n)

    def predecessors(self) -> list[list[int]]:
        """Reverse adjacency, built on demand."""
        preds: list[list[int]] = [[] for _ in range(self.n)]
        for v, succs in enumerate(self.successors):
            for w in succs:
                if 0 <= w < self.n and v not in preds[w]:
                    preds[w].append(v)
        return preds


@dataclass(frozen=True)
class Region:
    """Partition of the vertex set into the two winning regions."""

    eve_wins: frozenset[int]
    adam_wins: frozenset[int]


@dataclass(frozen=True)
class Cycle:
    """A cycle given as the sequence of vertices along it; the edge from the
    last vertex back to the first is implicit."""

    vertices: tuple[int, ...]


def even_priority_bound(max_priority: int) -> int:
    """Smallest valid d covering ``max_priority``: even, >= 2."""
    return max(2, max_priority + (max_priority % 2))


def validate_game(g: ParityGame) -> list[str]:
    """Return every invariant violation as a human-readable string.

    An empty list means the game is valid.  Violations are data, not
    exceptions: callers decide whether to raise.
    """
    violations = []
    n = g.n
    if len(g.priority) != n:
        violations.append(
            f"priority table has {len(g.priority)} entries for {n} vertices")
    if len(g.successors) != n:
        violations.append(
            f"successor table has {len(g.successors)} entries for {n} vertices")
    if g.names is not None and len(g.names) != n:
        violations.append(f"name table has {len(g.names)} entries for {n} vertices")
    if g.d < 2 or g.d % 2 != 0:
        violations.append(f"d={g.d} is not an even number >= 2")
    for v in range(min(n, len(g.owner))):
        if g.owner[v] not in (EVE, ADAM):
            violations.append(f"vertex {v}: owner {g.owner[v]} not in {{0, 1}}")
    for v in range(min(n, len(g.priority))):
        p = g.priority[v]
        if p < 0:
            violations.append(f"vertex {v}: negative priority {p}")
        elif p > g.d:
            violations.append(f"vertex {v}: priority exceeds d ({p} > {g.d})")
    for v in range(min(n, len(g.successors))):
        succs = g.successors[v]
        if len(succs) == 0:
            violations.append(f"dead end at vertex {v}")
        for w in succs:
            if not 0 <= w < n:
                violations.append(f"vertex {v}: successor {w} out of range [0, {n})")
    return violations


def require_valid(g: ParityGame) -> None:
    violations = validate_game(g)
    if violations:
        raise ValueError("invalid game: " + "; ".join(violations))


_VERTEX_RE = re.compile(
    r"^(\d+)\s+(\d+)\s+([01])\s+(\d+(?:\s*,\s*\d+)*)(?:\s+\"([^\"]*)\")?$"
)


def parse_pgsolver(text: str) -> ParityGame:
    """Parse the line-oriented PGSolver-style format.

    Grammar: a header ``parity <max-vertex-id>;`` followed by one line per
    vertex, ``<id> <priority> <owner> <succ>(,<succ>)* ("name")? ;`` with
    owner 0 = Eve and 1 = Adam.  Whitespace-tolerant.  The priority bound d
    is the maximum priority rounded up to the nearest even number (>= 2).
    """
    lines = text.splitlines()
    header_seen = False
    records: dict[int, tuple[int, int, tuple[int, ...], str | None]] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if not line.endswith(";"):
            raise PGParseError(lineno, "missing terminating ';'")
        body = line[:-1].strip()
        if not header_seen:
            m = re.match(r"^parity\s+(\d+)$", body)
            if m is None:
                raise PGParseError(lineno, f"expected header 'parity <max-id>;', got {line!r}")
            header_seen = True
            continue
        m = _VERTEX_RE.match(body)
        if m is None:
            raise PGParseError(lineno, f"malformed vertex line {line!r}")
        vid = int(m.group(1))
        prio = int(m.group(2))
        owner = int(m.group(3))
        succs = tuple(int(s) for s in re.split(r"\s*,\s*", m.group(4)))
        name = m.group(5)
        if vid in records:
            raise PGParseError(lineno, f"duplicate vertex id {vid}")
        records[vid] = (prio, owner, succs, name)
    if not header_seen:
        raise PGParseError(len(lines) or 1, "empty input, expected 'parity <max-id>;' header")
    if not records:
        raise PGParseError(len(lines) or 1, "no vertex lines after header")
    n = len(records)
    for vid in records:
        if not 0 <= vid < n:
            raise PGParseError(1, f"vertex ids are not dense 0..{n - 1} (found {vid})")
    for lineno, raw in enumerate(lines, start=1):
        # second pass only to anchor dangling-successor diagnostics to a line
        line = raw.strip()
        m = _VERTEX_RE.match(line[:-1].strip()) if line.endswith(";") else None
        if m is None:
            continue
        for s in re.split(r"\s*,\s*", m.group(4)):
            if not 0 <= int(s) < n:
                raise PGParseError(lineno, f"successor {s} references an undeclared vertex")
    priority = tuple(records[v][0] for v in range(n))
    owner = tuple(records[v][1] for v in range(n))
    successors = tuple(records[v][2] for v in range(n))
    raw_names = tuple(records[v][3] for v in range(n))
    names = raw_names if any(nm is not None for nm in raw_names) else None
    return ParityGame(
        d=even_priority_bound(max(priority)),
        owner=owner,
        priority=priority,
        successors=successors,
        names=names,
    )


def write_pgsolver(g: ParityGame) -> str:
    """Canonical single-space text form; ``parse_pgsolver`` inverts it.

    Vertices are emitted in ascending id order, successors in stored order.
    Rejects invalid games (in particular dead ends are never emitted).
    """
    require_valid(g)
    out = [f"parity {g.n - 1};"]
    for v in range(g.n):
        line = f"{v} {g.priority[v]} {g.owner[v]} " + ",".join(
            str(w) for w in g.successors[v])
        if g.names is not None and g.names[v] is not None:
            line += f' "{g.names[v]}"'
        out.append(line + ";")
    return "\n".join(out) + "\n"


def generate_random_game(
    n: int,
    d: int,
    out_degree_range: tuple[int, int] = (1, 2),
    seed: int | None = None,
) -> ParityGame:
    """Seeded random game: uniform owner, uniform priority in [0, d],
    successors sampled without replacement.  Always valid.

    The stored priority bound is the even cover of the realized maximum
    priority (so that PGSolver round-trips are exact); the requested ``d``
    only bounds the priority distribution.
    """
    lo, hi = out_degree_range
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if d < 2 or d % 2 != 0:
        raise ValueError(f"need d even and >= 2, got {d}")
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"out-degree range {out_degree_range} infeasible for n={n}")
    rng = random.Random(seed)
    owner = tuple(rng.randint(0, 1) for _ in range(n))
    priority = tuple(rng.randint(0, d) for _ in range(n))
    successors = tuple(
        tuple(rng.sample(range(n), rng.randint(lo, hi))) for _ in range(n))
    return ParityGame(
        d=even_priority_bound(max(priority)),
        owner=owner,
        priority=priority,
        successors=successors,
    )


def classify_cycle(g: ParityGame, c: Cycle) -> str:
    """EVEN iff the maximum priority on the cycle is even."""
    verts = c.vertices
    if not verts:
        raise ValueError("empty cycle")
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        if w not in g.successors[v]:
            raise ValueError(f"not a cycle: ({v}, {w}) is not an edge")
    return EVEN if max(g.priority[v] for v in verts) % 2 == 0 else ODD
