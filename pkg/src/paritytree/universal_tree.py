"""Ordered trees of fixed height with leaf codes and per-priority orders,
the naive and succinct universal-tree constructions, tree embedding,
brute-force universality checking, and minimal-universal-tree search.

Leaf codes index children from the RIGHT (index 0 = rightmost child,
increasing leftward), so that plain numeric lexicographic order on codes
coincides with the leaf order: a larger code is a leaf further left, and
the all-zeros code is the smallest leaf.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

from .bounds import g_recurrence

TOP = "TOP"  # absorbing top element, greater than every leaf in every p-order

LeafCode = tuple[int, ...]

ENUM_CAP_ENV = "PARITYTREE_ENUM_CAP"
DEFAULT_ENUM_CAP = 5_000_000
DEFAULT_LEAF_CAP = 1_000_000


class EnumerationGuardError(ValueError):
    """A brute-force enumeration would exceed the configured ceiling."""


def enumeration_cap() -> int:
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


@dataclass(frozen=True)
class OrderedTree:
    """Node of a totally ordered tree; all leaves sit at the same depth.

    ``height`` 0 with no children is a leaf.  ``height`` > 0 with no
    children is the distinguished empty tree, which only occurs as the
    zero-leaf branch of the succinct construction and the all-TOP
    signature tree.
    """

    height: int
    children: tuple["OrderedTree", ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.height > 0 and not self.children


LEAF = OrderedTree(0)


def validate_tree(t: OrderedTree) -> None:
    """Raise ValueError unless every child sits one level down and every
    internal node below the root has at least one child."""
    for child in t.children:
        if child.height != t.height - 1:
            raise ValueError(
                f"child of height {child.height} under node of height {t.height}")
        if child.height > 0 and not child.children:
            raise ValueError("empty internal node below the root")
        validate_tree(child)


def leaf_count(t: OrderedTree) -> int:
    if t.height == 0:
        return 1
    return sum(leaf_count(c) for c in t.children)


def node_at(t: OrderedTree, path: LeafCode) -> OrderedTree | None:
    """Descend along right-indexed child indices; None if the path is not
    present in the tree."""
    node = t
    for idx in path:
        deg = len(node.children)
        if not 0 <= idx < deg:
            return None
        node = node.children[deg - 1 - idx]
    return node


def leaf_codes(t: OrderedTree):
    """All leaf codes in increasing order (rightmost leaf first)."""
    if t.height == 0:
        yield ()
        return
    deg = len(t.children)
    for idx in range(deg):
        for rest in leaf_codes(t.children[deg - 1 - idx]):
            yield (idx,) + rest


@dataclass(frozen=True)
class LevelMap:
    """Truncation depths of the p-orders for priority bound d: level(p) is
    the number of odd priorities in [p, d], so comparing two leaves at
    priority p compares the first level(p) entries of their codes."""

    d: int

    @property
    def height(self) -> int:
        return self.d // 2

    def level(self, p: int) -> int:
        if not 0 <= p <= self.d:
            raise ValueError(f"priority {p} outside [0, {self.d}]")
        return self.d // 2 - p // 2


def make_naive_tree(n: int, h: int, leaf_cap: int = DEFAULT_LEAF_CAP) -> OrderedTree:
    """Complete n-ary tree of height h (n^h leaves); node objects are
    shared across siblings."""
    if n < 1 or h < 1:
        raise ValueError(f"need n >= 1 and h >= 1, got ({n}, {h})")
    if n**h > leaf_cap:
        raise EnumerationGuardError(f"naive tree would have {n**h} leaves (cap {leaf_cap})")
    level = LEAF
    for height in range(1, h + 1):
        level = OrderedTree(height, (level,) * n)
    return level


def make_succinct_tree(n: int, h: int) -> OrderedTree:
    """The inductively constructed (n, h)-universal tree: the root's
    children are those of the tree for (floor(n/2), h), then the root of
    the tree for (n, h-1), then those of the tree for (n-1-floor(n/2), h).
    Its leaf count equals bounds.f_recurrence(n, h)."""
    if n < 0 or h < 1:
        raise ValueError(f"need n >= 0 and h >= 1, got ({n}, {h})")
    return OrderedTree(h, _succinct_children(n, h))


@lru_cache(maxsize=None)
def _succinct_children(n: int, h: int) -> tuple[OrderedTree, ...]:
    if n == 0:
        return ()
    if h == 1:
        return (LEAF,) * n
    if n == 1:
        return (OrderedTree(h - 1, _succinct_children(1, h - 1)),)
    left = _succinct_children(n // 2, h)
    middle = OrderedTree(h - 1, _succinct_children(n, h - 1))
    right = _succinct_children(n - 1 - n // 2, h)
    return left + (middle,) + right


def _checked_code(t: OrderedTree, code: LeafCode) -> None:
    node = node_at(t, code)
    if node is None or node.height != 0:
        raise ValueError(f"invalid leaf code {code} for this tree")


def compare_leaves_at(
    t: OrderedTree, a: LeafCode, b: LeafCode, p: int, lm: LevelMap
) -> int:
    """Compare two leaves in the p-order: numeric lexicographic comparison
    of the codes truncated to level(p) entries.  Returns -1/0/1."""
    _checked_code(t, a)
    _checked_code(t, b)
    keep = lm.level(p)
    x, y = a[:keep], b[:keep]
    return -1 if x < y else 1 if x > y else 0


def min_leaf_geq(
    t: OrderedTree,
    target: LeafCode | str,
    p: int,
    strict: bool,
    lm: LevelMap,
) -> LeafCode | str:
    """Smallest leaf (in the total order) that is >=_p the target, or >_p
    when strict.  TOP if no leaf qualifies or the target is TOP.

    The total leaf order refines every p-order, so the returned leaf is
    also minimal with respect to >=_p itself.
    """
    if target == TOP:
        return TOP
    _checked_code(t, target)
    h = t.height
    keep = min(lm.level(p), h)
    prefix = target[:keep]
    if not strict:
        return prefix + (0,) * (h - keep)
    # smallest valid prefix strictly above: bump the deepest position that
    # still has a sibling to the left, zero out everything below it
    for depth in range(keep, 0, -1):
        parent = node_at(t, prefix[: depth - 1])
        assert parent is not None
        bumped = prefix[depth - 1] + 1
        if bumped < len(parent.children):
            return prefix[: depth - 1] + (bumped,) + (0,) * (h - depth)
    return TOP


def embed(t: OrderedTree, big: OrderedTree) -> dict[tuple[int, ...], tuple[int, ...]] | None:
    """Injective, depth- and sibling-order-preserving map from t into big
    with root mapped to root, or None if no embedding exists.

    Exact dynamic programming over (t-node, big-node) pairs; the returned
    mapping uses left-to-right child-index paths on both sides.
    """
    if t.height != big.height:
        raise ValueError(f"height mismatch: {t.height} vs {big.height}")
    tables: dict[tuple[int, int], list[list[bool]] | None] = {}

    def fits(a: OrderedTree, b: OrderedTree) -> bool:
        if a.height == 0:
            return True
        key = (id(a), id(b))
        if key in tables:
            return tables[key] is not None
        ca, cb = a.children, b.children
        dp = [[False] * (len(cb) + 1) for _ in range(len(ca) + 1)]
        for j in range(len(cb) + 1):
            dp[0][j] = True
        for i in range(1, len(ca) + 1):
            for j in range(1, len(cb) + 1):
                dp[i][j] = dp[i][j - 1] or (dp[i - 1][j - 1] and fits(ca[i - 1], cb[j - 1]))
        tables[key] = dp if dp[len(ca)][len(cb)] else None
        return tables[key] is not None

    if not fits(t, big):
        return None

    mapping: dict[tuple[int, ...], tuple[int, ...]] = {}

    def reconstruct(a: OrderedTree, b: OrderedTree,
                    pa: tuple[int, ...], pb: tuple[int, ...]) -> None:
        mapping[pa] = pb
        if a.height == 0:
            return
        dp = tables[(id(a), id(b))]
        assert dp is not None
        i, j = len(a.children), len(b.children)
        pairs = []
        while i > 0:
            if dp[i][j - 1]:
                j -= 1
            else:
                pairs.append((i - 1, j - 1))
                i -= 1
                j -= 1
        for ci, cj in reversed(pairs):
            reconstruct(a.children[ci], b.children[cj], pa + (ci,), pb + (cj,))

    reconstruct(t, big, (), ())
    return mapping


@lru_cache(maxsize=None)
def count_trees(n_leaves: int, h: int) -> int:
    """Number of ordered trees with exactly n_leaves leaves, all at depth h."""
    if n_leaves < 1 or h < 1:
        raise ValueError(f"need n_leaves >= 1 and h >= 1, got ({n_leaves}, {h})")
    if h == 1:
        return 1
    total = 0
    for comp in _compositions(n_leaves):
        prod = 1
        for part in comp:
            prod *= count_trees(part, h - 1)
        total += prod
    return total


def _compositions(n: int):
    """All ordered tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_trees(n_leaves: int, h: int) -> tuple[OrderedTree, ...]:
    if h == 1:
        return (OrderedTree(1, (LEAF,) * n_leaves),)
    out = []
    for comp in _compositions(n_leaves):
        for kids in itertools.product(*(_all_trees(part, h - 1) for part in comp)):
            out.append(OrderedTree(h, kids))
    return tuple(out)


def enumerate_trees(n_leaves: int, h: int, cap: int | None = None):
    """Stream every ordered height-h tree with exactly n_leaves leaves,
    each once, in a deterministic order.  Guarded by the enumeration cap
    (override via the PARITYTREE_ENUM_CAP environment variable)."""
    cap = enumeration_cap() if cap is None else cap
    total = count_trees(n_leaves, h)
    if total > cap:
        raise EnumerationGuardError(
            f"{total} trees with {n_leaves} leaves at height {h} exceeds cap {cap}")
    yield from _all_trees(n_leaves, h)


def is_universal(t: OrderedTree, n: int, h: int,
                 cap: int | None = None) -> tuple[bool, OrderedTree | None]:
    """Brute-force universality check: every tree with exactly n leaves
    must embed (checking exactly-n trees suffices).  On failure, returns
    the first non-embeddable witness."""
    if t.height != h:
        raise ValueError(f"tree height {t.height} != h = {h}")
    for shape in enumerate_trees(n, h, cap):
        if embed(shape, t) is None:
            return False, shape
    return True, None


def find_minimal_universal(n: int, h: int,
                           cap: int | None = None) -> tuple[int, OrderedTree]:
    """Smallest leaf count admitting an (n, h)-universal tree, plus one
    witness.  The search ascends from the lower-bound recurrence, so a
    result of L is an exhaustive proof that no (L-1)-leaf tree works."""
    shapes = list(enumerate_trees(n, h, cap))
    size = g_recurrence(n, h)
    while True:
        for candidate in enumerate_trees(size, h, cap):
            if all(embed(shape, candidate) is not None for shape in shapes):
                return size, candidate
        size += 1


def signature_to_tree(
    mu: dict[int, object], n: int, d: int
) -> tuple[OrderedTree, dict[int, LeafCode]]:
    """Prefix tree of the distinct non-TOP signature tuples, children
    ordered by descending component value (larger value = further left),
    plus the leaf code holding each vertex's tuple.

    The induced leaf p-orders agree with tuple_compare for every pair of
    assigned vertices, which is what the embedding round-trip tests check.
    """
    h = d // 2
    tuples = sorted({m.values for m in mu.values() if m != TOP})
    for t in tuples:
        if len(t) != h or any(not 0 <= c <= n for c in t):
            raise ValueError(f"tuple {t} is not in [0, {n}]^{h}")

    def build(suffixes: list[tuple[int, ...]], depth: int) -> OrderedTree:
        if depth == h:
            return LEAF
        groups: dict[int, set[tuple[int, ...]]] = {}
        for s in suffixes:
            groups.setdefault(s[0], set()).add(s[1:])
        children = tuple(
            build(sorted(groups[head]), depth + 1)
            for head in sorted(groups, reverse=True))
        return OrderedTree(h - depth, children)

    tree = build(tuples, 0)
    code_of: dict[tuple[int, ...], LeafCode] = {}
    for t in tuples:
        code = []
        for i in range(h):
            siblings = sorted({u[i] for u in tuples if u[:i] == t[:i]})
            code.append(siblings.index(t[i]))
        code_of[t] = tuple(code)
    assignment = {
        v: code_of[m.values] for v, m in mu.items() if m != TOP}
    return tree, assignment


def dump_leaf_codes(t: OrderedTree) -> str:
    """One line per leaf, the code as comma-separated indices, in leaf order."""
    return "".join(",".join(str(i) for i in code) + "\n" for code in leaf_codes(t))


def tree_from_leaf_codes(codes: list[LeafCode], h: int) -> OrderedTree:
    """Rebuild the unique tree whose leaf-code set is ``codes``; raises
    ValueError if the set is inconsistent (gaps or depth mismatches)."""
    code_set = set(codes)
    if not code_set:
        raise ValueError("no leaf codes given")
    for c in code_set:
        if len(c) != h:
            raise ValueError(f"code {c} has depth {len(c)}, expected {h}")

    def build(group: set[LeafCode], depth: int) -> OrderedTree:
        if depth == h:
            if group != {()}:
                raise ValueError("inconsistent codes below a leaf")
            return LEAF
        by_index: dict[int, set[LeafCode]] = {}
        for c in group:
            by_index.setdefault(c[0], set()).add(c[1:])
        deg = max(by_index) + 1
        if set(by_index) != set(range(deg)):
            raise ValueError(f"missing child index at depth {depth + 1}")
        # index 0 is the rightmost child
        children = tuple(build(by_index[idx], depth + 1) for idx in range(deg - 1, -1, -1))
        return OrderedTree(h - depth, children)

    return build(code_set, 0)
