"""Built-in tree catalog and seeded random generation for the sweeps.

Builders follow the drawing conventions used throughout: for a linear tree
``linear_tree(k_1, ..., k_r)`` the last entry sits on the root edge, and the
word of the pair is z_{k_1}...z_{k_r}.
"""

from __future__ import annotations

import random
from typing import Sequence

from .trees import Tree, harvestable_form, is_essentially_positive, unit_tree


def linear_tree(*ks: int) -> Tree:
    """All-black chain; ks[-1] on the root edge, ks[0] at the far leaf."""
    n = len(ks)
    edges = [(i, i + 1, k) for i, k in enumerate(reversed(ks))]
    return Tree.build(0, range(n + 1), [], edges)


def star_tree(stem: int, leaf_ks: Sequence[int]) -> Tree:
    """Root --stem-- white center with one black leaf per entry of leaf_ks."""
    edges = [(0, 1, stem)] + [(1, 2 + i, k) for i, k in enumerate(leaf_ks)]
    return Tree.build(0, [0] + [2 + i for i in range(len(leaf_ks))], [1], edges)


def black_fork_tree(stem: int, leaf_ks: Sequence[int]) -> Tree:
    """Root --stem-- black vertex carrying one black leaf per entry (branched
    black interior, so not harvestable as is)."""
    edges = [(0, 1, stem)] + [(1, 2 + i, k) for i, k in enumerate(leaf_ks)]
    return Tree.build(0, range(2 + len(leaf_ks)), [], edges)


def hybrid_tree(k1: int, k2: int, k3: int, k4: int, l: int) -> Tree:
    """Six vertices: root --k4-- white u carrying (l: white u' with leaves
    k1, k2) and a k3 leaf."""
    # ids: 0 root, 1 u, 2 u', 3 leaf k1, 4 leaf k2, 5 leaf k3
    edges = [(0, 1, k4), (1, 2, l), (2, 3, k1), (2, 4, k2), (1, 5, k3)]
    return Tree.build(0, [0, 3, 4, 5], [1, 2], edges)


def two_level_tree(k: int, a: int, b: int, c: int, d: int) -> Tree:
    """Root --k-- white w1 with a black leaf (a) and a second white w2 (b)
    carrying two black leaves (c, d); seven vertices."""
    edges = [(0, 1, k), (1, 2, a), (1, 3, b), (3, 4, c), (3, 5, d), (1, 6, a)]
    return Tree.build(0, [0, 2, 4, 5, 6], [1, 3], edges)


def caterpillar_tree(k1: int, k2: int, s1: int, s2: int) -> Tree:
    """Chain of two branched black vertices, each with one extra black leaf."""
    # root 0 -k1- 1 -k2- 2 ; leaves 3 on 1 (s1), 4 on 2 (s2)
    edges = [(0, 1, k1), (1, 2, k2), (1, 3, s1), (2, 4, s2)]
    return Tree.build(0, range(5), [], edges)


def builtin_catalog() -> list[Tree]:
    """Deterministic essentially positive pairs, at most 7 vertices each."""
    cat: list[Tree] = [unit_tree()]
    for k in (1, 2, 3):
        cat.append(linear_tree(k))
    for ks in ((1, 1), (1, 2), (2, 1), (2, 2)):
        cat.append(linear_tree(*ks))
    for ks in ((1, 1, 1), (1, 2, 1), (2, 1, 2), (1, 1, 2)):
        cat.append(linear_tree(*ks))
    cat.append(star_tree(0, (1, 1)))
    cat.append(star_tree(1, (1, 2)))
    cat.append(star_tree(0, (1, 1, 2)))
    cat.append(star_tree(2, (1, 1)))
    cat.append(black_fork_tree(1, (1, 1)))
    cat.append(black_fork_tree(2, (1, 2)))
    cat.append(hybrid_tree(1, 1, 1, 1, 0))
    cat.append(hybrid_tree(1, 2, 1, 2, 1))
    cat.append(hybrid_tree(2, 1, 1, 1, 2))
    cat.append(hybrid_tree(1, 1, 2, 2, 3))
    for k1, k2 in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for l in (1, 3):
            cat.append(symmetric_hybrid_tree(k1, k2, l))
    cat.append(two_level_tree(1, 1, 0, 1, 2))
    cat.append(two_level_tree(0, 2, 1, 1, 1))
    cat.append(caterpillar_tree(1, 1, 1, 1))
    cat.append(caterpillar_tree(2, 1, 1, 2))
    return _dedupe(cat)


def symmetric_hybrid_tree(k: int, k2: int, l: int) -> Tree:
    """Hybrid instance with matching outer and inner entries (mirror symmetric
    across the middle edge when l is odd)."""
    return hybrid_tree(k, k2, k2, k, l)


def harvestable_catalog() -> list[Tree]:
    """The catalog passed through harvestable form (plus the unit pair)."""
    return _dedupe([harvestable_form(t) for t in builtin_catalog()])


def _dedupe(trees: list[Tree]) -> list[Tree]:
    seen: set[str] = set()
    out = []
    for t in trees:
        if t.key not in seen:
            seen.add(t.key)
            out.append(t)
    return out


def random_tree(rng: random.Random, max_vertices: int = 6, k_cap: int = 2) -> Tree:
    """Seeded essentially positive pair with a black root.

    Shape: random recursive tree; colors: interior vertices flip a coin,
    terminals stay black; indices: uniform in [0, k_cap], then 0-edges on a
    black-black path are raised to 1 until essentially positive.
    """
    n = rng.randint(1, max_vertices)
    parents = [rng.randrange(i) for i in range(1, n)]
    degree = [0] * n
    for i, p in enumerate(parents, start=1):
        degree[i] += 1
        degree[p] += 1
    black = {0}
    for v in range(1, n):
        if degree[v] <= 1 or rng.random() < 0.6:
            black.add(v)
    edges = [(p, i, rng.randint(0, k_cap)) for i, p in enumerate(parents, start=1)]
    t = Tree.build(0, black, set(range(n)) - black, edges)
    while not is_essentially_positive(t):
        zero_edges = [e for e in t.edges if e[2] == 0]
        u, v, _ = rng.choice(zero_edges)
        edges = [(a, b, 1 if (a, b) == (u, v) else k) for a, b, k in t.edges]
        t = Tree.build(0, t.black, t.white, edges)
    return t


def random_harvestable(rng: random.Random, max_vertices: int = 6, k_cap: int = 2) -> Tree:
    return harvestable_form(random_tree(rng, max_vertices, k_cap))
