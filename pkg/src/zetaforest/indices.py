"""Tuples of non-negative integers and their componentwise combinatorics.

An *index* is a tuple whose entries are all positive; the empty tuple is the
empty index.  Weight is the entry sum, depth the length.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

from .errors import BadIndex, DepthMismatch

Tuple_ = tuple[int, ...]


def weight(k: Tuple_) -> int:
    return sum(k)


def depth(k: Tuple_) -> int:
    return len(k)


def is_index(k: Tuple_) -> bool:
    """True iff every entry is >= 1 (the empty tuple qualifies)."""
    return all(e >= 1 for e in k)


def check_index(k: Tuple_) -> Tuple_:
    if not is_index(k):
        raise BadIndex(f"index entries must be positive: {k}")
    return tuple(k)


def tuple_reverse(k: Tuple_) -> Tuple_:
    return tuple(reversed(k))


def tuple_add(k: Tuple_, l: Tuple_) -> Tuple_:
    if len(k) != len(l):
        raise DepthMismatch(f"depth {len(k)} vs {len(l)}")
    return tuple(a + b for a, b in zip(k, l))


def tuple_split(k: Tuple_, i: int) -> tuple[Tuple_, Tuple_]:
    """Head/tail split: entries before position i, and from i on."""
    if not 0 <= i <= len(k):
        raise ValueError(f"split point {i} out of range for depth {len(k)}")
    return tuple(k[:i]), tuple(k[i:])


def b_entry(k: int, l: int) -> int:
    """Binomial C(k+l-1, l), with C(l-1, l) read as 1 if l == 0 else 0."""
    if k == 0:
        return 1 if l == 0 else 0
    return comb(k + l - 1, l)


def b_binom(k: Tuple_, l: Tuple_) -> int:
    """Product of b_entry over components; empty tuples give 1."""
    if len(k) != len(l):
        raise DepthMismatch(f"depth {len(k)} vs {len(l)}")
    out = 1
    for a, b in zip(k, l):
        out *= b_entry(a, b)
        if out == 0:
            return 0
    return out


def bounded_vectors(dim: int, cap: int) -> Iterator[Tuple_]:
    """All tuples in Z_{>=0}^dim with entry sum <= cap, lexicographic."""
    if dim == 0:
        yield ()
        return
    for head in range(cap + 1):
        for rest in bounded_vectors(dim - 1, cap - head):
            yield (head,) + rest


def positive_compositions(total: int, parts: int) -> Iterator[Tuple_]:
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    # bars-and-stars via combinations of cut points
    for cuts in combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cuts:
            out.append(c - prev)
            prev = c
        out.append(total - prev)
        yield tuple(out)


def all_indices(max_weight: int, min_weight: int = 0) -> list[Tuple_]:
    """Every index of weight between the bounds, ordered by (weight, entries)."""
    out: list[Tuple_] = []
    for w in range(min_weight, max_weight + 1):
        for d in range(0 if w == 0 else 1, w + 1):
            out.extend(positive_compositions(w, d))
    return out
