"""Crowns, their cover numbering, and a fixed three-word realizer."""
from __future__ import annotations

from typing import Sequence

from .errors import InvalidSize, OutOfRange
from .poset import Poset, Realizer, build_poset


def crown_labels(n: int) -> tuple[list[str], list[str]]:
    if n == 1:
        return ["x"], ["z"]
    return [f"x{i}" for i in range(1, n + 1)], [f"z{i}" for i in range(1, n + 1)]


def cover_endpoints(n: int, p: int) -> tuple[int, int]:
    """1-based ``(i, j)`` such that cover number ``p`` is ``x_i < z_j``.

    Cover ``2i - 1`` joins ``x_i`` and ``z_i``; cover ``2i`` joins ``x_{i+1}``
    and ``z_i``, with ``x_{n+1} = x_1``.
    """
    if n < 2 or not 1 <= p <= 2 * n:
        raise OutOfRange(f"cover {p} does not exist in a crown of size {n}")
    return (p // 2) % n + 1, (p + 1) // 2


def crown_poset(n: int) -> Poset:
    if n < 1:
        raise InvalidSize(f"crown size must be at least 1, got {n}")
    if n == 1:
        return build_poset(["x", "a", "b", "z"], [("x", "a"), ("x", "b"), ("a", "z"), ("b", "z")])
    xs, zs = crown_labels(n)
    rels = []
    for p in range(1, 2 * n + 1):
        i, j = cover_endpoints(n, p)
        rels.append((xs[i - 1], zs[j - 1]))
    return build_poset(xs + zs, rels)


def crown_words(xs: Sequence[str], zs: Sequence[str], a: str | None = None, b: str | None = None) -> Realizer:
    """The crown realizer written over arbitrary labels.

    For ``n >= 2`` pass the minima ``xs`` and maxima ``zs`` in crown order.
    For the square pass ``xs = [x]``, ``zs = [z]`` and the middle elements.
    """
    n = len(xs)
    if n == 1:
        (x,), (z,) = xs, zs
        first = (x, a, b, z)
        return (first, (x, b, a, z), first)
    x = [None, *xs]
    z = [None, *zs]
    w1 = [x[1], x[2], z[1]]
    for i in range(2, n):
        w1 += [x[i + 1], z[i]]
    w1.append(z[n])
    w2 = [x[2]]
    for i in range(2, n):
        w2 += [x[i + 1], z[i]]
    w2 += [x[1], z[n], z[1]]
    w3 = [x[1]]
    for i in range(n, 1, -1):
        w3 += [x[i], z[i]]
    w3.append(z[1])
    return (tuple(w1), tuple(w2), tuple(w3))


def crown_realizer(n: int) -> Realizer:
    if n < 1:
        raise InvalidSize(f"crown size must be at least 1, got {n}")
    if n == 1:
        return crown_words(["x"], ["z"], "a", "b")
    xs, zs = crown_labels(n)
    return crown_words(xs, zs)
