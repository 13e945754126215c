"""Finite posets stored as a dense strict-order table.

Elements are text tokens externally and dense indices internally. Every
:class:`Poset` is immutable once built; operations return new objects.
A linear extension is any sequence of labels, and a realizer is a sequence
of such words.
"""
from __future__ import annotations

from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateElement,
    ElementCollision,
    RelationCycle,
    SizeLimitExceeded,
    UnknownElement,
)

Word = tuple[str, ...]
Realizer = tuple[Word, ...]

ISOMORPHISM_LIMIT = 64


class Poset:
    """A strict partial order on labelled elements.

    ``less[i, j]`` is True iff element ``i`` is strictly below element ``j``.
    The constructor trusts its input; use :func:`build_poset` for anything
    that has not already been closed and checked.
    """

    def __init__(self, labels: Sequence[str], less: np.ndarray):
        self.labels: Word = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        less = np.array(less, dtype=bool, copy=True).reshape(len(self.labels), len(self.labels))
        less.setflags(write=False)
        self.less = less

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.index

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        if set(self.labels) != set(other.labels):
            return False
        perm = [other.index[lab] for lab in self.labels]
        return bool(np.array_equal(self.less, other.less[np.ix_(perm, perm)]))

    __hash__ = None

    def lt(self, a: str, b: str) -> bool:
        return bool(self.less[self.index[a], self.index[b]])

    def comparable(self, a: str, b: str) -> bool:
        i, j = self.index[a], self.index[b]
        return i == j or bool(self.less[i, j] or self.less[j, i])

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        n = len(self)
        if n == 0:
            return np.zeros((0, 0), dtype=bool)
        lf = self.less.astype(np.float32)
        # float matmul goes through BLAS; path counts stay exact well past any size we handle
        through = (lf @ lf) > 0.5
        cov = self.less & ~through
        cov.setflags(write=False)
        return cov

    @cached_property
    def covers(self) -> frozenset[tuple[str, str]]:
        ii, jj = np.nonzero(self.cover_matrix)
        return frozenset((self.labels[i], self.labels[j]) for i, j in zip(ii, jj))

    @cached_property
    def _upper(self) -> tuple[tuple[int, ...], ...]:
        cov = self.cover_matrix
        return tuple(tuple(np.flatnonzero(cov[i]).tolist()) for i in range(len(self)))

    @cached_property
    def _lower(self) -> tuple[tuple[int, ...], ...]:
        cov = self.cover_matrix
        return tuple(tuple(np.flatnonzero(cov[:, i]).tolist()) for i in range(len(self)))

    def upper_covers(self, a: str) -> list[str]:
        return [self.labels[j] for j in self._upper[self.index[a]]]

    def lower_covers(self, a: str) -> list[str]:
        return [self.labels[j] for j in self._lower[self.index[a]]]

    def neighbors(self, a: str) -> list[str]:
        """Neighbours of ``a`` in the cover graph."""
        return self.lower_covers(a) + self.upper_covers(a)

    def relations(self) -> list[tuple[str, str]]:
        ii, jj = np.nonzero(self.less)
        return [(self.labels[i], self.labels[j]) for i, j in zip(ii, jj)]

    def minimal_elements(self) -> list[str]:
        return [self.labels[j] for j in np.flatnonzero(~self.less.any(axis=0))]

    def maximal_elements(self) -> list[str]:
        return [self.labels[i] for i in np.flatnonzero(~self.less.any(axis=1))]

    def is_chain(self) -> bool:
        n = len(self)
        return int(self.less.sum()) == n * (n - 1) // 2


def _closure(n: int, succ: list[list[int]], order: Iterable[int]) -> np.ndarray:
    reach = np.zeros((n, n), dtype=bool)
    for v in reversed(list(order)):
        for s in succ[v]:
            reach[v] |= reach[s]
            reach[v, s] = True
    return reach


def build_poset(elements: Sequence[str], relations: Iterable[tuple[str, str]]) -> Poset:
    """Build the poset generated by ``relations`` (pairs ``a < b``) on ``elements``.

    Relations need not be covers; the transitive closure is always taken.
    """
    labels = list(elements)
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise DuplicateElement(lab)
        index[lab] = len(index)
    succ: list[list[int]] = [[] for _ in labels]
    sorter = TopologicalSorter({i: () for i in range(len(labels))})
    for a, b in relations:
        for lab in (a, b):
            if lab not in index:
                raise UnknownElement(lab)
        i, j = index[a], index[b]
        succ[i].append(j)
        sorter.add(j, i)
    try:
        order = list(sorter.static_order())
    except CycleError as exc:
        cyc = [labels[i] for i in exc.args[1]]
        raise RelationCycle(cyc[:-1]) from None
    return Poset(labels, _closure(len(labels), succ, order))


def _positions(p: Poset, seq: Sequence[str]) -> np.ndarray | None:
    n = len(p)
    if len(seq) != n:
        return None
    pos = np.full(n, -1, dtype=np.int64)
    for k, lab in enumerate(seq):
        i = p.index.get(lab)
        if i is None or pos[i] >= 0:
            return None
        pos[i] = k
    return pos


def is_linear_extension(p: Poset, seq: Sequence[str]) -> bool:
    pos = _positions(p, seq)
    if pos is None:
        return False
    return not bool((p.less & (pos[:, None] > pos[None, :])).any())


def find_violation(p: Poset, r: Sequence[Sequence[str]]):
    """Return ``None`` if ``r`` realizes ``p``, otherwise a witness.

    Witnesses are ``("not_permutation", k)``, ``("order", k, a, b)`` when word
    ``k`` puts ``b`` before ``a`` although ``a < b``, or ``("unreversed", a, b)``
    when ``a`` precedes ``b`` in every word although ``a`` and ``b`` are
    incomparable.
    """
    n = len(p)
    together = np.ones((n, n), dtype=bool)
    for k, word in enumerate(r):
        pos = _positions(p, word)
        if pos is None:
            return ("not_permutation", k)
        before = pos[:, None] < pos[None, :]
        bad = p.less & ~before
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return ("order", k, p.labels[i], p.labels[j])
        together &= before
    np.fill_diagonal(together, False)
    extra = together & ~p.less
    if extra.any():
        i, j = np.argwhere(extra)[0]
        return ("unreversed", p.labels[i], p.labels[j])
    return None


def realizes(p: Poset, r: Sequence[Sequence[str]]) -> bool:
    return find_violation(p, r) is None


def dual(p: Poset) -> Poset:
    return Poset(p.labels, p.less.T)


def reverse_realizer(r: Sequence[Sequence[str]]) -> Realizer:
    return tuple(tuple(reversed(word)) for word in r)


def restrict(p: Poset, subset: Iterable[str]) -> Poset:
    """Induced subposet on ``subset``, keeping the host's element order."""
    keep = set(subset)
    for lab in keep:
        if lab not in p.index:
            raise UnknownElement(lab)
    idx = [i for i, lab in enumerate(p.labels) if lab in keep]
    return Poset([p.labels[i] for i in idx], p.less[np.ix_(idx, idx)])


def restrict_extension(seq: Sequence[str], subset: Iterable[str]) -> Word:
    keep = set(subset)
    return tuple(lab for lab in seq if lab in keep)


def disjoint_union(posets: Sequence[Poset]) -> Poset:
    labels: list[str] = []
    for q in posets:
        labels.extend(q.labels)
    if len(set(labels)) != len(labels):
        seen, dup = set(), None
        for lab in labels:
            if lab in seen:
                dup = lab
                break
            seen.add(lab)
        raise ElementCollision(dup)
    less = np.zeros((len(labels), len(labels)), dtype=bool)
    off = 0
    for q in posets:
        m = len(q)
        less[off:off + m, off:off + m] = q.less
        off += m
    return Poset(labels, less)


def disjoint_union_realizer(parts: Sequence[tuple[Poset, Sequence[Sequence[str]]]]) -> tuple[Poset, Realizer]:
    """Combine three-word realizers of disjoint posets.

    Words one and three list the parts in order, word two in reverse order,
    so every cross pair is reversed between the first two words.
    """
    for _, r in parts:
        if len(r) != 3:
            raise ValueError("each part needs a three-word realizer")
    union = disjoint_union([q for q, _ in parts])
    words = []
    for k, order in enumerate((parts, parts[::-1], parts)):
        w: list[str] = []
        for _, r in order:
            w.extend(r[k])
        words.append(tuple(w))
    return union, tuple(words)


def _refined_colours(posets: Sequence[Poset]) -> list[list[int]]:
    # colour refinement on the directed cover graph, shared palette across posets
    cols = []
    for p in posets:
        down = p.less.sum(axis=0)
        up = p.less.sum(axis=1)
        cols.append([(int(down[i]), int(up[i]), len(p._lower[i]), len(p._upper[i])) for i in range(len(p))])
    palette: dict = {}
    cols = [[palette.setdefault(c, len(palette)) for c in cs] for cs in cols]
    while True:
        palette = {}
        new = []
        for p, cs in zip(posets, cols):
            sig = [
                (cs[i], tuple(sorted(cs[j] for j in p._lower[i])), tuple(sorted(cs[j] for j in p._upper[i])))
                for i in range(len(p))
            ]
            new.append(sig)
        new = [[palette.setdefault(s, len(palette)) for s in sig] for sig in new]
        if sum(len(set(c)) for c in new) == sum(len(set(c)) for c in cols):
            return new
        cols = new


def is_isomorphic(p: Poset, q: Poset) -> bool:
    """Exact order-isomorphism test by backtracking, for at most 64 elements."""
    if max(len(p), len(q)) > ISOMORPHISM_LIMIT:
        raise SizeLimitExceeded(f"isomorphism is limited to {ISOMORPHISM_LIMIT} elements")
    n = len(p)
    if n != len(q) or int(p.less.sum()) != int(q.less.sum()):
        return False
    if n == 0:
        return True
    cp, cq = _refined_colours([p, q])
    if sorted(cp) != sorted(cq):
        return False

    # visit p in BFS order over the cover graph so each new vertex touches mapped ones
    order: list[int] = []
    seen = [False] * n
    for start in sorted(range(n), key=lambda i: (cp.count(cp[i]), i)):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in p._lower[v] + p._upper[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    by_colour: dict[int, list[int]] = {}
    for j, c in enumerate(cq):
        by_colour.setdefault(c, []).append(j)
    image = [-1] * n
    used = [False] * n
    pl, ql = p.less, q.less

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        mapped = order[:k]
        targets = [image[u] for u in mapped]
        for w in by_colour[cp[v]]:
            if used[w]:
                continue
            if mapped and (
                not np.array_equal(pl[mapped, v], ql[targets, w])
                or not np.array_equal(pl[v, mapped], ql[w, targets])
            ):
                continue
            image[v], used[w] = w, True
            if extend(k + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)
