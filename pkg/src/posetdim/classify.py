"""Cover-graph classification and the cycle-plus-trees decomposition.

A connected poset whose cover graph has exactly one cycle is a cycle poset
(a crown whose covers may be subdivided by chains) with a rooted tree hung
at every cycle element. :func:`decompose` recovers that structure and
:func:`graft` rebuilds the poset from it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .crown import cover_endpoints
from .errors import InvalidDecomposition, NotATree, NotUnicycle, UnknownElement
from .poset import Poset, build_poset, restrict

TREE, UNICYCLE, OTHER = "tree", "unicycle", "other"


@dataclass(frozen=True)
class PosetClass:
    components: tuple[tuple[str, ...], ...]
    kinds: tuple[str, ...]

    @property
    def connected(self) -> bool:
        return len(self.components) == 1


@dataclass(frozen=True)
class RootedTree:
    tree: Poset
    root: str

    def __post_init__(self):
        if self.root not in self.tree:
            raise UnknownElement(self.root)


@dataclass(frozen=True)
class UnicycleDecomposition:
    """Crown labels, subdividing chains and one rooted tree per cycle element.

    ``chains[p - 1]`` lists the elements strictly between the two ends of
    cover ``p``, bottom to top. For ``n == 1`` there are two chains from
    ``x[0]`` to ``z[0]``, both non-empty.
    """

    n: int
    x: tuple[str, ...]
    z: tuple[str, ...]
    chains: tuple[tuple[str, ...], ...]
    trees: Mapping[str, RootedTree] = field(compare=True)

    def chain_ends(self, p: int) -> tuple[str, str]:
        if self.n == 1:
            return self.x[0], self.z[0]
        i, j = cover_endpoints(self.n, p)
        return self.x[i - 1], self.z[j - 1]

    def cycle_order(self) -> list[str]:
        """Cycle elements in walking order starting at ``x_1`` towards ``z_1``."""
        if self.n == 1:
            return [self.x[0], *self.chains[0], self.z[0], *reversed(self.chains[1])]
        out: list[str] = []
        for i in range(self.n):
            out.append(self.x[i])
            out.extend(self.chains[2 * i])
            out.append(self.z[i])
            out.extend(reversed(self.chains[2 * i + 1]))
        return out

    def elements(self) -> list[str]:
        out = []
        for v in self.cycle_order():
            rt = self.trees[v]
            out.append(v)
            out.extend(lab for lab in rt.tree.labels if lab != v)
        return out


def components(p: Poset) -> list[list[int]]:
    seen = [False] * len(p)
    comps = []
    for s in range(len(p)):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in p._lower[v] + p._upper[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def classify(p: Poset) -> PosetClass:
    cov = p.cover_matrix
    comps, kinds = [], []
    for comp in components(p):
        edges = int(cov[np.ix_(comp, comp)].sum())
        verts = len(comp)
        kinds.append(TREE if edges == verts - 1 else UNICYCLE if edges == verts else OTHER)
        comps.append(tuple(p.labels[i] for i in comp))
    return PosetClass(tuple(comps), tuple(kinds))


def check_tree(t: Poset) -> None:
    if len(t) == 0:
        raise NotATree("empty poset")
    if len(t.covers) != len(t) - 1 or len(components(t)) != 1:
        raise NotATree("cover graph is not a tree")


@dataclass(frozen=True)
class Neighborhood:
    """Where every other element of a tree sits relative to ``a``.

    ``up`` holds the elements reached from ``a`` by a path starting upward,
    ``down`` those reached by a path starting downward; the ``_plus`` and
    ``_minus`` parts split them into above/below ``a`` and incomparable.
    """

    a: str
    up: frozenset
    down: frozenset
    up_plus: frozenset
    up_minus: frozenset
    down_minus: frozenset
    down_plus: frozenset

    @property
    def i_plus(self) -> frozenset:
        return self.up | self.down_plus

    @property
    def i_minus(self) -> frozenset:
        return self.down | self.up_minus


def _reach(p: Poset, starts, blocked: set[int]) -> list[int]:
    seen = set(starts) | blocked
    queue = deque(starts)
    out = []
    while queue:
        v = queue.popleft()
        out.append(v)
        for w in p._lower[v] + p._upper[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return out


def tree_neighborhood(t: Poset, a: str) -> Neighborhood:
    if a not in t:
        raise UnknownElement(a)
    check_tree(t)
    ia = t.index[a]
    up = _reach(t, list(t._upper[ia]), {ia})
    down = _reach(t, list(t._lower[ia]), {ia})
    lab = t.labels
    above, below = t.less[ia], t.less[:, ia]
    return Neighborhood(
        a=a,
        up=frozenset(lab[i] for i in up),
        down=frozenset(lab[i] for i in down),
        up_plus=frozenset(lab[i] for i in up if above[i]),
        up_minus=frozenset(lab[i] for i in up if not above[i]),
        down_minus=frozenset(lab[i] for i in down if below[i]),
        down_plus=frozenset(lab[i] for i in down if not below[i]),
    )


def _cycle_vertices(p: Poset) -> set[int]:
    degree = [len(p._lower[v]) + len(p._upper[v]) for v in range(len(p))]
    alive = set(range(len(p)))
    leaves = deque(v for v in alive if degree[v] <= 1)
    while leaves:
        v = leaves.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in p._lower[v] + p._upper[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    leaves.append(w)
    return alive


def decompose(p: Poset) -> UnicycleDecomposition:
    cls = classify(p)
    if not (cls.connected and cls.kinds == (UNICYCLE,)):
        raise NotUnicycle("poset is not a connected unicycle poset")
    cyc = _cycle_vertices(p)
    lab = p.labels
    nbr = {v: [w for w in p._lower[v] + p._upper[v] if w in cyc] for v in cyc}
    cl = sorted(cyc)
    sub = p.less[np.ix_(cl, cl)]
    minima = {cl[k] for k in np.flatnonzero(~sub.any(axis=0))}
    maxima = {cl[k] for k in np.flatnonzero(~sub.any(axis=1))}
    crown = minima | maxima

    def run(start: int, step: int) -> list[int]:
        # walk from start through step up to and including the next crown vertex
        path, prev, cur = [], start, step
        while True:
            path.append(cur)
            if cur in crown:
                return path
            prev, cur = cur, next(w for w in nbr[cur] if w != prev)

    if len(minima) == 1:
        (x,) = minima
        (z,) = maxima
        legs = [[lab[v] for v in run(x, s)[:-1]] for s in nbr[x]]
        legs.sort(key=lambda leg: leg[0])
        n, xs, zs, chains = 1, (lab[x],), (lab[z],), tuple(tuple(leg) for leg in legs)
    else:
        x1 = min(minima, key=lambda v: lab[v])
        first = min(nbr[x1], key=lambda s: lab[run(x1, s)[-1]])
        walk = [x1]
        prev, cur = x1, first
        while cur != x1:
            walk.append(cur)
            prev, cur = cur, next(w for w in nbr[cur] if w != prev)
        marks = [k for k, v in enumerate(walk) if v in crown] + [len(walk)]
        n = len(minima)
        xs = tuple(lab[walk[marks[2 * i]]] for i in range(n))
        zs = tuple(lab[walk[marks[2 * i + 1]]] for i in range(n))
        chains = []
        for t in range(2 * n):
            seg = [lab[v] for v in walk[marks[t] + 1:marks[t + 1]]]
            chains.append(tuple(seg if t % 2 == 0 else reversed(seg)))
        chains = tuple(chains)

    trees = {}
    for v in sorted(cyc):
        comp = _reach(p, [v], cyc - {v})
        trees[lab[v]] = RootedTree(restrict(p, [lab[i] for i in comp]), lab[v])
    return UnicycleDecomposition(n, xs, zs, chains, trees)


def validate(d: UnicycleDecomposition) -> None:
    n = d.n
    if n < 1:
        raise InvalidDecomposition("crown size must be at least 1")
    if len(d.x) != n or len(d.z) != n or len(d.chains) != 2 * n:
        raise InvalidDecomposition("crown labels or chain count do not match n")
    if n == 1 and not all(d.chains):
        raise InvalidDecomposition("both chains of a square must be non-empty")
    cycle = d.cycle_order()
    if len(set(cycle)) != len(cycle):
        raise InvalidDecomposition("cycle elements are not distinct")
    if set(d.trees) != set(cycle):
        raise InvalidDecomposition("trees must be indexed exactly by the cycle elements")
    seen: set[str] = set()
    for v in cycle:
        rt = d.trees[v]
        if rt.root != v:
            raise InvalidDecomposition(f"tree at {v} is rooted at {rt.root}")
        try:
            check_tree(rt.tree)
        except NotATree as exc:
            raise InvalidDecomposition(f"tree at {v}: {exc}") from None
        if seen & set(rt.tree.labels):
            raise InvalidDecomposition(f"tree at {v} overlaps another tree")
        seen |= set(rt.tree.labels)


def cycle_poset(d: UnicycleDecomposition) -> Poset:
    rels = []
    for p in range(1, 2 * d.n + 1):
        lo, hi = d.chain_ends(p)
        path = [lo, *d.chains[p - 1], hi]
        rels.extend(zip(path, path[1:]))
    return build_poset(d.cycle_order(), rels)


def graft(d: UnicycleDecomposition) -> Poset:
    """Hang every tree of ``d`` on its cycle element.

    ``b`` in the tree at ``a`` lies below ``d'`` in the tree at ``c`` iff either
    ``a == c`` and ``b < d'`` in that tree, or ``a < c`` in the cycle poset,
    ``b <= a`` and ``c <= d'``.
    """
    validate(d)
    base = cycle_poset(d)
    labels = d.elements()
    index = {lab: i for i, lab in enumerate(labels)}
    m, size = len(base), len(labels)
    less = np.zeros((size, size), dtype=bool)
    downs = np.zeros((m, size), dtype=np.float32)
    ups = np.zeros((m, size), dtype=np.float32)
    for k, v in enumerate(base.labels):
        t = d.trees[v].tree
        g = [index[lab] for lab in t.labels]
        less[np.ix_(g, g)] = t.less
        r = t.index[v]
        below = t.less[:, r].copy()
        above = t.less[r].copy()
        below[r] = above[r] = True
        downs[k, g] = below
        ups[k, g] = above
    less |= (downs.T @ base.less.astype(np.float32) @ ups) > 0.5
    return Poset(labels, less)


def canonicalize(d: UnicycleDecomposition) -> UnicycleDecomposition:
    """Relabel the crown indices of ``d`` into the canonical orientation.

    ``x_1`` is the crown minimum with the smallest label and ``z_1`` the
    smaller-labelled of its two crown neighbours; for the square, chain 1 is
    the one whose bottom element has the smaller label. Only the indexing
    changes; the poset described is the same.
    """
    n = d.n
    if n == 1:
        chains = tuple(sorted(d.chains, key=lambda c: c[0]))
        return UnicycleDecomposition(1, d.x, d.z, chains, d.trees)
    s = min(range(1, n + 1), key=lambda i: d.x[i - 1])

    def xi(i):
        return d.x[(i - 1) % n]

    def zi(i):
        return d.z[(i - 1) % n]

    def ch(p):
        return d.chains[(p - 1) % (2 * n)]

    if zi(s) < zi(s - 1):
        xs = [xi(s + i - 1) for i in range(1, n + 1)]
        zs = [zi(s + i - 1) for i in range(1, n + 1)]
        chains = [ch(p + 2 * (s - 1)) for p in range(1, 2 * n + 1)]
    else:
        xs = [xi(s + 1 - i) for i in range(1, n + 1)]
        zs = [zi(s - i) for i in range(1, n + 1)]
        chains = []
        for i in range(1, n + 1):
            chains.append(ch(2 * (s - i)))
            chains.append(ch(2 * (s - i) - 1))
    return UnicycleDecomposition(n, tuple(xs), tuple(zs), tuple(chains), d.trees)
