"""Ground truth for small posets and seeded random instances.

Nothing here uses the realizer constructions: dimension is found by exhaustive
search over linear extensions, and the samplers only build posets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import networkx as nx
import numpy as np

from .classify import OTHER, TREE, UNICYCLE, RootedTree, UnicycleDecomposition, classify, graft
from .errors import CapExceeded, InvalidModel
from .poset import Poset, Realizer, Word, build_poset

DEFAULT_CAP = 200_000
DEFAULT_K_MAX = 4

GNP, TREE_KIND, UNICYCLE_KIND = "gnp", "tree", "unicycle"
KINDS = (GNP, TREE_KIND, UNICYCLE_KIND)

MAX_CROWN = 8
MAX_CHAIN = 4
MAX_TREE = 6
TREE_CONTINUE = 1 / 3


def all_linear_extensions(p: Poset, cap: int = DEFAULT_CAP) -> Iterator[Word]:
    """Yield every linear extension of ``p`` once; raise CapExceeded past ``cap``."""
    n = len(p)
    less = p.less
    indeg = less.sum(axis=0).astype(int).tolist()
    succ = [np.flatnonzero(less[i]).tolist() for i in range(n)]
    labels = p.labels
    prefix: list[int] = []
    produced = 0
    # explicit stack of (available elements, next position to try)
    stack = [([i for i in range(n) if indeg[i] == 0], 0)]
    while stack:
        avail, k = stack[-1]
        if len(prefix) == n:
            produced += 1
            if produced > cap:
                raise CapExceeded(f"more than {cap} linear extensions")
            yield tuple(labels[i] for i in prefix)
            stack.pop()
            if prefix:
                _undo(prefix, succ, indeg)
            continue
        if k == len(avail):
            stack.pop()
            if prefix:
                _undo(prefix, succ, indeg)
            continue
        stack[-1] = (avail, k + 1)
        v = avail[k]
        prefix.append(v)
        nxt = [u for u in avail if u != v]
        for s in succ[v]:
            indeg[s] -= 1
            if indeg[s] == 0:
                nxt.append(s)
        nxt.sort()
        stack.append((nxt, 0))


def _undo(prefix, succ, indeg):
    v = prefix.pop()
    for s in succ[v]:
        indeg[s] += 1


@dataclass(frozen=True)
class DimensionResult:
    """``value`` is None when no realizer of at most ``k_max`` words exists."""

    value: int | None
    witness: Realizer | None
    k_max: int

    @property
    def exceeded(self) -> bool:
        return self.value is None


def critical_pairs(p: Poset) -> list[tuple[int, int]]:
    """Incomparable ``(a, b)`` with everything below ``a`` below ``b`` and everything above ``b`` above ``a``.

    A family of linear extensions realizes ``p`` iff every critical pair
    ``(a, b)`` has ``b`` before ``a`` in some member.
    """
    less = p.less.astype(np.int32)
    nless = 1 - less
    inc = ~(p.less | p.less.T)
    np.fill_diagonal(inc, False)
    down_bad = (less.T @ nless) > 0
    up_bad = (nless @ less.T) > 0
    ii, jj = np.nonzero(inc & ~down_bad & ~up_bad)
    return list(zip(ii.tolist(), jj.tolist()))


def _maximal(masks: list[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda v: -v.bit_count()):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def brute_dimension(p: Poset, k_max: int = DEFAULT_K_MAX, cap: int = DEFAULT_CAP) -> DimensionResult:
    """Exact dimension by exhaustive search over the linear extensions of ``p``.

    Each extension is encoded by the critical pairs it reverses. Reversing is
    monotone, so only extensions whose set is not contained in another's can
    matter, and the search for k words becomes a k-set cover over those,
    branching on the first critical pair not yet reversed.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    n = len(p)
    if p.is_chain():
        order = sorted(range(n), key=lambda i: int(p.less[:, i].sum()))
        return DimensionResult(1, (tuple(p.labels[i] for i in order),), k_max)

    exts = list(all_linear_extensions(p, cap))
    crit = critical_pairs(p)
    full = (1 << len(crit)) - 1
    first_with: dict[int, int] = {}
    for e, word in enumerate(exts):
        pos = {lab: k for k, lab in enumerate(word)}
        m = 0
        for b, (i, j) in enumerate(crit):
            if pos[p.labels[j]] < pos[p.labels[i]]:
                m |= 1 << b
        first_with.setdefault(m, e)
    cands = _maximal(list(first_with))
    by_bit = [[m for m in cands if m >> b & 1] for b in range(len(crit))]

    def cover(left: int, k: int) -> list[int] | None:
        if left == 0:
            return []
        if k == 0:
            return None
        if k == 1:
            return next(([m] for m in cands if m & left == left), None)
        b = (left & -left).bit_length() - 1
        for m in by_bit[b]:
            rest = cover(left & ~m, k - 1)
            if rest is not None:
                return [m, *rest]
        return None

    for k in range(2, k_max + 1):
        found = cover(full, k)
        if found is not None:
            # pad with a repeat when fewer than k words already suffice
            found += [found[-1]] * (k - len(found))
            return DimensionResult(k, tuple(exts[first_with[m]] for m in found), k_max)
    return DimensionResult(None, None, k_max)


@dataclass(frozen=True)
class RandomModel:
    kind: str
    n: int | None = None
    c: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidModel(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.n is not None and self.n < 0:
            raise InvalidModel("n must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise InvalidModel("seed must be a 64-bit unsigned value")
        if self.kind == GNP:
            if self.n is None:
                raise InvalidModel("gnp needs n")
            if self.c < 0 or (self.n and self.c > self.n):
                raise InvalidModel("gnp needs 0 <= c <= n")
        if self.kind == TREE_KIND and (self.n is None or self.n < 1):
            raise InvalidModel("tree needs n >= 1")
        if self.kind == UNICYCLE_KIND and self.n is not None and self.n < 4:
            raise InvalidModel("unicycle needs n >= 4")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _gnp(rng: np.random.Generator, n: int, c: float) -> Poset:
    labels = [str(i + 1) for i in range(n)]
    if n < 2:
        return build_poset(labels, [])
    draw = rng.random((n, n)) < c / n
    ii, jj = np.nonzero(np.triu(draw, 1))
    return build_poset(labels, [(labels[i], labels[j]) for i, j in zip(ii, jj)])


def random_tree(rng: np.random.Generator, n: int, labels=None, minimum: bool = False) -> Poset:
    """Uniform labeled tree on ``n`` vertices with random edge directions.

    With ``minimum=True`` every edge points away from the first vertex, which
    becomes the least element.
    """
    labels = list(labels) if labels is not None else [str(i + 1) for i in range(n)]
    if n == 1:
        return build_poset(labels, [])
    if n == 2:
        g = nx.path_graph(2)
    else:
        g = nx.from_prufer_sequence(rng.integers(0, n, size=n - 2).tolist())
    if minimum:
        edges = list(nx.bfs_edges(g, 0))
    else:
        edges = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in sorted(g.edges())]
    return build_poset(labels, [(labels[u], labels[v]) for u, v in edges])


def _grow(rng: np.random.Generator, root, extra: int, fresh) -> tuple[list, list]:
    els, rels = [root], []
    for _ in range(extra):
        u = fresh()
        w = els[int(rng.integers(len(els)))]
        rels.append((u, w) if rng.random() < 0.5 else (w, u))
        els.append(u)
    return els, rels


def random_rooted_tree(rng: np.random.Generator, size: int, prefix: str = "t") -> RootedTree:
    """Tree grown by attaching each new element above or below a random old one."""
    names = iter(range(size))
    els, rels = _grow(rng, f"{prefix}{next(names)}", size - 1, lambda: f"{prefix}{next(names)}")
    return RootedTree(build_poset(els, rels), els[0])


def _geometric(rng: np.random.Generator, cont: float, cap: int) -> int:
    k = 0
    while k < cap and rng.random() < cont:
        k += 1
    return k


def _assemble(rng: np.random.Generator, n: int, chain_lengths: list[int], extras: list[int]) -> UnicycleDecomposition:
    """Build a decomposition from its shape, with shuffled element labels.

    ``extras[k]`` is the number of non-root elements in the tree at the
    ``k``-th cycle element (crown minima, crown maxima, then chains in order).
    """
    counter = iter(range(10**9))

    def fresh():
        return next(counter)

    xs = [fresh() for _ in range(n)]
    zs = [fresh() for _ in range(n)]
    chains = [[fresh() for _ in range(k)] for k in chain_lengths]
    cyc = xs + zs + [y for c in chains for y in c]
    grown = {v: _grow(rng, v, extra, fresh) for v, extra in zip(cyc, extras)}
    total = next(counter)
    names = [f"v{i + 1}" for i in rng.permutation(total)]

    trees = {}
    for v, (els, rels) in grown.items():
        t = build_poset([names[e] for e in els], [(names[a], names[b]) for a, b in rels])
        trees[names[v]] = RootedTree(t, names[v])
    if n == 1:
        xl, zl = (names[xs[0]],), (names[zs[0]],)
    else:
        xl, zl = tuple(names[v] for v in xs), tuple(names[v] for v in zs)
    return UnicycleDecomposition(n, xl, zl, tuple(tuple(names[y] for y in c) for c in chains), trees)


def random_decomposition(
    rng: np.random.Generator,
    n: int | None = None,
    bare_crown: bool = False,
    bare_chains: bool = False,
) -> UnicycleDecomposition:
    """Random decomposition with crown size 1..8 and short chains and trees.

    ``bare_crown`` gives every crown vertex a one-element tree.
    ``bare_chains`` leaves every cover unsubdivided; for the square the two
    middle elements are then bare. The crown indexing is arbitrary, not
    canonical.
    """
    if n is None:
        n = int(rng.integers(1, MAX_CROWN + 1))
    if bare_chains:
        lengths = [1 if n == 1 else 0] * (2 * n)
    else:
        lengths = [_geometric(rng, 0.5, MAX_CHAIN) for _ in range(2 * n)]
        if n == 1:
            lengths = [max(1, k) for k in lengths]
    extras = [_geometric(rng, TREE_CONTINUE, MAX_TREE - 1) for _ in range(2 * n + sum(lengths))]
    if bare_crown:
        extras[: 2 * n] = [0] * (2 * n)
    if bare_chains:
        extras[2 * n:] = [0] * sum(lengths)
    return _assemble(rng, n, lengths, extras)


def sized_decomposition(rng: np.random.Generator, size: int) -> UnicycleDecomposition:
    """Random decomposition of exactly ``size`` elements, ``size >= 4``."""
    if size < 4:
        raise InvalidModel("a unicycle poset has at least 4 elements")
    n = int(rng.integers(1, min(MAX_CROWN, size // 2) + 1))
    budget = size - 2 * n
    lengths = []
    for p in range(2 * n):
        k = _geometric(rng, 0.5, MAX_CHAIN)
        if n == 1:
            # keep one element in reserve for the other chain of the square
            k = min(max(1, k), budget - (1 - p))
        k = min(k, budget)
        lengths.append(k)
        budget -= k
    m = 2 * n + sum(lengths)
    extras = np.bincount(rng.integers(0, m, size=budget), minlength=m).tolist()
    return _assemble(rng, n, lengths, extras)


def sample(model: RandomModel) -> Poset:
    rng = make_rng(model.seed)
    if model.kind == GNP:
        return _gnp(rng, model.n, model.c)
    if model.kind == TREE_KIND:
        return random_tree(rng, model.n)
    if model.n is None:
        return graft(random_decomposition(rng))
    return graft(sized_decomposition(rng, model.n))


def component_stats(p: Poset) -> dict[str, int]:
    counts = {TREE: 0, UNICYCLE: 0, OTHER: 0}
    for kind in classify(p).kinds:
        counts[kind] += 1
    return counts
