"""Realizers of tree posets built from named segments.

For a rooted tree with root ``r`` the construction yields linear extensions
of the pieces around ``r`` (see :class:`TreeSegments`) that splice into the
three-word realizer

    U- D1 r U+,   D- r U1 D+,   D2 r U2.

Children in the planar embedding are always taken in ascending label order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .classify import RootedTree, check_tree, tree_neighborhood
from .errors import InvalidTree, NoMinimum, NotATree, NotExtremal, PreconditionViolated, UnknownElement
from .poset import Poset, Realizer, Word, restrict

MINIMAL, MAXIMAL = "minimal", "maximal"


@dataclass(frozen=True)
class VertexSegments:
    i_minus: Word
    i_plus: Word
    w_plus: Word
    w_minus: Word
    w_bullet: Word


@dataclass(frozen=True)
class TreeSegments:
    root: str
    u_minus: Word = ()
    u_plus: Word = ()
    u1: Word = ()
    u2: Word = ()
    d_minus: Word = ()
    d_plus: Word = ()
    d1: Word = ()
    d2: Word = ()

    def words(self) -> Realizer:
        r = (self.root,)
        return (
            self.u_minus + self.d1 + r + self.u_plus,
            self.d_minus + r + self.u1 + self.d_plus,
            self.d2 + r + self.u2,
        )

    def vertex_segments(self) -> VertexSegments:
        r = (self.root,)
        return VertexSegments(
            i_minus=self.u_minus + self.d1,
            i_plus=self.u1 + self.d_plus,
            w_plus=r + self.u_plus,
            w_minus=self.d_minus + r,
            w_bullet=self.d2 + r + self.u2,
        )

    @property
    def is_trivial(self) -> bool:
        return not (self.u_minus or self.u_plus or self.d_minus or self.d_plus)


def _preorders(t: Poset, region: set[int], a: int, flip: bool) -> tuple[list[int], list[int]]:
    """Left-right and right-left prefix readings of the elements above ``a``.

    ``flip`` reads the tree upside down. ``a`` itself is not listed.
    """
    ups = t._lower if flip else t._upper
    lab = t.labels

    def kids(v):
        return sorted((w for w in ups[v] if w in region), key=lab.__getitem__)

    def read(left_first: bool) -> list[int]:
        out, stack = [], [a]
        while stack:
            v = stack.pop()
            out.append(v)
            ks = kids(v)
            stack.extend(reversed(ks) if left_first else ks)
        return out[1:]

    return read(True), read(False)


def _hardcore(t: Poset, region: set[int], apex: int, flip: bool):
    """Segments ``(U-, U+, U1, U2)`` for ``apex`` minimal in ``region``.

    The recursive construction is unrolled onto an explicit frame list: every
    element ``e_i`` above the apex owns the subtree ``T_i`` hanging below it,
    which is solved for ``e_i`` as a maximal element by solving the
    upside-down problem and reversing the words.
    """
    frames = []
    work = [(region, apex, flip, None, 0)]
    while work:
        reg, a, fl, parent, slot = work.pop()
        downs = t._upper if fl else t._lower
        lr, rl = _preorders(t, reg, a, fl)
        fid = len(frames)
        frames.append((lr, rl, [None] * len(lr)))
        if parent is not None:
            frames[parent][2][slot] = fid
        blocked = set(lr)
        blocked.add(a)
        for k, e in enumerate(lr):
            piece = {e}
            queue = deque(w for w in downs[e] if w in reg and w not in blocked)
            piece.update(queue)
            while queue:
                v = queue.popleft()
                for w in t._lower[v] + t._upper[v]:
                    if w in reg and w not in blocked and w not in piece:
                        piece.add(w)
                        queue.append(w)
            work.append((piece, e, not fl, fid, k))

    results: list = [None] * len(frames)
    for fid in range(len(frames) - 1, -1, -1):
        lr, rl, kids = frames[fid]
        below = {}
        for e, kid in zip(lr, kids):
            um, up, u1, u2 = results[kid]
            results[kid] = None
            # upside-down minimal words reversed: (D-, D+, D1, D2) of e
            below[e] = (up[::-1], um[::-1], u1[::-1], u2[::-1])
        u_minus = [v for e in reversed(lr) for v in below[e][2]]
        u1 = [v for e in lr for v in (*below[e][3], e)]
        u2 = [v for e in rl for v in (*below[e][0], e)]
        u2 += [v for e in reversed(lr) for v in below[e][1]]
        results[fid] = (u_minus, list(lr), u1, u2)
    return results[0]


def _side(t: Poset, root: int, upward: bool) -> set[int]:
    first = t._upper[root] if upward else t._lower[root]
    seen = {root, *first}
    queue = deque(first)
    while queue:
        v = queue.popleft()
        for w in t._lower[v] + t._upper[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _labels(t: Poset, idx) -> Word:
    return tuple(t.labels[i] for i in idx)


def hardcore(t: Poset, a: str, side: str = MINIMAL) -> TreeSegments:
    """Segments for an extremal element ``a`` of the tree ``t``.

    With ``side="minimal"`` the words ``U- a U+``, ``a U1`` and ``a U2``
    realize ``t``; with ``side="maximal"`` so do ``D- a D+``, ``D1 a`` and
    ``D2 a``. The other half of the returned segments is empty.
    """
    if a not in t:
        raise UnknownElement(a)
    check_tree(t)
    ia = t.index[a]
    region = set(range(len(t)))
    if side == MINIMAL:
        if t._lower[ia]:
            raise NotExtremal(f"{a} is not minimal")
        um, up, u1, u2 = _hardcore(t, region, ia, False)
        return TreeSegments(a, _labels(t, um), _labels(t, up), _labels(t, u1), _labels(t, u2))
    if side == MAXIMAL:
        if t._upper[ia]:
            raise NotExtremal(f"{a} is not maximal")
        um, up, u1, u2 = _hardcore(t, region, ia, True)
        return TreeSegments(
            a,
            d_minus=_labels(t, up[::-1]),
            d_plus=_labels(t, um[::-1]),
            d1=_labels(t, u1[::-1]),
            d2=_labels(t, u2[::-1]),
        )
    raise ValueError(f"side must be {MINIMAL!r} or {MAXIMAL!r}")


def rooted_realizer(rt: RootedTree) -> TreeSegments:
    t, r = rt.tree, rt.root
    try:
        check_tree(t)
    except NotATree as exc:
        raise InvalidTree(str(exc)) from None
    ir = t.index[r]
    um, up, u1, u2 = _hardcore(t, _side(t, ir, True), ir, False)
    dm, dp, d1, d2 = _hardcore(t, _side(t, ir, False), ir, True)
    return TreeSegments(
        r,
        u_minus=_labels(t, um),
        u_plus=_labels(t, up),
        u1=_labels(t, u1),
        u2=_labels(t, u2),
        d_minus=_labels(t, dp[::-1]),
        d_plus=_labels(t, dm[::-1]),
        d1=_labels(t, d1[::-1]),
        d2=_labels(t, d2[::-1]),
    )


def prefix_words(t: Poset) -> tuple[Word, Word]:
    """Left-right and right-left prefix readings of a tree with a minimum."""
    check_tree(t)
    mins = t.minimal_elements()
    if len(mins) != 1:
        raise NoMinimum("tree has no minimum")
    m = t.index[mins[0]]
    lr, rl = _preorders(t, set(range(len(t))), m, False)
    return _labels(t, [m, *lr]), _labels(t, [m, *rl])


def chain_tree_realizer(q: Poset, x: str, z: str) -> Realizer:
    """Realizer of a tree hung along a saturated chain from ``x`` to ``z``.

    ``x`` must be covered only by the first chain element and have nothing
    incomparable on its downward side; symmetrically for ``z``.
    """
    for v in (x, z):
        if v not in q:
            raise UnknownElement(v)
    check_tree(q)
    ix, iz = q.index[x], q.index[z]
    prev = {ix: None}
    queue = deque([ix])
    while queue:
        v = queue.popleft()
        for w in q._lower[v] + q._upper[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [iz]
    while path[-1] != ix:
        path.append(prev[path[-1]])
    path.reverse()
    if len(path) < 2 or any(b not in q._upper[a] for a, b in zip(path, path[1:])):
        raise PreconditionViolated(f"[{x}, {z}] is not a saturated chain")
    if list(q._upper[ix]) != [path[1]] or list(q._lower[iz]) != [path[-2]]:
        raise PreconditionViolated("chain ends have extra covers")
    if tree_neighborhood(q, x).down_plus or tree_neighborhood(q, z).up_minus:
        raise PreconditionViolated("chain ends have incomparable side branches")

    on_path = set(path)
    parts = {}
    for v in path:
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in q._lower[u] + q._upper[u]:
                if w not in seen and w not in on_path:
                    seen.add(w)
                    queue.append(w)
        parts[v] = restrict(q, [q.labels[i] for i in sorted(seen)])

    tx = rooted_realizer(RootedTree(parts[ix], x)).words()
    tz = rooted_realizer(RootedTree(parts[iz], z)).words()
    ys = [rooted_realizer(RootedTree(parts[v], q.labels[v])) for v in path[1:-1]]
    w1 = [v for s in reversed(ys) for v in s.u_minus + s.d1]
    w1 += [*tx[0], *(v for s in ys for v in (s.root, *s.u_plus)), *tz[0]]
    w2 = [*tx[1], *(v for s in ys for v in (*s.d_minus, s.root)), *tz[1]]
    w2 += [v for s in reversed(ys) for v in s.u1 + s.d_plus]
    w3 = [*tx[2], *(v for s in ys for v in (*s.d2, s.root, *s.u2)), *tz[2]]
    return (tuple(w1), tuple(w2), tuple(w3))
