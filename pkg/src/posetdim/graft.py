"""Three-word realizers of unicycle posets.

A unicycle poset is decomposed into a cycle poset (a crown with subdivided
covers) and a rooted tree hung at every cycle element. Each chain ``p`` of
elements subdividing cover ``p`` contributes the word builders ``A_p``,
``B_p`` and ``C_p``; each crown vertex contributes its
:class:`~posetdim.trees.VertexSegments`. The three words are concatenations
of these pieces in an order that depends only on the crown size.

Words are assembled as lists of tagged pieces so that a long assembly can be
audited piece by piece with debug logging enabled.

Two restricted assemblies are kept alongside the full one: one for instances
whose crown vertices carry no trees, and one for instances without chains.
They are written out separately and serve as cross-checks.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

from .classify import (
    OTHER,
    TREE,
    RootedTree,
    UnicycleDecomposition,
    classify,
    decompose,
    validate,
)
from .errors import PreconditionViolated, UnsupportedClass
from .poset import Poset, Realizer, Word, disjoint_union_realizer, restrict
from .trees import TreeSegments, VertexSegments, rooted_realizer

log = logging.getLogger(__name__)

Piece = tuple[str, Word]


@dataclass(frozen=True)
class ChainSegments:
    """Word builders for the chain ``ys`` subdividing cover ``p``."""

    p: int
    ys: Word
    segments: tuple[TreeSegments, ...]

    def a(self, inner: list[Piece]) -> list[Piece]:
        pre = tuple(v for s in reversed(self.segments) for v in s.u_minus + s.d1)
        post = tuple(v for s in self.segments for v in (s.root, *s.u_plus))
        return [(f"A{self.p}<", pre), *inner, (f"A{self.p}>", post)]

    def b(self, inner: list[Piece]) -> list[Piece]:
        pre = tuple(v for s in self.segments for v in (*s.d_minus, s.root))
        post = tuple(v for s in reversed(self.segments) for v in s.u1 + s.d_plus)
        return [(f"B{self.p}<", pre), *inner, (f"B{self.p}>", post)]

    def c(self) -> list[Piece]:
        return [(f"C{self.p}", tuple(v for s in self.segments for v in (*s.d2, s.root, *s.u2)))]


@dataclass(frozen=True)
class Segments:
    d: UnicycleDecomposition
    chains: Mapping[int, ChainSegments]
    vertices: Mapping[str, VertexSegments]


def build_segments(d: UnicycleDecomposition) -> Segments:
    validate(d)
    chains = {}
    for p in range(1, 2 * d.n + 1):
        ys = d.chains[p - 1]
        chains[p] = ChainSegments(p, ys, tuple(rooted_realizer(d.trees[y]) for y in ys))
    vertices = {v: rooted_realizer(d.trees[v]).vertex_segments() for v in (*d.x, *d.z)}
    return Segments(d, chains, vertices)


class _Words:
    """Cyclically indexed access to the pieces of one decomposition."""

    def __init__(self, seg: Segments):
        self.seg = seg
        self.n = seg.d.n

    def _x(self, i):
        return self.seg.d.x[(i - 1) % self.n]

    def _z(self, i):
        return self.seg.d.z[(i - 1) % self.n]

    def _chain(self, p) -> ChainSegments:
        return self.seg.chains[(p - 1) % (2 * self.n) + 1]

    def A(self, p, inner):
        return self._chain(p).a(inner)

    def B(self, p, inner):
        return self._chain(p).b(inner)

    def C(self, p):
        return self._chain(p).c()

    def _vertex(self, name, v, kind):
        vs = self.seg.vertices[v]
        word = {"-": vs.w_minus, "+": vs.w_plus, "*": vs.w_bullet, "I-": vs.i_minus, "I+": vs.i_plus}[kind]
        return [(f"{kind}{name}" if kind[0] == "I" else f"{name}{kind}", word)]

    def X(self, i, kind):
        return self._vertex(f"x{(i - 1) % self.n + 1}", self._x(i), kind)

    def Z(self, i, kind):
        return self._vertex(f"z{(i - 1) % self.n + 1}", self._z(i), kind)

    def Ix(self, i, sign):
        return self._vertex(f"x{(i - 1) % self.n + 1}", self._x(i), "I" + sign)

    def Iz(self, i, sign):
        return self._vertex(f"z{(i - 1) % self.n + 1}", self._z(i), "I" + sign)

    def x(self, i):
        return [(f"x{(i - 1) % self.n + 1}", (self._x(i),))]

    def z(self, i):
        return [(f"z{(i - 1) % self.n + 1}", (self._z(i),))]


def _join(label: str, pieces: list[Piece]) -> Word:
    if log.isEnabledFor(logging.DEBUG):
        log.debug("%s: %s", label, " ".join(f"{tag}[{len(w)}]" for tag, w in pieces))
    return tuple(v for _, w in pieces for v in w)


def _finish(label: str, words: tuple[list[Piece], ...]) -> Realizer:
    return tuple(_join(f"{label} word {k + 1}", w) for k, w in enumerate(words))


def edge_only_realizer(d: UnicycleDecomposition) -> Realizer:
    """Realizer when every crown vertex carries a one-element tree."""
    seg = build_segments(d)
    for v in (*d.x, *d.z):
        if len(d.trees[v].tree) != 1:
            raise PreconditionViolated(f"crown vertex {v} carries a nontrivial tree")
    w = _Words(seg)
    A, B, C, x, z, n = w.A, w.B, w.C, w.x, w.z, w.n
    if n == 1:
        w1 = A(1, x(1)) + B(2, z(1))
        w2 = A(2, x(1)) + B(1, z(1))
        w3 = x(1) + C(1) + C(2) + z(1)
    elif n == 2:
        w1 = A(1, x(1)) + x(2) + B(2, z(1)) + B(3, B(4, z(2)))
        w2 = A(2, A(3, x(2))) + A(4, x(1)) + z(2) + B(1, z(1))
        w3 = x(1) + C(4) + x(2) + C(1) + C(3) + z(2) + C(2) + z(1)
    else:
        # the n = 3 words are the n >= 4 words with empty middle products
        w1 = A(1, x(1)) + x(2) + B(2, z(1)) + C(2 * n)
        for i in range(2, n):
            w1 += C(2 * i - 1) + A(2 * i, x(i + 1)) + z(i)
        w1 += B(2 * n - 1, z(n))
        w2 = A(3, x(2)) + x(3) + B(4, z(2)) + C(2)
        for i in range(3, n):
            w2 += x(i + 1) + B(2 * i - 1, B(2 * i, z(i)))
        w2 += C(2 * n - 1) + A(2 * n, x(1)) + z(n) + B(1, z(1))
        w3 = x(1) + A(2 * n - 1, x(n)) + B(2 * n, z(n)) + C(1)
        for i in range(n - 1, 2, -1):
            w3 += C(2 * i) + A(2 * i - 1, x(i)) + z(i)
        w3 += C(4) + A(2, x(2)) + B(3, z(2)) + z(1)
    return _finish("edge-only", (w1, w2, w3))


def vertex_only_realizer(d: UnicycleDecomposition) -> Realizer:
    """Realizer when the cycle poset is a bare crown.

    For ``n == 1`` the two middle elements of the square must carry
    one-element trees.
    """
    seg = build_segments(d)
    n = d.n
    if n == 1:
        if any(len(c) != 1 or len(d.trees[c[0]].tree) != 1 for c in d.chains):
            raise PreconditionViolated("square middle elements must be bare")
    elif any(d.chains):
        raise PreconditionViolated("cycle poset has subdivided covers")
    w = _Words(seg)
    X, Z, Ix, Iz = w.X, w.Z, w.Ix, w.Iz
    if n == 1:
        (a,), (b,) = d.chains
        a, b = [("a", (a,))], [("b", (b,))]
        w1 = X(1, "-") + a + b + Z(1, "*") + Ix(1, "+")
        w2 = Iz(1, "-") + X(1, "*") + b + a + Z(1, "+")
        w3 = Ix(1, "-") + X(1, "+") + a + b + Z(1, "-") + Iz(1, "+")
    elif n == 2:
        w1 = X(1, "-") + X(2, "-") + Z(1, "*") + Z(2, "*") + Ix(1, "+") + Ix(2, "+")
        w2 = Iz(2, "-") + Iz(1, "-") + X(2, "*") + X(1, "*") + Z(2, "+") + Z(1, "+")
        w3 = Ix(1, "-") + X(1, "+") + Ix(2, "-") + X(2, "+") + Z(2, "-") + Iz(2, "+") + Z(1, "-") + Iz(1, "+")
    elif n == 3:
        w1 = Iz(1, "-") + Ix(2, "-") + X(1, "-") + X(2, "+") + Z(1, "+") + X(3, "-") + Z(2, "-") + Iz(2, "+")
        w1 += Z(3, "*") + Ix(3, "+") + Ix(1, "+")
        w2 = Iz(2, "-") + X(2, "*") + Ix(3, "-") + X(3, "+") + Z(2, "+") + X(1, "*") + Z(3, "-") + Z(1, "*")
        w2 += Iz(3, "+")
        w3 = Iz(3, "-") + Ix(1, "-") + X(1, "+") + X(3, "*") + Z(3, "+") + X(2, "-") + Z(2, "*") + Z(1, "-")
        w3 += Iz(1, "+") + Ix(2, "+")
    else:
        w1 = Iz(1, "-") + Ix(2, "-") + X(1, "-") + X(2, "+") + Z(1, "+") + X(3, "-") + Z(2, "-") + Iz(2, "+")
        for i in range(3, n):
            w1 += X(i + 1, "-") + Z(i, "-") + Iz(i, "+") + Ix(i, "+")
        w1 += Z(n, "*") + Ix(n, "+") + Ix(1, "+")
        w2 = Iz(2, "-") + X(2, "*")
        for i in range(2, n - 1):
            w2 += Iz(i + 1, "-") + Ix(i + 1, "-") + X(i + 1, "+") + Z(i, "+")
        w2 += Ix(n, "-") + X(n, "+") + Z(n - 1, "+") + X(1, "*") + Z(n, "-") + Z(1, "*") + Iz(n, "+")
        w3 = Iz(n, "-") + Ix(1, "-") + X(1, "+") + X(n, "*") + Z(n, "+")
        for i in range(n - 1, 2, -1):
            w3 += X(i, "*") + Z(i, "*")
        w3 += X(2, "-") + Z(2, "*") + Z(1, "-") + Iz(1, "+") + Ix(2, "+")
    return _finish("vertex-only", (w1, w2, w3))


def unicycle_realizer(d: UnicycleDecomposition) -> Realizer:
    """Three linear extensions realizing ``graft(d)`` for any valid ``d``."""
    w = _Words(build_segments(d))
    A, B, C, X, Z, Ix, Iz, n = w.A, w.B, w.C, w.X, w.Z, w.Ix, w.Iz, w.n
    if n == 1:
        w1 = A(1, X(1, "-")) + B(2, Z(1, "*")) + Ix(1, "+")
        w2 = Iz(1, "-") + A(2, X(1, "*")) + B(1, Z(1, "+"))
        w3 = Ix(1, "-") + X(1, "+") + C(1) + C(2) + Z(1, "-") + Iz(1, "+")
    elif n == 2:
        w1 = A(1, X(1, "-")) + X(2, "-") + B(2, Z(1, "*")) + B(3, B(4, Z(2, "*"))) + Ix(1, "+") + Ix(2, "+")
        w2 = Iz(2, "-") + Iz(1, "-") + A(2, A(3, X(2, "*"))) + A(4, X(1, "*")) + Z(2, "+") + B(1, Z(1, "+"))
        w3 = Ix(1, "-") + X(1, "+") + C(4) + Ix(2, "-") + X(2, "+") + C(1) + C(3) + Z(2, "-") + Iz(2, "+")
        w3 += C(2) + Z(1, "-") + Iz(1, "+")
    elif n == 3:
        w1 = Iz(1, "-") + Ix(2, "-") + A(1, X(1, "-")) + X(2, "+") + B(2, Z(1, "+")) + C(6) + C(3)
        w1 += A(4, X(3, "-")) + Z(2, "-") + Iz(2, "+") + B(5, Z(3, "*")) + Ix(3, "+") + Ix(1, "+")
        w2 = Iz(2, "-") + A(3, X(2, "*")) + Ix(3, "-") + X(3, "+") + B(4, Z(2, "+")) + C(2) + C(5)
        w2 += A(6, X(1, "*")) + Z(3, "-") + B(1, Z(1, "*")) + Iz(3, "+")
        w3 = Iz(3, "-") + Ix(1, "-") + X(1, "+") + A(5, X(3, "*")) + B(6, Z(3, "+")) + C(1) + C(4)
        w3 += A(2, X(2, "-")) + B(3, Z(2, "*")) + Z(1, "-") + Iz(1, "+") + Ix(2, "+")
    else:
        w1 = Iz(1, "-") + Ix(2, "-") + A(1, X(1, "-")) + X(2, "+") + B(2, Z(1, "+")) + C(2 * n)
        w1 += C(3) + A(4, X(3, "-")) + Z(2, "-") + Iz(2, "+")
        for i in range(3, n):
            w1 += C(2 * i - 1) + A(2 * i, X(i + 1, "-")) + Z(i, "-") + Iz(i, "+") + Ix(i, "+")
        w1 += B(2 * n - 1, Z(n, "*")) + Ix(n, "+") + Ix(1, "+")

        w2 = Iz(2, "-") + A(3, X(2, "*"))
        w2 += Iz(3, "-") + Ix(3, "-") + X(3, "+") + B(4, Z(2, "+")) + C(2)
        for i in range(3, n - 1):
            w2 += Iz(i + 1, "-") + Ix(i + 1, "-") + X(i + 1, "+") + B(2 * i - 1, B(2 * i, Z(i, "+")))
        w2 += Ix(n, "-") + X(n, "+") + B(2 * n - 3, B(2 * n - 2, Z(n - 1, "+")))
        w2 += C(2 * n - 1) + A(2 * n, X(1, "*")) + Z(n, "-") + B(1, Z(1, "*")) + Iz(n, "+")

        w3 = Iz(n, "-") + Ix(1, "-") + X(1, "+") + A(2 * n - 1, X(n, "*")) + B(2 * n, Z(n, "+")) + C(1)
        for i in range(n - 1, 2, -1):
            w3 += C(2 * i) + A(2 * i - 1, X(i, "*")) + Z(i, "*")
        w3 += C(4) + A(2, X(2, "-")) + B(3, Z(2, "*")) + Z(1, "-") + Iz(1, "+") + Ix(2, "+")
    return _finish(f"unicycle n={n}", (w1, w2, w3))


def realize_any(p: Poset) -> Realizer:
    """Three-word realizer of a poset whose components are trees or unicycles."""
    cls = classify(p)
    if OTHER in cls.kinds:
        bad = cls.components[cls.kinds.index(OTHER)]
        raise UnsupportedClass(f"component containing {min(bad)} has more than one cycle")
    parts = []
    for comp, kind in zip(cls.components, cls.kinds):
        sub = restrict(p, comp)
        if kind == TREE:
            words = rooted_realizer(RootedTree(sub, min(comp))).words()
        else:
            words = unicycle_realizer(decompose(sub))
        parts.append((sub, words))
    return disjoint_union_realizer(parts)[1]
