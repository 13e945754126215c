"""Text formats for posets and realizers, plus DOT export.

A poset file is UTF-8 text with one directive per line::

    # comment
    elements x1 x2 z1 z2
    rel x1 z1

``rel a b`` declares ``a < b``; the transitive closure is taken. Every token
used in a ``rel`` line must be declared on some ``elements`` line.

A realizer file has one word per line, or is a JSON document with the keys
``elements``, ``words`` and ``verified``.
"""
from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .errors import ParseError, RelationCycle
from .poset import Poset, Realizer, build_poset


def _lines(data: bytes | str):
    if isinstance(data, str):
        data = data.encode("utf-8")
    for k, raw in enumerate(data.split(b"\n"), start=1):
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"invalid UTF-8 at byte {exc.start}", k) from None
        yield k, text.rstrip("\r")


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise ParseError(f"invalid UTF-8 at byte {exc.start}", line) from None


def parse_poset(data: bytes | str) -> Poset:
    labels: list[str] = []
    seen: dict[str, int] = {}
    rels: list[tuple[str, str, int]] = []
    for k, line in _lines(data):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        head, *toks = stripped.split()
        if head == "elements":
            for tok in toks:
                if tok in seen:
                    raise ParseError(f"element {tok!r} already declared on line {seen[tok]}", k)
                seen[tok] = k
                labels.append(tok)
        elif head == "rel":
            if len(toks) != 2:
                raise ParseError(f"'rel' takes exactly two elements, got {len(toks)}", k)
            if toks[0] == toks[1]:
                raise ParseError(f"element {toks[0]!r} cannot be below itself", k)
            rels.append((toks[0], toks[1], k))
        else:
            raise ParseError(f"unknown directive {head!r}", k)
    for a, b, k in rels:
        for tok in (a, b):
            if tok not in seen:
                raise ParseError(f"undeclared element {tok!r}", k)
    try:
        return build_poset(labels, [(a, b) for a, b, _ in rels])
    except RelationCycle as exc:
        on_cycle = set(zip(exc.cycle, exc.cycle[1:] + exc.cycle[:1]))
        line = next(k for a, b, k in rels if (a, b) in on_cycle)
        raise ParseError(str(exc), line) from None


def format_poset(p: Poset, header: str | None = None) -> str:
    """Elements in index order, then one ``rel`` line per cover."""
    out = []
    if header:
        out.extend(f"# {h}" for h in header.splitlines())
    if len(p):
        out.append("elements " + " ".join(p.labels))
    ii, jj = np.nonzero(p.cover_matrix)
    out.extend(f"rel {p.labels[i]} {p.labels[j]}" for i, j in zip(ii, jj))
    return "".join(line + "\n" for line in out)


def parse_realizer(data: bytes | str) -> Realizer:
    text = _decode(data)
    if text.lstrip().startswith("{"):
        return _parse_realizer_json(text)
    words = []
    for k, line in _lines(data):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words.append((k, tuple(stripped.split())))
    if not words:
        raise ParseError("realizer has no words")
    first = sorted(words[0][1])
    for k, w in words:
        if len(set(w)) != len(w):
            raise ParseError("word repeats an element", k)
        if sorted(w) != first:
            raise ParseError("word is not a permutation of the first word", k)
    return tuple(w for _, w in words)


def _parse_realizer_json(text: str) -> Realizer:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("words"), list):
        raise ParseError("JSON realizer needs a 'words' list")
    words = doc["words"]
    if not words or not all(isinstance(w, list) and all(isinstance(t, str) for t in w) for w in words):
        raise ParseError("'words' must be a non-empty list of lists of strings")
    ref = sorted(doc.get("elements") or words[0])
    for w in words:
        if len(set(w)) != len(w) or sorted(w) != ref:
            raise ParseError("words are not permutations of the same elements")
    return tuple(tuple(w) for w in words)


def format_realizer(words: Sequence[Sequence[str]]) -> str:
    return "".join(" ".join(w) + "\n" for w in words)


def format_realizer_json(p: Poset, words: Sequence[Sequence[str]], verified: bool) -> str:
    doc = {"elements": list(p.labels), "words": [list(w) for w in words], "verified": verified}
    return json.dumps(doc) + "\n"


def _quote(tok: str) -> str:
    return '"' + tok.replace("\\", "\\\\").replace('"', '\\"') + '"'


def heights(p: Poset) -> list[int]:
    """Length of the longest chain ending at each element."""
    h = [0] * len(p)
    order = np.argsort(p.less.sum(axis=0), kind="stable")
    for j in order:
        below = np.flatnonzero(p.less[:, j])
        if below.size:
            h[j] = 1 + max(h[i] for i in below)
    return h


def to_dot(p: Poset, name: str = "poset") -> str:
    """Hasse diagram in DOT, bottom to top, one rank per height."""
    out = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    out.extend(f"  {_quote(lab)};" for lab in p.labels)
    ii, jj = np.nonzero(p.cover_matrix)
    out.extend(f"  {_quote(p.labels[i])} -> {_quote(p.labels[j])};" for i, j in zip(ii, jj))
    levels: dict[int, list[str]] = {}
    for lab, hgt in zip(p.labels, heights(p)):
        levels.setdefault(hgt, []).append(lab)
    for hgt in sorted(levels):
        out.append("  { rank=same; " + " ".join(_quote(lab) + ";" for lab in levels[hgt]) + " }")
    out.append("}")
    return "\n".join(out) + "\n"
