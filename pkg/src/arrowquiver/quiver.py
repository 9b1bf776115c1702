"""Weighted coloring quivers and their weight quotients.

Fixing a set S of biquandle endomorphisms, the coloring quiver of a diagram
has one vertex per coloring and, for every coloring c and every f in S, an
edge from c to the coloring obtained by applying f color by color.  Each
vertex carries the weight sum of its coloring, making the quiver a
diagram-independent invariant of the knot (for valid arrow weights).

The quotient quiver merges vertices of equal weight, keeping every edge
with multiplicity; the polynomial invariants of
:mod:`arrowquiver.invariants` read either object.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrowweight import WeightTensor, sigma_D
from .biquandle import Biquandle
from .gausscode import GaussDiagram
from .homset import enumerate_colorings

__all__ = [
    "Quiver",
    "QuotientQuiver",
    "build_quiver",
    "quotient_quiver",
    "quiver_isomorphic",
]


@dataclass(frozen=True)
class Quiver:
    """A weighted coloring quiver; edges are (src, dst, endo) index triples."""

    vertices: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    endos: tuple[tuple[int, ...], ...]
    modulus: int

    def indegrees(self) -> tuple[int, ...]:
        acc = [0] * len(self.vertices)
        for _, dst, _ in self.edges:
            acc[dst] += 1
        return tuple(acc)

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for i, (v, w) in enumerate(zip(self.vertices, self.weights)):
            label = "".join(str(c) for c in v)
            lines.append(f'  v{i} [label="{label} | {w}"];')
        for src, dst, k in self.edges:
            lines.append(f"  v{src} -> v{dst} [label=\"f{k}\"];")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class QuotientQuiver:
    """Vertices are weight values; edges keep multiplicity."""

    weights: tuple[int, ...]
    sizes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (src_idx, dst_idx, multiplicity)
    modulus: int

    def to_dot(self) -> str:
        lines = ["digraph quotient {"]
        for i, (w, s) in enumerate(zip(self.weights, self.sizes)):
            lines.append(f'  w{i} [label="{w} (x{s})"];')
        for src, dst, mult in self.edges:
            lines.append(f'  w{src} -> w{dst} [label="{mult}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_quiver(
    b: Biquandle,
    w: WeightTensor,
    d: GaussDiagram,
    endos: list[tuple[int, ...]] | None = None,
) -> Quiver:
    """The coloring quiver of ``d`` weighted by ``w``, under the set ``endos``.

    ``endos`` defaults to every endomorphism of ``b``; each must map
    colorings to colorings, which holds for any biquandle endomorphism.
    """
    if endos is None:
        endos = b.endomorphisms()
    colorings = enumerate_colorings(b, d)
    index = {c: i for i, c in enumerate(colorings)}
    weights = tuple(sigma_D(w, d, c) for c in colorings)
    edges = []
    for k, f in enumerate(endos):
        for c in colorings:
            image = tuple(f[x - 1] for x in c)
            if image not in index:
                raise ValueError(f"map {f} does not preserve colorings")
            edges.append((index[c], index[image], k))
    return Quiver(
        tuple(colorings), weights, tuple(edges), tuple(map(tuple, endos)), w.m
    )


def quotient_quiver(q: Quiver) -> QuotientQuiver:
    """Merge vertices of equal weight, preserving edge multiplicities."""
    weights = tuple(sorted(set(q.weights)))
    index = {w: i for i, w in enumerate(weights)}
    sizes = [0] * len(weights)
    for w in q.weights:
        sizes[index[w]] += 1
    mult: dict[tuple[int, int], int] = {}
    for src, dst, _ in q.edges:
        key = (index[q.weights[src]], index[q.weights[dst]])
        mult[key] = mult.get(key, 0) + 1
    edges = tuple((s, t, m) for (s, t), m in sorted(mult.items()))
    return QuotientQuiver(weights, tuple(sizes), edges, q.modulus)


def _refine(
    succ: list[tuple[int, ...]], colors: list[int]
) -> list[int]:
    n = len(colors)
    while True:
        keys = [
            (colors[i], tuple(colors[s[i]] for s in succ)) for i in range(n)
        ]
        relabel: dict[tuple, int] = {}
        new = []
        for k in sorted(set(keys)):
            relabel[k] = len(relabel)
        new = [relabel[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def quiver_isomorphic(q1: Quiver, q2: Quiver, ignore_weights: bool = False) -> bool:
    """Whether two quivers over the same endomorphism set are isomorphic.

    An isomorphism is a vertex bijection commuting with the action of each
    endomorphism (matched by position in the endo list) and, unless
    ``ignore_weights``, preserving vertex weights.
    """
    if len(q1.vertices) != len(q2.vertices) or len(q1.endos) != len(q2.endos):
        return False
    n = len(q1.vertices)

    def successors(q: Quiver) -> list[tuple[int, ...]]:
        table = [[0] * n for _ in q.endos]
        for src, dst, k in q.edges:
            table[k][src] = dst
        return [tuple(row) for row in table]

    s1, s2 = successors(q1), successors(q2)
    if ignore_weights:
        c1 = [0] * n
        c2 = [0] * n
    else:
        if sorted(q1.weights) != sorted(q2.weights) or q1.modulus != q2.modulus:
            return False
        order = {w: i for i, w in enumerate(sorted(set(q1.weights)))}
        c1 = [order[w] for w in q1.weights]
        c2 = [order[w] for w in q2.weights]
    c1 = _refine(s1, c1)
    c2 = _refine(s2, c2)
    if sorted(c1) != sorted(c2):
        return False

    mapping = [-1] * n
    used = [False] * n

    def consistent() -> bool:
        for k in range(len(s1)):
            for v in range(n):
                if mapping[v] == -1:
                    continue
                im = mapping[s1[k][v]]
                if im != -1 and im != s2[k][mapping[v]]:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or c1[i] != c2[j]:
                continue
            mapping[i] = j
            used[j] = True
            if consistent() and extend(i + 1):
                return True
            mapping[i] = -1
            used[j] = False
        return False

    return extend(0)
