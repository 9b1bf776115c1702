"""Biquandle colorings of Gauss diagrams and their transport through moves.

A coloring assigns an element of the biquandle to every semiarc.  Walking
the knot, the color changes only at crossing passages.  At a positive
crossing with incoming under color u_in and *outgoing* over color o_out:

    u_out = under(u_in, o_out)        o_in = over(o_out, u_in)

A negative crossing is the formal inverse, so the same two equations hold
with in and out exchanged on both strands:

    u_in = under(u_out, o_in)         o_out = over(o_in, u_out)

The number of colorings is the biquandle counting invariant.  Each crossing
also gets an *arrow label*, the pair of colors that sits at the positive
sense of the crossing: (u_in, o_out) at a positive crossing and
(u_out, o_in) at a negative one, which is the same pair read through the
inverse crossing.  Arrow weight sums (:mod:`arrowquiver.arrowweight`) are
functions of these labels.

Transport: performing a Reidemeister move on a colored diagram leaves the
colors of all semiarcs outside the move disk unchanged and determines the
colors inside uniquely.  :func:`transport_coloring` computes this, raising
:class:`TransportError` if the input was not a valid coloring or the move
does not match.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .biquandle import Biquandle
from .gausscode import (
    GaussDiagram,
    Move,
    R1Delete,
    R1Insert,
    R2Delete,
    R2Insert,
    R3Slide,
    apply_move,
)

__all__ = [
    "enumerate_colorings",
    "counting_invariant",
    "is_coloring",
    "chord_status",
    "chord_colors",
    "arrow_label",
    "transport_coloring",
    "TransportError",
]


class TransportError(RuntimeError):
    """A coloring could not be carried through a move."""


def chord_colors(
    d: GaussDiagram, coloring: tuple[int, ...], chord: int
) -> tuple[int, int, int, int]:
    """The four semiarc colors (u_in, u_out, o_in, o_out) around a chord."""
    two_n = len(d.endpoints)
    ui = d.index_of(chord, "U")
    oi = d.index_of(chord, "O")
    return (
        coloring[(ui - 1) % two_n],
        coloring[ui],
        coloring[(oi - 1) % two_n],
        coloring[oi],
    )


def _chord_ok(
    b: Biquandle, d: GaussDiagram, coloring: tuple[int, ...], chord: int
) -> bool:
    u_in, u_out, o_in, o_out = chord_colors(d, coloring, chord)
    if d.sign_of(chord) > 0:
        return (
            b.under_of(u_in, o_out) == u_out and b.over_of(o_out, u_in) == o_in
        )
    return b.under_of(u_out, o_in) == u_in and b.over_of(o_in, u_out) == o_out


def is_coloring(b: Biquandle, d: GaussDiagram, coloring: tuple[int, ...]) -> bool:
    """Whether ``coloring`` satisfies every crossing equation of ``d``."""
    if len(coloring) != d.num_semiarcs:
        return False
    if any(c not in b.elements for c in coloring):
        return False
    return all(_chord_ok(b, d, coloring, ch) for ch in range(1, d.n + 1))


def chord_status(
    b: Biquandle,
    d: GaussDiagram,
    partial: tuple[int | None, ...],
    chord: int,
) -> str:
    """Evaluate one chord's crossing equations on a partial coloring.

    Returns ``"satisfied"`` or ``"violated"`` when all four semiarc colors
    around the chord are assigned, ``"undetermined"`` otherwise.
    """
    two_n = len(d.endpoints)
    ui = d.index_of(chord, "U")
    oi = d.index_of(chord, "O")
    spots = ((ui - 1) % two_n, ui, (oi - 1) % two_n, oi)
    if any(partial[i] is None for i in spots):
        return "undetermined"
    ok = _chord_ok(b, d, partial, chord)  # type: ignore[arg-type]
    return "satisfied" if ok else "violated"


def enumerate_colorings(
    b: Biquandle, d: GaussDiagram
) -> list[tuple[int, ...]]:
    """All colorings of ``d`` by ``b``, sorted lexicographically.

    Colors are propagated semiarc by semiarc; a passage whose partner
    semiarc is still uncolored opens a branch, and complete assignments are
    verified against every crossing equation.
    """
    return list(_colorings(b, d))


def _helper_positions(d: GaussDiagram) -> list[int]:
    """For each endpoint, the semiarc whose color (with the previous
    semiarc's) forces the color after the endpoint."""
    two_n = len(d.endpoints)
    out = []
    for ep in d.endpoints:
        partner = d.index_of(ep.chord, "O" if ep.passage == "U" else "U")
        if (ep.passage == "U") == (ep.sign > 0):
            out.append(partner)
        else:
            out.append((partner - 1) % two_n)
    return out


@lru_cache(maxsize=1 << 15)
def _colorings(b: Biquandle, d: GaussDiagram) -> tuple[tuple[int, ...], ...]:
    two_n = len(d.endpoints)
    if two_n == 0:
        return tuple((x,) for x in b.elements)

    # Walking forward from the basepoint, position e branches only when its
    # helper semiarc is still uncolored (lies at or ahead of e).  Start at
    # the basepoint rotation that minimizes such branch points, and rotate
    # the found colorings back at the end.
    best_k, best_cost = 0, None
    for k in range(two_n):
        dd = d.rotated(k)
        helpers = _helper_positions(dd)
        cost = sum(1 for e in range(1, two_n) if helpers[e] >= e)
        if best_cost is None or cost < best_cost:
            best_k, best_cost = k, cost
        if cost == 0:
            break
    if best_k:
        back = two_n - best_k
        return tuple(
            sorted(
                c[back:] + c[:back] for c in _colorings(b, d.rotated(best_k))
            )
        )

    # a chord's equations close as soon as the last of its four surrounding
    # semiarcs is colored, which prunes branches immediately
    closes_at: list[list[tuple[tuple[int, int, int, int], int]]] = [
        [] for _ in range(two_n)
    ]
    for chord in range(1, d.n + 1):
        ui = d.index_of(chord, "U")
        oi = d.index_of(chord, "O")
        spots = ((ui - 1) % two_n, ui, (oi - 1) % two_n, oi)
        closes_at[max(spots)].append((spots, d.sign_of(chord)))

    def closed_ok(seg: list[int | None], e: int) -> bool:
        for (s0, s1, s2, s3), sign in closes_at[e]:
            u_in, u_out, o_in, o_out = seg[s0], seg[s1], seg[s2], seg[s3]
            if sign > 0:
                if (
                    b.under_of(u_in, o_out) != u_out
                    or b.over_of(o_out, u_in) != o_in
                ):
                    return False
            elif (
                b.under_of(u_out, o_in) != u_in
                or b.over_of(o_in, u_out) != o_out
            ):
                return False
        return True

    found: list[tuple[int, ...]] = []

    def step(seg: list[int | None], e: int) -> None:
        if e == two_n:
            found.append(tuple(seg))  # type: ignore[arg-type]
            return
        # color of segment e is determined by the passage at endpoint e
        ep = d.endpoints[e]
        prev = seg[e - 1]
        partner = d.index_of(ep.chord, "O" if ep.passage == "U" else "U")
        nxt: int | None = None
        if ep.passage == "U" and ep.sign > 0:
            o_out = seg[partner]
            if o_out is not None:
                nxt = b.under_of(prev, o_out)
        elif ep.passage == "O" and ep.sign > 0:
            u_in = seg[(partner - 1) % two_n]
            if u_in is not None:
                nxt = b.over_inv(prev, u_in)
        elif ep.passage == "U":
            o_in = seg[(partner - 1) % two_n]
            if o_in is not None:
                nxt = b.under_inv(prev, o_in)
        else:
            u_out = seg[partner]
            if u_out is not None:
                nxt = b.over_of(prev, u_out)
        candidates = b.elements if nxt is None else (nxt,)
        for v in candidates:
            seg[e] = v
            if closed_ok(seg, e):
                step(seg, e + 1)
        seg[e] = None

    for first in b.elements:
        seg: list[int | None] = [None] * two_n
        seg[0] = first
        if closed_ok(seg, 0):
            step(seg, 1)
    return tuple(sorted(found))


def counting_invariant(b: Biquandle, d: GaussDiagram) -> int:
    """The number of colorings of ``d`` by ``b``."""
    return len(enumerate_colorings(b, d))


def arrow_label(
    d: GaussDiagram, coloring: tuple[int, ...], chord: int
) -> tuple[int, int]:
    """The label (under color in, over color out) in the positive sense.

    At a negative crossing the positive sense is reached by inverting the
    crossing, which exchanges in and out on both strands.
    """
    u_in, u_out, o_in, o_out = chord_colors(d, coloring, chord)
    if d.sign_of(chord) > 0:
        return (u_in, o_out)
    return (u_out, o_in)


# ---------------------------------------------------------------------------
# transport


def _insertion_tags(
    two_n: int, blocks: dict[int, int]
) -> list[tuple[str, int, int]]:
    """Tags ('old', i, 0) / ('new', gap, t) in new diagram order.

    ``blocks`` maps a gap to the number of endpoints inserted there,
    mirroring the placement rule of the move engine.
    """
    tags: list[tuple[str, int, int]] = []
    for g in range(two_n + 1):
        if g in blocks:
            tags.extend(("new", g, t) for t in range(blocks[g]))
        if g < two_n:
            tags.append(("old", g, 0))
    return tags


def _solve_middles(
    b: Biquandle,
    d2: GaussDiagram,
    partial: list[int | None],
    middles: list[int],
) -> tuple[int, ...]:
    solutions = []
    for values in product(b.elements, repeat=len(middles)):
        seg = list(partial)
        for i, v in zip(middles, values):
            seg[i] = v
        coloring = tuple(seg)  # type: ignore[arg-type]
        if is_coloring(b, d2, coloring):
            solutions.append(coloring)
    if len(solutions) != 1:
        raise TransportError(
            f"expected a unique extension, found {len(solutions)}"
        )
    return solutions[0]


def _transport_insert(
    b: Biquandle,
    d: GaussDiagram,
    d2: GaussDiagram,
    coloring: tuple[int, ...],
    blocks: dict[int, int],
) -> tuple[int, ...]:
    two_n = len(d.endpoints)
    tags = _insertion_tags(two_n, blocks)
    new_len = len(d2.endpoints)
    assert len(tags) == new_len
    partial: list[int | None] = [None] * new_len
    middles: list[int] = []
    for j in range(new_len):
        here, nxt = tags[j], tags[(j + 1) % new_len]
        if here[0] == "new" and nxt[0] == "new" and here[1] == nxt[1] and nxt[2] == here[2] + 1:
            middles.append(j)  # strictly inside an inserted block
        elif here[0] == "old":
            partial[j] = coloring[here[1]]
        else:
            # a piece of the old semiarc the block at gap g was inserted in
            g = here[1]
            partial[j] = coloring[(g - 1) % two_n] if two_n else coloring[0]
    return _solve_middles(b, d2, partial, middles)


def _transport_delete(
    b: Biquandle,
    d: GaussDiagram,
    d2: GaussDiagram,
    coloring: tuple[int, ...],
    removed: set[int],
    inside: set[int],
) -> tuple[int, ...]:
    """Restrict a coloring after deleting ``removed`` endpoints.

    ``inside`` lists the old segment indices strictly inside the move disk,
    whose colors disappear with the move.
    """
    two_n = len(d.endpoints)
    kept = [i for i in range(two_n) if i not in removed]
    if not kept:
        # everything vanished; all surviving pieces must agree
        outer = {coloring[i] for i in range(two_n) if i not in inside}
        if len(outer) != 1:
            raise TransportError("move disk boundary colors disagree")
        result = (outer.pop(),)
    else:
        colors = []
        for a, z in zip(kept, kept[1:] + [kept[0] + two_n]):
            first = coloring[a % two_n]
            last = coloring[(z - 1) % two_n]
            if first != last:
                raise TransportError("move disk boundary colors disagree")
            colors.append(first)
        result = tuple(colors)
    if not is_coloring(b, d2, result):
        raise TransportError("restricted coloring fails crossing equations")
    return result


def transport_coloring(
    b: Biquandle, d: GaussDiagram, move: Move, coloring: tuple[int, ...]
) -> tuple[int, ...]:
    """Carry a coloring of ``d`` through ``move``.

    The result colors ``apply_move(d, move)``; semiarcs away from the move
    keep their colors.  Raises :class:`TransportError` when the coloring is
    invalid or cannot be extended (which signals a non-move).
    """
    if not is_coloring(b, d, coloring):
        raise TransportError("not a coloring of the input diagram")
    d2 = apply_move(d, move)
    two_n = len(d.endpoints)

    if isinstance(move, R1Insert):
        return _transport_insert(b, d, d2, coloring, {move.gap: 2})
    if isinstance(move, R2Insert):
        if move.gap_over == move.gap_under:
            blocks = {move.gap_over: 4}
        else:
            blocks = {move.gap_over: 2, move.gap_under: 2}
        return _transport_insert(b, d, d2, coloring, blocks)
    if isinstance(move, R1Delete):
        removed = {move.start, (move.start + 1) % two_n}
        return _transport_delete(b, d, d2, coloring, removed, {move.start})
    if isinstance(move, R2Delete):
        removed = set()
        for s in (move.over_start, move.under_start):
            removed.update({s, (s + 1) % two_n})
        inside = {move.over_start, move.under_start}
        return _transport_delete(b, d, d2, coloring, removed, inside)
    if isinstance(move, R3Slide):
        partial: list[int | None] = list(coloring)
        middles = list(move.sites)
        for s in middles:
            partial[s] = None
        return _solve_middles(b, d2, partial, middles)
    raise TypeError(f"unknown move {move!r}")
