"""Signed Gauss codes and Reidemeister moves on them.

A signed Gauss code records the sequence of crossing passages met while
traversing an oriented knot diagram from a basepoint: each crossing is met
once on the overstrand (O) and once on the understrand (U), and carries a
sign.  The code ``O1+U2-U1+O2-`` means: over crossing 1 (positive), under
crossing 2 (negative), and so on.  Any such code describes a virtual knot;
it describes a classical knot iff it is realizable by a planar diagram, which
we never need to decide.

The basepoint splits the knot into 2n semiarcs (n = number of crossings);
semiarc i runs from the i-th passage to the (i+1)-th, cyclically, and semiarc
2n-1 closes up back to passage 0.  With zero crossings there is a single
closed semiarc.

Two chords of the Gauss diagram *cross* when their endpoint pairs interleave
cyclically; arrow weight sums run over exactly these pairs.

Reidemeister moves are represented explicitly as :class:`R1Insert`,
:class:`R1Delete`, :class:`R2Insert`, :class:`R2Delete` and :class:`R3Slide`
instances so that a coloring of the old diagram can be transported through
the move (see :mod:`arrowquiver.homset`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Endpoint",
    "GaussDiagram",
    "parse_gauss_code",
    "R1Insert",
    "R1Delete",
    "R2Insert",
    "R2Delete",
    "R3Slide",
    "Move",
    "enumerate_moves",
    "apply_move",
    "inverse_move",
]

_TOKEN = re.compile(r"([OU])(\d+)([+-])")


@dataclass(frozen=True)
class Endpoint:
    """One passage through a crossing: which chord, O or U, and the sign."""

    chord: int
    passage: str  # "O" or "U"
    sign: int  # +1 or -1

    def __str__(self) -> str:
        return f"{self.passage}{self.chord}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussDiagram:
    """An oriented knot as a cyclic word of crossing passages."""

    endpoints: tuple[Endpoint, ...]

    def __post_init__(self) -> None:
        seen: dict[int, dict[str, int]] = {}
        for e in self.endpoints:
            if e.passage not in ("O", "U") or e.sign not in (1, -1):
                raise ValueError(f"malformed endpoint {e!r}")
            slot = seen.setdefault(e.chord, {})
            if e.passage in slot:
                raise ValueError(f"chord {e.chord} visited twice as {e.passage}")
            slot[e.passage] = e.sign
        for chord, slot in seen.items():
            if set(slot) != {"O", "U"}:
                raise ValueError(f"chord {chord} lacks an O or U passage")
            if slot["O"] != slot["U"]:
                raise ValueError(f"chord {chord} has mismatched signs")
        if seen and sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError(f"chord labels must be 1..n, got {sorted(seen)}")

    @property
    def n(self) -> int:
        """Number of crossings."""
        return len(self.endpoints) // 2

    @property
    def num_semiarcs(self) -> int:
        return max(1, len(self.endpoints))

    def __str__(self) -> str:
        return "".join(str(e) for e in self.endpoints)

    def _tables(self) -> tuple[dict[tuple[int, str], int], dict[int, int]]:
        try:
            return self._index, self._signs  # type: ignore[attr-defined]
        except AttributeError:
            index = {
                (e.chord, e.passage): i for i, e in enumerate(self.endpoints)
            }
            signs = {e.chord: e.sign for e in self.endpoints}
            object.__setattr__(self, "_index", index)
            object.__setattr__(self, "_signs", signs)
            return index, signs

    def index_of(self, chord: int, passage: str) -> int:
        index, _ = self._tables()
        try:
            return index[(chord, passage)]
        except KeyError:
            raise KeyError((chord, passage)) from None

    def sign_of(self, chord: int) -> int:
        _, signs = self._tables()
        try:
            return signs[chord]
        except KeyError:
            raise KeyError(chord) from None

    def chords_cross(self, p: int, q: int) -> bool:
        """Whether chords p and q interleave in the cyclic order."""
        po, pu = self.index_of(p, "O"), self.index_of(p, "U")
        qo, qu = self.index_of(q, "O"), self.index_of(q, "U")
        lo, hi = min(po, pu), max(po, pu)
        inside_q = (lo < qo < hi, lo < qu < hi)
        return inside_q[0] != inside_q[1]

    def crossing_pairs(self) -> list[tuple[int, int]]:
        """All unordered pairs of chords that interleave, as (p, q), p < q."""
        return [
            (p, q)
            for p, q in combinations(range(1, self.n + 1), 2)
            if self.chords_cross(p, q)
        ]

    def rotated(self, k: int) -> "GaussDiagram":
        """Move the basepoint k passages forward; chord labels are kept."""
        if not self.endpoints:
            return self
        k %= len(self.endpoints)
        return GaussDiagram(self.endpoints[k:] + self.endpoints[:k])

    def reversed(self) -> "GaussDiagram":
        """Reverse the orientation of the knot (signs are unchanged)."""
        return GaussDiagram(tuple(reversed(self.endpoints)))

    def mirrored(self) -> "GaussDiagram":
        """Switch every crossing: O and U swap and all signs flip."""
        return GaussDiagram(
            tuple(
                Endpoint(e.chord, "U" if e.passage == "O" else "O", -e.sign)
                for e in self.endpoints
            )
        )

    def writhe(self) -> int:
        return sum(e.sign for e in self.endpoints) // 2

    def _relabeled(self) -> "GaussDiagram":
        """Renumber chords 1..n in order of first appearance."""
        return GaussDiagram(_relabel(self.endpoints))

    def canonical_code(self) -> str:
        """A code equal for diagrams differing only by basepoint rotation
        or chord renumbering: the least relabeled code over all rotations."""
        two_n = len(self.endpoints)
        return min(
            str(self.rotated(k)._relabeled()) for k in range(max(1, two_n))
        )


def _relabel(endpoints) -> tuple[Endpoint, ...]:
    """Renumber chords 1..n in order of first appearance."""
    order: dict[int, int] = {}
    for e in endpoints:
        if e.chord not in order:
            order[e.chord] = len(order) + 1
    return tuple(Endpoint(order[e.chord], e.passage, e.sign) for e in endpoints)


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a signed Gauss code such as ``O1+O2+U1+U2+``.

    Tokens may optionally be separated by whitespace or commas.  The empty
    string is the zero-crossing unknot.
    """
    cleaned = re.sub(r"[\s,]+", "", text)
    pos = 0
    endpoints: list[Endpoint] = []
    while pos < len(cleaned):
        m = _TOKEN.match(cleaned, pos)
        if not m:
            raise ValueError(f"bad Gauss code near {cleaned[pos:pos + 8]!r}")
        passage, chord, sign = m.group(1), int(m.group(2)), m.group(3)
        endpoints.append(Endpoint(chord, passage, 1 if sign == "+" else -1))
        pos = m.end()
    return GaussDiagram(tuple(endpoints))


# ---------------------------------------------------------------------------
# Reidemeister moves
#
# Insertion positions are gaps between passages: gap g means "immediately
# before endpoint index g" in 0..2n (gap 0 == gap 2n on the circle, kept
# distinct only so that round trips restore the exact word).  New chords are
# labeled n+1 (and n+2 for R2); deletions renumber the survivors back to 1..n
# preserving relative order.


@dataclass(frozen=True)
class R1Insert:
    """Add a kink: the two new passages sit side by side in one gap.

    ``head_first`` False inserts [O U] (the overpass is met first), True
    inserts [U O].  Both chiralities times both signs are legal.
    """

    gap: int
    head_first: bool
    sign: int


@dataclass(frozen=True)
class R1Delete:
    """Remove a kink whose two passages are cyclically adjacent.

    ``start`` is the index of the first of the two adjacent passages (the
    pair is (start, start+1 mod 2n)).
    """

    start: int


@dataclass(frozen=True)
class R2Insert:
    """Slide one strand over another, adding two canceling crossings.

    The O passages of the new chords a = n+1, b = n+2 land in ``gap_over``
    as the block [Oa Ob]; the U passages land in ``gap_under``.  For a
    parallel poke the U block is [Ua Ub]; antiparallel it is [Ub Ua].  Chord
    a gets ``sign`` and b gets the opposite sign.  The two gaps may coincide,
    in which case the O block is placed first ([Oa Ob Ub Ua] doubles the
    strand straight back over its target; [Oa Ob Ua Ub] loops it around).
    """

    gap_over: int
    gap_under: int
    antiparallel: bool
    sign: int


@dataclass(frozen=True)
class R2Delete:
    """Cancel two crossings forming an R2 pair.

    ``over_start`` indexes the [Oa Ob] block, ``under_start`` the U block
    ([Ua Ub] if parallel, [Ub Ua] if antiparallel).  Blocks may wrap around
    the basepoint.
    """

    over_start: int
    under_start: int
    antiparallel: bool


@dataclass(frozen=True)
class R3Slide:
    """Slide a strand across a crossing.

    The move needs three chords x, y, z of a common sign ``eps`` meeting in
    three two-passage sites:

        left form:   [Ux Uy]   [Ox Uz]   [Oy Oz]
        right form:  [Uy Ux]   [Uz Ox]   [Oz Oy]

    ``sites`` are the indices of the first passage of each block, in the
    order above; the slide swaps the two passages inside each block in
    place, toggling between the forms.
    """

    sites: tuple[int, int, int]
    form: str  # "L" or "R"
    chords: tuple[int, int, int]  # (x, y, z)
    eps: int


Move = R1Insert | R1Delete | R2Insert | R2Delete | R3Slide


def _insert_blocks(
    d: GaussDiagram, blocks: dict[int, list[Endpoint]]
) -> GaussDiagram:
    out: list[Endpoint] = []
    for g in range(len(d.endpoints) + 1):
        if g in blocks:
            out.extend(blocks[g])
        if g < len(d.endpoints):
            out.append(d.endpoints[g])
    return GaussDiagram(tuple(out))


def _delete_indices(d: GaussDiagram, indices: set[int]) -> GaussDiagram:
    kept = [e for i, e in enumerate(d.endpoints) if i not in indices]
    return GaussDiagram(_relabel(kept))


def _adjacent(d: GaussDiagram, i: int) -> int:
    return (i + 1) % len(d.endpoints)


def apply_move(d: GaussDiagram, move: Move) -> GaussDiagram:
    """The diagram after performing ``move`` on ``d``.

    Raises ValueError when the move does not match the diagram.
    """
    two_n = len(d.endpoints)
    if isinstance(move, R1Insert):
        if not 0 <= move.gap <= two_n:
            raise ValueError("R1 gap out of range")
        c = d.n + 1
        pair = [Endpoint(c, "U", move.sign), Endpoint(c, "O", move.sign)]
        if not move.head_first:
            pair.reverse()
        return _insert_blocks(d, {move.gap: pair})

    if isinstance(move, R1Delete):
        i = move.start
        j = _adjacent(d, i)
        a, b = d.endpoints[i], d.endpoints[j]
        if a.chord != b.chord or i == j:
            raise ValueError("R1 deletion needs adjacent passages of one chord")
        return _delete_indices(d, {i, j})

    if isinstance(move, R2Insert):
        a, b = d.n + 1, d.n + 2
        sa, sb = move.sign, -move.sign
        over = [Endpoint(a, "O", sa), Endpoint(b, "O", sb)]
        under = [Endpoint(a, "U", sa), Endpoint(b, "U", sb)]
        if move.antiparallel:
            under.reverse()
        if move.gap_over == move.gap_under:
            return _insert_blocks(d, {move.gap_over: over + under})
        return _insert_blocks(d, {move.gap_over: over, move.gap_under: under})

    if isinstance(move, R2Delete):
        i, j = move.over_start, move.under_start
        i2, j2 = _adjacent(d, i), _adjacent(d, j)
        if len({i, i2, j, j2}) != 4:
            raise ValueError("R2 blocks overlap")
        oa, ob = d.endpoints[i], d.endpoints[i2]
        if move.antiparallel:
            ub, ua = d.endpoints[j], d.endpoints[j2]
        else:
            ua, ub = d.endpoints[j], d.endpoints[j2]
        if (oa.passage, ob.passage, ua.passage, ub.passage) != ("O", "O", "U", "U"):
            raise ValueError("R2 deletion passages mismatch")
        if (oa.chord, ob.chord) != (ua.chord, ub.chord):
            raise ValueError("R2 deletion chords mismatch")
        if oa.sign != -ob.sign:
            raise ValueError("R2 deletion needs opposite signs")
        return _delete_indices(d, {i, i2, j, j2})

    if isinstance(move, R3Slide):
        sa, sb, sc = move.sites
        idx = []
        for s in (sa, sb, sc):
            idx.extend([s, _adjacent(d, s)])
        if len(set(idx)) != 6:
            raise ValueError("R3 sites overlap")
        x, y, z = move.chords
        eps = move.eps
        want_l = [
            ("U", x), ("U", y), ("O", x), ("U", z), ("O", y), ("O", z),
        ]
        want_r = [
            ("U", y), ("U", x), ("U", z), ("O", x), ("O", z), ("O", y),
        ]
        want = want_l if move.form == "L" else want_r
        got = [(d.endpoints[i].passage, d.endpoints[i].chord) for i in idx]
        if got != want:
            raise ValueError("R3 sites do not match the stated form")
        if any(d.endpoints[i].sign != eps for i in idx):
            raise ValueError("R3 needs a common sign on all three chords")
        ends = list(d.endpoints)
        for s in (sa, sb, sc):
            t = _adjacent(d, s)
            ends[s], ends[t] = ends[t], ends[s]
        return GaussDiagram(tuple(ends))

    raise TypeError(f"unknown move {move!r}")


def inverse_move(d: GaussDiagram, move: Move) -> Move:
    """The move that undoes ``move``, stated on ``apply_move(d, move)``.

    Applying a move and then its inverse restores the original diagram up
    to basepoint rotation and chord renumbering (deletions renumber the
    remaining chords, and blocks that straddled the basepoint are restored
    in a single gap), so round trips compare equal under
    :meth:`GaussDiagram.canonical_code`.
    """
    two_n = len(d.endpoints)
    if isinstance(move, R1Insert):
        return R1Delete(move.gap)

    if isinstance(move, R1Delete):
        i = move.start
        j = _adjacent(d, i)
        head = d.endpoints[i]
        gap = i if j > i else two_n - 2
        return R1Insert(gap, head.passage == "U", head.sign)

    if isinstance(move, R2Insert):
        if move.gap_over == move.gap_under:
            return R2Delete(move.gap_over, move.gap_over + 2, move.antiparallel)
        over = move.gap_over + (2 if move.gap_over > move.gap_under else 0)
        under = move.gap_under + (2 if move.gap_under > move.gap_over else 0)
        return R2Delete(over, under, move.antiparallel)

    if isinstance(move, R2Delete):
        i, j = move.over_start, move.under_start
        removed = {i, _adjacent(d, i), j, _adjacent(d, j)}
        gap_over = i - sum(r < i for r in removed)
        gap_under = j - sum(r < j for r in removed)
        sign = d.endpoints[i].sign
        return R2Insert(gap_over, gap_under, move.antiparallel, sign)

    if isinstance(move, R3Slide):
        form = "R" if move.form == "L" else "L"
        return R3Slide(move.sites, form, move.chords, move.eps)

    raise TypeError(f"unknown move {move!r}")


def enumerate_moves(d: GaussDiagram) -> list[Move]:
    """Every move instance applicable to ``d``.

    Insertions are listed for every gap, both R1 chiralities, both R2
    arrangements and both signs; deletions and slides are found by pattern
    matching.  The list is deterministic.
    """
    moves: list[Move] = []
    two_n = len(d.endpoints)
    gaps = range(two_n + 1) if two_n else [0]

    for g in gaps:
        for head_first in (False, True):
            for sign in (1, -1):
                moves.append(R1Insert(g, head_first, sign))
    for go in gaps:
        for gu in gaps:
            for sign in (1, -1):
                moves.append(R2Insert(go, gu, True, sign))
                moves.append(R2Insert(go, gu, False, sign))

    if two_n:
        for i in range(two_n):
            j = _adjacent(d, i)
            if j != i and d.endpoints[i].chord == d.endpoints[j].chord:
                moves.append(R1Delete(i))
        for i in range(two_n):
            for j in range(two_n):
                for anti in (True, False):
                    try:
                        apply_move(d, R2Delete(i, j, anti))
                    except ValueError:
                        continue
                    moves.append(R2Delete(i, j, anti))
        moves.extend(_find_r3(d))
    return moves


def _find_r3(d: GaussDiagram) -> list[R3Slide]:
    """All R3 slide instances present in ``d``, both forms."""
    two_n = len(d.endpoints)
    found: list[R3Slide] = []
    # index pairs (s, s+1) by their (passage, chord) content
    for sa in range(two_n):
        a1, a2 = d.endpoints[sa], d.endpoints[_adjacent(d, sa)]
        for form in ("L", "R"):
            if form == "L":
                if (a1.passage, a2.passage) != ("U", "U"):
                    continue
                x, y = a1.chord, a2.chord
            else:
                if (a1.passage, a2.passage) != ("U", "U"):
                    continue
                y, x = a1.chord, a2.chord
            if x == y:
                continue
            eps = a1.sign
            if a2.sign != eps:
                continue
            for sb in range(two_n):
                b1, b2 = d.endpoints[sb], d.endpoints[_adjacent(d, sb)]
                if form == "L":
                    if (b1.passage, b1.chord) != ("O", x):
                        continue
                    if b2.passage != "U" or b2.chord in (x, y):
                        continue
                    z = b2.chord
                else:
                    if (b2.passage, b2.chord) != ("O", x):
                        continue
                    if b1.passage != "U" or b1.chord in (x, y):
                        continue
                    z = b1.chord
                if d.sign_of(z) != eps:
                    continue
                for sc in range(two_n):
                    c1, c2 = d.endpoints[sc], d.endpoints[_adjacent(d, sc)]
                    if form == "L":
                        want = (("O", y), ("O", z))
                    else:
                        want = (("O", z), ("O", y))
                    if ((c1.passage, c1.chord), (c2.passage, c2.chord)) != want:
                        continue
                    idx = []
                    for s in (sa, sb, sc):
                        idx.extend([s, _adjacent(d, s)])
                    if len(set(idx)) != 6:
                        continue
                    found.append(R3Slide((sa, sb, sc), form, (x, y, z), eps))
    return found
