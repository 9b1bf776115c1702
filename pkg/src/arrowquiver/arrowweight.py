"""Arrow weights: crossing-pair weight sums and the search for valid ones.

An arrow weight for a biquandle X over Z_m is a tensor W indexed by two
arrow labels (four biquandle elements in total).  Given a colored diagram,
every unordered pair of crossings whose chords intersect in the Gauss
diagram contributes

    sign(p) * sign(q) * W[label(p)][label(q)]    (mod m)

where the first slot belongs to the crossing whose under-passage comes
first from the basepoint.  The total is the weight sum sigma_D of the
coloring.  For W to define a knot
invariant the multiset of weight sums over all colorings must be unchanged
by Reidemeister moves and by moving the basepoint; both requirements are
linear conditions on the entries of W, collected by
:func:`generate_constraints` and solved over Z_m by
:func:`solve_constraints`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import gcd

import numpy as np

from .biquandle import Biquandle
from .gausscode import (
    Endpoint,
    GaussDiagram,
    R1Insert,
    R2Insert,
    R3Slide,
    apply_move,
    enumerate_moves,
    parse_gauss_code,
)
from .homset import arrow_label, enumerate_colorings, transport_coloring

__all__ = [
    "WeightTensor",
    "sigma_terms",
    "sigma_D",
    "weight_multiset",
    "ConstraintSystem",
    "SolutionSet",
    "generate_constraints",
    "solve_constraints",
    "search_weights",
    "ValidityReport",
    "is_valid_weight",
]


@dataclass(frozen=True)
class WeightTensor:
    """A map X^2 x X^2 -> Z_m, flattened row-major over (a, b, c, d)."""

    n: int
    m: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n**4:
            raise ValueError("wrong number of tensor entries")
        if any(not 0 <= e < self.m for e in self.entries):
            raise ValueError(f"entries must lie in 0..{self.m - 1}")

    @staticmethod
    def slot(n: int, a: int, b: int, c: int, d: int) -> int:
        return (((a - 1) * n + (b - 1)) * n + (c - 1)) * n + (d - 1)

    def get(self, first: tuple[int, int], second: tuple[int, int]) -> int:
        a, b = first
        c, d = second
        return self.entries[self.slot(self.n, a, b, c, d)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def dumps(self) -> str:
        n = self.n
        lines = [str(self.m), str(n)]
        for a, b in product(range(1, n + 1), repeat=2):
            row = [
                self.entries[self.slot(n, a, b, c, d)]
                for c, d in product(range(1, n + 1), repeat=2)
            ]
            lines.append(" ".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "WeightTensor":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        m, n = int(lines[0]), int(lines[1])
        rows = lines[2:]
        if len(rows) != n * n:
            raise ValueError(f"expected {n * n} tensor rows, found {len(rows)}")
        entries: list[int] = []
        for ln in rows:
            vals = [int(tok) % m for tok in ln.split()]
            if len(vals) != n * n:
                raise ValueError("tensor row has wrong length")
            entries.extend(vals)
        return cls(n, m, tuple(entries))

    @classmethod
    def load(cls, path: str) -> "WeightTensor":
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read())


def _ordered_pair(d: GaussDiagram, p: int, q: int) -> tuple[int, int]:
    """Order a crossing pair: smaller under-passage index takes the first slot."""
    fp = d.index_of(p, "U")
    fq = d.index_of(q, "U")
    return (p, q) if fp < fq else (q, p)


def sigma_coefficients(
    d: GaussDiagram, coloring: tuple[int, ...], n: int
) -> dict[int, int]:
    """sigma_D as a sparse vector of coefficients on tensor slots."""
    coeffs: dict[int, int] = {}
    for p, q in d.crossing_pairs():
        first, second = _ordered_pair(d, p, q)
        la = arrow_label(d, coloring, first)
        lb = arrow_label(d, coloring, second)
        slot = WeightTensor.slot(n, la[0], la[1], lb[0], lb[1])
        coeffs[slot] = coeffs.get(slot, 0) + d.sign_of(p) * d.sign_of(q)
    return coeffs


def sigma_terms(
    w: WeightTensor, d: GaussDiagram, coloring: tuple[int, ...]
) -> list[tuple[tuple[int, int], int]]:
    """The ((p, q), term) contributions of each intersecting chord pair."""
    out = []
    for p, q in d.crossing_pairs():
        first, second = _ordered_pair(d, p, q)
        term = (
            d.sign_of(p)
            * d.sign_of(q)
            * w.get(arrow_label(d, coloring, first), arrow_label(d, coloring, second))
        ) % w.m
        out.append(((p, q), term))
    return out


def sigma_D(
    w: WeightTensor,
    d: GaussDiagram,
    coloring: tuple[int, ...],
    check_rotations: bool = False,
) -> int:
    """The weight sum of one coloring, reduced mod m.

    With ``check_rotations`` the sum is recomputed from every basepoint and
    must agree, which holds for every valid arrow weight.
    """
    total = sum(t for _, t in sigma_terms(w, d, coloring)) % w.m
    if check_rotations:
        two_n = len(d.endpoints)
        for k in range(1, two_n):
            dk = d.rotated(k)
            ck = coloring[k:] + coloring[:k]
            tk = sum(t for _, t in sigma_terms(w, dk, ck)) % w.m
            if tk != total:
                raise ValueError(
                    f"weight sum depends on the basepoint (rotation {k})"
                )
    return total


def weight_multiset(
    b: Biquandle, w: WeightTensor, d: GaussDiagram, check_rotations: bool = False
) -> tuple[int, ...]:
    """Sorted weight sums over all colorings: the multiset-valued invariant."""
    return tuple(
        sorted(
            sigma_D(w, d, c, check_rotations=check_rotations)
            for c in enumerate_colorings(b, d)
        )
    )


# ---------------------------------------------------------------------------
# invariance constraints


def _r3_template_hosts(spectators: int) -> list[GaussDiagram]:
    """Diagrams containing a slide site, with extra chords woven through.

    The three slide blocks are placed around the circle in both cyclic
    arrangements, for both common signs; each spectator chord drops its two
    passages into the inter-block gaps in every distinct way.
    """
    hosts: list[GaussDiagram] = []
    for eps in (1, -1):
        site_a = [Endpoint(1, "U", eps), Endpoint(2, "U", eps)]
        site_b = [Endpoint(1, "O", eps), Endpoint(3, "U", eps)]
        site_c = [Endpoint(2, "O", eps), Endpoint(3, "O", eps)]
        for blocks in ((site_a, site_b, site_c), (site_a, site_c, site_b)):
            placements: list[list[list[Endpoint]]] = []
            if spectators == 0:
                placements.append([[], [], []])
            else:
                for s_sign in (1, -1):
                    ends = [Endpoint(4, "O", s_sign), Endpoint(4, "U", s_sign)]
                    for e1, e2 in (tuple(ends), tuple(reversed(ends))):
                        for g1, g2 in product(range(3), repeat=2):
                            gaps: list[list[Endpoint]] = [[], [], []]
                            gaps[g1].append(e1)
                            gaps[g2].append(e2)
                            placements.append(gaps)
            for gaps in placements:
                word: list[Endpoint] = []
                for block, gap in zip(blocks, gaps):
                    word.extend(block)
                    word.extend(gap)
                hosts.append(GaussDiagram(tuple(word)))
    return hosts


def _small_hosts() -> list[GaussDiagram]:
    """The empty diagram and every 1- and 2-chord diagram, up to rotation."""
    hosts = [GaussDiagram(())]
    seen: set[str] = set()
    for s in "+-":
        hosts.append(parse_gauss_code(f"O1{s}U1{s}"))
    for rest in permutations(["U1", "O2", "U2"]):
        for s1, s2 in product("+-", repeat=2):
            code = "".join(
                tok + (s1 if tok[1] == "1" else s2) for tok in ("O1", *rest)
            )
            d = parse_gauss_code(code)
            key = d.canonical_code()
            if key not in seen:
                seen.add(key)
                hosts.append(d)
    return hosts


class ConstraintSystem:
    """Homogeneous linear conditions on tensor slots over Z_m."""

    def __init__(self, n: int, m: int, rows: list[dict[int, int]]):
        self.n = n
        self.m = m
        unique: dict[tuple[tuple[int, int], ...], None] = {}
        for row in rows:
            reduced = {s: c % m for s, c in row.items() if c % m}
            if reduced:
                unique[tuple(sorted(reduced.items()))] = None
        self.rows: list[dict[int, int]] = [dict(key) for key in unique]

    def holds_for(self, w: WeightTensor) -> bool:
        if (w.n, w.m) != (self.n, self.m):
            raise ValueError("tensor shape does not match the system")
        return all(
            sum(c * w.entries[s] for s, c in row.items()) % self.m == 0
            for row in self.rows
        )

    def matrix(self) -> np.ndarray:
        out = np.zeros((len(self.rows), self.n**4), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for s, c in row.items():
                out[i, s] = c
        return out


def _difference_row(
    before: dict[int, int], after: dict[int, int]
) -> dict[int, int]:
    row = dict(before)
    for s, c in after.items():
        row[s] = row.get(s, 0) - c
    return row


@lru_cache(maxsize=None)
def generate_constraints(b: Biquandle, m: int) -> ConstraintSystem:
    """Every invariance condition on arrow weights for ``b`` over Z_m.

    Rows come from three sources: each Reidemeister move applicable to a
    family of small host diagrams (weight sums of a coloring and of its
    transport must agree), slide moves on dedicated three- and four-chord
    hosts, and basepoint rotation on every host.
    """
    n = b.n
    rows: list[dict[int, int]] = []

    def move_rows(d: GaussDiagram, moves) -> None:
        colorings = enumerate_colorings(b, d)
        for move in moves:
            d2 = apply_move(d, move)
            for c in colorings:
                c2 = transport_coloring(b, d, move, c)
                rows.append(
                    _difference_row(
                        sigma_coefficients(d, c, n), sigma_coefficients(d2, c2, n)
                    )
                )

    def rotation_rows(d: GaussDiagram) -> None:
        two_n = len(d.endpoints)
        if two_n < 4:
            return
        for c in enumerate_colorings(b, d):
            base = sigma_coefficients(d, c, n)
            for k in range(1, two_n):
                rows.append(
                    _difference_row(
                        base, sigma_coefficients(d.rotated(k), c[k:] + c[:k], n)
                    )
                )

    for d in _small_hosts():
        move_rows(d, enumerate_moves(d))
        rotation_rows(d)
    for spectators in (0, 1):
        for d in _r3_template_hosts(spectators):
            move_rows(d, [mv for mv in enumerate_moves(d) if isinstance(mv, R3Slide)])
            rotation_rows(d)

    return ConstraintSystem(n, m, rows)


# ---------------------------------------------------------------------------
# solving over Z_m


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b == g == gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class SolutionSet:
    """The solutions of a homogeneous system over Z_m, in echelon form.

    Elimination pivots on the *last* variable first, so every echelon row
    relates one variable to strictly earlier ones; solutions can then be
    enumerated in lexicographic order by assigning variables left to right.
    Annihilator rows (m/gcd times a pivot row) are folded back in, which
    keeps the per-column solution counts exact.
    """

    def __init__(self, ncols: int, m: int, rows: list[dict[int, int]]):
        self.ncols = ncols
        self.m = m
        self.pivot: dict[int, np.ndarray] = {}
        work: list[np.ndarray] = []
        for row in rows:
            vec = np.zeros(ncols, dtype=np.int64)
            for s, c in row.items():
                vec[s] = c % m
            if vec.any():
                work.append(vec)
        for col in range(ncols - 1, -1, -1):
            live = [r for r in work if r[col] % m]
            rest = [r for r in work if not r[col] % m]
            if not live:
                work = rest
                continue
            piv = live.pop()
            for other in live:
                a, b = int(piv[col]), int(other[col])
                g, s, t = _xgcd(a, b)
                combined = (s * piv + t * other) % m
                leftover = ((b // g) * piv - (a // g) * other) % m
                piv = combined
                if leftover.any():
                    rest.append(leftover)
            g = gcd(int(piv[col]), m)
            ann = ((m // g) * piv) % m
            if ann.any():
                rest.append(ann)
            self.pivot[col] = piv
            work = rest
        assert not work, "rows left over after full elimination"

    def count(self) -> int:
        total = 1
        for col in range(self.ncols):
            if col in self.pivot:
                total *= gcd(int(self.pivot[col][col]), self.m)
            else:
                total *= self.m
        return total

    def contains(self, values: tuple[int, ...]) -> bool:
        vec = np.asarray(values, dtype=np.int64)
        return all(int(row @ vec) % self.m == 0 for row in self.pivot.values())

    def __iter__(self):
        m = self.m

        def assign(col: int, prefix: list[int]):
            if col == self.ncols:
                yield tuple(prefix)
                return
            if col not in self.pivot:
                for v in range(m):
                    prefix.append(v)
                    yield from assign(col + 1, prefix)
                    prefix.pop()
                return
            row = self.pivot[col]
            g = int(row[col]) % m
            r = 0
            if col:
                r = int(row[:col] @ np.asarray(prefix, dtype=np.int64)) % m
            d = gcd(g, m)
            rr = (-r) % m
            if rr % d:
                return
            # g * v == rr (mod m) has the d solutions v0 + t*(m // d)
            md = m // d
            v0 = (rr // d * pow(g // d, -1, md)) % md if md > 1 else 0
            for t in range(d):
                prefix.append(v0 + t * md)
                yield from assign(col + 1, prefix)
                prefix.pop()

        yield from assign(0, [])


def solve_constraints(system: ConstraintSystem) -> SolutionSet:
    return SolutionSet(system.n**4, system.m, system.rows)


_PROBE_CODES = (
    "O1+O2+U1+U2+",
    "O1-O2-U1-U2-",
    "O1+U2+O3+U1+O2+U3+",
    "O1-U2-O3-U1-O2-U3-",
)


def _probes() -> list[GaussDiagram]:
    return [parse_gauss_code(code) for code in _PROBE_CODES]


def search_weights(
    b: Biquandle, m: int, limit: int | None = None, nontrivial: bool = False
):
    """Yield valid arrow weight tensors for ``b`` over Z_m in lex order.

    With ``nontrivial``, tensors whose weight sums vanish on every coloring
    of a small probe family of diagrams are skipped (this drops the zero
    tensor in particular).
    """
    probes = _probes() if nontrivial else []
    colorings = [(d, enumerate_colorings(b, d)) for d in probes]
    count = 0
    for values in solve_constraints(generate_constraints(b, m)):
        w = WeightTensor(b.n, m, values)
        if nontrivial and not any(
            sigma_D(w, d, c) for d, cs in colorings for c in cs
        ):
            continue
        yield w
        count += 1
        if limit is not None and count >= limit:
            return


def _random_diagram(rng: random.Random, max_chords: int) -> GaussDiagram:
    n = rng.randint(0, max_chords)
    word = []
    for c in range(1, n + 1):
        s = rng.choice((1, -1))
        word.append(Endpoint(c, "O", s))
        word.append(Endpoint(c, "U", s))
    rng.shuffle(word)
    return GaussDiagram(tuple(word))


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of an arrow weight validity check.

    ``violated_rows`` holds indices into the generated constraint system;
    ``failed_trial`` describes the first randomized trial (if any) whose
    weight sum changed under a move or rotation.
    """

    valid: bool
    violated_rows: tuple[int, ...] = ()
    failed_trial: dict | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violated_rows": list(self.violated_rows),
            "failed_trial": self.failed_trial,
        }


def is_valid_weight(
    b: Biquandle,
    w: WeightTensor,
    trials: int = 40,
    seed: int = 0,
    max_chords: int = 4,
) -> ValidityReport:
    """Whether ``w`` is a valid arrow weight for ``b``.

    Checks membership in the generated constraint system, then runs seeded
    randomized trials: random diagrams, random applicable moves, and for
    every coloring the weight sum must survive transport and basepoint
    rotation exactly.  The report is truthy exactly when ``w`` passes.
    """
    if w.n != b.n:
        return ValidityReport(False, failed_trial={"error": "dimension mismatch"})
    system = generate_constraints(b, w.m)
    bad = tuple(
        i
        for i, row in enumerate(system.rows)
        if sum(c * w.entries[s] for s, c in row.items()) % w.m
    )
    if bad:
        return ValidityReport(False, violated_rows=bad)
    rng = random.Random(seed)
    for trial in range(trials):
        d = _random_diagram(rng, max_chords)
        for _ in range(rng.randint(1, 3)):
            moves = enumerate_moves(d)
            if d.n >= 6:
                moves = [
                    mv for mv in moves if not isinstance(mv, (R1Insert, R2Insert))
                ]
            if not moves:
                break
            move = rng.choice(moves)
            d2 = apply_move(d, move)
            for c in enumerate_colorings(b, d):
                try:
                    before = sigma_D(w, d, c, check_rotations=True)
                    after = sigma_D(w, d2, transport_coloring(b, d, move, c))
                    mismatch = before != after
                    detail = {"before": before, "after": after}
                except ValueError as err:
                    mismatch = True
                    detail = {"error": str(err)}
                if mismatch:
                    return ValidityReport(
                        False,
                        failed_trial={
                            "trial": trial,
                            "seed": seed,
                            "diagram": str(d),
                            "move": repr(move),
                            "coloring": list(c),
                            **detail,
                        },
                    )
            d = d2
    return ValidityReport(True)
