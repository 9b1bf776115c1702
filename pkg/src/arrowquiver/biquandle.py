"""Finite biquandles.

A biquandle is a set X with two binary operations, here called ``under``
(often written x >_ y) and ``over`` (x >~ y), satisfying axioms that make
colorings of oriented knot diagrams invariant under Reidemeister moves.  At a
positive crossing the understrand colored x passing under an overstrand
colored y leaves as under(x, y), while the overstrand leaves as over(y, x).

Elements are the integers 1..n throughout, matching the usual presentation of
operation tables in the literature.

Axioms checked by :func:`validate_tables`:

* B1 (kink rule): under(x, x) == over(x, x) for all x.
* B2 (invertibility): for each y the maps x -> under(x, y) and
  x -> over(x, y) are bijections of X, and the combined map
  S(x, y) = (over(y, x), under(x, y)) is a bijection of X x X.
* B3 (triple point rule): the crossing gate
  P(x, y) = (t, under(x, t)) with t the unique solution of over(t, x) == y
  satisfies the set-theoretic Yang-Baxter equation
  P12 P23 P12 == P23 P12 P23 on X^3.

The gate formulation of B3 is the one that actually expresses invariance of
colorings under the slide move for the coloring convention used in this
package; it is equivalent to the usual exchange identities after the
appropriate change of variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

__all__ = [
    "Biquandle",
    "BiquandleError",
    "Violation",
    "loads",
    "load",
    "validate_tables",
]


class BiquandleError(ValueError):
    """Raised when operation tables fail to define a biquandle."""

    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        lines = [str(v) for v in violations]
        super().__init__("not a biquandle:\n" + "\n".join(lines))


@dataclass(frozen=True)
class Violation:
    """A single failed axiom instance, with a witness tuple of elements."""

    axiom: str
    witness: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witness}: {self.message}"


@dataclass(frozen=True)
class Biquandle:
    """A finite biquandle on elements 1..n given by two operation tables.

    ``under[x-1][y-1]`` is under(x, y) and ``over[x-1][y-1]`` is over(x, y).
    Construct via :func:`loads`, :func:`load` or directly from validated
    tables; use :func:`validate_tables` to check axioms first.
    """

    under: tuple[tuple[int, ...], ...]
    over: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.under)

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def under_of(self, x: int, y: int) -> int:
        return self.under[x - 1][y - 1]

    def over_of(self, x: int, y: int) -> int:
        return self.over[x - 1][y - 1]

    @cached_property
    def _under_inv(self) -> tuple[tuple[int, ...], ...]:
        # _under_inv[y-1][v-1] = the x with under(x, y) == v
        inv = [[0] * self.n for _ in range(self.n)]
        for x, y in product(self.elements, repeat=2):
            inv[y - 1][self.under[x - 1][y - 1] - 1] = x
        return tuple(tuple(row) for row in inv)

    @cached_property
    def _over_inv(self) -> tuple[tuple[int, ...], ...]:
        inv = [[0] * self.n for _ in range(self.n)]
        for x, y in product(self.elements, repeat=2):
            inv[y - 1][self.over[x - 1][y - 1] - 1] = x
        return tuple(tuple(row) for row in inv)

    def under_inv(self, v: int, y: int) -> int:
        """The unique x with under(x, y) == v."""
        return self._under_inv[y - 1][v - 1]

    def over_inv(self, v: int, y: int) -> int:
        """The unique x with over(x, y) == v."""
        return self._over_inv[y - 1][v - 1]

    def gate(self, x: int, y: int) -> tuple[int, int]:
        """Colors leaving a positive crossing entered with (x, y).

        x enters on the understrand and y enters on the overstrand.  The
        coloring rule fixes the incoming overstrand color in terms of the
        outgoing one, so solve over(t, x) == y for the outgoing overstrand
        color t; the understrand then leaves as under(x, t).
        """
        t = self.over_inv(y, x)
        return t, self.under_of(x, t)

    def is_endomorphism(self, f: tuple[int, ...]) -> bool:
        """Whether the map x -> f[x-1] respects both operations."""
        if len(f) != self.n or set(f) - set(self.elements):
            return False
        for x, y in product(self.elements, repeat=2):
            if f[self.under_of(x, y) - 1] != self.under_of(f[x - 1], f[y - 1]):
                return False
            if f[self.over_of(x, y) - 1] != self.over_of(f[x - 1], f[y - 1]):
                return False
        return True

    def endomorphisms(self) -> list[tuple[int, ...]]:
        """All set maps X -> X respecting both operations, sorted."""
        n = self.n
        found: list[tuple[int, ...]] = []

        def extend(f: list[int]) -> None:
            k = len(f)
            if k == n:
                found.append(tuple(f))
                return
            for v in self.elements:
                f.append(v)
                ok = True
                # check every pair whose images are already determined
                for x, y in product(range(1, k + 2), repeat=2):
                    u = self.under_of(x, y)
                    o = self.over_of(x, y)
                    if u <= k + 1 and f[u - 1] != self.under_of(f[x - 1], f[y - 1]):
                        ok = False
                        break
                    if o <= k + 1 and f[o - 1] != self.over_of(f[x - 1], f[y - 1]):
                        ok = False
                        break
                if ok:
                    extend(f)
                f.pop()

        extend([])
        return sorted(found)


def validate_tables(
    under: tuple[tuple[int, ...], ...], over: tuple[tuple[int, ...], ...]
) -> list[Violation]:
    """All axiom violations of the candidate tables (empty list if valid)."""
    n = len(under)
    violations: list[Violation] = []
    elements = range(1, n + 1)

    for name, table in (("under", under), ("over", over)):
        if len(table) != n:
            violations.append(
                Violation("shape", (len(table),), f"{name} table must have {n} rows")
            )
            return violations
        for i, row in enumerate(table):
            if len(row) != n:
                violations.append(
                    Violation("shape", (i + 1,), f"{name} row {i + 1} has wrong length")
                )
                return violations
            bad = [v for v in row if not (1 <= v <= n)]
            if bad:
                violations.append(
                    Violation(
                        "range",
                        (i + 1, bad[0]),
                        f"{name} row {i + 1} contains {bad[0]}, outside 1..{n}",
                    )
                )
                return violations

    # B2: column maps must be bijections
    for name, table in (("under", under), ("over", over)):
        for y in elements:
            column = tuple(table[x - 1][y - 1] for x in elements)
            if len(set(column)) != n:
                violations.append(
                    Violation(
                        "B2",
                        (y,),
                        f"{name} column y={y} is {column}, not a bijection",
                    )
                )
    if violations:
        return violations

    # B1
    for x in elements:
        if under[x - 1][x - 1] != over[x - 1][x - 1]:
            violations.append(
                Violation(
                    "B1",
                    (x,),
                    f"under({x},{x})={under[x - 1][x - 1]} != over({x},{x})={over[x - 1][x - 1]}",
                )
            )

    # B2: the map S(x, y) = (over(y, x), under(x, y)) must be a bijection
    images = {
        (over[y - 1][x - 1], under[x - 1][y - 1])
        for x, y in product(elements, repeat=2)
    }
    if len(images) != n * n:
        violations.append(
            Violation("B2", (), "S(x,y) = (over(y,x), under(x,y)) is not a bijection")
        )

    if violations:
        return violations

    # B3 as the Yang-Baxter equation for the crossing gate
    b = Biquandle(under, over)

    def p12(x: int, y: int, z: int) -> tuple[int, int, int]:
        a, c = b.gate(x, y)
        return a, c, z

    def p23(x: int, y: int, z: int) -> tuple[int, int, int]:
        a, c = b.gate(y, z)
        return x, a, c

    for x, y, z in product(elements, repeat=3):
        lhs = p12(*p23(*p12(x, y, z)))
        rhs = p23(*p12(*p23(x, y, z)))
        if lhs != rhs:
            violations.append(
                Violation(
                    "B3",
                    (x, y, z),
                    f"Yang-Baxter fails: {lhs} != {rhs}",
                )
            )

    return violations


def loads(text: str) -> Biquandle:
    """Parse a biquandle from its text form.

    The format is the element count on the first line, then the ``under``
    table one row per line, a blank line, and the ``over`` table.  Entries
    are whitespace-separated integers in 1..n.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if not ln.startswith("#")]
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise ValueError("empty biquandle description")
    n = int(lines[0])
    rows = [ln for ln in lines[1:] if ln]
    if len(rows) != 2 * n:
        raise ValueError(f"expected {2 * n} table rows, found {len(rows)}")

    def parse_table(chunk: list[str]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(tok) for tok in ln.split()) for ln in chunk)

    under = parse_table(rows[:n])
    over = parse_table(rows[n:])
    violations = validate_tables(under, over)
    if violations:
        raise BiquandleError(violations)
    return Biquandle(under, over)


def load(path: str) -> Biquandle:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
