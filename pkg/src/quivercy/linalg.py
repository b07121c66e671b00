"""Exact linear algebra over the rationals, on sparse integer rows.

Vectors are dicts mapping a column index to a nonzero value.  Spans are
kept in a canonical reduced echelon form (primitive integer rows, positive
pivot, fully back-substituted), so two subspaces are equal if and only if
their canonical rows compare equal.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Row = dict  # column index -> nonzero int


def make_row(entries) -> Row:
    """Primitive integer row from a col -> int/Fraction mapping."""
    scale = 1
    for value in entries.values():
        if isinstance(value, Fraction):
            scale = scale * value.denominator // gcd(scale, value.denominator)
    row = {}
    for col, value in entries.items():
        iv = int(value * scale)
        if iv:
            row[col] = iv
    return _primitive(row)


def _primitive(row: Row) -> Row:
    """Divide by the gcd and make the leading (minimal column) entry positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: Row, col: int, pivot_row: Row) -> Row:
    """Cancel `col` from `row` against `pivot_row` by cross-multiplication."""
    a = row.get(col)
    if not a:
        return row
    b = pivot_row[col]
    out = {c: v * b for c, v in row.items()}
    for c, v in pivot_row.items():
        w = out.get(c, 0) - v * a
        if w:
            out[c] = w
        elif c in out:
            del out[c]
    return _primitive(out)


class RowSpace:
    """Subspace spanned by rows, kept in canonical reduced echelon form."""

    __slots__ = ("_pivot_rows",)

    def __init__(self, rows=()):
        self._pivot_rows: dict[int, Row] = {}
        for row in rows:
            self.insert(row)

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def reduce(self, entries) -> Row:
        """Remainder of a vector after reduction, as a primitive integer row."""
        row = make_row(entries)
        if not row:
            return row
        # a single ascending pass suffices: eliminations only introduce
        # free columns, never pivot columns
        for c in sorted(self._pivot_rows):
            if c in row:
                row = _eliminate(row, c, self._pivot_rows[c])
                if not row:
                    break
        return row

    def contains(self, entries) -> bool:
        return not self.reduce(entries)

    def insert(self, entries) -> bool:
        """Add a vector to the span; True if the rank grew."""
        row = self.reduce(entries)
        if not row:
            return False
        col = min(row)
        for pc, prow in self._pivot_rows.items():
            if col in prow:
                self._pivot_rows[pc] = _eliminate(prow, col, row)
        self._pivot_rows[col] = row
        return True

    def rows(self) -> list[Row]:
        return [self._pivot_rows[c] for c in sorted(self._pivot_rows)]

    def __eq__(self, other):
        return isinstance(other, RowSpace) and self.rows() == other.rows()

    __hash__ = None

    def nullspace(self, ncols: int) -> list[Row]:
        """Canonical basis of {v : r.v = 0 for every row r in the span}."""
        basis = []
        for f in range(ncols):
            if f in self._pivot_rows:
                continue
            vec = {f: Fraction(1)}
            for pc, prow in self._pivot_rows.items():
                if f in prow:
                    vec[pc] = Fraction(-prow[f], prow[pc])
            basis.append(make_row(vec))
        return basis


class SpanSolver:
    """Echelon form with coefficient tracking over the inserted generators.

    Supports two uses: expressing a target vector as an exact rational
    combination of the generators, and harvesting left-kernel combinations
    (inserted vectors that reduce to zero).
    """

    def __init__(self):
        self._rows = []  # (row, combo dict gen-index -> Fraction)
        self._pivots = {}  # col -> index into _rows
        self._count = 0
        self.kernel: list[dict[int, Fraction]] = []

    def _reduce_tracked(self, row, combo):
        for c in sorted(self._pivots):
            if not row:
                break
            a = row.get(c)
            if not a:
                continue
            prow, pcombo = self._rows[self._pivots[c]]
            b = prow[c]
            row = {cc: v * b for cc, v in row.items()}
            for cc, v in prow.items():
                w = row.get(cc, 0) - v * a
                if w:
                    row[cc] = w
                elif cc in row:
                    del row[cc]
            combo = {k: v * b for k, v in combo.items()}
            for k, v in pcombo.items():
                w = combo.get(k, 0) - v * a
                if w:
                    combo[k] = w
                elif k in combo:
                    del combo[k]
            g = 0
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                row = {cc: v // g for cc, v in row.items()}
                combo = {k: Fraction(v, g) for k, v in combo.items()}
        return row, combo

    def insert(self, entries) -> bool:
        """Insert a generator; False when it was dependent (kernel grows)."""
        idx = self._count
        self._count += 1
        row = make_row(entries)
        combo = {idx: _row_scale(entries)}
        row, combo = self._reduce_tracked(row, combo)
        if not row:
            self.kernel.append(combo)
            return False
        self._pivots[min(row)] = len(self._rows)
        self._rows.append((row, combo))
        return True

    def express(self, entries) -> list[Fraction] | None:
        """Coefficients writing the target over the inserted generators."""
        # the target is tracked under index -1 so its scale survives reductions
        row = make_row(entries)
        combo = {-1: _row_scale(entries)}
        row, combo = self._reduce_tracked(row, combo)
        if row:
            return None
        sigma = combo.pop(-1)
        coeffs = [Fraction(0)] * self._count
        for k, v in combo.items():
            coeffs[k] = -v / sigma
        return coeffs


def _row_scale(entries) -> Fraction:
    """Factor sigma with make_row(entries) == sigma * entries (entries nonzero)."""
    scale = 1
    for value in entries.values():
        if isinstance(value, Fraction):
            scale = scale * value.denominator // gcd(scale, value.denominator)
    ints = {}
    for col, value in entries.items():
        iv = int(value * scale)
        if iv:
            ints[col] = iv
    if not ints:
        return Fraction(1)
    g = 0
    for v in ints.values():
        g = gcd(g, v)
        if g == 1:
            break
    if ints[min(ints)] < 0:
        g = -g
    return Fraction(scale, g)


def determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free style Gaussian elimination."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if m[i][k]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k]:
                factor = m[i][k] * inv
                for j in range(k, n):
                    m[i][j] -= factor * m[k][j]
    return det
