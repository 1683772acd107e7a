"""Exact sparse matrices over Q: rank, kernel, solve.

Elimination is fraction-free: rows are scaled to integers first and
combined Bareiss-style, so every intermediate entry stays an integer.
Rows are kept as dicts ``col -> value``.
"""

from fractions import Fraction
from math import gcd


class SparseRationalMatrix:
    """``rows x cols`` matrix; ``entries`` maps (row, col) (0-based) to Fraction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            items = entries.items() if hasattr(entries, "items") else entries
            for (r, c), v in items:
                self[r, c] = self.entries.get((r, c), 0) + Fraction(v)

    def __setitem__(self, rc, v):
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry {rc} outside {self.rows}x{self.cols}")
        v = Fraction(v)
        if v:
            self.entries[r, c] = v
        else:
            self.entries.pop((r, c), None)

    def __getitem__(self, rc):
        return self.entries.get(rc, Fraction(0))

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        m = cls(len(rows), ncols)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                m[i, j] = v
        return m

    def to_dense(self):
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    @property
    def nnz(self):
        return len(self.entries)

    def transpose(self):
        return SparseRationalMatrix(self.cols, self.rows,
                                    {(c, r): v for (r, c), v in self.entries.items()})

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def matvec(self, x):
        if len(x) != self.cols:
            raise ValueError("vector length differs from column count")
        out = [Fraction(0)] * self.rows
        for (r, c), v in self.entries.items():
            out[r] += v * x[c]
        return out

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        by_row = other.row_dicts()
        acc = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row[k].items():
                acc[r, c] = acc.get((r, c), 0) + v * w
        return SparseRationalMatrix(self.rows, other.cols, acc)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseRationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    # text coordinate format, 1-based
    def dumps(self):
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        for (r, c), v in sorted(self.entries.items()):
            lines.append(f"{r + 1} {c + 1} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("%")]
        if not lines:
            raise ValueError("empty matrix text")
        rows, cols, nnz = (int(x) for x in lines[0].split())
        if len(lines) - 1 != nnz:
            raise ValueError(f"header announces {nnz} entries, found {len(lines) - 1}")
        m = cls(rows, cols)
        for ln in lines[1:]:
            r, c, v = ln.split()
            m[int(r) - 1, int(c) - 1] = m[int(r) - 1, int(c) - 1] + Fraction(v)
        return m

    def __repr__(self):
        return f"SparseRationalMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _integer_row(row):
    """Scale a rational row to a primitive integer row (same span)."""
    den = 1
    for v in row.values():
        den = den * v.denominator // gcd(den, v.denominator)
    out = {c: int(v * den) for c, v in row.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def _eliminate(rows, ncols):
    """Row-reduce integer rows; returns list of (pivot col, row) in pivot order.

    Pivot choice: among remaining rows with an entry in the lowest
    available column, the one with the smallest absolute pivot (ties
    broken by fewer nonzeros, then by original index) for determinism.
    """
    pending = [r for r in rows if r]
    basis = []
    while pending:
        col = min(min(r) for r in pending)
        cands = [k for k, r in enumerate(pending) if col in r]
        k = min(cands, key=lambda k: (abs(pending[k][col]), len(pending[k]), k))
        piv = pending.pop(k)
        p = piv[col]
        nxt = []
        for r in pending:
            a = r.get(col)
            if a is None:
                nxt.append(r)
                continue
            # r <- p*r - a*piv, then remove content
            new = {}
            for c, v in r.items():
                new[c] = p * v
            for c, v in piv.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            new.pop(col, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
                nxt.append(new)
        pending = nxt
        basis.append((col, piv))
    return basis


def rank(m):
    rows = [_integer_row(r) for r in m.row_dicts()]
    return len(_eliminate(rows, m.cols))


def _rref(m):
    """Reduced row echelon form over Q: list of (pivot, row dict) with pivot 1."""
    basis = _eliminate([_integer_row(r) for r in m.row_dicts()], m.cols)
    basis.sort(key=lambda t: t[0])
    red = []
    for col, row in basis:
        p = row[col]
        red.append((col, {c: Fraction(v, p) for c, v in row.items()}))
    # back substitution, from the last pivot upward
    for k in range(len(red) - 1, -1, -1):
        col, row = red[k]
        for kk in range(k):
            c2, r2 = red[kk]
            a = r2.get(col)
            if a:
                for c, v in row.items():
                    w = r2.get(c, 0) - a * v
                    if w:
                        r2[c] = w
                    else:
                        r2.pop(c, None)
    return red


def kernel_basis(m):
    """Basis of {x : m x = 0}, one vector per free column."""
    red = _rref(m)
    pivots = {col for col, _ in red}
    out = []
    for free in range(m.cols):
        if free in pivots:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for col, row in red:
            a = row.get(free)
            if a:
                v[col] = -a
        out.append(v)
    return out


def solve(m, b):
    """Some x with m x = b, or None when inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length differs from row count")
    aug = SparseRationalMatrix(m.rows, m.cols + 1, m.entries)
    for r, v in enumerate(b):
        if v:
            aug[r, m.cols] = v
    red = _rref(aug)
    x = [Fraction(0)] * m.cols
    for col, row in red:
        if col == m.cols:
            return None
        x[col] = row.get(m.cols, Fraction(0))
    return x
