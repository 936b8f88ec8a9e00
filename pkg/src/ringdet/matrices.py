"""Dense matrices over a generic ring.

Multiplication is the textbook cubic algorithm, with every inner product
summed pairwise so each result entry sits only O(log k) levels above its
operands. ``diag_entries_of_powers`` implements the row-doubling scheme that
extracts the corner entries of all powers of a matrix with only O(log n)
matrix products.
"""

from __future__ import annotations

import json

from .errors import ParseError, UsageError
from .rings import Ring, ring_from_spec, tree_sum


class Matrix:
    """An immutable rows x cols matrix with entries in a shared ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries, validate: bool = False):
        rows = tuple(tuple(r) for r in entries)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise UsageError("ragged rows in matrix")
        if validate:
            for r in rows:
                for e in r:
                    ring.validate(e)
        self.ring = ring
        self.rows = len(rows)
        self.cols = ncols
        self.entries = rows

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        one, zero = ring.one, ring.zero
        return cls(ring, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        ))

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        zero = ring.zero
        return cls(ring, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_same_ring(self, other: "Matrix") -> None:
        if self.ring != other.ring:
            raise UsageError(
                f"mixed rings: {self.ring.spec_string()} vs {other.ring.spec_string()}"
            )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_ring(other)
        if self.cols != other.rows:
            raise UsageError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ring = self.ring
        mul = ring.mul
        bcols = tuple(zip(*other.entries))
        out = []
        for arow in self.entries:
            out.append(tuple(
                tree_sum(ring, [mul(x, y) for x, y in zip(arow, bcol)])
                for bcol in bcols
            ))
        return Matrix(ring, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise UsageError("shape mismatch in matrix addition")
        add = self.ring.add
        return Matrix(self.ring, tuple(
            tuple(add(x, y) for x, y in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise UsageError("shape mismatch in matrix subtraction")
        sub = self.ring.sub
        return Matrix(self.ring, tuple(
            tuple(sub(x, y) for x, y in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        ))

    def scale(self, el) -> "Matrix":
        mul = self.ring.mul
        return Matrix(self.ring, tuple(
            tuple(mul(el, x) for x in row) for row in self.entries
        ))

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, tuple(zip(*self.entries)))

    def leading(self, k: int) -> "Matrix":
        """The upper-left k x k submatrix; requires a square matrix."""
        if not self.is_square():
            raise UsageError("leading submatrix of a non-square matrix")
        if not 1 <= k <= self.rows:
            raise UsageError(f"k must be in 1..{self.rows}, got {k}")
        return Matrix(self.ring, tuple(row[:k] for row in self.entries[:k]))

    def minor(self, i: int, j: int) -> "Matrix":
        """Delete row i and column j (0-based)."""
        return Matrix(self.ring, tuple(
            tuple(x for cj, x in enumerate(row) if cj != j)
            for ri, row in enumerate(self.entries)
            if ri != i
        ))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring or (self.rows, self.cols) != (other.rows, other.cols):
            return False
        eq = self.ring.eq
        return all(
            eq(x, y)
            for r1, r2 in zip(self.entries, other.entries)
            for x, y in zip(r1, r2)
        )

    __hash__ = None  # mutable-style equality; not hashable

    def __repr__(self):
        fmt = self.ring.format
        body = "; ".join(
            ", ".join(fmt(x) for x in row) for row in self.entries
        )
        return f"Matrix[{self.rows}x{self.cols} over {self.ring.spec_string()}: {body}]"


class MatMulCounter:
    """Counts matrix-product invocations; used to audit the doubling economy."""

    def __init__(self):
        self.count = 0


def diag_entries_of_powers(a: Matrix, maxdeg: int, counter: MatMulCounter | None = None):
    """Corner entries of all powers: [e_0, ..., e_maxdeg] with e_j = (a^j)[k-1][k-1].

    For a k x k input only the last rows of the powers are ever materialized:
    each round squares the running power a^(2^t) and multiplies the block of
    last rows computed so far by it, roughly doubling how many powers are
    covered. Total matrix products: at most 2*ceil(log2(maxdeg + 1)).
    """
    if not a.is_square() or a.rows == 0:
        raise UsageError("need a nonempty square matrix")
    if maxdeg < 0:
        raise UsageError(f"maxdeg must be >= 0, got {maxdeg}")
    ring = a.ring
    out = [ring.one]
    if maxdeg == 0:
        return out
    rows = [a.entries[-1]]  # last row of a^1: extraction, no operations
    power = a  # a^(2^t)
    while len(rows) < maxdeg:
        missing = maxdeg - len(rows)
        if missing == 1:
            # one more row: multiply the matching existing row by the current
            # power instead of squaring a whole matrix just to read its last row
            exp = (len(rows) + 1) // 2
            prod = Matrix(ring, (rows[exp - 1],)) * power
            if counter is not None:
                counter.count += 1
            rows.append(prod.entries[0])
            break
        power = power * power
        if counter is not None:
            counter.count += 1
        new_rows = [power.entries[-1]]  # last row of the fresh square, free
        block = rows[: missing - 1]
        if block:
            prod = Matrix(ring, tuple(block)) * power
            if counter is not None:
                counter.count += 1
            new_rows.extend(prod.entries)
        rows.extend(new_rows)
    out.extend(row[-1] for row in rows[:maxdeg])
    return out


# --- matrix file format (shared with the CLI) ---

def matrix_to_json(m: Matrix) -> dict:
    to_json = m.ring.element_to_json
    return {
        "ring": m.ring.spec_string(),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[to_json(x) for x in row] for row in m.entries],
    }


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix document must be a JSON object")
    for key in ("ring", "rows", "cols", "entries"):
        if key not in obj:
            raise ParseError(f"matrix document missing key {key!r}")
    ring = ring_from_spec(str(obj["ring"]))
    rows, cols = obj["rows"], obj["cols"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise ParseError(f"bad dimensions: rows={rows!r} cols={cols!r}")
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"expected {rows} entry rows, got {len(entries) if isinstance(entries, list) else type(entries).__name__}")
    parsed = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"row {i}: expected {cols} entries")
        prow = []
        for j, cell in enumerate(row):
            try:
                prow.append(ring.element_from_json(cell))
            except ParseError as e:
                raise ParseError(f"entry ({i},{j}): {e}") from None
        parsed.append(tuple(prow))
    return Matrix(ring, tuple(parsed))


def dump_matrix(m: Matrix) -> str:
    """Canonical single-line serialization; stable under parse/serialize."""
    return json.dumps(matrix_to_json(m), separators=(", ", ": "))


def load_matrix(text: str) -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return matrix_from_json(obj)
