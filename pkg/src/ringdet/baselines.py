"""Independent determinant and characteristic-polynomial algorithms.

These serve as oracles and benchmark comparators for the main pipeline:

* permutation expansion -- the signed sum over all permutations; exponential,
  guarded to n <= 9, but correct over any ring and trivially auditable.
* condensation -- repeated reduction of an n x n determinant to (n-1) x (n-1)
  via 2 x 2 minors, dividing out pivot powers; needs a field and pivot
  handling (row swaps with sign tracking).
* the clow-style triangular recurrence ("berkowitz") -- builds the
  characteristic polynomial by applying one banded lower-triangular matrix
  per principal submatrix; division-free, works over any ring.
* power sums ("csanky") -- traces of matrix powers fed through the triangular
  Newton relations; divides by 1..n, so it needs characteristic 0 or a prime
  modulus larger than n.
"""

from __future__ import annotations

from .doubling import powers_by_doubling
from .errors import AlgorithmRefusal, UsageError
from .matrices import Matrix
from .rings import ModularRing, RationalRing, tree_sum
from .series import CharPoly

PERMUTATION_LIMIT = 9


def det_permutation(a: Matrix):
    """Signed permutation expansion, enumerated lexicographically.

    Column choices are made row by row against the ascending list of unused
    columns; choosing the j-th remaining column adds exactly j inversions,
    which keeps the sign bookkeeping incremental. Partial products are
    shared along the recursion. Refuses n > 9: the term count is factorial.
    """
    if not a.is_square():
        raise UsageError(f"need a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n > PERMUTATION_LIMIT:
        raise AlgorithmRefusal(
            f"permutation expansion is limited to {PERMUTATION_LIMIT}x{PERMUTATION_LIMIT} "
            f"(n! terms); got n={n}"
        )
    ring = a.ring
    if n == 0:
        return ring.one
    ent = a.entries
    mul = ring.mul
    neg = ring.neg
    terms = []

    def expand(i, remaining, inversions, partial):
        if not remaining:
            terms.append(partial if inversions % 2 == 0 else neg(partial))
            return
        row = ent[i]
        for j, col in enumerate(remaining):
            expand(i + 1, remaining[:j] + remaining[j + 1:], inversions + j,
                   mul(partial, row[col]))

    first = ent[0]
    cols = tuple(range(n))
    for j in range(n):
        expand(1, cols[:j] + cols[j + 1:], j, first[j])
    return tree_sum(ring, terms)


def det_chio(a: Matrix):
    """Condensation determinant; field only.

    Each step replaces the matrix by the (m-1) x (m-1) matrix of 2 x 2
    minors against the top-left pivot and divides by pivot^(m-2). A zero
    pivot is repaired by swapping in a lower row (flipping the sign); if the
    whole first column is zero the determinant is zero.
    """
    ring = a.ring
    if not ring.is_field:
        raise AlgorithmRefusal(
            f"condensation divides by pivots and needs a field, not {ring.spec_string()!r}"
        )
    if not a.is_square():
        raise UsageError(f"need a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n == 0:
        return ring.one
    mul, sub, neg = ring.mul, ring.sub, ring.neg
    zero = ring.zero

    def condense(rows):
        m = len(rows)
        if m == 1:
            return rows[0][0]
        pivot_row = None
        for i in range(m):
            if not ring.eq(rows[i][0], zero):
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        flipped = pivot_row != 0
        if flipped:
            rows = list(rows)
            rows[0], rows[pivot_row] = rows[pivot_row], rows[0]
        pivot = rows[0][0]
        top = rows[0]
        condensed = [
            tuple(sub(mul(pivot, rows[i][j]), mul(rows[i][0], top[j]))
                  for j in range(1, m))
            for i in range(1, m)
        ]
        value = condense(condensed)
        if m > 2:
            divisor = pivot
            for _ in range(m - 3):
                divisor = mul(divisor, pivot)
            value = mul(value, ring.inverse(divisor))
        return neg(value) if flipped else value

    return condense(list(a.entries))


def _row_times_powers(ring, row, b: Matrix, count: int):
    """[row, row*b, ..., row*b^(count-1)] by squaring b and batch-multiplying."""
    rows = [tuple(row)]
    if count <= 1:
        return rows
    power = b
    while len(rows) < count:
        block = rows[: count - len(rows)]
        prod = Matrix(ring, tuple(block)) * power
        rows.extend(prod.entries)
        if len(rows) < count:
            power = power * power
    return rows


def charpoly_berkowitz(a: Matrix) -> CharPoly:
    """Characteristic polynomial by the division-free triangular recurrence.

    Working up from the bottom-right 1 x 1 block, each step applies an
    (m+1) x m banded lower-triangular matrix -- every column a shifted copy
    of [1, -corner, -r*s, -r*b*s, ..., -r*b^(m-2)*s] -- to the coefficient
    vector of the previous block's characteristic polynomial. The banded
    matrices are never materialized; only the vector is carried forward.
    Works over any commutative ring with unit.
    """
    if not a.is_square():
        raise UsageError(f"need a square matrix, got {a.rows}x{a.cols}")
    ring = a.ring
    n = a.rows
    if n == 0:
        return CharPoly(ring, (ring.one,))
    ent = a.entries
    neg, mul = ring.neg, ring.mul
    # vec holds the coefficients of the current block's characteristic
    # polynomial, highest degree first
    vec = [ring.one, neg(ent[n - 1][n - 1])]
    for k in range(n - 2, -1, -1):
        m = n - k  # size of the block whose polynomial we produce now
        corner = ent[k][k]
        r = ent[k][k + 1: n]
        s = [ent[i][k] for i in range(k + 1, n)]
        b = Matrix(ring, tuple(tuple(ent[i][k + 1: n]) for i in range(k + 1, n)))
        r_pows = _row_times_powers(ring, r, b, m - 1)
        col = [ring.one, neg(corner)]
        for t in range(m - 1):
            dot = tree_sum(ring, [mul(x, y) for x, y in zip(r_pows[t], s)])
            col.append(neg(dot))
        # banded lower-triangular application: new[i] = sum_j col[i-j] * vec[j];
        # col[0] is one structurally, so that term is vec[i] itself
        new_vec = []
        for i in range(m + 1):
            terms = [vec[i]] if i < m else []
            terms += [mul(col[i - j], vec[j]) for j in range(max(0, i - m), min(i, m))]
            new_vec.append(tree_sum(ring, terms))
        vec = new_vec
    return CharPoly(ring, tuple(reversed(vec)))


def charpoly_csanky(a: Matrix) -> CharPoly:
    """Characteristic polynomial from traces of powers via Newton's relations.

    Solves the triangular system tying power sums of eigenvalues to the
    coefficients by forward substitution; step k divides by k, so the ring
    must have characteristic 0 or be a prime field with modulus > n.
    """
    if not a.is_square():
        raise UsageError(f"need a square matrix, got {a.rows}x{a.cols}")
    ring = a.ring
    n = a.rows
    base = getattr(ring, "base", ring)
    char_ok = isinstance(base, RationalRing) or (
        isinstance(base, ModularRing) and base.is_field and base.modulus > n
    )
    if not char_ok:
        raise AlgorithmRefusal(
            "power-sum recovery divides by 1..n and needs characteristic 0 "
            f"or a prime modulus > n; ring {ring.spec_string()!r} fails this for n={n}"
        )
    if n == 0:
        return CharPoly(ring, (ring.one,))
    pows = powers_by_doubling(Matrix.identity(ring, n), a, n, Matrix.__mul__)
    traces = [None]  # 1-based: traces[k] = trace of a^k
    for k in range(1, n + 1):
        diag = [pows[k].entries[i][i] for i in range(n)]
        traces.append(tree_sum(ring, diag))
    # c[m] will be the coefficient of x^m; c[n] = 1
    c = [ring.zero] * (n + 1)
    c[n] = ring.one
    mul, add, neg = ring.mul, ring.add, ring.neg
    for k in range(1, n + 1):
        acc = traces[k]
        for j in range(1, k):
            acc = add(acc, mul(traces[k - j], c[n - j]))
        c[n - k] = neg(mul(acc, ring.inverse(ring.from_int(k))))
    return CharPoly(ring, tuple(c))


def det_from_charpoly(cp: CharPoly):
    """Determinant out of a characteristic polynomial: (-1)^n times c_0."""
    c0 = cp.constant_term()
    return c0 if cp.degree % 2 == 0 else cp.ring.neg(c0)
