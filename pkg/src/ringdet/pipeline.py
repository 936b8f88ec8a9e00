"""Division-free determinant and characteristic polynomial over any ring.

The computation has two halves. First, for each k, the corner entries of the
powers of the upper-left k x k block are packed into a truncated polynomial
(one "factor" per k). Second, the n factors are multiplied in a balanced
tree and the product -- which always has constant term one -- is reciprocated
in the truncated ring. The resulting polynomial is det(I - x*A): its top
coefficient carries the determinant (up to sign) and reading its
coefficients backwards gives the full characteristic polynomial.

Only ring additions, subtractions and multiplications are performed, so all
of this works verbatim over rings with zero divisors (Z/4, Z/6, ...) and
over polynomial rings with symbolic entries.

``verify_telescoping`` is the field-only sanity check that the product of
the corner entries of the inverses of all leading blocks equals the inverse
of the determinant, with every minor computed by the permutation-expansion
oracle.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from .baselines import det_permutation
from .errors import AlgorithmRefusal, HypothesisNotSatisfied, InversionError, UsageError
from .matrices import MatMulCounter, Matrix, diag_entries_of_powers
from .series import CharPoly, TruncPoly


def thread_cap() -> int:
    """Worker cap from RINGDET_THREADS; 0 or unset means the default (1)."""
    raw = os.environ.get("RINGDET_THREADS", "").strip()
    if not raw:
        return 1
    try:
        cap = int(raw, 10)
    except ValueError:
        raise UsageError(f"RINGDET_THREADS must be an integer, got {raw!r}") from None
    if cap < 0:
        raise UsageError(f"RINGDET_THREADS must be >= 0, got {cap}")
    return cap if cap > 0 else 1


def factor_poly(a: Matrix, k: int, counter: MatMulCounter | None = None) -> TruncPoly:
    """The unic factor for index k: sum_j (corner of (A_kxk)^j) * x^j, cap n."""
    if not a.is_square():
        raise UsageError("factor polynomials need a square matrix")
    cap = a.rows
    entries = diag_entries_of_powers(a.leading(k), cap, counter)
    return TruncPoly(a.ring, cap, tuple(entries))


def balanced_product(factors) -> TruncPoly:
    """Product of truncated polynomials, multiplied pairwise in a tree."""
    layer = list(factors)
    if not layer:
        raise UsageError("balanced_product needs at least one factor")
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def rev_charpoly(a: Matrix) -> TruncPoly:
    """det(I - x*A) as a truncated polynomial with cap n; always unic."""
    if not a.is_square():
        raise UsageError(f"need a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n == 0:
        return TruncPoly.one(a.ring, 0)
    workers = thread_cap()
    if workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=min(workers, n)) as pool:
            factors = list(pool.map(lambda k: factor_poly(a, k), range(1, n + 1)))
    else:
        factors = [factor_poly(a, k) for k in range(1, n + 1)]
    return balanced_product(factors).reciprocal()


def determinant(a: Matrix):
    """The determinant, by reading the top coefficient of det(I - x*A)."""
    n = a.rows
    d = rev_charpoly(a)
    top = d.coeff(n)
    return top if n % 2 == 0 else a.ring.neg(top)


def char_poly(a: Matrix) -> CharPoly:
    """The monic characteristic polynomial det(x*I - A), coefficients c_0..c_n."""
    n = a.rows
    d = rev_charpoly(a)
    return CharPoly(a.ring, tuple(d.coeff(n - m) for m in range(n + 1)))


def _corner_of_inverse(c: Matrix):
    """Corner entry of c^-1 via the signed-minor formula, oracle minors."""
    ring = c.ring
    k = c.rows
    det_c = det_permutation(c)
    try:
        inv_det = ring.inverse(det_c)
    except InversionError:
        raise HypothesisNotSatisfied(
            f"leading {k}x{k} block is singular"
        ) from None
    minor_det = det_permutation(c.minor(k - 1, k - 1))
    # sign (-1)^(k+k) is +1 for the corner entry
    return ring.mul(minor_det, inv_det)


def verify_telescoping(b: Matrix) -> bool:
    """Check that the corner entries of the leading-block inverses multiply
    to the inverse of the determinant.

    Requires a field and invertible leading blocks; a singular block raises
    HypothesisNotSatisfied, which is different from the identity failing.
    """
    ring = b.ring
    if not ring.is_field:
        raise AlgorithmRefusal(
            f"telescoping verification needs a field, not {ring.spec_string()!r}"
        )
    if not b.is_square():
        raise UsageError("telescoping verification needs a square matrix")
    n = b.rows
    product = ring.one
    for k in range(1, n + 1):
        product = ring.mul(product, _corner_of_inverse(b.leading(k)))
    det_b = det_permutation(b)
    try:
        inv_det = ring.inverse(det_b)
    except InversionError:
        raise HypothesisNotSatisfied("matrix is singular") from None
    return ring.eq(product, inv_det)
