"""Truncated polynomial arithmetic: the ring R[x]_N of degree-<=N polynomials.

Multiplication is convolution with every term of degree above the cap
discarded, which makes this the quotient of the formal power series ring by
the ideal generated by x^(N+1). A polynomial whose constant term is one
("unic") is invertible here, and its reciprocal is the truncated geometric
series in q = 1 - p: because q has no constant term, q^(N+1) vanishes under
the cap and the finite sum q^0 + q^1 + ... + q^N is the exact inverse.

``CharPoly`` also lives here: the coefficient vector of a monic polynomial,
produced by the pipeline and the baseline algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .doubling import powers_by_doubling
from .errors import UsageError
from .rings import Ring, tree_sum


class TruncPoly:
    """A polynomial of degree <= cap; exactly cap+1 coefficients are stored."""

    __slots__ = ("ring", "cap", "coeffs")

    def __init__(self, ring: Ring, cap: int, coeffs=()):
        if cap < 0:
            raise UsageError(f"cap must be >= 0, got {cap}")
        coeffs = tuple(coeffs)
        if len(coeffs) > cap + 1:
            raise UsageError(f"{len(coeffs)} coefficients exceed cap {cap}")
        if len(coeffs) < cap + 1:
            coeffs = coeffs + (ring.zero,) * (cap + 1 - len(coeffs))
        self.ring = ring
        self.cap = cap
        self.coeffs = coeffs

    @classmethod
    def constant(cls, ring: Ring, cap: int, el) -> "TruncPoly":
        return cls(ring, cap, (el,))

    @classmethod
    def one(cls, ring: Ring, cap: int) -> "TruncPoly":
        return cls(ring, cap, (ring.one,))

    def _check_compatible(self, other: "TruncPoly") -> None:
        if self.ring != other.ring:
            raise UsageError("mixed rings in truncated-polynomial arithmetic")
        if self.cap != other.cap:
            raise UsageError(f"cap mismatch: {self.cap} vs {other.cap}")

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self._check_compatible(other)
        add = self.ring.add
        return TruncPoly(self.ring, self.cap,
                         tuple(add(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self._check_compatible(other)
        sub = self.ring.sub
        return TruncPoly(self.ring, self.cap,
                         tuple(sub(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        """Convolution truncated at the cap, each coefficient summed pairwise."""
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self._check_compatible(other)
        ring = self.ring
        mul = ring.mul
        p, q = self.coeffs, other.coeffs
        out = []
        for k in range(self.cap + 1):
            terms = [mul(p[i], q[k - i]) for i in range(k + 1)]
            out.append(tree_sum(ring, terms))
        return TruncPoly(ring, self.cap, tuple(out))

    def coeff(self, k: int):
        if not 0 <= k <= self.cap:
            raise UsageError(f"coefficient index {k} outside 0..{self.cap}")
        return self.coeffs[k]

    def is_unic(self) -> bool:
        return self.ring.eq(self.coeffs[0], self.ring.one)

    def powers(self, maxpow: int) -> list["TruncPoly"]:
        """[self^0, ..., self^maxpow]; maxpow - 1 multiplications, log rounds."""
        if maxpow < 0:
            raise UsageError(f"maxpow must be >= 0, got {maxpow}")
        return powers_by_doubling(
            TruncPoly.one(self.ring, self.cap), self, maxpow, TruncPoly.__mul__
        )

    def reciprocal(self) -> "TruncPoly":
        """Multiplicative inverse of a unic polynomial under the cap.

        Writes self as 1 - q and sums the powers q^0..q^cap, obtained by the
        doubling scheme of ``powers``; q has zero constant term, so the
        omitted tail of the geometric series lies entirely above the cap and
        the finite sum is the exact inverse.
        """
        ring = self.ring
        if not self.is_unic():
            raise UsageError("reciprocal requires a unic polynomial (constant term one)")
        neg = ring.neg
        q = TruncPoly(ring, self.cap,
                      (ring.zero,) + tuple(neg(c) for c in self.coeffs[1:]))
        pows = q.powers(self.cap)
        out = []
        for k in range(self.cap + 1):
            out.append(tree_sum(ring, [p.coeffs[k] for p in pows]))
        return TruncPoly(ring, self.cap, tuple(out))

    def truncate(self, new_cap: int) -> "TruncPoly":
        """Drop down to a smaller cap."""
        if not 0 <= new_cap <= self.cap:
            raise UsageError(f"new cap {new_cap} outside 0..{self.cap}")
        return TruncPoly(self.ring, new_cap, self.coeffs[: new_cap + 1])

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        if self.ring != other.ring or self.cap != other.cap:
            return False
        eq = self.ring.eq
        return all(eq(x, y) for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __str__(self):
        fmt = self.ring.format
        chunks = []
        for k, c in enumerate(self.coeffs):
            if self.ring.eq(c, self.ring.zero):
                continue
            text = fmt(c)
            if " " in text:
                text = f"({text})"
            if k == 0:
                chunks.append(text)
            elif k == 1:
                chunks.append(f"{text}*x")
            else:
                chunks.append(f"{text}*x^{k}")
        return " + ".join(chunks) if chunks else "0"

    def __repr__(self):
        return f"TruncPoly(cap={self.cap}, {self})"


@dataclass(frozen=True)
class CharPoly:
    """Coefficients c_0..c_n of a monic degree-n polynomial in one variable."""

    ring: Ring
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def constant_term(self):
        return self.coeffs[0]

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        if self.ring != other.ring or len(self.coeffs) != len(other.coeffs):
            return False
        eq = self.ring.eq
        return all(eq(x, y) for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def render(self, var: str = "x") -> str:
        """Human-readable polynomial, highest degree first."""
        ring = self.ring
        n = self.degree
        chunks = []
        for m in range(n, -1, -1):
            c = self.coeffs[m]
            if ring.eq(c, ring.zero) and n > 0:
                continue
            text = ring.format(c)
            negative = text.startswith("-")
            body = text[1:] if negative else text
            compound = ("+" in body) or ("-" in body) or (" " in body)
            if m > 0:
                mono = var if m == 1 else f"{var}^{m}"
                if compound:
                    body = f"({text})*{mono}"
                    negative = False
                elif body == "1":
                    body = mono
                else:
                    body = f"{body}*{mono}"
            elif compound:
                body = f"({text})"
                negative = False
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)
