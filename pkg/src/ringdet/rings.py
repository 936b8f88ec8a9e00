"""Commutative rings with unit, and the element domains everything else builds on.

Four concrete rings are provided: arbitrary-precision integers, integers
modulo m (any m >= 2, prime or not), rationals, and sparse multivariate
polynomials with integer coefficients. Elements are plain immutable Python
values; each ring object supplies add/sub/mul/neg/eq plus parsing and
formatting, and always returns canonical forms so that equality is
structural.

Division is deliberately not part of the ring interface. ``inverse`` exists
only for fields (rationals, prime moduli) and raises ``InversionError``
everywhere else -- that failure is exactly the situation the division-free
pipeline is designed to avoid.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction

from .errors import InversionError, ParseError, UsageError

_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class Ring:
    """Base class: a commutative ring with unit over some element domain."""

    kind = "abstract"
    is_field = False
    characteristic = 0

    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def from_int(self, n: int):
        raise NotImplementedError

    def inverse(self, a):
        raise InversionError(
            f"elements of {self.spec_string()!r} have no multiplicative inverses; "
            "a division-free algorithm is required here"
        )

    def depth_hint(self, a) -> int:
        """Dependency depth of a value; 0 unless the ring tracks it."""
        return 0

    def validate(self, a) -> None:
        """Raise UsageError unless ``a`` is a canonical element of this ring."""
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, obj):
        raise NotImplementedError

    def spec_string(self) -> str:
        """The descriptor used by the CLI and the matrix file format."""
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.spec_string()}>"

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class IntegerRing(Ring):
    """The integers, with Python's arbitrary-precision arithmetic."""

    kind = "integer"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, n):
        return n

    def validate(self, a):
        if not isinstance(a, int):
            raise UsageError(f"not an integer element: {a!r}")

    def random_element(self, rng):
        return rng.randint(-9, 9)

    def format(self, a):
        return str(a)

    def element_to_json(self, a):
        return a

    def element_from_json(self, obj):
        if isinstance(obj, bool):
            raise ParseError(f"invalid integer entry: {obj!r}")
        if isinstance(obj, int):
            return obj
        if isinstance(obj, str):
            try:
                return int(obj, 10)
            except ValueError:
                raise ParseError(f"invalid integer entry: {obj!r}") from None
        raise ParseError(f"invalid integer entry: {obj!r}")

    def spec_string(self):
        return "int"


class ModularRing(Ring):
    """Integers modulo m, m >= 2. Residues are kept reduced into [0, m)."""

    kind = "modular"

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise UsageError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.is_field = _is_prime(modulus)
        self.characteristic = modulus
        self.zero = 0
        self.one = 1 % modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def from_int(self, n):
        return n % self.modulus

    def inverse(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise InversionError(
                f"{a} has no inverse modulo {self.modulus}"
            ) from None

    def validate(self, a):
        if not isinstance(a, int) or not 0 <= a < self.modulus:
            raise UsageError(f"not a residue in [0, {self.modulus}): {a!r}")

    def random_element(self, rng):
        return rng.randrange(self.modulus)

    def format(self, a):
        return str(a)

    def element_to_json(self, a):
        return a

    def element_from_json(self, obj):
        if isinstance(obj, bool):
            raise ParseError(f"invalid residue entry: {obj!r}")
        if isinstance(obj, str):
            try:
                obj = int(obj, 10)
            except ValueError:
                raise ParseError(f"invalid residue entry: {obj!r}") from None
        if not isinstance(obj, int):
            raise ParseError(f"invalid residue entry: {obj!r}")
        return obj % self.modulus

    def spec_string(self):
        return f"mod:{self.modulus}"

    def _key(self):
        return (self.modulus,)


class RationalRing(Ring):
    """The rationals, backed by fractions.Fraction (always normalized)."""

    kind = "rational"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, n):
        return Fraction(n)

    def inverse(self, a):
        if a == 0:
            raise InversionError("0 has no inverse")
        return 1 / a

    def validate(self, a):
        if not isinstance(a, Fraction):
            raise UsageError(f"not a rational element: {a!r}")

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9))

    def format(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def element_to_json(self, a):
        if a.denominator == 1:
            return a.numerator
        return f"{a.numerator}/{a.denominator}"

    def element_from_json(self, obj):
        if isinstance(obj, bool):
            raise ParseError(f"invalid rational entry: {obj!r}")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            try:
                return Fraction(obj.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"invalid rational entry: {obj!r}") from None
        raise ParseError(f"invalid rational entry: {obj!r}")

    def spec_string(self):
        return "rat"


def _grlex_key(term):
    exps, _coeff = term
    return (sum(exps), exps)


class PolynomialRing(Ring):
    """Multivariate polynomials over the integers, stored sparsely.

    An element is a tuple of (exponent-vector, coefficient) pairs, sorted in
    descending graded-lexicographic order, with no zero coefficients. The
    empty tuple is zero. Tuples keep elements immutable and make structural
    equality canonical.
    """

    kind = "multivariate-poly"

    def __init__(self, variables):
        names = tuple(variables)
        if not names:
            raise UsageError("polynomial ring needs at least one variable")
        for name in names:
            if not _IDENT_RE.match(name):
                raise UsageError(f"invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names: {names}")
        self.variables = names
        self._nvars = len(names)
        self.zero = ()
        self.one = (((0,) * self._nvars, 1),)

    def variable(self, name):
        """The element for a single named variable."""
        i = self.variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self._nvars))
        return ((exps, 1),)

    def constant(self, n: int):
        return self.from_int(n)

    def _canon(self, acc: dict):
        return tuple(sorted(acc.items(), key=_grlex_key, reverse=True))

    def add(self, a, b):
        acc = dict(a)
        for exps, c in b:
            s = acc.get(exps, 0) + c
            if s:
                acc[exps] = s
            else:
                del acc[exps]
        return self._canon(acc)

    def sub(self, a, b):
        acc = dict(a)
        for exps, c in b:
            s = acc.get(exps, 0) - c
            if s:
                acc[exps] = s
            else:
                del acc[exps]
        return self._canon(acc)

    def mul(self, a, b):
        acc = {}
        for ea, ca in a:
            for eb, cb in b:
                exps = tuple(x + y for x, y in zip(ea, eb))
                s = acc.get(exps, 0) + ca * cb
                if s:
                    acc[exps] = s
                else:
                    del acc[exps]
        return self._canon(acc)

    def neg(self, a):
        return tuple((exps, -c) for exps, c in a)

    def from_int(self, n):
        if n == 0:
            return ()
        return (((0,) * self._nvars, n),)

    def validate(self, a):
        if not isinstance(a, tuple):
            raise UsageError(f"not a polynomial element: {a!r}")
        for term in a:
            if (
                not isinstance(term, tuple)
                or len(term) != 2
                or not isinstance(term[0], tuple)
                or len(term[0]) != self._nvars
                or not all(isinstance(e, int) and e >= 0 for e in term[0])
                or not isinstance(term[1], int)
                or term[1] == 0
            ):
                raise UsageError(f"malformed polynomial term: {term!r}")
        if list(a) != sorted(a, key=_grlex_key, reverse=True):
            raise UsageError("polynomial terms not in canonical order")

    def random_element(self, rng):
        # constants keep randomized runs exact and bounded
        return self.from_int(rng.randint(-9, 9))

    def _format_monomial(self, exps):
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def format(self, a):
        if not a:
            return "0"
        chunks = []
        for i, (exps, c) in enumerate(a):
            mono = self._format_monomial(exps)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def element_to_json(self, a):
        return [[c, list(exps)] for exps, c in a]

    def element_from_json(self, obj):
        if isinstance(obj, bool):
            raise ParseError(f"invalid polynomial entry: {obj!r}")
        if isinstance(obj, int):
            return self.from_int(obj)
        if not isinstance(obj, list):
            raise ParseError(f"invalid polynomial entry: {obj!r}")
        acc = {}
        for term in obj:
            if (
                not isinstance(term, list)
                or len(term) != 2
                or isinstance(term[0], bool)
                or not isinstance(term[0], int)
                or not isinstance(term[1], list)
                or len(term[1]) != self._nvars
                or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in term[1])
            ):
                raise ParseError(f"invalid polynomial term: {term!r}")
            coeff, exps = term
            exps = tuple(exps)
            s = acc.get(exps, 0) + coeff
            if s:
                acc[exps] = s
            else:
                acc.pop(exps, None)
        return self._canon(acc)

    def spec_string(self):
        return "poly:" + ",".join(self.variables)

    def _key(self):
        return self.variables


INTEGERS = IntegerRing()
RATIONALS = RationalRing()


def ring_from_spec(spec: str) -> Ring:
    """Parse a ring descriptor: int | mod:<m> | rat | poly:<v1,v2,...>."""
    spec = spec.strip()
    if spec == "int":
        return INTEGERS
    if spec == "rat":
        return RATIONALS
    if spec.startswith("mod:"):
        body = spec[4:]
        try:
            m = int(body, 10)
        except ValueError:
            raise ParseError(f"invalid modulus in ring descriptor: {spec!r}") from None
        if m < 2:
            raise ParseError(f"modulus must be >= 2 in ring descriptor: {spec!r}")
        return ModularRing(m)
    if spec.startswith("poly:"):
        names = [s.strip() for s in spec[5:].split(",") if s.strip()]
        if not names:
            raise ParseError(f"no variables in ring descriptor: {spec!r}")
        try:
            return PolynomialRing(names)
        except UsageError as e:
            raise ParseError(str(e)) from None
    raise ParseError(f"unknown ring descriptor: {spec!r}")


def tree_sum(ring, values):
    """Sum k values with k-1 additions arranged as a balanced tree.

    Inputs of equal depth are paired level by level, leaving the result at
    most ceil(log2(k)) addition levels above the deepest input -- this is
    what keeps inner products and convolution coefficients at logarithmic
    depth. When a depth-tracking ring reports uneven operand depths, the two
    shallowest values are combined first instead; that greedy order attains
    the minimum possible result depth for the given multiset of input
    depths (so the reported depth stays schedule-independent) without
    changing either the sum or the number of additions.
    """
    vals = list(values)
    if not vals:
        return ring.zero
    if len(vals) == 1:
        return vals[0]
    add = ring.add
    if type(ring).depth_hint is not Ring.depth_hint:
        hint = ring.depth_hint
        depths = [hint(v) for v in vals]
        if max(depths) - min(depths) > 1:
            heap = [(d, i, v) for i, (d, v) in enumerate(zip(depths, vals))]
            heapq.heapify(heap)
            seq = len(vals)
            while len(heap) > 1:
                d1, _, v1 = heapq.heappop(heap)
                d2, _, v2 = heapq.heappop(heap)
                heapq.heappush(heap, ((d1 if d1 >= d2 else d2) + 1, seq, add(v1, v2)))
                seq += 1
            return heap[0][2]
    while len(vals) > 1:
        nxt = [add(vals[i], vals[i + 1]) for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]
