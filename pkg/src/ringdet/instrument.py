"""Operation counting and dependency-depth tracking for any base ring.

``CountingRing`` wraps a ring so every add/sub/mul bumps a counter while the
computed values stay identical to the unwrapped run. Each wrapped element is
a ``(value, depth)`` pair: inputs and constants sit at depth 0 and every
operation's result sits one level above its deepest operand, so the depth of
a final value is the critical-path length of the straight-line program that
produced it -- the number of stages a fully parallel evaluation would need.

Negation is free: it never occurs alone in the algorithms here, only fused
into a subtraction or a sign flip of an input, so it neither counts nor
deepens. Field inversions (used only by the division-based baselines) are
folded into the multiplication counter; construct the ring with
``allow_inverse=False`` to trap any attempted division instead.

Counters are kept per thread and merged on read, so parallel branches may
increment freely; merging is associative and commutative and the depth
annotations travel with the values, making every reported number independent
of the schedule that produced it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import InversionError, UsageError
from .rings import Ring


@dataclass
class OpStats:
    """Ring-operation totals plus the critical-path depth of a computation."""

    adds: int = 0
    subs: int = 0
    muls: int = 0
    depth: int = 0

    def merged(self, other: "OpStats") -> "OpStats":
        """Combine parallel branches: counters sum, depths take the max."""
        return OpStats(
            adds=self.adds + other.adds,
            subs=self.subs + other.subs,
            muls=self.muls + other.muls,
            depth=max(self.depth, other.depth),
        )

    @property
    def total(self) -> int:
        return self.adds + self.subs + self.muls


class _Bucket:
    __slots__ = ("adds", "subs", "muls")

    def __init__(self):
        self.adds = 0
        self.subs = 0
        self.muls = 0


class CountingRing(Ring):
    """A ring behaviorally identical to ``base``, with instrumentation."""

    kind = "counting"

    def __init__(self, base: Ring, allow_inverse: bool = True):
        self.base = base
        self.is_field = base.is_field
        self.characteristic = base.characteristic
        self.zero = (base.zero, 0)
        self.one = (base.one, 0)
        self.allow_inverse = allow_inverse
        self._badd = base.add
        self._bsub = base.sub
        self._bmul = base.mul
        self._bneg = base.neg
        self._lock = threading.Lock()
        self._buckets: list[_Bucket] = []
        self._tl = threading.local()

    def _bucket(self) -> _Bucket:
        try:
            return self._tl.bucket
        except AttributeError:
            b = _Bucket()
            with self._lock:
                self._buckets.append(b)
            self._tl.bucket = b
            return b

    # --- ring operations (hot path: keep lean) ---

    def add(self, a, b):
        self._bucket().adds += 1
        da, db = a[1], b[1]
        return (self._badd(a[0], b[0]), (da if da >= db else db) + 1)

    def sub(self, a, b):
        self._bucket().subs += 1
        da, db = a[1], b[1]
        return (self._bsub(a[0], b[0]), (da if da >= db else db) + 1)

    def mul(self, a, b):
        self._bucket().muls += 1
        da, db = a[1], b[1]
        return (self._bmul(a[0], b[0]), (da if da >= db else db) + 1)

    def neg(self, a):
        return (self._bneg(a[0]), a[1])

    def eq(self, a, b):
        return self.base.eq(a[0], b[0])

    def from_int(self, n):
        return (self.base.from_int(n), 0)

    def inverse(self, a):
        if not self.allow_inverse:
            raise InversionError("inversion trapped: this run must be division-free")
        self._bucket().muls += 1
        return (self.base.inverse(a[0]), a[1] + 1)

    def depth_hint(self, a):
        return a[1]

    # --- lifting and reading back ---

    def lift(self, value, depth: int = 0):
        """Wrap a base-ring value as an input of the straight-line program."""
        return (value, depth)

    def value(self, a):
        return a[0]

    def stats(self) -> OpStats:
        """Merged totals across all threads that touched this ring."""
        out = OpStats()
        with self._lock:
            buckets = list(self._buckets)
        for b in buckets:
            out.adds += b.adds
            out.subs += b.subs
            out.muls += b.muls
        return out

    def reset(self) -> None:
        with self._lock:
            for b in self._buckets:
                b.adds = b.subs = b.muls = 0

    def validate(self, a):
        if not isinstance(a, tuple) or len(a) != 2 or not isinstance(a[1], int) or a[1] < 0:
            raise UsageError(f"not an instrumented element: {a!r}")
        self.base.validate(a[0])

    def random_element(self, rng):
        return (self.base.random_element(rng), 0)

    def format(self, a):
        return self.base.format(a[0])

    def element_to_json(self, a):
        return self.base.element_to_json(a[0])

    def element_from_json(self, obj):
        return (self.base.element_from_json(obj), 0)

    def spec_string(self):
        return f"counting({self.base.spec_string()})"

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)
