"""Power doubling: all powers x^0..x^m in O(log m) rounds of multiplication.

Each round squares the highest power on hand and then, in one parallel
batch, multiplies every earlier power by that new square, roughly doubling
the inventory. Every power beyond x^1 costs exactly one multiplication, so
the total is m - 1 multiplications for m >= 2 while the round count stays
logarithmic. Used for truncated-polynomial powers and for matrix powers.
"""

from __future__ import annotations


def powers_by_doubling(one, x, maxpow: int, mul):
    """Return [x^0, x^1, ..., x^maxpow] using ``mul`` for multiplication."""
    if maxpow < 0:
        raise ValueError(f"maxpow must be >= 0, got {maxpow}")
    pows = [one]
    if maxpow >= 1:
        pows.append(x)
    while len(pows) <= maxpow:
        m = len(pows) - 1  # have x^0..x^m with m+1 a power of two
        half = pows[(m + 1) // 2]
        high = mul(half, half)  # x^(m+1)
        pows.append(high)
        for j in range(1, min(m, maxpow - m - 1) + 1):
            pows.append(mul(pows[j], high))
    return pows
