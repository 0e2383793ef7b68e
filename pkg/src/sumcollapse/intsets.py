"""Exact and windowed integer-set representations with sumset arithmetic.

Two representations cover everything the checkers need:

* :class:`CofiniteOddSet`: all odd integers >= ``lower`` minus a finite
  exclusion list.  The only infinite sets admitting exact (non-windowed)
  pair-sum decisions.
* :class:`WindowSet`: a bitset over a finite interval, carrying an
  ``exact_from`` marker delimiting where derived sumsets are certified.

Sumsets are computed by shift-OR bitset convolution over the sparser
operand; Python's big integers do the word-level work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .verdict import RelationVerdict, fails, holds, holds_on_window


_BITPOS = [tuple(j for j in range(8) if b >> j & 1) for b in range(256)]


def iter_bits(bits: int):
    """Yield set-bit positions in increasing order.

    Scans bytes rather than clearing bits one at a time, which would copy
    the whole integer per member and go quadratic on dense sets.
    """
    if not bits:
        return
    raw = bits.to_bytes((bits.bit_length() + 7) // 8, "little")
    for idx, byte in enumerate(raw):
        if byte:
            base = idx << 3
            for off in _BITPOS[byte]:
                yield base + off


def bits_from_values(values, lo: int, hi: int) -> int:
    """Bitset (bit ``v - lo``) of the given values clipped to ``[lo, hi]``."""
    if lo > hi:
        return 0
    buf = bytearray((hi - lo) // 8 + 1)
    for v in values:
        if lo <= v <= hi:
            i = v - lo
            buf[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(buf, "little")


def _alternating_bits(count: int) -> int:
    """``count`` set bits at positions 0, 2, 4, ... (a step-2 progression)."""
    if count <= 0:
        return 0
    return ((1 << (2 * count)) - 1) // 3


def odd_pattern_bits(first_odd: int, lo: int, hi: int) -> int:
    """Bitset over ``[lo, hi]`` of all odd integers >= ``first_odd``."""
    start = max(first_odd, lo)
    if start % 2 == 0:
        start += 1
    if start > hi:
        return 0
    return _alternating_bits((hi - start) // 2 + 1) << (start - lo)


@dataclass(frozen=True)
class CofiniteOddSet:
    """All odd integers >= ``lower`` except a finite excluded set."""

    lower: int
    excluded: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.lower < 3 or self.lower % 2 == 0:
            raise ValueError(f"lower bound must be an odd integer >= 3, got {self.lower}")
        object.__setattr__(self, "excluded", frozenset(self.excluded))
        for e in self.excluded:
            if e % 2 == 0 or e < self.lower:
                raise ValueError(f"excluded element {e} is not an odd integer >= {self.lower}")

    @property
    def max_excluded(self) -> int:
        return max(self.excluded, default=0)

    def contains(self, n: int) -> bool:
        return n % 2 == 1 and n >= self.lower and n not in self.excluded

    __contains__ = contains

    def window_bits(self, lo: int, hi: int) -> int:
        bits = odd_pattern_bits(self.lower, lo, hi)
        return bits & ~bits_from_values(self.excluded, lo, hi)

    def is_subset_of(self, other: "CofiniteOddSet") -> bool:
        """Exact containment test between two cofinite odd sets."""
        for n in range(self.lower, other.lower, 2):
            if n not in self.excluded:
                return False
        for f in other.excluded:
            if f >= self.lower and f not in self.excluded:
                return False
        return True

    def describe(self) -> str:
        if not self.excluded:
            return f"odd>={self.lower}"
        inner = ",".join(str(e) for e in sorted(self.excluded))
        return f"odd>={self.lower} \\ {{{inner}}}"


class WindowSet:
    """Finite integer window with a membership bitset.

    Bit ``i`` of ``bits`` is membership of ``lo + i``.  ``exact_from`` marks
    the start of the subrange on which the set is certified exact; for a
    windowed restriction of a known set that is ``lo`` itself, while derived
    sumsets push it up.  An empty window is represented by ``lo == hi + 1``.
    """

    __slots__ = ("lo", "hi", "bits", "exact_from")

    def __init__(self, lo: int, hi: int, bits: int, exact_from: int | None = None):
        if lo > hi + 1:
            raise ValueError(f"inverted window [{lo}, {hi}]")
        length = hi - lo + 1
        if bits < 0 or bits >> length:
            raise ValueError("membership bits fall outside the window")
        self.lo = lo
        self.hi = hi
        self.bits = bits
        self.exact_from = lo if exact_from is None else exact_from
        if not (lo <= self.exact_from <= hi + 1):
            raise ValueError("exact_from must lie within the window (or just past it)")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_values(cls, lo: int, hi: int, values) -> "WindowSet":
        return cls(lo, hi, bits_from_values(values, lo, hi))

    @classmethod
    def from_predicate(cls, lo: int, hi: int, pred) -> "WindowSet":
        buf = bytearray((hi - lo) // 8 + 1) if hi >= lo else bytearray(1)
        for v in range(lo, hi + 1):
            if pred(v):
                i = v - lo
                buf[i >> 3] |= 1 << (i & 7)
        return cls(lo, hi, int.from_bytes(buf, "little"))

    # -- queries -------------------------------------------------------------

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi and bool(self.bits >> (v - self.lo) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WindowSet)
            and (self.lo, self.hi, self.bits, self.exact_from)
            == (other.lo, other.hi, other.bits, other.exact_from)
        )

    def __repr__(self) -> str:
        return (
            f"WindowSet([{self.lo}, {self.hi}], {len(self)} members, "
            f"exact_from={self.exact_from})"
        )

    def members(self):
        lo = self.lo
        for i in iter_bits(self.bits):
            yield lo + i

    def min_member(self) -> int | None:
        if not self.bits:
            return None
        return self.lo + (self.bits & -self.bits).bit_length() - 1

    def is_subset_of(self, other: "WindowSet") -> bool:
        if (self.lo, self.hi) != (other.lo, other.hi):
            raise ValueError("subset test requires matching windows")
        return not (self.bits & ~other.bits & ((1 << (self.hi - self.lo + 1)) - 1))

    def difference_values(self, other: "WindowSet") -> set[int]:
        """The set of pairwise differences {a - b}; a small derived helper."""
        return {a - b for a in self.members() for b in other.members()}


def restrict(source, lo: int, hi: int, table=None) -> WindowSet:
    """Materialise a set description onto ``[lo, hi]`` with ``exact_from = lo``.

    ``source`` may be a :class:`CofiniteOddSet`, any object exposing
    ``window_bits(lo, hi)`` (set expressions pass a sieve via ``table``),
    a plain collection of integers, or a membership predicate.
    """
    if lo > hi:
        raise ValueError(f"inverted window [{lo}, {hi}]")
    if isinstance(source, CofiniteOddSet):
        return WindowSet(lo, hi, source.window_bits(lo, hi))
    if hasattr(source, "window_bits"):
        return WindowSet(lo, hi, source.window_bits(lo, hi, table))
    if isinstance(source, (set, frozenset, list, tuple, range)):
        return WindowSet.from_values(lo, hi, source)
    if callable(source):
        return WindowSet.from_predicate(lo, hi, source)
    raise TypeError(f"cannot restrict object of type {type(source).__name__}")


def _sumset_bits(a_bits: int, b_bits: int, out_len: int) -> int:
    """OR of ``a_bits`` shifted by every set position of ``b_bits``.

    Enumerates the sparser operand, drops shifts past the output window and
    keeps the shifted operand trimmed so intermediate integers never grow
    beyond the window.
    """
    if out_len <= 0:
        return 0
    full = (1 << out_len) - 1
    if a_bits.bit_count() < b_bits.bit_count():
        a_bits, b_bits = b_bits, a_bits
    a_bits &= full
    if not a_bits:
        return 0
    a_lsb = (a_bits & -a_bits).bit_length() - 1
    acc = 0
    slack = 1 << 13  # trim the shifted operand only once it overshoots by this much
    since_check = 0
    for j in iter_bits(b_bits):
        allowed = out_len - j
        if allowed <= 0:
            break
        if a_bits.bit_length() > allowed + slack:
            a_bits &= (1 << (allowed + slack)) - 1
        acc |= a_bits << j
        # saturation: once acc is solid ones above the lowest position any
        # remaining shift could touch, further shifts are subsumed
        since_check += 1
        if since_check >= 64:
            since_check = 0
            p = j + 1 + a_lsb
            rem = out_len - p
            if rem <= 0 or ((acc >> p) & ((1 << rem) - 1)).bit_count() == rem:
                break
    return acc & full


def iterated_sumset(ws: WindowSet, n: int) -> WindowSet:
    """All sums of ``n`` members, certified exact on ``[n*lo, hi]``.

    Any sum s <= hi of n elements >= lo only uses summands
    <= hi - (n-1)*lo, all inside the window, so truncating each fold at
    ``hi`` loses nothing below it.
    """
    if n < 1:
        raise ValueError(f"fold count must be >= 1, got {n}")
    if ws.exact_from != ws.lo:
        raise ValueError("iterated_sumset needs a window that is exact from its start")
    if ws.lo < 0:
        raise ValueError("iterated_sumset requires a non-negative window")
    if n == 1:
        return WindowSet(ws.lo, ws.hi, ws.bits, ws.exact_from)
    if n * ws.lo > ws.hi:
        raise ValueError(
            f"{n}-fold sums start at {n * ws.lo}, past the window end {ws.hi}"
        )
    acc = ws.bits
    for step in range(2, n + 1):
        out_len = ws.hi - step * ws.lo + 1
        acc = _sumset_bits(acc, ws.bits, out_len)
    return WindowSet(n * ws.lo, ws.hi, acc, exact_from=n * ws.lo)


def dilation(ws: WindowSet, n: int) -> WindowSet:
    """Pointwise scaling {n*c}; the window becomes ``[n*lo, hi]``."""
    if n < 1:
        raise ValueError(f"dilation factor must be >= 1, got {n}")
    if n == 1:
        return WindowSet(ws.lo, ws.hi, ws.bits, ws.exact_from)
    new_lo = n * ws.lo
    if new_lo > ws.hi:
        return WindowSet(ws.hi + 1, ws.hi, 0, exact_from=ws.hi + 1)
    scaled = (n * v for v in ws.members())
    bits = bits_from_values(scaled, new_lo, ws.hi)
    exact = min(n * ws.exact_from, ws.hi + 1)
    return WindowSet(new_lo, ws.hi, bits, exact_from=exact)


def sumset_equal_window(a: WindowSet, b: WindowSet, n: int) -> RelationVerdict:
    """Compare the n-fold sumsets of two windowed sets on their certified range."""
    if (a.lo, a.hi) != (b.lo, b.hi):
        raise ValueError("sumset comparison requires matching windows")
    if a.exact_from != a.lo or b.exact_from != b.lo:
        raise ValueError("sumset comparison requires windows exact from their start")
    if n * a.lo > a.hi:
        return holds_on_window(
            None,
            f"certified range for {n}-fold sums over [{a.lo}, {a.hi}] is empty; "
            "nothing to compare",
        )
    sa = iterated_sumset(a, n)
    sb = iterated_sumset(b, n)
    diff = sa.bits ^ sb.bits
    if not diff:
        return holds_on_window(
            (n * a.lo, a.hi),
            f"{n}-fold sumsets agree on [{n * a.lo}, {a.hi}]; "
            "no statement beyond the window",
        )
    low = diff & -diff
    value = sa.lo + low.bit_length() - 1
    side = "left" if value in sa else "right"
    return fails(
        value,
        f"{n}-fold sumsets differ at {value} (present only in the {side} operand)",
        certified_range=(n * a.lo, a.hi),
    )


def pair_sum_cover_decision(d: CofiniteOddSet) -> RelationVerdict:
    """Decide exactly whether 2*(odd integers >= 3) equals 2*D.

    Even sums up to twice the largest excluded element plus 6 are checked by
    enumeration.  Beyond that threshold a representation always exists: with
    M the largest excluded element, any even s > 2M + 6 leaves the interval
    (M, s/2] wide enough to contain an odd a >= 3 that is not excluded, and
    its partner s - a >= s/2 > M cannot be excluded either.
    """
    if d.lower != 3:
        raise ValueError("the exact pair-sum decision is defined for lower bound 3")
    m = d.max_excluded
    threshold = 2 * m + 6
    excluded = d.excluded
    for s in range(6, threshold + 1, 2):
        found = False
        for a in range(3, s // 2 + 1, 2):
            if a not in excluded and (s - a) not in excluded:
                found = True
                break
        if not found:
            return fails(
                s,
                f"{s} has no representation a + b with both odd, >= 3 and outside "
                f"{sorted(excluded)}",
                certified_range=(6, threshold),
            )
    return holds(
        f"all even sums in [6, {threshold}] verified by enumeration; for even "
        f"s > {threshold} pick an odd a in ({m}, s/2] with a >= 3: neither a nor "
        f"s - a >= s/2 > {m} can be excluded, so s = a + (s - a) works"
    )
