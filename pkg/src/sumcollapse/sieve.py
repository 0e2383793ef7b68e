"""Segmented prime sieve with packed storage, prime counting and composite indexing.

The table stores one bit per odd number (bit ``i`` says whether ``2*i + 1``
is prime), so a table up to ``limit`` costs ``limit/16`` bytes plus a fixed
segment buffer during construction.  Prime counts are answered from
checkpoint sums plus a popcount over the residual block, which keeps
``prime_count`` effectively O(1).

All element indices are 1-based: ``nth_prime(1) == 2`` and the first odd
composite has rank 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SEGMENT_ODDS = 1 << 20      # odd numbers sieved per segment
CHECKPOINT_BITS = 1 << 16   # bits per prime-count checkpoint block

_POPCOUNT = np.array([bin(b).count("1") for b in range(256)], dtype=np.int64)

# bit positions set within a byte value, for fast scans
_BITS_OF = [tuple(j for j in range(8) if b >> j & 1) for b in range(256)]


def _simple_odd_sieve(limit: int) -> bytearray:
    """Byte-per-odd primality flags up to ``limit`` (``flags[i]`` for ``2i+1``)."""
    n = max((limit + 1) // 2, 1)
    flags = bytearray([1]) * n
    flags[0] = 0  # 1 is not prime
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p >> 1]:
            start = (p * p) >> 1
            flags[start::p] = bytearray(len(range(start, n, p)))
    return flags


class PrimeTable:
    """Immutable primality table over ``[2, limit]``; safe for concurrent reads."""

    __slots__ = ("limit", "_bits", "_n_bits", "_ckpt")

    def __init__(self, limit: int):
        if limit < 9:
            raise ValueError(f"sieve limit must be >= 9, got {limit}")
        if limit.bit_length() > 62:
            raise ValueError("sieve limit exceeds supported index range")
        self.limit = limit
        self._n_bits = (limit + 1) // 2
        self._bits = self._build_bits(limit)
        self._ckpt = self._build_checkpoints()

    @staticmethod
    def _build_bits(limit: int) -> bytes:
        n_bits = (limit + 1) // 2
        base = _simple_odd_sieve(math.isqrt(limit))
        base_primes = [2 * i + 1 for i, f in enumerate(base) if f and i > 0]

        chunks = []
        for seg_start in range(0, n_bits, SEGMENT_ODDS):
            seg_len = min(SEGMENT_ODDS, n_bits - seg_start)
            buf = np.ones(seg_len, dtype=np.uint8)
            if seg_start == 0:
                buf[0] = 0  # the odd number 1
            lo_value = 2 * seg_start + 1
            hi_value = 2 * (seg_start + seg_len - 1) + 1
            for p in base_primes:
                if p * p > hi_value:
                    break
                first = max(p * p, ((lo_value + p - 1) // p) * p)
                if first % 2 == 0:
                    first += p
                idx = (first >> 1) - seg_start
                if idx < seg_len:
                    buf[idx::p] = 0
            chunks.append(np.packbits(buf, bitorder="little").tobytes())
        return b"".join(chunks)

    def _build_checkpoints(self) -> np.ndarray:
        counts = _POPCOUNT[np.frombuffer(self._bits, dtype=np.uint8)]
        block_bytes = CHECKPOINT_BITS // 8
        starts = np.arange(0, len(counts), block_bytes)
        block_sums = np.add.reduceat(counts, starts)
        ckpt = np.zeros(len(starts) + 1, dtype=np.int64)
        np.cumsum(block_sums, out=ckpt[1:])
        return ckpt

    # -- point queries ---------------------------------------------------

    def _check_range(self, x: int) -> None:
        if x > self.limit:
            raise ValueError(f"query {x} exceeds sieve limit {self.limit}")

    def is_prime(self, n: int) -> bool:
        self._check_range(n)
        if n < 2:
            return False
        if n % 2 == 0:
            return n == 2
        i = n >> 1
        return bool(self._bits[i >> 3] >> (i & 7) & 1)

    def _count_odd_bits_through(self, i: int) -> int:
        """Popcount of prime bits with index in ``[0, i]``."""
        block = i >> 16
        base = int(self._ckpt[block])
        first_byte = block << 13  # CHECKPOINT_BITS // 8 bytes per block
        last_byte = i >> 3
        if last_byte > first_byte:
            base += int.from_bytes(self._bits[first_byte:last_byte], "little").bit_count()
        partial = self._bits[last_byte] & ((1 << ((i & 7) + 1)) - 1)
        return base + bin(partial).count("1")

    def prime_count(self, x: int) -> int:
        """Number of primes <= x."""
        self._check_range(x)
        if x < 2:
            return 0
        if x == 2:
            return 1
        return 1 + self._count_odd_bits_through((x - 1) >> 1)

    def odd_composite_count(self, x: int) -> int:
        """Number of odd composite numbers <= x."""
        self._check_range(x)
        if x < 9:
            return 0
        # odds up to x, minus 1 itself, minus the odd primes
        return (x + 1) // 2 - 1 - (self.prime_count(x) - 1)

    # -- indexed access --------------------------------------------------

    def nth_prime(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"prime indices are 1-based, got {k}")
        if k == 1:
            return 2
        total = self.prime_count(self.limit)
        if k > total:
            raise ValueError(f"only {total} primes <= {self.limit}, asked for #{k}")
        lo, hi = 3, self.limit
        while lo < hi:
            mid = (lo + hi) // 2
            if self.prime_count(mid) >= k:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def nth_odd_composite(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"composite indices are 1-based, got {k}")
        total = self.odd_composite_count(self.limit)
        if k > total:
            raise ValueError(
                f"only {total} odd composites <= {self.limit}, asked for #{k}"
            )
        lo, hi = 9, self.limit
        while lo < hi:
            mid = (lo + hi) // 2
            if self.odd_composite_count(mid) >= k:
                hi = mid
            else:
                lo = mid + 1
        return lo

    # -- scans -----------------------------------------------------------

    def primes_in(self, lo: int, hi: int):
        """Yield primes in ``[lo, hi]`` in increasing order."""
        self._check_range(hi)
        if lo <= 2 <= hi:
            yield 2
        start = max(lo, 3)
        if start % 2 == 0:
            start += 1
        top = hi if hi % 2 else hi - 1
        if start > top:
            return
        i0, i1 = start >> 1, top >> 1
        bits = self._bits
        for byte_idx in range(i0 >> 3, (i1 >> 3) + 1):
            b = bits[byte_idx]
            if not b:
                continue
            base = byte_idx << 3
            for j in _BITS_OF[b]:
                i = base + j
                if i0 <= i <= i1:
                    yield 2 * i + 1

    def odd_composites_in(self, lo: int, hi: int):
        """Yield odd composites in ``[lo, hi]`` in increasing order."""
        self._check_range(hi)
        start = max(lo, 9)
        if start % 2 == 0:
            start += 1
        n = start
        is_p = self.is_prime
        while n <= hi:
            if not is_p(n):
                yield n
            n += 2

    def odd_prime_mask(self) -> np.ndarray:
        """Boolean array indexed by ``i`` for the odd number ``2i+1``."""
        raw = np.frombuffer(self._bits, dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little", count=self._n_bits).astype(bool)


def build_table(limit: int) -> PrimeTable:
    return PrimeTable(limit)


@dataclass(frozen=True)
class CompositeIndex:
    """1-based index into the increasing sequence of odd composite numbers."""

    table: PrimeTable

    def nth(self, k: int) -> int:
        return self.table.nth_odd_composite(k)

    def rank(self, c: int) -> int:
        if c % 2 == 0 or c < 9 or self.table.is_prime(c):
            raise ValueError(f"{c} is not an odd composite number")
        return self.table.odd_composite_count(c)

    def count(self, x: int) -> int:
        return self.table.odd_composite_count(x)

    def first(self, k: int) -> tuple[int, ...]:
        """The ``k`` smallest odd composites."""
        out = []
        it = self.table.odd_composites_in(9, self.table.limit)
        for _ in range(k):
            out.append(next(it))
        return tuple(out)


def is_rough(n: int, p: int) -> bool:
    """True iff every prime factor of odd ``n`` is >= ``p`` (``p`` an odd prime).

    Equivalently, membership of ``n`` in the multiplicative semigroup
    generated by the primes >= ``p``.
    """
    if n % 2 == 0 or n < 3:
        raise ValueError(f"n must be an odd integer >= 3, got {n}")
    if p == 2:
        raise ValueError("p = 2 is not supported; every integer >= 2 qualifies")
    if p < 3 or p % 2 == 0 or not _is_prime_slow(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    q = 3
    while q < p:
        if n % q == 0:
            return False
        q += 2
    return True


def _is_prime_slow(n: int) -> bool:
    """Trial-division primality; used for validating small arguments."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
