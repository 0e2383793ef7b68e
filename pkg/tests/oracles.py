"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive and self-contained: no imports from
the package under test, small-range only.
"""

import itertools


def simple_prime_set(limit: int) -> set[int]:
    """Plain byte-array sieve, independent of the package's packed one."""
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        p += 1
    return {i for i, f in enumerate(flags) if f}


def is_prime_bf(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_upto(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime_bf(k)]


def pi_bf(x: int) -> int:
    return sum(1 for k in range(2, x + 1) if is_prime_bf(k))


def odd_composites_upto(n: int) -> list[int]:
    return [k for k in range(9, n + 1, 2) if not is_prime_bf(k)]


def goldbach_pair(s: int, min_prime: int = 3) -> tuple[int, int] | None:
    """Smallest-first pair of primes >= min_prime summing to s, or None."""
    for p in range(min_prime, s // 2 + 1):
        if is_prime_bf(p) and is_prime_bf(s - p) and s - p >= min_prime:
            return (p, s - p)
    return None


def sum_of_k_primes_bf(s: int, k: int, min_prime: int = 3) -> bool:
    if k == 1:
        return s >= min_prime and is_prime_bf(s)
    for p in range(min_prime, s - min_prime * (k - 1) + 1):
        if is_prime_bf(p) and sum_of_k_primes_bf(s - p, k - 1, min_prime):
            return True
    return False


def nfold_sums_bf(values, n: int, lo: int, hi: int) -> list[int]:
    return sorted(
        {
            sum(c)
            for c in itertools.combinations_with_replacement(sorted(values), n)
            if lo <= sum(c) <= hi
        }
    )


def ordered_factorizations_bf(a: int, members) -> list[tuple[int, ...]]:
    """Every ordered tuple of members (all >= 2) multiplying to ``a``.

    Scans all divisors linearly; no memoisation, no sqrt pairing.
    """
    memberset = set(members) if not callable(members) else None
    contains = (lambda v: v in memberset) if memberset is not None else members
    out = []
    if contains(a):
        out.append((a,))
    for d in range(2, a):
        if a % d == 0 and contains(d):
            for rest in ordered_factorizations_bf(a // d, members):
                out.append((d,) + rest)
    return out


def k_partitions_bf(a: int, values, k: int) -> set[tuple[tuple[int, int], ...]]:
    """Distinct-part multiset partitions of ``a`` with total multiplicity ``k``."""
    out = set()
    for combo in itertools.combinations_with_replacement(sorted(values), k):
        if sum(combo) == a:
            parts = []
            for v in sorted(set(combo)):
                parts.append((v, combo.count(v)))
            out.add(tuple(parts))
    return out
