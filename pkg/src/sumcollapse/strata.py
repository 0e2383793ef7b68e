"""Layered classification of odd composites by prime-shift reachability.

Layer 1 holds the odd composites c whose shift 3 + c is a sum of two odd
primes; layer k > 1 holds those whose shift peels one odd prime onto a
layer-(k-1) composite.  Within a window the classification is
self-contained: deciding c only ever consults primes and composites below
c + 3, so recomputing with a larger limit never relabels anything.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .intsets import restrict, sumset_equal_window
from .setexpr import IntRange, OddRange, Primes, RoughOdd
from .sieve import PrimeTable
from .verdict import RelationVerdict, Status, holds_on_window


@dataclass
class StrataTable:
    """Layer assignment for every odd composite up to ``limit``."""

    limit: int
    layers: dict[int, int]
    witnesses: dict[int, tuple[int, int]]
    unassigned: tuple[int, ...]
    passes: int

    @property
    def max_layer(self) -> int:
        return max(self.layers.values(), default=0)

    def layer_members(self, k: int) -> list[int]:
        return sorted(c for c, lay in self.layers.items() if lay == k)

    def census(self) -> dict[int, dict[str, int]]:
        out: dict[int, dict[str, int]] = {}
        for c, lay in self.layers.items():
            entry = out.setdefault(lay, {"count": 0, "min": c, "max": c})
            entry["count"] += 1
            entry["min"] = min(entry["min"], c)
            entry["max"] = max(entry["max"], c)
        return dict(sorted(out.items()))

    def census_dict(self) -> dict:
        return {
            "schema": 1,
            "limit": self.limit,
            "layers": {str(k): v for k, v in self.census().items()},
            "max_layer": self.max_layer,
            "unassigned": list(self.unassigned),
            "passes": self.passes,
        }

    def write_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["c", "layer", "witness_prime", "witness_partner"])
            for c in sorted(self.layers):
                p, q = self.witnesses[c]
                writer.writerow([c, self.layers[c], p, q])
            for c in self.unassigned:
                writer.writerow([c, "", "", ""])


def _classify_layer1(chunk, table: PrimeTable, primes: list[int]):
    """First odd-prime split of 3 + c, probing p in increasing order."""
    is_prime = table.is_prime
    bits = table._bits
    found = {}
    for c in chunk:
        s = 3 + c
        for p in primes:
            if p > s - 3:
                break
            q = s - p
            i = q >> 1
            if bits[i >> 3] >> (i & 7) & 1:
                found[c] = (p, q)
                break
    return found


def compute_strata(
    limit: int, table: PrimeTable | None = None, threads: int = 1
) -> StrataTable:
    """Assign every odd composite <= limit to its layer.

    Passes repeat until nothing new is assigned; whatever remains is surfaced
    as unassigned rather than raising, since within a self-contained window
    an unassigned composite indicates an implementation bug worth inspecting.
    """
    if limit < 9:
        raise ValueError(f"limit must be >= 9, got {limit}")
    if table is None:
        table = PrimeTable(limit)
    elif table.limit < limit:
        raise ValueError(f"sieve limit {table.limit} below requested {limit}")

    comps = list(table.odd_composites_in(9, limit))
    primes = list(table.primes_in(3, limit))

    layers: dict[int, int] = {}
    witnesses: dict[int, tuple[int, int]] = {}

    if threads > 1 and len(comps) > 1024:
        n_chunks = min(threads * 4, 64)
        size = (len(comps) + n_chunks - 1) // n_chunks
        chunks = [comps[i : i + size] for i in range(0, len(comps), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for found in pool.map(
                lambda ch: _classify_layer1(ch, table, primes), chunks
            ):
                for c, wit in found.items():
                    layers[c] = 1
                    witnesses[c] = wit
    else:
        for c, wit in _classify_layer1(comps, table, primes).items():
            layers[c] = 1
            witnesses[c] = wit

    pending = [c for c in comps if c not in layers]
    passes = 1
    current = 2
    while pending:
        newly: list[tuple[int, tuple[int, int]]] = []
        for c in pending:
            s = 3 + c
            for p in primes:
                partner = s - p
                if partner < 9:
                    break
                if layers.get(partner) == current - 1:
                    newly.append((c, (p, partner)))
                    break
        if not newly:
            break
        for c, wit in newly:
            layers[c] = current
            witnesses[c] = wit
        assigned = {c for c, _ in newly}
        pending = [c for c in pending if c not in assigned]
        passes += 1
        current += 1

    return StrataTable(limit, layers, witnesses, tuple(pending), passes)


@dataclass(frozen=True)
class PartitionReport:
    """Coverage/disjointness audit of a strata table."""

    limit: int
    total_composites: int
    assigned: int
    anomalies: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.anomalies


def verify_partition(st: StrataTable, table: PrimeTable | None = None) -> PartitionReport:
    """Re-derive the composite list and audit the table against it."""
    if table is None:
        table = PrimeTable(st.limit)
    expected = set(table.odd_composites_in(9, st.limit))
    anomalies: list[str] = []
    seen = set(st.layers) | set(st.unassigned)
    for c in sorted(expected - seen):
        anomalies.append(f"odd composite {c} missing from the table")
    for c in sorted(seen - expected):
        anomalies.append(f"table entry {c} is not an odd composite <= {st.limit}")
    overlap = set(st.layers) & set(st.unassigned)
    for c in sorted(overlap):
        anomalies.append(f"{c} is both assigned and unassigned")
    for c in st.unassigned:
        anomalies.append(f"{c} was never assigned to a layer")
    for c, lay in st.layers.items():
        p, q = st.witnesses.get(c, (0, 0))
        if p + q != c + 3:
            anomalies.append(f"witness for {c} does not sum to {c + 3}")
        elif lay == 1:
            if not (table.is_prime(p) and table.is_prime(q) and p % 2 and q % 2):
                anomalies.append(f"layer-1 witness for {c} is not an odd prime pair")
        else:
            if not table.is_prime(p) or st.layers.get(q) != lay - 1:
                anomalies.append(f"layer-{lay} witness for {c} does not peel correctly")
    return PartitionReport(st.limit, len(expected), len(st.layers), tuple(anomalies))


@dataclass(frozen=True)
class AbsorptionReport:
    """Witnessed check that shifted layer members are k-fold prime sums."""

    k_range: tuple[int, int]
    checked: dict[int, int]
    vacuous: tuple[int, ...]
    failures: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _sum_of_k_odd_primes(s: int, k: int, table: PrimeTable) -> bool:
    if k == 1:
        return s >= 3 and s % 2 == 1 and table.is_prime(s)
    for p in table.primes_in(3, s - 3 * (k - 1)):
        if _sum_of_k_odd_primes(s - p, k - 1, table):
            return True
    return False


def verify_absorption(
    st: StrataTable,
    k_max: int,
    window: tuple[int, int],
    table: PrimeTable | None = None,
) -> AbsorptionReport:
    """For k in [2, k_max], check 3(k-1) + c is a k-fold odd-prime sum for every
    layer-(k-1) member c in the window; empty layers pass vacuously."""
    if table is None:
        table = PrimeTable(st.limit)
    lo, hi = window
    checked: dict[int, int] = {}
    vacuous: list[int] = []
    failures: list[tuple[int, int]] = []
    for k in range(2, k_max + 1):
        members = [c for c in st.layer_members(k - 1) if lo <= c <= hi]
        if not members:
            vacuous.append(k)
            continue
        checked[k] = len(members)
        for c in members:
            if not _sum_of_k_odd_primes(3 * (k - 1) + c, k, table):
                failures.append((k, c))
    return AbsorptionReport((2, k_max), checked, tuple(vacuous), tuple(failures))


def nfold_collapse_check(
    n: int, window: tuple[int, int], table: PrimeTable
) -> RelationVerdict:
    """Windowed check that n-fold sums of odd integers >= 3 equal n-fold sums
    of odd primes; certified on [3n, hi] only."""
    if n < 2:
        raise ValueError(f"fold count must be >= 2, got {n}")
    lo, hi = window
    if 3 * n > hi:
        raise ValueError(f"window [{lo}, {hi}] too small for {n}-fold sums of odds >= 3")
    verdict = sumset_equal_window(
        restrict(OddRange(3), lo, hi), restrict(Primes(3), lo, hi, table), n
    )
    if verdict.status is not Status.HOLDS_ON_WINDOW:
        return verdict
    return holds_on_window(
        verdict.certified_range,
        verdict.note
        + "; containment and factorization are exact (odd primes generate the odd "
        "integers >= 3); nothing is claimed past the window",
    )


def nfold_all_integers_check(
    n: int, window: tuple[int, int], table: PrimeTable
) -> RelationVerdict:
    """Same comparison for all integers >= 2 against all primes; needs n >= 3."""
    if n < 3:
        raise ValueError(
            "the all-integers variant requires n >= 3 (11 = 4 + 7 breaks the pair case)"
        )
    lo, hi = window
    if 2 * n > hi:
        raise ValueError(f"window [{lo}, {hi}] too small for {n}-fold sums of ints >= 2")
    verdict = sumset_equal_window(
        restrict(IntRange(2), 2, hi), restrict(Primes(2), 2, hi, table), n
    )
    if verdict.status is not Status.HOLDS_ON_WINDOW:
        return verdict
    return holds_on_window(
        verdict.certified_range,
        verdict.note + "; primes generate the integers >= 2, so factorization is exact",
    )


@dataclass(frozen=True)
class EvidenceReport:
    """Windowed evidence (never a certificate) for the rough-number pair cover."""

    min_prime: int
    window: tuple[int, int]
    certified_range: tuple[int, int]
    violations: tuple[int, ...]
    violation_count: int
    shifted_min_prime: int
    shifted_violations: tuple[int, ...]

    @property
    def clean(self) -> bool:
        return self.violation_count == 0 and not self.shifted_violations


def rough_pair_cover_evidence(
    p: int,
    window: tuple[int, int],
    table: PrimeTable,
    shifted_min_prime: int = 7,
    max_listed: int = 50,
) -> EvidenceReport:
    """List every on-window pair sum of p-rough numbers that is not a pair sum
    of primes >= p, plus violations of the shifted-prime inclusion
    3 + (primes >= shifted_min_prime) within pair sums of primes >= 5."""
    if p == 2:
        raise ValueError("p = 2 is covered by the all-integers witness 11 = 4 + 7")
    lo, hi = window
    rough = restrict(RoughOdd(p), lo, hi, table)
    primes = restrict(Primes(p), lo, hi, table)
    from .intsets import iterated_sumset

    s2 = iterated_sumset(rough, 2)
    p2 = iterated_sumset(primes, 2)
    bad = s2.bits & ~p2.bits
    count = bad.bit_count()
    listed = []
    t = bad
    while t and len(listed) < max_listed:
        low = t & -t
        listed.append(s2.lo + low.bit_length() - 1)
        t ^= low

    five = restrict(Primes(5), lo, hi, table)
    pair5 = iterated_sumset(five, 2)
    shifted_bad = []
    for q in table.primes_in(shifted_min_prime, hi - 3):
        s = 3 + q
        if s < pair5.lo or not (pair5.bits >> (s - pair5.lo) & 1):
            shifted_bad.append(q)
    return EvidenceReport(
        p,
        window,
        (2 * lo, hi),
        tuple(listed),
        count,
        shifted_min_prime,
        tuple(shifted_bad),
    )
