"""Exhaustive relation analysis in the residue rings Z/mZ.

Everything here is finite and decided completely: sumsets by mask rotation,
the factorization property by multiplicative-closure membership, and the
reduction / expansion families by subset or superset scans.  Size guards
fail fast instead of sampling, since exhaustive semantics is the point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_MODULUS = 30
MAX_SUBSET_SCAN = 1 << 20


@dataclass(frozen=True)
class ZmSubset:
    """Subset of Z/mZ as an m-bit membership mask."""

    modulus: int
    mask: int

    def __post_init__(self):
        if not (2 <= self.modulus <= MAX_MODULUS):
            raise ValueError(f"modulus must be in [2, {MAX_MODULUS}], got {self.modulus}")
        if not (0 <= self.mask < (1 << self.modulus)):
            raise ValueError(f"mask {self.mask:#x} out of range for modulus {self.modulus}")

    @classmethod
    def from_elements(cls, modulus: int, elements) -> "ZmSubset":
        mask = 0
        for e in elements:
            mask |= 1 << (e % modulus)
        return cls(modulus, mask)

    def elements(self) -> tuple[int, ...]:
        return tuple(r for r in range(self.modulus) if self.mask >> r & 1)

    def __contains__(self, r: int) -> bool:
        return bool(self.mask >> (r % self.modulus) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def is_subset_of(self, other: "ZmSubset") -> bool:
        self._check_same(other)
        return not (self.mask & ~other.mask)

    def without(self, r: int) -> "ZmSubset":
        return ZmSubset(self.modulus, self.mask & ~(1 << (r % self.modulus)))

    def _check_same(self, other: "ZmSubset") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def describe(self) -> str:
        return "{" + ",".join(map(str, self.elements())) + "} mod " + str(self.modulus)


def _require_nonempty(s: ZmSubset) -> None:
    if not s.mask:
        raise ValueError("operation requires a non-empty subset")


def zm_sumset(s: ZmSubset, n: int) -> ZmSubset:
    """Exact n-fold sumset modulo m by repeated mask rotation."""
    _require_nonempty(s)
    if n < 1:
        raise ValueError(f"fold count must be >= 1, got {n}")
    m = s.modulus
    full = (1 << m) - 1
    acc = s.mask
    for _ in range(n - 1):
        nxt = 0
        for r in s.elements():
            nxt |= ((acc << r) | (acc >> (m - r))) & full if r else acc
        acc = nxt
    return ZmSubset(m, acc)


def zm_closure(s: ZmSubset) -> ZmSubset:
    """Least multiplicatively closed superset (products of one or more members)."""
    _require_nonempty(s)
    m = s.modulus
    mask = s.mask
    while True:
        grown = mask
        for a in range(m):
            if not (mask >> a & 1):
                continue
            for b in range(a, m):
                if mask >> b & 1:
                    grown |= 1 << (a * b % m)
        if grown == mask:
            return ZmSubset(m, mask)
        mask = grown


def zm_product_witness(target: int, gens: ZmSubset) -> tuple[int, ...] | None:
    """Shortest factor sequence from ``gens`` multiplying to ``target`` (BFS)."""
    _require_nonempty(gens)
    m = gens.modulus
    target %= m
    parents: dict[int, tuple[int, int] | None] = {}
    frontier = []
    for g in gens.elements():
        if g not in parents:
            parents[g] = None
            frontier.append(g)
    while frontier and target not in parents:
        nxt = []
        for v in frontier:
            for g in gens.elements():
                w = v * g % m
                if w not in parents:
                    parents[w] = (v, g)
                    nxt.append(w)
        frontier = nxt
    if target not in parents:
        return None
    factors = []
    v = target
    while parents[v] is not None:
        v, g = parents[v]
        factors.append(g)
    factors.append(v)
    return tuple(reversed(factors))


@dataclass(frozen=True)
class RelationTableEntry:
    """All three components of one (m_fold, n_fold) relation question."""

    b: ZmSubset
    c: ZmSubset
    m_fold: int
    n_fold: int
    sumset_equal: bool
    fp: bool
    subset: bool

    @property
    def symmetric(self) -> bool:
        """Equal sumsets plus factorization (containment not required)."""
        return self.sumset_equal and self.fp

    @property
    def directed(self) -> bool:
        return self.symmetric and self.subset


def zm_relation(b: ZmSubset, c: ZmSubset, m_fold: int, n_fold: int) -> RelationTableEntry:
    b._check_same(c)
    _require_nonempty(b)
    _require_nonempty(c)
    sumset_equal = zm_sumset(b, m_fold).mask == zm_sumset(c, n_fold).mask
    fp = b.is_subset_of(zm_closure(c))
    subset = c.is_subset_of(b)
    return RelationTableEntry(b, c, m_fold, n_fold, sumset_equal, fp, subset)


def _submasks(mask: int):
    """All non-empty submasks of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class RdFamily:
    """Subsets of B reachable by the directed n-fold relation."""

    b: ZmSubset
    n: int
    members: tuple[ZmSubset, ...]
    minimal: tuple[ZmSubset, ...]

    @property
    def reducible(self) -> bool:
        return len(self.members) > 1


def zm_reduction_family(b: ZmSubset, n: int) -> RdFamily:
    _require_nonempty(b)
    if 1 << len(b) > MAX_SUBSET_SCAN:
        raise ValueError(
            f"subset scan over 2^{len(b)} masks exceeds the 2^20 guard"
        )
    m = b.modulus
    nb = zm_sumset(b, n).mask
    members = []
    for sub in _submasks(b.mask):
        c = ZmSubset(m, sub)
        if zm_sumset(c, n).mask == nb and b.is_subset_of(zm_closure(c)):
            members.append(c)
    members.sort(key=lambda s: (len(s), s.mask))
    minimal = tuple(
        c
        for c in members
        if not any(d.mask != c.mask and d.is_subset_of(c) for d in members)
    )
    return RdFamily(b, n, tuple(members), minimal)


@dataclass(frozen=True)
class EpFamily:
    """Supersets of B that relate onto it by the directed n-fold relation."""

    b: ZmSubset
    n: int
    members: tuple[ZmSubset, ...]
    maximal: tuple[ZmSubset, ...]
    maximal_matches_unexpanded: bool | None

    @property
    def expandable(self) -> bool:
        return len(self.members) > 1


def zm_expansion_family(b: ZmSubset, n: int, verify_maximality: bool | None = None) -> EpFamily:
    _require_nonempty(b)
    m = b.modulus
    free = ((1 << m) - 1) & ~b.mask
    if 1 << free.bit_count() > MAX_SUBSET_SCAN:
        raise ValueError(
            f"superset scan over 2^{free.bit_count()} masks exceeds the 2^20 guard"
        )
    closure_b = zm_closure(b)
    nb = zm_sumset(b, n).mask
    members = []
    sub = free
    while True:
        d = ZmSubset(m, b.mask | sub)
        if d.is_subset_of(closure_b) and zm_sumset(d, n).mask == nb:
            members.append(d)
        if sub == 0:
            break
        sub = (sub - 1) & free
    members.sort(key=lambda s: (len(s), s.mask))
    maximal = tuple(
        d
        for d in members
        if not any(e.mask != d.mask and d.is_subset_of(e) for e in members)
    )
    if verify_maximality is None:
        verify_maximality = m <= 12
    matches: bool | None = None
    if verify_maximality:
        matches = True
        maximal_masks = {d.mask for d in maximal}
        for d in members:
            family = zm_expansion_family(d, n, verify_maximality=False)
            unexpanded = len(family.members) == 1
            if unexpanded != (d.mask in maximal_masks):
                matches = False
                break
    return EpFamily(b, n, tuple(members), maximal, matches)


def zm_reduction_chain(b: ZmSubset, n: int) -> list[ZmSubset]:
    """Greedy strictly descending chain of single-element removals ending at an
    irreducible subset related to from the start."""
    _require_nonempty(b)
    chain = [b]
    current = b
    while True:
        step = None
        for r in current.elements():
            smaller = current.without(r)
            if not smaller.mask:
                continue
            if zm_relation(current, smaller, n, n).directed:
                step = smaller
                break
        if step is None:
            return chain
        chain.append(step)
        current = step


def zm_optimal_subsets(m: int, n: int) -> tuple[ZmSubset, ...]:
    """All subsets whose closure relates onto them while they stay irreducible."""
    if m > 16:
        raise ValueError(f"full subset scan requires modulus <= 16, got {m}")
    out = []
    for mask in range(1, 1 << m):
        b = ZmSubset(m, mask)
        closure = zm_closure(b)
        if zm_sumset(closure, n).mask != zm_sumset(b, n).mask:
            continue
        if zm_reduction_family(b, n).reducible:
            continue
        out.append(b)
    return tuple(out)


@dataclass(frozen=True)
class OptimalWeights:
    """Fold counts (within the scanned range) admitting an optimal subset."""

    modulus: int
    n_max: int
    n_values: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.n_values)


def optimal_weight_set(m: int, n_max: int) -> OptimalWeights:
    """Scans n in [2, n_max] only; the unbounded analogue is not computable here."""
    values = tuple(n for n in range(2, n_max + 1) if zm_optimal_subsets(m, n))
    return OptimalWeights(m, n_max, values)


@dataclass(frozen=True)
class UnitGroupReport:
    """Single-removal behaviour of the unit group under the pair relation."""

    modulus: int
    units: ZmSubset
    removable: dict[int, bool]
    all_or_nothing: bool
    small_group_irreducible: bool | None


def zm_unit_group_check(m: int) -> UnitGroupReport:
    units = ZmSubset.from_elements(m, (a for a in range(1, m) if math.gcd(a, m) == 1))
    removable: dict[int, bool] = {}
    for b in units.elements():
        remainder = units.without(b)
        if not remainder.mask:
            removable[b] = False
            continue
        removable[b] = zm_relation(units, remainder, 2, 2).directed
    values = set(removable.values())
    small = None
    if len(units) <= 2:
        small = not any(removable.values())
    return UnitGroupReport(m, units, removable, len(values) <= 1, small)


@dataclass(frozen=True)
class QuotientReport:
    """Image of a directed relation under reduction modulo a divisor."""

    modulus: int
    divisor: int
    source: RelationTableEntry
    image: RelationTableEntry

    @property
    def preserved(self) -> bool:
        return self.image.directed


def zm_quotient_check(
    m: int, d: int, b: ZmSubset, c: ZmSubset, n: int
) -> QuotientReport:
    if d < 2 or m % d != 0:
        raise ValueError(f"{d} does not divide the modulus {m}")
    if b.modulus != m or c.modulus != m:
        raise ValueError("subsets must live in the stated ring")
    source = zm_relation(b, c, n, n)
    if not source.directed:
        raise ValueError("the directed relation must hold in the source ring first")
    image_b = ZmSubset.from_elements(d, (r % d for r in b.elements()))
    image_c = ZmSubset.from_elements(d, (r % d for r in c.elements()))
    image = zm_relation(image_b, image_c, n, n)
    return QuotientReport(m, d, source, image)


def relation_table_rows(m: int, n_max: int):
    """Every ordered pair of non-empty subsets crossed with fold counts in
    [1, n_max]^2; rows come out in canonical (B, C, m_fold, n_fold) order."""
    if m > 10:
        raise ValueError(f"exhaustive table dump requires modulus <= 10, got {m}")
    full = 1 << m
    sumsets: dict[tuple[int, int], int] = {}
    closures: dict[int, int] = {}
    for mask in range(1, full):
        s = ZmSubset(m, mask)
        closures[mask] = zm_closure(s).mask
        for n in range(1, n_max + 1):
            sumsets[mask, n] = zm_sumset(s, n).mask
    for b_mask in range(1, full):
        for c_mask in range(1, full):
            fp = not (b_mask & ~closures[c_mask])
            subset = not (c_mask & ~b_mask)
            for m_fold in range(1, n_max + 1):
                for n_fold in range(1, n_max + 1):
                    yield RelationTableEntry(
                        ZmSubset(m, b_mask),
                        ZmSubset(m, c_mask),
                        m_fold,
                        n_fold,
                        sumsets[b_mask, m_fold] == sumsets[c_mask, n_fold],
                        fp,
                        subset,
                    )
