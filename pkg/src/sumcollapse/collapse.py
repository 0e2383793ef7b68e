"""Relation deciders over the integers: equal iterated sumsets plus the
multiplicative factorization property, exact removal certificates for
cofinite odd sets, and the decomposition / partition enumerators.

A relation here pairs two set descriptions ``B`` and ``C`` and asks whether
``m``-fold sums of ``B`` equal ``n``-fold sums of ``C`` while every member
of ``B`` is a product of members of ``C`` (and, for the directed form,
``C`` is contained in ``B``).  Prime-backed sets only ever earn windowed
verdicts; cofinite odd removals admit exact ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intsets import (
    CofiniteOddSet,
    WindowSet,
    iterated_sumset,
    pair_sum_cover_decision,
    restrict,
    sumset_equal_window,
)
from .setexpr import FiniteSet, OddRange, Primes, SetExpr, as_set_expr
from .sieve import CompositeIndex, PrimeTable, _is_prime_slow
from .verdict import (
    RelationVerdict,
    Status,
    fails,
    holds,
    holds_on_window,
    hypothesis_failed,
    weakest,
)


@dataclass(frozen=True)
class Progression(SetExpr):
    """Arithmetic progression {base + i*step : i >= 0}, optionally minus a finite set."""

    base: int
    step: int
    excluded: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"progression step must be positive, got {self.step}")
        object.__setattr__(self, "excluded", frozenset(self.excluded))

    def contains(self, n, table=None):
        return (
            n >= self.base
            and (n - self.base) % self.step == 0
            and n not in self.excluded
        )

    def window_bits(self, lo, hi, table=None):
        from .intsets import bits_from_values

        start = max(self.base, self.base + ((lo - self.base + self.step - 1) // self.step) * self.step)
        vals = (v for v in range(start, hi + 1, self.step) if v not in self.excluded)
        return bits_from_values(vals, lo, hi)

    def subset_of_odd_from_3(self):
        return self.base >= 3 and self.base % 2 == 1 and self.step % 2 == 0

    def contains_all_odd_primes(self):
        return (
            self.base == 3
            and self.step == 2
            and not any(_is_prime_slow(e) for e in self.excluded)
        )

    def without(self, values) -> "Progression":
        return Progression(self.base, self.step, self.excluded | frozenset(values))

    def describe(self):
        tail = f" \\ {{{','.join(map(str, sorted(self.excluded)))}}}" if self.excluded else ""
        return f"{self.base}+{self.step}k{tail}"


# ---------------------------------------------------------------------------
# factorization property


def _window_values(expr: SetExpr, lo: int, hi: int, table) -> list[int]:
    return list(restrict(expr, lo, hi, table).members())


def _can_decompose(v: int, member, memo: dict[int, bool]) -> bool:
    """Can ``v`` be written as a product of (>= 2)-valued members, or is itself one?"""
    known = memo.get(v)
    if known is not None:
        return known
    memo[v] = False  # guards against revisiting while unresolved
    if member(v):
        memo[v] = True
        return True
    result = False
    d = 2
    while d * d <= v:
        if v % d == 0:
            for c in (d, v // d):
                if c != v and member(c) and _can_decompose(v // c, member, memo):
                    result = True
                    break
            if result:
                break
        d += 1
    memo[v] = result
    return result


def check_fp(b_spec, c_spec, window: tuple[int, int], table: PrimeTable | None = None) -> RelationVerdict:
    """Does every member of B on the window factor into members of C?

    Members equal to 1 only pass by belonging to C directly; values below 1
    are rejected because divisor search would be ill-founded there.
    """
    lo, hi = window
    if lo < 1:
        raise ValueError(f"factorization checks need a window within [1, ..], got lo={lo}")
    if lo > hi:
        raise ValueError(f"inverted window [{lo}, {hi}]")
    b_expr = as_set_expr(b_spec)
    c_expr = as_set_expr(c_spec)

    if c_expr.contains_all_odd_primes() and b_expr.subset_of_odd_from_3():
        return holds(
            "every member is odd and >= 3, so it is a product of odd primes, "
            "all of which the right-hand set contains"
        )

    memo: dict[int, bool] = {}
    member = lambda v: c_expr.contains(v, table)  # noqa: E731 - tight inner predicate
    for b in _window_values(b_expr, lo, hi, table):
        if not _can_decompose(b, member, memo):
            return fails(
                b,
                f"{b} admits no factorization into members of {c_expr.describe()}",
                certified_range=(lo, hi),
            )
    if isinstance(b_expr, FiniteSet) and all(lo <= v <= hi for v in b_expr.values):
        return holds(
            f"all members of the finite set {b_expr.describe()} factor into "
            f"members of {c_expr.describe()}"
        )
    return holds_on_window(
        (lo, hi), f"every member in [{lo}, {hi}] factors into members of {c_expr.describe()}"
    )


# ---------------------------------------------------------------------------
# relation checks


@dataclass(frozen=True)
class RelationParts:
    """Component verdicts of one relation check."""

    sumsets: RelationVerdict
    factorization: RelationVerdict
    containment: RelationVerdict | None

    def combined(self) -> RelationVerdict:
        parts = [self.sumsets, self.factorization]
        if self.containment is not None:
            parts.append(self.containment)
        status = weakest(*(p.status for p in parts))
        counterexample = None
        certified = self.sumsets.certified_range
        for p in parts:
            if p.status is Status.FAILS:
                counterexample = p.counterexample
                certified = p.certified_range
                break
        labels = ("sumsets", "factorization", "containment")
        note = "; ".join(
            f"{name}: {p.status.value}" for name, p in zip(labels, parts)
        )
        return RelationVerdict(
            status,
            note=note,
            counterexample=counterexample,
            certified_range=certified,
        )


def _compare_sumsets(
    b_ws: WindowSet, m_fold: int, c_ws: WindowSet, n_fold: int
) -> RelationVerdict:
    lo, hi = b_ws.lo, b_ws.hi
    common_lo = max(m_fold * lo, n_fold * lo)
    if common_lo > hi:
        return holds_on_window(
            None, "certified range for the folded sums is empty; nothing to compare"
        )
    if m_fold == n_fold:
        return sumset_equal_window(b_ws, c_ws, n_fold)
    sb = iterated_sumset(b_ws, m_fold)
    sc = iterated_sumset(c_ws, n_fold)
    b_bits = sb.bits >> (common_lo - sb.lo)
    c_bits = sc.bits >> (common_lo - sc.lo)
    diff = b_bits ^ c_bits
    if not diff:
        return holds_on_window(
            (common_lo, hi),
            f"{m_fold}-fold and {n_fold}-fold sumsets agree on [{common_lo}, {hi}]",
        )
    value = common_lo + (diff & -diff).bit_length() - 1
    side = "left" if b_bits >> (value - common_lo) & 1 else "right"
    return fails(
        value,
        f"sumsets differ at {value} (present only in the {side} operand)",
        certified_range=(common_lo, hi),
    )


def _containment(b_expr, c_expr, b_ws, c_ws) -> RelationVerdict:
    b_cof = b_expr.to_cofinite() if isinstance(b_expr, SetExpr) else None
    c_cof = c_expr.to_cofinite() if isinstance(c_expr, SetExpr) else None
    if b_cof is not None and c_cof is not None:
        if c_cof.is_subset_of(b_cof):
            return holds("containment decided exactly on cofinite forms")
        # fall through for a concrete on-window witness
    extra = c_ws.bits & ~b_ws.bits
    if extra:
        value = c_ws.lo + (extra & -extra).bit_length() - 1
        return fails(value, f"{value} belongs to the right-hand set but not the left")
    if b_cof is not None and c_cof is not None and not c_cof.is_subset_of(b_cof):
        return fails(
            -1, "containment fails beyond the window (cofinite comparison)"
        )
    return holds_on_window((b_ws.lo, b_ws.hi), "containment verified on the window")


def relation_parts(
    b_spec,
    c_spec,
    m_fold: int,
    n_fold: int,
    window: tuple[int, int],
    table: PrimeTable | None = None,
    require_subset: bool = False,
) -> RelationParts:
    if m_fold < 1 or n_fold < 1:
        raise ValueError("fold counts must be >= 1")
    lo, hi = window
    if lo < 1:
        raise ValueError(f"relation checks need a window within [1, ..], got lo={lo}")
    b_expr = as_set_expr(b_spec)
    c_expr = as_set_expr(c_spec)
    b_ws = restrict(b_expr, lo, hi, table)
    c_ws = restrict(c_expr, lo, hi, table)
    if not b_ws.bits or not c_ws.bits:
        raise ValueError("relation checks need non-empty sets on the window")
    sum_v = _compare_sumsets(b_ws, m_fold, c_ws, n_fold)
    fp_v = check_fp(b_expr, c_expr, window, table)
    sub_v = _containment(b_expr, c_expr, b_ws, c_ws) if require_subset else None
    return RelationParts(sum_v, fp_v, sub_v)


def check_relation(
    b_spec,
    c_spec,
    m_fold: int,
    n_fold: int,
    window: tuple[int, int],
    table: PrimeTable | None = None,
    require_subset: bool = False,
) -> RelationVerdict:
    """Windowed decision of the (m, n) sum-factor relation between two sets."""
    return relation_parts(
        b_spec, c_spec, m_fold, n_fold, window, table, require_subset
    ).combined()


# ---------------------------------------------------------------------------
# exact removal certificates


def _validate_composite_tuple(ks, table: PrimeTable) -> tuple[int, ...]:
    ks = tuple(ks)
    if not ks:
        raise ValueError("expected at least one odd composite")
    if any(ks[i] >= ks[i + 1] for i in range(len(ks) - 1)):
        raise ValueError("removal candidates must be strictly increasing")
    for c in ks:
        if c % 2 == 0 or c < 9 or table.is_prime(c):
            raise ValueError(f"{c} is not an odd composite number")
    return ks


def prime_surplus_hypothesis(ks, table: PrimeTable) -> bool:
    """True iff the i-th candidate has at least i + 2 primes below it."""
    ks = _validate_composite_tuple(ks, table)
    return all(table.prime_count(c) >= i + 2 for i, c in enumerate(ks, start=1))


def _removal_witnesses(ks, excluded: frozenset[int], table: PrimeTable):
    """For each removed value (largest first) a pair p + d = 3 + value avoiding
    the removed set, found by walking the odd primes upward."""
    out = []
    for c in sorted(ks, reverse=True):
        s = 3 + c
        for p in table.primes_in(3, s - 3):
            d = s - p
            if d >= 3 and d % 2 == 1 and d not in excluded:
                out.append((c, p, d))
                break
    return tuple(out)


def composite_removal_check(
    ks, table: PrimeTable, window: tuple[int, int] | None = None
) -> RelationVerdict:
    """Exact certificate that removing ``ks`` keeps all even pair sums reachable.

    Requires the prime-surplus hypothesis; without it the claim is not
    attempted and a hypothesis failure is reported instead.  The exact
    cofinite decision is cross-validated against the windowed sumset engine.
    """
    ks = _validate_composite_tuple(ks, table)
    for i, c in enumerate(ks, start=1):
        if table.prime_count(c) < i + 2:
            return hypothesis_failed(
                i,
                f"candidate #{i} = {c} has only {table.prime_count(c)} primes below "
                f"it, fewer than {i + 2}",
            )
    removal = CofiniteOddSet(3, frozenset(ks))
    exact = pair_sum_cover_decision(removal)
    if exact.status is not Status.HOLDS:
        return exact
    hi = max(2 * max(ks) + 6, 60) if window is None else window[1]
    cross = sumset_equal_window(
        restrict(OddRange(3), 3, hi), restrict(removal, 3, hi), 2
    )
    if cross.status is not Status.HOLDS_ON_WINDOW:
        raise RuntimeError(
            f"exact decision and windowed sumsets disagree for removal {sorted(ks)}"
        )
    witnesses = _removal_witnesses(ks, removal.excluded, table)
    return holds(
        exact.note + f"; cross-validated against bitset sumsets on [3, {hi}]; "
        "the removed values are composite, so factorization into odd primes is untouched",
        witnesses=witnesses,
    )


def gap_subsequence_check(
    bs, table: PrimeTable, window: tuple[int, int] | None = None
) -> RelationVerdict:
    """Exact removal certificate for odd composites spaced more than 2 apart.

    Replays the explicit witness 3 + b = 5 + (b - 2): the gap condition keeps
    b - 2 outside the removed set.
    """
    bs = _validate_composite_tuple(bs, table)
    for i in range(len(bs) - 1):
        if bs[i + 1] - bs[i] <= 2:
            raise ValueError(
                f"gap condition violated: {bs[i + 1]} - {bs[i]} <= 2"
            )
    removal = CofiniteOddSet(3, frozenset(bs))
    exact = pair_sum_cover_decision(removal)
    if exact.status is not Status.HOLDS:
        return exact
    witnesses = []
    for b in bs:
        partner = b - 2
        if partner in removal.excluded:  # cannot happen under the gap condition
            raise RuntimeError(f"gap witness for {b} unexpectedly excluded")
        witnesses.append((b, 5, partner))
    return holds(
        exact.note + "; every removed b also carries the explicit witness "
        "3 + b = 5 + (b - 2)",
        witnesses=tuple(witnesses),
    )


def progression_removal_check(
    base: int,
    step: int,
    removed,
    window: tuple[int, int],
    table: PrimeTable | None = None,
    verify_hypotheses: bool = True,
) -> RelationVerdict:
    """Windowed check that removing ``removed`` from the progression keeps pair
    sums intact, contingent on three hypotheses.

    Hypotheses: (1) every removed value factors inside the depleted
    progression, (2) base + max(removed) is a sum of two distinct smaller
    removed values, (3) removal of each all-but-one subset already works.
    With ``verify_hypotheses=False`` they are taken as given and only the
    conclusion is compared on the window.
    """
    removed = tuple(sorted(removed))
    if len(removed) < 2:
        raise ValueError("need at least two removed values")
    prog = Progression(base, step)
    for c in removed:
        if not prog.contains(c):
            raise ValueError(f"{c} is not in the progression {prog.describe()}")
    if removed[0] <= base:
        raise ValueError(f"removed values must exceed the progression base {base}")
    lo, hi = window
    if max(removed) > hi:
        raise ValueError("window must cover every removed value")

    depleted = prog.without(removed)
    if verify_hypotheses:
        memo: dict[int, bool] = {}
        member = lambda v: depleted.contains(v)  # noqa: E731
        for c in removed:
            if not _can_decompose(c, member, memo):
                return hypothesis_failed(
                    1, f"{c} has no factorization inside the depleted progression"
                )
        target = base + removed[-1]
        smaller = removed[:-1]
        pair = next(
            (
                (x, y)
                for i, x in enumerate(smaller)
                for y in smaller[i + 1 :]
                if x + y == target
            ),
            None,
        )
        if pair is None:
            return hypothesis_failed(
                2,
                f"{base} + {removed[-1]} = {target} is not a sum of two distinct "
                "smaller removed values",
            )
        for i, c in enumerate(removed):
            d_i = frozenset(removed) - {c}
            verdict = check_relation(
                prog, prog.without(d_i), 2, 2, window, table, require_subset=True
            )
            if not verdict.ok:
                return hypothesis_failed(
                    3, f"all-but-one removal keeping {c} fails: {verdict.note}"
                )

    conclusion = check_relation(
        prog, depleted, 2, 2, window, table, require_subset=True
    )
    if conclusion.ok:
        return holds_on_window(
            conclusion.certified_range or (2 * lo, hi),
            f"pair sums of the progression survive removing {list(removed)}; "
            + conclusion.note,
        )
    return conclusion


def prefix_removal_cascade(k: int, l: int, table: PrimeTable) -> RelationVerdict:
    """Check the leave-one-out premises and the full-prefix removal conclusion.

    The first ``k + l`` odd composites are removed either all at once
    (conclusion) or with one of the last ``l + 1`` kept (premises); all are
    cofinite removals, so every verdict is exact.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if l < 7:
        raise ValueError(f"l must be >= 7, got {l}")
    index = CompositeIndex(table)
    prefix = index.first(k + l)
    if 3 + prefix[-1] < 2 * prefix[k - 1]:
        raise ValueError(
            f"precondition violated: 3 + {prefix[-1]} < 2 * {prefix[k - 1]}"
        )
    results = []
    for i in range(l + 1):
        kept = prefix[k + i - 1]
        removal = frozenset(prefix) - {kept}
        verdict = pair_sum_cover_decision(CofiniteOddSet(3, removal))
        results.append({"premise": i, "kept": kept, "status": verdict.status.value})
        if verdict.status is Status.FAILS:
            return fails(
                verdict.counterexample,
                f"premise {i} (keeping {kept}) fails: {verdict.note}",
            )
    conclusion = pair_sum_cover_decision(CofiniteOddSet(3, frozenset(prefix)))
    results.append({"conclusion": True, "status": conclusion.status.value})
    status = weakest(conclusion.status, *(Status(r["status"]) for r in results[:-1]))
    return RelationVerdict(
        status,
        note=(
            f"all {l + 1} leave-one-out premises and the full removal of the "
            f"first {k + l} odd composites decided exactly"
        ),
        counterexample=conclusion.counterexample,
        witnesses=tuple(results),
    )


# ---------------------------------------------------------------------------
# decompositions, factor statistics, partitions


@dataclass(frozen=True)
class DecompositionRecord:
    """One ordered factorization of ``target`` into set members."""

    target: int
    factors: tuple[int, ...]

    def __post_init__(self):
        if len(self.factors) < 1:
            raise ValueError("a decomposition needs at least one factor")
        if math.prod(self.factors) != self.target:
            raise ValueError(f"factors {self.factors} do not multiply to {self.target}")


@dataclass(frozen=True)
class FactorStats:
    """Distinct-factor count, largest exponent and largest total degree."""

    factor_count: int | float
    exponent: int | float
    degree: int | float


@dataclass(frozen=True)
class PartitionRecord:
    """A multiset of distinct parts with multiplicities summing to ``target``."""

    target: int
    parts: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return sum(mult for _, mult in self.parts)

    def __post_init__(self):
        values = [b for b, _ in self.parts]
        if len(set(values)) != len(values):
            raise ValueError("partition parts must be distinct")
        if sum(b * m for b, m in self.parts) != self.target:
            raise ValueError("partition parts do not sum to the target")


def _ordered_factorizations(a: int, member, memo) -> list[tuple[int, ...]]:
    known = memo.get(a)
    if known is not None:
        return known
    out = [(a,)] if member(a) else []
    divisors = set()
    d = 2
    while d * d <= a:
        if a % d == 0:
            divisors.add(d)
            divisors.add(a // d)
        d += 1
    for c in sorted(divisors):
        if member(c):
            out.extend((c,) + rest for rest in _ordered_factorizations(a // c, member, memo))
    memo[a] = out
    return out


def _checked_target(a: int, b_expr: SetExpr, window: tuple[int, int], table) -> None:
    if a in (0, 1, -1):
        raise ValueError(f"target {a} has no meaningful factorizations")
    if a < 0:
        raise ValueError("negative targets are out of scope")
    lo, hi = window
    if not (lo <= a <= hi):
        raise ValueError(f"target {a} outside window [{lo}, {hi}]")
    if b_expr.contains(1, table):
        raise ValueError("enumeration requires all set members to be >= 2")


def decompositions(
    a: int, b_spec, window: tuple[int, int], table: PrimeTable | None = None
) -> list[DecompositionRecord]:
    """All ordered factorizations of ``a`` into members of the set, shortest first."""
    b_expr = as_set_expr(b_spec)
    _checked_target(a, b_expr, window, table)
    member = lambda v: b_expr.contains(v, table)  # noqa: E731
    tuples = _ordered_factorizations(a, member, {})
    tuples.sort(key=lambda t: (len(t), t))
    return [DecompositionRecord(a, t) for t in tuples]


def factor_stats(
    a: int, b_spec, window: tuple[int, int], table: PrimeTable | None = None
) -> FactorStats:
    """Aggregate factor statistics of ``a`` over all its ordered factorizations."""
    records = decompositions(a, b_spec, window, table)
    if not records:
        return FactorStats(0, 0, 0)
    factors = set()
    exponent = 0
    degree = 0
    for rec in records:
        factors.update(rec.factors)
        counts = {}
        for f in rec.factors:
            counts[f] = counts.get(f, 0) + 1
        exponent = max(exponent, max(counts.values()))
        degree = max(degree, len(rec.factors))
    return FactorStats(len(factors), exponent, degree)


def k_partitions(
    a: int, b_spec, k: int, window: tuple[int, int], table: PrimeTable | None = None
) -> list[PartitionRecord]:
    """All length-``k`` multiset partitions of ``a`` with distinct parts from the set."""
    if k < 1:
        raise ValueError(f"partition length must be >= 1, got {k}")
    lo, hi = window
    if a > hi:
        raise ValueError(f"target {a} outside window [{lo}, {hi}]")
    b_expr = as_set_expr(b_spec)
    vals = list(restrict(b_expr, max(lo, 1), min(a, hi), table).members())
    results: list[PartitionRecord] = []
    acc: list[tuple[int, int]] = []

    def go(idx: int, remaining_sum: int, remaining_count: int) -> None:
        if remaining_count == 0:
            if remaining_sum == 0:
                results.append(PartitionRecord(a, tuple(acc)))
            return
        for j in range(idx, len(vals)):
            b = vals[j]
            if b * remaining_count > remaining_sum:
                break
            max_mult = min(remaining_count, remaining_sum // b)
            for mult in range(1, max_mult + 1):
                acc.append((b, mult))
                go(j + 1, remaining_sum - mult * b, remaining_count - mult)
                acc.pop()

    go(0, a, k)
    results.sort(key=lambda r: r.parts)
    return results


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class PairSweepReport:
    """Outcome of the shifted-pair sweep over composite indices 3..k_max.

    ``pair_missing`` lists indices whose shifted value has no representation
    as a sum of two distinct smaller odd composites.  The even-membership
    sweep records k whose double is neither a sum of two odd composites nor
    3 plus a prime; ``even_distinct_exceptions`` is the stricter variant
    that also demands the two composites differ (it additionally flags 9,
    whose double 18 = 9 + 9 only repeats a part).
    """

    k_max: int
    pair_missing: tuple[int, ...]
    pair_witnesses: dict[int, tuple[int, int]]
    even_exceptions: tuple[int, ...]
    even_distinct_exceptions: tuple[int, ...]


def shifted_composite_pair_sweep(k_max: int, table: PrimeTable) -> PairSweepReport:
    """Sweep both pair-representation claims over the first ``k_max`` indices."""
    if k_max < 3:
        raise ValueError(f"k_max must be >= 3, got {k_max}")
    index = CompositeIndex(table)
    if index.count(table.limit) < k_max:
        raise ValueError(
            f"sieve limit {table.limit} holds fewer than {k_max} odd composites"
        )
    comps = index.first(k_max)
    is_prime = table.is_prime

    def is_odd_composite(v: int) -> bool:
        return v >= 9 and v % 2 == 1 and not is_prime(v)

    missing = []
    witnesses: dict[int, tuple[int, int]] = {}
    for k in range(3, k_max + 1):
        t = 3 + comps[k - 1]
        found = None
        for x in comps:
            if 2 * x >= t:
                break
            partner = t - x
            if is_odd_composite(partner):
                found = (x, partner)
                break
        if found is None:
            missing.append(k)
        else:
            witnesses[k] = found

    even_exc = []
    even_distinct_exc = []
    for k in range(3, k_max + 1):
        t = 2 * k
        shifted_prime = t - 3 >= 2 and is_prime(t - 3)
        any_pair = False
        distinct_pair = False
        for x in comps:
            if 2 * x > t:
                break
            partner = t - x
            if is_odd_composite(partner):
                any_pair = True
                if partner != x:
                    distinct_pair = True
                    break
        if not (any_pair or shifted_prime):
            even_exc.append(k)
        if not (distinct_pair or shifted_prime):
            even_distinct_exc.append(k)

    return PairSweepReport(
        k_max, tuple(missing), witnesses, tuple(even_exc), tuple(even_distinct_exc)
    )


# ---------------------------------------------------------------------------
# parameter scan for the pair-cover base case


@dataclass(frozen=True)
class CaseResult:
    label: str
    confirmed: bool
    witness: object
    note: str


@dataclass(frozen=True)
class UniquenessReport:
    """Confirms that only the odd-from-3 base paired with primes-from-3 survives."""

    cases: tuple[CaseResult, ...]
    window_verdict: RelationVerdict

    @property
    def all_confirmed(self) -> bool:
        return all(c.confirmed for c in self.cases)


def parameter_uniqueness_report(table: PrimeTable, hi: int) -> UniquenessReport:
    """Exhibit the obstruction for every wrong (base, prime-floor) choice and
    verify on-window that the right choice has none."""
    cases = []

    cases.append(
        CaseResult(
            "no-factorization-below-base",
            confirmed=True,
            witness=1,
            note="1 is a positive odd integer but no product of primes >= 3 equals it",
        )
    )

    two_fold_min_high = 2 * 5
    cases.append(
        CaseResult(
            "minimum-mismatch-higher-base",
            confirmed=two_fold_min_high > 6,
            witness=6,
            note="pair sums of odds >= 5 start at 10, yet 6 = 3 + 3 is a prime pair sum",
        )
    )

    from .sieve import is_rough

    cases.append(
        CaseResult(
            "rough-base-misses-small-factors",
            confirmed=not is_rough(15, 5),
            witness=15,
            note="15 = 3 * 5 is odd and >= 3 but has a factor below 5, so it "
            "escapes the semigroup generated by primes >= 5",
        )
    )

    cases.append(
        CaseResult(
            "semigroup-minimum-forces-equal-floors",
            confirmed=True,
            witness=(6, 10),
            note="two-fold sums of the semigroups floored at 3 and 5 start at 6 "
            "and 10 respectively, so different floors cannot share sumsets",
        )
    )

    eleven_pairs = [
        (p, 11 - p) for p in range(2, 6) if table.is_prime(p) and table.is_prime(11 - p)
    ]
    cases.append(
        CaseResult(
            "eleven-separates-integers-from-primes",
            confirmed=not eleven_pairs,
            witness=(4, 7),
            note="11 = 4 + 7 is a sum of two integers >= 2 but no two primes sum to 11",
        )
    )

    window_verdict = sumset_equal_window(
        restrict(OddRange(3), 3, hi), restrict(Primes(3), 3, hi, table), 2
    )
    return UniquenessReport(tuple(cases), window_verdict)


# ---------------------------------------------------------------------------
# removable infinite families, materialised up to a bound


def primorial_odd_products(limit: int) -> tuple[int, ...]:
    """Products 3*5, 3*5*7, ... of the initial odd primes, up to ``limit``."""
    out = []
    prod = 3
    p = 5
    while True:
        prod *= p
        if prod > limit:
            break
        out.append(prod)
        p += 2
        while not _is_prime_slow(p):
            p += 2
    return tuple(out)


def euclid_chain_composites(limit: int) -> tuple[int, ...]:
    """Composite terms (up to ``limit``) of the sequence w1=2, w2=3, w3=7,
    w_{k+1} = w1*...*wk + 1, skipping the first two terms."""
    terms = [2, 3]
    while True:
        nxt = math.prod(terms) + 1
        if nxt > limit:
            break
        terms.append(nxt)
    return tuple(t for t in terms[2:] if t % 2 == 1 and not _is_prime_slow(t))
