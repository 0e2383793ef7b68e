import copy

import pytest

from sumcollapse import (
    compute_strata,
    nfold_all_integers_check,
    nfold_collapse_check,
    rough_pair_cover_evidence,
    verify_absorption,
    verify_partition,
)
from sumcollapse.verdict import Status

from oracles import goldbach_pair, odd_composites_upto, sum_of_k_primes_bf


def test_first_layer_witnesses(table_small):
    st = compute_strata(2_000, table_small)
    assert st.layers[9] == 1 and st.witnesses[9] == (5, 7)
    assert st.layers[15] == 1 and st.witnesses[15] == (5, 13)
    assert st.max_layer == 1
    assert st.unassigned == ()


def test_minimal_table():
    st = compute_strata(9)
    assert st.layers == {9: 1}
    with pytest.raises(ValueError):
        compute_strata(8)


def test_layer_one_matches_pair_oracle(strata_1e5):
    # spot the full window: layer 1 iff a two-odd-prime split of 3 + c exists
    for c in odd_composites_upto(3_000):
        assert (strata_1e5.layers.get(c) == 1) == (goldbach_pair(3 + c) is not None)


def test_witnesses_use_smallest_prime(strata_1e5, table_1e5):
    for c in (9, 15, 21, 25, 10_001):
        p, q = strata_1e5.witnesses[c]
        assert p + q == c + 3
        for smaller in table_1e5.primes_in(3, p - 1):
            assert not table_1e5.is_prime(3 + c - smaller)


def test_determinism_across_limits(table_small, strata_1e5):
    small = compute_strata(2_000, table_small)
    for c, layer in small.layers.items():
        assert strata_1e5.layers[c] == layer
        assert strata_1e5.witnesses[c] == small.witnesses[c]


def test_threaded_matches_sequential(table_small):
    seq = compute_strata(2_000, table_small, threads=1)
    par = compute_strata(2_000, table_small, threads=4)
    assert seq.layers == par.layers and seq.witnesses == par.witnesses


def test_partition_audit(strata_1e5, table_1e5):
    rep = verify_partition(strata_1e5, table_1e5)
    assert rep.ok
    assert rep.assigned == rep.total_composites
    # frozen from the sieve: odd composites up to 10^4
    st4 = compute_strata(10_000)
    rep4 = verify_partition(st4)
    assert rep4.total_composites == 3771
    assert rep4.ok


def test_partition_audit_flags_corruption(table_small):
    st = compute_strata(2_000, table_small)
    bad = copy.deepcopy(st)
    bad.layers[11] = 1  # a prime smuggled in
    assert not verify_partition(bad, table_small).ok
    bad2 = copy.deepcopy(st)
    del bad2.layers[9], bad2.witnesses[9]
    assert not verify_partition(bad2, table_small).ok
    bad3 = copy.deepcopy(st)
    bad3.witnesses[9] = (3, 9)  # does not peel to an odd prime pair
    assert not verify_partition(bad3, table_small).ok


def test_census(strata_1e5):
    cen = strata_1e5.census()
    assert set(cen) == {1}
    assert cen[1]["min"] == 9
    assert cen[1]["count"] == len(odd_composites_upto(100_000))
    d = strata_1e5.census_dict()
    assert d["schema"] == 1 and d["max_layer"] == 1 and d["unassigned"] == []


def test_absorption(strata_1e5, table_1e5):
    rep = verify_absorption(strata_1e5, 4, (9, 3_000), table_1e5)
    assert rep.ok
    assert rep.vacuous == (3, 4)  # no layer-2 or layer-3 members exist
    assert rep.checked[2] == len(odd_composites_upto(3_000))
    # the k = 2 statement agrees with the brute-force pair search
    assert sum_of_k_primes_bf(3 + 9, 2)


def test_nfold_checks(table_1e5):
    for n in (2, 3):
        v = nfold_collapse_check(n, (3, 20_000), table_1e5)
        assert v.status is Status.HOLDS_ON_WINDOW
        assert v.certified_range == (3 * n, 20_000)
    v = nfold_all_integers_check(3, (2, 20_000), table_1e5)
    assert v.status is Status.HOLDS_ON_WINDOW
    assert v.certified_range == (6, 20_000)
    with pytest.raises(ValueError):
        nfold_all_integers_check(2, (2, 100), table_1e5)
    with pytest.raises(ValueError):
        nfold_collapse_check(4, (3, 11), table_1e5)


def test_three_fold_odd_sums_brute(table_1e5):
    # every odd in [9, 600] is a sum of three odd primes on-window
    v = nfold_collapse_check(3, (3, 600), table_1e5)
    assert v.ok
    for s in range(9, 601, 2):
        assert sum_of_k_primes_bf(s, 3), s


def test_rough_pair_cover(table_1e5):
    ev = rough_pair_cover_evidence(3, (3, 20_000), table_1e5)
    assert ev.clean  # two-prime cover of all even sums on-window
    ev5 = rough_pair_cover_evidence(5, (3, 10_000), table_1e5)
    assert ev5.violation_count == 0
    assert not ev5.shifted_violations
    # the cited small memberships
    assert goldbach_pair(50, min_prime=5) == (7, 43)
    assert goldbach_pair(10, min_prime=5) == (5, 5)
    with pytest.raises(ValueError):
        rough_pair_cover_evidence(2, (3, 100), table_1e5)
