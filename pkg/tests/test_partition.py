from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CORE, N, P
from ratcat.errors import InvariantViolation
from ratcat.partition import (
    Partition,
    conjugate,
    first_column_hooks,
    first_row_hooks,
    from_first_column_hooks,
    h_np,
    hc,
    hook_length,
    hook_set,
    hook_table,
    hr,
    is_core,
    is_core_by_flush,
    is_simultaneous_core,
    max_hook,
    n_rows,
    p_columns,
    parse_partition,
    partitions_of,
    partitions_up_to,
    simultaneous_cores,
    skew_length,
    skew_length_armstrong,
)


def cells(lam):
    return {(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)}


def hook_oracle(lam, i, j):
    cs = cells(lam)
    arm = sum(1 for (a, b) in cs if a == i and b > j)
    leg = sum(1 for (a, b) in cs if b == j and a > i)
    return arm + leg + 1


partitions = st.lists(st.integers(1, 9), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


class TestBasics:
    def test_validation(self):
        with pytest.raises(ValueError, match="position 2"):
            Partition((1, 3))
        with pytest.raises(ValueError, match="part 2"):
            Partition((3, 0))

    def test_from_vector_drops_zeros(self):
        assert Partition.from_vector((11, 6, 6, 4, 3, 2, 0)) == (11, 6, 6, 4, 3, 2)

    def test_parse(self):
        assert parse_partition("(19, 13,7)") == (19, 13, 7)
        assert parse_partition("") == ()
        with pytest.raises(ValueError, match="entry 2"):
            parse_partition("3,x,1")

    def test_conjugate_example(self):
        # (11,6,6,4,3,2) has 32 cells; counting column lengths gives
        assert conjugate(Partition((11, 6, 6, 4, 3, 2))) == (6, 6, 5, 4, 3, 3, 1, 1, 1, 1, 1)

    @given(partitions)
    def test_conjugate_matches_transposed_cells(self, lam):
        mu = conjugate(lam)
        assert cells(mu) == {(j, i) for i, j in cells(lam)}
        assert conjugate(mu) == lam

    def test_counts(self):
        assert [sum(1 for _ in partitions_of(k)) for k in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
        assert len(partitions_up_to(5)) == 1 + 1 + 2 + 3 + 5 + 7


class TestHooks:
    def test_running_core_corners(self):
        assert hook_length(CORE, 1, 1) == 31
        assert hook_length(CORE, 1, 7) == 15
        assert max_hook(CORE) == 31
        with pytest.raises(ValueError):
            hook_length(CORE, 1, 20)

    @given(partitions)
    def test_table_matches_oracle(self, lam):
        table = hook_table(lam)
        for i, j in cells(lam):
            assert table[i - 1][j - 1] == hook_oracle(lam, i, j)

    def test_row_and_column_sets(self):
        assert hc(CORE, 12) == {12, 5}
        assert hr(CORE, 12) == {12, 10, 5, 3, 1}
        assert hr(CORE, 11) == frozenset()

    def test_first_column_hooks_invert(self):
        assert from_first_column_hooks(first_column_hooks(CORE)) == CORE
        assert first_row_hooks(CORE) == first_column_hooks(conjugate(CORE))
        with pytest.raises(ValueError):
            from_first_column_hooks([3, 3])
        with pytest.raises(ValueError):
            from_first_column_hooks([0, 2])

    @given(partitions)
    def test_from_first_column_roundtrip(self, lam):
        assert from_first_column_hooks(first_column_hooks(lam)) == lam


class TestCores:
    def test_running_core(self):
        assert is_simultaneous_core(CORE, N, P)
        assert not is_core(CORE, 5)

    @given(partitions, st.integers(1, 7))
    def test_flush_characterisation(self, lam, n):
        assert is_core(lam, n) == is_core_by_flush(lam, n) == (n not in hook_set(lam))

    def test_rows_and_columns(self):
        assert n_rows(CORE, N) == (31, 15, 13, 12, 4)
        assert p_columns(CORE, N) == (31, 29, 20, 12, 11, 9)
        with pytest.raises(ValueError, match="5-core"):
            n_rows(CORE, 5)

    def test_skew_length(self):
        assert skew_length_armstrong(CORE, N, P) == 31
        assert len(h_np(CORE, N, P)) == 31
        assert skew_length(CORE, N, P) == 31
        assert h_np(CORE, N, P) == h_np(CORE, P, N)

    def test_skew_length_detects_disagreement(self, monkeypatch):
        import ratcat.partition as mod
        monkeypatch.setattr(mod, "h_np", lambda k, n, p: (1,))
        with pytest.raises(InvariantViolation):
            mod.skew_length(CORE, N, P)

    @pytest.mark.parametrize("n,p", [(2, 3), (3, 4), (3, 5), (4, 5), (2, 9)])
    def test_brute_force_core_count(self, n, p):
        from math import comb
        # every n,p-core has size at most (n^2-1)(p^2-1)/24
        bound = (n * n - 1) * (p * p - 1) // 24
        assert len(simultaneous_cores(n, p, bound)) == comb(n + p, n) // (n + p)

    @given(st.sampled_from([(2, 3), (3, 4), (3, 5), (4, 5), (2, 7), (3, 7)]), st.data())
    @settings(max_examples=40)
    def test_symmetries(self, pair, data):
        from ratcat.dyck import simultaneous_cores as cores
        n, p = pair
        kappa = data.draw(st.sampled_from(cores(n, p)))
        assert skew_length(kappa, n, p) == skew_length(kappa, p, n) == skew_length(conjugate(kappa), n, p)
        assert h_np(kappa, n, p) == h_np(kappa, p, n)


def test_noncoprime_h_sets_agree():
    for n, p in product(range(2, 5), repeat=2):
        for kappa in simultaneous_cores(n, p, 14):
            assert h_np(kappa, n, p) == h_np(kappa, p, n)
