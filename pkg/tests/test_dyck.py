from itertools import combinations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORE, H_SET, NORTH_LABELS, N, P, PATH, SHI_ROWS
from ratcat import dyck as dk
from ratcat.affine import shi_tableau
from ratcat.partition import conjugate, first_column_hooks, is_simultaneous_core
from ratcat.tableau import StaircaseTableau

COPRIME = [(n, p) for n in range(1, 6) for p in range(1, 9) if gcd(n, p) == 1]


def brute_paths(n, p):
    """Every arrangement of n N-steps among n+p positions that stays weakly above the diagonal."""
    out = set()
    for pos in combinations(range(n + p), n):
        word = ["E"] * (n + p)
        for k in pos:
            word[k] = "N"
        i = j = 0
        ok = True
        for c in word:
            i, j = (i, j + 1) if c == "N" else (i + 1, j)
            ok &= j * p - i * n >= 0
        if ok:
            out.add("".join(word))
    return out


@st.composite
def paths(draw):
    n, p = draw(st.sampled_from(COPRIME))
    return draw(st.sampled_from(sorted(brute_paths(n, p)))), n, p


class TestPathBasics:
    def test_validation(self):
        with pytest.raises(ValueError, match="gcd"):
            dk.RationalDyckPath(2, 4, "NNEEEE")
        with pytest.raises(ValueError, match="step 1"):
            dk.RationalDyckPath(2, 3, "ENNEE")
        with pytest.raises(ValueError, match="only N and E"):
            dk.RationalDyckPath(2, 3, "NNEEX")
        with pytest.raises(ValueError, match="needs"):
            dk.RationalDyckPath(2, 3, "NNEE")

    def test_json_round_trip(self, path):
        assert dk.RationalDyckPath.from_json(path.to_json()) == path
        assert str(path) == PATH

    @pytest.mark.parametrize("n,p", COPRIME)
    def test_enumeration_matches_brute_force(self, n, p):
        words = [x.word for x in dk.enumerate_paths(n, p)]
        assert len(words) == len(set(words))
        assert set(words) == brute_paths(n, p)
        assert len(words) == dk.rational_catalan(n, p)

    def test_extremes(self):
        assert dk.area(dk.highest_path(3, 5)) == (3 - 1) * (5 - 1) // 2
        assert dk.area(dk.lowest_path(3, 5)) == 0


class TestRunningExample:
    def test_labels_and_hooks(self, path):
        assert dk.north_labels(path) == NORTH_LABELS
        assert dk.h_set(path) == H_SET
        assert dk.anderson_phi(path) == CORE
        assert first_column_hooks(CORE) == H_SET

    def test_anderson_map(self, omega, path):
        assert dk.anderson_map(omega, P) == path
        assert dk.anderson_map_inv(path) == omega

    def test_codinv_equals_shi(self, omega, path):
        d = dk.codinv_tableau(path)
        assert d == StaircaseTableau(N, SHI_ROWS) == shi_tableau(omega, P)

    def test_complements(self, path):
        assert dk.complement(path) == (11, 6, 6, 4, 3, 2, 0)
        assert dk.complement(dk.zeta(path)) == (13, 6, 5, 5, 2, 0, 0)
        assert dk.complement(dk.eta(path)) == (10, 10, 5, 2, 2, 2, 0)

    def test_rank_complement_is_conjugation(self, path):
        assert dk.anderson_phi(dk.rank_complement(path)) == conjugate(CORE)


class TestMaps:
    @given(paths())
    def test_phi_round_trip(self, data):
        word, n, p = data
        x = dk.RationalDyckPath(n, p, word)
        kappa = dk.anderson_phi(x)
        assert is_simultaneous_core(kappa, n, p)
        assert dk.anderson_phi_inv(kappa, n, p) == x

    @given(paths())
    def test_h_set_is_hook_set_and_area(self, data):
        word, n, p = data
        x = dk.RationalDyckPath(n, p, word)
        assert dk.area(x) == len(first_column_hooks(dk.anderson_phi(x)))

    @given(paths())
    def test_zeta_preserves_counts(self, data):
        word, n, p = data
        z = dk.zeta(dk.RationalDyckPath(n, p, word))
        assert z.n == n and z.p == p

    @pytest.mark.parametrize("n,p", [(2, 3), (3, 4), (3, 5), (4, 5), (5, 7)])
    def test_zeta_bijective(self, n, p):
        table = dk.zeta_inverse_table(n, p)
        assert set(table) == set(dk.enumerate_paths(n, p))

    def test_phi_inv_rejects_non_core(self):
        with pytest.raises(ValueError, match="core"):
            dk.anderson_phi_inv((2,), 2, 3)

    @pytest.mark.parametrize("n,p", [(3, 4), (4, 5), (3, 7)])
    def test_simultaneous_cores_distinct(self, n, p):
        cores = dk.simultaneous_cores(n, p)
        assert len(set(map(tuple, cores))) == len(cores)
        # largest core has size (n^2-1)(p^2-1)/24
        assert max(sum(k) for k in cores) == (n * n - 1) * (p * p - 1) // 24
