import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CORE, INVERSION_ROWS, N, OMEGA_INV, P, SHI_MPLUS1, SHI_ROWS
from ratcat import affine as af
from ratcat.abacus import alpha, is_flush
from ratcat.partition import conjugate
from ratcat.tableau import StaircaseTableau


@st.composite
def windows(draw, n_min=1, n_max=5, spread=3):
    n = draw(st.integers(n_min, n_max))
    perm = draw(st.permutations(range(1, n + 1)))
    shifts = draw(st.lists(st.integers(-spread, spread), min_size=n, max_size=n))
    shifts[-1] -= sum(shifts)
    return af.AffinePermutation(tuple(v + n * k for v, k in zip(perm, shifts)))



class TestWindow:
    def test_validation_messages(self):
        with pytest.raises(ValueError, match="sum"):
            af.AffinePermutation((1, 3))
        with pytest.raises(ValueError, match="residue"):
            af.AffinePermutation((1, 3, 3, 1, 7))
        with pytest.raises(ValueError, match="entry 2"):
            af.parse_window("[1, a, 3]")

    def test_parse_format(self, omega):
        assert af.format_window(omega) == "[-2,15,-1,16,-14,10,4]"
        assert omega(8) == 5 and omega(0) == -3

    @given(windows(), windows())
    def test_compose_is_function_composition(self, u, v):
        if u.n != v.n:
            with pytest.raises(ValueError, match="period"):
                af.compose(u, v)
            return
        uv = af.compose(u, v)
        assert all(uv(i) == u(v(i)) for i in range(-15, 15))

    @given(windows())
    def test_inverse(self, w):
        winv = af.inverse(w)
        assert all(winv(w(i)) == i for i in range(-10, 10))

    def test_running_inverse(self, omega):
        assert af.inverse(omega).window == OMEGA_INV
        assert af.is_dominant(omega) and af.is_p_stable(omega, P)

    @given(windows())
    def test_star_formula(self, w):
        ws = af.star(w)
        assert all(ws(i) == 1 - w(1 - i) for i in range(-10, 10))
        assert af.star(ws) == w
        assert af.is_dominant(ws) == af.is_dominant(w)

    def test_running_star(self, omega):
        assert af.star(omega).window == (4, -2, 22, -8, 9, -7, 10)

    @given(windows())
    def test_decompose(self, w):
        sigma, mu, nu = af.decompose(w)
        n = w.n
        assert sorted(sigma) == list(range(1, n + 1))
        assert sum(mu) == 0 and sum(nu) == 0
        tmu = af.translation(mu)
        assert af.compose(tmu, af.from_permutation(sigma)) == w
        assert af.compose(af.from_permutation(sigma), af.translation([-x for x in nu])) == w

    def test_running_decomposition(self, omega):
        sigma, _, _ = af.decompose(omega)
        assert sigma == (5, 1, 6, 2, 7, 3, 4)

    def test_simple_generators(self):
        assert af.simple(3, 3).window == (0, 2, 4)
        assert af.compose(af.simple(4, 2), af.simple(4, 2)) == af.identity(4)


class TestLength:
    def test_running_inversion_table(self, omega):
        assert af.inversion_table(omega) == StaircaseTableau(N, INVERSION_ROWS)
        assert af.length(omega) == 37
        assert len(af.affine_inversions(omega)) == 37
        assert af.inversion_table_by_inversions(omega) == af.inversion_table(omega)

    @given(windows(n_max=4, spread=1))
    @settings(max_examples=40, deadline=None)
    def test_length_equals_word_length(self, w):
        ell = af.length(w)
        assert ell == len(af.affine_inversions(w))
        if ell <= 8:
            assert af.bfs_length(w, 8) == ell
        else:
            assert af.bfs_length(w, 8) is None

    @given(windows())
    def test_inversion_table_transposes_under_star(self, w):
        assert af.inversion_table(af.star(w)) == af.inversion_table(w).transpose()

    def test_equal_inversion_tables(self):
        a, b = af.parse_window("[0,1,5]"), af.parse_window("[-1,3,4]")
        assert a != b and af.inversion_table(a) == af.inversion_table(b)

    def test_all_windows_up_to_length(self):
        # Poincare series of the affine symmetric group S~3 starts 1, 3, 6, 9
        ws = af.all_windows_up_to_length(3, 3)
        by_len = [sum(1 for w in ws if af.length(w) == k) for k in range(4)]
        assert by_len == [1, 3, 6, 9]


class TestShiTableau:
    def test_running_tableau(self, omega):
        t = af.shi_tableau(omega, P)
        assert t == StaircaseTableau(N, SHI_ROWS)
        assert af.shi_tableau_by_inversions(omega, P) == t
        s, _, _ = af.decompose(af.inverse(omega))
        m, r = divmod(P, N)
        capped_high = {(i, j) for (i, j), _ in t.items()
                       if not (r + s[i - 1] < s[j - 1] or s[i - 1] + r - N < s[j - 1] < s[i - 1])}
        assert capped_high == SHI_MPLUS1

    def test_pak_stanley(self, omega):
        assert af.pak_stanley(omega, P) == (0, 0, 2, 5, 5, 6, 13) == af.pak_stanley_direct(omega, P)
        assert af.dual_pak_stanley(omega, P) == (0, 2, 2, 2, 5, 10, 10) == af.dual_pak_stanley_direct(omega, P)

    def test_preconditions(self, omega):
        with pytest.raises(ValueError, match="gcd"):
            af.shi_tableau(omega, 14)
        with pytest.raises(ValueError, match="stable"):
            af.shi_tableau(omega, 3)
        with pytest.raises(ValueError, match="dominant"):
            af.shi_tableau(af.parse_window("[2,1,3]"), 2)

    @pytest.mark.parametrize("n,p", [(3, 4), (3, 5), (4, 5), (4, 7), (5, 6)])
    def test_dominant_p_stable(self, n, p):
        from math import comb
        ws = af.dominant_p_stable(n, p)
        assert len(ws) == comb(n + p, n) // (n + p)
        for w in ws:
            assert af.shi_tableau(w, p) == af.shi_tableau_by_inversions(w, p)
            assert af.shi_tableau(af.star(w), p) == af.shi_tableau(w, p).transpose()

    def test_p_stable_total(self):
        assert sum(1 for _ in af.p_stable_elements(3, 4)) == 16

    def test_brute_force_dominant(self):
        brute = {w for w in af.dominant_by_inverse_windows(3, 4) if af.is_p_stable(w, 4)}
        assert brute == set(af.dominant_p_stable(3, 4))


class TestGamma:
    def test_running_core(self, omega):
        assert af.core_of(omega) == CORE
        assert af.core_of(af.star(omega)) == conjugate(CORE)
        assert af.gamma_inv(alpha(CORE), N) == omega
        G = af.gamma(omega)
        assert is_flush(G, N) and is_flush(G, P)

    def test_gamma_is_nonpositive_preimage(self, omega):
        G = af.gamma(omega)
        assert all((z in G) == (omega(z) <= 0) for z in range(-60, 60))
        assert af.boundary_signs(omega, -2, 2) == "".join("-" if omega(z) <= 0 else "+" for z in range(-2, 3))

    def test_gamma_rejects_non_dominant(self):
        with pytest.raises(ValueError, match="dominant"):
            af.gamma(af.parse_window("[2,1,3]"))

    @given(windows(n_min=2, n_max=5))
    def test_gamma_round_trip(self, w):
        w = af.inverse(af.AffinePermutation(tuple(sorted(af.inverse(w).window))))  # nearest dominant
        assert af.gamma_inv(af.gamma(w), w.n) == w
        assert af.core_of(af.star(w)) == conjugate(af.core_of(w))
