"""Acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL verdict in ``VERDICTS``; the verdicts are
printed in the pytest terminal summary. Running this file directly prints the
same lines.
"""

import json
import time
from math import comb, gcd

import pytest

from conftest import CORE, H_SET, INVERSION_ROWS, N, NORTH_LABELS, OMEGA, OMEGA_INV, P, SHI_ROWS
from ratcat import affine as af
from ratcat import dyck as dk
from ratcat import partition as pt
from ratcat import rootsystem as rs
from ratcat import verify as vf
from ratcat.tableau import StaircaseTableau

VERDICTS: list[str] = []


class Checker:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.failures: list[str] = []
        self.start = time.perf_counter()

    def check(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def finish(self, extra: str = "") -> None:
        elapsed = time.perf_counter() - self.start
        status = "PASS" if not self.failures else "FAIL"
        detail = extra if not self.failures else "; ".join(self.failures[:5])
        VERDICTS.append(f"criterion {self.number} [{status}] {self.title} ({elapsed:.1f}s){': ' + detail if detail else ''}")
        assert not self.failures, self.failures


def test_criterion_1_running_example():
    c = Checker(1, "running example n=7, p=16")
    w = af.parse_window(OMEGA)
    c.check(af.inverse(w).window == OMEGA_INV, "inverse window")
    inv = af.inversion_table(w)
    c.check(inv == StaircaseTableau(N, INVERSION_ROWS) and len(list(inv.items())) == 21, "inversion table")
    shi = af.shi_tableau(w, P)
    c.check(shi == StaircaseTableau(N, SHI_ROWS), "Shi tableau")
    x = dk.anderson_map(w, P)
    c.check(dk.north_labels(x) == NORTH_LABELS, "north labels")
    c.check(dk.h_set(x) == H_SET, "H(x)")
    d = dk.codinv_tableau(x)
    c.check(d == StaircaseTableau(N, SHI_ROWS) and d == shi, "codinv tableau")
    c.check(dk.complement(x) == (11, 6, 6, 4, 3, 2, 0), "complement(x)")
    c.check(dk.complement(dk.zeta(x)) == (13, 6, 5, 5, 2, 0, 0), "complement(zeta(x))")
    c.check(dk.complement(dk.eta(x)) == (10, 10, 5, 2, 2, 2, 0), "complement(eta(x))")
    c.check(time.perf_counter() - c.start < 1.0, "runtime above 1 s")
    c.finish()


def test_criterion_2_hook_sets():
    c = Checker(2, "hook-set spot checks")
    c.check(pt.hc(CORE, 12) == {12, 5}, "H^c(12)")
    c.check(pt.hr(CORE, 12) == {12, 10, 5, 3, 1}, "H^r(12)")
    c.check(pt.hr(CORE, 11) == frozenset(), "H^r(11)")
    c.check(pt.n_rows(CORE, 7) == (31, 15, 13, 12, 4), "7-rows")
    c.check(pt.p_columns(CORE, 7) == (31, 29, 20, 12, 11, 9), "7-columns")
    c.check(pt.skew_length_armstrong(CORE, N, P) == 31, "skew length by cells")
    c.check(len(pt.h_np(CORE, N, P)) == 31, "skew length by H_{n,p}")
    c.check(time.perf_counter() - c.start < 1.0, "runtime above 1 s")
    c.finish()


CORE_SUITES = ["hab", "skl", "flush", "abacus_bij"]
TYPEA_SUITES = ["gamma_bij", "conjcore", "inv_transpose", "shi_transpose", "dinvshi", "zeta_ps",
                "codinv_sum", "injectivity", "zeta_bij"]


def test_criterion_3_theorem_suites():
    c = Checker(3, "theorem suites")
    cases = 0
    core_params = {"n_max": 8, "p_max": 8, "nc_max": 6, "size_max": 30}
    typea_params = {"n_max": 5, "p_max": 9, "extra": [[7, 16]]}
    for name in CORE_SUITES + TYPEA_SUITES:
        report = vf.verify_suite(name, core_params if name in CORE_SUITES else typea_params)
        cases += report.cases
        c.check(report.passed, f"{name}: {report.counterexamples[:1]}")
    c.check(time.perf_counter() - c.start < 300, "runtime above 5 min")
    c.finish(f"{cases} cases, 0 counterexamples")


def test_criterion_4_counting():
    c = Checker(4, "counting")
    pairs = [(n, p) for n in range(1, 6) for p in range(1, 10) if gcd(n, p) == 1] + [(7, 16)]
    for n, p in pairs:
        expected = comb(n + p, n) // (n + p)
        paths = set(dk.enumerate_paths(n, p))
        c.check(len(paths) == expected, f"#D({n},{p}) = {len(paths)}")
        perms = rs.dominant_p_stable_permutations(n, p)
        images = {dk.anderson_map(w, p) for w in perms}
        c.check(len(perms) == expected and images == paths, f"Anderson image for ({n},{p})")
    c.check(len(set(dk.enumerate_paths(7, 16))) == 10659, "#D(7,16)")
    c.check(time.perf_counter() - c.start < 60, "runtime above 1 min")
    c.finish(f"{len(pairs)} pairs")


def test_criterion_5_qt_catalan():
    c = Checker(5, "q,t-Catalan")
    c.check(str(vf.qt_catalan(2, 3)) == "q + t", "C_{2,3}")
    # symmetry with an independent recount of both statistics on Dyck paths
    report = vf.verify_suite("qt_symmetry", {"n_max": 5, "p_max": 8})
    c.check(report.passed, f"qt_symmetry: {report.counterexamples[:1]}")
    c.check(time.perf_counter() - c.start < 60, "runtime above 1 min")
    c.finish(f"{report.cases} polynomials symmetric")


def test_criterion_6_root_system():
    c = Checker(6, "root-system layer")
    checked = 0
    for n, ps in ((3, (4, 5, 7)), (4, (5, 7))):
        system = rs.build("A", n - 1)
        roots = {(i, j): rs.type_a_root(system, i, j) for i in range(1, n) for j in range(i + 1, n + 1)}
        for p in ps:
            for e in rs.enumerate_dominant_p_stable(system, p):
                window = af.shi_tableau(rs.to_affine_permutation(e), p)
                for (i, j), idx in roots.items():
                    checked += 1
                    counted, closed = rs.t_alpha_p_count(e, idx, p), rs.t_alpha_p(e, idx, p)
                    c.check(counted == closed == window[i, j],
                            f"A{n - 1} p={p} {e.to_dict()} root e{i}-e{j}: {counted}, {closed}, {window[i, j]}")
    report = vf.verify_suite("conj_shi", {"types": ["A1", "A2", "A3", "B2", "B3", "G2"]})
    c.check(report.passed, f"conj_shi: {report.counterexamples[:1]}")
    c.check(time.perf_counter() - c.start < 300, "runtime above 5 min")
    c.finish(f"{checked} t_alpha entries, {report.cases} tableaux without collision")


def test_criterion_7_conjecture_reports():
    c = Checker(7, "conjecture reports")
    found = []
    for name in ("conj_inH", "conj_invH"):
        report = vf.verify_suite(name, {"n_max": 8, "p_max": 8})
        data = json.loads(report.to_json())
        c.check(data["suite"] == name and data["kind"] == "conjecture" and data["cases"] > 0, f"{name} report")
        for wit in data["counterexamples"]:
            kappa = pt.Partition(wit["core"])
            c.check(pt.is_simultaneous_core(kappa, wit["n"], wit["p"]), f"{name} witness core")
        found.append(f"{name} {data['cases']} cores, {len(data['counterexamples'])} counterexamples")
    c.finish("; ".join(found))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
