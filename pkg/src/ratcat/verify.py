"""Exhaustive verification suites and q,t-Catalan polynomials.

Each suite is split into independent units (usually one per parameter pair).
A unit returns how many cases it checked and a list of witnesses for every
failure; units are merged into a :class:`SuiteReport`. Theorem suites are
regression tests and any witness is a hard failure. Conjecture suites only
gather evidence.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable

from . import abacus as ab
from . import affine as af
from . import dyck as dk
from . import partition as pt
from . import rootsystem as rs
from .errors import InvariantViolation
from .partition import Partition

# -- polynomials ----------------------------------------------------------------


class QTPolynomial:
    """Polynomial in ``q`` and ``t`` with positive integer coefficients."""

    def __init__(self, coefficients: dict[tuple[int, int], int] | None = None):
        self.coefficients: dict[tuple[int, int], int] = {}
        for (a, b), c in (coefficients or {}).items():
            if a < 0 or b < 0:
                raise ValueError("degrees must be nonnegative")
            if c < 0:
                raise ValueError("coefficients must be positive")
            if c:
                self.coefficients[a, b] = c

    def add_term(self, qdeg: int, tdeg: int, coeff: int = 1) -> None:
        if qdeg < 0 or tdeg < 0:
            raise ValueError("degrees must be nonnegative")
        if coeff:
            self.coefficients[qdeg, tdeg] = self.coefficients.get((qdeg, tdeg), 0) + coeff

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QTPolynomial({(0, 0): other})
        return isinstance(other, QTPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        out = QTPolynomial(self.coefficients)
        for (a, b), c in other.coefficients.items():
            out.add_term(a, b, c)
        return out

    def __getitem__(self, degrees: tuple[int, int]) -> int:
        return self.coefficients.get(degrees, 0)

    def swap(self) -> "QTPolynomial":
        return QTPolynomial({(b, a): c for (a, b), c in self.coefficients.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def total(self) -> int:
        """Value at ``q = t = 1``."""
        return sum(self.coefficients.values())

    def terms(self) -> list[tuple[int, int, int]]:
        """``(qdeg, tdeg, coeff)`` by decreasing ``(qdeg, tdeg)``."""
        return [(a, b, c) for (a, b), c in sorted(self.coefficients.items(), reverse=True)]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for a, b, c in self.terms():
            factors = [f"{v}^{d}" if d > 1 else v for v, d in (("q", a), ("t", b)) if d]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QTPolynomial({self})"

    def to_dict(self) -> dict:
        return {"terms": [list(t) for t in self.terms()]}

    @classmethod
    def from_dict(cls, data: dict) -> "QTPolynomial":
        return cls({(a, b): c for a, b, c in data["terms"]})


def qt_catalan(n: int, p: int) -> QTPolynomial:
    """Sum over ``n,p``-cores of ``q^len * t^((n-1)(p-1)/2 - skew length)``."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")
    top = (n - 1) * (p - 1) // 2
    poly = QTPolynomial()
    for kappa in dk.simultaneous_cores(n, p):
        poly.add_term(len(kappa), top - pt.skew_length(kappa, n, p))
    return poly


def c_phi_p(system: rs.RootSystem, p: int) -> QTPolynomial:
    """``sum q^(sum of Shi tableau entries)`` over dominant ``p``-stable elements."""
    poly = QTPolynomial()
    for omega in rs.enumerate_dominant_p_stable(system, p):
        poly.add_term(sum(rs.shi_tableau(omega, p)), 0)
    return poly


# -- reports -----------------------------------------------------------------------


@dataclass
class SuiteReport:
    name: str
    kind: str  # "theorem" or "conjecture"
    params: dict
    cases: int = 0
    counterexamples: list = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def merge(self, cases: int, witnesses: list) -> None:
        self.cases += cases
        self.counterexamples.extend(witnesses)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "kind": self.kind,
            "params": self.params,
            "cases": self.cases,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "runtime": round(self.runtime, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        status = "PASS" if self.passed else ("FAIL" if self.kind == "theorem" else "COUNTEREXAMPLES")
        head = f"{self.name} [{self.kind}] {status}: {self.cases} cases, " \
               f"{len(self.counterexamples)} counterexamples, {self.runtime:.2f}s"
        lines = [head]
        for w in self.counterexamples[:20]:
            lines.append("  " + json.dumps(w, sort_keys=True))
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        return "\n".join(lines)


# -- parameter ranges --------------------------------------------------------------


def coprime_pairs(n_max: int, p_max: int, n_min: int = 1) -> list[tuple[int, int]]:
    return [(n, p) for n in range(n_min, n_max + 1) for p in range(1, p_max + 1) if gcd(n, p) == 1]


def noncoprime_pairs(n_max: int, p_max: int) -> list[tuple[int, int]]:
    return [(n, p) for n in range(2, n_max + 1) for p in range(2, p_max + 1) if gcd(n, p) != 1]


def _cores(n: int, p: int, size_max: int | None) -> list[Partition]:
    if gcd(n, p) == 1:
        return dk.simultaneous_cores(n, p)
    if size_max is None:
        raise ValueError(f"non-coprime pair ({n},{p}) needs a size bound")
    return pt.simultaneous_cores(n, p, size_max)


def _core_units(params: dict) -> list[tuple]:
    if params.get("pairs"):
        return [(n, p, None if gcd(n, p) == 1 else params["size_max"]) for n, p in params["pairs"]]
    units = [(n, p, None) for n, p in coprime_pairs(params["n_max"], params["p_max"])]
    if params.get("size_max"):
        units += [(n, p, params["size_max"])
                  for n, p in noncoprime_pairs(params["nc_max"], params["nc_max"])]
    return units


def _typea_units(params: dict) -> list[tuple]:
    if params.get("pairs"):
        return [tuple(pair) for pair in params["pairs"]]
    units = coprime_pairs(params["n_max"], params["p_max"])
    for pair in params.get("extra", []):
        if tuple(pair) not in units:
            units.append(tuple(pair))
    return units


# -- unit checks ---------------------------------------------------------------------

Unit = tuple
Result = tuple[int, list]


def _hab(unit: Unit) -> Result:
    n, p, size = unit
    bad = []
    cores = _cores(n, p, size)
    for kappa in cores:
        a, b = pt.h_np(kappa, n, p), pt.h_np(kappa, p, n)
        if a != b:
            bad.append({"n": n, "p": p, "core": str(kappa), "H_np": list(a), "H_pn": list(b)})
    return len(cores), bad


def _skl(unit: Unit) -> Result:
    n, p, size = unit
    bad = []
    cores = _cores(n, p, size)
    for kappa in cores:
        try:
            s = pt.skew_length(kappa, n, p)
            s_swapped = pt.skew_length(kappa, p, n)
            s_conj = pt.skew_length(pt.conjugate(kappa), n, p)
        except InvariantViolation as exc:
            bad.append({"n": n, "p": p, "core": str(kappa), "error": str(exc)})
            continue
        if not s == s_swapped == s_conj:
            bad.append({"n": n, "p": p, "core": str(kappa), "skl": s, "skl_swapped": s_swapped,
                        "skl_conjugate": s_conj})
    return len(cores), bad


def _flush_sets_ok(kappa: Partition, n: int) -> bool:
    first, top = pt.first_column_hooks(kappa), pt.first_row_hooks(kappa)
    for h in first:
        row = pt.hr(kappa, h)
        if any(z - n not in row for z in row if z - n >= 0):
            return False
    for h in top:
        col = pt.hc(kappa, h)
        if any(z - n not in col for z in col if z - n >= 0):
            return False
    return True


def _flush(unit: Unit) -> Result:
    n, p, size = unit
    bad = []
    cores = _cores(n, p, size)
    for kappa in cores:
        for mod in (n, p):
            if not _flush_sets_ok(kappa, mod):
                bad.append({"n": n, "p": p, "core": str(kappa), "modulus": mod, "failed": "hook sets"})
            if not (ab.is_flush(ab.alpha(kappa), mod) and ab.is_flush(ab.beta(kappa), mod)):
                bad.append({"n": n, "p": p, "core": str(kappa), "modulus": mod, "failed": "abacus"})
    # the flush property characterises cores; checked on every small partition
    cases = len(cores)
    if size is None:
        for lam in pt.partitions_up_to(min(12, n + p)):
            cases += 1
            for mod in (n, p):
                if pt.is_core(lam, mod) != pt.is_core_by_flush(lam, mod):
                    bad.append({"partition": str(lam), "modulus": mod, "failed": "characterisation"})
    return cases, bad


def semigroup_order_ideals(n: int, p: int) -> list[frozenset[int]]:
    """Sets of positive integers outside the semigroup <n, p>, closed under
    subtracting ``n`` or ``p`` while staying positive.

    These are exactly the bead sets of normalised abaci that are both ``n``- and
    ``p``-flush; built directly, without partitions.
    """
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")
    gaps = [g for g in range(1, (n - 1) * (p - 1)) if all((g - a * p) % n for a in range(g // p + 1))]
    out: list[frozenset[int]] = []
    chosen: set[int] = set()

    def rec(k: int) -> None:
        if k == len(gaps):
            out.append(frozenset(chosen))
            return
        g = gaps[k]
        rec(k + 1)
        if all(g - m <= 0 or g - m in chosen for m in (n, p)):
            chosen.add(g)
            rec(k + 1)
            chosen.discard(g)

    rec(0)
    return out


def _abacus_bij(unit: Unit) -> Result:
    n, p, size = unit
    bad = []
    cores = _cores(n, p, size)
    for kappa in cores:
        A, B = ab.alpha(kappa), ab.beta(kappa)
        w = {"n": n, "p": p, "core": str(kappa)}
        if not A.is_balanced or ab.alpha_inv(A) != kappa:
            bad.append({**w, "failed": "alpha round trip"})
        if not B.is_normalised or ab.beta_inv(B) != kappa:
            bad.append({**w, "failed": "beta round trip"})
        if ab.alpha_inv(ab.shift(B, 1 - len(kappa))) != kappa:
            bad.append({**w, "failed": "beta is a shift of alpha"})
    cases = len(cores)
    if size is None:
        # surjectivity: every doubly flush normalised abacus comes from a core
        ideals = semigroup_order_ideals(n, p)
        cases += len(ideals)
        images = set()
        for beads in ideals:
            B = ab.Abacus(tuple(beads), ())
            kappa = ab.beta_inv(B)
            images.add(kappa)
            A = ab.alpha(kappa)
            if not (ab.is_flush(A, n) and ab.is_flush(A, p)):
                bad.append({"n": n, "p": p, "abacus": ab.format_abacus(B), "failed": "alpha not flush"})
        if images != set(cores):
            bad.append({"n": n, "p": p, "failed": "abaci and cores differ",
                        "abaci": len(images), "cores": len(cores)})
    return cases, bad


def _dominant_list(n: int, p: int) -> list[af.AffinePermutation]:
    return rs.dominant_p_stable_permutations(n, p)


def _gamma_bij(unit: Unit) -> Result:
    n, p = unit
    bad = []
    ws = _dominant_list(n, p)
    cores = set()
    for w in ws:
        G = af.gamma(w)
        wit = {"n": n, "p": p, "perm": str(w)}
        if not (G.is_balanced and ab.is_flush(G, n)):
            bad.append({**wit, "failed": "gamma not balanced n-flush"})
            continue
        if not ab.is_flush(G, p):
            bad.append({**wit, "failed": "gamma of p-stable not p-flush"})
        if af.gamma_inv(G, n) != w:
            bad.append({**wit, "failed": "gamma round trip"})
        kappa = ab.alpha_inv(G)
        if not pt.is_simultaneous_core(kappa, n, p):
            bad.append({**wit, "core": str(kappa), "failed": "not an n,p-core"})
        cores.add(kappa)
    expected = set(dk.simultaneous_cores(n, p))
    if cores != expected or len(ws) != dk.rational_catalan(n, p):
        bad.append({"n": n, "p": p, "failed": "image is not the set of cores",
                    "perms": len(ws), "cores": len(expected)})
    cases = len(ws)
    # converse direction and the unrestricted bijection on small dominant elements
    if n <= 5 and p <= 9:
        for w in af.dominant_by_inverse_windows(n, min(p, 4)):
            cases += 1
            G = af.gamma(w)
            if ab.is_flush(G, p) != af.is_p_stable(w, p):
                bad.append({"n": n, "p": p, "perm": str(w), "failed": "p-flush iff p-stable"})
            if af.gamma_inv(G, n) != w or not pt.is_core(ab.alpha_inv(G), n):
                bad.append({"n": n, "perm": str(w), "failed": "dominant gamma bijection"})
    return cases, bad


def _conjcore(unit: Unit) -> Result:
    n, p = unit
    bad = []
    ws = _dominant_list(n, p)
    if n <= 5 and p <= 9:
        ws = ws + list(af.dominant_by_inverse_windows(n, 3))
    for w in ws:
        a = af.core_of(af.star(w))
        b = pt.conjugate(af.core_of(w))
        if a != b:
            bad.append({"n": n, "perm": str(w), "core_of_star": str(a), "conjugate_core": str(b)})
    return len(ws), bad


def _inv_transpose(unit: Unit) -> Result:
    n, p = unit
    bad = []
    ws = _dominant_list(n, p)
    if n <= 5 and p <= 9:
        ws = ws + af.all_windows_up_to_length(n, 4)
    for w in ws:
        if af.inversion_table(af.star(w)) != af.inversion_table(w).transpose():
            bad.append({"n": n, "perm": str(w)})
    return len(ws), bad


def _shi_transpose(unit: Unit) -> Result:
    n, p = unit
    bad = []
    ws = _dominant_list(n, p)
    for w in ws:
        if af.shi_tableau(af.star(w), p) != af.shi_tableau(w, p).transpose():
            bad.append({"n": n, "p": p, "perm": str(w)})
    return len(ws), bad


def _dinvshi(unit: Unit) -> Result:
    n, p = unit
    bad = []
    ws = _dominant_list(n, p)
    for w in ws:
        x = dk.anderson_map(w, p)
        t, d = af.shi_tableau(w, p), dk.codinv_tableau(x)
        if t != d:
            bad.append({"n": n, "p": p, "perm": str(w), "path": x.word,
                        "shi": t.to_text(), "codinv": d.to_text()})
        if dk.anderson_map_inv(x) != w:
            bad.append({"n": n, "p": p, "perm": str(w), "path": x.word, "failed": "Anderson round trip"})
    return len(ws), bad


def _zeta_ps(unit: Unit) -> Result:
    n, p = unit
    bad = []
    ws = _dominant_list(n, p)
    for w in ws:
        x = dk.anderson_map(w, p)
        f, fstar = af.pak_stanley(w, p), af.dual_pak_stanley(w, p)
        if f != af.pak_stanley_direct(w, p) or fstar != af.dual_pak_stanley_direct(w, p):
            bad.append({"n": n, "p": p, "perm": str(w), "failed": "labelling routes differ"})
        cz, ce = dk.complement(dk.zeta(x)), dk.complement(dk.eta(x))
        if cz != tuple(reversed(f)) or ce != tuple(reversed(fstar)):
            bad.append({"n": n, "p": p, "perm": str(w), "f": list(f), "f_star": list(fstar),
                        "complement_zeta": list(cz), "complement_eta": list(ce)})
    return len(ws), bad


def _codinv_sum(unit: Unit) -> Result:
    n, p = unit
    bad = []
    top = (n - 1) * (p - 1) // 2
    paths = list(dk.enumerate_paths(n, p))
    for x in paths:
        d = dk.codinv_tableau(x)
        if d.total() != top - dk.area(dk.zeta(x)):
            bad.append({"n": n, "p": p, "path": x.word, "sum": d.total(),
                        "area_zeta": dk.area(dk.zeta(x))})
        if dk.codinv_tableau(dk.rank_complement(x)) != d.transpose():
            bad.append({"n": n, "p": p, "path": x.word, "failed": "rank complement transposes"})
    return len(paths), bad


def _injectivity(unit: Unit) -> Result:
    n, p = unit
    bad = []
    seen: dict = {}
    ws = _dominant_list(n, p)
    for w in ws:
        t = af.shi_tableau(w, p)
        if t in seen:
            bad.append({"n": n, "p": p, "perms": [str(seen[t]), str(w)], "tableau": t.to_text()})
        seen[t] = w
    seen_d: dict = {}
    paths = list(dk.enumerate_paths(n, p))
    for x in paths:
        d = dk.codinv_tableau(x)
        if d in seen_d:
            bad.append({"n": n, "p": p, "paths": [seen_d[d].word, x.word], "tableau": d.to_text()})
        seen_d[d] = x
    if len(ws) != len(paths):
        bad.append({"n": n, "p": p, "failed": "count mismatch", "perms": len(ws), "paths": len(paths)})
    return len(ws) + len(paths), bad


def _zeta_bij(unit: Unit) -> Result:
    n, p = unit
    paths = list(dk.enumerate_paths(n, p))
    images: dict = {}
    bad = []
    for x in paths:
        z = dk.zeta(x)
        if z in images:
            bad.append({"n": n, "p": p, "paths": [images[z].word, x.word], "image": z.word})
        images[z] = x
    if set(images) != set(paths):
        bad.append({"n": n, "p": p, "failed": "image is not all of D(n,p)"})
    return len(paths), bad


def _conj_inh(unit: Unit) -> Result:
    n, p = unit
    bad = []
    cores = dk.simultaneous_cores(n, p)
    for kappa in cores:
        missing = sorted(pt.hook_set(kappa) - set(pt.h_np(kappa, n, p)))
        if missing:
            bad.append({"n": n, "p": p, "core": list(kappa), "missing_hooks": missing})
    return len(cores), bad


def _conj_invh(unit: Unit) -> Result:
    n, p = unit
    bad = []
    cores = dk.simultaneous_cores(n, p)
    for kappa in cores:
        H = set(pt.h_np(kappa, n, p))
        broken = sorted(z for z in range(0, max(H, default=0) + 1) if z + n in H and z not in H)
        if broken:
            bad.append({"n": n, "p": p, "core": list(kappa), "H_np": sorted(pt.h_np(kappa, n, p)),
                        "z": broken})
    return len(cores), bad


def _conj_shi(unit: Unit) -> Result:
    name, p = unit
    system = rs.parse_root_system(name)
    elements = rs.enumerate_dominant_p_stable(system, p)
    seen: dict = {}
    bad = []
    for omega in elements:
        try:
            t = rs.shi_tableau(omega, p)
        except InvariantViolation as exc:
            bad.append({"type": name, "p": p, "element": omega.to_dict(), "error": str(exc)})
            continue
        if t in seen:
            bad.append({"type": name, "p": p, "elements": [seen[t].to_dict(), omega.to_dict()],
                        "tableau": list(t)})
        seen[t] = omega
    return len(elements), bad


def _qt_symmetry(unit: Unit) -> Result:
    n, p = unit
    bad = []
    poly = qt_catalan(n, p)
    top = (n - 1) * (p - 1) // 2
    wit = {"n": n, "p": p, "polynomial": str(poly)}
    if not poly.is_symmetric():
        bad.append({**wit, "failed": "not symmetric"})
    if poly.total() != dk.rational_catalan(n, p):
        bad.append({**wit, "failed": "mass"})
    if any(b > top for _, b, _ in poly.terms()):
        bad.append({**wit, "failed": "t-degree bound"})
    # same statistics read off Dyck paths: length = area, co-skew length = area of zeta
    recount = QTPolynomial()
    for x in dk.enumerate_paths(n, p):
        recount.add_term(dk.area(x), dk.area(dk.zeta(x)))
    if recount != poly:
        bad.append({**wit, "recount": str(recount), "failed": "path recount"})
    return 1, bad


def _typea_crosscheck(unit: Unit) -> Result:
    n, p = unit
    if n < 2:
        return 0, []
    system = rs.build("A", n - 1)
    roots = {(i, j): rs.type_a_root(system, i, j) for i in range(1, n) for j in range(i + 1, n + 1)}
    bad = []
    ws = _dominant_list(n, p)
    for w in ws:
        e = rs.from_affine_permutation(system, w)
        wit = {"n": n, "p": p, "perm": str(w)}
        if rs.to_affine_permutation(e) != w or not rs.is_dominant(e) or not rs.is_p_stable(e, p):
            bad.append({**wit, "failed": "embedding"})
            continue
        inv = af.inversion_table(w)
        shi = af.shi_tableau(w, p)
        shi_inv = af.shi_tableau_by_inversions(w, p)
        try:
            general = rs.shi_tableau(e, p)
        except InvariantViolation as exc:
            bad.append({**wit, "error": str(exc)})
            continue
        for (i, j), idx in roots.items():
            k = rs.k_alpha(e, idx)
            if not k == rs.k_alpha_count(e, idx) == inv[i, j] == abs(rs.shi_coordinates(e)[idx]):
                bad.append({**wit, "root": [i, j], "failed": "k_alpha"})
            if not general[idx] == shi[i, j] == shi_inv[i, j]:
                bad.append({**wit, "root": [i, j], "failed": "t_alpha",
                            "general": general[idx], "window": shi[i, j], "by_inversions": shi_inv[i, j]})
        if rs.length(e) != af.length(w):
            bad.append({**wit, "failed": "length"})
    cases = len(ws)
    if len(ws) != dk.rational_catalan(n, p):
        bad.append({"n": n, "p": p, "failed": "count", "perms": len(ws)})
    # p-stability and k_alpha agree on every short element, dominant or not
    if n <= 4:
        for w in af.all_windows_up_to_length(n, 4):
            cases += 1
            e = rs.from_affine_permutation(system, w)
            if rs.is_p_stable(e, p) != af.is_p_stable(w, p):
                bad.append({"n": n, "p": p, "perm": str(w), "failed": "p-stable predicate"})
            inv = af.inversion_table(w)
            if any(rs.k_alpha(e, idx) != inv[i, j] for (i, j), idx in roots.items()):
                bad.append({"n": n, "perm": str(w), "failed": "k_alpha (non-dominant)"})
    return cases, bad


# -- registry --------------------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    kind: str
    check: Callable[[Unit], Result]
    units: Callable[[dict], list]
    defaults: dict


_CORE_DEFAULTS = {"n_max": 8, "p_max": 8, "size_max": 30, "nc_max": 6}
_TYPEA_DEFAULTS = {"n_max": 5, "p_max": 9, "extra": [[7, 16]]}
_PATH_DEFAULTS = {"n_max": 8, "p_max": 8}
DEFAULT_SHI_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"]


def _shi_units(params: dict) -> list[tuple[str, int]]:
    units = []
    for name in params["types"]:
        system = rs.parse_root_system(name)
        h = system.coxeter_number
        if params.get("p_values"):
            units += [(system.name, p) for p in params["p_values"]]
            continue
        p_max = params.get("p_max") or 3 * h - 1
        units += [(system.name, p) for p in range(1, p_max + 1) if gcd(p, h) == 1]
    return units


def _path_units(params: dict) -> list[tuple[int, int]]:
    if params.get("pairs"):
        return [tuple(pair) for pair in params["pairs"]]
    return coprime_pairs(params["n_max"], params["p_max"])


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("hab", "theorem", _hab, _core_units, _CORE_DEFAULTS),
    Suite("skl", "theorem", _skl, _core_units, _CORE_DEFAULTS),
    Suite("flush", "theorem", _flush, _core_units, _CORE_DEFAULTS),
    Suite("abacus_bij", "theorem", _abacus_bij, _core_units, _CORE_DEFAULTS),
    Suite("gamma_bij", "theorem", _gamma_bij, _typea_units, _TYPEA_DEFAULTS),
    Suite("conjcore", "theorem", _conjcore, _typea_units, _TYPEA_DEFAULTS),
    Suite("inv_transpose", "theorem", _inv_transpose, _typea_units, _TYPEA_DEFAULTS),
    Suite("shi_transpose", "theorem", _shi_transpose, _typea_units, _TYPEA_DEFAULTS),
    Suite("dinvshi", "theorem", _dinvshi, _typea_units, _TYPEA_DEFAULTS),
    Suite("zeta_ps", "theorem", _zeta_ps, _typea_units, _TYPEA_DEFAULTS),
    Suite("codinv_sum", "theorem", _codinv_sum, _typea_units, _TYPEA_DEFAULTS),
    Suite("injectivity", "theorem", _injectivity, _typea_units, _TYPEA_DEFAULTS),
    Suite("zeta_bij", "theorem", _zeta_bij, _typea_units, _TYPEA_DEFAULTS),
    Suite("conj_inH", "conjecture", _conj_inh, _path_units, _PATH_DEFAULTS),
    Suite("conj_invH", "conjecture", _conj_invh, _path_units, _PATH_DEFAULTS),
    Suite("conj_shi", "conjecture", _conj_shi, _shi_units, {"types": DEFAULT_SHI_TYPES, "p_max": None}),
    Suite("qt_symmetry", "conjecture", _qt_symmetry, _path_units, _PATH_DEFAULTS),
    Suite("typeA_crosscheck", "theorem", _typea_crosscheck, _typea_units,
          {"n_max": 5, "p_max": 9, "extra": []}),
]}


def _validate(name: str, params: dict) -> None:
    for key in ("n_max", "p_max", "size_max", "nc_max"):
        v = params.get(key)
        if v is not None and (not isinstance(v, int) or v < 1):
            raise ValueError(f"{key} must be a positive integer, got {v!r}")
    for pair in params.get("extra", []):
        n, p = pair
        if n < 1 or p < 1 or gcd(n, p) != 1:
            raise ValueError(f"extra pair {tuple(pair)} must be positive and coprime")
    for n, p in params.get("pairs") or []:
        if n < 1 or p < 1:
            raise ValueError(f"pair ({n},{p}) must be positive")
        if gcd(n, p) != 1 and (SUITES[name].units is not _core_units or not params.get("size_max")):
            raise ValueError(f"suite {name} needs coprime n, p; got ({n},{p})")
    if name == "conj_shi":
        for t in params["types"]:
            h = rs.parse_root_system(t).coxeter_number
            for p in params.get("p_values") or []:
                if p < 1 or gcd(p, h) != 1:
                    raise ValueError(f"p={p} is not coprime to h={h} for {t}")


def default_jobs() -> int:
    raw = os.environ.get("RATCAT_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"RATCAT_JOBS must be an integer, got {raw!r}") from None
    return max(jobs, 1)


def verify_suite(name: str, params: dict | None = None, jobs: int | None = None) -> SuiteReport:
    """Run one suite. ``params`` override the suite defaults key by key."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    merged = {**suite.defaults, **(params or {})}
    _validate(name, merged)
    units = suite.units(merged)
    jobs = default_jobs() if jobs is None else max(jobs, 1)
    report = SuiteReport(name, suite.kind, merged)
    start = time.perf_counter()
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results: Iterable[Result] = list(pool.map(suite.check, units))
    else:
        results = map(suite.check, units)
    for cases, witnesses in results:
        report.merge(cases, witnesses)
    report.runtime = time.perf_counter() - start
    return report


def verify_all(names: Iterable[str] | None = None, params: dict | None = None,
               jobs: int | None = None) -> list[SuiteReport]:
    return [verify_suite(name, params, jobs) for name in (names or SUITES)]
