"""The affine symmetric group in window notation.

An affine permutation of period ``n`` is a bijection ``w`` of Z with
``w(i + n) = w(i) + n`` whose window ``[w(1), ..., w(n)]`` sums to
``n(n+1)/2``. Composition is composition of functions: ``(u * v)(i) = u(v(i))``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from .abacus import Abacus, alpha_inv, is_flush
from .partition import Partition
from .tableau import StaircaseTableau


@dataclass(frozen=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(v) for v in self.window)
        n = len(w)
        if n < 1:
            raise ValueError("window must be nonempty")
        if sum(w) != n * (n + 1) // 2:
            raise ValueError(f"window {list(w)} sums to {sum(w)}, expected {n * (n + 1) // 2}")
        if len({v % n for v in w}) != n:
            raise ValueError(f"window {list(w)} does not hit every residue mod {n}")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return evaluate(self, i)

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_window(self)

    def __repr__(self) -> str:
        return f"AffinePermutation({list(self.window)})"


_WINDOW_RE = re.compile(r"^\s*\[(.*)\]\s*$")


def parse_window(text: str) -> AffinePermutation:
    m = _WINDOW_RE.match(text)
    if not m:
        raise ValueError(f"window must be written as [a1,...,an], got {text!r}")
    vals = []
    for k, tok in enumerate(m.group(1).split(","), start=1):
        try:
            vals.append(int(tok))
        except ValueError:
            raise ValueError(f"window entry {k} is not an integer: {tok.strip()!r}") from None
    return AffinePermutation(tuple(vals))


def format_window(w: AffinePermutation) -> str:
    return "[" + ",".join(map(str, w.window)) + "]"


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 1)))


def simple(n: int, i: int) -> AffinePermutation:
    """Simple transposition ``s_i``, ``i in [n]``; ``s_n`` is the affine one."""
    if not 1 <= i <= n:
        raise ValueError(f"simple transposition index {i} outside [1, {n}]")
    w = list(range(1, n + 1))
    if i < n:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        w[0] -= 1
        w[-1] += 1
    return AffinePermutation(tuple(w))


def translation(q: Sequence[int]) -> AffinePermutation:
    """``t_q(i) = q_i * n + i`` for a sum-zero integer vector ``q``."""
    n = len(q)
    if sum(q) != 0:
        raise ValueError("translation vector must sum to zero")
    return AffinePermutation(tuple(q[i] * n + i + 1 for i in range(n)))


def from_permutation(perm: Sequence[int]) -> AffinePermutation:
    """Embed a permutation of ``[n]`` given in one-line notation."""
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{list(perm)} is not a permutation")
    return AffinePermutation(tuple(perm))


def evaluate(w: AffinePermutation, i: int) -> int:
    n = w.n
    k, r = divmod(i - 1, n)
    return w.window[r] + k * n


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    if u.n != v.n:
        raise ValueError(f"period mismatch: {u.n} vs {v.n}")
    return AffinePermutation(tuple(evaluate(u, x) for x in v.window))


def inverse(w: AffinePermutation) -> AffinePermutation:
    n = w.n
    out = [0] * n
    for i, v in enumerate(w.window, start=1):
        a, b = divmod(v - 1, n)
        out[b] = i - a * n
    return AffinePermutation(tuple(out))


def is_grassmannian(w: AffinePermutation) -> bool:
    win = w.window
    return all(win[k] < win[k + 1] for k in range(len(win) - 1))


def is_dominant(w: AffinePermutation) -> bool:
    return is_grassmannian(inverse(w))


def decompose(w: AffinePermutation) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Return ``(sigma, mu, nu)`` with ``w(i) = mu[sigma(i)] * n + sigma(i)`` and ``nu(i)`` minus that multiple.

    ``sigma`` is one-line notation on ``[n]``; ``w = t_mu * sigma = sigma * t_{-nu}``.
    """
    n = w.n
    sigma = [0] * n
    mu = [0] * n
    nu = [0] * n
    for i, v in enumerate(w.window):
        a, b = divmod(v - 1, n)
        sigma[i] = b + 1
        mu[b] = a
        nu[i] = -a
    return tuple(sigma), tuple(mu), tuple(nu)


def star(w: AffinePermutation) -> AffinePermutation:
    """Diagram automorphism ``w*(i) = 1 - w(1 - i)``."""
    n = w.n
    return AffinePermutation(tuple(n + 1 - v for v in reversed(w.window)))


def inversion_table(w: AffinePermutation) -> StaircaseTableau:
    winv = inverse(w).window
    n = w.n
    # floor division toward -inf before the absolute value
    return StaircaseTableau.build(n, lambda i, j: abs((winv[j - 1] - winv[i - 1]) // n))


def length(w: AffinePermutation) -> int:
    return inversion_table(w).total()


def affine_inversions(w: AffinePermutation) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` with ``a in [n]``, ``a < b`` and ``w(a) > w(b)``."""
    n = w.n
    win = w.window
    # w(b) >= b - n + min(window) > max(window) once b exceeds this bound
    reach = max(win) - min(win) + n
    out = []
    for a in range(1, n + 1):
        wa = win[a - 1]
        for b in range(a + 1, a + reach + 1):
            if wa > evaluate(w, b):
                out.append((a, b))
    return out


def bfs_length(w: AffinePermutation, max_length: int) -> int | None:
    """Shortest word in simple transpositions, by breadth-first search; ``None`` past ``max_length``."""
    n = w.n
    start = identity(n)
    if w == start:
        return 0
    gens = [simple(n, i) for i in range(1, n + 1)]
    seen = {start}
    frontier = [start]
    for depth in range(1, max_length + 1):
        nxt = []
        for u in frontier:
            for s in gens:
                v = compose(u, s)
                if v in seen:
                    continue
                if v == w:
                    return depth
                seen.add(v)
                nxt.append(v)
        frontier = nxt
    return None


def is_p_stable(w: AffinePermutation, p: int) -> bool:
    if p < 1:
        raise ValueError("p must be positive")
    return all(w(i) < w(i + p) for i in range(1, w.n + 1))


def _check_shi_input(w: AffinePermutation, p: int) -> None:
    if gcd(w.n, p) != 1:
        raise ValueError(f"gcd({w.n}, {p}) != 1")
    if not is_dominant(w):
        raise ValueError(f"{format_window(w)} is not dominant")
    if not is_p_stable(w, p):
        raise ValueError(f"{format_window(w)} is not {p}-stable")


def shi_tableau(w: AffinePermutation, p: int) -> StaircaseTableau:
    """Rational Shi tableau of a dominant ``p``-stable affine permutation.

    With ``w^{-1} = t_q s`` and ``p = m n + r``, entry ``(i, j)`` is the
    inversion-table entry capped at ``m`` when ``r + s(i) < s(j)`` or
    ``s(i) + r - n < s(j) < s(i)``, and capped at ``m + 1`` otherwise.
    """
    _check_shi_input(w, p)
    n = w.n
    k = inversion_table(w)
    s, _, _ = decompose(inverse(w))
    m, r = divmod(p, n)

    def entry(i: int, j: int) -> int:
        si, sj = s[i - 1], s[j - 1]
        if r + si < sj or si + r - n < sj < si:
            return min(k[i, j], m)
        return min(k[i, j], m + 1)

    return StaircaseTableau.build(n, entry)


def shi_tableau_by_inversions(w: AffinePermutation, p: int) -> StaircaseTableau:
    """Count affine inversions ``(a, b)`` with ``b < a + p``, ``w(a) = i``, ``w(b) = j`` mod ``n``."""
    _check_shi_input(w, p)
    n = w.n
    counts: dict[tuple[int, int], int] = {}
    for a, b in affine_inversions(w):
        if b < a + p:
            key = ((w(a) - 1) % n + 1, (w(b) - 1) % n + 1)
            counts[key] = counts.get(key, 0) + 1
    return StaircaseTableau.build(n, lambda i, j: counts.get((i, j), 0))


def inversion_table_by_inversions(w: AffinePermutation) -> StaircaseTableau:
    """Inversion table of a dominant ``w`` by counting affine inversions per residue pair."""
    n = w.n
    counts: dict[tuple[int, int], int] = {}
    for a, b in affine_inversions(w):
        key = ((w(a) - 1) % n + 1, (w(b) - 1) % n + 1)
        counts[key] = counts.get(key, 0) + 1
    return StaircaseTableau.build(n, lambda i, j: counts.get((i, j), 0))


def pak_stanley(w: AffinePermutation, p: int) -> tuple[int, ...]:
    """``f_j`` = sum of Shi tableau entries ``t[i, j]`` over ``i < j``."""
    t = shi_tableau(w, p)
    return tuple(sum(t[i, j] for i in range(1, j)) for j in range(1, w.n + 1))


def dual_pak_stanley(w: AffinePermutation, p: int) -> tuple[int, ...]:
    """``f*_i`` = sum of Shi tableau entries ``t[n-i+1, j]`` over ``j > n-i+1``."""
    t = shi_tableau(w, p)
    n = w.n
    return tuple(sum(t[n - i + 1, j] for j in range(n - i + 2, n + 1)) for i in range(1, n + 1))


def pak_stanley_direct(w: AffinePermutation, p: int) -> tuple[int, ...]:
    """Count pairs ``(a, b)``, ``a in [n]``, ``a < b < a + p``, ``w(a) > w(b)``, by residue of ``w(b)``."""
    n = w.n
    f = [0] * n
    for a in range(1, n + 1):
        for b in range(a + 1, a + p):
            if w(a) > w(b):
                f[(w(b) - 1) % n] += 1
    return tuple(f)


def dual_pak_stanley_direct(w: AffinePermutation, p: int) -> tuple[int, ...]:
    return pak_stanley_direct(star(w), p)


def gamma(w: AffinePermutation) -> Abacus:
    """The abacus ``{z : w(z) <= 0}`` of a dominant affine permutation."""
    if not is_dominant(w):
        raise ValueError(f"{format_window(w)} is not dominant")
    n = w.n
    tops = [i + n * ((-v) // n) for i, v in enumerate(w.window, start=1)]
    lo = min(tops) + 1 - n
    hi = max(tops)
    beads = [z for z in range(lo, hi + 1) if z <= tops[(z - 1) % n]]
    return Abacus.from_window(lo, hi, beads)


def gamma_inv(A: Abacus, n: int) -> AffinePermutation:
    """Dominant affine permutation whose inverse window is the sorted minimal runner gaps."""
    if not A.is_balanced:
        raise ValueError("abacus is not balanced")
    if not is_flush(A, n):
        raise ValueError(f"abacus is not {n}-flush")
    winv = AffinePermutation(tuple(sorted(A.runner_min_gaps(n))))
    return inverse(winv)


def core_of(w: AffinePermutation) -> Partition:
    return alpha_inv(gamma(w))


def boundary_signs(w: AffinePermutation, lo: int, hi: int) -> str:
    """Sign word of ``w(lo..hi)``: ``-`` for values <= 0, ``+`` otherwise."""
    return "".join("-" if w(z) <= 0 else "+" for z in range(lo, hi + 1))


def _left_simple(w: AffinePermutation, i: int) -> AffinePermutation:
    """``s_i * w``: swap the values congruent to ``i`` and ``i + 1`` mod ``n``."""
    n = w.n
    lo_res, hi_res = i % n, (i + 1) % n
    out = []
    for v in w.window:
        r = v % n
        if r == lo_res:
            out.append(v + 1)
        elif r == hi_res:
            out.append(v - 1)
        else:
            out.append(v)
    return AffinePermutation(tuple(out))


def p_stable_elements(n: int, p: int) -> Iterator[AffinePermutation]:
    """Every ``p``-stable affine permutation of period ``n`` (there are ``p**(n-1)``).

    Breadth-first search from the identity through left multiplication by simple
    transpositions; the ``p``-stable set is closed under this adjacency.
    """
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")
    start = identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        yield w
        for i in range(1, n + 1):
            v = _left_simple(w, i)
            if v not in seen and is_p_stable(v, p):
                seen.add(v)
                queue.append(v)


def dominant_p_stable(n: int, p: int) -> list[AffinePermutation]:
    """Dominant ``p``-stable permutations, found without Dyck paths or abaci."""
    return sorted((w for w in p_stable_elements(n, p) if is_dominant(w)), key=lambda w: w.window)


def dominant_by_inverse_windows(n: int, spread: int) -> Iterator[AffinePermutation]:
    """Brute force: every dominant ``w`` whose inverse window lies in ``[1 - spread, n + spread]``.

    Increasing windows with distinct residues and the right sum are exactly the
    Grassmannian permutations; inverting gives the dominant ones.
    """
    target = n * (n + 1) // 2
    lo, hi = 1 - spread, n + spread

    def rec(start: int, left: int, acc: list[int], residues: set[int]) -> Iterator[tuple[int, ...]]:
        if left == 0:
            if sum(acc) == target:
                yield tuple(acc)
            return
        for v in range(start, hi + 1):
            if v % n in residues:
                continue
            acc.append(v)
            residues.add(v % n)
            yield from rec(v + 1, left - 1, acc, residues)
            acc.pop()
            residues.discard(v % n)

    for win in rec(lo, n, [], set()):
        yield inverse(AffinePermutation(win))


def all_windows_up_to_length(n: int, max_length: int) -> list[AffinePermutation]:
    """Every affine permutation of length at most ``max_length`` (BFS on right multiplication)."""
    start = identity(n)
    gens = [simple(n, i) for i in range(1, n + 1)]
    seen = {start}
    frontier = [start]
    out = [start]
    for _ in range(max_length):
        nxt = []
        for u in frontier:
            for s in gens:
                v = compose(u, s)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        out.extend(nxt)
        frontier = nxt
    return out
