"""Rational Dyck paths and the maps between paths, cores and affine permutations.

A path in the ``p x n`` rectangle starts at the origin, takes ``n`` North and
``p`` East steps, and never dips below the line from ``(0, 0)`` to ``(p, n)``.
The point ``(i, j)`` (``i`` East steps, ``j`` North steps) carries the label
``j*p - i*n``; a step is labelled by its starting point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import comb, gcd
from typing import Iterator

from .abacus import alpha, alpha_inv
from .affine import AffinePermutation, gamma, gamma_inv
from .partition import (
    Partition,
    conjugate,
    first_column_hooks,
    from_first_column_hooks,
    is_simultaneous_core,
)
from .tableau import StaircaseTableau


@dataclass(frozen=True)
class RationalDyckPath:
    n: int
    p: int
    word: str

    def __post_init__(self):
        if self.n < 1 or self.p < 1:
            raise ValueError("n and p must be positive")
        if gcd(self.n, self.p) != 1:
            raise ValueError(f"gcd({self.n}, {self.p}) != 1")
        word = self.word.upper()
        bad = [k for k, c in enumerate(word, start=1) if c not in "NE"]
        if bad:
            raise ValueError(f"step {bad[0]} is {word[bad[0] - 1]!r}; only N and E allowed")
        if word.count("N") != self.n or word.count("E") != self.p:
            raise ValueError(f"word needs {self.n} N and {self.p} E steps, got "
                             f"{word.count('N')} and {word.count('E')}")
        i = j = 0
        for k, c in enumerate(word, start=1):
            if c == "N":
                j += 1
            else:
                i += 1
            if j * self.p - i * self.n < 0:
                raise ValueError(f"step {k} goes below the diagonal at ({i}, {j})")
        object.__setattr__(self, "word", word)

    def __str__(self) -> str:
        return self.word

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "p": self.p, "word": self.word})

    @classmethod
    def from_json(cls, text: str) -> "RationalDyckPath":
        d = json.loads(text)
        return cls(d["n"], d["p"], d["word"])

    @cached_property
    def _starts(self) -> tuple[tuple[int, int], ...]:
        pts = []
        i = j = 0
        for c in self.word:
            pts.append((i, j))
            if c == "N":
                j += 1
            else:
                i += 1
        return tuple(pts)

    @cached_property
    def east_heights(self) -> tuple[int, ...]:
        """Height of the East step covering column ``i``, for ``i = 1..p``."""
        return tuple(j for (i, j), c in zip(self._starts, self.word) if c == "E")


def step_labels(x: RationalDyckPath) -> tuple[int, ...]:
    return tuple(j * x.p - i * x.n for i, j in x._starts)


def north_labels(x: RationalDyckPath) -> tuple[int, ...]:
    """Labels of the North steps, increasing."""
    return tuple(sorted(lab for lab, c in zip(step_labels(x), x.word) if c == "N"))


def h_set(x: RationalDyckPath) -> frozenset[int]:
    """Positive labels of cells below the path (and hence above the diagonal)."""
    n, p = x.n, x.p
    out = set()
    for i, height in enumerate(x.east_heights, start=1):
        for j in range(height):
            lab = j * p - i * n
            if lab > 0:
                out.add(lab)
    return frozenset(out)


def area(x: RationalDyckPath) -> int:
    return len(h_set(x))


def codinv_tableau(x: RationalDyckPath) -> StaircaseTableau:
    """``d[i, j]`` counts ``h`` in ``H(x)`` with ``l_i < h < l_i + p`` and ``h = l_j`` mod ``n``."""
    n, p = x.n, x.p
    labels = north_labels(x)
    hs = h_set(x)

    def entry(i: int, j: int) -> int:
        li, res = labels[i - 1], labels[j - 1] % n
        return sum(1 for h in hs if li < h < li + p and h % n == res)

    return StaircaseTableau.build(n, entry)


def complement(x: RationalDyckPath) -> tuple[int, ...]:
    """Row lengths, top to bottom, of the partition left of the path in the rectangle.

    Always exactly ``n`` entries; trailing zeros are kept.
    """
    xs = [i for (i, _), c in zip(x._starts, x.word) if c == "N"]
    return tuple(reversed(xs))


def zeta(x: RationalDyckPath) -> RationalDyckPath:
    """Reorder the steps of ``x`` by increasing label."""
    labels = step_labels(x)
    if len(set(labels)) != len(labels):
        raise AssertionError("step labels collide; n and p cannot be coprime")
    order = sorted(range(len(labels)), key=labels.__getitem__)
    return RationalDyckPath(x.n, x.p, "".join(x.word[k] for k in order))


def anderson_phi(x: RationalDyckPath) -> Partition:
    """Core whose first-column hook lengths are ``H(x)``."""
    return from_first_column_hooks(h_set(x))


def anderson_phi_inv(kappa: Partition, n: int, p: int) -> RationalDyckPath:
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")
    if not is_simultaneous_core(kappa, n, p):
        raise ValueError(f"{tuple(kappa)} is not an ({n},{p})-core")
    hooks = first_column_hooks(kappa)
    heights = []
    for i in range(1, p + 1):
        # lowest height keeping the path weakly above the diagonal at x = i
        h = -(-i * n // p)
        for j in range(h, n):
            if j * p - i * n in hooks:
                h = j + 1
        heights.append(h)
    word = []
    level = 0
    for h in heights:
        word.append("N" * (h - level) + "E")
        level = h
    word.append("N" * (n - level))
    x = RationalDyckPath(n, p, "".join(word))
    if h_set(x) != hooks:
        raise ValueError(f"{tuple(kappa)} has no Dyck path in D_({n},{p})")
    return x


def rank_complement(x: RationalDyckPath) -> RationalDyckPath:
    """Path of the conjugate core."""
    return anderson_phi_inv(conjugate(anderson_phi(x)), x.n, x.p)


def eta(x: RationalDyckPath) -> RationalDyckPath:
    return zeta(rank_complement(x))


def anderson_map(w: AffinePermutation, p: int) -> RationalDyckPath:
    """Dominant ``p``-stable permutation -> Dyck path, via its core."""
    return anderson_phi_inv(alpha_inv(gamma(w)), w.n, p)


def anderson_map_inv(x: RationalDyckPath) -> AffinePermutation:
    return gamma_inv(alpha(anderson_phi(x)), x.n)


def rational_catalan(n: int, p: int) -> int:
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")
    return comb(n + p, n) // (n + p)


def enumerate_paths(n: int, p: int) -> Iterator[RationalDyckPath]:
    """All of ``D(n, p)`` in lexicographic order of the word with ``N < E``."""
    if gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")
    buf: list[str] = []

    def rec(i: int, j: int) -> Iterator[str]:
        if i == p and j == n:
            yield "".join(buf)
            return
        if j < n:
            buf.append("N")
            yield from rec(i, j + 1)
            buf.pop()
        if i < p and j * p - (i + 1) * n >= 0:
            buf.append("E")
            yield from rec(i + 1, j)
            buf.pop()

    for word in rec(0, 0):
        yield RationalDyckPath(n, p, word)


def highest_path(n: int, p: int) -> RationalDyckPath:
    return RationalDyckPath(n, p, "N" * n + "E" * p)


def lowest_path(n: int, p: int) -> RationalDyckPath:
    """The path of area zero: step East whenever the diagonal allows."""
    word = []
    i = j = 0
    while i < p or j < n:
        if i < p and j * p - (i + 1) * n >= 0:
            word.append("E")
            i += 1
        else:
            word.append("N")
            j += 1
    return RationalDyckPath(n, p, "".join(word))


def simultaneous_cores(n: int, p: int) -> list[Partition]:
    """All ``n,p``-cores for coprime ``n, p`` (one per Dyck path)."""
    return [anderson_phi(x) for x in enumerate_paths(n, p)]


def zeta_inverse_table(n: int, p: int) -> dict[RationalDyckPath, RationalDyckPath]:
    """``{zeta(x): x}`` over ``D(n, p)``; raises if zeta is not injective."""
    table: dict[RationalDyckPath, RationalDyckPath] = {}
    for x in enumerate_paths(n, p):
        z = zeta(x)
        if z in table:
            raise AssertionError(f"zeta collision: {table[z]} and {x} both map to {z}")
        table[z] = x
    return table
