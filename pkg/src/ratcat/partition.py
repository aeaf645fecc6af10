"""Partitions, hook lengths, simultaneous cores and the skew length statistic.

Cells are 1-based with (1, 1) the top-left corner, rows counted from the top.
For a nonempty partition the corner cell carries the maximal hook length.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvariantViolation


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for k, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"part {k + 1} is {x}; parts must be positive")
            if k and x > parts[k - 1]:
                raise ValueError(f"parts not weakly decreasing at position {k + 1}: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_vector(cls, vector: Iterable[int]) -> "Partition":
        """Drop trailing zeros, e.g. ``(11, 6, 0)`` -> ``(11, 6)``."""
        return cls(x for x in vector if x != 0)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def conjugate(self) -> "Partition":
        return conjugate(self)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; the empty string is the empty partition."""
    text = text.strip()
    if text in ("", "()", "[]"):
        return Partition()
    text = text.strip("()[]")
    parts = []
    for k, tok in enumerate(text.split(","), start=1):
        tok = tok.strip()
        try:
            parts.append(int(tok))
        except ValueError:
            raise ValueError(f"partition entry {k} is not an integer: {tok!r}") from None
    return Partition(parts)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def hook_length(lam: Partition, i: int, j: int) -> int:
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"({i}, {j}) is not a cell of {tuple(lam)}")
    conj = conjugate(lam)
    return lam[i - 1] - j + conj[j - 1] - i + 1


@lru_cache(maxsize=4096)
def hook_table(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Row-by-row hook lengths; ``hook_table(lam)[i-1][j-1]`` is the hook of cell (i, j)."""
    conj = conjugate(lam)
    return tuple(
        tuple(row - j + conj[j - 1] - i + 1 for j in range(1, row + 1))
        for i, row in enumerate(lam, start=1)
    )


@lru_cache(maxsize=None)
def hook_set(lam: Partition) -> frozenset[int]:
    return frozenset(h for row in hook_table(lam) for h in row)


def is_core(lam: Partition, n: int) -> bool:
    """True when no cell of ``lam`` has hook length ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return n not in hook_set(lam)


def is_simultaneous_core(lam: Partition, n: int, p: int) -> bool:
    return is_core(lam, n) and is_core(lam, p)


def is_core_by_flush(lam: Partition, n: int) -> bool:
    """Flush criterion: ``z + n`` in the first-column hooks forces ``z`` there too (z >= 0)."""
    first = first_column_hooks(lam)
    return all(h - n in first for h in first if h - n > 0) and n not in first


def first_column_hooks(lam: Partition) -> frozenset[int]:
    return frozenset(row[0] for row in hook_table(lam))


def first_row_hooks(lam: Partition) -> frozenset[int]:
    return frozenset(hook_table(lam)[0]) if lam else frozenset()


def max_hook(lam: Partition) -> int | None:
    return hook_table(lam)[0][0] if lam else None


def hr(lam: Partition, h: int) -> frozenset[int]:
    """Hook lengths of the row whose first-column cell has hook ``h`` (empty if none)."""
    for row in hook_table(lam):
        if row[0] == h:
            return frozenset(row)
    return frozenset()


def hc(lam: Partition, h: int) -> frozenset[int]:
    """Hook lengths of the column whose top cell has hook ``h`` (empty if none)."""
    table = hook_table(lam)
    if not table:
        return frozenset()
    for j, top in enumerate(table[0]):
        if top == h:
            return frozenset(row[j] for row in table if len(row) > j)
    return frozenset()


def _require_core(lam: Partition, *moduli: int) -> None:
    for n in moduli:
        if not is_core(lam, n):
            raise ValueError(f"{tuple(lam)} is not a {n}-core")


def n_rows(kappa: Partition, n: int) -> tuple[int, ...]:
    """Leftmost hook lengths of the ``n``-rows of an ``n``-core, decreasing."""
    _require_core(kappa, n)
    first = first_column_hooks(kappa)
    return tuple(sorted((h for h in first if h + n not in first), reverse=True))


def p_columns(kappa: Partition, p: int) -> tuple[int, ...]:
    """Top hook lengths of the ``p``-columns of a ``p``-core, decreasing."""
    _require_core(kappa, p)
    top = first_row_hooks(kappa)
    return tuple(sorted((h for h in top if h + p not in top), reverse=True))


def h_np(kappa: Partition, n: int, p: int) -> tuple[int, ...]:
    """Sorted multiset of hooks of cells lying in an ``n``-row and a ``p``-column."""
    _require_core(kappa, n, p)
    table = hook_table(kappa)
    if not table:
        return ()
    rows = set(n_rows(kappa, n))
    cols = set(p_columns(kappa, p))
    col_idx = [j for j, top in enumerate(table[0]) if top in cols]
    out = []
    for row in table:
        if row[0] in rows:
            out.extend(row[j] for j in col_idx if j < len(row))
    return tuple(sorted(out))


def skew_length_armstrong(kappa: Partition, n: int, p: int) -> int:
    """Cells lying in an ``n``-row whose hook length is less than ``p``."""
    _require_core(kappa, n, p)
    rows = set(n_rows(kappa, n))
    return sum(1 for row in hook_table(kappa) if row[0] in rows for h in row if h < p)


def skew_length(kappa: Partition, n: int, p: int) -> int:
    """Skew length, computed from both definitions; they must agree."""
    direct = skew_length_armstrong(kappa, n, p)
    refined = len(h_np(kappa, n, p))
    if direct != refined:
        raise InvariantViolation(
            f"skew length mismatch on {tuple(kappa)} for ({n},{p}): {direct} != {refined}"
        )
    return direct


def from_first_column_hooks(hooks: Iterable[int]) -> Partition:
    """The unique partition whose first-column hook lengths are ``hooks``."""
    given = list(hooks)
    hs = sorted(set(given), reverse=True)
    if len(hs) != len(given):
        raise ValueError("hook lengths must be distinct")
    if hs and hs[-1] <= 0:
        raise ValueError("hook lengths must be positive")
    ell = len(hs)
    return Partition(h - ell + i for i, h in enumerate(hs, start=1))


def partitions_of(size: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size

    def rec(rest: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield tuple(prefix)
            return
        for part in range(min(rest, cap), 0, -1):
            prefix.append(part)
            yield from rec(rest - part, part, prefix)
            prefix.pop()

    for parts in rec(size, max_part, []):
        yield Partition(parts)


@lru_cache(maxsize=8)
def _partitions_up_to(max_size: int) -> tuple[Partition, ...]:
    return tuple(lam for k in range(max_size + 1) for lam in partitions_of(k))


def partitions_up_to(max_size: int) -> tuple[Partition, ...]:
    return _partitions_up_to(max_size)


def simultaneous_cores(n: int, p: int, max_size: int) -> list[Partition]:
    """Brute-force list of ``n,p``-cores of size at most ``max_size``.

    Works for any ``n, p`` (coprime or not); the size bound keeps it finite.
    """
    return [lam for lam in partitions_up_to(max_size)
            if n not in hook_set(lam) and p not in hook_set(lam)]
