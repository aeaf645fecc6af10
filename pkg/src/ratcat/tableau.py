"""Staircase tableaux: nonnegative integers indexed by pairs i < j in [n].

Shared shape of inversion tables, rational Shi tableaux and codinv tableaux.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Mapping


@dataclass(frozen=True)
class StaircaseTableau:
    n: int
    rows: tuple[tuple[int, ...], ...]  # rows[i-1] = (t[i,i+1], ..., t[i,n])

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if len(rows) != max(self.n - 1, 0):
            raise ValueError(f"expected {self.n - 1} rows, got {len(rows)}")
        for i, r in enumerate(rows, start=1):
            if len(r) != self.n - i:
                raise ValueError(f"row {i} should have {self.n - i} entries, got {len(r)}")
            if any(v < 0 for v in r):
                raise ValueError(f"row {i} has a negative entry")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def build(cls, n: int, entry: Callable[[int, int], int]) -> "StaircaseTableau":
        return cls(n, tuple(tuple(entry(i, j) for j in range(i + 1, n + 1)) for i in range(1, n)))

    @classmethod
    def from_mapping(cls, n: int, entries: Mapping[tuple[int, int], int]) -> "StaircaseTableau":
        return cls.build(n, lambda i, j: entries[i, j])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 1 <= i < j <= self.n:
            raise KeyError(ij)
        return self.rows[i - 1][j - i - 1]

    def items(self):
        for i in range(1, self.n):
            for j in range(i + 1, self.n + 1):
                yield (i, j), self[i, j]

    def total(self) -> int:
        return sum(map(sum, self.rows))

    def transpose(self) -> "StaircaseTableau":
        """Reflect across the anti-diagonal: entry (i, j) moves to (n+1-j, n+1-i)."""
        n = self.n
        return StaircaseTableau.build(n, lambda i, j: self[n + 1 - j, n + 1 - i])

    def entrywise_le(self, other: "StaircaseTableau") -> bool:
        return all(v <= other[ij] for ij, v in self.items())

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "entries": [[i, j, v] for (i, j), v in self.items()]})

    @classmethod
    def from_json(cls, text: str) -> "StaircaseTableau":
        data = json.loads(text)
        return cls.from_mapping(data["n"], {(i, j): v for i, j, v in data["entries"]})

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "StaircaseTableau":
        rows = tuple(tuple(int(x) for x in ln.split()) for ln in text.splitlines() if ln.strip())
        if n is None:
            n = len(rows) + 1
        return cls(n, rows)
