"""Abaci: subsets of Z that contain everything far below and nothing far above.

An abacus is stored by its nonnegative beads and its negative gaps, which is
finite and unique. The maps ``alpha`` and ``beta`` send a partition to the
balanced and normalised abacus of its beta-numbers respectively.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InvariantViolation
from .partition import Partition, first_column_hooks, from_first_column_hooks


@dataclass(frozen=True)
class Abacus:
    pos_beads: tuple[int, ...] = ()
    neg_gaps: tuple[int, ...] = ()

    def __post_init__(self):
        beads = tuple(sorted(set(self.pos_beads)))
        gaps = tuple(sorted(set(self.neg_gaps)))
        if beads and beads[0] < 0:
            raise ValueError("pos_beads must be nonnegative")
        if gaps and gaps[-1] >= 0:
            raise ValueError("neg_gaps must be negative")
        object.__setattr__(self, "pos_beads", beads)
        object.__setattr__(self, "neg_gaps", gaps)

    @classmethod
    def from_window(cls, lo: int, hi: int, beads: Iterable[int]) -> "Abacus":
        """Abacus equal to ``{z < lo}`` together with ``beads`` (all in ``[lo, hi]``)."""
        beads = set(beads)
        if any(z < lo or z > hi for z in beads):
            raise ValueError("beads outside the stated window")
        pos = [z for z in beads if z >= 0] + list(range(0, lo))
        neg = [z for z in range(lo, 0) if z not in beads]
        return cls(tuple(pos), tuple(neg))

    def __contains__(self, z: int) -> bool:
        if z >= 0:
            return z in self._bead_set
        return z not in self._gap_set

    @cached_property
    def _bead_set(self) -> frozenset[int]:
        return frozenset(self.pos_beads)

    @cached_property
    def _gap_set(self) -> frozenset[int]:
        return frozenset(self.neg_gaps)

    def bounds(self) -> tuple[int, int]:
        """``(lo, hi)`` with every ``z < lo`` a bead and every ``z > hi`` a gap."""
        lo = self.neg_gaps[0] if self.neg_gaps else 0
        hi = self.pos_beads[-1] if self.pos_beads else -1
        return lo, max(hi, lo - 1)

    @property
    def is_normalised(self) -> bool:
        return not self.neg_gaps and 0 not in self._bead_set

    @property
    def is_balanced(self) -> bool:
        positive = sum(1 for z in self.pos_beads if z > 0)
        nonpositive_gaps = len(self.neg_gaps) + (0 not in self._bead_set)
        return positive == nonpositive_gaps

    def charge(self) -> int:
        """Positive beads minus nonpositive gaps; zero exactly when balanced."""
        positive = sum(1 for z in self.pos_beads if z > 0)
        return positive - len(self.neg_gaps) - (0 not in self._bead_set)

    def runner_min_gaps(self, n: int) -> list[int]:
        """Minimal gap on each runner ``c = 1..n`` (residue class of ``c`` mod ``n``)."""
        lo, hi = self.bounds()
        out = []
        for c in range(1, n + 1):
            z = lo - 1 - ((lo - 1 - c) % n)
            while z in self:
                z += n
            out.append(z)
        return out

    def __str__(self) -> str:
        return format_abacus(self)


def is_flush(A: Abacus, n: int) -> bool:
    """True iff ``z - n`` is a bead for every bead ``z``."""
    if n < 1:
        raise ValueError("n must be positive")
    if any((z - n) not in A for z in A.pos_beads):
        return False
    # negative beads z with z - n a negative gap
    return all((g + n) not in A for g in A.neg_gaps)


def shift(A: Abacus, d: int) -> Abacus:
    """The abacus ``{z + d : z in A}``."""
    lo, hi = A.bounds()
    beads = [z + d for z in range(lo, hi + 1) if z in A]
    return Abacus.from_window(lo + d, hi + d, beads)


def alpha(kappa: Partition) -> Abacus:
    """Balanced abacus ``{kappa_i + 1 - i : i >= 1}``."""
    ell = len(kappa)
    beads = [kappa[i - 1] + 1 - i for i in range(1, ell + 1)]
    lo = 1 - ell
    return Abacus.from_window(lo, max(beads, default=lo - 1), beads)


def alpha_inv(A: Abacus) -> Partition:
    if not A.is_balanced:
        raise ValueError(f"abacus {format_abacus(A)} is not balanced")
    lo, hi = A.bounds()
    beads = sorted((z for z in range(lo, hi + 1) if z in A), reverse=True)
    parts = [b - 1 + i for i, b in enumerate(beads, start=1)]
    # beads below lo continue consecutively; balance makes those parts vanish
    if lo - 1 + len(beads) != 0:
        raise InvariantViolation(f"balanced abacus {format_abacus(A)} left a nonzero tail")
    return Partition.from_vector(parts)


def beta(kappa: Partition) -> Abacus:
    """Normalised abacus: first-column hook lengths together with all negatives."""
    return Abacus(tuple(first_column_hooks(kappa)), ())


def beta_inv(A: Abacus) -> Partition:
    if not A.is_normalised:
        raise ValueError(f"abacus {format_abacus(A)} is not normalised")
    return from_first_column_hooks(A.pos_beads)


_ABACUS_RE = re.compile(r"^\s*beads:\{([^}]*)\};\s*gaps:\{([^}]*)\}\s*$")


def format_abacus(A: Abacus) -> str:
    return "beads:{%s};gaps:{%s}" % (",".join(map(str, A.pos_beads)), ",".join(map(str, A.neg_gaps)))


def parse_abacus(text: str) -> Abacus:
    m = _ABACUS_RE.match(text)
    if not m:
        raise ValueError(f"abacus must look like 'beads:{{...}};gaps:{{...}}', got {text!r}")

    def ints(chunk: str, what: str) -> tuple[int, ...]:
        chunk = chunk.strip()
        if not chunk:
            return ()
        out = []
        for k, tok in enumerate(chunk.split(","), start=1):
            try:
                out.append(int(tok))
            except ValueError:
                raise ValueError(f"{what} entry {k} is not an integer: {tok.strip()!r}") from None
        return tuple(out)

    return Abacus(ints(m.group(1), "beads"), ints(m.group(2), "gaps"))


def render_runners(A: Abacus, n: int, rows: int | None = None) -> str:
    """Text picture on ``n`` runners; ``o`` bead, ``.`` gap, one level per line.

    Level ``k`` shows positions ``k*n + 1 .. k*n + n``, highest level first.
    """
    lo, hi = A.bounds()
    top = max(hi, 0) // n + 1
    bottom = (min(lo, 1) - 1) // n - 1
    if rows is not None:
        bottom = top - rows + 1
    lines = []
    for k in range(top, bottom - 1, -1):
        cells = ["o" if k * n + c in A else "." for c in range(1, n + 1)]
        lines.append(f"{k * n + 1:>5} " + " ".join(cells))
    return "\n".join(lines)
