"""Exact rank computations via fraction-free integer elimination on sparse rows."""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def _normalized(row: dict[bytes, int]) -> dict[bytes, int]:
    g = 0
    for c in row.values():
        g = gcd(g, c)
    if g > 1:
        row = {w: c // g for w, c in row.items()}
    if row[min(row)] < 0:
        row = {w: -c for w, c in row.items()}
    return row


class EchelonBasis:
    """Row-echelon basis of integer sparse rows, built incrementally.

    Rows are maps from word keys (bytes) to integer coefficients.  Insertion
    eliminates the incoming row against the stored pivots by integer
    cross-multiplication followed by content-gcd division, so all arithmetic
    stays in the integers and the span is tracked exactly over the rationals.
    Stored rows are never mutated, which makes shallow copies cheap.
    """

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[bytes, dict[bytes, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def copy(self) -> "EchelonBasis":
        clone = EchelonBasis()
        clone.pivots = dict(self.pivots)
        return clone

    def insert(self, row: Mapping[bytes, int]) -> bool:
        """Reduce ``row`` against the basis; keep it if independent.

        Returns True when the rank increased.
        """
        work = {w: c for w, c in row.items() if c}
        while work:
            lead = min(work)
            pivot = self.pivots.get(lead)
            if pivot is None:
                self.pivots[lead] = _normalized(work)
                return True
            a = pivot[lead]
            b = work[lead]
            merged = {w: a * c for w, c in work.items()}
            for w, c in pivot.items():
                v = merged.get(w, 0) - b * c
                if v:
                    merged[w] = v
                else:
                    merged.pop(w, None)
            work = merged
        return False

    def contains(self, row: Mapping[bytes, int]) -> bool:
        """True when ``row`` lies in the span of the basis (no mutation)."""
        return not self.copy().insert(row)

    def insert_all(self, rows: Iterable[Mapping[bytes, int]]) -> int:
        """Insert rows in order; return how many increased the rank."""
        return sum(1 for row in rows if self.insert(row))


def matrix_rank(rows: Iterable[Mapping[bytes, int]]) -> int:
    """Exact rank over the rationals of a family of sparse integer rows."""
    basis = EchelonBasis()
    basis.insert_all(rows)
    return basis.rank
