"""Root multiplicities by the Peterson recurrence, in exact arithmetic.

For a symmetric generalized Cartan matrix with diagonal 2, the form
(.,.) of :func:`rootmult.gcm.symmetric_form` and the normalization
(rho, alpha_i) = 1 give, for every weight lam of height >= 2,

    ((lam, lam) - 2 (rho, lam)) * c_lam
        = sum over mu + nu = lam, mu, nu > 0 of (mu, nu) * c_mu * c_nu,

where c_lam = sum over k >= 1 dividing lam of mult(lam / k) / k.  Solving
for c_lam weight by weight and peeling off the divisor terms recovers the
multiplicities.  This scales to far greater heights than the tensor
algebra, at the price of being a recurrence rather than a construction.

The left factor (lam, lam) - 2 ht(lam) vanishes for some weights (for
instance weight (1, 0, 1) of any chain matrix).  Such a weight is never a
root: imaginary roots have (lam, lam) <= 0 and positive height, and
non-simple real roots have (lam, lam) = 2 and height >= 2, so the factor
is strictly negative for every non-simple root.  The recurrence therefore
reports multiplicity 0 there, after checking that the right-hand side
vanishes as consistency demands; a nonzero right-hand side would mean the
implementation is broken and raises rather than guessing.
"""
from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Sequence

from .gcm import GeneralizedCartanMatrix, WeightVector


class RecurrenceError(RuntimeError):
    """Recurrence produced an inconsistent or non-integral value: a bug, not data."""


def rho_pairing(A: GeneralizedCartanMatrix, lam: WeightVector | Sequence[int]) -> int:
    """(rho, lam) under the normalization (rho, alpha_i) = 1: the height of lam."""
    if not A.is_symmetric:
        raise ValueError("rho pairing requires a symmetric Cartan matrix")
    return WeightVector.of(lam).height


class MultiplicityTable:
    """Memoized multiplicities and c-values for one algebra.

    Internally c-values are stored as integer numerators over one shared
    denominator (the lcm of 1..H for the largest height H seen), so the
    convolution runs on plain integers; every division is checked exact.
    A table is bound to one algebra and guarded by a lock, so it may be
    shared across threads; fresh tables give identical values.
    """

    def __init__(self, A: GeneralizedCartanMatrix) -> None:
        if not A.is_symmetric:
            raise ValueError("recurrence requires a symmetric Cartan matrix")
        self.algebra = A
        self._mult: dict[tuple[int, ...], int] = {}
        self._cnum: dict[tuple[int, ...], int] = {}
        self._denom = 1
        self._lock = threading.RLock()
        r = A.rank
        self._gram = tuple(tuple(A[i, j] for j in range(r)) for i in range(r))

    def _form(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        g = self._gram
        return sum(
            xi * sum(gij * yj for gij, yj in zip(gi, y))
            for xi, gi in zip(x, g)
            if xi
        )

    def _grow_denominator(self, height: int) -> None:
        # never shrink: queries can arrive in any height order
        target = lcm(self._denom, *range(2, height + 1)) if height > 1 else self._denom
        if target == self._denom:
            return
        factor = target // self._denom
        self._cnum = {w: c * factor for w, c in self._cnum.items()}
        self._denom = target

    def _box(self, lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        # rank 3 dominates every hot path; the explicit loops are measurably
        # faster than itertools.product there
        if len(lam) == 3:
            l0, l1, l2 = lam
            for x in range(l0 + 1):
                for y in range(l1 + 1):
                    for z in range(l2 + 1):
                        yield (x, y, z)
            return
        yield from itertools.product(*(range(c + 1) for c in lam))

    def _convolution(self, lam: tuple[int, ...]) -> int:
        """Right-hand side, scaled by denom**2; pairs are halved by symmetry."""
        cnum = self._cnum
        total = 0
        for mu in self._box(lam):
            a = cnum.get(mu)
            if not a:
                continue
            nu = tuple(l - m for l, m in zip(lam, mu))
            if mu > nu:
                continue
            if not any(nu):
                continue
            b = cnum.get(nu)
            if not b:
                continue
            term = self._form(mu, nu) * a * b
            total += term if mu == nu else 2 * term
        return total

    def _cell(self, lam: tuple[int, ...]) -> None:
        height = sum(lam)
        denom = self._denom
        if height == 1:
            self._mult[lam] = 1
            self._cnum[lam] = denom
            return
        g = 0
        for c in lam:
            g = gcd(g, c)
        divisor_part = 0  # sum of mult(lam/k)/k for k >= 2, scaled by denom
        for k in range(2, g + 1):
            if g % k:
                continue
            divisor_part += self._mult[tuple(c // k for c in lam)] * (denom // k)
        lead = self._form(lam, lam) - 2 * height
        rhs = self._convolution(lam)
        if lead == 0:
            if rhs != 0:
                raise RecurrenceError(
                    f"recurrence singular at weight {lam}: zero left factor "
                    f"with nonzero right-hand side"
                )
            self._mult[lam] = 0
            self._cnum[lam] = divisor_part
            return
        cnum, rem = divmod(rhs, denom * lead)
        if rem:
            raise RecurrenceError(f"internal consistency failure: c-value at {lam} not exact")
        mult, rem = divmod(cnum - divisor_part, denom)
        if rem or mult < 0:
            raise RecurrenceError(
                f"internal consistency failure: multiplicity at {lam} "
                f"is {Fraction(cnum - divisor_part, denom)}"
            )
        self._mult[lam] = mult
        self._cnum[lam] = cnum

    def _ensure(self, lam: tuple[int, ...]) -> None:
        if lam in self._mult:
            return
        self._grow_denominator(sum(lam))
        # lexicographic fill of the box visits every componentwise-smaller
        # weight first, which is all a cell depends on
        for mu in self._box(lam):
            if any(mu) and mu not in self._mult:
                self._cell(mu)

    def multiplicity(self, lam: WeightVector | Sequence[int]) -> int:
        """mult(lam); 0 for weights that are not roots."""
        lam = WeightVector.of(lam)
        if lam.rank != self.algebra.rank:
            raise ValueError(f"weight length {lam.rank} does not match rank {self.algebra.rank}")
        if lam.height < 1:
            raise ValueError("weight must have height >= 1")
        with self._lock:
            self._ensure(lam.coeffs)
            return self._mult[lam.coeffs]

    def c_value(self, lam: WeightVector | Sequence[int]) -> Fraction:
        """The auxiliary c_lam = sum over k dividing lam of mult(lam/k)/k."""
        lam = WeightVector.of(lam)
        if lam.rank != self.algebra.rank:
            raise ValueError(f"weight length {lam.rank} does not match rank {self.algebra.rank}")
        if lam.height < 1:
            raise ValueError("weight must have height >= 1")
        with self._lock:
            self._ensure(lam.coeffs)
            return Fraction(self._cnum[lam.coeffs], self._denom)

    def computed(self) -> dict[WeightVector, int]:
        """Snapshot of every memoized multiplicity."""
        with self._lock:
            return {WeightVector(w): m for w, m in self._mult.items()}


def peterson_mult(table: MultiplicityTable, lam: WeightVector | Sequence[int]) -> int:
    """Multiplicity of ``lam`` from the table, memoizing all subweights."""
    return table.multiplicity(lam)
