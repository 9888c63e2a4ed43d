"""Discrepancies of a contracted chain.

Contracting a chain ``C_1, ..., C_r`` (``C_i^2 = -b_i``) by ``phi: X -> W`` gives
``K_X = phi^* K_W + sum_i mu_i C_i``.  Intersecting with each ``C_i`` and
using adjunction ``K_X . C_i = b_i - 2`` yields a tridiagonal system for the
``mu_i``.

For a T-chain with parameters ``(d, n, a)`` as returned by
:func:`tsing.tchain.classify`, the first entry carries ``-1 + a/n`` and the
last carries ``-1 + (n - a)/n``.  This orientation is checked over the whole
enumeration in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, InputError
from .hj import Chain
from .tchain import DuVal, TChain, classify

__all__ = ["IncidenceProfile", "discrepancies", "contracted_degree", "end_discrepancies"]


def discrepancies(chain: Iterable[int]) -> tuple[Fraction, ...]:
    """Solve ``sum_j mu_j (C_j . C_i) = b_i - 2`` exactly.

    Forward elimination on the tridiagonal matrix with diagonal ``-b_i`` and
    off-diagonal ``1``, then back substitution.
    """
    c = chain if isinstance(chain, Chain) else Chain(chain)
    r = len(c)
    diag = [Fraction(-b) for b in c]
    rhs = [Fraction(b - 2) for b in c]
    for i in range(1, r):
        factor = 1 / diag[i - 1]
        diag[i] -= factor
        rhs[i] -= factor * rhs[i - 1]
    mu = [Fraction(0)] * r
    mu[-1] = rhs[-1] / diag[-1]
    for i in range(r - 2, -1, -1):
        mu[i] = (rhs[i] - mu[i + 1]) / diag[i]
    # negative definite chain with b_i >= 2: log terminal, -1 < mu_i <= 0
    assert all(-1 < x <= 0 for x in mu), mu
    return tuple(mu)


def end_discrepancies(n: int, a: int) -> tuple[Fraction, Fraction]:
    """Closed form for the two end discrepancies of a T-chain, first end first."""
    return Fraction(a, n) - 1, Fraction(n - a, n) - 1


@dataclass(frozen=True)
class IncidenceProfile:
    """How a curve ``F`` meets the chain.

    ``meets`` maps 1-based chain positions to intersection multiplicities;
    ``kx`` is ``F . K_X`` (``-1`` for a (-1)-curve).
    """

    meets: Mapping[int, int]
    kx: int = -1

    def __post_init__(self):
        for i, mult in self.meets.items():
            if not isinstance(i, int) or not isinstance(mult, int) or mult < 1:
                raise InputError(f"bad incidence {i}:{mult}; need position:multiplicity >= 1")

    @classmethod
    def parse(cls, text: str, kx: int = -1) -> "IncidenceProfile":
        """Parse ``"1:1,3:2"``; repeated positions add up."""
        meets: dict[int, int] = {}
        try:
            for item in text.split(","):
                pos, _, mult = item.partition(":")
                meets[int(pos)] = meets.get(int(pos), 0) + int(mult or 1)
        except ValueError:
            raise InputError(f"bad incidence list {text!r}; expected e.g. 1:1,3:1") from None
        return cls(meets, kx)


def contracted_degree(chain: Iterable[int], profile: IncidenceProfile) -> Fraction:
    """``phi(F) . K_W = F . K_X - sum_i mu_i (F . C_i)``."""
    c = chain if isinstance(chain, Chain) else Chain(chain)
    if not isinstance(classify(c), (TChain, DuVal)):
        raise DomainError(f"{c} is neither a T-chain nor du Val")
    for i in profile.meets:
        if not 1 <= i <= len(c):
            raise InputError(f"position {i} outside chain of length {len(c)}")
    mu = discrepancies(c)
    return profile.kx - sum(mu[i - 1] * mult for i, mult in profile.meets.items())
