"""Numeric identities linking chain data to surface invariants.

Notation: ``S`` is the minimal model, ``X -> S`` is ``m`` blow-ups, ``X -> W``
contracts the T-chain ``C`` of length ``r``.  ``lambda = K_S . pi(C)`` is always
an input here; nothing in this package derives it from geometry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .hj import Chain
from .tchain import TChain, classify

__all__ = [
    "SurfaceInvariants",
    "StructuralReport",
    "kw2_from",
    "chain_canonical_degree",
    "lemma_int_value",
    "structural_identity_check",
    "chi_relation",
    "log_bmy_check",
]


@dataclass(frozen=True)
class SurfaceInvariants:
    ks2: int
    kw2: int
    chi: int
    chi_top: int
    num_blowups: int
    lam: int


def kw2_from(ks2: int, m: int, r: int, d: int) -> int:
    """``K_W^2 = K_S^2 - m + r - d + 1``."""
    return ks2 - m + r - d + 1


def chain_canonical_degree(chain: Iterable[int]) -> int:
    """``K_X . sum C_j = sum (b_j - 2)``; equals ``r - d + 2`` on T-chains."""
    c = chain if isinstance(chain, Chain) else Chain(chain)
    if not isinstance(classify(c), TChain):
        raise DomainError(f"{c} is not a T-chain")
    return sum(c) - 2 * len(c)


def lemma_int_value(r: int, d: int, lam: int) -> int:
    """Required value of ``(sum E_i) . (sum C_j)``: ``r - d + 2 - lambda``."""
    return r - d + 2 - lam


@dataclass(frozen=True)
class StructuralReport:
    status: str  # "pass", "fail" or "not-applicable"
    s: int = 0
    middle_sum: int = 0
    expected: int = 0

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def structural_identity_check(chain: Iterable[int]) -> StructuralReport:
    """For ``[2 x s, x_1, ..., x_{r-s-1}, s + 2]`` check ``sum (x_i - 2) = r - s - d + 2``."""
    c = chain if isinstance(chain, Chain) else Chain(chain)
    s = 0
    while s < len(c) and c[s] == 2:
        s += 1
    cls = classify(c)
    if s == 0 or s >= len(c) - 1 or c[-1] != s + 2 or not isinstance(cls, TChain):
        return StructuralReport("not-applicable", s)
    middle = sum(x - 2 for x in c[s:-1])
    expected = len(c) - s - cls.params.d + 2
    return StructuralReport("pass" if middle == expected else "fail", s, middle, expected)


def chi_relation(kw2: int, chi_top: int, d: int) -> Fraction:
    """``chi(O_W) = (K_W^2 + chi_top(W) + d - 1) / 12``; callers check integrality."""
    return Fraction(kw2 + chi_top + d - 1, 12)


def log_bmy_check(d: int, n: int, chi: int, kw2: int) -> bool:
    """``d - 1/(d n^2) <= 12 chi - 4/3 K_W^2`` in exact arithmetic."""
    return d - Fraction(1, d * n * n) <= 12 * chi - Fraction(4, 3) * kw2
