"""Recognition, generation and enumeration of T-chains.

A T-singularity ``1/(d n^2)(1, d n a - 1)`` with ``gcd(n, a) = 1`` has a
Hirzebruch-Jung chain obtained from ``[4]`` (``d = 1``) or ``[3, 2, ..., 2, 3]``
(``d >= 2``, with ``d - 2`` middle entries) by repeatedly applying one of::

    [b_1, ..., b_r]  ->  [2, b_1, ..., b_r + 1]
    [b_1, ..., b_r]  ->  [b_1 + 1, ..., b_r, 2]

Each step raises the length ``r`` by one and keeps ``d``, so ``k = r - d`` counts
the steps taken from the initial chain.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Union

from .errors import DomainError, InputError
from .hj import Chain, CyclicQuotient, hj_eval, hj_expand, reverse

__all__ = [
    "TParams",
    "DuVal",
    "TChain",
    "NotT",
    "ChainClass",
    "chain_of",
    "classify",
    "t_params",
    "expand_left",
    "expand_right",
    "initial_chain",
    "enumerate_tchains",
    "canonical_orientation",
    "fibonacci",
    "FibonacciReport",
    "verify_fibonacci_bound",
    "is_extremal_form",
    "catalog_record",
]


@dataclass(frozen=True)
class TParams:
    """Parameters ``(d, n, a)`` of ``1/(d n^2)(1, d n a - 1)``; ``n`` is the index."""

    d: int
    n: int
    a: int

    def __post_init__(self):
        d, n, a = self.d, self.n, self.a
        if d < 1:
            raise InputError(f"d must be >= 1, got {d}")
        if n < 2:
            raise InputError(f"n must be >= 2, got {n}")
        if not 0 < a < n or gcd(n, a) != 1:
            raise InputError(f"need 0 < a < n with gcd(n, a) = 1, got n={n}, a={a}")

    @property
    def quotient(self) -> CyclicQuotient:
        d, n, a = self.d, self.n, self.a
        return CyclicQuotient(d * n * n, d * n * a - 1)


@dataclass(frozen=True)
class DuVal:
    """An A_r chain ``[2, ..., 2]``."""

    rank: int


@dataclass(frozen=True)
class TChain:
    params: TParams


@dataclass(frozen=True)
class NotT:
    pass


ChainClass = Union[DuVal, TChain, NotT]


def chain_of(p: TParams) -> Chain:
    return hj_expand(p.quotient)


def _strip(chain: tuple[int, ...]) -> int | None:
    """Undo expansion steps; return ``d`` if an initial chain is reached."""
    c = list(chain)
    while True:
        r = len(c)
        if c == [4]:
            return 1
        if r >= 2 and c[0] == 3 and c[-1] == 3 and all(b == 2 for b in c[1:-1]):
            return r
        if r == 1:
            return None
        if c[0] == 2 and c[-1] == 2:
            # T-chains never carry a (-2)-curve at both ends
            return None
        if c[0] == 2:
            c = c[1:]
            c[-1] -= 1
        elif c[-1] == 2:
            c = c[:-1]
            c[0] -= 1
        else:
            return None
        if min(c) < 2:
            return None


def t_params(x: CyclicQuotient | tuple[int, int]) -> TParams | None:
    """Read ``(d, n, a)`` off ``(m, q)`` arithmetically, or ``None``.

    With ``m = d n^2`` and ``q + 1 = d n a`` one has ``gcd(m, q + 1) = d n``, so
    ``n = m / gcd(m, q + 1)``.
    """
    m, q = x
    g = gcd(m, q + 1)
    n = m // g
    if n < 2 or m % (n * n):
        return None
    d = m // (n * n)
    a = (q + 1) // (d * n)
    if d * n * a != q + 1:
        return None
    return TParams(d, n, a)


def classify(chain: Iterable[int]) -> ChainClass:
    """Decide whether a chain is du Val, a T-chain, or neither.

    T-chains are recognised by stripping expansion steps; ``(n, a)`` are then
    recovered from ``hj_eval`` independently and the two routes must agree on
    ``d``.
    """
    c = chain if isinstance(chain, Chain) else Chain(chain)
    if all(b == 2 for b in c):
        return DuVal(len(c))
    d = _strip(c)
    if d is None:
        return NotT()
    p = t_params(hj_eval(c))
    if p is None or p.d != d:
        raise AssertionError(f"strip and arithmetic recognition disagree on {c}")
    return TChain(p)


def _require_t(chain: Iterable[int]) -> tuple[Chain, TParams]:
    c = chain if isinstance(chain, Chain) else Chain(chain)
    cls = classify(c)
    if not isinstance(cls, TChain):
        raise DomainError(f"{c} is not a T-chain")
    return c, cls.params


def expand_left(chain: Iterable[int]) -> Chain:
    c, _ = _require_t(chain)
    return Chain((2,) + c[:-1] + (c[-1] + 1,))


def expand_right(chain: Iterable[int]) -> Chain:
    c, _ = _require_t(chain)
    return Chain((c[0] + 1,) + c[1:] + (2,))


def initial_chain(d: int) -> Chain:
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    if d == 1:
        return Chain((4,))
    return Chain((3,) + (2,) * (d - 2) + (3,))


def canonical_orientation(chain: Iterable[int]) -> Chain:
    """The lexicographically smaller of a chain and its reverse."""
    c = tuple(chain)
    return Chain(min(c, c[::-1]))


def enumerate_tchains(d: int, k: int, dedupe: bool = False) -> set[Chain]:
    """All T-chains with the given ``d`` and ``r - d = k``.

    Both orientations are kept (``2**k`` chains) unless ``dedupe`` is set, in
    which case each chain is replaced by :func:`canonical_orientation`.
    """
    if k < 0:
        raise InputError(f"k must be >= 0, got {k}")
    level = {initial_chain(d)}
    for _ in range(k):
        nxt = set()
        for c in level:
            # the expansions are inlined: every chain here is a T-chain already
            nxt.add(Chain((2,) + c[:-1] + (c[-1] + 1,)))
            nxt.add(Chain((c[0] + 1,) + c[1:] + (2,)))
        level = nxt
    if dedupe:
        return {canonical_orientation(c) for c in level}
    return level


def fibonacci(i: int) -> int:
    """``F_-2 = F_-1 = 1`` and ``F_i = F_{i-1} + F_{i-2}``."""
    if i < -2:
        raise InputError(f"Fibonacci index must be >= -2, got {i}")
    a, b = 1, 1
    for _ in range(i + 2):
        a, b = b, a + b
    return a


def is_extremal_form(chain: Iterable[int]) -> bool:
    """``[3,...,3,5,3,...,3,2]`` in either orientation."""
    c = tuple(chain)
    for x in (c, c[::-1]):
        if len(x) >= 2 and x[-1] == 2 and x.count(5) == 1 and set(x[:-1]) <= {3, 5}:
            return True
    return False


@dataclass
class FibonacciReport:
    d: int
    k: int
    bound: int
    max_index: int
    maximizers: list[Chain] = field(default_factory=list)
    count: int = 0
    extremal_form_ok: bool | None = None

    @property
    def holds(self) -> bool:
        return self.max_index <= self.bound and self.extremal_form_ok is not False

    @property
    def attained(self) -> bool:
        return self.max_index == self.bound

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "fibonacci": self.bound,
            "max_index": self.max_index,
            "attained": self.attained,
            "chains": self.count,
            "maximizers": [list(c) for c in self.maximizers],
            "extremal_form_ok": self.extremal_form_ok,
            "holds": self.holds,
        }


def verify_fibonacci_bound(d: int, k: int) -> FibonacciReport:
    """Check ``n <= F_k`` over every T-chain with the given ``d`` and ``k``.

    For ``d = 1`` and ``k >= 1`` the bound must be attained, and every chain
    attaining it must have the shape ``[3,...,3,5,3,...,3,2]`` up to reversal.
    At ``k = 0`` the only chain is ``[4]``, which attains ``F_0 = 2`` without
    having that shape.
    """
    chains = enumerate_tchains(d, k)
    best, maximizers = 0, []
    for c in chains:
        n = t_params(hj_eval(c)).n
        if n > best:
            best, maximizers = n, [c]
        elif n == best:
            maximizers.append(c)
    report = FibonacciReport(d, k, fibonacci(k), best, sorted(maximizers), len(chains))
    if d == 1 and k >= 1:
        report.extremal_form_ok = report.attained and all(
            is_extremal_form(c) for c in maximizers
        )
    return report


def catalog_record(chain: Iterable[int]) -> dict:
    """One JSON-lines catalog row for a T-chain."""
    c, p = _require_t(chain)
    m, q = hj_eval(c)
    return {
        "chain": list(c),
        "d": p.d,
        "n": p.n,
        "a": p.a,
        "order": m,
        "weight": q,
        "r": len(c),
        "k": len(c) - p.d,
    }
