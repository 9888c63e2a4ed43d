"""Hirzebruch-Jung continued fractions of cyclic quotient singularities.

A cyclic quotient singularity ``1/m(1, q)`` is resolved by a chain of smooth
rational curves with self-intersections ``-b_1, ..., -b_r`` where::

    m / q = b_1 - 1 / (b_2 - 1 / (... - 1 / b_r))

This module translates between the pair ``(m, q)`` and the chain ``[b_1, ..., b_r]``
using integer arithmetic only.
"""
from __future__ import annotations

import re
from math import gcd
from typing import Iterable

from .errors import InputError

__all__ = [
    "Chain",
    "CyclicQuotient",
    "hj_expand",
    "hj_expand_stepwise",
    "hj_eval",
    "reverse",
    "inverse_weight",
    "parse_chain",
    "parse_fraction",
]


class Chain(tuple):
    """Immutable sequence of integers ``>= 2``; entry ``i`` is ``b_i``.

    Compares equal to a plain tuple with the same entries.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if not self:
            raise InputError("a chain needs at least one entry")
        if not set(map(type, self)) <= {int}:
            raise InputError(f"chain entries must be integers, got {list(self)!r}")
        if min(self) < 2:
            raise InputError(f"chain entries must be >= 2, got {list(self)}")
        return self

    @property
    def r(self) -> int:
        """Length of the chain."""
        return len(self)

    def __repr__(self) -> str:
        return "Chain([" + ",".join(map(str, self)) + "])"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


class CyclicQuotient(tuple):
    """The singularity ``1/order(1, weight)``; a pair ``(order, weight)``."""

    __slots__ = ()

    def __new__(cls, order: int, weight: int):
        if type(order) is not int or type(weight) is not int:
            raise InputError(f"order and weight must be integers, got {order!r}, {weight!r}")
        if not 0 < weight < order:
            raise InputError(f"need 0 < weight < order, got {order}/{weight}")
        if gcd(order, weight) != 1:
            raise InputError(f"order and weight must be coprime, got {order}/{weight}")
        return tuple.__new__(cls, (order, weight))

    @property
    def order(self) -> int:
        return self[0]

    @property
    def weight(self) -> int:
        return self[1]

    def __repr__(self) -> str:
        return f"CyclicQuotient(order={self[0]}, weight={self[1]})"

    def __str__(self) -> str:
        return f"1/{self[0]}(1,{self[1]})"


# results computed from validated input skip the second check
_new = tuple.__new__


def _as_quotient(x) -> CyclicQuotient:
    if isinstance(x, CyclicQuotient):
        return x
    m, q = x
    return CyclicQuotient(m, q)


def hj_expand(x: CyclicQuotient | tuple[int, int]) -> Chain:
    """Expand ``m/q`` into its Hirzebruch-Jung chain.

    Each step takes ``b = ceil(m/q)`` and continues with ``q / (b*q - m)``.
    A run of entries equal to 2 leaves ``m - q`` unchanged, so the run is
    emitted in one go: its length is a partial quotient of the ordinary
    continued fraction of ``m/q``.

    >>> hj_expand((25, 9))
    Chain([3,5,2])
    """
    m, q = x
    if type(x) is not CyclicQuotient and (
        type(m) is not int or type(q) is not int or not 0 < q < m or gcd(m, q) != 1
    ):
        CyclicQuotient(m, q)  # raises with the specific reason
    a = m // q
    rem = m - a * q
    if not rem:
        return _new(Chain, (a,))
    out = [a + 1]
    m, q = q, rem
    while True:
        a = m // q
        rem = m - a * q
        if a > 1:
            out += [2] * (a - 1)
        if not rem:
            return _new(Chain, out)
        m, q = q, rem
        a = m // q
        rem = m - a * q
        if not rem:
            out.append(a + 1)
            return _new(Chain, out)
        out.append(a + 2)
        m, q = q, rem


def hj_expand_stepwise(x: CyclicQuotient | tuple[int, int]) -> Chain:
    """Entry-by-entry ceiling-division expansion; slower twin of :func:`hj_expand`."""
    m, q = _as_quotient(x)
    out = []
    while q:
        b = -(-m // q)
        out.append(b)
        m, q = q, b * q - m
    return _new(Chain, out)


def hj_eval(chain: Iterable[int]) -> CyclicQuotient:
    """Evaluate a chain back to ``(m, q)``.

    Runs the numerator recurrence ``P_i = b_i P_{i-1} - P_{i-2}`` from the far
    end, so that ``m`` is the numerator of ``[b_1..b_r]`` and ``q`` that of
    ``[b_2..b_r]``.  A run of ``k`` entries equal to 2 is applied at once as
    the ``k``-th power of its step matrix, ``[[k+1, -k], [k, 1-k]]``.
    """
    c = chain if type(chain) is Chain else Chain(chain)
    n = len(c)
    if n < 12 or n - c.count(2) > n >> 2:
        m, q = 1, 0
        for b in reversed(c):
            m, q = b * m - q, m
        return _new(CyclicQuotient, (m, q))
    # mostly 2s: locate the other entries with C-level scans
    where = []
    for v in set(c):
        if v != 2:
            i = -1
            for _ in range(c.count(v)):
                i = c.index(v, i + 1)
                where.append(i)
    where.sort()
    m, q, prev = 1, 0, n
    for p in reversed(where):
        k = prev - p - 1
        if k:
            m, q = (k + 1) * m - k * q, k * m - (k - 1) * q
        m, q = c[p] * m - q, m
        prev = p
    if prev:
        m, q = (prev + 1) * m - prev * q, prev * m - (prev - 1) * q
    return _new(CyclicQuotient, (m, q))


def reverse(chain: Iterable[int]) -> Chain:
    return Chain(reversed(tuple(chain)))


def inverse_weight(x: CyclicQuotient | tuple[int, int]) -> CyclicQuotient:
    """Same singularity with the coordinates swapped: ``q' = q^-1 mod m``."""
    m, q = _as_quotient(x)
    return CyclicQuotient(m, pow(q, -1, m))


_CHAIN_RE = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]\s*$")
_FRACTION_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def parse_chain(text: str) -> Chain:
    """Parse the bracket syntax ``[2,5,3]``."""
    match = _CHAIN_RE.match(text)
    if not match:
        raise InputError(f"not a chain literal: {text!r} (expected e.g. [2,5,3])")
    return Chain(int(tok) for tok in match.group(1).split(","))


def parse_fraction(text: str) -> CyclicQuotient:
    """Parse ``m/q`` into a :class:`CyclicQuotient`."""
    match = _FRACTION_RE.match(text)
    if not match:
        raise InputError(f"not a fraction: {text!r} (expected e.g. 25/9)")
    return CyclicQuotient(int(match.group(1)), int(match.group(2)))
