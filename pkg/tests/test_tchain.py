from math import gcd

import pytest

from oracles import fib, t_chains_by_arithmetic
from tsing.errors import DomainError, InputError
from tsing.hj import hj_eval, reverse
from tsing.tchain import (
    DuVal,
    NotT,
    TChain,
    TParams,
    canonical_orientation,
    catalog_record,
    chain_of,
    classify,
    enumerate_tchains,
    expand_left,
    expand_right,
    fibonacci,
    initial_chain,
    is_extremal_form,
    t_params,
    verify_fibonacci_bound,
)


@pytest.mark.parametrize("params, chain", [((1, 2, 1), [4]), ((1, 3, 2), [2, 5]), ((2, 2, 1), [3, 3])])
def test_chain_of(params, chain):
    assert chain_of(TParams(*params)) == tuple(chain)


@pytest.mark.parametrize("bad", [(0, 2, 1), (1, 1, 1), (1, 4, 2), (1, 4, 4), (1, 5, 0)])
def test_bad_params(bad):
    with pytest.raises(InputError):
        TParams(*bad)


@pytest.mark.parametrize(
    "chain, expected",
    [
        ([2, 2, 2], DuVal(3)),
        ([2, 5, 3], TChain(TParams(1, 5, 3))),
        ([3, 5, 2], TChain(TParams(1, 5, 2))),
        ([2, 4], NotT()),
        ([4], TChain(TParams(1, 2, 1))),
        ([3, 2, 3], TChain(TParams(3, 2, 1))),
        ([2] * 8 + [12], TChain(TParams(1, 10, 9))),
        ([4, 2, 6, 2, 6, 2, 2, 2, 4, 2, 2], TChain(TParams(1, 100, 29))),
        ([2, 2, 2, 5], NotT()),
        ([5], NotT()),
        ([3], NotT()),
        ([2, 3, 2, 2, 4], TChain(TParams(4, 3, 2))),
    ],
)
def test_classify(chain, expected):
    assert classify(chain) == expected


def test_strip_and_arithmetic_agree_on_small_chains():
    # classify raises AssertionError if the two routes disagree
    import itertools

    for r in range(1, 7):
        for c in itertools.product(range(2, 8), repeat=r):
            cls = classify(c)
            arith = t_params(hj_eval(c))
            if isinstance(cls, TChain):
                assert arith == cls.params
            elif isinstance(cls, NotT):
                assert arith is None


def test_expansions():
    assert expand_left([4]) == (2, 5)
    assert expand_right([4]) == (5, 2)
    assert expand_right([2, 5]) == (3, 5, 2)
    with pytest.raises(DomainError):
        expand_left([2, 4])


@pytest.mark.parametrize("d, chain", [(1, [4]), (2, [3, 3]), (3, [3, 2, 3])])
def test_initial_chain(d, chain):
    assert initial_chain(d) == tuple(chain)
    assert classify(chain).params.d == d


def test_initial_chain_rejects_zero():
    with pytest.raises(InputError):
        initial_chain(0)
    with pytest.raises(InputError):
        enumerate_tchains(1, -1)


def test_enumeration_examples():
    assert enumerate_tchains(1, 0) == {(4,)}
    assert enumerate_tchains(1, 1) == {(2, 5), (5, 2)}
    assert enumerate_tchains(1, 2) == {(2, 2, 6), (3, 5, 2), (2, 5, 3), (6, 2, 2)}
    assert enumerate_tchains(1, 2, dedupe=True) == {(2, 2, 6), (2, 5, 3)}


def test_cardinality_and_closure():
    for d in range(1, 5):
        for k in range(0, 13):
            chains = enumerate_tchains(d, k)
            assert len(chains) == 2**k
            if k <= 8:
                assert {reverse(c) for c in chains} == chains
                for c in chains:
                    assert not (c[0] == 2 and c[-1] == 2)


def test_enumeration_matches_arithmetic_oracle():
    for d in range(1, 4):
        for k in range(0, 7):
            assert enumerate_tchains(d, k) == t_chains_by_arithmetic(d, k, 2 ** (k + 1) + 2)


def test_generation_recognition_round_trip():
    for d in range(1, 6):
        for n in range(2, 51):
            for a in range(1, n):
                if gcd(n, a) == 1:
                    p = TParams(d, n, a)
                    assert classify(chain_of(p)) == TChain(p)


def test_expansion_steps_keep_d():
    for c in enumerate_tchains(2, 4):
        d = classify(c).params.d
        for nxt in (expand_left(c), expand_right(c)):
            assert classify(nxt).params.d == d and len(nxt) == len(c) + 1


@pytest.mark.parametrize("i, value", [(-2, 1), (-1, 1), (0, 2), (1, 3), (4, 13), (12, 610)])
def test_fibonacci(i, value):
    assert fibonacci(i) == value == fib(i)


def test_fibonacci_rejects_low_index():
    with pytest.raises(InputError):
        fibonacci(-3)


def test_fibonacci_report_examples():
    r1 = verify_fibonacci_bound(1, 1)
    assert r1.max_index == 3 and set(r1.maximizers) == {(2, 5), (5, 2)} and r1.holds
    r2 = verify_fibonacci_bound(1, 2)
    assert r2.max_index == 5 and set(r2.maximizers) == {(3, 5, 2), (2, 5, 3)}
    r4 = verify_fibonacci_bound(1, 4)
    assert r4.max_index == 13 and (3, 3, 5, 3, 2) in r4.maximizers and r4.extremal_form_ok
    assert hj_eval([3, 3, 5, 3, 2]).order == 169
    r0 = verify_fibonacci_bound(1, 0)
    assert r0.attained and r0.extremal_form_ok is None


def test_extremal_form():
    assert is_extremal_form([3, 5, 2]) and is_extremal_form([2, 5, 3]) and is_extremal_form([5, 2])
    assert is_extremal_form([3, 3, 5, 3, 2])
    assert not is_extremal_form([4]) and not is_extremal_form([2, 2, 6, 2, 4])


def test_canonical_orientation_and_catalog():
    assert canonical_orientation([3, 5, 2]) == (2, 5, 3)
    assert catalog_record([2, 5, 3]) == {
        "chain": [2, 5, 3], "d": 1, "n": 5, "a": 3, "order": 25, "weight": 14, "r": 3, "k": 2,
    }
    with pytest.raises(DomainError):
        catalog_record([2, 4])
