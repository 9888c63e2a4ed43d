from fractions import Fraction as Fr

import pytest

from tsing.errors import DomainError
from tsing.invariants import (
    chain_canonical_degree,
    chi_relation,
    kw2_from,
    lemma_int_value,
    log_bmy_check,
    structural_identity_check,
)
from tsing.tchain import enumerate_tchains


@pytest.mark.parametrize("args, value", [((0, 4, 5, 1), 1), ((0, 2, 3, 1), 1), ((1, 3, 5, 1), 3), ((9, 16, 9, 1), 2)])
def test_kw2_from(args, value):
    assert kw2_from(*args) == value


def test_kw2_from_is_affine():
    base = kw2_from(3, 5, 7, 2)
    assert kw2_from(4, 5, 7, 2) - base == 1
    assert kw2_from(3, 6, 7, 2) - base == -1
    assert kw2_from(3, 5, 8, 2) - base == 1
    assert kw2_from(3, 5, 7, 3) - base == -1


@pytest.mark.parametrize("chain, value", [([4], 2), ([3, 3], 2), ([2, 2, 6, 2, 4], 6)])
def test_chain_canonical_degree(chain, value):
    assert chain_canonical_degree(chain) == value


def test_chain_canonical_degree_on_all_enumerated():
    for d in range(1, 5):
        for k in range(0, 11):
            for c in enumerate_tchains(d, k):
                assert chain_canonical_degree(c) == k + 2


def test_chain_canonical_degree_rejects_non_t():
    with pytest.raises(DomainError):
        chain_canonical_degree([2, 4])


@pytest.mark.parametrize("args, value", [((3, 1, 1), 3), ((5, 1, 0), 6), ((1, 1, 1), 1)])
def test_lemma_int_value(args, value):
    assert lemma_int_value(*args) == value


def test_structural_examples():
    rep = structural_identity_check([2, 2, 6, 2, 4])
    assert (rep.status, rep.s, rep.middle_sum, rep.expected) == ("pass", 2, 4, 4)
    rep = structural_identity_check([2, 5, 3])
    assert (rep.status, rep.s, rep.middle_sum) == ("pass", 1, 3)
    assert structural_identity_check([3, 5, 2]).status == "not-applicable"
    assert structural_identity_check([2, 4]).status == "not-applicable"


def test_structural_identity_on_all_enumerated():
    seen = 0
    for d in range(1, 5):
        for k in range(0, 11):
            for c in enumerate_tchains(d, k):
                rep = structural_identity_check(c)
                assert rep.ok
                seen += rep.status == "pass"
    assert seen > 1000


@pytest.mark.parametrize(
    "args, value",
    [((1, 23, 1), Fr(2)), ((1, 11, 1), Fr(1)), ((1, 23, 2), Fr(25, 12)), ((2, 10, 1), Fr(1))],
)
def test_chi_relation(args, value):
    assert chi_relation(*args) == value


@pytest.mark.parametrize(
    "args, value",
    [((1, 10, 1, 1), True), ((9, 2, 1, 1), True), ((10, 2, 1, 1), True), ((11, 2, 1, 1), False), ((1, 2, 1, 8), True), ((1, 2, 1, 9), False)],
)
def test_log_bmy(args, value):
    assert log_bmy_check(*args) is value
