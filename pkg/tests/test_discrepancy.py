from fractions import Fraction as Fr

import pytest

from oracles import discrepancies_sympy
from tsing.discrepancy import IncidenceProfile, contracted_degree, discrepancies, end_discrepancies
from tsing.errors import DomainError, InputError
from tsing.hj import reverse
from tsing.tchain import classify, enumerate_tchains


@pytest.mark.parametrize(
    "chain, mu",
    [
        ([4], [Fr(-1, 2)]),
        ([2, 5], [Fr(-1, 3), Fr(-2, 3)]),
        ([3, 5, 2], [Fr(-3, 5), Fr(-4, 5), Fr(-2, 5)]),
        ([2, 2, 2], [0, 0, 0]),
    ],
)
def test_examples(chain, mu):
    assert list(discrepancies(chain)) == mu


def test_matches_sympy_on_t_chains():
    for d in (1, 2, 3):
        for k in range(0, 6):
            for c in enumerate_tchains(d, k):
                assert list(discrepancies(c)) == discrepancies_sympy(c)


def test_matches_sympy_on_other_chains():
    for c in ([2, 4], [7, 3, 2, 9], [5], [3, 3, 3, 3, 3, 3], [2, 2, 2, 2, 7]):
        assert list(discrepancies(c)) == discrepancies_sympy(c)


def test_end_formula_orientation():
    for d in range(1, 5):
        for k in range(0, 9):
            for c in enumerate_tchains(d, k):
                p = classify(c).params
                mu = discrepancies(c)
                assert (mu[0], mu[-1]) == end_discrepancies(p.n, p.a)


@pytest.mark.parametrize(
    "chain, meets, kx, degree",
    [
        ([2, 5], {1: 1, 2: 1}, -1, 0),
        ([4], {1: 2}, -1, 0),
        ([3, 5, 2], {2: 1, 3: 1}, -1, Fr(1, 5)),
        ([2, 5, 3], {1: 1, 2: 1}, -1, Fr(1, 5)),
        ([2, 2, 2], {1: 1}, -1, -1),
        ([3, 5, 2], {}, 0, 0),
    ],
)
def test_contracted_degree(chain, meets, kx, degree):
    assert contracted_degree(chain, IncidenceProfile(meets, kx)) == degree


def test_forbidden_forms_have_degree_zero():
    for s in range(1, 8):
        assert contracted_degree([2] * s + [s + 4], IncidenceProfile({1: 1, s + 1: 1})) == 0


def test_symmetry():
    for c in enumerate_tchains(2, 5):
        assert discrepancies(reverse(c)) == tuple(reversed(discrepancies(c)))


def test_errors():
    with pytest.raises(DomainError):
        contracted_degree([2, 4], IncidenceProfile({1: 1}))
    with pytest.raises(InputError):
        contracted_degree([2, 5], IncidenceProfile({3: 1}))
    with pytest.raises(InputError):
        IncidenceProfile({1: 0})
    with pytest.raises(InputError):
        IncidenceProfile.parse("1:x")


def test_profile_parse():
    p = IncidenceProfile.parse("1:1,3:2,1:1", kx=0)
    assert dict(p.meets) == {1: 2, 3: 2} and p.kx == 0
    assert dict(IncidenceProfile.parse("2").meets) == {2: 1}
