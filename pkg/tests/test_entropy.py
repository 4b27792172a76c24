import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infometrics import entropy as E
from infometrics.errors import DomainError, EmptyInput, LengthMismatch, NegativeProbability, SumOutOfTolerance

from conftest import random_dist, random_joint

FAIR = [0.5, 0.5]
THIRDS = [0.5, 0.25, 0.25]
PRODUCT = [[0.25, 0.25], [0.25, 0.25]]
DIAG = [[0.5, 0.0], [0.0, 0.5]]
DIAG4 = np.eye(4) / 4


def dists(min_size=1, max_size=8):
    return st.lists(st.floats(0, 1), min_size=min_size, max_size=max_size).filter(
        lambda v: sum(v) > 1e-3
    ).map(lambda v: [x / math.fsum(v) for x in v]).filter(lambda v: abs(math.fsum(v) - 1) <= 1e-9)


class TestValidation:
    def test_valid(self):
        assert E.validate_distribution(FAIR).probabilities == (0.5, 0.5)
        assert E.validate_distribution([1.0]).probabilities == (1.0,)

    def test_sum_out_of_tolerance(self):
        with pytest.raises(SumOutOfTolerance, match="tolerance"):
            E.validate_distribution([0.5, 0.6])

    def test_not_renormalized(self):
        d = E.validate_distribution([0.5, 0.5 + 5e-10])
        assert d.probabilities[1] == 0.5 + 5e-10

    def test_negative(self):
        with pytest.raises(NegativeProbability):
            E.validate_distribution([1.5, -0.5])

    def test_empty(self):
        with pytest.raises(EmptyInput):
            E.validate_distribution([])

    def test_joint_rows_must_match(self):
        with pytest.raises(LengthMismatch):
            E.validate_joint([[0.5], [0.25, 0.25]])


def test_boltzmann():
    assert E.boltzmann_entropy(E.MicrostateCount(1)) == 0
    assert E.boltzmann_entropy(E.MicrostateCount(math.e)) == pytest.approx(1.0, abs=1e-15)
    assert E.boltzmann_entropy(E.MicrostateCount(8)) == pytest.approx(2.0794415416798357, rel=1e-14)
    with pytest.raises(DomainError):
        E.MicrostateCount(0.5)


@pytest.mark.parametrize("d, expected", [(FAIR, 1.0), ([1.0, 0.0], 0.0), (THIRDS, 1.5)])
def test_shannon_worked_values(d, expected):
    assert E.shannon_entropy(d) == pytest.approx(expected, abs=1e-12)


def test_shannon_units_and_scale():
    assert E.shannon_entropy(FAIR, E.NATS) == pytest.approx(math.log(2), abs=1e-15)
    assert E.shannon_entropy(FAIR, E.EntropyUnits(2, 3.0)) == pytest.approx(3.0)
    with pytest.raises(DomainError):
        E.EntropyUnits(1.0)


def test_gibbs():
    assert E.gibbs_entropy([1.0, 0.0]) == 0
    assert E.gibbs_entropy(FAIR) == pytest.approx(0.6931471805599453, abs=1e-15)
    for n in (3, 7, 50):
        assert E.gibbs_entropy([1 / n] * n) == pytest.approx(math.log(n), abs=1e-12)
    assert E.gibbs_entropy(FAIR, k=2.0) == pytest.approx(2 * math.log(2))


def test_negentropy():
    assert E.negentropy([0.25] * 4) == pytest.approx(0.0, abs=1e-15)
    assert E.negentropy([1.0, 0, 0, 0]) == pytest.approx(2.0, abs=1e-15)
    # log2(3) - 1.5, evaluated to 30 digits with mpmath
    assert E.negentropy(THIRDS) == pytest.approx(0.0849625007211561814, abs=1e-12)


def test_hartley():
    assert E.hartley_information(E.MessageSpec(2, 3)) == 3.0
    assert E.hartley_information(E.MessageSpec(7, 0)) == 0
    assert E.hartley_information(E.MessageSpec(10, 2)) == pytest.approx(6.643856189774724, abs=1e-12)


@pytest.mark.parametrize("N, S", [(1, 2), (3, 2), (2, 3), (4, 3)])
def test_hartley_matches_uniform_shannon_over_messages(N, S):
    n = S**N
    assert E.hartley_information(E.MessageSpec(S, N)) == pytest.approx(E.shannon_entropy([1 / n] * n), abs=1e-12)


def test_message_information():
    assert E.message_information(FAIR, 10) == 10.0
    assert E.message_information(THIRDS, 0) == 0
    assert E.message_information([0, 1.0, 0], 4) == 0


def test_joint_conditional_mutual_worked_values():
    assert E.joint_entropy(PRODUCT) == pytest.approx(2.0)
    assert E.joint_entropy(DIAG) == pytest.approx(1.0)
    assert E.joint_entropy([[1.0]]) == 0
    assert E.conditional_entropy(PRODUCT) == pytest.approx(1.0)
    assert E.conditional_entropy(DIAG) == 0
    assert E.conditional_entropy([[1.0]]) == 0
    assert E.mutual_information(PRODUCT) == pytest.approx(0.0, abs=1e-15)
    assert E.mutual_information(DIAG) == pytest.approx(1.0)
    assert E.mutual_information(DIAG4) == pytest.approx(2.0)


def test_conditional_skips_empty_columns():
    j = [[0.5, 0.0], [0.5, 0.0]]
    assert E.conditional_entropy(j) == pytest.approx(1.0)


def test_relative_entropy():
    assert E.relative_entropy(THIRDS, THIRDS) == 0
    assert E.relative_entropy([1.0, 0.0], FAIR) == pytest.approx(1.0, abs=1e-12)
    assert E.relative_entropy(FAIR, [1.0, 0.0]) == math.inf
    with pytest.raises(LengthMismatch):
        E.relative_entropy(FAIR, THIRDS)


def test_renyi():
    assert E.renyi_entropy([0.25] * 4, 2) == pytest.approx(2.0, abs=1e-12)
    assert E.renyi_entropy([0.5, 0.5, 0.0], 0) == 1.0
    assert E.renyi_entropy(THIRDS, 1) == E.shannon_entropy(THIRDS)
    with pytest.raises(DomainError):
        E.renyi_entropy(THIRDS, -0.5)


def test_normalized_entropy():
    assert E.normalized_entropy([0.2] * 5) == pytest.approx(1.0)
    assert E.normalized_entropy([0, 1.0]) == 0
    assert E.normalized_entropy(THIRDS) == pytest.approx(0.946394630357186156, abs=1e-12)
    with pytest.raises(DomainError):
        E.normalized_entropy([1.0])


def test_empirical_distribution():
    assert E.empirical_distribution("AABB").probabilities == (0.5, 0.5)
    assert E.empirical_distribution("AAAA").probabilities == (1.0,)
    assert E.empirical_distribution("AABC").probabilities == (0.5, 0.25, 0.25)
    assert E.empirical_distribution("BAAC").probabilities == (0.25, 0.5, 0.25)
    with pytest.raises(EmptyInput):
        E.empirical_distribution("")


@given(dists())
def test_entropy_bounds(d):
    h = E.shannon_entropy(d)
    assert -1e-12 <= h <= math.log2(len(d)) + 1e-12


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_bounds_attained(n):
    assert E.shannon_entropy([1 / n] * n) == pytest.approx(math.log2(n), abs=1e-12)
    assert E.shannon_entropy([1.0] + [0.0] * (n - 1)) == 0


@given(dists(), st.sampled_from([E.BITS, E.NATS, E.EntropyUnits(10, 2.5)]))
def test_negentropy_complements_entropy(d, u):
    total = E.negentropy(d, u) + E.shannon_entropy(d, u)
    assert total == pytest.approx(u.scale_K * u.log(len(d)), abs=1e-12)


def test_chain_rule_and_mi_identities(rng):
    for _ in range(200):
        j = E.validate_joint(random_joint(rng, 3, 5, sparsity=0.2))
        hx, hy = E.shannon_entropy(j.marginal_x()), E.shannon_entropy(j.marginal_y())
        hxy = E.joint_entropy(j)
        assert hxy == pytest.approx(hy + E.conditional_entropy(j), abs=1e-12)
        assert E.mutual_information(j) == pytest.approx(hx + hy - hxy, abs=1e-12)
        assert E.mutual_information(j) == pytest.approx(E.mutual_information(j.transpose()), abs=1e-12)


def test_gibbs_inequality(rng):
    for n in (2, 3, 8):
        for _ in range(100):
            p, q = random_dist(rng, n), random_dist(rng, n)
            assert E.relative_entropy(p, q) >= 0


@given(dists(min_size=2))
@settings(max_examples=200)
def test_renyi_monotone_in_alpha(d):
    values = [E.renyi_entropy(d, a) for a in (0, 0.5, 1, 2, 4, 16)]
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


@given(dists(min_size=2))
def test_renyi_continuous_at_one(d):
    h = E.shannon_entropy(d)
    assert abs(E.renyi_entropy(d, 1 + 1e-4) - h) <= 1e-3
    assert abs(E.renyi_entropy(d, 1 - 1e-4) - h) <= 1e-3


def test_parse_distribution_forms():
    assert E.parse_distribution("0.5,0.25,0.25").probabilities == (0.5, 0.25, 0.25)
    assert E.parse_distribution("[0.5, 0.5]").probabilities == (0.5, 0.5)
