import itertools
import random

import pytest

from funcdeg import (
    Group,
    GroupMismatch,
    GroupRingElement,
    InternalInconsistency,
    InvalidInput,
    PGroupSpec,
    max_degree_cyclic,
    multiply,
    nilpotency_degree,
    nilpotency_oracle,
    quotient_power,
)
from funcdeg.verify import nilpotency_grid

Z2 = Group((2,))


def diff(m, g, i=0):
    return GroupRingElement.generator_difference(m, g, i)


def test_multiply_examples():
    g = Group((3, 2))
    rng = random.Random(0)
    a = GroupRingElement(5, g, tuple(rng.randrange(5) for _ in range(6)))
    assert a * GroupRingElement.one(5, g) == a
    assert (diff(2, Z2) * diff(2, Z2)).is_zero()
    sq = diff(4, Z2) * diff(4, Z2)
    assert sq.coeffs == (2, 2)  # 2 - 2g
    assert not sq.is_zero()
    with pytest.raises(GroupMismatch):
        multiply(diff(2, Z2), diff(4, Z2))


def test_multiplication_is_commutative_associative_and_augmented():
    rng = random.Random(1)
    for moduli, m in [((4,), 8), ((2, 3), 6), ((3, 3), 9), ((2, 2, 2), 4)]:
        g = Group(moduli)
        for _ in range(15):
            a, b, c = (GroupRingElement(m, g, tuple(rng.randrange(m) for _ in range(g.order))) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert (a * b).augmentation() == a.augmentation() * b.augmentation() % m


def test_generator_power_is_identity():
    for moduli, m in [((4,), 8), ((3, 5), 9), ((2, 6), 4)]:
        g = Group(moduli)
        for i, q in enumerate(moduli):
            x = GroupRingElement.one(m, g) + diff(m, g, i)
            assert x**q == GroupRingElement.one(m, g)


@pytest.mark.parametrize("m,moduli,want", [(2, (2,), 2), (4, (2,), 3), (3, (3,), 3)])
def test_nilpotency_oracle_examples(m, moduli, want):
    g = Group(moduli)
    assert nilpotency_oracle(m, g) == want
    assert nilpotency_oracle(m, g, "dense") == want
    assert nilpotency_oracle(m, g, "tensor") == want


def test_non_nilpotent_ideal_is_reported():
    with pytest.raises(InternalInconsistency):
        nilpotency_oracle(3, Z2, "dense")
    with pytest.raises(InternalInconsistency):
        nilpotency_oracle(3, Z2, "tensor")
    with pytest.raises(InvalidInput):
        nilpotency_oracle(2, Z2, "bogus")


def test_trivial_group_ideal_is_zero():
    assert nilpotency_oracle(4, Group((1,))) == 1


def test_dense_and_tensor_routes_agree():
    for p, alphas, beta in nilpotency_grid(budget=16):
        g = PGroupSpec(p, alphas, (beta,)).domain()
        assert nilpotency_oracle(p**beta, g, "dense") == nilpotency_oracle(p**beta, g, "tensor")


def test_quotient_power_examples():
    for p, a, b in itertools.product((2, 3, 5), (1, 2), (1, 2, 3)):
        star = max_degree_cyclic(p, a, b)
        want = (-p) ** (b - 1) % p**b
        assert quotient_power(p, a, b, star) == [want] * p**a
        assert quotient_power(p, a, b, star + 1) == [0] * p**a
        assert quotient_power(p, a, b, 0) == [1] + [0] * (p**a - 1)


def test_quotient_power_matches_repeated_multiplication():
    p, a, b = 3, 1, 2
    g = Group((p**a,))
    x = diff(p**b, g)
    for delta in range(12):
        assert quotient_power(p, a, b, delta) == list((x**delta).coeffs)


def test_quotient_power_validation():
    with pytest.raises(InvalidInput):
        quotient_power(4, 1, 1, 3)
    with pytest.raises(InvalidInput):
        quotient_power(2, 0, 1, 3)


def test_quotient_power_coefficient_is_c_hat_on_sweep():
    from funcdeg import c_hat

    for p, a, b in itertools.product((2, 3, 5), (1, 2, 3), (1, 2, 3)):
        star = max_degree_cyclic(p, a, b)
        for delta in range(star, star + 2 * p**a + 1):
            assert quotient_power(p, a, b, delta)[delta % p**a] == c_hat(delta, a, p, b)


def test_formula_matches_oracle_on_small_grid():
    for p, alphas, beta in nilpotency_grid(budget=12):
        spec = PGroupSpec(p, alphas, (beta,))
        assert nilpotency_oracle(p**beta, spec.domain()) == nilpotency_degree(spec)
