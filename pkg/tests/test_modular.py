import itertools

import pytest

from cyclecovers.modular import SUPPORTED_PRIMES, Prime, Scalar, Vector, carry, dot

from helpers import carry_identity_exhaustive


def test_prime_accepts_supported():
    for p in SUPPORTED_PRIMES:
        assert Prime(p) == p


@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 15, 17, -3])
def test_prime_rejects(bad):
    with pytest.raises(ValueError):
        Prime(bad)


def test_scalar_range_checked():
    with pytest.raises(ValueError):
        Scalar(3, Prime(3))
    with pytest.raises(ValueError):
        Scalar(-1, Prime(5))


def test_scalar_arithmetic():
    p = Prime(5)
    a, b = Scalar(3, p), Scalar(4, p)
    assert (a + b).value == 2
    assert (a - b).value == 4
    assert (a * b).value == 2
    assert (-a).value == 2
    assert int(b) == 4


def test_scalar_modulus_mismatch():
    with pytest.raises(ValueError):
        Scalar(1, Prime(3)) + Scalar(1, Prime(5))


def test_dot_examples():
    assert dot(Vector((1, 2), 3), Vector((1, 1), 3)).value == 0
    assert dot(Vector((2, 3), 5), Vector((4, 1), 5)).value == 1
    for p in SUPPORTED_PRIMES:
        v = Vector(tuple(range(min(p, 4))), p)
        assert dot(Vector.zero(p, len(v)), v).value == 0


def test_dot_mismatch_errors():
    with pytest.raises(ValueError):
        dot(Vector((1,), 3), Vector((1, 2), 3))
    with pytest.raises(ValueError):
        dot(Vector((1,), 3), Vector((1,), 5))


def test_dot_bilinear_exhaustive_small():
    p = Prime(3)
    vecs = [Vector(c, p) for c in itertools.product(range(3), repeat=2)]
    for u in vecs:
        for w in vecs:
            for v in vecs:
                lhs = dot(u + w, v)
                rhs = dot(u, v) + dot(w, v)
                assert lhs == rhs


def test_carry_examples():
    p = Prime(3)
    assert carry(Scalar(0, p), Scalar(2, p)).value == 0
    assert carry(Scalar(2, p), Scalar(2, p)).value == 1
    assert carry(Scalar(1, p), Scalar(2, p)).value == 1
    with pytest.raises(ValueError):
        carry(Scalar(1, Prime(3)), Scalar(1, Prime(5)))


@pytest.mark.parametrize("p", SUPPORTED_PRIMES)
def test_carry_zero_annihilates(p):
    for a in range(p):
        assert carry(Scalar(a, Prime(p)), Scalar(0, Prime(p))).value == 0
        assert carry(Scalar(0, Prime(p)), Scalar(a, Prime(p))).value == 0


@pytest.mark.parametrize("p", SUPPORTED_PRIMES)
def test_carry_cocycle_identity_exhaustive(p):
    assert carry_identity_exhaustive(p)


def test_vector_negation_representatives():
    v = Vector((0, 1, 2), 3)
    assert (-v).coords == (0, 2, 1)


def test_vector_unit_and_validation():
    assert Vector.unit(5, 3, 1).coords == (0, 1, 0)
    with pytest.raises(ValueError):
        Vector((5,), 5)
    with pytest.raises(ValueError):
        Vector.unit(3, 2, 2)
