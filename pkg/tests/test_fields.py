import pickle

import pytest

from fflab.fields import FieldSpec, find_irreducible, is_prime, trace


def test_is_prime_small():
    assert [n for n in range(2, 30) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_find_irreducible_is_first_in_index_order():
    # x^2 + x + 1 is the only monic irreducible quadratic over F_2
    assert tuple(find_irreducible(2, 2)) == (1, 1, 1)
    # over F_5: x^2 and x^2 + 1 both split, x^2 + 2 is the first that does not
    assert tuple(find_irreducible(5, 2)) == (2, 0, 1)


def test_prime_field_arithmetic(spec5):
    assert spec5.q == 5
    assert spec5.add(2, 3) == 0
    assert spec5.mul(2, 3) == 1
    assert spec5.neg(2) == 3
    assert spec5.inv(3) == 2
    assert spec5.pow(2, 3) == 3
    with pytest.raises(ZeroDivisionError):
        spec5.inv(0)


def test_element_wrapper(spec5):
    a = spec5.element(2)
    b = spec5.element(4)
    assert (a + b).idx == 1
    assert (a * b).idx == 3
    assert (a - b).idx == 3
    assert (b / a).idx == 2
    assert a + 3 == spec5.element(0)
    assert list(spec5) == [spec5.from_index(i) for i in range(5)]


def test_extension_field_f25():
    spec = FieldSpec(5, 2)
    assert spec.q == 25
    # constants embed at their own indices
    for c in range(5):
        for cc in range(5):
            assert spec.add(c, cc) == (c + cc) % 5
            assert spec.mul(c, cc) == (c * cc) % 5
    # Frobenius fixes exactly the prime subfield
    fixed = [i for i in range(25) if spec.pow(i, 5) == i]
    assert fixed == list(range(5))
    # the multiplicative group has order 24
    for i in range(1, 25):
        assert spec.pow(i, 24) == 1


def test_trace_to_prime_subfield():
    spec = FieldSpec(5, 2)
    for i in range(25):
        expected = spec.add(i, spec.pow(i, 5))
        assert spec.trace_idx(i) == expected
        assert spec.trace_idx(i) < 5
    values = {spec.trace_idx(i) for i in range(25)}
    assert values == set(range(5))
    assert trace(spec.from_index(7)) == spec.trace_idx(7)


def test_explicit_modulus_accepted():
    spec = FieldSpec(5, 2, modulus=(2, 0, 1))
    assert spec.q == 25


def test_validation_errors():
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(5, 0)
    with pytest.raises(ValueError):
        FieldSpec(5, 2, modulus=(1, 0, 1))     # x^2 + 1 splits mod 5
    with pytest.raises(ValueError):
        FieldSpec(5, 1, modulus=(2, 0, 1))     # prime field takes no modulus


def test_spec_pickles(spec5):
    clone = pickle.loads(pickle.dumps(spec5))
    assert clone == spec5
    assert clone.mul(3, 4) == 2


def test_coords_index_round_trip():
    spec = FieldSpec(3, 3)
    for i in range(27):
        assert spec.index(spec.coords(i)) == i
