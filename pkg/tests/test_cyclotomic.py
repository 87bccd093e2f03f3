import random
from fractions import Fraction

import pytest

from genblocks.cyclotomic import (Cyclotomic, NotRationalError,
                                  cyclotomic_polynomial, root_of_unity,
                                  value_str, value_to_json)
from genblocks.numtheory import (divisors, euler_phi, mobius, ramanujan_sum)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_polynomial_product_oracle():
    # independent check: prod over d | n of Phi_d equals x^n - 1
    for n in range(1, 31):
        prod = [1]
        for d in divisors(n):
            prod = _poly_mul(prod, cyclotomic_polynomial(d))
        want = [-1] + [0] * (n - 1) + [1]
        assert prod == want


def test_root_of_unity_identities():
    assert root_of_unity(6, 1) + root_of_unity(6, 5) == 1
    golden = root_of_unity(5, 1) + root_of_unity(5, 4)
    other = root_of_unity(5, 2) + root_of_unity(5, 3)
    assert golden * other == -1
    total = sum(root_of_unity(7, k) for k in range(7))
    assert total == 0
    assert root_of_unity(8, 2) == root_of_unity(4, 1)
    assert root_of_unity(3, 5) == root_of_unity(3, 2)


def test_field_axioms_random():
    rng = random.Random(20260823)
    values = []
    for order in (1, 2, 3, 4, 6, 8, 12, 24):
        for _ in range(3):
            weights = {rng.randrange(order): Fraction(rng.randint(-4, 4),
                                                      rng.randint(1, 3))
                       for _ in range(3)}
            values.append(Cyclotomic.from_exponents(order, weights))
    for _ in range(60):
        a, b, c = (rng.choice(values) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a
        assert a - a == 0


def test_as_rational():
    assert (root_of_unity(4, 1) * root_of_unity(4, 1)).as_rational() == -1
    with pytest.raises(NotRationalError):
        root_of_unity(5, 1).as_rational()


def test_json_round_trip_and_strings():
    x = root_of_unity(5, 1) + Fraction(-1, 4)
    assert Cyclotomic.from_json(x.to_json()) == x
    assert value_str(Fraction(-1, 4)) == "-1/4"
    assert value_str(root_of_unity(3, 1)) == "ζ3^1"
    blob = value_to_json(Fraction(1, 2))
    assert blob == {"order": 1, "coeffs": [["1", "2"]]}


def _ramanujan_direct(q, m):
    total = Cyclotomic.from_rational(0)
    from math import gcd
    for k in range(1, q + 1):
        if gcd(k, q) == 1:
            total = total + root_of_unity(q, k * m)
    return total.as_rational()


def test_ramanujan_matches_cyclotomic_sum():
    for q in range(1, 13):
        for m in range(0, 13):
            assert ramanujan_sum(q, m) == _ramanujan_direct(q, m)


def test_ramanujan_at_one_is_mobius():
    for q in range(1, 31):
        assert ramanujan_sum(q, 1) == mobius(q)


def test_totient_divisor_sum():
    for n in range(1, 201):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_mobius_values():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
