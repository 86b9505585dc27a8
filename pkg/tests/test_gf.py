import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rootsl2.errors import BadInput
from rootsl2.gf import GF, FieldParams, field, is_irreducible


def test_gf5_basic():
    F = field(5)
    assert F.mul(3, 4) == 2
    assert F.add(3, 4) == 2
    assert F.sub(1, 3) == 3
    for a in range(1, 5):
        assert F.mul(a, F.inv(a)) == 1


def test_gf9_modulus_forces_x_squared():
    # GF(9) = GF(3)[x]/(x^2+1), so x*x = -1 = 2
    F = field(3, 2)
    x = F.encode([0, 1])
    assert F.mul(x, x) == F.encode([2, 0])


def test_division_by_zero():
    F = field(5)
    with pytest.raises(ZeroDivisionError):
        F.div(2, 0)


def test_bad_params():
    with pytest.raises(BadInput):
        FieldParams.make(4, 1)
    with pytest.raises(BadInput):
        FieldParams.make(2, 3)
    with pytest.raises(BadInput):
        FieldParams.make(3, 1)  # q = 3 < 5
    with pytest.raises(BadInput):
        FieldParams.make(3, 2, modulus=(0, 0, 1))  # x^2 reducible


@pytest.mark.parametrize("p,k", [(5, 1), (3, 2), (5, 2), (7, 2), (3, 4), (5, 3), (11, 2)])
def test_field_axioms_random_triples(p, k):
    F = field(p, k)
    rng = random.Random(17)
    for _ in range(200):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,k", [(5, 1), (3, 2), (5, 2), (7, 2), (3, 4)])
def test_fermat_lagrange_exhaustive(p, k):
    F = field(p, k)
    for a in range(1, F.q):
        assert F.pow(a, F.q - 1) == 1


def test_frobenius_gf25():
    F = field(5, 2)
    # a -> a^5; fixes exactly the prime subfield
    fixed = [a for a in range(F.q) if F.frobenius(a) == a]
    assert sorted(fixed) == [F.embed_subfield(i) for i in range(5)]
    for a in range(F.q):
        assert F.frobenius(a) == F.pow(a, 5)
        assert F.frobenius(F.frobenius(a)) == a


def test_frobenius_needs_even_degree():
    F = field(5, 3)
    with pytest.raises(BadInput):
        F.frobenius(2)


def test_frobenius_is_field_automorphism_gf81():
    F = field(3, 4)
    rng = random.Random(3)
    for _ in range(100):
        a, b = rng.randrange(F.q), rng.randrange(F.q)
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


@given(st.integers(min_value=0, max_value=24), st.integers(min_value=0, max_value=24))
@settings(max_examples=100, deadline=None)
def test_gf25_tables_match_polynomial_arithmetic(a, b):
    F = field(5, 2)
    ca, cb = F.decode(a), F.decode(b)
    # schoolbook product modulo x^2+2: (a0+a1 x)(b0+b1 x), x^2 = -2
    c0 = (ca[0] * cb[0] - 2 * ca[1] * cb[1]) % 5
    c1 = (ca[0] * cb[1] + ca[1] * cb[0]) % 5
    assert F.mul(a, b) == F.encode([c0, c1])


def test_digits_roundtrip():
    F = field(3, 4)
    for code in (0, 1, 2, 3, 80, 41):
        assert F.from_digits(F.to_digits(code)) == code
    assert len(F.to_digits(80)) == 4


def test_primitive_element_and_squares():
    F = field(5, 2)
    w = F.primitive_element()
    assert F.element_order(w) == 24
    squares = {F.mul(a, a) for a in range(F.q)}
    assert len(squares) == 13  # (q-1)/2 nonzero squares plus 0
    assert not F.is_square(F.nonsquare())


def test_rep_table_is_ring_homomorphism():
    F = field(3, 2)
    reps = F.rep_table()
    for a in range(F.q):
        for b in range(F.q):
            assert ((reps[a] @ reps[b]) % 3 == reps[F.mul(a, b)]).all()
            assert ((reps[a] + reps[b]) % 3 == reps[F.add(a, b)]).all()
    # first column of rep(a) is the coefficient vector of a
    for a in range(F.q):
        assert tuple(reps[a][:, 0]) == F.decode(a)


def test_deterministic_modulus_search():
    a = FieldParams.make(7, 3)
    b = FieldParams.make(7, 3)
    assert a.modulus == b.modulus
    assert is_irreducible(list(a.modulus), 7)
