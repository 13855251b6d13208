import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcsst import make_field
from qcsst.galois import Field, field_from_order, is_prime

FIELD_POOL = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (2, 4), (3, 2)]


def pool_fields():
    return [make_field(p, e) for p, e in FIELD_POOL]


def test_prime_field_default_modulus():
    f = make_field(2, 1)
    assert (f.p, f.e, f.q) == (2, 1, 2)
    assert f.modulus == (0, 1)  # the polynomial X


def test_gf4_unique_irreducible_quadratic():
    f = make_field(2, 2, [1, 1, 1])
    assert f.q == 4
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_gf3():
    f = make_field(3)
    assert f.q == 3
    assert f.add(2, 2) == 1 and f.mul(2, 2) == 1


def test_make_field_errors():
    with pytest.raises(ValueError):
        make_field(4, 1)  # not prime
    with pytest.raises(ValueError):
        make_field(2, 2, [1, 0, 1])  # x^2 + 1 = (x+1)^2 over GF(2)
    with pytest.raises(ValueError):
        make_field(2, 2, [1, 1])  # wrong degree
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_default_modulus_is_irreducible_and_smallest():
    # GF(8): x^3 + x + 1 encodes below x^3 + x^2 + 1
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    # GF(9): x^2 + 1 is irreducible over GF(3) (-1 is a non-square)
    assert make_field(3, 2).modulus == (1, 0, 1)


@pytest.mark.parametrize("field", pool_fields(), ids=repr)
def test_encode_decode_round_trip(field):
    for a in field.elements():
        assert field.encode(field.coeffs(a)) == a


@pytest.mark.parametrize("field", [make_field(p, e) for p, e in FIELD_POOL
                                   if p**e <= 16], ids=repr)
def test_group_laws_full_tables(field):
    q = field.q
    for a, b in itertools.product(range(q), repeat=2):
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(a, field.neg(a)) == 0
        if a:
            assert field.mul(a, field.inv(a)) == 1
    for a, b, c in itertools.product(range(q), repeat=3):
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == \
            field.add(field.mul(a, b), field.mul(a, c))


def test_trace_values_gf4(f4):
    # the non-subfield elements are the roots of x^2 + x + 1; each maps to 1
    assert f4.trace(0) == 0
    omega = 2  # encoding of X
    assert f4.frobenius(omega) == f4.mul(omega, omega)
    assert f4.trace(omega) == f4.add(omega, f4.mul(omega, omega)) == 1


def test_trace_identity_on_prime_field(f2, f3):
    assert f2.trace(1) == 1
    assert [f3.trace(a) for a in range(3)] == [0, 1, 2]


@pytest.mark.parametrize("field", [make_field(2, 6), make_field(2, 4),
                                   make_field(3, 2), make_field(7, 1)],
                         ids=repr)
def test_trace_linearity_and_fibers(field):
    for a, b in itertools.product(field.elements(), repeat=2):
        assert field.trace(field.add(a, b)) == \
            (field.trace(a) + field.trace(b)) % field.p
    fibers = {t: 0 for t in range(field.p)}
    for a in field.elements():
        fibers[field.trace(a)] += 1
    assert all(count == field.p ** (field.e - 1) for count in fibers.values())


@pytest.mark.parametrize("field", pool_fields(), ids=repr)
def test_frobenius_order(field):
    for a in field.elements():
        x = a
        for _ in range(field.e):
            x = field.frobenius(x)
        assert x == a
    assert field.frobenius(0) == 0 and field.frobenius(1) == 1


def test_frobenius_is_additive_homomorphism(f4):
    for a, b in itertools.product(range(4), repeat=2):
        assert f4.frobenius(f4.add(a, b)) == \
            f4.add(f4.frobenius(a), f4.frobenius(b))


@given(st.sampled_from(FIELD_POOL), st.data())
@settings(max_examples=200, deadline=None)
def test_pow_matches_repeated_mul(params, data):
    field = make_field(*params)
    a = data.draw(st.integers(0, field.q - 1))
    n = data.draw(st.integers(0, 12))
    out = 1
    for _ in range(n):
        out = field.mul(out, a)
    assert field.pow(a, n) == out


def test_dense_tables_match_scalar_ops(f4):
    for a, b in itertools.product(range(4), repeat=2):
        assert f4.add_table[a, b] == f4.add(a, b)
        assert f4.mul_table[a, b] == f4.mul(a, b)
        assert f4.sub_table[a, b] == f4.sub(a, b)
    assert list(f4.trace_table) == [f4.trace(a) for a in range(4)]
    assert f4.neg_table[3] == f4.neg(3)


def test_header_round_trip():
    for p, e in FIELD_POOL:
        f = make_field(p, e)
        g = Field.from_header(f.header())
        assert g == f
    with pytest.raises(ValueError):
        Field.from_header("GX 2 1 0 1")


def test_field_from_order():
    assert field_from_order(16).key == make_field(2, 4).key
    assert field_from_order(7).key == make_field(7).key
    with pytest.raises(ValueError):
        field_from_order(12)
    with pytest.raises(ValueError):
        field_from_order(1)


def test_is_prime():
    assert [m for m in range(20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_large_field_polynomial_path():
    # beyond the table limit: scalar arithmetic must still work
    f = make_field(257)
    assert f.q == 257
    assert f.mul(100, 100) == (100 * 100) % 257
    assert f.mul(f.inv(123), 123) == 1
    with pytest.raises(ValueError):
        _ = f.add_table
