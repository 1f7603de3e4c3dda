import pytest
from hypothesis import given, settings, strategies as st

from rpsbarrett.cosets import FIELD_POLYS
from rpsbarrett.errors import BothZero, DivisionByZero, NotInvertible
from rpsbarrett.oracle import naive_divmod, naive_mul
from rpsbarrett.poly import (
    NEG_INF,
    ONE,
    ZERO,
    Gf2Poly,
    _karatsuba,
    _schoolbook,
    divrem,
    floor_div,
    from_hex,
    gcd,
    inv_mod,
    is_irreducible,
    lcm,
    pow_mod,
    product,
    to_hex,
)

polys = st.integers(min_value=0, max_value=(1 << 300) - 1).map(Gf2Poly)
nonzero = st.integers(min_value=1, max_value=(1 << 200) - 1).map(Gf2Poly)


def test_hex_encoding():
    p = Gf2Poly.from_exponents([6, 1, 0])
    assert p.to_hex() == "0x43"
    assert str(p) == "u^6 + u + 1"
    assert ZERO.to_hex() == "0x0"
    assert from_hex("0x43") == 0x43
    assert to_hex(0) == "0x0"
    with pytest.raises(ValueError):
        from_hex("xyz")


def test_degree():
    assert ZERO.degree == NEG_INF
    assert ONE.degree == 0
    assert Gf2Poly(0x43).degree == 6


def test_small_products():
    assert Gf2Poly(0b11) * Gf2Poly(0b11) == Gf2Poly(0b101)
    assert Gf2Poly(0x41) * Gf2Poly(0x41) == Gf2Poly(0x1001)
    assert divrem(Gf2Poly(0x715), Gf2Poly(0x43)) == (Gf2Poly(0x1C), Gf2Poly(0x31))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        divrem(ONE, ZERO)
    with pytest.raises(BothZero):
        gcd(ZERO, ZERO)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == ZERO


@settings(max_examples=50)
@given(st.integers(0, (1 << 4097) - 1), st.integers(1, (1 << 4097) - 1))
def test_divrem_round_trip(x, d):
    x, d = Gf2Poly(x), Gf2Poly(d)
    q, r = divrem(x, d)
    assert q * d + r == x
    assert r.degree < d.degree
    assert floor_div(x, d) == q


@given(polys, nonzero)
def test_divrem_matches_oracle(x, d):
    q, r = divrem(x, d)
    assert (q.bits, r.bits) == naive_divmod(x.bits, d.bits)


@given(polys, polys)
def test_mul_matches_oracle(a, b):
    assert (a * b).bits == naive_mul(a.bits, b.bits)


@settings(max_examples=30)
@given(st.integers(0, (1 << 3000) - 1), st.integers(0, (1 << 3000) - 1))
def test_karatsuba_matches_schoolbook(a, b):
    assert _karatsuba(a, b) == _schoolbook(a, b)


@given(nonzero, nonzero)
def test_gcd_lcm(a, b):
    g = gcd(a, b)
    assert (a % g, b % g) == (ZERO, ZERO)
    assert lcm(a, b) * g == a * b


@given(st.integers(1, (1 << 40) - 1))
def test_inverse(a):
    m = Gf2Poly(FIELD_POLYS[20])
    a = Gf2Poly(a) % m
    if a == ZERO:
        return
    assert (inv_mod(a, m) * a) % m == ONE


def test_not_invertible():
    with pytest.raises(NotInvertible):
        inv_mod(Gf2Poly(0b11), Gf2Poly(0b101))


def test_pow_mod_fermat():
    m = Gf2Poly(0x43)
    assert pow_mod(Gf2Poly(0b10), 63, m) == ONE
    assert pow_mod(Gf2Poly(0b10), 0, m) == ONE


def test_field_polys_irreducible():
    for m, f in FIELD_POLYS.items():
        assert Gf2Poly(f).degree == m
        assert is_irreducible(f)
    assert not is_irreducible(0b101)


def test_product():
    assert product([Gf2Poly(0b11)] * 3) == Gf2Poly(0b1111)
    assert product([]) == ONE
