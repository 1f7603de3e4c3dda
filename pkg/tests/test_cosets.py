import pytest

from rpsbarrett.cosets import (
    build_mersenne_system,
    build_odd_context,
    cyclotomic_cosets,
    factor_xn_minus_1,
)
from rpsbarrett.errors import EvenN, ValidationError
from rpsbarrett.poly import Gf2Poly, gcd, is_irreducible, product


def test_cosets_mod_15():
    assert cyclotomic_cosets(15) == [(0,), (1, 2, 4, 8), (3, 6, 12, 9), (5, 10), (7, 14, 13, 11)]


@pytest.mark.parametrize("n,expected", [
    (1, [0x3]),
    (7, [0x3, 0xB, 0xD]),
])
def test_small_factorizations(n, expected):
    assert sorted(f.bits for f in factor_xn_minus_1(n).factors) == expected


def test_factor_15():
    fac = factor_xn_minus_1(15)
    assert list(fac.degrees) == [1, 4, 4, 2, 4]
    assert product(fac.factors) == Gf2Poly((1 << 15) | 1)
    assert all(is_irreducible(f.bits) for f in fac.factors)


def test_even_rejected():
    with pytest.raises(EvenN):
        factor_xn_minus_1(6)
    with pytest.raises(ValidationError):
        build_mersenne_system(1)


@pytest.mark.parametrize("k,g_max,other_max,count", [(2, 2, 4, 3), (3, 3, 6, 5), (4, 4, 8, 7)])
def test_mersenne_systems(k, g_max, other_max, count):
    s = build_mersenne_system(k)
    n = (1 << k) - 1
    assert s.N == n and s.rps.n == count
    assert max(s.g_degrees) == g_max and max(s.other_degrees) == other_max
    assert s.rps.L == 2 * n + 1
    big = Gf2Poly((1 << n) | 1) * (Gf2Poly((1 << (n + 2)) | 1) // Gf2Poly(0b11))
    assert s.rps.big_modulus == big
    assert s.rps.sub_product(s.g_indices) == s.g
    mods = s.rps.moduli
    for i in range(len(mods)):
        for j in range(i):
            assert gcd(mods[i], mods[j]) == Gf2Poly(1)


def test_odd_n():
    s = build_odd_context(9)
    assert s.rps.big_modulus == Gf2Poly((1 << 9) | 1) * (Gf2Poly((1 << 11) | 1) // Gf2Poly(0b11))
