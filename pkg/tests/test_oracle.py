import pytest

from rpsbarrett.oracle import naive_crt, naive_divmod, naive_mpe, naive_mpm, naive_mul, naive_residues
from rpsbarrett.poly import Gf2Poly


def test_worked_example_end_to_end():
    # 0x715 = u^10 + u^9 + u^8 + u^4 + u^2 + 1
    assert naive_divmod(0x715, 0x43) == (0x1C, 0x31)
    assert naive_mul(0b11, 0b11) == 0b101


def test_trivial_cases():
    p = Gf2Poly(0x43)
    assert naive_mpm(Gf2Poly(0), Gf2Poly(0x3F), p) == Gf2Poly(0)
    assert naive_mpe(Gf2Poly(0x2A), 0, p) == Gf2Poly(1)
    assert naive_mpe(Gf2Poly(0x2A), 1, p) == Gf2Poly(0x2A)
    assert naive_mpe(Gf2Poly(0b10), 63, p) == Gf2Poly(1)
    with pytest.raises(ZeroDivisionError):
        naive_divmod(5, 0)


def test_crt_round_trip():
    mods = [0xB, 0xD, 0x13]
    for x in range(0, 1 << 10, 37):
        assert naive_crt(naive_residues(x, mods), mods) == Gf2Poly(x)
