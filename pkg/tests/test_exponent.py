import random

import pytest

from rpsbarrett.barrett import ba_mpm, make_params
from rpsbarrett.counter import OpCounter
from rpsbarrett.cosets import build_mersenne_system
from rpsbarrett.errors import ValidationError
from rpsbarrett.exponent import ba_mpe, dense_mpe, expected_mpm_calls
from rpsbarrett.oracle import naive_mpe
from rpsbarrett.poly import Gf2Poly
from rpsbarrett.randgen import random_barrett_context, random_below, random_poly
from rpsbarrett.rps import constant_vector, crt_reconstruct, to_residues


def test_small_exponents():
    bctx = build_mersenne_system(3).barrett(Gf2Poly(0x83))
    a = Gf2Poly(0x5A)
    ar = to_residues(a, bctx.rps)
    assert ba_mpe(ar, 0, bctx) == constant_vector(1, bctx.rps)
    assert crt_reconstruct(ba_mpe(ar, 1, bctx), bctx.rps) == a
    assert crt_reconstruct(ba_mpe(ar, 2, bctx), bctx.rps) == naive_mpe(a, 2, bctx.p)
    with pytest.raises(ValidationError):
        ba_mpe(ar, -1, bctx)


def test_random_against_oracle():
    rng = random.Random(30)
    for _ in range(100):
        n = rng.randint(2, 32)
        bctx = random_barrett_context(rng, n)
        a = random_below(rng, n)
        e = rng.getrandbits(16)
        ref = naive_mpe(a, e, bctx.p)
        assert crt_reconstruct(ba_mpe(to_residues(a, bctx.rps), e, bctx), bctx.rps) == ref
        assert dense_mpe(a, e, bctx.params) == ref


def test_call_count():
    bctx = build_mersenne_system(2).barrett(Gf2Poly(0b1011))
    ar = to_residues(Gf2Poly(0b110), bctx.rps)
    for e in [0, 1, 2, 3, 5, 8, 255, 256, 0b1011011]:
        c = OpCounter()
        ba_mpe(ar, e, bctx, c)
        assert c.mpm_calls == expected_mpm_calls(e)


def test_exponent_law_parallel_and_swapped():
    rng = random.Random(31)
    bctx = build_mersenne_system(4).barrett(random_poly(rng, 15))
    ar = to_residues(random_below(rng, 15), bctx.rps)
    for _ in range(20):
        e1, e2 = rng.getrandbits(12), rng.getrandbits(12)
        lhs = ba_mpe(ar, e1 + e2, bctx, parallel=True)
        rhs = ba_mpm(ba_mpe(ar, e1, bctx, swapped=True), ba_mpe(ar, e2, bctx), bctx)
        assert lhs == rhs
