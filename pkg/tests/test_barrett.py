import random
import warnings

import pytest

from rpsbarrett import barrett, bex, channels, rps as rps_mod
from rpsbarrett.barrett import (
    ALPHA_BOUND,
    SUM_BOUND,
    DegreeBoundWarning,
    assemble_rps,
    ba_mpm,
    ba_mpm_detail,
    ba_mpm_swapped,
    ba_reduce,
    barrett_trace,
    build_barrett_context,
    classic_barrett_mpm,
    dense_barrett_mpm,
    make_params,
    suggest_gh_from_p,
)
from rpsbarrett.counter import OpCounter
from rpsbarrett.cosets import build_mersenne_system
from rpsbarrett.errors import (
    BadPlan,
    ConditionViolated,
    DegreeTooLarge,
    IndexProductMismatch,
    SwapConditionViolated,
)
from rpsbarrett.oracle import naive_divmod, naive_mpm, naive_mul
from rpsbarrett.poly import Gf2Poly
from rpsbarrett.randgen import random_barrett_context, random_below, random_params, random_poly
from rpsbarrett.rps import RpsContext, crt_reconstruct, decode_partial, to_residues

P = Gf2Poly
EX1_MODULI = [P(0x5), P(0x15), P(0xB), P(0xD)]


def _ex1_context():
    return build_barrett_context(P(0x43), P(0x41), P(0x41), RpsContext(EX1_MODULI), [0, 1], [0, 1])


def test_mu_small_example():
    assert make_params(P(0x43), P(0x41), P(0x41)).mu == P(0x43)


def test_mu_when_scaling_by_p():
    p = P(0x43)
    assert make_params(p, p, p).mu == p


def test_exactness_boundaries():
    p = random_poly(random.Random(0), 10)
    make_params(p, random_poly(random.Random(1), 8), random_poly(random.Random(2), 10))
    with pytest.raises(ConditionViolated) as exc:
        make_params(p, random_poly(random.Random(1), 8), random_poly(random.Random(2), 9))
    assert exc.value.which == SUM_BOUND
    with pytest.raises(ConditionViolated) as exc:
        make_params(p, random_poly(random.Random(1), 11), random_poly(random.Random(2), 12))
    assert exc.value.which == ALPHA_BOUND


def test_dense_trace_small_example():
    t = barrett_trace(P(0x715), make_params(P(0x43), P(0x41), P(0x41)))
    assert (t.d, t.e, t.q, t.c) == (P(0x1C), P(0x724), P(0x1C), P(0x31))


def test_dense_random():
    rng = random.Random(20)
    for _ in range(2000):
        n = rng.randint(2, 64)
        p, g, h = random_params(rng, n)
        params = make_params(p, g, h)
        a, b = random_below(rng, n), random_below(rng, n)
        with warnings.catch_warnings():
            warnings.simplefilter("error", DegreeBoundWarning)
            t = barrett_trace(a * b, params)
        q_ref, c_ref = naive_divmod(naive_mul(a, b), p)
        assert (t.q.bits, t.c.bits) == (q_ref, c_ref)
        # degree ledger of the intermediates
        assert t.x.degree <= 2 * n - 2
        assert t.d.degree <= 2 * n - params.alpha - 2
        assert t.e.degree <= n + params.beta - 2
        assert t.q.degree <= n - 2
        assert t.c.degree <= n - 1
        assert params.mu.degree == params.alpha + params.beta - n


def test_dense_edge_cases():
    params = make_params(P(0x43), P(0x41), P(0x41))
    assert dense_barrett_mpm(P(0), P(0x3F), params) == (P(0), P(0))
    with pytest.raises(DegreeTooLarge):
        dense_barrett_mpm(P(0x40), P(1), params)


def test_classic():
    rng = random.Random(21)
    for _ in range(1000):
        n = rng.randint(2, 64)
        p = random_poly(rng, n)
        a, b = random_below(rng, n), random_below(rng, n)
        c, q = classic_barrett_mpm(a, b, p, n, n)
        assert (c, q) == dense_barrett_mpm(a, b, make_params(p, P(1 << n), P(1 << n)))
    assert classic_barrett_mpm(P(1), P(1), P(0x43), 6, 6) == (P(1), P(0))
    # same remainder as the worked example when scaling by u^6
    t = barrett_trace(P(0x715), make_params(P(0x43), P(1 << 6), P(1 << 6)))
    assert t.c == P(0x31)


def test_residue_small_example():
    bctx = _ex1_context()
    assert bctx.mu == P(0x43)
    res = ba_reduce(to_residues(P(0x715), bctx.rps), bctx)
    assert crt_reconstruct(res.c, bctx.rps) == P(0x31)
    assert crt_reconstruct(res.q, bctx.rps) == P(0x1C)
    assert decode_partial(res.d.restrict([2, 3]), bctx.rps) == P(0x1C)
    assert crt_reconstruct(res.e, bctx.rps) == P(0x724)
    zero = to_residues(P(0), bctx.rps)
    assert crt_reconstruct(ba_mpm(zero, to_residues(P(0x3F), bctx.rps), bctx), bctx.rps) == P(0)


def test_residue_random():
    rng = random.Random(22)
    for _ in range(300):
        n = rng.randint(2, 40)
        bctx = random_barrett_context(rng, n)
        a, b = random_below(rng, n), random_below(rng, n)
        ar, br = to_residues(a, bctx.rps), to_residues(b, bctx.rps)
        c = ba_mpm(ar, br, bctx)
        assert crt_reconstruct(c, bctx.rps) == naive_mpm(a, b, bctx.p)
        assert ba_mpm(ar, br, bctx, parallel=True) == c
        if bctx.swap_allowed():
            assert ba_mpm_swapped(ar, br, bctx) == c


def test_residue_path_stays_channel_sized(monkeypatch):
    bctx = build_mersenne_system(4).barrett(random_poly(random.Random(23), 15))
    limit = 2 * max(bctx.rps.degrees)

    def guarded(real):
        def mul(a, b):
            out = real(a, b)
            assert out.bit_length() <= limit, "wide polynomial product on the residue path"
            return out
        return mul

    def forbidden(*args, **kwargs):
        raise AssertionError("dense reconstruction on the residue path")

    for mod in (barrett, bex, channels):
        monkeypatch.setattr(mod, "_mul", guarded(mod._mul))
    monkeypatch.setattr(rps_mod, "crt_reconstruct", forbidden)
    monkeypatch.setattr(barrett, "barrett_trace", forbidden)
    rng = random.Random(24)
    a, b = random_below(rng, 15), random_below(rng, 15)
    ar, br = to_residues(a, bctx.rps), to_residues(b, bctx.rps)
    c1 = ba_mpm(ar, br, bctx)
    c2 = ba_mpm_swapped(ar, br, bctx)
    monkeypatch.undo()
    assert c1 == c2
    assert crt_reconstruct(c1, bctx.rps) == naive_mpm(a, b, bctx.p)


def test_swapped_delta():
    for k in (2, 3, 4):
        bctx = build_mersenne_system(k).barrett(random_poly(random.Random(k), (1 << k) - 1))
        ar = to_residues(P(0b1011), bctx.rps)
        c1, c2 = OpCounter(), OpCounter()
        assert ba_mpm(ar, ar, bctx, c1) == ba_mpm_swapped(ar, ar, bctx, c2)
        assert c1.madd - c2.madd == bctx.b
        assert c1.mmult - c2.mmult == bctx.b


def test_swap_condition():
    # L - beta = N - 1 exactly: too small for the swapped schedule
    p, g = P(0x43), P(0x41)
    bctx = build_barrett_context(p, g, g, RpsContext([P(0x5), P(0x15), P(0x13), P(0x2)]), [0, 1], [0, 1])
    assert not bctx.swap_allowed()
    ar = to_residues(P(3), bctx.rps)
    with pytest.raises(SwapConditionViolated):
        ba_mpm_swapped(ar, ar, bctx)


def test_context_validation():
    p, g = P(0x43), P(0x41)
    with pytest.raises(ConditionViolated) as exc:
        build_barrett_context(p, g, g, RpsContext([P(0x5), P(0x15), P(0xB)]))
    assert "L >" in exc.value.which
    with pytest.raises(ConditionViolated) as exc:
        build_barrett_context(p, g, g, RpsContext([P(0xB), P(0xD), P(0x13), P(0x19)]))
    assert exc.value.which == barrett.G_DIVIDES
    with pytest.raises(IndexProductMismatch):
        build_barrett_context(p, g, g, RpsContext(EX1_MODULI), [0], [0, 1])
    with pytest.raises(BadPlan):
        # H = 1 leaves no H channels
        build_barrett_context(P(0b111), P(0b111), P(1), RpsContext([P(0b111), P(0xB)]), [0], [])


def test_assemble_rps():
    rng = random.Random(25)
    for _ in range(200):
        n = rng.randint(2, 20)
        p, g, h = random_params(rng, n, min_degree=1, slack=3)
        try:
            ctx, gi, hi = assemble_rps(p, g, h)
        except ConditionViolated:
            continue
        assert ctx.sub_product(gi) == g and ctx.sub_product(hi) == h
        build_barrett_context(p, g, h, ctx, gi, hi)


def test_suggest_gh():
    p = P(0x43)
    assert suggest_gh_from_p(p, [0, 0, 0]) == (p, p)
    g, h = suggest_gh_from_p(p, [1, 0, 1])
    assert g == h == P(0x43 ^ 0b101)
    assert (g * g) // p == p
    with pytest.raises(ValueError):
        suggest_gh_from_p(p, [1])
