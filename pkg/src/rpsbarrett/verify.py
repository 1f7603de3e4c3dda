"""Randomized oracle-equivalence suites behind ``rpsbarrett verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .barrett import ba_mpm_detail, classic_barrett_mpm, dense_barrett_mpm, make_params
from .bex import BexPlan, bex_crt, bex_extend
from .exponent import ba_mpe
from .oracle import naive_crt, naive_divmod, naive_mpe, naive_mpm, naive_mul, naive_residues
from .quotient import QuotientPlan, quotient_residues
from .randgen import random_barrett_context, random_below, random_params, random_rps
from .rps import crt_reconstruct, to_residues

MAX_RECORDED = 5


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    mismatches: list = field(default_factory=list)
    failures: int = 0

    @property
    def ok(self):
        return self.failures == 0

    def record(self, trial, **inputs):
        self.failures += 1
        if len(self.mismatches) < MAX_RECORDED:
            self.mismatches.append({"trial": trial, **inputs})


def _h(p):
    return hex(p.bits if hasattr(p, "bits") else int(p))


def suite_dense(rng, trials, max_degree, res):
    for t in range(trials):
        n = rng.randint(2, max_degree)
        p, g, h = random_params(rng, n)
        a, b = random_below(rng, n), random_below(rng, n)
        c, q = dense_barrett_mpm(a, b, make_params(p, g, h))
        q_ref, c_ref = naive_divmod(naive_mul(a, b), p)
        res.trials += 1
        if c.bits != c_ref or q.bits != q_ref:
            res.record(t, P=_h(p), G=_h(g), H=_h(h), A=_h(a), B=_h(b))


def suite_classic(rng, trials, max_degree, res):
    for t in range(trials):
        n = rng.randint(2, max_degree)
        p = random_params(rng, n)[0]
        ea = rng.randint(0, n)
        eb = rng.randint(max(2 * n - 2 - ea, 0), 2 * n)
        a, b = random_below(rng, n), random_below(rng, n)
        c, q = classic_barrett_mpm(a, b, p, ea, eb)
        q_ref, c_ref = naive_divmod(naive_mul(a, b), p)
        res.trials += 1
        if c.bits != c_ref or q.bits != q_ref:
            res.record(t, P=_h(p), exp_a=ea, exp_b=eb, A=_h(a), B=_h(b))


def suite_residue(rng, trials, max_degree, res):
    for t in range(trials):
        n = rng.randint(2, max_degree)
        bctx = random_barrett_context(rng, n)
        a, b = random_below(rng, n), random_below(rng, n)
        ar, br = to_residues(a, bctx.rps), to_residues(b, bctx.rps)
        ref = naive_mpm(a, b, bctx.p)
        out = ba_mpm_detail(ar, br, bctx)
        good = crt_reconstruct(out.c, bctx.rps) == ref
        good &= ba_mpm_detail(ar, br, bctx, parallel=True).c == out.c
        if bctx.swap_allowed():
            good &= ba_mpm_detail(ar, br, bctx, swapped=True).c == out.c
        res.trials += 1
        if not good:
            res.record(t, P=_h(bctx.p), G=_h(bctx.g), H=_h(bctx.h), A=_h(a), B=_h(b),
                       moduli=[_h(m) for m in bctx.rps.moduli])


def suite_quotient(rng, trials, max_degree, res):
    for t in range(trials):
        ctx = random_rps(rng, rng.randint(2, 8))
        a = rng.randint(1, ctx.n - 1)
        idx = sorted(rng.sample(range(ctx.n), a))
        x = random_below(rng, ctx.L)
        out = quotient_residues(to_residues(x, ctx), QuotientPlan(ctx, idx))
        divisor = 1
        for i in idx:
            divisor = naive_mul(divisor, ctx.mods[i])
        q = naive_divmod(x, divisor)[0]
        ref = naive_residues(q, ctx.mods)
        res.trials += 1
        if any(out.known_mask[i] and out.raw()[i] != ref[i] for i in range(ctx.n)):
            res.record(t, X=_h(x), I=idx, moduli=[_h(m) for m in ctx.mods])


def suite_bex(rng, trials, max_degree, res):
    for t in range(trials):
        ctx = random_rps(rng, rng.randint(2, 8))
        k = sorted(rng.sample(range(ctx.n), rng.randint(1, ctx.n - 1)))
        lk = sum(ctx.degrees[i] for i in k)
        x = random_below(rng, lk)
        full = to_residues(x, ctx)
        part = full.restrict(k)
        plan = BexPlan(ctx, k)
        outs = [bex_extend(part, plan, init=init, rng=rng) for init in ("zeros", "ones", "random")]
        outs.append(bex_crt(part, plan))
        ref = naive_crt([full.raw()[i] for i in k], [ctx.mods[i] for i in k])
        res.trials += 1
        if ref != x or any(o != full for o in outs):
            res.record(t, X=_h(x), K=k, moduli=[_h(m) for m in ctx.mods])


def suite_mpe(rng, trials, max_degree, res):
    for t in range(trials):
        n = rng.randint(2, max_degree)
        bctx = random_barrett_context(rng, n)
        a = random_below(rng, n)
        e = rng.getrandbits(12)
        out = crt_reconstruct(ba_mpe(to_residues(a, bctx.rps), e, bctx), bctx.rps)
        res.trials += 1
        if out != naive_mpe(a, e, bctx.p):
            res.record(t, P=_h(bctx.p), G=_h(bctx.g), H=_h(bctx.h), A=_h(a), e=e)


SUITES = {
    "dense-barrett": suite_dense,
    "classic-barrett": suite_classic,
    "residue-mpm": suite_residue,
    "quotient": suite_quotient,
    "bex": suite_bex,
    "mpe": suite_mpe,
}


def run_verify(trials=100, max_degree=32, seed=0, suites=None):
    """Run each suite with its own deterministic RNG stream."""
    if max_degree < 2:
        raise ValueError("max degree must be at least 2")
    results = []
    for name, fn in SUITES.items():
        if suites and name not in suites:
            continue
        res = SuiteResult(name)
        fn(random.Random(f"{seed}:{name}"), trials, max_degree, res)
        results.append(res)
    return results

