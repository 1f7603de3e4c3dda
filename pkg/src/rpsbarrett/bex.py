"""Base extension: fill in unknown residues from known ones.

:func:`bex_extend` reuses the quotient recurrence: dividing by the product
``M_K`` of the known moduli leaves the mixed-radix part of ``X`` behind, so
``X mod M_i = init_i - Q_i * M_K (mod M_i)`` for any initial guess
``init_i`` of the unknown residues.  :func:`bex_crt` is an independent
cross-check built on CRT weights of the known sub-system.
"""

from __future__ import annotations

import random

from .counter import tally
from .errors import DegreeOverflow, EmptyKnownSet, ValidationError
from .poly import _mod, _mul, _mulmod
from .quotient import run_recurrence
from .rps import ResidueVector


class BexPlan:
    """Known index set ``K`` with the constants both methods need."""

    def __init__(self, ctx, known_indices):
        known = sorted(set(known_indices))
        if not known:
            raise EmptyKnownSet("base extension needs at least one known residue")
        if known[0] < 0 or known[-1] >= ctx.n:
            raise ValidationError(f"known indices out of range 0..{ctx.n - 1}")
        self.ctx = ctx
        self.known = tuple(known)
        kset = set(known)
        self.unknown = tuple(i for i in range(ctx.n) if i not in kset)
        self.order = self.known + self.unknown
        self.known_degree = sum(ctx.degrees[i] for i in known)
        # M_K mod M_i for every target channel
        mk = {}
        for i in self.unknown:
            acc = 1
            for k in known:
                acc = _mulmod(acc, ctx.mods[k], ctx.mods[i])
            mk[i] = acc
        self.mk_mod = mk
        self._crt = None
        self._final_cols = None

    @property
    def a(self):
        return len(self.known)

    def crt_constants(self):
        """Sub-system CRT weights and ``(M_K / M_i) mod M_j`` cross terms."""
        if self._crt is None:
            ctx = self.ctx
            weights = {}
            for i in self.known:
                t = 1
                for k in self.known:
                    if k != i:
                        t = _mulmod(t, ctx.inv_table[k][i], ctx.mods[i])
                weights[i] = t
            cross = {}
            for j in self.unknown:
                mj = ctx.mods[j]
                residues = {k: _mod(ctx.mods[k], mj) for k in self.known}
                for i in self.known:
                    acc = 1
                    for k in self.known:
                        if k != i:
                            acc = _mulmod(acc, residues[k], mj)
                    cross[i, j] = acc
            self._crt = (weights, cross)
        return self._crt

    def final_columns(self, bank):
        if self._final_cols is None:
            row = [self.mk_mod.get(i, 0) for i in range(self.ctx.n)]
            self._final_cols = bank.columns(bank.pack(row))
        return self._final_cols

    def __repr__(self):
        return f"BexPlan(K={list(self.known)}, n={self.ctx.n})"


def expected_cost(n, a):
    """MADD (= MMULT) total of the schedule as implemented.

    ``a`` recurrence steps touching ``n - k`` channels each, then ``n - a``
    final corrections: ``(n - a/2 - 1/2) * a + (n - a)``.
    """
    return (2 * n - a - 1) * a // 2 + (n - a)


def reference_cost(n, a):
    """The closed form stated alongside the algorithm: ``(n - a/2 - 1) * a + (n - a)``.

    It undercounts the schedule by ``a / 2``; kept for reporting only.
    """
    return (n - 0.5 * a - 1) * a + (n - a)


def _as_plan(x, plan_or_ctx):
    if isinstance(plan_or_ctx, BexPlan):
        plan = plan_or_ctx
        if tuple(x.known_indices) != plan.known:
            raise ValidationError("vector's known set does not match the plan")
        return plan
    return BexPlan(plan_or_ctx, x.known_indices)


def _check(x, plan, degree_bound):
    if len(x) != plan.ctx.n:
        raise ValidationError(f"vector has {len(x)} entries, context has {plan.ctx.n}")
    plan.ctx.check_vector(x)
    if degree_bound is not None and degree_bound >= plan.known_degree:
        raise DegreeOverflow(
            f"declared degree {degree_bound} needs more than the {plan.known_degree} "
            "known residue degrees")


def initial_values(plan, init, rng=None):
    """Starting guesses for the unknown channels.

    ``init`` is ``"zeros"`` (default), ``"ones"`` (every coefficient below
    the modulus degree set), ``"random"``, or a mapping / length-``n``
    sequence of ints.
    """
    ctx = plan.ctx
    if init is None or init == "zeros":
        return {i: 0 for i in plan.unknown}
    if init == "ones":
        return {i: (1 << ctx.degrees[i]) - 1 for i in plan.unknown}
    if init == "random":
        rng = rng or random.Random()
        return {i: rng.getrandbits(ctx.degrees[i]) for i in plan.unknown}
    if isinstance(init, dict):
        return {i: _mod(int(init.get(i, 0)), ctx.mods[i]) for i in plan.unknown}
    return {i: _mod(int(init[i]), ctx.mods[i]) for i in plan.unknown}


def bex_extend(x, plan, init=None, counter=None, parallel=False, degree_bound=None,
               step="bex", rng=None):
    """Extend ``x`` (known on ``K``) to a fully known vector.

    The polynomial behind ``x`` must have degree below the summed degree of
    the known moduli.  The result does not depend on ``init``.
    """
    plan = _as_plan(x, plan)
    _check(x, plan, degree_bound)
    ctx = plan.ctx
    if not plan.unknown:
        return x
    start = initial_values(plan, init, rng)
    vals = x.raw()
    for i, v in start.items():
        vals[i] = v
    vals, evals = run_recurrence(vals, plan.order, plan.a, ctx, parallel)
    bank = ctx.vector_bank if parallel else None
    if bank is None:
        out = list(vals)
        for i in plan.unknown:
            out[i] = start[i] ^ _mod(_mul(vals[i], plan.mk_mod[i]), ctx.mods[i])
    else:
        q = bank.pack(vals)
        corr = bank.mul_const(q, plan.final_columns(bank))
        init_arr = bank.pack([start.get(i, 0) for i in range(ctx.n)])
        fixed = bank.unpack(init_arr ^ corr)
        out = list(vals)
        for i in plan.unknown:
            out[i] = fixed[i]
    for i in plan.known:
        out[i] = x._bits[i]
    final = len(plan.unknown)
    tally(counter, step, madd=evals + final, mmult=evals + final,
          reductions=evals + final)
    return ResidueVector._from_raw(out, (True,) * ctx.n)


def bex_crt(x, plan, counter=None, degree_bound=None, step="bex-crt"):
    """Base extension through the CRT of the known sub-system.

    For polynomials the weighted sum already has degree below the known
    moduli's total, so no correction multiple is needed.
    """
    plan = _as_plan(x, plan)
    _check(x, plan, degree_bound)
    ctx = plan.ctx
    if not plan.unknown:
        return x
    weights, cross = plan.crt_constants()
    s = {i: _mulmod(weights[i], x._bits[i], ctx.mods[i]) for i in plan.known}
    out = x.raw()
    for j in plan.unknown:
        mj = ctx.mods[j]
        acc = 0
        for i in plan.known:
            acc ^= _mulmod(s[i], cross[i, j], mj)
        out[j] = acc
    a, t = plan.a, len(plan.unknown)
    tally(counter, step, madd=(a - 1) * t, mmult=a * (t + 1), reductions=a * (t + 1))
    return ResidueVector._from_raw(out, (True,) * ctx.n)
