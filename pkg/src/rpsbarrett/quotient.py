"""Quotient residues without reconstruction.

Given the residues of ``X`` over the whole system, compute the residues of
``floor(X / M_I)`` where ``M_I`` is the product of the moduli in an index
set ``I``.  The quotient comes out on the complement of ``I`` only.
"""

from __future__ import annotations

from . import channels
from .counter import tally
from .errors import BadPlan, PartialInput
from .rps import ResidueVector


class QuotientPlan:
    """Divisor index set ``I`` plus the derived channel schedule.

    Divisor indices are consumed in ascending context order; the remaining
    indices follow.  Step ``k`` therefore updates ``n - k`` channels.
    """

    def __init__(self, ctx, divisor_indices):
        idx = sorted(set(divisor_indices))
        if not idx:
            raise BadPlan("divisor index set is empty")
        if len(idx) >= ctx.n:
            raise BadPlan("divisor index set must be a proper subset")
        if idx[0] < 0 or idx[-1] >= ctx.n:
            raise BadPlan(f"divisor indices out of range 0..{ctx.n - 1}")
        self.ctx = ctx
        self.divisor_indices = tuple(idx)
        rest = [i for i in range(ctx.n) if i not in set(idx)]
        self.complement = tuple(rest)
        self.order = tuple(idx) + tuple(rest)

    @property
    def a(self):
        return len(self.divisor_indices)

    def __repr__(self):
        return f"QuotientPlan(I={list(self.divisor_indices)}, n={self.ctx.n})"


def expected_cost(n, a):
    """MADD (= MMULT) total of the recurrence: ``(n - a/2 - 1/2) * a``."""
    return (2 * n - a - 1) * a // 2


def quotient_residues(x, plan, counter=None, parallel=False, step="quotient", trace=None):
    """Residues of ``floor(X / M_I)`` on the complement of ``I``.

    ``X`` must have degree below the context's ``L`` so the residues pin it
    down.  Each recurrence evaluation is one MADD and one MMULT.
    """
    if not x.is_full():
        raise PartialInput(f"residues {x.unknown_indices} are unknown")
    ctx = plan.ctx
    ctx.check_vector(x)
    vals, evals = run_recurrence(x.raw(), plan.order, plan.a, ctx, parallel, trace)
    tally(counter, step, madd=evals, mmult=evals, reductions=evals)
    keep = set(plan.complement)
    mask = [i in keep for i in range(ctx.n)]
    return ResidueVector._from_raw((v if k else 0 for v, k in zip(vals, mask)), mask)


def run_recurrence(vals, order, steps, ctx, parallel=False, trace=None):
    """Shared driver for the sequential and channel-parallel paths.

    Returns ``(values, evaluations)``.
    """
    bank = ctx.vector_bank if parallel else None
    if bank is None:
        vals = list(vals)
        evals = channels.recurrence(vals, order, steps, ctx.mods, ctx.inv_table, trace)
        return vals, evals
    out, evals = bank.recurrence(bank.pack(vals), order, steps, trace)
    return bank.unpack(out), evals
