"""Barrett modular multiplication over GF(2) with general scaling polynomials.

The quotient ``floor(A*B / P)`` is obtained as
``floor(floor(A*B / G) * mu / H)`` with ``mu = floor(G*H / P)``.  It is
exact whenever ``2N - 2 <= deg G + deg H`` and ``deg G <= N``, where
``N = deg P``.  Because ``G`` and ``H`` need not be powers of ``u``, they can
be products of residue-system moduli, which lets the whole computation run
on residues (:func:`ba_mpm`).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .bex import BexPlan, bex_extend
from .counter import tally
from .errors import (
    ConditionViolated,
    DegreeTooLarge,
    IndexProductMismatch,
    PartialVector,
    SwapConditionViolated,
    ValidationError,
)
from .poly import (
    Gf2Poly,
    _divmod,
    _gcd,
    _mod,
    _mul,
    is_irreducible,
)
from .quotient import QuotientPlan, quotient_residues
from .rps import ResidueVector, RpsContext, to_residues

SUM_BOUND = "2N-2 <= alpha+beta"
ALPHA_BOUND = "alpha <= N"
LEDGER = "L > largest degree in steps 1-5"
G_DIVIDES = "G | M"
H_DIVIDES = "H | M"
G_COPRIME = "gcd(G, M/G) = 1"
H_COPRIME = "gcd(H, M/H) = 1"
SWAP = "L - beta > N - 1"


class DegreeBoundWarning(UserWarning):
    """Issued when the degree bounds feeding the exactness argument fail.

    These follow from the parameter conditions, so seeing one means a bug.
    """


def check_exactness(n, alpha, beta):
    if 2 * n - 2 > alpha + beta:
        raise ConditionViolated(SUM_BOUND, f"N={n}, alpha={alpha}, beta={beta}")
    if alpha > n:
        raise ConditionViolated(ALPHA_BOUND, f"N={n}, alpha={alpha}")


def ledger_degree(n, alpha, beta):
    """Largest polynomial degree any of steps 0-5 can produce.

    Covers ``X`` and ``Q*P`` (``2N-2``), ``E`` (``N+beta-2``) and ``mu``
    (``alpha+beta-N``).
    """
    return max(2 * n - 2, n + beta - 2, alpha + beta - n)


@dataclass(frozen=True)
class BarrettParams:
    p: Gf2Poly
    g: Gf2Poly
    h: Gf2Poly
    mu: Gf2Poly

    @property
    def N(self):
        return self.p.degree

    @property
    def alpha(self):
        return self.g.degree

    @property
    def beta(self):
        return self.h.degree


def make_params(p, g, h):
    """Validate ``(P, G, H)`` and precompute ``mu = floor(G*H / P)``."""
    if p.bits.bit_length() < 2:
        raise ConditionViolated("N >= 1", f"P = {p.to_hex()}")
    if not g or not h:
        raise ConditionViolated("G, H nonzero")
    check_exactness(p.degree, g.degree, h.degree)
    mu = Gf2Poly(_divmod(_mul(g.bits, h.bits), p.bits)[0])
    return BarrettParams(p, g, h, mu)


@dataclass(frozen=True)
class BarrettTrace:
    """Every intermediate of one dense Barrett reduction."""

    x: Gf2Poly
    d: Gf2Poly
    e: Gf2Poly
    q: Gf2Poly
    c: Gf2Poly


def _params(ctx):
    return getattr(ctx, "params", ctx)


def barrett_trace(x, params):
    """Steps 2-5 on a given product ``X`` (``deg X <= 2N - 2``)."""
    params = _params(params)
    n = params.N
    xb = x.bits
    if xb.bit_length() - 1 > 2 * n - 2:
        raise DegreeTooLarge(f"deg X = {x.degree} exceeds 2N-2 = {2 * n - 2}")
    d = _divmod(xb, params.g.bits)[0]
    e = _mul(d, params.mu.bits)
    q = _divmod(e, params.h.bits)[0]
    c = xb ^ _mul(q, params.p.bits)
    beta = params.beta
    if d.bit_length() - 1 > beta or params.mu.bits.bit_length() - 1 > beta:
        warnings.warn(
            f"degree bound deg D, deg mu <= beta fails: deg D = {d.bit_length() - 1}, "
            f"deg mu = {params.mu.degree}, beta = {beta}", DegreeBoundWarning)
    return BarrettTrace(x, Gf2Poly(d), Gf2Poly(e), Gf2Poly(q), Gf2Poly(c))


def _check_inputs(a, b, n):
    for name, v in (("A", a), ("B", b)):
        if v.bits.bit_length() > n:
            raise DegreeTooLarge(f"deg {name} = {v.degree} must be below N = {n}")


def dense_barrett_mpm(a, b, ctx):
    """``(A*B mod P, floor(A*B / P))`` by dense Barrett reduction."""
    params = _params(ctx)
    _check_inputs(a, b, params.N)
    t = barrett_trace(Gf2Poly(_mul(a.bits, b.bits)), params)
    return t.c, t.q


def classic_barrett_mpm(a, b, p, exp_a, exp_b):
    """Baseline Barrett reduction scaled by ``u**exp_a`` and ``u**exp_b``."""
    n = p.degree
    if p.bits.bit_length() < 2:
        raise ConditionViolated("N >= 1", f"P = {p.to_hex()}")
    check_exactness(n, exp_a, exp_b)
    _check_inputs(a, b, n)
    mu = _divmod(1 << (exp_a + exp_b), p.bits)[0]
    x = _mul(a.bits, b.bits)
    q = _mul(x >> exp_a, mu) >> exp_b
    c = x ^ _mul(q, p.bits)
    return Gf2Poly(c), Gf2Poly(q)


def suggest_gh_from_p(p, r_choices):
    """``G = H`` with ``floor(G**2 / P) = P``.

    Squaring is linear over GF(2), so flipping any of the coefficients
    ``0 .. (N-1)//2`` of ``P`` perturbs ``P**2`` only below degree ``N``.
    ``r_choices`` selects which of those ``(N-1)//2 + 1`` coefficients to
    flip; all zeros gives ``G = P``.
    """
    n = p.degree
    if p.bits.bit_length() < 2:
        raise ValueError("P must have degree >= 1")
    count = (n - 1) // 2 + 1
    r_choices = list(r_choices)
    if len(r_choices) != count:
        raise ValueError(f"expected {count} choices for N = {n}, got {len(r_choices)}")
    g = p.bits
    for i, r in enumerate(r_choices):
        if r:
            g ^= 1 << i
    return Gf2Poly(g), Gf2Poly(g)


@lru_cache(maxsize=None)
def _irreducibles_of_degree(d):
    if d == 1:
        return (0b10, 0b11)
    lo = 1 << d
    return tuple(f for f in range(lo + 1, lo << 1, 2) if is_irreducible(f))


def pad_irreducibles(max_degree=12):
    """Irreducible polynomials in (degree, value) order."""
    for d in range(1, max_degree + 1):
        for f in _irreducibles_of_degree(d):
            yield Gf2Poly(f)


def assemble_rps(p, g, h):
    """Build a residue system serving ``(P, G, H)``.

    The moduli are the coprime parts of ``G`` and ``H`` (``gcd(G, H)``,
    ``G / gcd`` and ``H / gcd``), padded with the smallest irreducibles
    coprime to them until the total degree exceeds every step's degree.
    Returns ``(ctx, g_indices, h_indices)``.
    """
    params = make_params(p, g, h)
    need = ledger_degree(params.N, params.alpha, params.beta) + 1
    if g == h:
        parts = [g.bits]
        g_parts = h_parts = [0]
    else:
        d = _gcd(g.bits, h.bits)
        gd = _divmod(g.bits, d)[0]
        hd = _divmod(h.bits, d)[0]
        if _gcd(d, gd) != 1:
            raise ConditionViolated(G_COPRIME, "G and H share a factor with unequal multiplicity")
        if _gcd(d, hd) != 1:
            raise ConditionViolated(H_COPRIME, "G and H share a factor with unequal multiplicity")
        parts, g_parts, h_parts = [], [], []
        for f, in_g, in_h in ((d, True, True), (gd, True, False), (hd, False, True)):
            if f.bit_length() < 2:
                continue
            if in_g:
                g_parts.append(len(parts))
            if in_h:
                h_parts.append(len(parts))
            parts.append(f)
    total = sum(f.bit_length() - 1 for f in parts)
    lcm = 1
    for f in parts:
        lcm = _mul(lcm, f)
    for f in pad_irreducibles():
        if total >= need and len(parts) >= 2:
            break
        if _gcd(f.bits, lcm) == 1:
            parts.append(f.bits)
            total += f.degree
    else:
        raise ValidationError("ran out of pad irreducibles")
    return RpsContext(parts), g_parts, h_parts


def _infer_indices(rps, poly):
    return [i for i, m in enumerate(rps.mods) if _gcd(m, poly.bits) != 1]


class BarrettContext:
    """Validated parameters bound to one residue system.

    Holds the residues of ``P`` and ``mu`` plus the quotient and
    base-extension plans for the ``G`` and ``H`` index sets, so repeated
    multiplications (e.g. inside exponentiation) reuse them.
    """

    def __init__(self, p, g, h, rps, g_indices=None, h_indices=None):
        self.params = make_params(p, g, h)
        self.rps = rps
        n, alpha, beta = self.params.N, self.params.alpha, self.params.beta
        led = ledger_degree(n, alpha, beta)
        if rps.L <= led:
            raise ConditionViolated(LEDGER, f"L = {rps.L}, largest degree = {led}")
        m = rps.big_modulus.bits
        for poly, divides, coprime in ((g, G_DIVIDES, G_COPRIME), (h, H_DIVIDES, H_COPRIME)):
            cof, rem = _divmod(m, poly.bits)
            if rem:
                raise ConditionViolated(divides)
            if _gcd(poly.bits, cof) != 1:
                raise ConditionViolated(coprime)
        if g_indices is None:
            g_indices = _infer_indices(rps, g)
        if h_indices is None:
            h_indices = _infer_indices(rps, h)
        self.g_indices = tuple(sorted(set(g_indices)))
        self.h_indices = tuple(sorted(set(h_indices)))
        for name, poly, idx in (("G", g, self.g_indices), ("H", h, self.h_indices)):
            if rps.sub_product(idx) != poly:
                raise IndexProductMismatch(f"product of moduli {list(idx)} is not {name}")
        self.g_quotient = QuotientPlan(rps, self.g_indices)
        self.g_bex = BexPlan(rps, self.g_quotient.complement)
        if self.h_indices == self.g_indices:
            self.h_quotient, self.h_bex = self.g_quotient, self.g_bex
        else:
            self.h_quotient = QuotientPlan(rps, self.h_indices)
            self.h_bex = BexPlan(rps, self.h_quotient.complement)
        self.p_res = to_residues(p, rps)
        self.mu_res = to_residues(self.params.mu, rps)
        self._cols = {}

    p = property(lambda self: self.params.p)
    g = property(lambda self: self.params.g)
    h = property(lambda self: self.params.h)
    mu = property(lambda self: self.params.mu)
    N = property(lambda self: self.params.N)
    alpha = property(lambda self: self.params.alpha)
    beta = property(lambda self: self.params.beta)

    @property
    def a(self):
        return len(self.g_indices)

    @property
    def b(self):
        return len(self.h_indices)

    def swap_allowed(self):
        return self.rps.L - self.beta > self.N - 1

    def const_columns(self, which, bank):
        cols = self._cols.get(which)
        if cols is None:
            vec = self.p_res if which == "p" else self.mu_res
            cols = bank.columns(bank.pack(vec.raw()))
            self._cols[which] = cols
        return cols

    def encode(self, poly):
        if poly.bits.bit_length() > self.N:
            raise DegreeTooLarge(f"deg {poly.degree} must be below N = {self.N}")
        return to_residues(poly, self.rps)

    def __repr__(self):
        return (f"BarrettContext(N={self.N}, alpha={self.alpha}, beta={self.beta}, "
                f"n={self.rps.n}, L={self.rps.L}, a={self.a}, b={self.b})")


def build_barrett_context(p, g, h, rps=None, g_indices=None, h_indices=None):
    """Validate every condition and cache the residue-side constants.

    Without ``rps`` a system is assembled by :func:`assemble_rps`.
    """
    if rps is None:
        rps, g_indices, h_indices = assemble_rps(p, g, h)
    return BarrettContext(p, g, h, rps, g_indices, h_indices)


@dataclass(frozen=True)
class MpmResult:
    """Residue vectors produced along one residue Barrett multiplication.

    ``q`` is only known off the ``H`` indices when the swapped schedule ran.
    """

    c: ResidueVector
    q: ResidueVector
    x: ResidueVector
    d: ResidueVector
    e: ResidueVector


def _full(v, n, name):
    if len(v) != n:
        raise ValidationError(f"{name} has {len(v)} residues, context has {n}")
    if not v.is_full():
        raise PartialVector(f"{name} residues {v.unknown_indices} are unknown")


def _vec(bits, n):
    return ResidueVector._from_raw(bits, (True,) * n)


def ba_mpm_detail(a_res, b_res, bctx, counter=None, parallel=False, swapped=False):
    """Residue Barrett multiplication returning every intermediate vector.

    Only channel arithmetic, quotient residues and base extension are used;
    no polynomial wider than one modulus is formed.
    """
    rps = bctx.rps
    n = rps.n
    _full(a_res, n, "A")
    _full(b_res, n, "B")
    if swapped and not bctx.swap_allowed():
        raise SwapConditionViolated(SWAP, f"L = {rps.L}, beta = {bctx.beta}, N = {bctx.N}")
    bank = rps.vector_bank if parallel else None
    if bank is None:
        x = [_mod(_mul(ai, bi), m) for ai, bi, m in zip(a_res._bits, b_res._bits, rps.mods)]
    else:
        x = bank.unpack(bank.mul(bank.pack(a_res._bits), bank.pack(b_res._bits)))
    tally(counter, "1", mmult=n, reductions=n)
    return _reduce(x, bctx, counter, bank, parallel, swapped)


def ba_reduce(x_res, bctx, counter=None, parallel=False, swapped=False):
    """Steps 2-5 on the residues of a product ``X`` with ``deg X <= 2N - 2``."""
    rps = bctx.rps
    _full(x_res, rps.n, "X")
    rps.check_vector(x_res)
    if swapped and not bctx.swap_allowed():
        raise SwapConditionViolated(SWAP, f"L = {rps.L}, beta = {bctx.beta}, N = {bctx.N}")
    bank = rps.vector_bank if parallel else None
    return _reduce(x_res.raw(), bctx, counter, bank, parallel, swapped)


def _reduce(x, bctx, counter, bank, parallel, swapped):
    rps = bctx.rps
    n = rps.n
    mods = rps.mods
    x_vec = _vec(x, n)

    d_part = quotient_residues(x_vec, bctx.g_quotient, counter, parallel, step="2a")
    d_vec = bex_extend(d_part, bctx.g_bex, counter=counter, parallel=parallel, step="2b")

    # step 3
    mu = bctx.mu_res._bits
    if bank is None:
        e = [_mod(_mul(di, ui), m) for di, ui, m in zip(d_vec._bits, mu, mods)]
    else:
        e = bank.unpack(bank.mul_const(bank.pack(d_vec._bits), bctx.const_columns("mu", bank)))
    tally(counter, "3", mmult=n, reductions=n)
    e_vec = _vec(e, n)

    q_part = quotient_residues(e_vec, bctx.h_quotient, counter, parallel, step="4a")
    p = bctx.p_res._bits
    if not swapped:
        q_vec = bex_extend(q_part, bctx.h_bex, counter=counter, parallel=parallel, step="4b")
        targets = range(n)
    else:
        q_vec = q_part
        targets = bctx.h_quotient.complement
    q = q_vec._bits

    # step 5, restricted to the non-H channels when swapped
    c = [0] * n
    if bank is None:
        for i in targets:
            c[i] = x[i] ^ _mod(_mul(q[i], p[i]), mods[i])
    else:
        full = bank.unpack(bank.pack(x) ^ bank.mul_const(bank.pack(q), bctx.const_columns("p", bank)))
        for i in targets:
            c[i] = full[i]
    k = len(targets)
    tally(counter, "5", madd=k, mmult=k, reductions=k)

    if swapped:
        mask = [False] * n
        for i in targets:
            mask[i] = True
        c_vec = bex_extend(ResidueVector._from_raw(c, mask), bctx.h_bex, counter=counter,
                           parallel=parallel, step="6")
    else:
        c_vec = _vec(c, n)
    if counter is not None:
        counter.mpm_calls += 1
    return MpmResult(c_vec, q_vec, x_vec, d_vec, e_vec)


def ba_mpm(a_res, b_res, bctx, counter=None, parallel=False):
    """Residues of ``A*B mod P`` from residues of ``A`` and ``B``."""
    return ba_mpm_detail(a_res, b_res, bctx, counter, parallel).c


def ba_mpm_swapped(a_res, b_res, bctx, counter=None, parallel=False):
    """Same result as :func:`ba_mpm`, extending ``C`` instead of ``Q``.

    Needs ``L - beta > N - 1`` and saves one MADD and one MMULT per
    ``H`` index.
    """
    return ba_mpm_detail(a_res, b_res, bctx, counter, parallel, swapped=True).c
