"""Seeded random instances for the verify command, benchmarks and tests."""

from __future__ import annotations

from .barrett import assemble_rps, build_barrett_context, pad_irreducibles
from .errors import ConditionViolated
from .poly import Gf2Poly, _mul
from .rps import RpsContext


def random_poly(rng, degree):
    """Uniform polynomial of exactly ``degree`` (zero for a negative degree)."""
    if degree < 0:
        return Gf2Poly(0)
    return Gf2Poly((1 << degree) | rng.getrandbits(degree))


def random_below(rng, n):
    """Uniform polynomial of degree below ``n`` (possibly zero)."""
    return Gf2Poly(rng.getrandbits(n)) if n > 0 else Gf2Poly(0)


def random_gh_degrees(rng, n, min_degree=0, slack=None):
    """``(alpha, beta)`` with ``alpha <= N`` and ``alpha + beta >= 2N - 2``."""
    slack = n if slack is None else slack
    alpha = rng.randint(min_degree, n)
    lo = max(2 * n - 2 - alpha, min_degree)
    return alpha, rng.randint(lo, lo + slack)


def random_params(rng, n, min_degree=0, slack=None):
    """Random ``(P, G, H)`` satisfying the exactness conditions."""
    p = random_poly(rng, n)
    alpha, beta = random_gh_degrees(rng, n, min_degree, slack)
    g = random_poly(rng, alpha)
    h = g if rng.random() < 0.2 and alpha >= 2 * n - 2 - alpha else random_poly(rng, beta)
    return p, g, h


def random_barrett_context(rng, n, slack=4, attempts=50):
    """Random residue-ready Barrett context for ``deg P = n``.

    Draws are retried when ``G`` and ``H`` share a factor with unequal
    multiplicity, which no residue system can serve.
    """
    for _ in range(attempts):
        p, g, h = random_params(rng, n, min_degree=1, slack=slack)
        try:
            rps, gi, hi = assemble_rps(p, g, h)
            return build_barrett_context(p, g, h, rps, gi, hi)
        except ConditionViolated:
            continue
    raise RuntimeError("could not draw a usable (P, G, H)")


_SMALL = [f.bits for f in pad_irreducibles(6)]


def random_rps(rng, n, composite=True):
    """``n`` pairwise coprime moduli of degree at most 12.

    Distinct irreducibles of degree <= 6; with ``composite`` some are
    squared, so moduli need not be irreducible.
    """
    picks = rng.sample(_SMALL, n)
    moduli = []
    for f in picks:
        if composite and f.bit_length() <= 4 and rng.random() < 0.3:
            f = _mul(f, f)
        moduli.append(f)
    return RpsContext(moduli)
