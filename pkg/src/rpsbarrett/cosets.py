"""Moduli from the factorization of ``u**n - 1`` over GF(2).

For odd ``n`` the irreducible factors of ``u**n - 1`` are the minimal
polynomials of ``gamma**s`` for one representative ``s`` of each
cyclotomic coset of 2 modulo ``n``, where ``gamma`` has order ``n`` in
GF(2^m), ``m`` being the order of 2 modulo ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .barrett import build_barrett_context
from .errors import EvenN, ValidationError
from .poly import Gf2Poly, _mul, _mulmod, _powmod, _prime_factors
from .rps import RpsContext

# One irreducible (in fact primitive) polynomial per extension degree.
FIELD_POLYS = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
}


def cyclotomic_cosets(n):
    """Cosets of 2 in Z/nZ, ordered by smallest element."""
    seen = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        coset = []
        j = s
        while j not in coset:
            coset.append(j)
            j = 2 * j % n
        seen.update(coset)
        cosets.append(tuple(coset))
    return cosets


def multiplicative_order(n):
    """Order of 2 modulo odd ``n`` (1 for ``n = 1``)."""
    if n == 1:
        return 1
    k, v = 1, 2 % n
    while v != 1:
        v = 2 * v % n
        k += 1
    return k


def _element_of_order(n, m, f):
    q = (1 << m) - 1
    primes = _prime_factors(n) if n > 1 else []
    for x in range(2, 1 << m):
        gamma = _powmod(x, q // n, f)
        if all(_powmod(gamma, n // r, f) != 1 for r in primes):
            return gamma
    return 1  # n == 1 in GF(2)


@dataclass(frozen=True)
class CosetFactorization:
    n: int
    cosets: tuple
    factors: tuple

    @property
    def degrees(self):
        return [f.degree for f in self.factors]


def factor_xn_minus_1(n):
    """Irreducible factors of ``u**n - 1``, one per cyclotomic coset."""
    if n < 1 or n % 2 == 0:
        raise EvenN(f"n must be odd and positive, got {n}")
    m = multiplicative_order(n)
    if m not in FIELD_POLYS:
        raise ValidationError(f"order of 2 mod {n} is {m}; field table stops at 2^20")
    f = FIELD_POLYS[m]
    gamma = _element_of_order(n, m, f)
    powers = [1]
    for _ in range(n - 1):
        powers.append(_mulmod(powers[-1], gamma, f))
    cosets = cyclotomic_cosets(n)
    factors = []
    for coset in cosets:
        coeffs = [1]  # extension-field coefficients, lowest degree first
        for j in coset:
            root = powers[j]
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] ^= c
                nxt[i] ^= _mulmod(c, root, f)
            coeffs = nxt
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ArithmeticError(f"minimal polynomial of coset {coset} left GF(2)")
            bits |= c << i
        factors.append(Gf2Poly(bits))
    acc = 1
    for fac in factors:
        acc = _mul(acc, fac.bits)
    if acc != (1 << n) | 1:
        raise ArithmeticError(f"factors do not multiply back to u^{n} + 1")
    return CosetFactorization(n, tuple(cosets), tuple(factors))


@dataclass(frozen=True)
class CyclotomicSystem:
    """Residue system for ``N = 2**k - 1`` with ``G = H = u**N - 1``.

    ``M = (u**N - 1) * (u**(N+2) - 1) / (u - 1)``.  The ``G`` factors come
    first, so ``g_indices = h_indices = 0 .. a-1``.
    """

    k: int
    N: int
    rps: RpsContext
    g: Gf2Poly
    h: Gf2Poly
    g_indices: tuple
    h_indices: tuple

    @property
    def g_degrees(self):
        return [self.rps.degrees[i] for i in self.g_indices]

    @property
    def other_degrees(self):
        gset = set(self.g_indices)
        return [d for i, d in enumerate(self.rps.degrees) if i not in gset]

    def barrett(self, p):
        """Barrett context for a modulus ``P`` of degree ``N``."""
        if p.degree != self.N:
            raise ValidationError(f"P must have degree {self.N}, got {p.degree}")
        return build_barrett_context(p, self.g, self.h, self.rps, self.g_indices, self.h_indices)


def build_mersenne_system(k):
    if k < 2:
        raise ValidationError("k must be at least 2")
    return build_odd_context((1 << k) - 1, k)


def build_odd_context(n, k=None):
    """Same construction for any odd ``n``."""
    if n < 1 or n % 2 == 0:
        raise EvenN(f"N must be odd, got {n}")
    low = factor_xn_minus_1(n)
    high = factor_xn_minus_1(n + 2)
    unit = Gf2Poly(0b11)
    others = [f for f in high.factors if f != unit]
    moduli = list(low.factors) + others
    rps = RpsContext(moduli)
    g = Gf2Poly((1 << n) | 1)
    idx = tuple(range(len(low.factors)))
    return CyclotomicSystem(k, n, rps, g, g, idx, idx)
