"""Dense polynomials over GF(2).

A polynomial is bit-packed into a nonnegative Python integer: bit ``i`` is
the coefficient of ``u**i``.  Python integers are canonical (no leading
zero words), so equal polynomials always share one representation.

The ``_``-prefixed helpers work on raw integers and are what the residue
channels call in their inner loops; :class:`Gf2Poly` wraps them as an
immutable value type.
"""

from __future__ import annotations

from .errors import BothZero, DivisionByZero, NotInvertible

NEG_INF = float("-inf")
"""Degree of the zero polynomial; compares below every integer."""

KARATSUBA_CUTOFF = 512


def _deg(a):
    return a.bit_length() - 1


def _schoolbook(a, b):
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _karatsuba(a, b):
    n = max(a.bit_length(), b.bit_length())
    if min(a.bit_length(), b.bit_length()) < KARATSUBA_CUTOFF:
        return _schoolbook(a, b)
    k = n // 2
    mask = (1 << k) - 1
    a0, a1 = a & mask, a >> k
    b0, b1 = b & mask, b >> k
    lo = _karatsuba(a0, b0)
    hi = _karatsuba(a1, b1)
    mid = _karatsuba(a0 ^ a1, b0 ^ b1) ^ lo ^ hi
    return (hi << (2 * k)) ^ (mid << k) ^ lo


def _mul(a, b):
    """Carry-less product of two bit-packed polynomials."""
    if a.bit_length() >= KARATSUBA_CUTOFF and b.bit_length() >= KARATSUBA_CUTOFF:
        return _karatsuba(a, b)
    return _schoolbook(a, b)


def _mod(a, m):
    dm = m.bit_length() - 1
    if dm < 0:
        raise DivisionByZero("division by zero polynomial")
    da = a.bit_length() - 1
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return a


def _divmod(a, m):
    dm = m.bit_length() - 1
    if dm < 0:
        raise DivisionByZero("division by zero polynomial")
    q = 0
    da = a.bit_length() - 1
    while da >= dm:
        s = da - dm
        q |= 1 << s
        a ^= m << s
        da = a.bit_length() - 1
    return q, a


def _mulmod(a, b, m):
    return _mod(_mul(a, b), m)


def _gcd(a, b):
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, _mod(a, b)
    return a


def _inv(a, m):
    if not m:
        raise DivisionByZero("inverse modulo the zero polynomial")
    if m.bit_length() < 2:
        raise NotInvertible("modulus must have degree >= 1")
    r0, r1 = m, _mod(a, m)
    s0, s1 = 0, 1
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _mul(q, s1)
    if r0 != 1:
        raise NotInvertible(f"{to_hex(a)} is not invertible modulo {to_hex(m)}")
    return _mod(s0, m)


def _powmod(a, e, m):
    result = 1 if m.bit_length() > 1 else 0
    a = _mod(a, m)
    while e:
        if e & 1:
            result = _mulmod(result, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return result


def to_hex(bits):
    return hex(bits)


def from_hex(text):
    """Parse ``0x``-prefixed (or bare) hexadecimal polynomial text."""
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s:
        raise ValueError(f"empty polynomial literal: {text!r}")
    return int(s, 16)


class Gf2Poly:
    """Immutable polynomial over GF(2).

    Supports ``+ - * // %``, :func:`divmod`, equality and hashing.  Build
    from an int (``Gf2Poly(0x43)``), from exponents
    (``Gf2Poly.from_exponents([6, 1, 0])``) or from hex text.
    """

    __slots__ = ("bits",)

    def __init__(self, bits=0):
        if isinstance(bits, Gf2Poly):
            bits = bits.bits
        if bits < 0:
            raise ValueError("coefficient bit-vector must be nonnegative")
        object.__setattr__(self, "bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    @classmethod
    def from_exponents(cls, exponents):
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_hex(cls, text):
        return cls(from_hex(text))

    @classmethod
    def monomial(cls, k):
        return cls(1 << k)

    @property
    def degree(self):
        return NEG_INF if not self.bits else self.bits.bit_length() - 1

    def is_zero(self):
        return not self.bits

    def exponents(self):
        """Exponents of the nonzero terms, highest first."""
        return [i for i in range(self.bits.bit_length() - 1, -1, -1) if self.bits >> i & 1]

    def to_hex(self):
        return hex(self.bits)

    def __bool__(self):
        return bool(self.bits)

    def __eq__(self, other):
        if isinstance(other, Gf2Poly):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash(("Gf2Poly", self.bits))

    def __repr__(self):
        return f"Gf2Poly({hex(self.bits)})"

    def __str__(self):
        if not self.bits:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else "u" if e == 1 else f"u^{e}")
        return " + ".join(terms)

    def __add__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mul(self.bits, other.bits))

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mod(self.bits, other.bits))

    def __divmod__(self, other):
        return divrem(self, other)

    def __lshift__(self, k):
        return Gf2Poly(self.bits << k)

    def __rshift__(self, k):
        return Gf2Poly(self.bits >> k)


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)


def add(a, b):
    """Sum (equivalently, difference) of two polynomials."""
    return Gf2Poly(a.bits ^ b.bits)


def mul(a, b):
    return Gf2Poly(_mul(a.bits, b.bits))


def divrem(x, d):
    """Return ``(q, r)`` with ``x = q*d + r`` and ``degree(r) < degree(d)``.

    ``q`` is the polynomial floor of ``x/d``; it is zero when ``x`` has
    lower degree than ``d``.
    """
    q, r = _divmod(x.bits, d.bits)
    return Gf2Poly(q), Gf2Poly(r)


def floor_div(x, d):
    return Gf2Poly(_divmod(x.bits, d.bits)[0])


def gcd(a, b):
    return Gf2Poly(_gcd(a.bits, b.bits))


def lcm(a, b):
    g = _gcd(a.bits, b.bits)
    return Gf2Poly(_mul(_divmod(a.bits, g)[0], b.bits))


def inv_mod(a, m):
    """Inverse of ``a`` modulo ``m`` via the extended Euclidean algorithm."""
    return Gf2Poly(_inv(a.bits, m.bits))


def pow_mod(a, e, m):
    return Gf2Poly(_powmod(a.bits, e, m.bits))


def product(polys):
    acc = 1
    for p in polys:
        acc = _mul(acc, p.bits)
    return Gf2Poly(acc)


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f):
    """Rabin's irreducibility test over GF(2)."""
    bits = f.bits if isinstance(f, Gf2Poly) else f
    d = bits.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True
    # u^(2^k) mod f for k = 0..d
    frob = [_mod(2, bits)]
    for _ in range(d):
        frob.append(_mulmod(frob[-1], frob[-1], bits))
    if frob[d] != _mod(2, bits):
        return False
    for q in _prime_factors(d):
        if _gcd(frob[d // q] ^ 2, bits) != 1:
            return False
    return True
