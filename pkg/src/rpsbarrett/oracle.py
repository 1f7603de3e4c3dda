"""Brute-force references.

Deliberately naive and independent of the rest of the package: coefficient
lists instead of bit tricks, plain long division, no caching.  The
optimized paths are checked against these so their bugs cannot confirm
themselves.
"""

from __future__ import annotations

from .errors import DivisionByZero
from .poly import Gf2Poly


def _coeffs(p):
    bits = p.bits if hasattr(p, "bits") else int(p)
    out = []
    while bits:
        out.append(bits & 1)
        bits >>= 1
    return out


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pack(c):
    v = 0
    for i, bit in enumerate(c):
        if bit:
            v |= 1 << i
    return v


def naive_mul(a, b):
    ca, cb = _coeffs(a), _coeffs(b)
    if not ca or not cb:
        return 0
    out = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        if x:
            for j, y in enumerate(cb):
                if y:
                    out[i + j] ^= 1
    return _pack(out)


def naive_divmod(x, d):
    cd = _coeffs(d)
    if not cd:
        raise DivisionByZero("division by zero polynomial")
    r = _coeffs(x)
    dd = len(cd) - 1
    q = [0] * max(len(r) - dd, 0)
    for top in range(len(r) - 1, dd - 1, -1):
        if r[top]:
            shift = top - dd
            q[shift] = 1
            for j, y in enumerate(cd):
                if y:
                    r[shift + j] ^= 1
    return _pack(_trim(q)), _pack(_trim(r))


def naive_mod(x, d):
    return naive_divmod(x, d)[1]


def naive_mpm(a, b, p):
    """``A*B mod P`` by school-book product and long division."""
    return Gf2Poly(naive_mod(naive_mul(a, b), p))


def naive_mpe(a, e, p):
    """``A**e mod P`` by left-to-right square-and-multiply."""
    if not _coeffs(p):
        raise DivisionByZero("division by zero polynomial")
    result = naive_mod(1, p)
    for bit in bin(int(e))[2:]:
        result = naive_mod(naive_mul(result, result), p)
        if bit == "1":
            result = naive_mod(naive_mul(result, a), p)
    return Gf2Poly(result)


def naive_residues(x, moduli):
    return [naive_mod(x, m) for m in moduli]


def _naive_inverse(a, m):
    # extended Euclid on coefficient lists
    r0, r1 = m, naive_mod(a, m)
    s0, s1 = 0, 1
    while r1:
        q, r = naive_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ naive_mul(q, s1)
    if r0 != 1:
        raise ArithmeticError("not invertible")
    return naive_mod(s0, m)


def naive_crt(residues, moduli):
    """Unique ``X`` below the moduli's total degree with these residues."""
    moduli = [m.bits if hasattr(m, "bits") else int(m) for m in moduli]
    big = 1
    for m in moduli:
        big = naive_mul(big, m)
    x = 0
    for r, m in zip(residues, moduli):
        r = r.bits if hasattr(r, "bits") else int(r)
        cof = naive_divmod(big, m)[0]
        t = _naive_inverse(naive_mod(cof, m), m)
        x ^= naive_mul(naive_mod(naive_mul(r, t), m), cof)
    return Gf2Poly(x)
