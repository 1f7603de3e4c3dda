"""Modular exponentiation kept entirely in residue form."""

from __future__ import annotations

from .barrett import ba_mpm, ba_mpm_swapped, dense_barrett_mpm
from .errors import ValidationError
from .poly import Gf2Poly
from .rps import constant_vector


def ba_mpe(a_res, e, bctx, counter=None, parallel=False, swapped=False):
    """Residues of ``A**e mod P`` by right-to-left square-and-multiply.

    Bit ``e_0`` seeds the accumulator with ``A`` or with the residues of 1;
    each later bit costs one squaring plus one multiply when set.  ``e = 0``
    yields the residues of the constant 1.
    """
    e = int(e)
    if e < 0:
        raise ValidationError("exponent must be nonnegative")
    mpm = ba_mpm_swapped if swapped else ba_mpm
    c = a_res if e & 1 else constant_vector(1, bctx.rps)
    base = a_res
    for j in range(1, e.bit_length()):
        base = mpm(base, base, bctx, counter, parallel)
        if e >> j & 1:
            c = mpm(c, base, bctx, counter, parallel)
    return c


def expected_mpm_calls(e):
    """Squarings plus multiplies issued for exponent ``e``."""
    if e <= 1:
        return 0
    return (e.bit_length() - 1) + bin(e >> 1).count("1")


def dense_mpe(a, e, params):
    """Dense twin of :func:`ba_mpe` using :func:`dense_barrett_mpm`."""
    e = int(e)
    if e < 0:
        raise ValidationError("exponent must be nonnegative")
    c = a if e & 1 else Gf2Poly(1)
    base = a
    for j in range(1, e.bit_length()):
        base = dense_barrett_mpm(base, base, params)[0]
        if e >> j & 1:
            c = dense_barrett_mpm(c, base, params)[0]
    return c
