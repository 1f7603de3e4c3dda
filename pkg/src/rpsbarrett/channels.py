"""Per-modulus ("channel") arithmetic kernels.

Two interchangeable execution paths:

* the sequential reference path works on lists of raw ints, one channel at
  a time, using the scalar helpers from :mod:`rpsbarrett.poly`;
* :class:`VectorBank` evaluates one step across all channels at once with
  numpy ``uint64`` lanes.  It requires every modulus degree to be at most
  63 so a reduced residue fits a lane.

Both paths must agree bit for bit; the test-suite checks this.
"""

from __future__ import annotations

import numpy as np

from .poly import _mod, _mul

MAX_LANE_DEGREE = 63


def mulmod(a, b, m):
    return _mod(_mul(a, b), m)


def recurrence(vals, order, steps, mods, inv, trace=None):
    """Run the quotient/base-extension recurrence in place.

    For ``k`` in ``range(steps)`` with pivot ``p = order[k]``, every later
    channel ``i`` in ``order`` is updated to
    ``(vals[i] - vals[p]) * inv[p][i] mod mods[i]``.  After step ``k`` the
    entries ``order[k+1:]`` hold the residues of ``floor(X / (M_order[0] ...
    M_order[k]))``.  ``trace(k, vals)`` is called after every step.

    Returns the number of channel updates performed.
    """
    evaluations = 0
    for k in range(steps):
        p = order[k]
        qk = vals[p]
        row = inv[p]
        for i in order[k + 1:]:
            vals[i] = _mod(_mul(vals[i] ^ qk, row[i]), mods[i])
            evaluations += 1
        if trace is not None:
            trace(k, vals)
    return evaluations


class VectorBank:
    """Channel-parallel kernels for one fixed list of moduli."""

    def __init__(self, mods, inv):
        self.n = len(mods)
        degs = [m.bit_length() - 1 for m in mods]
        self.width = max(degs)
        if self.width > MAX_LANE_DEGREE:
            raise ValueError(f"modulus degree {self.width} does not fit a 64-bit lane")
        self.mods = np.array(mods, dtype=np.uint64)
        self.degs = np.array(degs, dtype=np.uint64)
        self._shifts = np.arange(self.width, dtype=np.uint64)[:, None]
        self._inv = inv
        self._pivot_cols = {}

    def pack(self, values):
        return np.array(values, dtype=np.uint64)

    @staticmethod
    def unpack(arr):
        return [int(v) for v in arr]

    def xtime(self, x):
        """Multiply every lane by ``u`` modulo its own modulus."""
        y = x << np.uint64(1)
        top = (y >> self.degs) & np.uint64(1)
        return y ^ (top * self.mods)

    def columns(self, c):
        """Matrix of ``u**j * c_i mod M_i`` for ``j < width``: shape (width, n)."""
        cols = np.empty((self.width, self.n), dtype=np.uint64)
        x = c
        for j in range(self.width):
            cols[j] = x
            x = self.xtime(x)
        return cols

    def mul_const(self, x, cols):
        """Lane-wise ``x_i * c_i mod M_i`` given ``cols = columns(c)``.

        ``x_i`` need not be reduced, only narrower than ``width`` bits.
        """
        bits = (x[None, :] >> self._shifts) & np.uint64(1)
        return np.bitwise_xor.reduce(bits * cols, axis=0)

    def mul(self, x, y):
        return self.mul_const(x, self.columns(y))

    def pivot_columns(self, p):
        cols = self._pivot_cols.get(p)
        if cols is None:
            row = [0 if i == p else self._inv[p][i] for i in range(self.n)]
            cols = self.columns(self.pack(row))
            self._pivot_cols[p] = cols
        return cols

    def recurrence(self, vals, order, steps, trace=None):
        """Vector twin of :func:`recurrence`; returns ``(array, evaluations)``."""
        vals = vals.copy()
        active = np.zeros(self.n, dtype=bool)
        active[list(order)] = True
        evaluations = 0
        for k in range(steps):
            p = order[k]
            active[p] = False
            new = self.mul_const(vals ^ vals[p], self.pivot_columns(p))
            vals = np.where(active, new, vals)
            evaluations += int(active.sum())
            if trace is not None:
                trace(k, self.unpack(vals))
        return vals, evaluations
