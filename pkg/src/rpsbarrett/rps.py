"""Residue polynomial systems over GF(2).

A polynomial ``X`` with ``degree(X) < L`` is represented by its remainders
modulo pairwise coprime moduli ``M_1 .. M_n`` whose degrees sum to ``L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from . import channels
from .counter import tally
from .errors import (
    DegreeZeroModulus,
    NotCoprime,
    NotInvertible,
    PartialVector,
    TooFewModuli,
    UnknownResidue,
    ValidationError,
)
from .poly import Gf2Poly, _divmod, _inv, _mod, _mul, _mulmod, from_hex


class ResidueVector:
    """Residues of one polynomial, some of which may be unknown.

    Unknown entries exist only between the quotient and base-extension
    steps of the residue Barrett multiplication.  Reading one raises
    :class:`UnknownResidue`.
    """

    __slots__ = ("_bits", "known_mask")

    def __init__(self, values, known_mask=None):
        bits = tuple(v.bits if isinstance(v, Gf2Poly) else int(v) for v in values)
        if known_mask is None:
            known_mask = (True,) * len(bits)
        known_mask = tuple(bool(k) for k in known_mask)
        if len(known_mask) != len(bits):
            raise ValueError("known_mask length differs from values length")
        self._bits = tuple(b if k else 0 for b, k in zip(bits, known_mask))
        self.known_mask = known_mask

    @classmethod
    def _from_raw(cls, bits, known_mask):
        v = cls.__new__(cls)
        v._bits = tuple(bits)
        v.known_mask = tuple(known_mask)
        return v

    def __len__(self):
        return len(self._bits)

    def is_full(self):
        return all(self.known_mask)

    @property
    def known_indices(self):
        return [i for i, k in enumerate(self.known_mask) if k]

    @property
    def unknown_indices(self):
        return [i for i, k in enumerate(self.known_mask) if not k]

    def value(self, i):
        if not self.known_mask[i]:
            raise UnknownResidue(f"residue {i} is not known")
        return Gf2Poly(self._bits[i])

    @property
    def values(self):
        """All residues as :class:`Gf2Poly`; the vector must be fully known."""
        if not self.is_full():
            raise PartialVector(f"residues {self.unknown_indices} are unknown")
        return tuple(Gf2Poly(b) for b in self._bits)

    def raw(self):
        """Bit-packed residues (unknown entries read as 0)."""
        return list(self._bits)

    def restrict(self, indices):
        """Copy that keeps only ``indices`` marked as known."""
        keep = set(indices)
        for i in keep:
            if not self.known_mask[i]:
                raise UnknownResidue(f"residue {i} is not known")
        mask = [i in keep for i in range(len(self))]
        return ResidueVector._from_raw(
            (b if k else 0 for b, k in zip(self._bits, mask)), mask)

    def __eq__(self, other):
        if not isinstance(other, ResidueVector):
            return NotImplemented
        return self.known_mask == other.known_mask and self._bits == other._bits

    def __hash__(self):
        return hash((self._bits, self.known_mask))

    def __repr__(self):
        items = [hex(b) if k else "?" for b, k in zip(self._bits, self.known_mask)]
        return f"ResidueVector([{', '.join(items)}])"


@dataclass(frozen=True)
class MrsDigits:
    """Mixed-radix digits ``Y_1 .. Y_n`` of a polynomial."""

    digits: tuple


class RpsContext:
    """Validated moduli with precomputed inverses and CRT weights.

    ``inv_table[k][i]`` holds ``M_k^-1 mod M_i`` as a raw int for every
    ``k != i`` (``None`` on the diagonal); it is built eagerly because the
    quotient and base-extension recurrences read it in their inner loops.
    """

    def __init__(self, moduli):
        moduli = tuple(m if isinstance(m, Gf2Poly) else Gf2Poly(m) for m in moduli)
        if len(moduli) < 2:
            raise TooFewModuli(f"need at least two moduli, got {len(moduli)}")
        for i, m in enumerate(moduli):
            if m.bits.bit_length() < 2:
                raise DegreeZeroModulus(i)
        self.moduli = moduli
        self.mods = tuple(m.bits for m in moduli)
        self.degrees = tuple(m.bit_length() - 1 for m in self.mods)
        self.total_degree = sum(self.degrees)
        n = len(moduli)
        inv = [[None] * n for _ in range(n)]
        for k in range(n):
            for i in range(n):
                if i == k:
                    continue
                try:
                    inv[k][i] = _inv(_mod(self.mods[k], self.mods[i]), self.mods[i])
                except NotInvertible:
                    raise NotCoprime(min(i, k), max(i, k)) from None
        self.inv_table = tuple(tuple(row) for row in inv)
        weights = []
        for i in range(n):
            t = 1
            for k in range(n):
                if k != i:
                    t = _mulmod(t, inv[k][i], self.mods[i])
            weights.append(t)
        self._weights = tuple(weights)

    @property
    def n(self):
        return len(self.mods)

    @property
    def L(self):
        return self.total_degree

    @cached_property
    def big_modulus(self):
        acc = 1
        for m in self.mods:
            acc = _mul(acc, m)
        return Gf2Poly(acc)

    @property
    def crt_weights(self):
        """``T_i`` with ``T_i * (M / M_i) = 1 (mod M_i)``."""
        return tuple(Gf2Poly(t) for t in self._weights)

    @cached_property
    def _cofactors(self):
        big = self.big_modulus.bits
        return tuple(_divmod(big, m)[0] for m in self.mods)

    @cached_property
    def vector_bank(self):
        """Channel-parallel kernels, or ``None`` when a modulus is too wide."""
        if max(self.degrees) > channels.MAX_LANE_DEGREE:
            return None
        return channels.VectorBank(self.mods, self.inv_table)

    def sub_product(self, indices):
        acc = 1
        for i in indices:
            acc = _mul(acc, self.mods[i])
        return Gf2Poly(acc)

    def check_vector(self, v):
        """Raise unless every known entry of ``v`` is reduced."""
        if len(v) != self.n:
            raise ValidationError(f"vector has {len(v)} entries, context has {self.n}")
        for i, (b, k) in enumerate(zip(v._bits, v.known_mask)):
            if k and b.bit_length() > self.degrees[i]:
                raise ValidationError(f"residue {i} is not reduced modulo M_{i}")

    def __repr__(self):
        return f"RpsContext(n={self.n}, L={self.L}, degrees={list(self.degrees)})"


def build_context(moduli):
    return RpsContext(moduli)


def to_residues(x, ctx, counter=None):
    bits = x.bits if isinstance(x, Gf2Poly) else int(x)
    tally(counter, "encode", reductions=ctx.n)
    return ResidueVector._from_raw((_mod(bits, m) for m in ctx.mods), (True,) * ctx.n)


def constant_vector(c, ctx):
    """Residues of a constant (degree-0) polynomial, e.g. the vector of 1s."""
    return to_residues(Gf2Poly(c), ctx)


def _require_full(v):
    if not v.is_full():
        raise PartialVector(f"residues {v.unknown_indices} are unknown")


def crt_reconstruct(v, ctx):
    """The unique ``X`` with ``degree(X) < L`` and the given residues."""
    _require_full(v)
    x = 0
    for xi, t, m, cof in zip(v._bits, ctx._weights, ctx.mods, ctx._cofactors):
        if xi:
            x ^= _mul(_mulmod(t, xi, m), cof)
    return Gf2Poly(x)


def _mrs_digits(bits, order, ctx):
    vals = list(bits)
    channels.recurrence(vals, order, len(order) - 1, ctx.mods, ctx.inv_table)
    return [vals[i] for i in order]


def to_mrs(v, ctx):
    """Mixed-radix digits in context order, via the quotient recurrence."""
    _require_full(v)
    digits = _mrs_digits(v._bits, list(range(ctx.n)), ctx)
    return MrsDigits(tuple(Gf2Poly(d) for d in digits))


def _horner(digits, mods):
    x = 0
    for y, m in zip(reversed(digits), reversed(mods)):
        x = _mul(x, m) ^ y
    return x


def from_mrs(d, ctx):
    if len(d.digits) != ctx.n:
        raise ValidationError(f"expected {ctx.n} digits, got {len(d.digits)}")
    return Gf2Poly(_horner([y.bits for y in d.digits], ctx.mods))


def decode_partial(v, ctx):
    """Reconstruct from the known entries only.

    Returns the unique polynomial of degree below the summed degree of the
    known moduli; callers must know the true polynomial is that small.
    """
    order = v.known_indices
    if not order:
        raise PartialVector("no residues are known")
    digits = _mrs_digits(v._bits, order, ctx)
    return Gf2Poly(_horner(digits, [ctx.mods[i] for i in order]))


def read_moduli(path):
    """Parse a moduli file: one hex polynomial per line, ``#`` comments."""
    moduli = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            moduli.append(Gf2Poly(from_hex(text)))
        except ValueError as exc:
            raise ValidationError(f"{path}:{lineno}: bad polynomial {text!r}") from exc
    return moduli


def write_moduli(path, moduli, header=()):
    lines = [f"# {h}" for h in header]
    lines += [m.to_hex() for m in moduli]
    Path(path).write_text("\n".join(lines) + "\n")
