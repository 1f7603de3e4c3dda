"""Operation tallies for residue-channel algorithms."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class OpCounter:
    """MADD / MMULT / reduction counts, broken down by step label.

    One MADD is a channel addition (XOR), one MMULT a channel product
    followed by its reduction.  ``reductions`` counts standalone reductions
    too, e.g. encoding a dense polynomial into residues.
    """

    steps: dict = field(default_factory=dict)
    mpm_calls: int = 0

    def add(self, step, madd=0, mmult=0, reductions=0):
        row = self.steps.setdefault(step, [0, 0, 0])
        row[0] += madd
        row[1] += mmult
        row[2] += reductions

    @property
    def madd(self):
        return sum(r[0] for r in self.steps.values())

    @property
    def mmult(self):
        return sum(r[1] for r in self.steps.values())

    @property
    def reductions(self):
        return sum(r[2] for r in self.steps.values())

    def step(self, label):
        madd, mmult, red = self.steps.get(label, (0, 0, 0))
        return madd, mmult, red

    def merge(self, other):
        for label, (a, m, r) in other.steps.items():
            self.add(label, a, m, r)
        self.mpm_calls += other.mpm_calls

    def rows(self):
        """``(step, madd, mmult, reductions)`` rows plus a ``total`` row."""
        out = [(label, *vals) for label, vals in self.steps.items()]
        out.append(("total", self.madd, self.mmult, self.reductions))
        return out

    def format_table(self, sep="\t"):
        lines = [sep.join(("step", "madd", "mmult", "reductions"))]
        lines += [sep.join(str(v) for v in row) for row in self.rows()]
        return "\n".join(lines)


def tally(counter, step, madd=0, mmult=0, reductions=0):
    """Add to ``counter`` if one was supplied."""
    if counter is not None:
        counter.add(step, madd, mmult, reductions)
