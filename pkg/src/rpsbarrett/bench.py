"""Timing and operation-count benchmark over the coset-built systems."""

from __future__ import annotations

import random
import time
from pathlib import Path

from . import bex, quotient
from .barrett import ba_mpm_detail
from .cosets import build_mersenne_system
from .counter import OpCounter
from .errors import ValidationError
from .randgen import random_below, random_poly
from .rps import to_residues

DEFAULTS = {"p": [2, 3, 4], "trials": 10, "swapped": False, "parallel": False, "seed": 0}

COLUMNS = [
    "k", "N", "n", "L", "a", "b", "swapped", "parallel", "ms_per_mpm", "madd", "mmult",
    "quot_measured", "quot_formula", "quot_delta",
    "bex_measured", "bex_schedule", "bex_reference", "bex_delta_reference",
]


def _parse_bool(text):
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValidationError(f"not a boolean: {text!r}")


def parse_config(text):
    """Parse ``key=value`` lines; ``p`` may be a comma-separated list."""
    cfg = dict(DEFAULTS)
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "p":
            cfg["p"] = [int(v) for v in value.split(",") if v.strip()]
        elif key in ("trials", "seed"):
            cfg[key] = int(value, 0)
        elif key in ("swapped", "parallel"):
            cfg[key] = _parse_bool(value)
        else:
            raise ValidationError(f"line {lineno}: unknown key {key!r}")
    if not cfg["p"] or any(k < 2 for k in cfg["p"]):
        raise ValidationError("p values must be >= 2")
    if cfg["trials"] < 1:
        raise ValidationError("trials must be positive")
    return cfg


def load_config(path):
    return parse_config(Path(path).read_text())


def run_bench(cfg):
    rows = []
    for k in cfg["p"]:
        rng = random.Random(f"{cfg['seed']}:{k}")
        setup = build_mersenne_system(k)
        n_deg = setup.N
        bctx = setup.barrett(random_poly(rng, n_deg))
        rps = bctx.rps
        pairs = [(to_residues(random_below(rng, n_deg), rps), to_residues(random_below(rng, n_deg), rps))
                 for _ in range(cfg["trials"])]
        counter = OpCounter()
        ba_mpm_detail(*pairs[0], bctx, counter, cfg["parallel"], cfg["swapped"])
        start = time.perf_counter()
        for ar, br in pairs:
            ba_mpm_detail(ar, br, bctx, None, cfg["parallel"], cfg["swapped"])
        elapsed = time.perf_counter() - start
        n, a = rps.n, bctx.a
        quot = counter.step("2a")[0]
        bx = counter.step("2b")[0]
        rows.append({
            "k": k, "N": n_deg, "n": n, "L": rps.L, "a": a, "b": bctx.b,
            "swapped": cfg["swapped"], "parallel": cfg["parallel"],
            "ms_per_mpm": round(1000 * elapsed / len(pairs), 3),
            "madd": counter.madd, "mmult": counter.mmult,
            "quot_measured": quot,
            "quot_formula": quotient.expected_cost(n, a),
            "quot_delta": quot - quotient.expected_cost(n, a),
            # BEX in step 2b extends from the n - a non-G channels
            "bex_measured": bx,
            "bex_schedule": bex.expected_cost(n, n - a),
            "bex_reference": bex.reference_cost(n, n - a),
            "bex_delta_reference": bx - bex.reference_cost(n, n - a),
            "steps": counter.steps,
        })
    return rows
