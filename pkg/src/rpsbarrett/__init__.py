"""Barrett modular multiplication of GF(2) polynomials in residue form."""

from .barrett import (
    ba_mpm,
    ba_mpm_swapped,
    build_barrett_context,
    classic_barrett_mpm,
    dense_barrett_mpm,
    make_params,
    suggest_gh_from_p,
)
from .bex import bex_crt, bex_extend
from .cosets import build_mersenne_system, factor_xn_minus_1
from .counter import OpCounter
from .exponent import ba_mpe
from .poly import Gf2Poly
from .quotient import QuotientPlan, quotient_residues
from .rps import RpsContext, build_context, crt_reconstruct, to_residues

__version__ = "0.1.0"
