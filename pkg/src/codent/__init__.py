"""Exact invariant theory for symmetrized weight enumerators over F2 x Z4.

Arithmetic lives in Q(z8) (:mod:`codent.cyclotomic`); everything else is
built on it: matrices, generator groups, codes, enumerators and Molien
series.
"""

from .closure import GroupClosure, close_group
from .codes import CodeSet, GenMatrix, enumerate_code, is_self_dual, is_type2
from .cyclotomic import Cyclo8, inv_sqrt_pow2, root_of_unity
from .enumerators import SWEPoly, act, evaluate, is_invariant, swe
from .groups import build_chi, build_eta, build_xi, build_zeta, symmetrize
from .linalg import CMatrix, char_det, det, nullspace, rank
from .molien import expand_formula, fixed_space_dim, molien_series
from .ring import F2_Z4, RingSpec
from .verify import VerificationReport, VerifyConfig, verify_paper

__version__ = "0.1.0"

__all__ = [
    "Cyclo8", "root_of_unity", "inv_sqrt_pow2",
    "CMatrix", "det", "nullspace", "rank", "char_det",
    "RingSpec", "F2_Z4",
    "build_chi", "build_xi", "build_eta", "build_zeta", "symmetrize",
    "GroupClosure", "close_group",
    "GenMatrix", "CodeSet", "enumerate_code", "is_self_dual", "is_type2",
    "SWEPoly", "swe", "act", "evaluate", "is_invariant",
    "molien_series", "expand_formula", "fixed_space_dim",
    "VerifyConfig", "VerificationReport", "verify_paper",
]
