"""Exact real-algebra kernel: polynomials over Q, Sturm counting, resultants.

Everything here runs on Python integers and ``fractions.Fraction``; only the
sign-grid module falls back to floating point (with an mpmath safety net).
"""

from .appendix import GAMMA, build_appendix, check_specializations, published, specialized
from .commonroot import CandidateFound, NoCommonRoot, common_root_check
from .identities import IdentityReport, verify_resultant_identities
from .lemmas import LemmaReport, SubCheck, verify_lemma
from .poly import ExactPoly, variables
from .resultant import resultant
from .signs import GridSpec, SignReport, verify_section42_signs, verify_sign_claims
from .univariate import RootIsolation, isolate_roots, sturm_count

__all__ = [
    "CandidateFound",
    "ExactPoly",
    "GAMMA",
    "GridSpec",
    "IdentityReport",
    "LemmaReport",
    "NoCommonRoot",
    "RootIsolation",
    "SignReport",
    "SubCheck",
    "build_appendix",
    "check_specializations",
    "common_root_check",
    "isolate_roots",
    "published",
    "resultant",
    "specialized",
    "sturm_count",
    "variables",
    "verify_lemma",
    "verify_resultant_identities",
    "verify_section42_signs",
    "verify_sign_claims",
]
