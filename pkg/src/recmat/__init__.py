"""Exact-arithmetic toolkit for recursive-matrix (Aigner-triangle) identity
verification: sparse multivariate polynomials, truncated power series with
Riordan-array machinery, triangle builders, identity verifiers, and a
residue / shift-operator oracle."""

from .polyring import Poly, binomial, parse_poly
from .series import Series, lagrange_coeff, riordan_entry, solve_f
from .triangles import (SigmaTauSpec, Triangle, build_triangle, cigler_entry,
                        homogeneity_check, m_entry, narayana_entry,
                        narayana_poly, riordan_crosscheck)
from .identities import (VerifyReport, compute_F, F_closed_form, gamma_expand,
                         verify_ballot, verify_catalan_corollary,
                         verify_F_recurrence, verify_specializations,
                         verify_thm4, verify_weighted_minor,
                         verify_weighted_permanent)
from .oracle import OreOp, residue_F, verify_factorization

__all__ = [
    "Poly", "binomial", "parse_poly",
    "Series", "lagrange_coeff", "riordan_entry", "solve_f",
    "SigmaTauSpec", "Triangle", "build_triangle", "cigler_entry",
    "homogeneity_check", "m_entry", "narayana_entry", "narayana_poly",
    "riordan_crosscheck",
    "VerifyReport", "compute_F", "F_closed_form", "gamma_expand",
    "verify_ballot", "verify_catalan_corollary", "verify_F_recurrence",
    "verify_specializations", "verify_thm4", "verify_weighted_minor",
    "verify_weighted_permanent",
    "OreOp", "residue_F", "verify_factorization",
]
