"""Stable Grothendieck polynomials via Hecke insertion, and K-theoretic quiver coefficients."""

from .expansion import (Expansion, decreasing_tableaux_for, grothendieck_recursion,
                        increasing_tableaux_for, max_tableau, monomials_compatible,
                        monomials_setvalued, skew_lr_coefficients, stable_coefficients,
                        stable_coefficients_decreasing, universal_coefficients)
from .hecke import Permutation, hecke_product, reduce_word
from .insertion import (CompatiblePair, hecke_insert, insert_compatible_pair,
                        product_decreasing, product_increasing, recover_compatible_pair,
                        reverse_hecke_insert)
from .polynomial import SparsePolynomial
from .quiver import (RankConditions, factor_sequences, kms_factorizations, quiver_coefficients,
                     verify_quivstab, zelevinsky)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "reduce_word", "hecke_product",
    "hecke_insert", "reverse_hecke_insert", "CompatiblePair", "insert_compatible_pair",
    "recover_compatible_pair", "product_increasing", "product_decreasing",
    "Expansion", "SparsePolynomial", "increasing_tableaux_for", "decreasing_tableaux_for",
    "max_tableau", "stable_coefficients", "stable_coefficients_decreasing",
    "monomials_compatible", "monomials_setvalued", "grothendieck_recursion",
    "skew_lr_coefficients", "universal_coefficients",
    "RankConditions", "zelevinsky", "kms_factorizations", "factor_sequences",
    "quiver_coefficients", "verify_quivstab",
]
