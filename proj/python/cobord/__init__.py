"""Exact hypersurface index bounds and algebraic-cobordism lattices.

Thin re-export of the compiled extension; see the project README for the
grammar of variety specs (``P2xH2,3``) and bundle expressions (``(~T)^2``).
"""

from ._cobord import (
    chi_bundle,
    chi_hypersurface,
    check_class,
    dual_lattice,
    fermat_certificate,
    fundamental_polynomial,
    gcd_lemma,
    half_euler,
    hattori_stong,
    index_bound,
    lattice,
    pair,
    signature,
    threshold,
)

__all__ = [
    "chi_bundle",
    "chi_hypersurface",
    "check_class",
    "dual_lattice",
    "fermat_certificate",
    "fundamental_polynomial",
    "gcd_lemma",
    "half_euler",
    "hattori_stong",
    "index_bound",
    "lattice",
    "pair",
    "signature",
    "threshold",
]
