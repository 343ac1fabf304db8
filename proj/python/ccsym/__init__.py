"""Exact local symbols on the projective line over artinian coefficient rings.

The heavy lifting lives in the compiled extension `_ccsym`; this package
re-exports its surface. Quick start::

    import ccsym
    A = ccsym.Algebra("F3[e^2]")
    u = ccsym.Series(A, "z+e")
    w = ccsym.Series(A, "1-z")
    ccsym.cc_symbol(u, w)          # 1 + 2*e

    f = ccsym.RationalFunction(A, "t+e")
    g = ccsym.RationalFunction(A, "1-t")
    ccsym.reciprocity(f, g)        # per-point locals, product == 1
"""

from _ccsym import (  # noqa: F401
    Algebra,
    CCSymError,
    ClosedPoint,
    Element,
    RationalFunction,
    Series,
    SymbolValue,
    cc_symbol,
    cc_symbol_residue,
    cocycle,
    decompose,
    exp_nilpotent,
    hilbert_reciprocity,
    hilbert_symbol,
    local_expand,
    local_symbol,
    log_unipotent,
    norm,
    norm_symbol,
    phi_symbol,
    reciprocity,
    required_precision,
    suites,
    support,
    tame_symbol,
    verify,
    witt_add,
    witt_to_series_coeffs,
)

__all__ = [
    "Algebra",
    "CCSymError",
    "ClosedPoint",
    "Element",
    "RationalFunction",
    "Series",
    "SymbolValue",
    "cc_symbol",
    "cc_symbol_residue",
    "cocycle",
    "decompose",
    "exp_nilpotent",
    "hilbert_reciprocity",
    "hilbert_symbol",
    "local_expand",
    "local_symbol",
    "log_unipotent",
    "norm",
    "norm_symbol",
    "phi_symbol",
    "reciprocity",
    "required_precision",
    "suites",
    "support",
    "tame_symbol",
    "verify",
    "witt_add",
    "witt_to_series_coeffs",
]

__version__ = "0.1.0"
