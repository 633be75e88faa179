"""Symbolic calculator for finite rank locally compact abelian groups.

Groups are formal direct sums of eleven kinds of indecomposable atoms
(Z, Q, R, T, Sol, A, Afin and the p-local families Z/p^n, Z_p, Q_p,
Q_p/Z_p).  The package computes Pontryagin duals, Hom and tensor, their
derived versions including the two non-split indecomposables E and E*,
structural invariants (ranks, canonical filtration, p-components, two step
resolutions), and classes in the Grothendieck ring in both the
compact-discrete and the adelic coordinate systems.
"""

from .atoms import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    Atom,
    EngineInvariantError,
    Family,
    FlcaGroup,
    Prime,
    decompose_cyclic,
    dual,
    fin_cyc,
    p_adic,
    pro_int,
    pruefer,
)
from .derived import (
    DerivedObject,
    ExtResult,
    GradedObject,
    HeartToken,
    derived_tensor,
    dual_derived,
    ext,
    rhom,
)
from .expr import (
    EvalError,
    ExprError,
    ParseError,
    Value,
    evaluate_text,
    parse,
    render_json,
    render_text,
)
from .homtensor import hom, tensor
from .k0 import (
    K0Class,
    from_adelic,
    involution,
    k0_from_invariants,
    k0_of,
    k0_of_derived,
    left_inverse_winner,
    make_k0,
    mul,
    to_adelic,
)
from .structure import (
    Filtration,
    RankProfile,
    Resolution,
    ResolutionKind,
    TypeClass,
    classify_atom,
    filtration,
    p_component,
    ranks,
    resolve_injective,
    resolve_projective,
)

__version__ = "0.1.0"

__all__ = [
    "ADELE",
    "CIRCLE",
    "FIN_ADELE",
    "INT",
    "RAT",
    "REAL",
    "SOLENOID",
    "Atom",
    "DerivedObject",
    "EngineInvariantError",
    "EvalError",
    "ExprError",
    "ExtResult",
    "Family",
    "Filtration",
    "FlcaGroup",
    "GradedObject",
    "HeartToken",
    "K0Class",
    "ParseError",
    "Prime",
    "RankProfile",
    "Resolution",
    "ResolutionKind",
    "TypeClass",
    "Value",
    "classify_atom",
    "decompose_cyclic",
    "derived_tensor",
    "dual",
    "dual_derived",
    "evaluate_text",
    "ext",
    "filtration",
    "fin_cyc",
    "from_adelic",
    "hom",
    "involution",
    "k0_from_invariants",
    "k0_of",
    "k0_of_derived",
    "left_inverse_winner",
    "make_k0",
    "mul",
    "p_adic",
    "p_component",
    "parse",
    "pro_int",
    "pruefer",
    "ranks",
    "render_json",
    "render_text",
    "resolve_injective",
    "resolve_projective",
    "rhom",
    "tensor",
    "to_adelic",
]
