"""Exact algebra of rational difference operators.

Everything is computed symbolically over the difference field of
rational functions in the shifts u_k of a single dependent variable
(plus optional constant symbols); no floating point is involved.
"""
from .errors import (
    DivisionByZero,
    ParseError,
    PreconditionFailed,
    SortError,
    TimeLimitExceeded,
)
from .field import RatFunc, qq, sym, u
from .diffop import (
    DiffOp,
    S,
    dop,
    left_divide,
    left_gcd,
    left_lcm,
    right_divide,
    right_gcd,
    right_lcm,
)
from .ratop import RatOp, from_left_fraction
from .variational import (
    BiDiffOp,
    Density,
    euler_operator,
    frechet_elem,
    frechet_dop,
    frechet_rop,
    lie_bracket,
)
from .structures import (
    EvolutionEq,
    OmegaForm,
    Verdict,
    apply_rop,
    compat_check,
    ham_check_direct,
    ham_check_rational,
    ham_check_thm2,
    invariance_check,
    omega_transport,
    preham_certificate,
    preham_pair_check,
    preham_pair_from_ham_pair,
    recursion_check,
    skew_check,
    symmetry_check,
)
from .parser import parse, parse_right_fraction
from .report import emit_registry, emit_report, emit_value

__version__ = "0.1.0"

__all__ = [
    "BiDiffOp",
    "Density",
    "DiffOp",
    "DivisionByZero",
    "EvolutionEq",
    "OmegaForm",
    "ParseError",
    "PreconditionFailed",
    "RatFunc",
    "RatOp",
    "S",
    "SortError",
    "TimeLimitExceeded",
    "Verdict",
    "apply_rop",
    "compat_check",
    "dop",
    "emit_registry",
    "emit_report",
    "emit_value",
    "euler_operator",
    "frechet_dop",
    "frechet_elem",
    "frechet_rop",
    "from_left_fraction",
    "ham_check_direct",
    "ham_check_rational",
    "ham_check_thm2",
    "invariance_check",
    "left_divide",
    "left_gcd",
    "left_lcm",
    "lie_bracket",
    "omega_transport",
    "parse",
    "parse_right_fraction",
    "preham_certificate",
    "preham_pair_check",
    "preham_pair_from_ham_pair",
    "qq",
    "recursion_check",
    "right_divide",
    "right_gcd",
    "right_lcm",
    "skew_check",
    "sym",
    "symmetry_check",
    "u",
]
