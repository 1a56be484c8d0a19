"""Graded Lie algebras of maximal class over GF(2).

Nilpotent quotients of 2-generated presentations, Bi-Zassenhaus loop
algebras built directly from their constituent pattern, and the binomial
parity suites that back the expansion identities.
"""

from .algebra import (
    AmbiguousPreimageError,
    BasisElement,
    Element,
    GradedAlgebra,
    GradedSubspaceFamily,
    InapplicableError,
    JacobiReport,
    NoPreimageError,
    adx_preimage,
    graded_center,
    jacobi_check,
    quotient,
    second_center,
    two_step_centralizers,
    z_substitution_holds,
)
from .analyze import AnalysisReport, CenterEntry, CheckResult, analyze
from .bl import (
    BlParams,
    CentralizerSequence,
    ConstituentSequence,
    ThetaSpec,
    bl_centralizer_sequence,
    bl_constituent_lengths,
    bl_params,
    centralizer_sequence,
    check_CL,
    constituent_lengths,
    construct_bl,
    mu_word,
    presentation_R,
    theta_specs,
    theta_word,
    v_word,
)
from .char2 import (
    GF2wField,
    ParityClaim,
    binom_mod2,
    binom_mod2_oracle,
    glaisher_check,
    identity_I_check,
    identity_I_expected,
    lucas_row,
    pascal_row,
    power_sum_parity,
    verify_appendix,
)
from .gf2 import BitVec, EchelonBasis, SpanSolver, echelonize, kernel, solve_in_span
from .nq import Presentation, nq_compute
from .oracle import (
    ORACLE_MAX_CLASS,
    assoc_bracket,
    bracket_letter,
    free_nq_oracle,
    hall_basis,
    hall_basis_selfcheck,
    lie_word_to_assoc,
    witt_dimension,
)
from .words import (
    CommutatorWord,
    GeneratorSymbol,
    GenPower,
    GroupPower,
    WordSyntaxError,
    X,
    Y,
    Z,
    make_word,
    parse_word,
    word_from_letters,
)

__all__ = [
    "AmbiguousPreimageError",
    "AnalysisReport",
    "BasisElement",
    "BitVec",
    "BlParams",
    "CentralizerSequence",
    "CenterEntry",
    "CheckResult",
    "CommutatorWord",
    "ConstituentSequence",
    "EchelonBasis",
    "Element",
    "GF2wField",
    "GenPower",
    "GeneratorSymbol",
    "GradedAlgebra",
    "GradedSubspaceFamily",
    "GroupPower",
    "InapplicableError",
    "JacobiReport",
    "NoPreimageError",
    "ORACLE_MAX_CLASS",
    "ParityClaim",
    "Presentation",
    "SpanSolver",
    "ThetaSpec",
    "WordSyntaxError",
    "X",
    "Y",
    "Z",
    "adx_preimage",
    "analyze",
    "assoc_bracket",
    "binom_mod2",
    "binom_mod2_oracle",
    "bl_centralizer_sequence",
    "bl_constituent_lengths",
    "bl_params",
    "bracket_letter",
    "centralizer_sequence",
    "check_CL",
    "constituent_lengths",
    "construct_bl",
    "echelonize",
    "free_nq_oracle",
    "glaisher_check",
    "graded_center",
    "hall_basis",
    "hall_basis_selfcheck",
    "identity_I_check",
    "identity_I_expected",
    "jacobi_check",
    "kernel",
    "lie_word_to_assoc",
    "lucas_row",
    "make_word",
    "mu_word",
    "nq_compute",
    "parse_word",
    "pascal_row",
    "power_sum_parity",
    "presentation_R",
    "quotient",
    "second_center",
    "solve_in_span",
    "theta_specs",
    "theta_word",
    "two_step_centralizers",
    "v_word",
    "verify_appendix",
    "witt_dimension",
    "word_from_letters",
    "z_substitution_holds",
]
