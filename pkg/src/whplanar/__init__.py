"""Planarity of cyclically symmetric graphs Gamma_n(A, B, Q), circulants and Whitehead graphs."""

from .circulant import (
    CircCase,
    CircPlanarVerdict,
    CirculantSpec,
    build_circ,
    canonicalize_circ,
    circ_components,
    classify_circ_planar,
)
from .errors import (
    EmptyQ,
    EmptyWord,
    IndexOutOfRange,
    LoopContraction,
    NotAnEdge,
    NotCanonical,
    NotRegularizable,
    SizeLimitExceeded,
    SynthesisFailed,
    WhplanarError,
    WordSyntaxError,
    ZeroStep,
)
from .gamma import (
    ConditionReport,
    GammaDecomposition,
    GammaSpec,
    build_gamma,
    canonicalize_gamma,
    canonicalize_gamma_loose,
    check_conditions,
    gamma_components,
)
from .graph import MultiGraph, components, contract_edge, contract_edges, simple_underlying, to_dot
from .isomorphism import IsoCertificate, are_isomorphic
from .planarity import is_planar
from .table import ClassMatch, classify_gamma, classify_with_regularity
from .verify import (
    EnumerationBounds,
    VerificationReport,
    verify_named_claims,
    verify_prop31,
    verify_theorem_A,
)
from .whitehead import (
    CyclicPresentation,
    Letter,
    MultiplicityPlan,
    is_cyclically_reduced,
    parse_word,
    plan_multiplicities,
    reduced_whitehead_spec,
    synthesize_word,
    whitehead_graph,
)

__version__ = "0.1.0"
