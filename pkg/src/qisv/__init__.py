"""Symbolic checks for quantum increasing sequences and quantum permutations."""

__version__ = "0.1.0"

from .algebra import Element, GeneratorId, RewriteRule, Rewriter, Verdict, involution, is_zero, mul, normalize
from .classical import (
    IncreasingSequence,
    Permutation,
    closure,
    complete,
    enumerate_sequences,
    matrix_rep,
    witness_generators,
)
from .morphisms import (
    CheckReport,
    GeneratorMap,
    Status,
    apply,
    check_diagram,
    check_well_defined,
    curran_map,
    diagram_dot,
    diagram_tilde,
    eta_dot,
    eta_tilde,
    q_bar_map,
    q_map,
)
from .models import beta_consistency, commutative_model, evaluate, permutation_model
from .presentations import derived_vanishing, magic_presentation, qis_presentation
