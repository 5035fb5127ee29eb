"""Gröbner–Shirshov bases for group algebras of the H-type Coxeter groups.

The pipeline is: build a presentation (:mod:`coxeter`), complete it
(:mod:`composition`), then read off standard monomials (:mod:`stdmon`).
:mod:`oracle` checks the results against exact reflection matrices.
"""

from .errors import (
    DegenerateRuleError,
    EmptyPolynomialError,
    FactorizationError,
    GSBasisError,
    InconsistentPresentationError,
    InfiniteLanguageError,
    InvalidWordError,
    NonStandardWordError,
    ParseError,
    PossiblyInfiniteGroupError,
    UnsupportedBondError,
)
from .freealg import (
    EMPTY,
    GeneratorSet,
    MonomialOrder,
    Ordering,
    Polynomial,
    deglex_compare,
    deglex_key,
    leading_term,
    poly_add,
    poly_mul_monomial,
    poly_scale,
)
from .rewrite import (
    Rule,
    RewriteSystem,
    find_reducible,
    format_basis,
    is_standard,
    make_rule,
    normal_form,
    parse_basis,
)
from .composition import (
    Composition,
    CompletionReport,
    all_compositions,
    complete,
    compositions,
    interreduce,
    is_closed,
    reduces_to_zero,
)
from .coxeter import (
    PRESETS,
    CoxeterMatrix,
    format_presentation,
    parse_presentation,
    preset,
    preset_presentation,
    presentation_from_matrix,
)
from .stdmon import (
    CosetTower,
    action_table,
    build_automaton,
    coset_tower,
    count_standard,
    enumerate_standard,
    even_count,
    length_counts,
    longest_standard,
    multiply,
)
from .golden import PHI, GMatrix, GoldenScalar
from .oracle import (
    build_rep,
    enumerate_group,
    verify_homomorphism,
    verify_relation,
    word_to_matrix,
)
from .relations import catalog, expand

__version__ = "0.1.0"
