"""Dehornoy-ordered canonical representatives of Hilden double cosets.

Braids on 2n strands are compared with the Dehornoy order, grouped into
(budgeted) Hilden double cosets, and ordered through the Dehornoy-least
minimal-complexity member of each coset. Plat-closure invariants restrict
attention to braids whose plat closure looks like a given link.
"""

from .braid import BraidWord, format_word, free_reduce, parse_word, permutation_of
from .complexity import (
    ComplexityFunction,
    ball_enumerate,
    complexity_of,
    garside_complexity,
    geodesic_length,
)
from .dehornoy import (
    CONVENTION,
    OrderOutcome,
    SigmaClass,
    dehornoy_compare,
    dehornoy_min,
    dehornoy_sorted,
    handle_reduce,
    sigma_classify,
)
from .errors import (
    BudgetExceededError,
    ContractViolationError,
    IntegrityError,
    MalformedInputError,
    NotFoundError,
    PlatOrderError,
    UsageError,
)
from .explorer import (
    Budget,
    CanPlatReport,
    CosetCell,
    OrderReport,
    can_plat_search,
    explore_cell,
    order_classes,
    signature_cells,
)
from .garside import BraidElement, inf_sup, normal_form, word_problem_equal
from .hilden import HildenGenerator, hilden_generators, verify_generators
from .laurent import LaurentPoly
from .plat import PlatSignature, component_count, kauffman_bracket_plat, plat_signature

__version__ = "0.1.0"
