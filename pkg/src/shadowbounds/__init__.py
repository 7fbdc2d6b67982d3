"""Exact bounds on the number of minimum-weight shadow vectors of singly
even self-dual binary codes."""

from .bounds import (
    BoundStatement,
    CaseTag,
    LBounds,
    ShadowParams,
    bound_bhm,
    bound_imp,
    bound_n2mod4,
    l_bounds,
    lemma42_bound,
    maxab_bruteforce,
    maxab_closed,
    pair_unique,
    shadow_params,
    table1,
    table2,
)
from .codes import (
    BinaryCode,
    check_shadow_lemmas,
    classify,
    dual,
    parse_generator_matrix,
    shadow_decompose,
    verify_bound,
)
from .errors import DomainError, EnumerationGuardError, NoNegativeEntryError, ParseError
from .exact_arith import binom, ceil_div, ceil_sqrt, ceil_two_sqrt
from .families import evaluate, family, refine
from .johnson import EigenmatrixQ, JohnsonParams, bound_m, delsarte_vector, hahn, q_matrix

__version__ = "0.1.0"
