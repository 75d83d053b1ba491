"""Argumentation-based case-based reasoning.

Predicts outcomes for new cases by mining an attack graph from a casebase
and testing membership of the default argument in the grounded extension;
also provides the cautiously monotonic variant that learns from a concise
subcasebase, plus checkers for non-monotonic inference properties.
"""

from .casebase import (
    SUBSET_ORDER,
    Case,
    Casebase,
    OrderOutcome,
    ParseError,
    Polarity,
    casebase_from_json,
    casebase_to_json,
    compare,
    is_coherent,
    load_casebase,
    make_casebase,
    nearest_cases,
    strata,
)
from .cumulative import (
    ConciseBuild,
    PreconditionViolation,
    build,
    concise_oracle,
    is_includable,
    is_sufficient,
    is_surprising,
    predict_c,
    simple_add,
)
from .framework import Framework, GroundedResult, Label, defends, grounded, is_acyclic, reaches
from .mining import (
    MinedFramework,
    NewCase,
    RegularityViolation,
    attacks_condition,
    mine,
    mined_to_dot,
    predict,
    remove_spikes,
    spikes,
)
from .properties import (
    Engine,
    Property,
    PropertyReport,
    Sentence,
    Witness,
    check_properties,
    check_property,
    enumerate_casebases,
    infers,
    search_counterexample,
)

__all__ = [name for name in dir() if not name.startswith("_")]
