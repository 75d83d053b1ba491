"""The cautiously monotonic variant: learning a concise casebase.

The learner walks the casebase in layers of increasing specificity, keeps
only the cases whose outcome the framework built so far fails to predict,
and grows the attack graph incrementally.  The kept subset is coherent, all
of its members are surprising with respect to it, and when a concise subset
exists it is exactly the one returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Optional

from .casebase import (
    SUBSET_ORDER,
    Case,
    Casebase,
    OrderRelation,
    Polarity,
    geq,
    strata,
)
from .framework import Framework
from .mining import MinedFramework, attacks_condition, mine, outcome_of, predict, with_new_case


class PreconditionViolation(ValueError):
    """A case with the same characterisation is already in the framework."""


class SizeLimitExceeded(ValueError):
    """The casebase is too large for exhaustive subset enumeration."""


def is_surprising(case: Case, casebase: Casebase, order: OrderRelation = SUBSET_ORDER) -> bool:
    """Without the case, its own outcome would be predicted differently."""
    return predict(casebase.without_case(case), case.characterisation, order) is not case.outcome


def is_sufficient(case: Case, casebase: Casebase, order: OrderRelation = SUBSET_ORDER) -> bool:
    """With the case added, its own outcome is predicted."""
    return predict(casebase.with_case(case), case.characterisation, order) is case.outcome


def is_includable(case: Case, casebase: Casebase, order: OrderRelation = SUBSET_ORDER) -> bool:
    return is_surprising(case, casebase, order) and is_sufficient(case, casebase, order)


def simple_add(
    mined: MinedFramework, case: Case, order: OrderRelation = SUBSET_ORDER
) -> MinedFramework:
    """Extend a framework mined from a coherent casebase with one new case.

    The case must be added in stratum order: no existing case may be at
    least as specific.  Under that precondition the existing attacks cannot
    change — nothing can sit strictly between an old attacker and its target
    once every old case is at most as specific as the newcomer — so only the
    attacks touching the added case are computed; the result equals
    re-mining the extended casebase.
    """
    if mined.new_characterisation is not None:
        raise PreconditionViolation("simple_add expects a framework mined from the casebase alone")
    for existing in mined.casebase.cases:
        if geq(existing.characterisation, case.characterisation, order):
            raise PreconditionViolation(
                f"an existing case is at least as specific as "
                f"{sorted(case.characterisation)}; additions must follow stratum order"
            )
    default = mined.casebase.default_case()
    pool = list(mined.casebase.cases | {default, case})
    new_attacks = {
        (case, arg)
        for arg in pool
        if arg != case and attacks_condition(pool, case, arg, order)
    } | {
        (arg, case)
        for arg in pool
        if arg != case and arg != default and attacks_condition(pool, arg, case, order)
    }
    return MinedFramework(
        framework=Framework(
            arguments=mined.framework.arguments | {case},
            attacks=mined.framework.attacks | new_attacks,
        ),
        casebase=mined.casebase.with_case(case),
    )


@dataclass(frozen=True)
class AuditRecord:
    case: Case
    stratum: int
    included: bool
    predicted: Polarity


@dataclass(frozen=True)
class ConciseBuild:
    selected: Casebase
    framework: MinedFramework
    audit: tuple


def _empty_like(casebase: Casebase) -> Casebase:
    return Casebase(
        cases=frozenset(),
        default_characterisation=casebase.default_characterisation,
        default_label=casebase.default_label,
        nondefault_label=casebase.nondefault_label,
    )


def build(casebase: Casebase, order: OrderRelation = SUBSET_ORDER) -> ConciseBuild:
    """Select the surprising cases of the casebase, stratum by stratum.

    All cases of a stratum are tested against the same framework before any
    of them is added, so an incoherent pair is resolved deterministically:
    exactly one of the two is surprising at test time.
    """
    mined = mine(_empty_like(casebase), order=order)
    audit = []
    for index, stratum in enumerate(strata(casebase.cases, order)):
        to_add = []
        for case in sorted(stratum, key=lambda c: (sorted(c.characterisation), c.outcome.value)):
            predicted = outcome_of(with_new_case(mined, case.characterisation, order))
            included = predicted is not case.outcome
            audit.append(AuditRecord(case=case, stratum=index, included=included, predicted=predicted))
            if included:
                to_add.append(case)
        for case in to_add:
            mined = simple_add(mined, case, order)
    return ConciseBuild(selected=mined.casebase, framework=mined, audit=tuple(audit))


def predict_c(
    casebase: Casebase,
    new_characterisation: frozenset,
    order: OrderRelation = SUBSET_ORDER,
) -> Polarity:
    """Predict with the framework learned from the selected subset."""
    return predict(build(casebase, order).selected, new_characterisation, order)


def includable_set(casebase: Casebase, subset: Casebase, order: OrderRelation = SUBSET_ORDER) -> frozenset:
    """All cases of the casebase that are includable w.r.t. the subset."""
    return frozenset(case for case in casebase.cases if is_includable(case, subset, order))


def concise_oracle(
    casebase: Casebase,
    order: OrderRelation = SUBSET_ORDER,
    max_size: int = 15,
) -> Optional[Casebase]:
    """Brute-force search for the subset equal to its own includable set.

    Enumerates every subset; at most one fixed point can exist, and the
    function raises if that uniqueness ever fails.
    """
    cases = sorted(casebase.cases, key=lambda c: (sorted(c.characterisation), c.outcome.value))
    if len(cases) > max_size:
        raise SizeLimitExceeded(f"{len(cases)} cases exceed the enumeration bound {max_size}")
    fixed_points = []
    for subset in chain.from_iterable(
        combinations(cases, size) for size in range(len(cases) + 1)
    ):
        candidate = Casebase(
            cases=frozenset(subset),
            default_characterisation=casebase.default_characterisation,
            default_label=casebase.default_label,
            nondefault_label=casebase.nondefault_label,
        )
        if includable_set(casebase, candidate, order) == candidate.cases:
            fixed_points.append(candidate)
    if len(fixed_points) > 1:
        raise RuntimeError("multiple concise subsets found; uniqueness is violated")
    return fixed_points[0] if fixed_points else None
