"""Mining attack graphs from casebases and predicting outcomes.

A past case attacks another when they disagree on outcome, the attacker is
at least as specific, and no case of the attacker's outcome sits strictly
between them.  A new case attacks exactly the arguments it is incomparable
with or less specific than (irrelevance).  The predicted outcome for a new
characterisation is the default outcome precisely when the default argument
belongs to the grounded extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Optional

from .casebase import (
    SUBSET_ORDER,
    Case,
    Casebase,
    OrderRelation,
    Polarity,
    geq,
    gt,
)
from .framework import Framework, GroundedResult, grounded, reaches, render_dot


class RegularityViolation(ValueError):
    """A characterisation is not at least as specific as the default one."""


@dataclass(frozen=True)
class NewCase:
    """The query argument: a characterisation with an unknown outcome."""

    characterisation: frozenset


@dataclass(frozen=True)
class MinedFramework:
    framework: Framework
    casebase: Casebase
    new_characterisation: Optional[frozenset] = None

    def new_case(self) -> Optional[NewCase]:
        if self.new_characterisation is None:
            return None
        return NewCase(self.new_characterisation)


def attacks_condition(
    pool: Collection[Case],
    attacker: Case,
    attacked: Case,
    order: OrderRelation = SUBSET_ORDER,
) -> bool:
    """Past-case attack test over a pool that includes the default argument.

    Requires: differing outcomes, attacker at least as specific, and no case
    in the pool with the attacker's outcome strictly between the two (so the
    attack is by the least specific counterexample available).
    """
    if attacker.outcome is attacked.outcome:
        return False
    if not geq(attacker.characterisation, attacked.characterisation, order):
        return False
    return not any(
        other.outcome is attacker.outcome
        and gt(attacker.characterisation, other.characterisation, order)
        and gt(other.characterisation, attacked.characterisation, order)
        for other in pool
    )


def _check_regular(casebase: Casebase, order: OrderRelation) -> None:
    floor = casebase.default_characterisation
    for case in casebase.cases:
        if not geq(case.characterisation, floor, order):
            raise RegularityViolation(
                f"case {sorted(case.characterisation)} is not at least as specific "
                f"as the default characterisation {sorted(floor)}"
            )


def mine(
    casebase: Casebase,
    new_characterisation: Optional[frozenset] = None,
    order: OrderRelation = SUBSET_ORDER,
) -> MinedFramework:
    """Mine the attack graph from a casebase, optionally with a new case."""
    _check_regular(casebase, order)
    default = casebase.default_case()
    pool = list(casebase.cases | {default})
    # past cases attack; the default argument is only ever a target (and a
    # concision blocker), which keeps frameworks over coherent casebases
    # well-founded even when a case sits at the default characterisation
    attacks = {
        (attacker, attacked)
        for attacker in pool
        if attacker != default
        for attacked in pool
        if attacks_condition(pool, attacker, attacked, order)
    }
    mined = MinedFramework(
        framework=Framework(arguments=frozenset(pool), attacks=frozenset(attacks)),
        casebase=casebase,
    )
    if new_characterisation is None:
        return mined
    return with_new_case(mined, new_characterisation, order)


def with_new_case(
    mined: MinedFramework,
    new_characterisation: frozenset,
    order: OrderRelation = SUBSET_ORDER,
) -> MinedFramework:
    """Attach a query argument to a framework mined from the casebase alone."""
    if mined.new_characterisation is not None:
        raise ValueError("framework already carries a new case")
    new_characterisation = frozenset(new_characterisation)
    if not geq(new_characterisation, mined.casebase.default_characterisation, order):
        raise RegularityViolation(
            f"new characterisation {sorted(new_characterisation)} is not at least as "
            "specific as the default characterisation"
        )
    new_arg = NewCase(new_characterisation)
    extra = {
        (new_arg, arg)
        for arg in mined.framework.arguments
        if not geq(new_characterisation, arg.characterisation, order)
    }
    return MinedFramework(
        framework=Framework(
            arguments=mined.framework.arguments | {new_arg},
            attacks=mined.framework.attacks | extra,
        ),
        casebase=mined.casebase,
        new_characterisation=new_characterisation,
    )


def outcome_of(mined: MinedFramework) -> Polarity:
    """Read the prediction off a mined framework with a new case attached."""
    result = grounded(mined.framework)
    if mined.casebase.default_case() in result.members:
        return Polarity.DEFAULT
    return Polarity.NONDEFAULT


def predict(
    casebase: Casebase,
    new_characterisation: frozenset,
    order: OrderRelation = SUBSET_ORDER,
) -> Polarity:
    return outcome_of(mine(casebase, frozenset(new_characterisation), order))


def spikes(mined: MinedFramework) -> frozenset:
    """Case arguments with no attack path to the default argument."""
    default = mined.casebase.default_case()
    return frozenset(
        arg
        for arg in mined.framework.arguments
        if isinstance(arg, Case)
        and arg != default
        and not reaches(mined.framework, arg, default)
    )


def remove_spikes(mined: MinedFramework, order: OrderRelation = SUBSET_ORDER) -> MinedFramework:
    """Re-mine without the spike arguments; predictions are unchanged."""
    dead = spikes(mined)
    trimmed = mined.casebase
    for case in dead:
        trimmed = trimmed.without_case(case)
    return mine(trimmed, mined.new_characterisation, order)


def mined_to_dot(mined: MinedFramework, shade: Optional[GroundedResult] = None) -> str:
    """DOT rendering: past cases as ellipses, the new case as a hexagon,
    grounded members filled grey."""
    casebase = mined.casebase

    def label_of(arg) -> str:
        if isinstance(arg, NewCase):
            return "{%s}: ?" % ", ".join(sorted(arg.characterisation))
        return "{%s}: %s" % (
            ", ".join(sorted(arg.characterisation)),
            casebase.label_for(arg.outcome),
        )

    def shape_of(arg) -> str:
        return "hexagon" if isinstance(arg, NewCase) else "ellipse"

    if shade is None:
        shade = grounded(mined.framework)
    return render_dot(
        mined.framework, label_of=label_of, shape_of=shape_of, filled=shade.members
    )
