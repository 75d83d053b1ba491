"""Non-monotonicity property checking for the two classifiers.

A classifier induces an inference relation over labelled examples: a
casebase infers (x, y) when it predicts y for x, and infers the negation
otherwise.  The checkers enumerate casebases over a small feature universe
and hunt for violations of cautious monotonicity, cut, cumulativity and
rational monotonicity, plus the completeness and consistency sanity checks.

The enumeration encodes each characterisation's status as absent, present
with the default outcome, present with the other outcome, or (when
incoherent casebases are allowed) present with both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from .casebase import Case, Casebase, Polarity, make_casebase
from .cumulative import build, predict_c
from .mining import predict


class Engine(Enum):
    AACBR = "aacbr"
    CAACBR = "caacbr"

    def classify(self, casebase: Casebase, characterisation: frozenset) -> Polarity:
        if self is Engine.AACBR:
            return predict(casebase, characterisation)
        return predict_c(casebase, characterisation)


@dataclass(frozen=True)
class Sentence:
    """A labelled example or its negation."""

    characterisation: frozenset
    outcome: Polarity
    positive: bool = True

    def negated(self) -> "Sentence":
        return replace(self, positive=not self.positive)


def infers(engine: Engine, casebase: Casebase, sentence: Sentence) -> bool:
    predicted = engine.classify(casebase, sentence.characterisation)
    if sentence.positive:
        return predicted is sentence.outcome
    return predicted is not sentence.outcome


class Property(Enum):
    CAUTIOUS_MONOTONICITY = "cautious-monotonicity"
    CUT = "cut"
    CUMULATIVITY = "cumulativity"
    RATIONAL_MONOTONICITY = "rational-monotonicity"
    COMPLETENESS = "completeness"
    CONSISTENCY = "consistency"


@dataclass(frozen=True)
class Witness:
    """A concrete violation: replaying it through `infers` reproduces it.

    `added` is the positive example moved into the premises (None for the
    completeness/consistency checks); `conclusion` is the sentence whose
    inference status breaks the property.
    """

    casebase: Casebase
    conclusion: Sentence
    added: Optional[Sentence] = None


@dataclass
class PropertyReport:
    engine: Engine
    property: Property
    universe: str
    examined: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return (
            f"{self.property.value} [{self.engine.value}] over {self.universe}: "
            f"{self.examined} casebase(s) examined, {status}"
        )


class SizeLimitExceeded(ValueError):
    pass


def _characterisations(atoms: Sequence) -> list:
    ordered = sorted(atoms)
    return [
        frozenset(subset)
        for size in range(len(ordered) + 1)
        for subset in combinations(ordered, size)
    ]


def enumerate_casebases(
    atoms: Sequence,
    max_cases: Optional[int] = None,
    coherent_only: bool = True,
    size_limit: int = 200_000,
) -> Iterator[Casebase]:
    """All casebases over the powerset universe of the given atoms."""
    characs = _characterisations(atoms)
    statuses: list = [None, (Polarity.DEFAULT,), (Polarity.NONDEFAULT,)]
    if not coherent_only:
        statuses.append((Polarity.DEFAULT, Polarity.NONDEFAULT))
    if max_cases is None and len(statuses) ** len(characs) > size_limit:
        raise SizeLimitExceeded(
            f"{len(statuses) ** len(characs)} casebases over {len(characs)} "
            "characterisations; pass max_cases to bound the enumeration"
        )
    produced = 0
    for assignment in product(statuses, repeat=len(characs)):
        entries = [
            (charac, outcome)
            for charac, chosen in zip(characs, assignment)
            if chosen
            for outcome in chosen
        ]
        if max_cases is not None and len(entries) > max_cases:
            continue
        produced += 1
        if produced > size_limit:
            raise SizeLimitExceeded(f"enumeration exceeded {size_limit} casebases")
        yield make_casebase(entries)


class _Predictor:
    """Engine predictions with memoisation for enumeration-scale checking.

    Predictions are cached on the slice of the casebase relevant to the
    query (for the subset order: the cases contained in the queried feature
    set), which is prediction-preserving for regular frameworks; the test
    suite checks that restriction property independently.
    """

    def __init__(self, engine: Engine):
        self.engine = engine
        self._outcomes: dict = {}
        self._selected: dict = {}

    def _base_cases(self, casebase: Casebase) -> frozenset:
        if self.engine is Engine.AACBR:
            return casebase.cases
        key = casebase.cases
        if key not in self._selected:
            self._selected[key] = build(casebase).selected.cases
        return self._selected[key]

    def classify(self, casebase: Casebase, characterisation: frozenset) -> Polarity:
        cases = self._base_cases(casebase)
        relevant = frozenset(c for c in cases if c.characterisation <= characterisation)
        key = (relevant, characterisation)
        if key not in self._outcomes:
            slice_cb = replace(casebase, cases=relevant)
            self._outcomes[key] = predict(slice_cb, characterisation)
        return self._outcomes[key]

    def table(self, casebase: Casebase, characs: Sequence) -> dict:
        return {charac: self.classify(casebase, charac) for charac in characs}


def _violations_for(
    predictor: _Predictor,
    casebase: Casebase,
    characs: Sequence,
    prop: Property,
    first_only: bool = False,
) -> list:
    """Violation witnesses of one property on one casebase.

    The monotonicity-family properties all compare the predictions before
    and after a single inferable example joins the premises; only the roles
    of the two sentences differ.  Completeness and consistency are checked
    pointwise from the prediction table.
    """
    base = predictor.table(casebase, characs)
    witnesses = []

    if prop in (Property.COMPLETENESS, Property.CONSISTENCY):
        for charac in characs:
            predicted = base[charac]
            for outcome in Polarity:
                positive = Sentence(charac, outcome)
                holds_pos = predicted is outcome
                holds_neg = predicted is not outcome
                if prop is Property.COMPLETENESS and not (holds_pos or holds_neg):
                    witnesses.append(Witness(casebase, positive))
                if prop is Property.CONSISTENCY and (holds_pos and holds_neg):
                    witnesses.append(Witness(casebase, positive))
        return witnesses

    for charac in characs:
        inferred = Sentence(charac, base[charac])
        extended = casebase.with_case(Case(charac, base[charac]))
        if extended.cases == casebase.cases:
            continue
        after = predictor.table(extended, characs)
        for other in characs:
            if after[other] is base[other]:
                continue
            if prop in (Property.CAUTIOUS_MONOTONICITY, Property.CUMULATIVITY):
                # base infers both sentences, yet the extension loses one
                witnesses.append(Witness(casebase, Sentence(other, base[other]), added=inferred))
            if prop in (Property.CUT, Property.CUMULATIVITY):
                # the extension infers a sentence the base does not
                witnesses.append(Witness(casebase, Sentence(other, after[other]), added=inferred))
            if prop is Property.RATIONAL_MONOTONICITY:
                # base does not infer the negation of the added example,
                # yet adding it loses an inferred sentence
                witnesses.append(Witness(casebase, Sentence(other, base[other]), added=inferred))
            if first_only:
                return witnesses
    return witnesses


def check_properties(
    engine: Engine,
    props: Sequence,
    atoms: Sequence,
    max_cases: Optional[int] = None,
    coherent_only: bool = True,
) -> dict:
    """Exhaustively check several properties in one enumeration pass.

    The prediction tables dominate the cost and are shared between the
    properties, so checking six properties together costs barely more than
    checking one.
    """
    characs = _characterisations(atoms)
    predictor = _Predictor(engine)
    scope = "coherent casebases" if coherent_only else "all casebases"
    if max_cases is not None:
        scope += f" with at most {max_cases} cases"
    universe = f"{scope} over P({{{','.join(map(str, sorted(atoms)))}}})"
    reports = {
        prop: PropertyReport(engine=engine, property=prop, universe=universe)
        for prop in props
    }
    for casebase in enumerate_casebases(atoms, max_cases=max_cases, coherent_only=coherent_only):
        for prop, report in reports.items():
            report.examined += 1
            report.violations.extend(_violations_for(predictor, casebase, characs, prop))
    return reports


def check_property(
    engine: Engine,
    prop: Property,
    atoms: Sequence,
    max_cases: Optional[int] = None,
    coherent_only: bool = True,
) -> PropertyReport:
    """Exhaustively check one property over all casebases on the universe."""
    return check_properties(engine, [prop], atoms, max_cases, coherent_only)[prop]


def random_casebase(rng: random.Random, atoms: Sequence, max_cases: int, coherent_only: bool = True) -> Casebase:
    characs = _characterisations(atoms)
    entries = []
    taken: dict = {}
    for _ in range(rng.randint(0, max_cases)):
        charac = rng.choice(characs)
        outcome = rng.choice(list(Polarity))
        if coherent_only and taken.get(charac, outcome) is not outcome:
            continue
        taken[charac] = outcome
        entries.append((charac, outcome))
    return make_casebase(entries)


def search_counterexample(
    engine: Engine,
    prop: Property,
    atoms: Sequence,
    budget: int,
    seed: int = 0,
    max_cases: int = 6,
    planted: Iterable[Casebase] = (),
) -> Optional[Witness]:
    """Randomised violation search; returns the first witness found."""
    characs = _characterisations(atoms)
    predictor = _Predictor(engine)
    rng = random.Random(seed)
    pool: list = list(planted)
    examined = 0
    while examined < budget:
        casebase = pool.pop(0) if pool else random_casebase(rng, atoms, max_cases)
        examined += 1
        found = _violations_for(predictor, casebase, characs, prop, first_only=True)
        if found:
            return found[0]
    return None
