"""Casebases of labelled, partially ordered cases.

A case pairs a characterisation (a finite set of atoms) with one of two
outcomes.  A casebase is a finite set of such cases together with a
distinguished default characterisation and default outcome.  The comparison
between characterisations is pluggable; the shipped instance orders feature
sets by the superset relation (a bigger set is a more specific case).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Protocol


class OrderOutcome(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class OrderRelation(Protocol):
    def compare(self, a: frozenset, b: frozenset) -> OrderOutcome: ...


class SupersetOrder:
    """Feature-set specificity: ``a`` is greater than ``b`` iff ``a ⊃ b``."""

    def compare(self, a: frozenset, b: frozenset) -> OrderOutcome:
        if a == b:
            return OrderOutcome.EQUAL
        if a >= b:
            return OrderOutcome.GREATER
        if a <= b:
            return OrderOutcome.LESS
        return OrderOutcome.INCOMPARABLE


SUBSET_ORDER = SupersetOrder()


def compare(a: Iterable, b: Iterable, order: OrderRelation = SUBSET_ORDER) -> OrderOutcome:
    return order.compare(frozenset(a), frozenset(b))


def geq(a: frozenset, b: frozenset, order: OrderRelation = SUBSET_ORDER) -> bool:
    """a is at least as specific as b."""
    return order.compare(a, b) in (OrderOutcome.GREATER, OrderOutcome.EQUAL)


def gt(a: frozenset, b: frozenset, order: OrderRelation = SUBSET_ORDER) -> bool:
    """a is strictly more specific than b."""
    return order.compare(a, b) is OrderOutcome.GREATER


class Polarity(Enum):
    """The two possible outcomes, identified relative to the default."""

    DEFAULT = "default"
    NONDEFAULT = "nondefault"

    @property
    def opposite(self) -> "Polarity":
        return Polarity.NONDEFAULT if self is Polarity.DEFAULT else Polarity.DEFAULT


@dataclass(frozen=True)
class Case:
    """A labelled past case.  Identity is (characterisation, outcome); the id
    is bookkeeping only and never affects comparisons."""

    characterisation: frozenset
    outcome: Polarity
    id: str = field(default="", compare=False)


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Casebase:
    cases: frozenset
    default_characterisation: frozenset = frozenset()
    default_label: str = "-"
    nondefault_label: str = "+"

    def label_for(self, outcome: Polarity) -> str:
        return self.default_label if outcome is Polarity.DEFAULT else self.nondefault_label

    def polarity_for(self, label: str) -> Polarity:
        if label == self.default_label:
            return Polarity.DEFAULT
        if label == self.nondefault_label:
            return Polarity.NONDEFAULT
        raise ParseError(f"unknown outcome label {label!r}")

    def default_case(self) -> Case:
        return Case(self.default_characterisation, Polarity.DEFAULT, id="default")

    def with_case(self, case: Case) -> "Casebase":
        return replace(self, cases=self.cases | {case})

    def without_case(self, case: Case) -> "Casebase":
        return replace(self, cases=self.cases - {case})

    def universe(self) -> frozenset:
        atoms = set(self.default_characterisation)
        for case in self.cases:
            atoms |= case.characterisation
        return frozenset(atoms)

    def __len__(self) -> int:
        return len(self.cases)

    def __iter__(self) -> Iterator[Case]:
        return iter(self.cases)


def make_casebase(
    entries: Iterable,
    default_characterisation: Iterable = (),
    default_label: str = "-",
    nondefault_label: str = "+",
) -> Casebase:
    """Build a casebase from (atoms, outcome) pairs or ready-made cases.

    Duplicate (characterisation, outcome) pairs collapse; ids are assigned in
    insertion order so repeated builds are reproducible.
    """
    seen: dict = {}
    base = Casebase(
        cases=frozenset(),
        default_characterisation=frozenset(default_characterisation),
        default_label=default_label,
        nondefault_label=nondefault_label,
    )
    for entry in entries:
        if isinstance(entry, Case):
            charac, outcome = entry.characterisation, entry.outcome
        else:
            atoms, raw = entry
            charac = frozenset(atoms)
            outcome = raw if isinstance(raw, Polarity) else base.polarity_for(raw)
        key = (charac, outcome)
        if key not in seen:
            seen[key] = Case(charac, outcome, id=f"c{len(seen) + 1}")
    return replace(base, cases=frozenset(seen.values()))


def is_coherent(casebase: Casebase) -> bool:
    """No two cases share a characterisation while disagreeing on outcome."""
    outcomes: dict = {}
    for case in casebase.cases:
        prior = outcomes.setdefault(case.characterisation, case.outcome)
        if prior is not case.outcome:
            return False
    return True


def strata(cases: Iterable[Case], order: OrderRelation = SUBSET_ORDER) -> list:
    """Partition cases into layers of minimally specific cases.

    Repeatedly extracts the set of cases with no strictly less specific case
    remaining.  Cases with equal characterisations (an incoherent pair) land
    in the same stratum.
    """
    remaining = set(cases)
    layers = []
    while remaining:
        layer = frozenset(
            case
            for case in remaining
            if not any(
                gt(case.characterisation, other.characterisation, order)
                for other in remaining
            )
        )
        assert layer, "partial order must admit minimal elements"
        layers.append(layer)
        remaining -= layer
    return layers


def nearest_cases(
    casebase: Casebase, new_characterisation: frozenset, order: OrderRelation = SUBSET_ORDER
) -> frozenset:
    """The maximally specific cases at or below the new characterisation."""
    new_characterisation = frozenset(new_characterisation)
    relevant = [
        case
        for case in casebase.cases
        if geq(new_characterisation, case.characterisation, order)
    ]
    return frozenset(
        case
        for case in relevant
        if not any(
            gt(other.characterisation, case.characterisation, order)
            for other in relevant
        )
    )


def casebase_to_json(casebase: Casebase) -> dict:
    return {
        "default": {
            "features": sorted(casebase.default_characterisation),
            "outcome": casebase.default_label,
        },
        "outcomes": {
            "default": casebase.default_label,
            "nondefault": casebase.nondefault_label,
        },
        "cases": [
            {
                "id": case.id,
                "features": sorted(case.characterisation),
                "outcome": casebase.label_for(case.outcome),
            }
            for case in sorted(
                casebase.cases, key=lambda c: (sorted(c.characterisation), c.outcome.value)
            )
        ],
    }


def casebase_from_json(obj: dict) -> Casebase:
    try:
        outcomes = obj["outcomes"]
        default_label = outcomes["default"]
        nondefault_label = outcomes["nondefault"]
        default_entry = obj.get("default", {"features": [], "outcome": default_label})
        raw_cases = obj.get("cases", [])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed casebase document: {exc}") from exc
    if default_label == nondefault_label:
        raise ParseError("default and nondefault outcome labels must differ")
    if default_entry.get("outcome", default_label) != default_label:
        raise ParseError("the default argument must carry the default outcome")
    entries = []
    for raw in raw_cases:
        features = raw.get("features", [])
        if len(features) != len(set(features)):
            raise ParseError(f"duplicate features in case {raw.get('id', '?')!r}")
        if raw.get("outcome") not in (default_label, nondefault_label):
            raise ParseError(f"unknown outcome label {raw.get('outcome')!r}")
        entries.append((features, raw["outcome"]))
    features = default_entry.get("features", [])
    if len(features) != len(set(features)):
        raise ParseError("duplicate features in the default characterisation")
    return make_casebase(
        entries,
        default_characterisation=features,
        default_label=default_label,
        nondefault_label=nondefault_label,
    )


def load_casebase(path) -> Casebase:
    with open(path, encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return casebase_from_json(obj)


def dump_casebase(casebase: Casebase, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(casebase_to_json(casebase), handle, ensure_ascii=False, indent=2)
        handle.write("\n")
