"""Polarised legal factors and their expansion into casebases.

U.S. Trade Secrets cases are recorded as a set of pro-plaintiff factors, a
set of pro-defendant factors, and a winner.  A factor case expands into one
feature-set case per subset of the losing side's factors, so that dropping
an opposing factor still decides the same outcome.  The default argument is
the empty characterisation deciding for the defendant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from itertools import chain, combinations
from typing import Iterable, Optional

from .casebase import Case, Casebase, Polarity, make_casebase

MAX_OPPOSING_FACTORS = 20

DEFENDANT_LABEL = "Δ"
PLAINTIFF_LABEL = "Π"


class Side(Enum):
    PLAINTIFF = "P"
    DEFENDANT = "D"


@dataclass(frozen=True)
class Factor:
    index: int
    side: Side

    @property
    def atom(self) -> str:
        return f"F{self.index}_{self.side.value}"

    @property
    def description(self) -> Optional[str]:
        entry = factor_descriptions().get(self.index)
        return entry["description"] if entry else None


def factor_descriptions() -> dict:
    """Reference table of known factor indices, sides and meanings."""
    if not hasattr(factor_descriptions, "_cache"):
        text = resources.files("aacbr.data").joinpath("factor_descriptions.json").read_text("utf-8")
        factor_descriptions._cache = {
            int(index): {"side": Side(entry["side"]), "description": entry["description"]}
            for index, entry in json.loads(text).items()
        }
    return factor_descriptions._cache


@dataclass(frozen=True)
class FactorCase:
    name: str
    plaintiff_factors: frozenset
    defendant_factors: frozenset
    winner: Side

    def __post_init__(self):
        for factor in self.plaintiff_factors:
            if factor.side is not Side.PLAINTIFF:
                raise ValueError(f"{factor.atom} listed among plaintiff factors")
        for factor in self.defendant_factors:
            if factor.side is not Side.DEFENDANT:
                raise ValueError(f"{factor.atom} listed among defendant factors")


def factor_case(
    name: str,
    plaintiff_factors: Iterable[int],
    defendant_factors: Iterable[int],
    winner: Side,
) -> FactorCase:
    return FactorCase(
        name=name,
        plaintiff_factors=frozenset(Factor(i, Side.PLAINTIFF) for i in plaintiff_factors),
        defendant_factors=frozenset(Factor(i, Side.DEFENDANT) for i in defendant_factors),
        winner=winner,
    )


def _winner_polarity(winner: Side) -> Polarity:
    # default outcome is a win for the defendant
    return Polarity.DEFAULT if winner is Side.DEFENDANT else Polarity.NONDEFAULT


def expand_case(fc: FactorCase) -> frozenset:
    """One case per subset of the losing side's factors.

    A plaintiff win keeps all plaintiff factors and ranges over subsets of
    the defendant factors; a defendant win is the mirror image.
    """
    if fc.winner is Side.PLAINTIFF:
        kept, opposing = fc.plaintiff_factors, fc.defendant_factors
    else:
        kept, opposing = fc.defendant_factors, fc.plaintiff_factors
    if len(opposing) > MAX_OPPOSING_FACTORS:
        raise ValueError(
            f"case {fc.name!r} has {len(opposing)} opposing factors; expansion refused"
        )
    base = frozenset(f.atom for f in kept)
    outcome = _winner_polarity(fc.winner)
    return frozenset(
        Case(base | frozenset(f.atom for f in extra), outcome)
        for extra in chain.from_iterable(
            combinations(sorted(opposing, key=lambda f: f.index), size)
            for size in range(len(opposing) + 1)
        )
    )


@dataclass(frozen=True)
class ExpandedCasebase:
    casebase: Casebase
    conflicts: tuple  # characterisations expanded to both outcomes


def expand_casebase(factor_cases: Iterable[FactorCase]) -> ExpandedCasebase:
    expanded: set = set()
    for fc in factor_cases:
        expanded |= expand_case(fc)
    by_charac: dict = {}
    for case in expanded:
        by_charac.setdefault(case.characterisation, set()).add(case.outcome)
    conflicts = tuple(
        sorted(charac) for charac, outcomes in sorted(by_charac.items(), key=lambda kv: sorted(kv[0]))
        if len(outcomes) > 1
    )
    casebase = make_casebase(
        sorted(expanded, key=lambda c: (sorted(c.characterisation), c.outcome.value)),
        default_label=DEFENDANT_LABEL,
        nondefault_label=PLAINTIFF_LABEL,
    )
    return ExpandedCasebase(casebase=casebase, conflicts=conflicts)


def factor_cases_from_json(obj: dict) -> list:
    cases = []
    for raw in obj.get("cases", []):
        winner = Side(raw["winner"])
        cases.append(
            factor_case(
                name=raw.get("name", ""),
                plaintiff_factors=raw.get("plaintiff_factors", []),
                defendant_factors=raw.get("defendant_factors", []),
                winner=winner,
            )
        )
    return cases


def load_factor_cases(path) -> list:
    with open(path, encoding="utf-8") as handle:
        return factor_cases_from_json(json.load(handle))


def _atoms(*specs: str) -> frozenset:
    return frozenset(specs)


def trade_secrets_fixture() -> Casebase:
    """The nine-argument trade-secrets framework, as an expanded casebase."""
    entries = [
        (_atoms("F15_P", "F26_P"), PLAINTIFF_LABEL),
        (_atoms("F21_P"), PLAINTIFF_LABEL),
        (_atoms("F18_P"), PLAINTIFF_LABEL),
        (_atoms("F4_P", "F6_P", "F12_P"), PLAINTIFF_LABEL),
        (_atoms("F1_D", "F19_D", "F21_P", "F23_D"), DEFENDANT_LABEL),
        (_atoms("F1_D", "F10_D", "F18_P", "F19_D"), DEFENDANT_LABEL),
        (_atoms("F18_P", "F19_D", "F27_D"), DEFENDANT_LABEL),
        (_atoms("F4_P", "F6_P", "F10_D", "F11_D", "F12_P", "F20_D"), DEFENDANT_LABEL),
    ]
    return make_casebase(
        entries, default_label=DEFENDANT_LABEL, nondefault_label=PLAINTIFF_LABEL
    )


FIXTURE_N1 = _atoms("F1_D", "F18_P", "F19_D", "F21_P", "F23_D")
FIXTURE_N2 = FIXTURE_N1 | {"F10_D"}
