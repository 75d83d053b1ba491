import pytest

from aacbr.casebase import Case, Casebase, Polarity, make_casebase


def cb(*entries, **kwargs) -> Casebase:
    """Shorthand: cb(("ab", "-"), ("a", "+")) — atoms are single characters."""
    return make_casebase([(frozenset(atoms), outcome) for atoms, outcome in entries], **kwargs)


def case(atoms: str, outcome: str) -> Case:
    polarity = Polarity.DEFAULT if outcome == "-" else Polarity.NONDEFAULT
    return Case(frozenset(atoms), polarity)


def outcomes_table(casebase, characterisations, predict_fn):
    return {
        frozenset(c): casebase.label_for(predict_fn(casebase, frozenset(c)))
        for c in characterisations
    }


@pytest.fixture
def flip_flop() -> Casebase:
    """One addition flips a regular prediction, exposing non-monotonicity."""
    return cb(("a", "+"), ("c", "+"), ("ab", "-"), ("cz", "-"))
