"""Acceptance gate: one test per criterion, each printing PASS/FAIL.

The heavyweight enumerations (criteria 4, 5 and parts of 7) share a single
module-scoped sweep so the whole gate stays inside the five-minute budget.
"""

import random
import time
from itertools import combinations

import pytest

from aacbr.casebase import (
    Case,
    Polarity,
    is_coherent,
    make_casebase,
    nearest_cases,
)
from aacbr.cumulative import build, concise_oracle, includable_set, predict_c, simple_add
from aacbr.factors import (
    DEFENDANT_LABEL,
    FIXTURE_N1,
    FIXTURE_N2,
    PLAINTIFF_LABEL,
    trade_secrets_fixture,
)
from aacbr.framework import Label, grounded
from aacbr.mining import mine, predict, remove_spikes, spikes, with_new_case
from aacbr.properties import Engine, Property, check_properties, enumerate_casebases
from conftest import case, cb

MONOTONICITY_FAMILY = (
    Property.CAUTIOUS_MONOTONICITY,
    Property.CUT,
    Property.CUMULATIVITY,
    Property.RATIONAL_MONOTONICITY,
)
ALL_PROPERTIES = MONOTONICITY_FAMILY + (Property.COMPLETENESS, Property.CONSISTENCY)


def report(number: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, detail


def characterisations(atoms: str):
    return [
        frozenset(sub)
        for size in range(len(atoms) + 1)
        for sub in combinations(sorted(atoms), size)
    ]


@pytest.fixture(scope="module")
def sweep():
    """The shared enumeration runs for criteria 4, 5 and 7."""
    started = time.perf_counter()
    runs = {
        ("caacbr", "ab-all"): check_properties(
            Engine.CAACBR, ALL_PROPERTIES, "ab", coherent_only=False
        ),
        ("caacbr", "abc-coherent"): check_properties(
            Engine.CAACBR, ALL_PROPERTIES, "abc", coherent_only=True
        ),
        ("aacbr", "ab-all"): check_properties(
            Engine.AACBR,
            (Property.COMPLETENESS, Property.CONSISTENCY),
            "ab",
            coherent_only=False,
        ),
        ("aacbr", "abc-coherent"): check_properties(
            Engine.AACBR,
            (Property.COMPLETENESS, Property.CONSISTENCY),
            "abc",
            coherent_only=True,
        ),
        ("aacbr", "abcz-max4"): check_properties(
            Engine.AACBR,
            (Property.CAUTIOUS_MONOTONICITY, Property.COMPLETENESS, Property.CONSISTENCY),
            "abcz",
            max_cases=4,
            coherent_only=True,
        ),
        ("caacbr", "abcz-max4"): check_properties(
            Engine.CAACBR,
            (Property.COMPLETENESS, Property.CONSISTENCY),
            "abcz",
            max_cases=4,
            coherent_only=True,
        ),
    }
    return runs, time.perf_counter() - started


def test_criterion_1_prediction_flip_is_exact(flip_flop):
    started = time.perf_counter()
    bigger = flip_flop.with_case(case("abc", "+"))
    checks = (
        predict(flip_flop, frozenset("abc")) is Polarity.NONDEFAULT,
        predict(flip_flop, frozenset("abcz")) is Polarity.DEFAULT,
        predict(bigger, frozenset("abcz")) is Polarity.NONDEFAULT,
        predict_c(bigger, frozenset("abcz")) is Polarity.DEFAULT,
    )
    elapsed = time.perf_counter() - started
    report(
        1,
        all(checks) and elapsed < 1.0,
        f"regular engine flips on one addition, cautious engine does not ({elapsed:.3f}s)",
    )


def test_criterion_2_introductory_frameworks_reproduced():
    started = time.perf_counter()

    def shape(mined):
        def tag(arg):
            atoms = tuple(sorted(arg.characterisation))
            if isinstance(arg, Case):
                return (atoms, "-" if arg.outcome is Polarity.DEFAULT else "+")
            return (atoms, "?")

        return (
            {tag(a) for a in mined.framework.arguments},
            {(tag(a), tag(b)) for a, b in mined.framework.attacks},
        )

    new = frozenset({"hm", "sd"})
    ok = True

    initial = mine(make_casebase([({"hm"}, "+")]), new)
    nodes, edges = shape(initial)
    ok &= nodes == {((), "-"), (("hm",), "+"), (("hm", "sd"), "?")}
    ok &= edges == {((("hm",), "+"), ((), "-"))}
    in_nodes = {
        (tuple(sorted(a.characterisation)), "?" if not isinstance(a, Case) else
         ("-" if a.outcome is Polarity.DEFAULT else "+"))
        for a in grounded(initial.framework).members
    }
    ok &= in_nodes == {(("hm",), "+"), (("hm", "sd"), "?")}
    ok &= predict(initial.casebase, new) is Polarity.NONDEFAULT

    revised = mine(make_casebase([({"hm"}, "+"), ({"hm", "sd"}, "-")]), new)
    nodes, edges = shape(revised)
    ok &= nodes == {((), "-"), (("hm",), "+"), (("hm", "sd"), "-"), (("hm", "sd"), "?")}
    ok &= edges == {
        ((("hm",), "+"), ((), "-")),
        ((("hm", "sd"), "-"), (("hm",), "+")),
    }
    in_nodes = {
        (tuple(sorted(a.characterisation)), "?" if not isinstance(a, Case) else
         ("-" if a.outcome is Polarity.DEFAULT else "+"))
        for a in grounded(revised.framework).members
    }
    ok &= in_nodes == {((), "-"), (("hm", "sd"), "-"), (("hm", "sd"), "?")}
    ok &= predict(revised.casebase, new) is Polarity.DEFAULT

    incoherent = mine(make_casebase([({"hm"}, "+"), ({"hm"}, "-")]), new)
    nodes, edges = shape(incoherent)
    ok &= nodes == {((), "-"), (("hm",), "+"), (("hm",), "-"), (("hm", "sd"), "?")}
    ok &= edges == {
        ((("hm",), "+"), ((), "-")),
        ((("hm",), "+"), (("hm",), "-")),
        ((("hm",), "-"), (("hm",), "+")),
    }
    ok &= grounded(incoherent.framework).members == {incoherent.new_case()}
    ok &= predict(incoherent.casebase, new) is Polarity.NONDEFAULT

    elapsed = time.perf_counter() - started
    report(2, bool(ok) and elapsed < 1.0, f"three introductory frameworks match ({elapsed:.3f}s)")


def test_criterion_3_build_matches_enumeration_oracle():
    started = time.perf_counter()
    examined = 0
    for casebase in enumerate_casebases("ab", coherent_only=True):
        examined += 1
        selected = build(casebase).selected
        oracle = concise_oracle(casebase)
        assert oracle is not None, f"no concise subset for {sorted(map(str, casebase.cases))}"
        assert selected.cases == oracle.cases
        assert includable_set(casebase, selected) == selected.cases
    elapsed = time.perf_counter() - started
    report(
        3,
        examined == 81 and elapsed < 10.0,
        f"build equals the enumeration oracle on all {examined} coherent casebases ({elapsed:.2f}s)",
    )


def test_criterion_4_cautious_engine_is_cautiously_monotonic(sweep, flip_flop):
    runs, elapsed = sweep
    ok = True
    for key in (("caacbr", "ab-all"), ("caacbr", "abc-coherent")):
        for prop in MONOTONICITY_FAMILY:
            ok &= runs[key][prop].ok
    regular = runs[("aacbr", "abcz-max4")][Property.CAUTIOUS_MONOTONICITY]
    ok &= not regular.ok
    ok &= any(w.casebase.cases == flip_flop.cases for w in regular.violations)
    ok &= elapsed < 300.0
    report(
        4,
        bool(ok),
        "cautious engine clean on both universes; regular engine reproduces the "
        f"four-case counterexample (sweep {elapsed:.1f}s)",
    )


def test_criterion_5_completeness_and_consistency(sweep):
    runs, _ = sweep
    ok = True
    for reports in runs.values():
        for prop in (Property.COMPLETENESS, Property.CONSISTENCY):
            if prop in reports:
                ok &= reports[prop].ok
    report(5, bool(ok), "completeness and consistency hold for both engines on every sweep")


def test_criterion_6_incremental_build_equals_remine():
    rng = random.Random(20260826)
    atoms = "abcd"
    characs = characterisations(atoms)
    checked = 0
    for _ in range(1000):
        entries = []
        taken = set()
        for _ in range(rng.randint(0, 8)):
            charac = rng.choice(characs)
            if charac in taken:
                continue
            taken.add(charac)
            entries.append((charac, rng.choice("+-")))
        casebase = cb(*entries)
        assert is_coherent(casebase)
        result = build(casebase)
        rebuilt = mine(
            make_casebase(
                [],
                default_characterisation=casebase.default_characterisation,
            )
        )
        selected_so_far = []
        for record in result.audit:
            if not record.included:
                continue
            rebuilt = simple_add(rebuilt, record.case)
            selected_so_far.append(record.case)
            remined = mine(cb(*[(c.characterisation, casebase.label_for(c.outcome)) for c in selected_so_far]))
            assert rebuilt.framework == remined.framework, (
                f"incremental and remined frameworks differ after {record.case}"
            )
        assert rebuilt.casebase.cases == result.selected.cases
        checked += 1
    report(6, checked == 1000, f"simple_add equals remining at every step on {checked} seeded casebases")


def test_criterion_7_spikes_are_removable_and_absent_after_build():
    characs = characterisations("abc")
    for casebase in enumerate_casebases("abc", coherent_only=True):
        trimmed = remove_spikes(mine(casebase)).casebase
        for new in characs:
            assert predict(casebase, new) is predict(trimmed, new)
    for atoms, coherent_only in (("ab", False), ("abc", True)):
        for casebase in enumerate_casebases(atoms, coherent_only=coherent_only):
            assert spikes(build(casebase).framework) == frozenset()
    report(7, True, "spike removal never changes a prediction; built frameworks are spike-free")


def test_criterion_8_agreeing_nearest_cases_decide():
    characs = characterisations("abc")
    checked = 0
    for casebase in enumerate_casebases("abc", coherent_only=True):
        for new in characs:
            nearest = nearest_cases(casebase, new)
            outcomes = {c.outcome for c in nearest}
            if len(outcomes) == 1:
                checked += 1
                assert predict(casebase, new) is next(iter(outcomes))
    report(8, checked > 0, f"unanimous nearest cases fixed the prediction in {checked} situations")


def test_criterion_9_incoherence_is_resolved():
    twins = cb(("hm", "+"), ("hm", "-"))
    selected = build(twins).selected
    ok = {(tuple(sorted(c.characterisation)), c.outcome) for c in selected.cases} == {
        (("h", "m"), Polarity.NONDEFAULT)
    }
    for casebase in enumerate_casebases("ab", coherent_only=False):
        if is_coherent(casebase):
            continue
        assert is_coherent(build(casebase).selected)
    for casebase in enumerate_casebases("ab", coherent_only=False):
        selected_cb = build(casebase).selected
        for new in characterisations("ab"):
            if predict_c(casebase, new) is Polarity.DEFAULT:
                continue
            attached = mine(selected_cb, new)
            result = grounded(attached.framework)
            default = selected_cb.default_case()
            assert any(
                result.labels[attacker] is Label.IN
                for attacker, target in attached.framework.attacks
                if target == default
            ), f"nondefault prediction without an accepted attacker of the default: {new}"
    report(9, bool(ok), "incoherent twins resolve to the surprising one; nondefault "
                        "predictions are always backed by an accepted attacker")


def test_criterion_10_trade_secrets_fixture():
    started = time.perf_counter()
    fixture = trade_secrets_fixture()
    n1_case = Case(FIXTURE_N1, Polarity.NONDEFAULT)
    augmented = fixture.with_case(n1_case)
    checks = (
        fixture.label_for(predict(fixture, FIXTURE_N1)) == PLAINTIFF_LABEL,
        fixture.label_for(predict(fixture, FIXTURE_N2)) == DEFENDANT_LABEL,
        fixture.label_for(predict(augmented, FIXTURE_N2)) == PLAINTIFF_LABEL,
        predict_c(fixture, FIXTURE_N2) is predict_c(augmented, FIXTURE_N2),
        predict_c(augmented, FIXTURE_N2) is Polarity.DEFAULT,
    )
    elapsed = time.perf_counter() - started
    report(
        10,
        all(checks) and elapsed < 1.0,
        f"fixture decides N1 for the plaintiff, N2 for the defendant, and the "
        f"cautious engine ignores the non-includable addition ({elapsed:.3f}s)",
    )
