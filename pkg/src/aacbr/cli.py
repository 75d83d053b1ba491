"""Command-line interface.

Subcommands: predict an outcome for a new case, build the concise casebase,
check a non-monotonicity property over a small universe, export a mined
framework as DOT, and run the trade-secrets case study.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import factors
from .casebase import Casebase, ParseError, casebase_to_json, load_casebase
from .cumulative import build, is_includable, predict_c
from .framework import grounded
from .mining import RegularityViolation, mine, mined_to_dot, predict
from .properties import Engine, Property, Witness, check_property


def _parse_atoms(text: str) -> frozenset:
    return frozenset(atom for atom in text.split(",") if atom)


def _engine(name: str) -> Engine:
    return Engine(name)


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _classify(engine: Engine, casebase: Casebase, new: frozenset):
    if engine is Engine.AACBR:
        return predict(casebase, new)
    return predict_c(casebase, new)


def _cmd_predict(args) -> int:
    casebase = load_casebase(args.casebase)
    new = _parse_atoms(args.new)
    if args.engine is Engine.CAACBR:
        casebase = build(casebase).selected
    mined = mine(casebase, new)
    result = grounded(mined.framework)
    outcome = (
        casebase.default_label
        if casebase.default_case() in result.members
        else casebase.nondefault_label
    )
    print(outcome)
    if args.trace:
        for step, members in enumerate(result.trace):
            labels = sorted(
                "{%s}" % ",".join(sorted(arg.characterisation)) for arg in members
            )
            print(f"G_{step} = {' '.join(labels) if labels else '{}'}", file=sys.stderr)
    if args.dot:
        _write(args.dot, mined_to_dot(mined, result))
    return 0


def _cmd_build(args) -> int:
    casebase = load_casebase(args.casebase)
    result = build(casebase)
    document = {
        "selected": casebase_to_json(result.selected),
        "audit": [
            {
                "case": {
                    "features": sorted(record.case.characterisation),
                    "outcome": casebase.label_for(record.case.outcome),
                },
                "stratum": record.stratum,
                "included": record.included,
                "predicted": casebase.label_for(record.predicted),
            }
            for record in result.audit
        ],
    }
    print(json.dumps(document, ensure_ascii=False, indent=2))
    if args.dot:
        _write(args.dot, mined_to_dot(result.framework))
    return 0


def _witness_json(witness: Witness) -> dict:
    def sentence(s):
        return {
            "features": sorted(s.characterisation),
            "outcome": s.outcome.value,
            "positive": s.positive,
        }

    return {
        "casebase": casebase_to_json(witness.casebase),
        "added": sentence(witness.added) if witness.added else None,
        "conclusion": sentence(witness.conclusion),
    }


def _cmd_check(args) -> int:
    report = check_property(
        engine=args.engine,
        prop=Property(args.property),
        atoms=sorted(_parse_atoms(args.atoms)),
        max_cases=args.max_cases,
        coherent_only=args.coherent_only,
    )
    print(report.summary(), file=sys.stderr)
    print(
        json.dumps(
            {
                "engine": report.engine.value,
                "property": report.property.value,
                "universe": report.universe,
                "examined": report.examined,
                "violations": [_witness_json(w) for w in report.violations],
            },
            ensure_ascii=False,
            indent=2,
        )
    )
    if args.expect_clean and not report.ok:
        return 1
    return 0


def _cmd_export_dot(args) -> int:
    casebase = load_casebase(args.casebase)
    if args.engine is Engine.CAACBR:
        casebase = build(casebase).selected
    new = _parse_atoms(args.new) if args.new else None
    mined = mine(casebase, new)
    _write(args.dot, mined_to_dot(mined))
    return 0


def _cmd_case_study(args) -> int:
    fixture = factors.trade_secrets_fixture()
    n1, n2 = factors.FIXTURE_N1, factors.FIXTURE_N2
    label = fixture.label_for
    print(f"outcome for N1: {label(predict(fixture, n1))}")
    print(f"outcome for N2: {label(predict(fixture, n2))}")
    from .casebase import Case, Polarity

    augmented = fixture.with_case(Case(n1, Polarity.NONDEFAULT))
    print(f"outcome for N2 after adding (N1, {label(Polarity.NONDEFAULT)}): "
          f"{label(predict(augmented, n2))}")
    includable = is_includable(Case(n1, Polarity.NONDEFAULT), fixture)
    print(f"(N1, {label(Polarity.NONDEFAULT)}) includable: {includable}")
    print(f"cumulative outcome for N2: {label(predict_c(fixture, n2))}")
    print(f"cumulative outcome for N2 after adding (N1, {label(Polarity.NONDEFAULT)}): "
          f"{label(predict_c(augmented, n2))}")
    if args.dot:
        _write(args.dot, mined_to_dot(mine(fixture)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aacbr")
    sub = parser.add_subparsers(dest="command", required=True)

    predict_p = sub.add_parser("predict", help="predict the outcome for a new case")
    predict_p.add_argument("--casebase", required=True)
    predict_p.add_argument("--new", required=True, help="comma-separated atoms")
    predict_p.add_argument("--engine", type=_engine, default=Engine.AACBR,
                           choices=list(Engine))
    predict_p.add_argument("--dot", help="write the mined framework as DOT")
    predict_p.add_argument("--trace", action="store_true",
                           help="print the grounded construction steps")
    predict_p.set_defaults(func=_cmd_predict)

    build_p = sub.add_parser("build", help="build the concise casebase")
    build_p.add_argument("--casebase", required=True)
    build_p.add_argument("--dot", help="write the learned framework as DOT")
    build_p.set_defaults(func=_cmd_build)

    check_p = sub.add_parser("check", help="check a non-monotonicity property")
    check_p.add_argument("--engine", type=_engine, default=Engine.AACBR,
                         choices=list(Engine))
    check_p.add_argument("--property", required=True,
                         choices=[p.value for p in Property])
    check_p.add_argument("--atoms", required=True, help="comma-separated atoms")
    check_p.add_argument("--max-cases", type=int, default=None)
    check_p.add_argument("--coherent-only", action="store_true", default=False)
    check_p.add_argument("--seed", type=int, default=0)
    check_p.add_argument("--jobs", type=int, default=1)
    check_p.add_argument("--expect-clean", action="store_true")
    check_p.set_defaults(func=_cmd_check)

    export_p = sub.add_parser("export-dot", help="export a mined framework as DOT")
    export_p.add_argument("--casebase", required=True)
    export_p.add_argument("--new", help="comma-separated atoms")
    export_p.add_argument("--engine", type=_engine, default=Engine.AACBR,
                          choices=list(Engine))
    export_p.add_argument("--dot", default="-", help="output path (default stdout)")
    export_p.set_defaults(func=_cmd_export_dot)

    study_p = sub.add_parser("case-study", help="run the trade-secrets case study")
    study_p.add_argument("--dot", help="write the fixture framework as DOT")
    study_p.set_defaults(func=_cmd_case_study)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, RegularityViolation, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
