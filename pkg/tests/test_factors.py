import json

import pytest

from aacbr.casebase import Polarity
from aacbr.factors import (
    DEFENDANT_LABEL,
    PLAINTIFF_LABEL,
    FIXTURE_N1,
    FIXTURE_N2,
    Factor,
    Side,
    expand_case,
    expand_casebase,
    factor_case,
    factor_cases_from_json,
    factor_descriptions,
    load_factor_cases,
    trade_secrets_fixture,
)
from aacbr.mining import predict


class TestFactor:
    def test_atom_naming(self):
        assert Factor(15, Side.PLAINTIFF).atom == "F15_P"
        assert Factor(19, Side.DEFENDANT).atom == "F19_D"

    def test_descriptions(self):
        table = factor_descriptions()
        assert table[15]["side"] is Side.PLAINTIFF
        assert table[19]["side"] is Side.DEFENDANT
        assert 9 not in table  # the numbering has a hole
        assert len(table) == 26
        assert Factor(15, Side.PLAINTIFF).description

    def test_factor_case_validates_sides(self):
        from aacbr.factors import FactorCase

        with pytest.raises(ValueError):
            FactorCase(
                name="bad",
                plaintiff_factors=frozenset({Factor(19, Side.DEFENDANT)}),
                defendant_factors=frozenset(),
                winner=Side.PLAINTIFF,
            )


class TestExpandCase:
    def test_plaintiff_win_ranges_over_defendant_subsets(self):
        fc = factor_case("x", plaintiff_factors=[15, 26], defendant_factors=[1, 19], winner=Side.PLAINTIFF)
        expanded = expand_case(fc)
        assert len(expanded) == 2 ** 2
        for case in expanded:
            assert case.outcome is Polarity.NONDEFAULT
            assert {"F15_P", "F26_P"} <= case.characterisation

    def test_defendant_win_is_the_mirror_image(self):
        fc = factor_case("y", plaintiff_factors=[21], defendant_factors=[1, 19, 23], winner=Side.DEFENDANT)
        expanded = expand_case(fc)
        assert len(expanded) == 2 ** 1
        for case in expanded:
            assert case.outcome is Polarity.DEFAULT
            assert {"F1_D", "F19_D", "F23_D"} <= case.characterisation

    def test_no_opposing_factors_yields_one_case(self):
        fc = factor_case("z", plaintiff_factors=[21], defendant_factors=[], winner=Side.PLAINTIFF)
        assert len(expand_case(fc)) == 1

    def test_expansion_guard(self):
        huge = factor_case(
            "w",
            plaintiff_factors=[],
            defendant_factors=list(range(100, 121)),
            winner=Side.PLAINTIFF,
        )
        with pytest.raises(ValueError):
            expand_case(huge)


class TestExpandCasebase:
    def test_deduplicates_across_cases(self):
        one = factor_case("a", plaintiff_factors=[21], defendant_factors=[], winner=Side.PLAINTIFF)
        two = factor_case("b", plaintiff_factors=[21], defendant_factors=[1], winner=Side.PLAINTIFF)
        expanded = expand_casebase([one, two])
        # {F21_P} appears in both expansions but is stored once
        assert len(expanded.casebase) == 2
        assert expanded.conflicts == ()

    def test_conflicts_are_reported(self):
        one = factor_case("a", plaintiff_factors=[21], defendant_factors=[], winner=Side.PLAINTIFF)
        # the defendant win expands over subsets of {F21_P}, so the bare
        # {F21_P} characterisation ends up recorded with both outcomes
        two = factor_case("b", plaintiff_factors=[21], defendant_factors=[], winner=Side.DEFENDANT)
        expanded = expand_casebase([one, two])
        assert list(expanded.conflicts) == [["F21_P"]]

    def test_labels(self):
        expanded = expand_casebase([])
        assert expanded.casebase.default_label == DEFENDANT_LABEL
        assert expanded.casebase.nondefault_label == PLAINTIFF_LABEL


class TestJson:
    DOC = {
        "cases": [
            {
                "name": "example",
                "plaintiff_factors": [15, 26],
                "defendant_factors": [1],
                "winner": "P",
            }
        ]
    }

    def test_from_json(self):
        (fc,) = factor_cases_from_json(self.DOC)
        assert fc.winner is Side.PLAINTIFF
        assert {f.atom for f in fc.plaintiff_factors} == {"F15_P", "F26_P"}

    def test_load(self, tmp_path):
        path = tmp_path / "cases.json"
        path.write_text(json.dumps(self.DOC))
        (fc,) = load_factor_cases(path)
        assert fc.name == "example"


class TestFixture:
    def test_shape(self):
        fixture = trade_secrets_fixture()
        assert len(fixture) == 8
        assert fixture.default_label == DEFENDANT_LABEL
        assert fixture.nondefault_label == PLAINTIFF_LABEL
        assert fixture.default_characterisation == frozenset()

    def test_predictions(self):
        fixture = trade_secrets_fixture()
        assert fixture.label_for(predict(fixture, FIXTURE_N1)) == PLAINTIFF_LABEL
        assert fixture.label_for(predict(fixture, FIXTURE_N2)) == DEFENDANT_LABEL
