import json

import pytest

from cogbasic.bench import (
    Scenario,
    ScoreCard,
    compute_means,
    format_score,
    load_default_suite,
    load_suite,
    matches_keywords,
    render_report,
    render_table,
    run_suite,
    score_run,
    score_views,
    view_from_model_trace,
    view_from_run,
    write_results,
)
from cogbasic.interpreter import render_trace, run
from cogbasic.llm import parse_model_trace
from cogbasic.rules import detect_conflicts, extract_declarative
from cogbasic.syntax import parse_program


# --- keyword matching ----------------------------------------------------------


def test_keywords_match_case_and_punctuation_blind():
    assert matches_keywords("The Shop opens at 9.", ("shop", "9"))
    assert not matches_keywords("The shop opens at 9.", ("shop", "10"))
    assert matches_keywords("resolution: uncertain between 9 and 10", ("uncertain between",))


def test_keyword_phrases_do_not_match_across_words():
    assert not matches_keywords("uncertain, between friends", ())
    assert matches_keywords("uncertain between two values", ("uncertain between",))


# --- scoring ---------------------------------------------------------------------


@pytest.fixture()
def negation_scenario():
    return Scenario(
        id="t-ng",
        text="The sky is clear. The sky is not clear.",
        category="negation",
        expected_a=("sky", "clear"),
        expected_b=("sky", "not", "clear"),
        resolution_keywords=("uncertain", "sky"),
    )


def test_perfect_run_scores_all_ones(conflict_program, rule_provider, negation_scenario):
    result = run(conflict_program, negation_scenario.text, rule_provider)
    card = score_run(negation_scenario, view_from_run(result))
    assert (card.d, card.c, card.r, card.full_chain) == (1, 1, 1, 1)


def test_detection_failure_scores_d_only(conflict_program, rule_provider):
    # Paraphrased second sentence defeats exact subject matching: extraction
    # still lands both facts, detection finds nothing, resolution never runs.
    scenario = Scenario(
        id="t-miss",
        text="The sky is clear. Right now the sky is not clear at all.",
        category="negation",
        expected_a=("sky", "clear"),
        expected_b=("sky", "not", "clear"),
        resolution_keywords=("uncertain",),
    )
    result = run(conflict_program, scenario.text, rule_provider)
    card = score_run(scenario, view_from_run(result))
    assert (card.d, card.c, card.r, card.full_chain) == (1, 0, 0, 0)


def test_unresolved_conflicts_zero_the_resolution_score(conflict_program, rule_provider, negation_scenario):
    program = parse_program(
        "10 LET working = INPUT()\n"
        "20 facts = EXTRACT_DECLARATIVE(working)\n"
        "30 ADD declarative FROM facts\n"
        "40 DETECT_CONFLICTS()\n"
        "50 END"
    )
    result = run(program, negation_scenario.text, rule_provider)
    card = score_run(negation_scenario, view_from_run(result))
    assert (card.d, card.c) == (1, 1)
    assert card.r == 0  # conflicts never cleared, resolution empty


def test_d_and_c_scored_against_peak_not_final(conflict_program, rule_provider, negation_scenario):
    # After resolution the original facts are merged away and conflicts are
    # cleared; scoring must still credit them from the peak trace state.
    result = run(conflict_program, negation_scenario.text, rule_provider)
    assert negation_scenario.expected_b[1] == "not"
    assert all("not" not in fact for fact in result.final_memory.declarative)
    assert result.final_memory.conflicts == []
    card = score_run(negation_scenario, view_from_run(result))
    assert card.d == 1 and card.c == 1


def test_extra_unrelated_fact_never_lowers_scores(conflict_program, rule_provider, negation_scenario):
    padded = Scenario(
        id="t-pad",
        text=negation_scenario.text + " The kettle is loud.",
        category="negation",
        expected_a=negation_scenario.expected_a,
        expected_b=negation_scenario.expected_b,
        resolution_keywords=negation_scenario.resolution_keywords,
    )
    base = score_run(
        negation_scenario, view_from_run(run(conflict_program, negation_scenario.text, rule_provider))
    )
    with_extra = score_run(padded, view_from_run(run(conflict_program, padded.text, rule_provider)))
    assert (with_extra.d, with_extra.c, with_extra.r) >= (base.d, base.c, base.r)


def test_model_trace_view_scores_like_interpreter_view(conflict_program, rule_provider, negation_scenario):
    result = run(conflict_program, negation_scenario.text, rule_provider)
    trace = parse_model_trace(render_trace(result))
    card_model = score_run(negation_scenario, view_from_model_trace(trace))
    card_run = score_run(negation_scenario, view_from_run(result))
    assert card_model == card_run


def test_control_rubric(conflict_program, rule_provider):
    control = Scenario(id="t-ct", text="Water boils when heated. Ice is cold.", control=True)
    result = run(conflict_program, control.text, rule_provider)
    card = score_run(control, view_from_run(result))
    assert (card.d, card.c, card.r, card.full_chain) == (1, 1, 1, 1)
    assert card.notes == "control"


def test_control_rubric_penalizes_false_positives(conflict_program, rule_provider):
    control = Scenario(id="t-ct2", text="The sky is clear. The sky is not clear.", control=True)
    result = run(conflict_program, control.text, rule_provider)
    card = score_run(control, view_from_run(result))
    assert card.c == 0 and card.r == 0


def test_full_chain_never_exceeds_component_scores():
    for d in (0, 1):
        for c in (0, 1):
            for r in (0, 1):
                card = ScoreCard("x", d, c, r, int(d and c and r))
                assert card.full_chain <= min(d, c, r)


# --- suite ----------------------------------------------------------------------


def test_shipped_suite_shape():
    suite = load_default_suite()
    scored = [s for s in suite if not s.control]
    controls = [s for s in suite if s.control]
    assert len(scored) == 25
    assert len(controls) == 5
    by_category = {}
    for s in scored:
        by_category[s.category] = by_category.get(s.category, 0) + 1
    assert by_category == {
        "absolute-qualified": 9,
        "negation": 8,
        "numeric-categorical": 8,
    }
    assert len({s.id for s in suite}) == len(suite)


def test_every_scenario_is_two_to_five_sentences():
    from cogbasic.rules import segment_sentences

    for scenario in load_default_suite():
        assert 2 <= len(segment_sentences(scenario.text)) <= 5


def test_every_conflict_scenario_detects_exactly_its_labeled_pair():
    for scenario in load_default_suite():
        facts = extract_declarative(scenario.text)
        pairs = detect_conflicts(facts)
        if scenario.control:
            assert pairs == [], scenario.id
        else:
            assert len(pairs) == 1, scenario.id
            assert pairs[0].category == scenario.category, scenario.id
            assert matches_keywords(pairs[0].a, scenario.expected_a), scenario.id
            assert matches_keywords(pairs[0].b, scenario.expected_b), scenario.id


def test_control_scenarios_exit_at_non_resolution_end(conflict_program, rule_provider):
    for scenario in load_default_suite():
        if not scenario.control:
            continue
        result = run(conflict_program, scenario.text, rule_provider)
        assert result.trace[-1].line == 80, scenario.id


def test_rule_provider_calibration_all_ones(conflict_program, rule_provider):
    report = run_suite(load_default_suite(), conflict_program, rule_provider)
    assert report.means == {"D": 1.0, "C": 1.0, "R": 1.0, "full_chain": 1.0}
    assert report.n_scored == 25
    assert all(c.full_chain == 1 for c in report.cards)


def test_suite_determinism(conflict_program, rule_provider):
    suite = load_default_suite()
    first = run_suite(suite, conflict_program, rule_provider)
    second = run_suite(suite, conflict_program, rule_provider)
    assert first.cards == second.cards
    assert [c.scenario_id for c in first.cards] == [s.id for s in suite]


def test_parallel_workers_preserve_order_and_scores(conflict_program, rule_provider):
    suite = load_default_suite()
    sequential = run_suite(suite, conflict_program, rule_provider)
    parallel = run_suite(suite, conflict_program, rule_provider, workers=4)
    assert parallel.cards == sequential.cards


def test_failed_scenario_scores_zero_with_notes(rule_provider):
    looping = parse_program("10 GOTO 10")
    suite = [Scenario(id="x", text="Anything.", control=True)]
    report = run_suite(suite, looping, rule_provider, step_limit=10)
    assert report.cards[0] == ScoreCard("x", 0, 0, 0, 0, notes="step-limit-exceeded")


def test_single_perfect_scenario_means(conflict_program, rule_provider, negation_scenario):
    report = run_suite([negation_scenario], conflict_program, rule_provider)
    assert report.means == {"D": 1.0, "C": 1.0, "R": 1.0, "full_chain": 1.0}


# --- report rendering -------------------------------------------------------------


def test_table_formatting_matches_reference_row():
    cards = (
        [ScoreCard(f"s{i}", 1, 1, 1, 1) for i in range(22)]
        + [ScoreCard("s22", 1, 0, 1, 0)]
        + [ScoreCard("s23", 1, 1, 0, 0)]
        + [ScoreCard("s24", 1, 0, 0, 0)]
    )
    means = compute_means(cards)
    table = render_table([("granite3.3", means)])
    lines = table.splitlines()
    assert lines[0].split() == ["Model", "D", "C", "R", "Full", "Chain"]
    assert lines[1].split() == ["granite3.3", "1.00", "0.92", "0.92", "0.88"]


def test_scores_round_half_up():
    assert format_score(0.885) == "0.89"
    assert format_score(0.884) == "0.88"
    assert format_score(1.0) == "1.00"
    assert format_score(0.6) == "0.60"


def test_report_renders_table_and_footer(conflict_program, rule_provider):
    report = run_suite(load_default_suite(), conflict_program, rule_provider)
    text = render_report(report)
    assert "Model" in text and "Full Chain" in text
    assert "25 scenario(s) scored, 5 control(s)" in text


def test_write_results_json(tmp_path, conflict_program, rule_provider, negation_scenario):
    report = run_suite([negation_scenario], conflict_program, rule_provider)
    out = tmp_path / "results.json"
    write_results(report, out)
    payload = json.loads(out.read_text())
    assert payload["means"]["full_chain"] == 1.0
    assert payload["cards"][0]["scenario_id"] == "t-ng"


def test_score_views_handles_missing_views(negation_scenario):
    report = score_views("m", [negation_scenario], [None], ["parse failed"])
    assert report.cards[0].full_chain == 0
    assert report.cards[0].notes == "parse failed"


def test_load_suite_rejects_bad_records(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": "x"}\n')
    with pytest.raises(ValueError):
        load_suite(bad)
    empty = tmp_path / "empty.jsonl"
    empty.write_text("\n")
    with pytest.raises(ValueError):
        load_suite(empty)
