"""Suite execution, aggregation, and the results table."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from ..errors import CogBasicError
from ..interpreter import DEFAULT_STEP_LIMIT, run
from ..syntax import Program
from .scenarios import Scenario
from .scoring import RunView, ScoreCard, score_run, view_from_run

TABLE_COLUMNS = ("Model", "D", "C", "R", "Full Chain")


@dataclass
class SuiteReport:
    provider_label: str
    cards: list[ScoreCard]
    means: dict[str, float]
    runtime_seconds: float
    n_scored: int
    n_control: int

    def to_json_obj(self) -> dict:
        return {
            "provider": self.provider_label,
            "means": self.means,
            "runtime_seconds": self.runtime_seconds,
            "scored_scenarios": self.n_scored,
            "control_scenarios": self.n_control,
            "cards": [vars(c) for c in self.cards],
        }


def _mean(values: list[int]) -> float:
    return sum(values) / len(values) if values else 0.0


def compute_means(cards: list[ScoreCard]) -> dict[str, float]:
    return {
        "D": _mean([c.d for c in cards]),
        "C": _mean([c.c for c in cards]),
        "R": _mean([c.r for c in cards]),
        "full_chain": _mean([c.full_chain for c in cards]),
    }


def aggregate(provider_label: str, scenarios: list[Scenario], cards: list[ScoreCard], runtime: float) -> SuiteReport:
    control_ids = {s.id for s in scenarios if s.control}
    scored = [c for c in cards if c.scenario_id not in control_ids]
    return SuiteReport(
        provider_label=provider_label,
        cards=cards,
        means=compute_means(scored),
        runtime_seconds=runtime,
        n_scored=len(scored),
        n_control=len(control_ids),
    )


def run_suite(
    scenarios: list[Scenario],
    program: Program,
    provider,
    step_limit: int = DEFAULT_STEP_LIMIT,
    workers: int = 1,
) -> SuiteReport:
    """Run the program once per scenario and score every run.

    Per-scenario failures never abort the suite; they score all zeros with a
    note. Results are ordered by suite position regardless of worker count.
    """
    if not scenarios:
        raise ValueError("suite is empty")
    started = time.perf_counter()

    def one(scenario: Scenario) -> ScoreCard:
        try:
            result = run(program, scenario.text, provider, step_limit=step_limit)
            if result.outcome != "completed":
                return ScoreCard(scenario.id, 0, 0, 0, 0, notes=result.outcome_text)
            return score_run(scenario, view_from_run(result))
        except CogBasicError as exc:
            return ScoreCard(scenario.id, 0, 0, 0, 0, notes=str(exc))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cards = list(pool.map(one, scenarios))
    else:
        cards = [one(s) for s in scenarios]

    label = getattr(provider, "label", type(provider).__name__)
    return aggregate(label, scenarios, cards, time.perf_counter() - started)


def score_views(
    provider_label: str, scenarios: list[Scenario], views: list[RunView | None], notes: list[str]
) -> SuiteReport:
    """Aggregate pre-computed run views (used by the whole-program mode)."""
    started = time.perf_counter()
    cards = []
    for scenario, view, note in zip(scenarios, views, notes):
        if view is None:
            cards.append(ScoreCard(scenario.id, 0, 0, 0, 0, notes=note))
        else:
            cards.append(score_run(scenario, view))
    return aggregate(provider_label, scenarios, cards, time.perf_counter() - started)


def format_score(value: float) -> str:
    """Two decimals, rounding halves up."""
    return str(Decimal(value).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def render_table(rows: list[tuple[str, dict[str, float]]]) -> str:
    """Aligned results table with the five benchmark columns."""
    body = [
        (
            label,
            format_score(means["D"]),
            format_score(means["C"]),
            format_score(means["R"]),
            format_score(means["full_chain"]),
        )
        for label, means in rows
    ]
    table = [TABLE_COLUMNS, *body]
    widths = [max(len(row[i]) for row in table) for i in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in table]
    return "\n".join(lines)


def render_report(report: SuiteReport) -> str:
    table = render_table([(report.provider_label, report.means)])
    footer = (
        f"{report.n_scored} scenario(s) scored"
        + (f", {report.n_control} control(s)" if report.n_control else "")
        + f"; runtime {report.runtime_seconds:.2f}s"
    )
    return f"{table}\n\n{footer}"


def write_results(report: SuiteReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json_obj(), fh, indent=2)
        fh.write("\n")
