"""Scenario corpus, scoring, suite runner, and report rendering."""

from .runner import (
    SuiteReport,
    compute_means,
    format_score,
    render_report,
    render_table,
    run_suite,
    score_views,
    write_results,
)
from .scenarios import (
    CATEGORIES,
    Scenario,
    default_suite_path,
    load_default_suite,
    load_suite,
    scenario_from_record,
)
from .scoring import (
    RunView,
    ScoreCard,
    matches_keywords,
    score_run,
    view_from_model_trace,
    view_from_run,
)

__all__ = [
    "CATEGORIES",
    "RunView",
    "Scenario",
    "ScoreCard",
    "SuiteReport",
    "compute_means",
    "default_suite_path",
    "format_score",
    "load_default_suite",
    "load_suite",
    "matches_keywords",
    "render_report",
    "render_table",
    "run_suite",
    "scenario_from_record",
    "score_run",
    "score_views",
    "view_from_model_trace",
    "view_from_run",
    "write_results",
]
