"""Command-line entry point: run, step, bench, check-trace, fmt."""

from __future__ import annotations

import argparse
import logging
import sys
from importlib import resources
from pathlib import Path

from .bench import (
    load_default_suite,
    load_suite,
    render_report,
    run_suite,
    score_views,
    view_from_model_trace,
    write_results,
)
from .errors import CogBasicError, ParseError
from .interpreter import (
    DEFAULT_STEP_LIMIT,
    new_state,
    render_entry,
    render_machine_trace,
    render_trace,
    run,
    step,
)
from .llm import (
    EndpointConfig,
    InterpreterFile,
    LlmError,
    LlmProvider,
    TraceParseError,
    check_conformance,
    default_interpreter_file,
    parse_model_trace,
    run_in_model,
)
from .memory import render_final_memory
from .rules import RuleBasedProvider
from .syntax import format_program, parse_program_file

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2
EXIT_STEP_LIMIT = 3

PROVIDERS = ("rules", "llm", "llm-inmodel")


def default_program_path() -> Path:
    return Path(str(resources.files("cogbasic") / "programs" / "conflict_resolution.cb"))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _read_scenario(args) -> str:
    if args.text is not None:
        return args.text
    if args.scenario:
        return Path(args.scenario).read_text(encoding="utf-8")
    raise CogBasicError("a scenario is required (--scenario FILE or --text '...')")


def _endpoint_config(args) -> EndpointConfig:
    return EndpointConfig.from_env(base_url=args.endpoint, model=args.model)


def _make_provider(args):
    if args.provider == "rules":
        return RuleBasedProvider()
    if args.provider == "llm":
        return LlmProvider(_endpoint_config(args))
    raise CogBasicError(f"provider {args.provider!r} is not an interpreter provider")


def _interpreter_file(args) -> InterpreterFile:
    if getattr(args, "interpreter_file", None):
        return InterpreterFile(Path(args.interpreter_file).read_text(encoding="utf-8"))
    return default_interpreter_file()


def _verbosity(args) -> int:
    if args.quiet:
        return 0
    return min(1 + args.verbose, 2)


def cmd_run(args) -> int:
    try:
        program = parse_program_file(args.program)
        scenario = _read_scenario(args)
    except (CogBasicError, OSError, ValueError) as exc:
        return _fail(str(exc))

    if args.provider == "llm-inmodel":
        return _run_in_model(args, program, scenario)

    try:
        provider = _make_provider(args)
    except (CogBasicError, ValueError) as exc:
        return _fail(str(exc))

    result = run(program, scenario, provider, step_limit=args.step_limit)
    verbosity = _verbosity(args)
    if verbosity >= 1:
        print(render_trace(result))
    else:
        print(render_final_memory(result.final_memory))
    if args.trace_out:
        Path(args.trace_out).write_text(render_machine_trace(result), encoding="utf-8")
    if result.outcome == "completed":
        return EXIT_OK
    if result.outcome == "step-limit-exceeded":
        return EXIT_STEP_LIMIT
    return EXIT_RUNTIME


def _run_in_model(args, program, scenario) -> int:
    try:
        config = _endpoint_config(args)
    except ValueError as exc:
        return _fail(str(exc))
    try:
        trace = run_in_model(config, _interpreter_file(args), program, scenario)
    except TraceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.trace_out:
            Path(args.trace_out).write_text(exc.raw, encoding="utf-8")
        return EXIT_RUNTIME
    except LlmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    if _verbosity(args) >= 1:
        print(trace.raw)
    else:
        print(render_final_memory(trace.final_memory))
    if args.trace_out:
        Path(args.trace_out).write_text(trace.raw, encoding="utf-8")
    return EXIT_OK


def cmd_step(args) -> int:
    try:
        program = parse_program_file(args.program)
        scenario = _read_scenario(args)
        provider = _make_provider(args)
    except (CogBasicError, OSError, ValueError) as exc:
        return _fail(str(exc))

    state = new_state(program, scenario)
    print("stepping; enter=one step, m=dump memory, c=run to END, q=quit")
    continuous = False
    while state.status == "running" and state.steps_taken < args.step_limit:
        if not continuous:
            try:
                command = input("> ").strip().lower()
            except EOFError:
                break
            if command == "q":
                break
            if command == "m":
                print("\n".join(
                    ["MEMORY:"] + render_final_memory(state.memory).splitlines()[1:]
                ))
                continue
            if command == "c":
                continuous = True
        try:
            entry = step(state, provider)
        except CogBasicError as exc:
            print(f"OUTCOME: runtime-error: {exc}")
            return EXIT_RUNTIME
        print(render_entry(entry))
        print()
    print(render_final_memory(state.memory))
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        suite = load_suite(args.suite) if args.suite else load_default_suite()
        program_path = args.program or default_program_path()
        program = parse_program_file(program_path)
    except (CogBasicError, OSError, ValueError) as exc:
        return _fail(str(exc))

    if args.provider == "llm-inmodel":
        try:
            config = _endpoint_config(args)
        except ValueError as exc:
            return _fail(str(exc))
        manual = _interpreter_file(args)
        views, notes = [], []
        for scenario in suite:
            try:
                trace = run_in_model(config, manual, program, scenario.text)
                views.append(view_from_model_trace(trace))
                notes.append("")
            except (LlmError, TraceParseError) as exc:
                views.append(None)
                notes.append(str(exc))
        report = score_views(f"{config.model} (in-model)", suite, views, notes)
    else:
        try:
            provider = _make_provider(args)
        except (CogBasicError, ValueError) as exc:
            return _fail(str(exc))
        report = run_suite(suite, program, provider, step_limit=args.step_limit, workers=args.workers)

    print(render_report(report))
    if args.out:
        write_results(report, args.out)
    return EXIT_OK


def cmd_check_trace(args) -> int:
    try:
        program = parse_program_file(args.program)
        trace_text = Path(args.trace).read_text(encoding="utf-8")
    except (CogBasicError, OSError) as exc:
        return _fail(str(exc))
    try:
        trace = parse_model_trace(trace_text)
    except TraceParseError as exc:
        return _fail(str(exc))
    violations = check_conformance(program, trace)
    if not violations:
        print("conformant: no violations")
        return EXIT_OK
    for v in violations:
        print(str(v))
    print(f"{len(violations)} violation(s)")
    return EXIT_RUNTIME


def cmd_fmt(args) -> int:
    try:
        program = parse_program_file(args.program)
    except (CogBasicError, OSError) as exc:
        return _fail(str(exc))
    canonical = format_program(program) + "\n"
    if args.stdout:
        sys.stdout.write(canonical)
    else:
        Path(args.program).write_text(canonical, encoding="utf-8")
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, scenario: bool = True) -> None:
    parser.add_argument("--provider", choices=PROVIDERS, default="rules")
    parser.add_argument("--endpoint", help="chat-completions base URL (or COGBASIC_LLM_URL)")
    parser.add_argument("--model", help="model name (or COGBASIC_LLM_MODEL)")
    parser.add_argument("--step-limit", type=int, default=DEFAULT_STEP_LIMIT)
    parser.add_argument("--interpreter-file", help="override the in-model execution manual")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--quiet", action="store_true", help="print FINAL MEMORY only")
    if scenario:
        parser.add_argument("--scenario", help="scenario text file")
        parser.add_argument("--text", help="inline scenario text")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cogbasic")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a program on a scenario")
    p_run.add_argument("--program", required=True)
    p_run.add_argument("--trace-out", help="write the machine-readable trace here")
    _add_common(p_run)
    p_run.set_defaults(func=cmd_run)

    p_step = sub.add_parser("step", help="execute one statement at a time")
    p_step.add_argument("--program", required=True)
    _add_common(p_step)
    p_step.set_defaults(func=cmd_step)

    p_bench = sub.add_parser("bench", help="run the benchmark suite and print the table")
    p_bench.add_argument("--suite", help="scenario suite file (default: bundled suite)")
    p_bench.add_argument("--program", help="program to benchmark (default: bundled)")
    p_bench.add_argument("--out", help="write machine-readable results JSON here")
    p_bench.add_argument("--workers", type=int, default=1)
    _add_common(p_bench, scenario=False)
    p_bench.set_defaults(func=cmd_bench)

    p_check = sub.add_parser("check-trace", help="check a trace against a program")
    p_check.add_argument("trace", help="trace text file (rendered or model-produced)")
    p_check.add_argument("--program", required=True)
    p_check.set_defaults(func=cmd_check_trace)

    p_fmt = sub.add_parser("fmt", help="rewrite a program in canonical form")
    p_fmt.add_argument("program")
    p_fmt.add_argument("--stdout", action="store_true", help="print instead of rewriting")
    p_fmt.set_defaults(func=cmd_fmt)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    if getattr(args, "verbose", 0) >= 1:
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(str(exc))
    except CogBasicError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
