#!/usr/bin/env python3
"""Run the conflict benchmark and print the results table.

Examples:
    python scripts/run_benchmark.py
    python scripts/run_benchmark.py --provider llm --endpoint http://localhost:11434/v1 --model granite3.3
    python scripts/run_benchmark.py --out results.json
"""

import argparse

from cogbasic.bench import load_default_suite, load_suite, render_report, run_suite, write_results
from cogbasic.cli import default_program_path
from cogbasic.llm import EndpointConfig, LlmProvider
from cogbasic.rules import RuleBasedProvider
from cogbasic.syntax import parse_program_file


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", help="scenario suite file (default: bundled)")
    parser.add_argument("--program", help="program file (default: bundled pipeline)")
    parser.add_argument("--provider", choices=("rules", "llm"), default="rules")
    parser.add_argument("--endpoint")
    parser.add_argument("--model")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", help="write results JSON here")
    args = parser.parse_args()

    suite = load_suite(args.suite) if args.suite else load_default_suite()
    program = parse_program_file(args.program or default_program_path())
    if args.provider == "llm":
        provider = LlmProvider(EndpointConfig.from_env(base_url=args.endpoint, model=args.model))
    else:
        provider = RuleBasedProvider()

    report = run_suite(suite, program, provider, workers=args.workers)
    print(render_report(report))
    if args.out:
        write_results(report, args.out)
        print(f"results written to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
