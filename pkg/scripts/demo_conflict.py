#!/usr/bin/env python3
"""Walk one contradictory scenario through the bundled pipeline program and
print the full reasoning trace.

    python scripts/demo_conflict.py
    python scripts/demo_conflict.py --text "The door is red. The door is green."
"""

import argparse

from cogbasic.cli import default_program_path
from cogbasic.interpreter import render_trace, run
from cogbasic.rules import RuleBasedProvider
from cogbasic.syntax import parse_program_file

DEFAULT_SCENARIO = "The sky is clear. The picnic starts soon. The sky is not clear."


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--text", default=DEFAULT_SCENARIO, help="scenario text")
    parser.add_argument("--program", help="program file (default: bundled pipeline)")
    args = parser.parse_args()

    program = parse_program_file(args.program or default_program_path())
    result = run(program, args.text, RuleBasedProvider())
    print(render_trace(result))
    return 0 if result.outcome == "completed" else 1


if __name__ == "__main__":
    raise SystemExit(main())
