"""Command-line front door.

One document per invocation, verdicts to stdout, optionally a JSON report
file.  Exit codes: 0 for any computed verdict (refutations included), 1
for input errors, 2 for internal errors, 3 when a theorem report
contradicts its expected conclusion.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from .documents import DocumentError, parse_document, run_document
from .ordersets import Semantics
from .rationals import parse_rat

COMMANDS = {
    "check-set": "check-set",
    "convergence": "convergence",
    "fit": "fit",
    "theorems": "theorem",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordertopo",
        description="exact verdicts about order topologies on vector lattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        p = sub.add_parser(command, help=f"run a {command} document")
        p.add_argument("document", help="path to the problem document (JSON)")
        p.add_argument("--semantics", choices=[s.value for s in Semantics],
                       help="override the document's strictness semantics")
        p.add_argument("--horizon", type=int, help="override the exact-scan horizon")
        p.add_argument("--grid-scale", help="scale factor for search grids (rational)")
        p.add_argument("--workers", type=int,
                       help="parallel evaluation lanes for the witness search")
        p.add_argument("--output", help="write the JSON report to this path")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        raw = json.loads(Path(args.document).read_text())
    except FileNotFoundError:
        print(f"error: no such document: {args.document}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as err:
        print(f"error: document is not valid JSON: {err}", file=sys.stderr)
        return 1
    try:
        doc = parse_document(raw, expected_task=COMMANDS[args.command])
        doc = _apply_overrides(doc, args)
        result = run_document(doc)
    except DocumentError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except Exception as err:  # pragma: no cover - defensive
        print(f"internal error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    sys.stdout.write(result.text)
    if args.output:
        payload = json.dumps(result.report, indent=2, sort_keys=True) + "\n"
        Path(args.output).write_text(payload)
    return result.exit_code


def _apply_overrides(doc, args):
    if args.semantics:
        doc = replace(doc, semantics=Semantics(args.semantics))
    config = doc.config
    if args.horizon is not None:
        if args.horizon < 1:
            raise DocumentError("--horizon", "must be a positive integer")
        config = replace(config, horizon=args.horizon)
    if args.workers is not None:
        if args.workers < 1:
            raise DocumentError("--workers", "must be a positive integer")
        config = replace(config, workers=args.workers)
    if args.grid_scale is not None:
        try:
            scale = parse_rat(args.grid_scale)
        except (ValueError, TypeError) as err:
            raise DocumentError("--grid-scale", f"not a rational: {err}")
        if scale <= 0:
            raise DocumentError("--grid-scale", "must be positive")
        config = replace(config, grid_scale=scale)
    return replace(doc, config=config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
