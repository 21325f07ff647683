"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 invalid announcement during
a run, 3 parse error (64 for usage errors).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .dynamics import AnnouncementError, TrustPolicy
from .oracle import oracle_semantics, random_frame
from .scenario import (
    Scenario,
    ScenarioParseError,
    ScenarioValidationError,
    Trace,
    dumps_trace,
    fixture_path,
    load_scenario,
    query,
    run,
    state_at,
)
from .semantics import SemanticsKind, semantics, sorted_extensions
from .export import export_graph

EX_OK = 0
EX_VALIDATION = 1
EX_ANNOUNCEMENT = 2
EX_PARSE = 3
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit code 2 reserved for announcement failures
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _resolve(path: str) -> str:
    if os.path.exists(path):
        return path
    try:
        return fixture_path(path)
    except FileNotFoundError:
        return path


def _load(path: str) -> Scenario:
    with open(_resolve(path), "rb") as fh:
        return load_scenario(fh)


def _policy(text: str | None) -> TrustPolicy | None:
    if text is None:
        return None
    try:
        honest, dishonest = (int(x) for x in text.split(","))
        return TrustPolicy(honest, dishonest)
    except ValueError as exc:
        raise ScenarioParseError(f"bad --policy value {text!r}: expected H,D") from exc


def _labels(sc: Scenario) -> dict[str, str]:
    return {d.id: d.label for d in sc.arguments if d.label}


def cmd_validate(ns) -> int:
    _load(ns.file)
    print(f"{ns.file}: valid")
    return EX_OK


def cmd_run(ns) -> int:
    sc = _load(ns.file)
    policy = _policy(ns.policy)
    if policy is not None:
        sc = Scenario(sc.arguments, sc.initial, sc.script, policy, sc.notes)
    trace: Trace = run(sc, with_semantics=ns.with_semantics)
    text = dumps_trace(trace)
    if ns.trace:
        with open(ns.trace, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if trace.error_step is not None:
        print(f"invalid announcement at step {trace.error_step}: {'; '.join(trace.error)}", file=sys.stderr)
        return EX_ANNOUNCEMENT
    return EX_OK


def cmd_query(ns) -> int:
    sc = _load(ns.file)
    m = state_at(sc, ns.at)
    kind = SemanticsKind(ns.kind) if ns.kind else None
    exts = query(m, ns.viewer, ns.subject, ns.view, kind)
    json.dump(sorted_extensions(exts), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EX_OK


def cmd_export(ns) -> int:
    sc = _load(ns.file)
    m = state_at(sc, ns.at)
    if ns.format != "graph":
        raise ScenarioParseError(f"unknown export format {ns.format!r}")
    text = export_graph(m, ns.view, _labels(sc))
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_oracle_check(ns) -> int:
    rng = random.Random(ns.seed)
    densities = [0.1, 0.2, 0.3, 0.4, 0.5]
    mismatches = 0
    for trial in range(1, ns.trials + 1):
        f = random_frame(rng, rng.randint(1, ns.max_args), rng.choice(densities))
        for kind in SemanticsKind:
            got = semantics(kind, f)
            want = oracle_semantics(kind, f)
            if got != want:
                mismatches += 1
                print(f"MISMATCH trial {trial} kind {kind.value}: "
                      f"solver {sorted_extensions(got)} oracle {sorted_extensions(want)}",
                      file=sys.stderr)
    print(f"oracle-check: {ns.trials} random frames (max {ns.max_args} args, seed {ns.seed}), "
          f"{mismatches} mismatches")
    return EX_OK if mismatches == 0 else EX_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mmarg", description="Manipulable multi-agent argumentation simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a scenario file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("run", help="replay a scenario script and emit the trace")
    p.add_argument("file")
    p.add_argument("--trace", help="write the trace JSON here instead of stdout")
    p.add_argument("--policy", help="trust policy as H,D (overrides the file's policy)")
    p.add_argument("--with-semantics", action="store_true", help="record per-agent trust-adjusted semantics each step")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("query", help="extension sets of a view at a given step")
    p.add_argument("file")
    p.add_argument("--at", type=int, default=0, help="state after this many script steps")
    p.add_argument("--viewer", required=True)
    p.add_argument("--subject")
    p.add_argument("--view", required=True, choices=["public", "local", "trust-adjusted"])
    p.add_argument("--kind", choices=[k.value for k in SemanticsKind], help="override the scenario's semantics kind")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("export", help="export a view as a DOT graph")
    p.add_argument("file")
    p.add_argument("--at", type=int, default=0)
    p.add_argument("--view", required=True, help="public | global | aware:E | perceived:V:S | adjusted:V:S | trust-adjusted:E")
    p.add_argument("--format", default="graph", choices=["graph"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("oracle-check", help="cross-check the solver against the brute-force oracle")
    p.add_argument("--max-args", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except ScenarioParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    except ScenarioValidationError as exc:
        print("validation failed:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EX_VALIDATION
    except AnnouncementError as exc:
        print(f"invalid announcement: {exc}", file=sys.stderr)
        return EX_ANNOUNCEMENT
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
