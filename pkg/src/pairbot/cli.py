"""``pairbot`` command line: run, explore, analyze, check, render.

Exit codes: 0 clean, 1 bad input, 2 safety violation or failed check,
3 budget exhausted before an answer was reached.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis
from .algorithms import ALGORITHM_NAMES, get_algorithm
from .engine import SCHEDULER_NAMES, ReplayError, make_scheduler, replay, run
from .explore import PREDICATES, explore
from .model import SceneError, load_scene, parse_scene
from .render import render_ascii, render_svg
from .trace import Trace

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3
CHECKS = ("line-formed", "safety", "coating", "progress")


def _checks_arg(text: str) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in items if t not in CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    return items


def _seed_arg(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def evaluate_checks(trace: Trace, checks) -> tuple[dict, int]:
    """Run post-hoc checks on a finished trace; returns (results, exit code)."""
    frames = replay(trace)
    scene = parse_scene(trace.header["scene"])
    results = {}
    status = EXIT_OK
    if "safety" in checks:
        ok = trace.violation_count == 0
        results["safety"] = {"ok": ok, "violations": trace.violation_count}
        status = status if ok else EXIT_VIOLATION
    if "line-formed" in checks or "progress" in checks:
        rep = analysis.check_marching_progress(frames, trace.events)
        if "line-formed" in checks:
            results["line-formed"] = {"ok": rep.line_formed_always, "firstBadFrame": rep.first_bad_frame}
            status = status if rep.line_formed_always else EXIT_VIOLATION
        if "progress" in checks:
            ok = bool(rep.head_advances)
            results["progress"] = {"ok": ok, "headAdvances": rep.head_advances}
            status = status if ok else EXIT_VIOLATION
    if "coating" in checks:
        algo = get_algorithm(trace.header["algorithm"], trace.header.get("scan", "asc"))
        rep = analysis.check_coating_solved(frames[-1], scene, algo)
        results["coating"] = {"ok": rep.solved, **rep.to_dict()}
        if not rep.solved:
            if rep.enabled and not trace.summary.get("terminated", False):
                status = max(status, EXIT_BUDGET) if status != EXIT_VIOLATION else status
            else:
                status = EXIT_VIOLATION
    return results, status


def _write(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    scene = load_scene(args.scene)
    algo = get_algorithm(args.algorithm, args.scan)
    if args.scheduler == "async-exhaustive":
        return _explore(scene, algo, args.depth, "line-formed" if args.algorithm == "marching" else None,
                        args.max_pairs, args.max_states, args.jobs, args.out)
    sched = make_scheduler(args.scheduler, seed=args.seed, p=args.p)
    trace = run(scene, algo, sched, args.max_events)
    checks = args.checks if args.checks is not None else ["safety"]
    results, status = evaluate_checks(trace, checks)
    trace.summary["checks"] = results
    trace.summary["exit"] = status
    _write(trace.to_jsonl(), args.out)
    return status


def _explore(scene, algo, depth, predicate, max_pairs, max_states, jobs, out) -> int:
    if len(scene.pairs) > max_pairs:
        print(f"error: exhaustive exploration is capped at {max_pairs} pairs "
              f"(scene has {len(scene.pairs)}); raise --max-pairs", file=sys.stderr)
        return EXIT_INPUT
    rep = explore(scene.configuration(), algo, depth, predicate, max_states=max_states, jobs=jobs)
    _write(json.dumps(rep.to_dict(), sort_keys=True) + "\n", out)
    if rep.violations:
        return EXIT_VIOLATION
    return EXIT_OK if rep.complete else EXIT_BUDGET


def cmd_explore(args) -> int:
    scene = load_scene(args.scene)
    algo = get_algorithm(args.algorithm, args.scan)
    pred = None if args.predicate == "none" else args.predicate
    return _explore(scene, algo, args.depth, pred, args.max_pairs, args.max_states, args.jobs, args.out)


def analysis_json(scene, margin: int, source: str = "union", disjoint: str = "internal") -> dict:
    sets = analysis.analyze_scene(scene, margin=margin, source=source, disjoint=disjoint)
    return {k: analysis.sorted_points(v) for k, v in sets.items()}


def cmd_analyze(args) -> int:
    scene = load_scene(args.scene)
    if not scene.obj:
        print("error: scene has no object to analyze", file=sys.stderr)
        return EXIT_INPUT
    data = analysis_json(scene, args.margin, args.source, args.disjoint)
    _write(json.dumps(data, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    trace = Trace.read(args.trace)
    checks = args.checks if args.checks is not None else list(CHECKS if trace.header["algorithm"] == "coating"
                                                             else ("safety", "line-formed", "progress"))
    if trace.header["algorithm"] != "coating" and "coating" in checks and args.checks is None:
        checks.remove("coating")
    results, status = evaluate_checks(trace, checks)
    _write(json.dumps({"checks": results, "exit": status}, sort_keys=True) + "\n", args.out)
    return status


def cmd_render(args) -> int:
    trace = Trace.read(args.trace)
    frames = replay(trace)
    last = len(frames) - 1
    if args.frame == "last":
        i = last
    else:
        try:
            i = int(args.frame)
        except ValueError:
            i = -1
        if not 0 <= i <= last:
            print(f"error: frame {args.frame!r} out of range; valid frames are 0..{last} or 'last'",
                  file=sys.stderr)
            return EXIT_INPUT
    c = frames[i]
    scene = parse_scene(trace.header["scene"])
    coating = analysis.analyze_scene(scene)["coating"] if scene.obj else None
    title = f"{trace.header['algorithm']} frame {i}/{last}"
    if args.format == "svg":
        text = render_svg(c, coating, title)
    else:
        color = args.out is None and sys.stdout.isatty() and not os.environ.get("PAIRBOT_NO_COLOR")
        text = render_ascii(c, coating, color=color, title=title)
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pairbot", description="Pairbot simulator and model checker")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="simulate a scene under a scheduler, emit a JSON Lines trace")
    r.add_argument("scene")
    r.add_argument("--algorithm", "-a", choices=ALGORITHM_NAMES, default="marching")
    r.add_argument("--scheduler", "-s", choices=SCHEDULER_NAMES, default="fsync")
    r.add_argument("--seed", type=_seed_arg, default=0)
    r.add_argument("--max-events", type=_positive, default=1000)
    r.add_argument("--p", type=float, default=0.5, help="SSYNC activation probability")
    r.add_argument("--checks", type=_checks_arg, default=None,
                   help=f"comma list from {{{','.join(CHECKS)}}} (default: safety)")
    r.add_argument("--depth", type=_positive, default=12, help="depth bound for async-exhaustive")
    r.add_argument("--max-pairs", type=_positive, default=3)
    r.add_argument("--max-states", type=_positive, default=2_000_000)
    r.add_argument("--jobs", type=_positive, default=1)
    r.add_argument("--scan", choices=("asc", "desc"), default="asc", help="label scan order in dir()")
    r.add_argument("--out", "-o")
    r.set_defaults(func=cmd_run)

    e = sub.add_parser("explore", help="enumerate all ASYNC interleavings up to a depth")
    e.add_argument("scene")
    e.add_argument("--algorithm", "-a", choices=ALGORITHM_NAMES, default="marching")
    e.add_argument("--depth", type=_positive, default=12)
    e.add_argument("--predicate", choices=sorted(PREDICATES) + ["none"], default="line-formed")
    e.add_argument("--max-pairs", type=_positive, default=3)
    e.add_argument("--max-states", type=_positive, default=2_000_000)
    e.add_argument("--jobs", type=_positive, default=1)
    e.add_argument("--scan", choices=("asc", "desc"), default="asc")
    e.add_argument("--out", "-o")
    e.set_defaults(func=cmd_explore)

    a = sub.add_parser("analyze", help="surface, non-coating and coating sets of a scene")
    a.add_argument("scene")
    a.add_argument("--margin", type=_positive, default=analysis.DEFAULT_MARGIN)
    a.add_argument("--source", choices=("union", "each"), default="union")
    a.add_argument("--disjoint", choices=("internal", "full"), default="internal")
    a.add_argument("--out", "-o")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="re-run checks on a saved trace")
    c.add_argument("trace")
    c.add_argument("--checks", type=_checks_arg, default=None)
    c.add_argument("--out", "-o")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("render", help="draw one frame of a trace as ASCII or SVG")
    v.add_argument("trace")
    v.add_argument("--frame", default="last", help="frame number or 'last'")
    v.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    v.add_argument("--out", "-o")
    v.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SceneError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError, ReplayError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
