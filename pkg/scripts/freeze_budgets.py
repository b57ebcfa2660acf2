"""Freeze per-fixture coating event budgets at 10x the first passing run.

For each fixture and scheduler the first seed of the acceptance sweep is run
with a generous cap; if it solves the coating problem its event count times
ten becomes the budget every other seed must meet.
"""
import argparse
import json
from pathlib import Path

from pairbot.algorithms import get_algorithm
from pairbot.analysis import check_coating_solved
from pairbot.engine import make_scheduler, replay, run
from pairbot.fixtures import COATING_FIXTURES, SCENES

FIRST_SEED = {"fsync": 0, "ssync": 1, "async-random": 1}
FACTOR = 10
CAP = 1_000_000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "data" / "coating_budgets.json"))
    args = ap.parse_args()
    algo = get_algorithm("coating")
    budgets = {}
    for name in COATING_FIXTURES:
        scene = SCENES[name]()
        budgets[name] = {}
        for sched, seed in FIRST_SEED.items():
            t = run(scene, algo, make_scheduler(sched, seed=seed), CAP)
            rep = check_coating_solved(replay(t)[-1], scene, algo)
            if not rep.solved or t.violation_count:
                raise SystemExit(f"{name}/{sched}: first run did not pass: {rep.to_dict()}")
            budgets[name][sched] = FACTOR * t.summary["events"]
            print(f"{name:8s} {sched:13s} seed={seed} events={t.summary['events']} budget={budgets[name][sched]}")
    Path(args.out).write_text(json.dumps(budgets, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
