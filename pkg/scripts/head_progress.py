"""Head progress of the marching algorithm on every 3-pair line arrangement.

Prints, per arrangement, the FSYNC rounds at which the head advanced, the
gaps between them, and the ASYNC advance counts over a range of seeds.
"""
import argparse

from pairbot.algorithms import get_algorithm
from pairbot.analysis import check_marching_progress
from pairbot.engine import AsyncRandom, replay, run, step_fsync
from pairbot.fixtures import line_arrangements
from pairbot.model import line_scene


def fsync_advances(spans, rounds, algo):
    c = line_scene(spans).configuration()
    prev = max(p.x for p in c.positions)
    out = []
    for r in range(1, rounds + 1):
        c = step_fsync(c, algo)
        top = max(p.x for p in c.positions)
        if top > prev:
            out.append(r)
        prev = top
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=3)
    ap.add_argument("--rounds", type=int, default=60)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--events", type=int, default=2000)
    ap.add_argument("--window", type=int, default=4)
    args = ap.parse_args()
    algo = get_algorithm("marching")
    for spans in line_arrangements(args.pairs):
        adv = fsync_advances(spans, args.rounds, algo)
        gaps = [b - a for a, b in zip([0] + adv, adv)]
        counts = []
        for seed in range(1, args.seeds + 1):
            t = run(line_scene(spans), algo, AsyncRandom(seed), args.events)
            counts.append(len(check_marching_progress(replay(t), t.events).head_advances))
        flag = "" if max(gaps) <= args.window else f"  gap>{args.window}"
        print(f"{str(spans):28s} fsync first={adv[0]} max_gap={max(gaps)} "
              f"count={len(adv)}/{args.rounds}  async min={min(counts)} max={max(counts)}{flag}")


if __name__ == "__main__":
    main()
