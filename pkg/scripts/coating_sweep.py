"""Run the coating algorithm on the fixtures under every scheduler and seed
range, reporting solved counts and event statistics."""
import argparse
import statistics

from pairbot.algorithms import get_algorithm
from pairbot.analysis import analyze_scene, check_coating_solved
from pairbot.engine import AsyncRandom, FSync, SSync, replay, run
from pairbot.fixtures import SCENES, pocket_object, short_line


def scenes(include_pockets):
    out = {name: SCENES[name]() for name in ("hexagon", "blob", "pocket")}
    if include_pockets:
        for m in range(1, 7):
            out[f"pocket-mouth-{m}"] = short_line(19, front=0, obj=pocket_object((6, 0), m))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ssync-seeds", type=int, default=20)
    ap.add_argument("--async-seeds", type=int, default=100)
    ap.add_argument("--max-events", type=int, default=200_000)
    ap.add_argument("--scan", choices=("asc", "desc"), default="asc")
    ap.add_argument("--all-pockets", action="store_true", help="also try every pocket orientation")
    args = ap.parse_args()
    algo = get_algorithm("coating", args.scan)
    for name, scene in scenes(args.all_pockets).items():
        sets = analyze_scene(scene)
        print(f"{name}: pairs={len(scene.pairs)} |S|={len(sets['surface'])} "
              f"|N|={len(sets['nonCoating'])} |C|={len(sets['coating'])}")
        runs = [("fsync", FSync())]
        runs += [("ssync", SSync(s)) for s in range(1, args.ssync_seeds + 1)]
        runs += [("async", AsyncRandom(s)) for s in range(1, args.async_seeds + 1)]
        stats = {}
        for kind, sched in runs:
            t = run(scene, algo, sched, args.max_events)
            rep = check_coating_solved(replay(t)[-1], scene, algo, coating=sets["coating"])
            ok = rep.solved and t.violation_count == 0
            s = stats.setdefault(kind, {"ok": 0, "n": 0, "events": []})
            s["ok"] += ok
            s["n"] += 1
            s["events"].append(t.summary["events"])
        for kind, s in stats.items():
            ev = s["events"]
            print(f"  {kind:6s} solved {s['ok']}/{s['n']}  events median={statistics.median(ev):.0f} max={max(ev)}")


if __name__ == "__main__":
    main()
