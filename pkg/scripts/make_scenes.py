"""Write the named fixture scenes to scenes/*.json."""
import argparse
import json
from pathlib import Path

from pairbot.fixtures import SCENES


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "scenes"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, make in SCENES.items():
        path = out / f"{name}.json"
        path.write_text(json.dumps(make().to_dict(), indent=1) + "\n")
        print(path)
    # a deliberately broken scene for the loader
    (out / "odd-robots.json").write_text(json.dumps({"pairs": [{"a": [0, 0]}], "object": []}) + "\n")


if __name__ == "__main__":
    main()
