"""Reproduce the full claim chain and write a JSON record next to the text summary.

    python scripts/reproduce.py [--out results.json]
"""

import argparse
import io
import json
import sys
import time

from qubitgroups.cli import run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", help="write the JSON record here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    code = run(["paper"])
    print(f"\n(text run: {time.perf_counter() - t0:.2f} s)")

    if args.out:
        buf = io.StringIO()
        run(["paper", "--json"], stdout=buf)
        with open(args.out, "w") as fh:
            json.dump(json.loads(buf.getvalue()), fh, indent=2)
        print(f"wrote {args.out}")
    sys.exit(code)


if __name__ == "__main__":
    main()
