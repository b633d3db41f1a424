#!/usr/bin/env python3
"""Write closed-knot PD fixtures in the project JSON format.

KnotInfo is used when it carries the knot; otherwise the Hoste-Thistlethwaite
table shipped with spherogram (0-based labels, shifted to start at 1).
"""
import argparse
import json
import sys


def knotinfo_pd(name):
    from database_knotinfo import link_list
    for k in link_list():
        if k.get("name") == name:
            pd = k.get("pd_notation")
            if isinstance(pd, str):
                pd = json.loads(pd)
            return [list(map(int, x)) for x in pd] if pd else None
    return None


def spherogram_pd(name):
    import spherogram
    ht = "K" + name.replace("_", "")
    pd = spherogram.Link(ht).PD_code()
    return [[int(v) + 1 for v in x] for x in pd]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("name", help="e.g. 11a_138 or 14n_3532")
    ap.add_argument("--source", choices=["auto", "knotinfo", "spherogram"], default="auto")
    ap.add_argument("-o", "--output")
    args = ap.parse_args()

    pd, source = None, None
    if args.source in ("auto", "knotinfo"):
        pd, source = knotinfo_pd(args.name), "KnotInfo"
    if pd is None and args.source in ("auto", "spherogram"):
        pd, source = spherogram_pd(args.name), "spherogram HT table"
    if pd is None:
        sys.exit("knot not found: " + args.name)

    m = max(max(x) for x in pd)
    doc = {
        "name": args.name,
        "comment": "closed knot diagram from " + source,
        "crossings": pd,
        "closed": [list(range(1, m + 1))],
    }
    text = json.dumps(doc)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


if __name__ == "__main__":
    main()
