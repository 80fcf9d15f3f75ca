"""figkit command line: render figure specs or single quick panels.

    figkit render spec.json
    figkit panel --kind survival --csv walk.hist.csv --out fig.svg
"""

from __future__ import annotations

import argparse
import json

from .render import FigureSpec, PanelSpec, render


def _cmd_render(args):
    with open(args.spec) as fh:
        spec = FigureSpec.from_dict(json.load(fh))
    if args.output:
        spec.output = args.output
    print(render(spec))


def _cmd_panel(args):
    spec = FigureSpec(
        panels=[PanelSpec(kind=args.kind, csv_paths=args.csv,
                          guide_exponent=args.guide, title=args.title)],
        output=args.out,
    )
    print(render(spec))


def main(argv=None):
    p = argparse.ArgumentParser(prog="figkit")
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("render", help="render a figure spec (JSON)")
    pr.add_argument("spec")
    pr.add_argument("--output", default=None)
    pr.set_defaults(fn=_cmd_render)

    pp = sub.add_parser("panel", help="render a single panel")
    pp.add_argument("--kind", required=True)
    pp.add_argument("--csv", nargs="*", default=[])
    pp.add_argument("--out", required=True)
    pp.add_argument("--guide", type=float, default=None)
    pp.add_argument("--title", default="")
    pp.set_defaults(fn=_cmd_panel)

    args = p.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    main()
