"""Command line entry point ``e6wb``.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .atlas import to_dot

TABLES = ("basis", "intersections", "maximal", "subht", "subt", "subh", "refine", "comm", "fano", "orbit")


def _fmt(value) -> str:
    v = verify.plain(value)
    if isinstance(v, str):
        return v
    return json.dumps(v, ensure_ascii=False, separators=(",", ":"))


def render_text(results: dict[str, list[verify.Check]]) -> str:
    lines = []
    for name, checks in results.items():
        lines.append(f"== {name}")
        width = max((len(c.key) for c in checks), default=0)
        for c in checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"  {tag}  {c.key:<{width}}  expected {_fmt(c.expected)}  computed {_fmt(c.computed)}")
    total = sum(len(c) for c in results.values())
    bad = verify.failures(results)
    lines.append(f"{total} checks, {len(bad)} failures")
    for section, c in bad:
        lines.append(f"FAILED {section}: {c.key}")
    return "\n".join(lines) + "\n"


def _workbench(args) -> verify.Workbench:
    wb = verify.Workbench()
    if getattr(args, "inject_fault", None):
        i, j, k = (int(x) for x in args.inject_fault.split(","))
        wb.ctx.inject_fault(i, j, k)
    return wb


def cmd_verify(args) -> int:
    names = None
    if args.section:
        unknown = [s for s in args.section if s not in verify.SECTIONS]
        if unknown:
            print(f"unknown section(s): {', '.join(unknown)}; choose from {', '.join(verify.SECTIONS)}", file=sys.stderr)
            return 2
        names = args.section
    results = verify.run_sections(names, _workbench(args))
    if args.format == "json":
        sys.stdout.write(json.dumps(verify.to_json(results), ensure_ascii=False, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(results))
    return 1 if verify.failures(results) else 0


def cmd_tables(args) -> int:
    which = args.which
    wb = verify.Workbench()
    checks = verify.run_sections([which], wb)[which]
    if args.format == "json":
        rows = [{"key": c.key, "expected": verify.plain(c.expected), "computed": verify.plain(c.computed)} for c in checks]
        sys.stdout.write(json.dumps({"table": which, "rows": rows}, ensure_ascii=False, indent=2) + "\n")
    else:
        out = render_text({which: checks})
        if which == "fano":
            names, grid = verify.fano_grid(wb)
            width = max(len(n) for n in names)
            head = " " * (width + 2) + " ".join(f"{n:<{width}}" for n in names)
            body = [f"{a:<{width}}  " + " ".join(f"{x:<{width}}" for x in row) for a, row in zip(names, grid)]
            out = "\n".join([head] + body) + "\n" + out
        sys.stdout.write(out)
    return 1 if any(not c.passed for c in checks) else 0


def cmd_chains(args) -> int:
    wb = verify.Workbench()
    text = to_dot(wb.atlas)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    for note in wb.atlas.notes:
        print(f"note: {note}")
    print(f"wrote {len(wb.atlas.records)} nodes to {args.out}")
    return 0


def cmd_dump(args) -> int:
    wb = verify.Workbench()
    results = verify.run_sections(None, wb)
    data = verify.to_json(results)
    data["records"] = [
        {
            "name": r.name,
            "recipe": r.recipe,
            "dim": r.dim,
            "rank": r.rank,
            "signature": list(r.signature),
            "classification": r.classification,
            "ideals": [{"dim": i.dim, "signature": list(i.signature), "type": i.label, "real_form": i.real_form} for i in r.ideals],
            "parents": r.parents,
        }
        for r in wb.atlas.records.values()
    ]
    data["notes"] = list(wb.atlas.notes)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(data, fh, ensure_ascii=False, indent=2)
        fh.write("\n")
    print(f"wrote {args.out}")
    return 1 if verify.failures(results) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e6wb", description="Exact checks for sl(3,O) acting on the Albert algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--section", action="append", help=f"run only this section (repeatable): {', '.join(verify.SECTIONS)}")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--inject-fault", metavar="I,J,K", help="testing: perturb the structure constant c_IJ^K first")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="print one table with expected and computed values")
    t.add_argument("which", choices=TABLES)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_tables)

    c = sub.add_parser("chains", help="write the subalgebra inclusion graph as DOT")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_chains)

    d = sub.add_parser("dump", help="write every check and catalog record as JSON")
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_dump)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
