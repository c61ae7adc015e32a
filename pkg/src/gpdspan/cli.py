"""Command-line front end: ``gpdspan verify ...`` and ``gpdspan emit ...``.

Exit codes: 0 when every check matches its expectation, 1 when some check
does not, 2 for bad flags or a window that is too small.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__

SCHEMA_VERSION = 1
ENV_MAX_CARD = "GPDSPAN_MAX_CARD"
DEFAULT_MAX_CARD = 6


class UsageError(Exception):
    pass


def _default_max_card() -> int:
    raw = os.environ.get(ENV_MAX_CARD)
    if raw is None:
        return DEFAULT_MAX_CARD
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_MAX_CARD} must be an integer, got {raw!r}") from None


def _value(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return list(v)
    return v


def _plabel(p) -> str:
    return "[" + ",".join(map(str, p)) + "]"


# table rendering ----------------------------------------------------------

def _envelope(kind: str, config: dict, body: dict) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "tool": "gpdspan", "version": __version__, "kind": kind, "config": config}
    out.update(body)
    return out


def render_matrix(kind, config, rows, cols, entries, fmt) -> str:
    ent = [[_value(v) for v in r] for r in entries]
    if fmt == "json":
        return json.dumps(_envelope(kind, config, {"rows": [list(r) for r in rows], "cols": [list(c) for c in cols],
                                                   "entries": ent}), ensure_ascii=False, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"# schema_version={SCHEMA_VERSION}", kind])
        w.writerow([""] + [_plabel(c) for c in cols])
        for r, row in zip(rows, ent):
            w.writerow([_plabel(r)] + row)
        return buf.getvalue()
    if fmt == "text":
        head = [""] + [_plabel(c) for c in cols]
        body = [[_plabel(r)] + [str(v) for v in row] for r, row in zip(rows, ent)]
        widths = [max(len(line[k]) for line in [head] + body) for k in range(len(head))]
        lines = [f"{kind} (schema_version {SCHEMA_VERSION})"]
        for line in [head] + body:
            lines.append("  ".join(s.rjust(wd) for s, wd in zip(line, widths)))
        return "\n".join(lines) + "\n"
    raise UsageError(f"format {fmt!r} is not available for {kind}")


def render_series(kind, config, label, values, fmt) -> str:
    vals = [_value(v) for v in values]
    if fmt == "json":
        return json.dumps(_envelope(kind, config, {label: vals}), ensure_ascii=False, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"# schema_version={SCHEMA_VERSION}", kind])
        w.writerow(["n", label])
        for n, v in enumerate(vals):
            w.writerow([n, v])
        return buf.getvalue()
    if fmt == "text":
        lines = [f"{kind} (schema_version {SCHEMA_VERSION})"]
        lines += [f"{n:>3}  {v}" for n, v in enumerate(vals)]
        return "\n".join(lines) + "\n"
    raise UsageError(f"format {fmt!r} is not available for {kind}")


def render_lattice(config, levels, edges, fmt) -> str:
    nodes = [p for level in levels for p in level]
    if fmt == "dot":
        lines = [f"// schema_version={SCHEMA_VERSION}", "digraph young {", "  rankdir=BT;"]
        for p in nodes:
            lines.append(f'  "{_plabel(p)}";')
        for a, b in edges:
            lines.append(f'  "{_plabel(a)}" -> "{_plabel(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(_envelope("lattice", config, {"nodes": [list(p) for p in nodes],
                                                         "edges": [[list(a), list(b)] for a, b in edges]}),
                          indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"# schema_version={SCHEMA_VERSION}", "lattice"])
        w.writerow(["from", "to"])
        for a, b in edges:
            w.writerow([_plabel(a), _plabel(b)])
        return buf.getvalue()
    if fmt == "text":
        lines = [f"lattice (schema_version {SCHEMA_VERSION})"]
        for level in levels:
            lines.append("  ".join(_plabel(p) for p in level))
        return "\n".join(lines) + "\n"
    raise UsageError(f"format {fmt!r} is not available for lattice")


def render_checks(kind, config, checks, fmt) -> str:
    status = "pass" if all(c.ok for c in checks) else "fail"
    if fmt == "json":
        items = [{"name": c.name, "kind": c.kind, "lhs": _term_text(c.lhs), "rhs": _term_text(c.rhs),
                  "expectation": c.expectation, "status": c.status, "window": c.window, "witness": c.witness}
                 for c in checks]
        return json.dumps(_envelope(kind, config, {"checks": items, "status": status}),
                          ensure_ascii=False, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"# schema_version={SCHEMA_VERSION}", kind, status])
        w.writerow(["name", "expectation", "status", "window", "witness"])
        for c in checks:
            w.writerow([c.name, c.expectation, c.status, c.window, c.witness])
        return buf.getvalue()
    if fmt == "text":
        width = max((len(c.name) for c in checks), default=0)
        lines = [f"{kind} (schema_version {SCHEMA_VERSION})"]
        for c in checks:
            lines.append(f"{c.name.ljust(width)}  {c.status:<30}  {c.witness}")
        lines.append(f"overall: {status}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"format {fmt!r} is not available for {kind}")


def _term_text(t) -> str | None:
    if t is None:
        return None
    if isinstance(t, str):
        return t
    return repr(t)


# commands -----------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int, object]:
    from .diagrams import run_relation_catalog
    from .sln import run_sln_suite

    if args.max_card < 2:
        raise UsageError(f"window too small: maxCard {args.max_card} < 2")
    if args.suite == "heisenberg":
        checks = run_relation_catalog(args.max_card)
        config = {"suite": "heisenberg", "max_card": args.max_card}
    else:
        if args.rank < 2:
            raise UsageError("rank must be at least 2")
        if args.max_card < 4:
            raise UsageError(f"window too small: maxCard {args.max_card} < required degree 4")
        checks = run_sln_suite(args.rank, args.max_card, args.form)
        config = {"suite": "sln", "rank": args.rank, "max_card": args.max_card, "form": args.form}
    text = render_checks(f"verify-{args.suite}", config, checks, args.format)
    return text, 0 if all(c.ok for c in checks) else 1, None


def cmd_emit(args) -> tuple[str, int, object]:
    from . import fock, young

    fmt, what = args.format, args.what
    if fmt == "dot" and what != "lattice":
        raise UsageError("dot output is only available for the lattice")
    fig = None
    if what in ("block", "number-block", "sym-block"):
        if what == "block":
            i, j = _need(args, "from_"), _need(args, "to")
            if not 0 <= i <= j:
                raise UsageError("need 0 ≤ --from ≤ --to")
            b = fock.path_block(i, j)
            config = {"from": i, "to": j}
            kind = "block"
        elif what == "number-block":
            n = _need(args, "n")
            if n < 0:
                raise UsageError("--n must be nonnegative")
            b = fock.number_block(n)
            config = {"n": n}
            kind = "number-block"
        else:
            k, i = _need(args, "k"), _need(args, "from_")
            if not (0 <= k <= fock.MODULE_MAX and 0 <= i <= fock.MODULE_MAX):
                raise UsageError(f"--k and --from must lie in 0..{fock.MODULE_MAX}")
            b = (fock.antisymmetrized_block if args.anti else fock.symmetrized_block)(k, i)
            config = {"k": k, "from": i, "antisymmetrized": bool(args.anti)}
            kind = "antisym-block" if args.anti else "sym-block"
        text = render_matrix(kind, config, b.rows, b.cols, b.entries, fmt)
        fig = ("block", b.rows, b.cols, b.entries, kind)
    elif what == "lattice":
        m = _need(args, "max")
        if not 0 <= m <= 12:
            raise UsageError("--max must lie in 0..12")
        levels = [young.partitions_of(n) for n in range(m + 1)]
        edges = young.lattice_edges(m)
        text = render_lattice({"max": m}, levels, edges, fmt)
        fig = ("lattice", levels, edges)
    elif what == "gf":
        terms = _need(args, "terms")
        stuff = {"identity": fock.identity_stuff_type, "pointed": fock.pointed_set_stuff_type,
                 "empty": fock.empty_stuff_type}[args.stuff]
        psi = stuff(args.max_card)
        if args.act:
            from .spans import annihilation_span, creation_span

            op = creation_span(args.max_card) if args.act == "Ad" else annihilation_span(args.max_card)
            psi = fock.act_on_stuff_type(op, psi)
        if terms < 1:
            raise UsageError("--terms must be positive")
        try:
            coeffs = fock.stuff_type_gf(psi, terms - 1)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        config = {"stuff": args.stuff, "act": args.act, "terms": terms, "max_card": args.max_card}
        text = render_series("gf", config, "coefficients", coeffs, fmt)
        fig = ("series", coeffs, f"{args.stuff} stuff type", "coefficient")
    else:
        k = _need(args, "k")
        if k < 0:
            raise UsageError("--k must be nonnegative")
        try:
            vals = [fock.vacuum_moment(j, args.max_card) for j in range(k + 1)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        text = render_series("moments", {"k": k, "max_card": args.max_card}, "moments", vals, fmt)
        fig = ("series", vals, "vacuum moments", "moment")
    return text, 0, fig


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name.rstrip('_').replace('_', '-')} is required for emit {args.what}")
    return v


def _write_figure(fig, path: str) -> None:
    from . import plotting

    if fig[0] == "block":
        plotting.block_figure(fig[1], fig[2], fig[3], path, fig[4])
    elif fig[0] == "lattice":
        plotting.lattice_figure(fig[1], fig[2], path)
    else:
        plotting.series_figure(fig[1], path, fig[2], fig[3])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gpdspan",
        description="Spans of groupoids for the Heisenberg and sl_n calculi.",
        epilog=f"The default --max-card is {DEFAULT_MAX_CARD}; set {ENV_MAX_CARD} to change it. "
               "Exit codes: 0 pass, 1 check failure, 2 usage error.",
    )
    p.add_argument("--version", action="version", version=f"gpdspan {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats):
        sp.add_argument("--max-card", type=int, default=None, help=f"truncation bound (env {ENV_MAX_CARD})")
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--out", default=None, help="write to this file instead of standard output")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["heisenberg", "sln"])
    v.add_argument("--suite", dest="suite_flag", choices=["heisenberg", "sln"], help=argparse.SUPPRESS)
    v.add_argument("--rank", type=int, default=2, help="n for sl_n (default 2)")
    v.add_argument("--form", choices=["printed", "corrected"], default="printed",
                   help="which shape of the EN/FN relations to check")
    common(v, ["json", "csv", "text"])

    e = sub.add_parser("emit", help="emit a table")
    e.add_argument("what", choices=["block", "number-block", "sym-block", "lattice", "gf", "moments"])
    e.add_argument("--from", dest="from_", type=int)
    e.add_argument("--to", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--n", type=int)
    e.add_argument("--max", type=int)
    e.add_argument("--terms", type=int)
    e.add_argument("--anti", action="store_true", help="antisymmetrized instead of symmetrized block")
    e.add_argument("--stuff", choices=["identity", "pointed", "empty"], default="identity")
    e.add_argument("--act", choices=["A", "Ad"], default=None, help="apply A or A† to the stuff type first")
    e.add_argument("--figure", default=None, help="also render a matplotlib figure to this path")
    common(e, ["json", "csv", "dot", "text"])
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.max_card is None:
            args.max_card = _default_max_card()
        if args.command == "verify":
            if args.suite_flag and args.suite_flag != args.suite:
                raise UsageError("conflicting suite selections")
            text, code, fig = cmd_verify(args)
        else:
            text, code, fig = cmd_emit(args)
            if args.figure and fig is not None:
                _write_figure(fig, args.figure)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"gpdspan: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
