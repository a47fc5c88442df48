"""Command line interface.

Commands: decompose, table, concepts, shapes, graph, involutions, verify.
Global flags: --format (text|json|csv|dot), --allow-long, --cache-dir, --jobs.
Exit codes: 0 ok, 1 verification failure, 2 user error, 3 refused
long-running job.

Shape catalogs are cached (pickle) under the directory named by --cache-dir
or the COXNORM_CACHE_DIR environment variable; the cache is versioned and
silently rebuilt on any mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import pickle
import sys

from .labels import parse_label
from .rootsys import build_root_system

CACHE_VERSION = 1
CACHE_ENV = "COXNORM_CACHE_DIR"
E8_ORDER = 696729600


class UserError(Exception):
    pass


def _cache_path(cache_dir, label):
    name = str(label).lower().replace("(", "_").replace(")", "")
    return os.path.join(cache_dir, f"catalog-v{CACHE_VERSION}-{name}.pickle")


def _get_catalog(rs, cache_dir):
    from .parabolic import ShapeCatalog, Shape, _catalogs, shape_catalog
    if rs.label in _catalogs:
        return _catalogs[rs.label]
    if cache_dir:
        path = _cache_path(cache_dir, rs.label)
        if os.path.exists(path):
            try:
                with open(path, "rb") as fh:
                    payload = pickle.load(fh)
                if payload.get("version") == CACHE_VERSION:
                    cat = ShapeCatalog.__new__(ShapeCatalog)
                    cat.rs = rs
                    cat.shapes = payload["shapes"]
                    cat._by_rootset = {tuple(sorted(s.roots)): s.index
                                       for s in cat.shapes}
                    cat._class_cache = dict(cat._by_rootset)
                    _catalogs[rs.label] = cat
                    return cat
            except Exception:
                pass  # stale or unreadable cache: rebuild
    cat = shape_catalog(rs)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        with open(_cache_path(cache_dir, rs.label), "wb") as fh:
            pickle.dump({"version": CACHE_VERSION, "shapes": cat.shapes}, fh)
    return cat


def _build(args):
    try:
        label = parse_label(args.group)
    except ValueError as exc:
        raise UserError(str(exc))
    rs = build_root_system(label)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    catalog = _get_catalog(rs, cache_dir)
    return rs, catalog


def _require_short(rs, args, what):
    if rs.group_order >= E8_ORDER and not args.allow_long:
        raise SystemExit(_fail(
            f"{what} for {rs.label} is a long-running job; rerun with --allow-long", 3))


def _fail(msg, code):
    print(f"error: {msg}", file=sys.stderr)
    return code


def _emit_rows(rows, header, fmt):
    if fmt == "json":
        print(json.dumps(rows, indent=2, ensure_ascii=False))
    elif fmt == "csv":
        import csv
        w = csv.writer(sys.stdout)
        w.writerow(header)
        for r in rows:
            w.writerow([r[h] for h in header])
    else:
        widths = [max(len(str(r[h])) for r in rows + [dict(zip(header, header))])
                  for h in header]
        line = "  ".join(h.ljust(w) for h, w in zip(header, widths))
        print(line)
        print("-" * len(line))
        for r in rows:
            print("  ".join(str(r[h]).ljust(w) for h, w in zip(header, widths)))


def cmd_shapes(args):
    rs, catalog = _build(args)
    rows = [{"index": s.index, "label": s.label, "rank": s.rank, "order": s.order,
             "representative": ",".join(f"s{i+1}" for i in s.rep_subset) or "-"}
            for s in catalog]
    _emit_rows(rows, ["index", "label", "rank", "order", "representative"], args.format)
    return 0


def _select_shape(catalog, rs, selector):
    selector = selector.strip()
    if selector.startswith("s") and "," in selector or (
            selector.startswith("s") and selector[1:].isdigit()):
        try:
            subset = tuple(sorted(int(tok.strip()[1:]) - 1
                                  for tok in selector.split(",")))
        except ValueError:
            raise KeyError(selector)
        if any(i < 0 or i >= rs.n for i in subset):
            raise KeyError(selector)
        from .parabolic import ReflectionSubgroup
        return catalog[catalog.class_of_roots(
            ReflectionSubgroup.standard(rs, subset).roots)]
    return catalog.by_selector(selector)


def cmd_decompose(args):
    rs, catalog = _build(args)
    from .normalizer import decompose, decomposition_row
    try:
        shape = _select_shape(catalog, rs, args.parabolic)
    except KeyError:
        print(f"error: unknown parabolic selector {args.parabolic!r} for {rs.label}",
              file=sys.stderr)
        print("known shapes:", file=sys.stderr)
        for s in catalog:
            print(f"  {s.index:3d}  {s.label}", file=sys.stderr)
        return 2
    dec = decompose(rs, shape)
    if args.format == "json":
        print(json.dumps(dec.to_json(), indent=2, ensure_ascii=False))
    else:
        row = decomposition_row(dec)
        print(f"group            {rs.label}")
        print(f"shape            {row['index']}  {row['label']}"
              + ("  (involution centralizer)" if row["asterisk"] else ""))
        print(f"|N|              {dec.n_order}")
        print(f"Q                shape {row['q_index']}  ({catalog[row['q_index']].label})")
        print(f"|D|              {row['d_order']}")
        print(f"A                {row['a'] or '1'}")
        print(f"B                {row['b'] or '1'}")
        print(f"C                {row['c'] or '1'}  (order {len(dec.C)})")
        print(f"closure of P     shape {dec.closure_index}  ({catalog[dec.closure_index].label})")
        print(f"closure of PQ    {row['closure']}")
        print(f"action on X_perp   {row['x_perp'] or '-'}")
        print(f"action on X^Y      {row['x_cap_y'] or '-'}")
        print(f"action on Y_perp   {row['y_perp'] or '-'}")
    return 0


TABLE_HEADER = ["index", "asterisk", "label", "q_index", "d_order", "closure",
                "a", "b", "c", "x_perp", "x_cap_y", "y_perp"]


def cmd_table(args):
    rs, catalog = _build(args)
    _require_short(rs, args, "the full table")
    from .normalizer import compute_table
    rows = compute_table(rs, jobs=args.jobs)
    out = []
    for r in rows:
        r = dict(r)
        r["asterisk"] = "*" if r["asterisk"] else ""
        out.append(r)
    _emit_rows(out, TABLE_HEADER, args.format)
    return 0


def cmd_concepts(args):
    rs, catalog = _build(args)
    from .galois import parabolic_concepts
    rows = [{"left_index": i, "left": catalog[i].label,
             "right_index": j, "right": catalog[j].label}
            for i, j in parabolic_concepts(rs)]
    _emit_rows(rows, ["left_index", "left", "right_index", "right"], args.format)
    return 0


def cmd_graph(args):
    rs, catalog = _build(args)
    from .galois import graph_to_dot, shape_closure_graph
    graph = shape_closure_graph(rs)
    if args.format == "dot":
        print(graph_to_dot(graph))
    else:
        print(json.dumps(graph, indent=2, ensure_ascii=False))
    return 0


def cmd_involutions(args):
    rs, catalog = _build(args)
    from .involutions import involution_class_representatives
    rows = [{"shape": rec.shape_index, "label": catalog[rec.shape_index].label,
             "degree": rec.degree, "centralizer_order": rec.centralizer_order}
            for rec in involution_class_representatives(rs)]
    _emit_rows(rows, ["shape", "label", "degree", "centralizer_order"], args.format)
    return 0


def cmd_verify(args):
    rs, catalog = _build(args)
    from .verify import SUITES
    if args.suite not in SUITES:
        return _fail(f"unknown suite {args.suite!r}; choose from "
                     + ", ".join(sorted(SUITES)), 2)
    if args.suite == "fixtures":
        _require_short(rs, args, "the fixture diff")
        report = SUITES[args.suite](rs, jobs=args.jobs)
    else:
        report = SUITES[args.suite](rs)
    print(json.dumps(report, indent=2, ensure_ascii=False, default=str))
    return 0 if report["ok"] else 1


def _add_global_flags(p):
    p.add_argument("--format", choices=["text", "json", "csv", "dot"],
                   default=argparse.SUPPRESS)
    p.add_argument("--allow-long", action="store_true", default=argparse.SUPPRESS,
                   help="permit long-running jobs (full tables at order ~7e8)")
    p.add_argument("--cache-dir", default=argparse.SUPPRESS,
                   help=f"catalog cache directory (default: ${CACHE_ENV})")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                   help="worker processes for table commands")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="coxnorm",
        description="Exact normalizer decompositions of parabolic subgroups"
                    " of finite Coxeter groups")
    _add_global_flags(parser)
    parser.set_defaults(format="text", allow_long=False, cache_dir=None, jobs=1)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("group")
        _add_global_flags(p)
        p.set_defaults(func=func)
        return p

    add("shapes", cmd_shapes, "list the shape catalog")
    p = add("decompose", cmd_decompose, "decompose one parabolic normalizer")
    p.add_argument("parabolic",
                   help="shape index, label, partition like [2222], or s1,s3,s5")
    add("table", cmd_table, "full decomposition table of a group")
    add("concepts", cmd_concepts, "parabolic concepts up to conjugacy")
    add("graph", cmd_graph, "shape poset with closure edges")
    add("involutions", cmd_involutions, "involution classes and centralizers")
    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", default="fixtures")

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UserError as exc:
        return _fail(str(exc), 2)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
