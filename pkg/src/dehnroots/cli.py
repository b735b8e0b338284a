"""Command-line front end.

Subcommands expose the enumeration, existence, maximal-degree, primary-root
and homology engines plus the claim-verification sweeps.  All output is
deterministic: identical invocations produce byte-identical text.

The ``--genus`` flag always means the data-set genus parameter: g for type
A, g' for type B.  Alternatively ``--surface-genus`` accepts the genus of
the ambient surface (g + 2 for type A, 2g' + 2 for type B) and converts.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import homology
from .datasets import DataSet, DataSetType, to_json_dict
from .enumeration import GenusQuery, enumerate_classes, enumerate_datasets, root_exists_closed_form
from .errors import DehnrootsError, Unconstructible
from .maxdegree import (
    MaxDegreeResult,
    census_type_b,
    exceptional_table,
    max_degree_bruteforce,
    max_degree_closed_form,
    results_agree,
)
from .primary import (
    PrimaryQuery,
    construction_dataset,
    primary_exists_bruteforce,
    primary_exists_closed_form,
)
from .verify import SUITE_NAMES, run_suites

FORMATS = ("plain", "json", "csv", "markdown")


def tuple_str(ds: DataSet | None) -> str:
    if ds is None:
        return "-"
    cones = ",".join(f"({c.c},{c.order})" for c in ds.cones)
    return f"({ds.n},{ds.g0},({ds.a},{ds.b});{cones})"


def emit(rows: list[dict], columns: list[str], fmt: str) -> str:
    """Render rows in the requested format with a stable column order."""
    if fmt == "json":
        return json.dumps(rows, indent=2)
    table = [[str(row.get(c, "")) for c in columns] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(table)
        return buf.getvalue().rstrip("\n")
    if fmt == "markdown":
        lines = ["| " + " | ".join(columns) + " |",
                 "|" + "|".join(" --- " for _ in columns) + "|"]
        lines += ["| " + " | ".join(r) + " |" for r in table]
        return "\n".join(lines)
    widths = [max(len(c), *(len(r[i]) for r in table)) if table else len(c)
              for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines)


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="plain")


def _add_genus(p: argparse.ArgumentParser, required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--genus", type=int, help="data-set genus: g (type A) or g' (type B)")
    group.add_argument("--surface-genus", type=int,
                       help="genus of the ambient surface (g + 2 or 2g' + 2)")


def _resolve_genus(args) -> int | None:
    if args.surface_genus is None:
        return args.genus
    s = args.surface_genus
    if args.type is DataSetType.A:
        if s < 2:
            raise DehnrootsError(f"surface genus must be >= 2, got {s}")
        return s - 2
    if s < 2 or s % 2 != 0:
        raise DehnrootsError(f"type B needs an even surface genus >= 2, got {s}")
    return (s - 2) // 2


def _dataset_rows(datasets, fmt):
    if fmt == "json":
        return [to_json_dict(d) for d in datasets]
    return [
        {"type": d.type.value, "n": d.n, "g0": d.g0, "a": d.a, "b": d.b,
         "cones": ",".join(f"({c.c},{c.order})" for c in d.cones)}
        for d in datasets
    ]


def _result_row(method: str, res: MaxDegreeResult, fmt: str) -> dict:
    row = {
        "method": method,
        "kind": res.kind,
        "n": "" if res.n is None else res.n,
        "lower": "" if res.lower is None else res.lower,
        "upper": "" if res.upper is None else res.upper,
        "case": res.case_id,
    }
    if fmt == "json":
        row["witness"] = None if res.witness is None else to_json_dict(res.witness)
        row["oracle_n"] = res.oracle_n
    else:
        row["witness"] = tuple_str(res.witness)
    return row


def cmd_enumerate(args) -> int:
    genus = _resolve_genus(args)
    q = GenusQuery(args.type, genus, degree_filter=args.degree)
    datasets = enumerate_classes(q) if args.classes else list(enumerate_datasets(q))
    columns = ["type", "n", "g0", "a", "b", "cones"]
    print(emit(_dataset_rows(datasets, args.format), columns, args.format))
    return 0


def cmd_exists(args) -> int:
    genus = _resolve_genus(args)
    exists = root_exists_closed_form(args.type, genus)
    clause = "g = 3 or g >= 5" if args.type is DataSetType.A else "g' >= 2"
    rows = [{"type": args.type.value, "genus": genus,
             "exists": exists if args.format == "json" else str(exists).lower(),
             "criterion": clause}]
    print(emit(rows, ["type", "genus", "exists", "criterion"], args.format))
    return 0


def cmd_maxdeg(args) -> int:
    genus = _resolve_genus(args)
    rows = []
    code = 0
    columns = ["method", "kind", "n", "lower", "upper", "case", "witness"]
    if args.method in ("closed", "both"):
        rows.append(_result_row("closed", max_degree_closed_form(args.type, genus), args.format))
    if args.method in ("brute", "both"):
        rows.append(_result_row("brute", max_degree_bruteforce(args.type, genus), args.format))
    if args.method == "both":
        closed = max_degree_closed_form(args.type, genus)
        brute = max_degree_bruteforce(args.type, genus)
        agree = results_agree(closed, brute)
        rows.append({"method": "agreement", "kind": "agree" if agree else "DISAGREE",
                     "n": "", "lower": "", "upper": "", "case": "",
                     "witness": "" if args.format != "json" else None})
        if not agree:
            code = 1
    print(emit(rows, columns, args.format))
    return code


def cmd_table(args) -> int:
    if args.table_kind == "exceptional":
        rows = []
        for g, res in exceptional_table(args.limit, jobs=args.jobs):
            row = {"g": g, "N": res.n, "case_id": res.case_id}
            row["witness"] = (to_json_dict(res.witness) if args.format == "json"
                              else tuple_str(res.witness))
            rows.append(row)
        print(emit(rows, ["g", "N", "case_id", "witness"], args.format))
        return 0
    census = census_type_b(args.limit, jobs=args.jobs)
    values = [
        ("limit", census.limit),
        ("case11_count", census.case11_count),
        ("case11_N_eq_g", census.case11_n_eq_g),
        ("case12_count", census.case12_count),
        ("case12_N_eq_g_plus_1", ";".join(str(g) for g in census.case12_n_eq_g_plus_1)),
        ("case12_remark_max", census.case12_remark_max_count),
    ]
    if args.format == "json":
        print(json.dumps(dict(values), indent=2))
    else:
        print(emit([{"key": k, "value": v} for k, v in values],
                   ["key", "value"], args.format))
    return 0


def cmd_primary(args) -> int:
    if args.construct:
        if args.g0 is None or args.m is None:
            raise DehnrootsError("--construct requires --g0 and --m")
        try:
            ds = construction_dataset(args.type, args.degree, args.g0, args.m)
        except Unconstructible as exc:
            print(f"unconstructible: {exc}")
            return 0
        requested = _resolve_genus(args)
        if requested is not None:
            from .datasets import genus as ds_genus

            factor = 1 if args.type is DataSetType.A else 2
            if ds_genus(ds) != factor * requested:
                raise DehnrootsError(
                    f"--genus {requested} does not match the (g0, m) shape"
                )
        print(emit(_dataset_rows([ds], args.format),
                   ["type", "n", "g0", "a", "b", "cones"], args.format))
        return 0
    genus = _resolve_genus(args)
    if genus is None:
        raise DehnrootsError("existence queries need --genus or --surface-genus")
    q = PrimaryQuery(args.type, args.degree, genus)
    closed = primary_exists_closed_form(q)
    brute = primary_exists_bruteforce(q)
    rows = [{
        "type": args.type.value, "degree": args.degree, "genus": genus,
        "closed_form": closed if args.format == "json" else str(closed).lower(),
        "brute_force": brute if args.format == "json" else str(brute).lower(),
        "agree": (closed == brute) if args.format == "json" else str(closed == brute).lower(),
    }]
    print(emit(rows, ["type", "degree", "genus", "closed_form", "brute_force", "agree"],
               args.format))
    return 0 if closed == brute else 1


def _sqrt_verdicts(g: int, target: str, fmt: str) -> list[dict]:
    jobs = []
    if target in ("a1", "both"):
        jobs.append(("psi-a1", homology.psi_twist_a1(g)))
    if target in ("b", "both") and g % 2 == 0:
        jobs.append(("psi-b", homology.psi_twist_b(g)))
    elif target == "b":
        raise DehnrootsError(f"psi-b needs an even genus, got {g}")
    rows = []
    for name, matrix in jobs:
        root = homology.find_square_root(matrix)
        if root is None:
            rows.append({"target": name, "genus": g, "found": False,
                         "root": None if fmt == "json" else
                         "no square root found (exhaustive)"})
        else:
            rows.append({"target": name, "genus": g, "found": True,
                         "root": homology.to_json_strings(root) if fmt == "json"
                         else "/".join(root.row_strings())})
    return rows


def cmd_homology(args) -> int:
    g = args.genus
    if args.op == "sqrt":
        rows = _sqrt_verdicts(g, args.target, args.format)
        print(emit(rows, ["target", "genus", "found", "root"], args.format))
        return 0
    matrix = homology.psi_twist_a1(g) if args.op == "psi-a1" else homology.psi_twist_b(g)
    if args.format == "json":
        print(json.dumps(homology.to_json_strings(matrix), indent=2))
    else:
        rows = [{"row": r} for r in matrix.row_strings()]
        if args.format == "plain":
            print(str(matrix))
        else:
            print(emit(rows, ["row"], args.format))
    return 0


def cmd_verify(args) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    claims = run_suites(names, args.limit)
    rows = [{"suite": c.suite, "claim": c.name,
             "status": "PASS" if c.ok else "FAIL", "detail": c.detail}
            for c in claims]
    print(emit(rows, ["suite", "claim", "status", "detail"], args.format))
    failures = sum(not c.ok for c in claims)
    if args.format == "plain":
        print(f"{len(claims) - failures}/{len(claims)} claims passed")
    return 1 if failures else 0


def _type_arg(value: str) -> DataSetType:
    try:
        return DataSetType(value.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"type must be A or B, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dehnroots",
        description="Roots of Dehn twists about nonseparating circles on "
                    "nonorientable surfaces, via arithmetic data sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list data sets or equivalence classes")
    p.add_argument("--type", type=_type_arg, required=True)
    _add_genus(p)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--classes", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("exists", help="existence of a nontrivial root")
    p.add_argument("--type", type=_type_arg, required=True)
    _add_genus(p)
    _add_format(p)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("maxdeg", help="maximal root degree")
    p.add_argument("--type", type=_type_arg, required=True)
    _add_genus(p)
    p.add_argument("--method", choices=("brute", "closed", "both"), default="both")
    _add_format(p)
    p.set_defaults(func=cmd_maxdeg)

    p = sub.add_parser("table", help="census tables")
    tsub = p.add_subparsers(dest="table_kind", required=True)
    for kind, descr in (("exceptional", "type A genera with N < g/4"),
                        ("census-b", "type B case 11/12 census")):
        t = tsub.add_parser(kind, help=descr)
        t.add_argument("--limit", type=int, required=True)
        t.add_argument("--jobs", type=int, default=1)
        _add_format(t)
        t.set_defaults(func=cmd_table, table_kind=kind)

    p = sub.add_parser("primary", help="primary-root existence or construction")
    p.add_argument("--type", type=_type_arg, required=True)
    p.add_argument("--degree", type=int, required=True)
    _add_genus(p, required=False)
    p.add_argument("--construct", action="store_true")
    p.add_argument("--g0", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_primary)

    p = sub.add_parser("homology", help="mod-2 twist matrices and square roots")
    p.add_argument("--op", choices=("psi-a1", "psi-b", "sqrt"), required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--target", choices=("a1", "b", "both"), default="both",
                   help="square-root target(s); 'both' checks psi-b only for even genus")
    _add_format(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", help="run claim-verification suites")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--limit", type=int, default=100)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except DehnrootsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
