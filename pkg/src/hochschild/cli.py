"""Command line front end.

Exit codes: 0 success, 1 mismatch or failed check, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import Algebra, check_associativity, chi_invariant, is_commutative, is_nilpotent
from .catalog import CatalogError, get_entry, instantiate, list_entries
from .cohomology import MAX_DEGREE, DegreeError, cohomology
from .fileio import AlgebraFileError, dump_algebra, load_algebra_file
from .report import FLAGGED, MISMATCH, verify_catalog
from .scalar import ScalarParseError, format_scalar, parse_scalar

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(target: str, alpha: str | None) -> Algebra:
    alpha_val = None
    if alpha is not None:
        try:
            alpha_val = parse_scalar(alpha)
        except ScalarParseError as exc:
            raise UsageError(f"--alpha: {exc}") from exc
    try:
        get_entry(target)
    except CatalogError:
        if os.path.exists(target):
            if alpha_val is not None:
                raise UsageError("--alpha only applies to catalog entries")
            try:
                return load_algebra_file(target)
            except AlgebraFileError as exc:
                raise UsageError(f"{target}: {exc}") from exc
        raise UsageError(f"{target!r} is neither a catalog entry nor a file")
    try:
        return instantiate(target, alpha_val)
    except CatalogError as exc:
        raise UsageError(str(exc)) from exc


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _fmt_products(A: Algebra) -> list[str]:
    lines = []
    lab = A.basis_labels
    for (i, j), terms in sorted(A.product_table().items()):
        rhs = []
        for k, v in sorted(terms.items()):
            s = format_scalar(v)
            if s == "1":
                t = lab[k - 1]
            elif s == "-1":
                t = "-" + lab[k - 1]
            elif v.is_real():
                t = f"{s}{lab[k - 1]}"
            else:
                t = f"({s}){lab[k - 1]}"
            rhs.append(t)
        expr = " + ".join(rhs).replace("+ -", "- ")
        lines.append(f"  {lab[i - 1]}{lab[j - 1]} = {expr}")
    return lines


def cmd_list(args) -> int:
    entries = list_entries()
    data = [
        {"name": e.name, "chi": list(e.chi_family), "param": e.param_description()}
        for e in entries
    ]
    text = "\n".join(f"{d['name']:<10} chi={tuple(d['chi'])}  param: {d['param']}" for d in data)
    _emit({"entries": data}, args.format, text)
    return EXIT_OK


def cmd_show(args) -> int:
    A = _resolve(args.target, args.alpha)
    params = {k: format_scalar(v) for k, v in A.params.items()}
    lines = [f"{A.name} (dim {A.dim})"]
    if params:
        lines.append("  params: " + ", ".join(f"{k}={v}" for k, v in params.items()))
    lines += _fmt_products(A) or ["  (all products zero)"]
    obj = {
        "name": A.name,
        "dim": A.dim,
        "params": params,
        "products": [
            {"i": i, "j": j, "terms": {str(k): format_scalar(v) for k, v in t.items()}}
            for (i, j), t in sorted(A.product_table().items())
        ],
    }
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_check(args) -> int:
    A = _resolve(args.target, args.alpha)
    rep = check_associativity(A)
    chi = chi_invariant(A)
    nil = is_nilpotent(A)
    comm = is_commutative(A)
    obj = {
        "name": A.name,
        "associative": rep.ok,
        "violations": len(rep.violations),
        "nilpotent": nil,
        "chi": list(chi),
        "commutative": comm,
    }
    lines = [f"{A.name}:"]
    if rep.ok:
        lines.append("  associative: yes")
    else:
        i, j, k, left, right = rep.first()
        lab = A.basis_labels
        fmt = lambda v: "(" + ", ".join(format_scalar(x) for x in v) + ")"
        lines.append(f"  associative: NO ({len(rep.violations)} violating triples)")
        lines.append(
            f"  witness: ({lab[i-1]}{lab[j-1]}){lab[k-1]} = {fmt(left)} but "
            f"{lab[i-1]}({lab[j-1]}{lab[k-1]}) = {fmt(right)}"
        )
        obj["witness"] = {
            "i": i, "j": j, "k": k,
            "left": [format_scalar(x) for x in left],
            "right": [format_scalar(x) for x in right],
        }
    lines.append(f"  nilpotent: {'yes' if nil else 'no'}")
    lines.append(f"  chi: {chi}")
    lines.append(f"  commutative: {'yes' if comm else 'no'}")
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def _vec_strings(v) -> list[str]:
    return [format_scalar(x) for x in v]


def _shape_cochain(vec, degree: int, dim: int):
    """Degree-1 cochains as rho matrices (column j = image of e_j); others as flat vectors."""
    if degree == 1:
        return [_vec_strings(vec[k * dim : (k + 1) * dim]) for k in range(dim)]
    return _vec_strings(vec)


def _matrix_text(rows: list[list[str]]) -> list[str]:
    width = max(len(x) for r in rows for x in r)
    return ["    [ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in rows]


def _basis_text(title: str, vectors, degree: int, dim: int) -> list[str]:
    lines = [f"  {title}:"]
    if not vectors:
        lines.append("    (none)")
    for idx, v in enumerate(vectors):
        shaped = _shape_cochain(v, degree, dim)
        if degree == 1:
            lines.append(f"   #{idx + 1}")
            lines += _matrix_text(shaped)
        else:
            lines.append(f"   #{idx + 1} (" + ", ".join(shaped) + ")")
    return lines


def cmd_cohomology(args) -> int:
    A = _resolve(args.target, args.alpha)
    n = args.degree
    try:
        res = cohomology(A, n, max_degree=args.max_degree)
    except DegreeError as exc:
        raise UsageError(str(exc)) from exc
    obj = {
        "name": A.name,
        "alpha": format_scalar(A.params["alpha"]) if "alpha" in A.params else None,
        "degree": n,
        "dim_Z": res.z_dim,
        "dim_B": res.b_dim,
        "dim_H": res.h_dim,
    }
    lines = [
        f"{A.name} degree {n}:",
        f"  dim Z^{n} = {res.z_dim}",
        f"  dim B^{n} = {res.b_dim}",
        f"  dim H^{n} = {res.h_dim}",
    ]
    if args.basis:
        reps = [c.coords for c in res.coset_reps]
        obj["Z_basis"] = [_shape_cochain(v, n, A.dim) for v in res.z_basis.basis]
        obj["B_basis"] = [_shape_cochain(v, n, A.dim) for v in res.b_basis.basis]
        obj["coset_reps"] = [_shape_cochain(v, n, A.dim) for v in reps]
        lines += _basis_text(f"Z^{n} basis", res.z_basis.basis, n, A.dim)
        lines += _basis_text(f"B^{n} basis", res.b_basis.basis, n, A.dim)
        lines += _basis_text(f"H^{n} coset representatives", reps, n, A.dim)
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_catalog()
    obj = report.to_json()
    lines = []
    header = f"{'entry':<9} {'alpha':<6} {'chi':<16} {'H0':>7} {'Z1':>7} {'B1':>7} {'H1':>7}  status"
    lines.append(header)
    for r in report.rows:
        c, e = r.computed, r.expected
        cell = lambda key: f"{c[key]}/{e[key]}"
        alpha = "-" if r.alpha is None else format_scalar(r.alpha)
        fs = r.field_status()
        status = r.status
        for verdict, tag in ((MISMATCH, "differs"), (FLAGGED, "flagged")):
            keys = [k for k, v in fs.items() if v == verdict]
            if keys:
                status += f" {tag}: " + ", ".join(keys) + ";"
        status = status.rstrip(";")
        lines.append(
            f"{r.name:<9} {alpha:<6} {str(tuple(c['chi'])):<16} {cell('dim_h0'):>7} "
            f"{cell('dim_z1'):>7} {cell('dim_b1'):>7} {cell('dim_h1'):>7}  {status}"
        )
    counts = report.counts()
    lo0, hi0 = report.h0_range()
    lo1, hi1 = report.h1_range()
    lines.append("(cells are computed/published)")
    lines.append(
        f"rows={len(report.rows)} match={counts['match']} mismatch={counts['mismatch']} "
        f"flagged={counts['flagged']}  H0 dims {lo0}..{hi0}  H1 dims {lo1}..{hi1}"
    )
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_export(args) -> int:
    try:
        get_entry(args.name)
    except CatalogError as exc:
        raise UsageError(str(exc)) from exc
    A = _resolve(args.name, args.alpha)
    data = dump_algebra(A)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hochschild",
        description="Hochschild cohomology of finite-dimensional associative algebras.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, target=True):
        if target:
            sp.add_argument("target", help="catalog name (e.g. lambda_1) or algebra JSON file")
            sp.add_argument("--alpha", help="parameter value, e.g. 2 or -i")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("list", help="list catalog entries")
    common(sp, target=False)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("show", help="print the products of an algebra")
    common(sp)
    sp.set_defaults(func=cmd_show)

    sp = sub.add_parser("check", help="associativity, nilpotency, chi, commutativity")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("cohomology", help="dimensions of Z^n, B^n, H^n")
    common(sp)
    sp.add_argument("--degree", type=int, default=1)
    sp.add_argument("--max-degree", type=int, default=MAX_DEGREE, help=argparse.SUPPRESS)
    sp.add_argument("--basis", action="store_true", help="also print bases and coset representatives")
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("verify-paper", help="recompute the catalog and compare with published tables")
    common(sp, target=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="write a catalog entry as an algebra JSON file")
    sp.add_argument("name")
    sp.add_argument("--alpha")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
