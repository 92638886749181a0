"""Command-line front end: build tables, run reports, verify theorems."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import algebra, characters, labels as lb, radical, typea, verify
from .coxeter import ResourceLimitError

ENV_CACHE_DIR = "DESCENTD_CACHE_DIR"


def default_cache_dir():
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "descentd"


def cache_path(cache_dir, gtype, n):
    return Path(cache_dir) / f"table-{gtype}{n}-v{algebra.SCHEMA_VERSION}.json"


def load_or_build_table(gtype, n, cache_dir, threads=1, max_n=None):
    path = cache_path(cache_dir, gtype, n)
    if path.exists():
        try:
            return algebra.StructureTable.from_json_bytes(path.read_bytes()), path, True
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            print(f"warning: rebuilding corrupt cache {path}: {exc}", file=sys.stderr)
    table = algebra.build_table(n, gtype, threads=threads, max_n=max_n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(table.to_json_bytes())
    return table, path, False


def _emit(payload, out, fmt="json"):
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = payload  # pre-rendered CSV
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _element_dump(elem):
    return {lb.format_label(k): c for k, c in elem.by_label().items()}


def cmd_table(args):
    table, path, cached = load_or_build_table(
        args.type, args.n, args.cache_dir, threads=args.threads, max_n=args.max_n_override
    )
    nnz = sum(len(row) for row in table.constants.values())
    summary = {
        "file": str(path),
        "group_type": table.group_type,
        "n": table.n,
        "basis_size": table.dim,
        "nonzero_constants": nnz,
        "from_cache": cached,
    }
    if args.out:
        Path(args.out).write_bytes(table.to_json_bytes())
    sys.stdout.write(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    return 0


def cmd_multiply(args):
    table, _, _ = load_or_build_table(
        args.type, args.n, args.cache_dir, threads=args.threads, max_n=args.max_n_override
    )
    a = lb.parse_label(args.a, args.n, args.type)
    b = lb.parse_label(args.b, args.n, args.type)
    prod = table.basis_element(a, args.p) * table.basis_element(b, args.p)
    payload = {
        "group_type": args.type,
        "n": args.n,
        "p": args.p,
        "a": lb.format_label(a),
        "b": lb.format_label(b),
        "product": _element_dump(prod),
    }
    _emit(payload, args.out)
    return 0


def cmd_radical(args):
    if args.type != "D":
        print("error: the radical command is defined for type D", file=sys.stderr)
        return 2
    table, _, _ = load_or_build_table(
        "D", args.n, args.cache_dir, threads=args.threads, max_n=args.max_n_override
    )
    if args.p is None:
        rb = radical.radical_char0(table)
        matches = None
    else:
        rb = radical.radical_mod_p(table, args.p)
        matches = radical.spans_equal(rb, radical.radical_mod_p_via_ajjj(table, args.p))
    report = radical.verify_ideal(rb)
    payload = {
        "n": args.n,
        "p": args.p,
        "spanning_set": [_element_dump(e) for e in rb.spanning],
        "is_ideal": report.is_ideal,
        "nilpotency_index": report.nilpotency_index,
        "quotient_dim": report.quotient_dim,
        "matches_aJJJ_criterion": matches,
    }
    _emit(payload, args.out)
    return 0


def cmd_characters(args):
    if args.type != "D":
        print("error: the characters command is defined for type D", file=sys.stderr)
        return 2
    matrix = characters.character_matrix(args.n, max_n=args.max_n_override)
    reps = [lb.format_label(k) for k in matrix.representatives]
    if args.p is None:
        entries = [list(row) for row in matrix.entries]
    else:
        entries = [[v % args.p for v in row] for row in matrix.entries]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow([""] + reps)
        for name, row in zip(reps, entries):
            writer.writerow([name] + row)
        _emit(buf.getvalue(), args.out, fmt="csv")
    else:
        payload = {"n": args.n, "p": args.p, "representatives": reps, "entries": entries}
        if args.p is not None:
            cols = characters.irreducibles_mod_p(matrix, args.p)
            payload["distinct_columns"] = len(cols)
        _emit(payload, args.out)
    return 0


def cmd_verify(args):
    results = verify.run_verify(
        args.type, args.n, p=args.p, threads=args.threads, max_n=args.max_n_override
    )
    ok = True
    for r in results:
        status = "ok" if r.ok else "FAIL"
        line = f"{status:4} {r.name}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
        if not r.ok and ok:
            ok = False
            print(f"verification failed: {r.name}: {r.detail}", file=sys.stderr)
    return 0 if ok else 1


def cmd_typea(args):
    a = _parse_a_composition(args.a)
    b = _parse_a_composition(args.b)
    if args.typea_command == "multiply":
        prod = typea.multiply_sn(a, b)
        payload = {
            "a": list(a),
            "b": list(b),
            "product": {lb.format_label(k): c for k, c in sorted(prod.items(), key=lambda t: t[0].parts)},
        }
    else:
        act = typea.lie_action(a, b)
        payload = {
            "kappa": list(a),
            "nu": list(b),
            "action": {lb.format_label(k): c for k, c in sorted(act.items(), key=lambda t: t[0].parts)},
        }
    _emit(payload, args.out)
    return 0


def _parse_a_composition(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed composition {text!r}")
    inner = text[1:-1].strip()
    return tuple(int(tok) for tok in inner.split(",")) if inner else ()


def build_parser():
    parser = argparse.ArgumentParser(
        prog="descentd",
        description="Exact descent-algebra computations for Coxeter types D and A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_type=True):
        if with_type:
            p.add_argument("--type", choices=("A", "D"), default="D")
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--cache-dir", type=Path, default=default_cache_dir())
        p.add_argument("--out", type=Path, default=None)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-n-override", type=int, default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p_table = sub.add_parser("table", help="build or load a structure table")
    common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_mult = sub.add_parser("multiply", help="multiply two basis labels")
    common(p_mult)
    p_mult.add_argument("--a", required=True)
    p_mult.add_argument("--b", required=True)
    p_mult.add_argument("--p", type=int, default=None)
    p_mult.set_defaults(func=cmd_multiply)

    p_rad = sub.add_parser("radical", help="radical spanning set and verification")
    common(p_rad)
    p_rad.add_argument("--p", type=int, default=None)
    p_rad.set_defaults(func=cmd_radical)

    p_chars = sub.add_parser("characters", help="character matrix (optionally mod p)")
    common(p_chars)
    p_chars.add_argument("--p", type=int, default=None)
    p_chars.set_defaults(func=cmd_characters)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    common(p_verify)
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_a = sub.add_parser("typea", help="matrix-rule products and the Lie action")
    a_sub = p_a.add_subparsers(dest="typea_command", required=True)
    for name in ("multiply", "lie-action"):
        pp = a_sub.add_parser(name)
        pp.add_argument("--a", required=True)
        pp.add_argument("--b", required=True)
        pp.add_argument("--out", type=Path, default=None)
        pp.set_defaults(func=cmd_typea)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
