"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import VerificationError
from .invariants import cross_check, homology
from .laurent import alexander_normalized, expand_at_minus_one
from .smith import normalize_invariant, smith_normal_form
from .torus import EVEN_EVEN, ODD_ODD, canonicalize, even_g2, even_g3, even_g4, G3_VARIANTS
from .torus import CANONICAL_G3_VARIANT, goeritz_full, goeritz_irreducible, reduced_odd_form
from .wreduce import descend, ell, initial_state, realize

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2

CSV_COLUMNS = ["p", "q", "r", "class", "goeritz", "nullity", "zero_order", "leading", "cor53_a_match"]

MATRIX_KINDS = ("full", "irreducible", "reduced-odd", "g2", "g3", "g4")


class UsageError(Exception):
    pass


def fmt_tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _torus_arg(value: str) -> int:
    n = int(value)
    if n < 2:
        raise argparse.ArgumentTypeError(f"torus parameters must be >= 2, got {n}")
    return n


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


# rendering

def render_report(rep, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerow(_csv_row(rep))
        return buf.getvalue()
    t = rep.params
    lines = [
        f"T({t.p},{t.q})  class={t.parity_class}  r={t.r}  p'={t.p_prime}  q'={t.q_prime}",
        f"goeritz {fmt_tuple(rep.closed_form)}",
        f"snf path {fmt_tuple(rep.snf_path)}",
    ]
    if rep.reduce_path is not None:
        lines.append(f"reduce path {fmt_tuple(rep.reduce_path)}")
    if rep.g4_path is not None:
        lines.append(f"g4 path {fmt_tuple(rep.g4_path)}")
    lines += [
        f"homology {rep.homology}",
        f"alexander zero_order={rep.alexander_zero_order} leading={rep.alexander_leading}",
        f"cor53 claimed k={rep.cor53_claimed_k} a={rep.cor53_claimed_a}  "
        f"k_match={rep.cor53_matches['k']} a_match={rep.cor53_matches['a']}",
    ]
    return "\n".join(lines) + "\n"


def _csv_row(rep) -> list:
    t = rep.params
    return [t.p, t.q, t.r, t.parity_class, ";".join(str(d) for d in rep.closed_form),
            rep.nullity, rep.alexander_zero_order, rep.alexander_leading,
            rep.cor53_matches["a"]]


# verify sweep

def _cell(pq):
    p, q = pq
    try:
        return pq, cross_check(p, q), None
    except VerificationError as exc:
        return pq, None, str(exc)


def sweep(p_max: int, q_max: int, jobs: int = 1) -> list:
    pairs = [(p, q) for p in range(2, p_max + 1) for q in range(p, q_max + 1)]
    if jobs == 1:
        results = [_cell(pq) for pq in pairs]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell, pairs, chunksize=4))
    return sorted(results, key=lambda r: r[0])


def render_sweep(results, fmt: str) -> tuple[str, bool]:
    failures = [r for r in results if r[2] is not None]
    ok = [r for r in results if r[2] is None]
    mismatches = sum(1 for _, rep, _ in ok if not rep.cor53_matches["a"])
    summary = (f"checked {len(results)}, path-agreements {len(ok)}, "
               f"cor53-a-mismatches {mismatches}")
    if failures:
        summary += f", failures {len(failures)}"
    if fmt == "json":
        rows = []
        for (p, q), rep, err in results:
            rows.append(rep.to_json() if err is None else {"p": p, "q": q, "error": err})
        doc = {"rows": rows, "summary": {"checked": len(results), "path_agreements": len(ok),
                                         "cor53_a_mismatches": mismatches,
                                         "failures": len(failures)}}
        return json.dumps(doc, indent=2) + "\n", not failures
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for (p, q), rep, err in results:
            w.writerow(_csv_row(rep) if err is None else [p, q, "", "", "ERROR: " + err])
    else:
        for (p, q), rep, err in results:
            if err is not None:
                buf.write(f"{p} {q} FAIL {err}\n")
                continue
            t = rep.params
            buf.write(f"T({t.p},{t.q}) {t.parity_class} r={t.r} goeritz={fmt_tuple(rep.closed_form)} "
                      f"nullity={rep.nullity} zero_order={rep.alexander_zero_order} "
                      f"leading={rep.alexander_leading} cor53_a_match={rep.cor53_matches['a']}\n")
    buf.write(summary + "\n")
    return buf.getvalue(), not failures


# trace

def render_trace(p: int, q: int, fmt: str) -> str:
    t = canonicalize(p, q)
    if t.parity_class == EVEN_EVEN:
        raise UsageError(f"T({p},{q}) has even p and q: the reduction trace applies to odd p only; "
                         f"use `matrix {p} {q} --which g4` for the even pipeline")
    if t.parity_class == ODD_ODD and t.p == t.q:
        raise UsageError(f"T({p},{q}) has p == q: E+A+W^p is already the terminal form 2E+A, "
                         f"there is no descent to trace")
    trace = descend(initial_state(t))
    rows = []
    for i, s in enumerate(trace.states):
        op = "-" if i == 0 else trace.ops[i - 1]
        inv = normalize_invariant(smith_normal_form(realize(s)))
        rows.append((s, op, ell(s), inv))
    if fmt == "json":
        doc = [{"state": {"m": s.m, "n": s.n, "e1": s.e1, "e2": s.e2, "k": str(s.k), "h": str(s.h)},
                "op": op, "ell": str(e), "snf": [str(d) for d in inv]} for s, op, e, inv in rows]
        return json.dumps(doc, indent=2) + "\n"
    return "".join(f"{s.m} {s.n} {s.e1} {s.e2} {s.k} {s.h} | {op} | {e} | {fmt_tuple(inv)}\n"
                   for s, op, e, inv in rows)


def build_matrix(p: int, q: int, which: str, variant: str):
    t = canonicalize(p, q)
    try:
        if which == "full":
            return goeritz_full(t)
        if which == "irreducible":
            return goeritz_irreducible(t)
        if which == "reduced-odd":
            return reduced_odd_form(t)
        if which == "g2":
            return even_g2(t)
        if which == "g3":
            return even_g3(t, variant)
        return even_g4(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def render_alexander(p: int, q: int, fmt: str) -> str:
    poly = alexander_normalized(p, q)
    k, a = expand_at_minus_one(poly)
    if fmt == "json":
        return json.dumps({"p": p, "q": q, "polynomial": poly.to_json(),
                           "zero_order": k, "leading": str(a)}, indent=2) + "\n"
    return f"P(t) = {poly}\nzero_order {k}\nleading {a}\n"


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goeritz", description="Goeritz invariants of torus links T(p,q)")
    sub = ap.add_subparsers(dest="command", required=True)

    def pair(sp):
        sp.add_argument("p", type=_torus_arg)
        sp.add_argument("q", type=_torus_arg)

    def out(sp):
        sp.add_argument("--out", help="write to this file instead of stdout")

    sp = sub.add_parser("invariant", help="all computation routes for one torus link")
    pair(sp)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    out(sp)

    sp = sub.add_parser("verify", help="cross-check every pair in a table")
    sp.add_argument("--p-max", type=_torus_arg, default=6)
    sp.add_argument("--q-max", type=_torus_arg, default=6)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    out(sp)

    sp = sub.add_parser("trace", help="W(m,n,e1,e2,k,h) descent for odd p")
    pair(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    out(sp)

    sp = sub.add_parser("matrix", help="dump a matrix in dense text format")
    pair(sp)
    sp.add_argument("--which", choices=MATRIX_KINDS, default="full")
    sp.add_argument("--variant", choices=G3_VARIANTS, default=CANONICAL_G3_VARIANT,
                    help="exponent of (-W_q) in G_3")
    out(sp)

    sp = sub.add_parser("alexander", help="normalized Alexander polynomial and its (t+1)-expansion")
    pair(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    out(sp)

    sp = sub.add_parser("homology", help="H_1 of the double branched cover")
    pair(sp)
    out(sp)

    sp = sub.add_parser("bench", help="time both SNF kernels on full Goeritz matrices")
    sp.add_argument("--sizes", nargs="+", metavar="P,Q",
                    help="torus pairs to time, e.g. 8,10 12,14")
    sp.add_argument("--repeat", type=_positive, default=3)
    out(sp)
    return ap


def _parse_pairs(specs):
    pairs = []
    for s in specs:
        try:
            p, q = (int(x) for x in s.split(","))
        except ValueError:
            raise UsageError(f"bad pair {s!r}; expected P,Q") from None
        if p < 2 or q < 2:
            raise UsageError(f"torus parameters must be >= 2 in {s!r}")
        pairs.append((p, q))
    return pairs


def run(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "invariant":
        return render_report(cross_check(args.p, args.q), args.format), EXIT_OK
    if cmd == "verify":
        text, ok = render_sweep(sweep(args.p_max, args.q_max, args.jobs), args.format)
        return text, EXIT_OK if ok else EXIT_VERIFY
    if cmd == "trace":
        return render_trace(args.p, args.q, args.format), EXIT_OK
    if cmd == "matrix":
        return build_matrix(args.p, args.q, args.which, args.variant).to_text(), EXIT_OK
    if cmd == "alexander":
        return render_alexander(args.p, args.q, args.format), EXIT_OK
    if cmd == "homology":
        return f"{homology(args.p, args.q)}\n", EXIT_OK
    if cmd == "bench":
        from . import bench
        pairs = _parse_pairs(args.sizes) if args.sizes else bench.DEFAULT_PAIRS
        return bench.format_table(bench.run(pairs, args.repeat)) + "\n", EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        text, code = run(args)
    except UsageError as exc:
        print(f"goeritz {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_VERIFY
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
