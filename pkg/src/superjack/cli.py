"""Command-line front end.

    superjack pieri --lambda "(6,4,3;5,2,1)" --n 3 --kind e
    superjack verify-pieri --max-degree 4 --max-fermion 2 --n 2
    superjack asm-sum --n 3 --x "7a-1,5a-3,4a-4" --y "6a-2,3a-5,a-7"

Exit status: 0 on success, 1 on malformed input, 2 when a verification
suite finds a mismatch, 3 when the Macdonald check finds a counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .coeffield import parse_ratfunc
from .orthobasis import jack, macdonald
from .pieri import pieri
from .sixvertex import SpectralData, asm_sum
from .superpartitions import parse
from .verify import (
    default_jobs,
    verify_commutators,
    verify_dual,
    verify_duality,
    verify_lemma,
    verify_limits,
    verify_macdonald,
    verify_pieri,
    verify_sixvertex,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3

CSV_COLUMNS = ("lambda", "omega", "kind", "n", "sign", "psi", "det", "d", "total")

VERBS = (
    "jack",
    "macdonald",
    "pieri",
    "verify-pieri",
    "verify-dual",
    "verify-commutators",
    "verify-duality",
    "verify-macdonald",
    "asm-sum",
    "verify-sixvertex",
)


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superjack", description="Jack and Macdonald superpolynomials: Pieri rules and checks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--lambda", dest="lam", help='superpartition, e.g. "(2,0;1)"')
    p.add_argument("--n", type=int, help="strip size, ASM size, or upper bound on n for verify verbs")
    p.add_argument("--kind", choices=("e", "etilde", "g", "gtilde"), default="e")
    p.add_argument("--field", choices=("alpha", "qt"), default="alpha")
    p.add_argument("--max-degree", type=int, help="bound on |Lambda^*| (on |Lambda^*| + m for commutators/duality)")
    p.add_argument("--max-fermion", type=int, help="bound on the fermionic degree m")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $SUPERJACK_JOBS or 1)")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--x", help="comma-separated spectral parameters x_i")
    p.add_argument("--y", help="comma-separated spectral parameters y_j")
    return p


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"{args.verb} needs --{name.replace('_', '-').replace('lam', 'lambda')}")
    return value


def _superpartition(args):
    try:
        return parse(_need(args, "lam"))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _params(text):
    try:
        return tuple(parse_ratfunc(t, {"alpha": "a", "α": "a"}) for t in text.split(","))
    except (ValueError, TypeError, SyntaxError) as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------
# verbs: each returns (document, table rows, exit status)


def _expansion(args):
    lam = _superpartition(args)
    poly = jack(lam) if args.verb == "jack" else macdonald(lam)
    doc = {"verb": args.verb, **poly.to_json()}
    rows = [{"omega": t["sp"], "coeff": t["c"]} for t in doc["coeffs"]]
    return doc, rows, EXIT_OK


def _pieri(args):
    lam = _superpartition(args)
    n = _need(args, "n")
    try:
        coeffs = pieri(lam, n, args.kind, args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = []
    for omega in sorted(coeffs, key=lambda s: s.sort_key(), reverse=True):
        c = coeffs[omega]
        rows.append({"lambda": str(lam), "kind": args.kind, "n": n, **c.to_json()})
    doc = {"verb": "pieri", "lambda": str(lam), "n": n, "kind": args.kind, "field": args.field, "coefficients": rows}
    return doc, rows, EXIT_OK


def _ranges(args, degree, fermion, n):
    return (
        degree if args.max_degree is None else args.max_degree,
        fermion if args.max_fermion is None else args.max_fermion,
        n if args.n is None else args.n,
    )


def _verify(args):
    jobs = args.jobs
    if args.verb == "verify-pieri":
        D, M, n = _ranges(args, 4, 2, 2)
        reports = [verify_pieri(D, M, n, jobs=jobs), verify_limits(D, M, n, jobs=jobs)]
    elif args.verb == "verify-dual":
        D, M, n = _ranges(args, 4, 2, 2)
        reports = [verify_dual(D, M, n, jobs=jobs)]
    elif args.verb == "verify-commutators":
        D, M, n = _ranges(args, 4, 4, 2)
        reports = [verify_commutators(D, M, n, jobs=jobs), verify_lemma()]
    elif args.verb == "verify-duality":
        D, M, n = _ranges(args, 4, 4, 0)
        reports = [verify_duality(D, M, jobs=jobs)]
    elif args.verb == "verify-macdonald":
        D, M, n = _ranges(args, 3, 2, 2)
        reports = [verify_macdonald(D, M, n, jobs=jobs)]
    else:
        D, M, n = _ranges(args, 4, 2, 2)
        reports = [verify_sixvertex(D, M, n, jobs=jobs)]
    ok = all(r.ok for r in reports)
    status = EXIT_OK if ok else (EXIT_COUNTEREXAMPLE if args.verb == "verify-macdonald" else EXIT_MISMATCH)
    doc = {
        "verb": args.verb,
        "range": {"max_degree": D, "max_fermion": M, "n": n},
        "ok": ok,
        "reports": [r.to_json() for r in reports],
    }
    rows = [
        {"suite": r.name, "checked": r.checked, "mismatches": len(r.mismatches), "status": "ok" if r.ok else "FAIL"}
        for r in reports
    ]
    return doc, rows, status


def _asm_sum(args):
    n = args.n
    if args.x is None and args.y is None:
        if n is None:
            raise InputError("asm-sum needs --n or --x/--y")
        data = SpectralData.symbolic(n)
    else:
        if args.x is None or args.y is None:
            raise InputError("asm-sum needs both --x and --y")
        data = SpectralData(_params(args.x), _params(args.y))
        if n is not None and n != data.n:
            raise InputError(f"--n {n} does not match {data.n} spectral parameters")
    if data.n < 1:
        raise InputError("asm-sum needs n >= 1")
    value = asm_sum(data, args.field)
    doc = {
        "verb": "asm-sum",
        "n": data.n,
        "field": args.field,
        "x": [str(x) for x in data.xs],
        "y": [str(y) for y in data.ys],
        "sum": str(value),
    }
    return doc, [{"n": data.n, "field": args.field, "sum": str(value)}], EXIT_OK


# ---------------------------------------------------------------------------
# output


def _pretty(rows, max_width=100) -> str:
    if not rows:
        return "(no rows)\n"
    cols = list(rows[0])
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    if sum(widths.values()) + 2 * len(cols) > max_width:
        # one block per row when a table would not fit
        pad = max(len(c) for c in cols)
        blocks = ["\n".join(f"{c.rjust(pad)}: {r[c]}" for c in cols) for r in rows]
        return "\n\n".join(blocks) + "\n"
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    lines.append("  ".join("-" * widths[c] for c in cols))
    lines.extend("  ".join(str(r[c]).ljust(widths[c]) for c in cols).rstrip() for r in rows)
    return "\n".join(lines) + "\n"


def _csv(rows, columns=None) -> str:
    buf = io.StringIO()
    columns = columns or (list(rows[0]) if rows else [])
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _render(args, doc, rows) -> str:
    if args.format == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if args.format == "csv":
        return _csv(rows, CSV_COLUMNS if args.verb == "pieri" else None)
    text = _pretty(rows)
    if args.verb.startswith("verify-"):
        for rep in doc["reports"]:
            for note in rep["notes"]:
                text += f"{rep['suite']}: {note}\n"
            if rep["mismatches"]:
                m = rep["mismatches"][0]
                text += (
                    f"{rep['suite']}: first counterexample (lambda, n, kind, omega) = "
                    f"({m['lambda']}, {m['n']}, {m['kind']}, {m['omega']})\n"
                    f"  expected {m['expected']}\n  got      {m['got']}\n"
                )
    return text


HANDLERS = {"jack": _expansion, "macdonald": _expansion, "pieri": _pieri, "asm-sum": _asm_sum}


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = _build_parser().parse_args(argv)
        if args.jobs is None:
            args.jobs = default_jobs()
        if args.jobs < 1:
            raise InputError("--jobs must be positive")
        handler = HANDLERS.get(args.verb, _verify)
        doc, rows, status = handler(args)
    except InputError as exc:
        print(f"superjack: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = _render(args, doc, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    try:
        status = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        status = EXIT_OK
    sys.exit(status)


if __name__ == "__main__":
    main()
