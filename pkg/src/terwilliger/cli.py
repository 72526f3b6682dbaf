"""Command-line front end: analyze, sweep, audit-corollaries, char-table, tensor.

Exit codes: 0 all verdicts pass, 1 any verdict failed, 2 usage error.
Output is deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import pipeline
from .characters import format_symbolic
from .groups import ConsistencyError
from .modular import DEFAULT_PRIMES

PRIME_ENV_VARS = ("TERWILLIGER_PRIME_1", "TERWILLIGER_PRIME_2")
SWEEP_CSV_HEADER = "n,s,tau,dim_t0,dim_t,dim_t_tilde,formula,pass"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def resolve_primes(option: str | None) -> tuple[int, int]:
    """--primes beats the environment, which beats the built-in defaults."""
    if option:
        parts = option.split(",")
        if len(parts) != 2:
            raise ValueError("--primes expects two comma-separated primes")
        primes = (int(parts[0]), int(parts[1]))
    else:
        primes = tuple(
            int(os.environ.get(var, default))
            for var, default in zip(PRIME_ENV_VARS, DEFAULT_PRIMES))
    if primes[0] == primes[1]:
        raise ValueError("the two moduli must be distinct")
    for p in primes:
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
    return primes


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _blocks_str(blocks) -> str:
    return " ".join(str(b) for b in blocks)


def render_analysis_text(a: pipeline.Analysis) -> str:
    lines = [f"D(n={a.params.n}, s={a.params.s})   tau={a.params.tau}   order={2 * a.params.n}"]
    lines.append("classes:")
    for label, members, cent in zip(a.classes.labels, a.classes.classes,
                                    a.classes.centralizer_orders):
        names = ", ".join(a.group.element_name(x) for x in members)
        lines.append(f"  {label:<5} |C|={cent:<4} {{{names}}}")
    lines.append(f"identity class: {a.classes.labels[a.classes.identity_class]} "
                 f"(index {a.classes.identity_class})")
    dim_t = a.certificate.dim_t if a.certificate else "-"
    lines.append(f"dim T0 = {a.dim_t0}   dim T = {dim_t}   dim T~ = {a.dim_t_tilde}   "
                 f"formula = {a.formula_value}")
    if a.certificate:
        lines.append(f"closure: rounds={a.certificate.closure_rounds} "
                     f"provenance={a.certificate.provenance} primes={a.certificate.primes}")
    lines.append(f"triply transitive: {a.dim_t0 == a.dim_t_tilde}")
    lines.append(f"characters: {len(a.table.row_labels)} rows "
                 f"({2 * a.params.tau} linear, {len(a.table.row_labels) - 2 * a.params.tau} "
                 f"two-dimensional)")
    lines.append(f"blocks (row sums):    {_blocks_str(a.blocks_rowsum.blocks)}")
    if a.blocks_closedform:
        lines.append(f"blocks (closed form): {_blocks_str(a.blocks_closedform.blocks)}")
    if a.commutant_dim is not None:
        lines.append(f"commutant dimension: {a.commutant_dim}")
    if a.idempotents is not None:
        lines.append(f"idempotent traces: {_blocks_str(a.idempotents.traces)}")
    lines.append("checks:")
    for name, ok in a.checks.items():
        lines.append(f"  {'PASS' if ok else 'FAIL'}  {name}")
    for note in a.notes:
        lines.append(f"  note: {note}")
    lines.append(f"result: {'PASS' if a.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _analysis_csv_row(a: pipeline.Analysis) -> list:
    n, s, tau, t0, t, t_tilde, formula = a.dims_row()
    return [n, s, tau, t0, "" if t is None else t, t_tilde, formula,
            "true" if a.passed else "false"]


def render_sweep(analyses: list[pipeline.Analysis], fmt: str) -> str:
    if fmt == "csv":
        return _csv_text([_analysis_csv_row(a) for a in analyses],
                         SWEEP_CSV_HEADER.split(","))
    if fmt == "json":
        # census of the fractional-looking multiplicity case (tau/2), which may
        # only fire when tau is even; the rows record every occurrence
        census = [{"n": a.params.n, "s": a.params.s,
                   "ks": list(a.mults_closedform.half_case_ks)}
                  for a in analyses
                  if a.mults_closedform and a.mults_closedform.half_case_ks]
        return canonical_json({
            "rows": [a.to_json_dict() for a in analyses],
            "summary": {"pairs": len(analyses),
                        "passed": sum(a.passed for a in analyses),
                        "failed": sum(not a.passed for a in analyses),
                        "half_tau_case": census},
        })
    lines = [SWEEP_CSV_HEADER]
    for a in analyses:
        lines.append(",".join(str(x) for x in _analysis_csv_row(a)))
    passed = sum(a.passed for a in analyses)
    lines.append(f"# {len(analyses)} pairs, {passed} passed, {len(analyses) - passed} failed")
    return "\n".join(lines) + "\n"


def render_audit(audits, fmt: str) -> str:
    header = ["n", "printed_blocks", "derived_blocks", "agree", "note"]
    rows = [[a.n, _blocks_str(a.printed_blocks), _blocks_str(a.derived_blocks),
             "true" if a.agree else "false", a.discrepancy_note] for a in audits]
    if fmt == "json":
        return canonical_json({
            "rows": [{"n": a.n, "tau": a.tau,
                      "printed_blocks": list(a.printed_blocks),
                      "derived_blocks": list(a.derived_blocks),
                      "agree": a.agree, "note": a.discrepancy_note}
                     for a in audits],
            "summary": {"agree": sum(a.agree for a in audits),
                        "disagree": sum(not a.agree for a in audits)},
        })
    if fmt == "csv":
        return _csv_text(rows, header)
    lines = [",".join(header)]
    lines += [",".join(str(c) for c in row[:4]) + (f"  [{row[4]}]" if row[4] else "")
              for row in rows]
    agree = sum(a.agree for a in audits)
    lines.append(f"# {len(audits)} audited, {agree} agree, {len(audits) - agree} disagree")
    return "\n".join(lines) + "\n"


def render_tensor(a: pipeline.Analysis, fmt: str) -> str:
    rows = a.tensor.nonzero_triples()
    if fmt == "json":
        return canonical_json({
            "n": a.params.n, "s": a.params.s,
            "class_labels": list(a.classes.labels),
            "nonzero": [{"i": i, "j": j, "k": k, "p": p} for i, j, k, p in rows],
        })
    body = _csv_text([list(r) for r in rows], ["i", "j", "k", "p_ijk"])
    if fmt == "csv":
        return body
    return body + f"# {len(rows)} nonzero triples = dim T0\n"


def _numeric_cell(value: complex) -> str:
    re = 0.0 + round(value.real, 6)   # normalize -0.0
    im = 0.0 + round(value.imag, 6)
    return f"{re:g}" if im == 0 else f"{re:g}{im:+g}i"


def render_char_table(a: pipeline.Analysis, fmt: str, numeric: bool = False) -> str:
    table = a.table
    if fmt == "json":
        return canonical_json({
            "n": a.params.n, "s": a.params.s, "tau": a.params.tau,
            "columns": list(table.column_labels),
            "class_sizes": list(a.classes.sizes()),
            "rows": [{
                "label": label,
                "degree": table.degrees[r],
                "entries": [{"coef": coef, "exponents": list(exps),
                             "re": round(float(table.values[r, c].real), 12),
                             "im": round(float(table.values[r, c].imag), 12)}
                            for c, (coef, exps) in enumerate(table.symbolic[r])],
            } for r, label in enumerate(table.row_labels)],
        })
    if numeric:
        cells = [[label] + [_numeric_cell(v) for v in table.values[r]]
                 for r, label in enumerate(table.row_labels)]
    else:
        cells = [[label] + [format_symbolic(e) for e in row]
                 for label, row in zip(table.row_labels, table.symbolic)]
    if fmt == "csv":
        return _csv_text(cells, ["character"] + list(table.column_labels))
    widths = [max(len(r[c]) for r in cells + [["character"] + list(table.column_labels)])
              for c in range(len(cells[0]))]
    header = ["character"] + list(table.column_labels)
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    if not numeric:
        lines.append(f"(w = primitive {a.params.n}-th root of unity; "
                     f"entries are coef * sum of powers of w)")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="terwilliger",
        description="Terwilliger algebra dimensions and Wedderburn decompositions "
                    "of the group association schemes of C_n x| C_2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", default=None, help="write to file instead of stdout")
        p.add_argument("--primes", default=None,
                       help="two comma-separated primes for the closure ranks")

    p_an = sub.add_parser("analyze", help="full report for one (n, s)")
    p_an.add_argument("--n", type=int, required=True)
    p_an.add_argument("--s", type=int, required=True)
    p_an.add_argument("--no-closure", action="store_true")
    p_an.add_argument("--exact-rational", action="store_true",
                      help="confirm the closure rank over the rationals (small n only)")
    common(p_an)

    p_sw = sub.add_parser("sweep", help="analyze every valid (n, s) in a range")
    p_sw.add_argument("--n-min", type=int, required=True)
    p_sw.add_argument("--n-max", type=int, required=True)
    p_sw.add_argument("--threads", type=int, default=1)
    p_sw.add_argument("--force-closure", action="store_true",
                      help="run the closure even for n above the default limit")
    p_sw.add_argument("--closure-limit", type=int, default=pipeline.CLOSURE_DEFAULT_LIMIT)
    p_sw.add_argument("--generator-order", type=int, default=None, metavar="SEED",
                      help="permute the generator seeding order (results must not change)")
    common(p_sw, formats=("csv", "json", "text"))

    p_au = sub.add_parser("audit-corollaries",
                          help="compare stated dihedral block formulas with derived ones")
    p_au.add_argument("--n-min", type=int, required=True)
    p_au.add_argument("--n-max", type=int, required=True)
    common(p_au, formats=("csv", "json", "text"))

    p_ct = sub.add_parser("char-table", help="print the character table of D(n, s)")
    p_ct.add_argument("--n", type=int, required=True)
    p_ct.add_argument("--s", type=int, required=True)
    p_ct.add_argument("--numeric", action="store_true",
                      help="print complex values instead of root-of-unity exponents")
    common(p_ct)

    p_tn = sub.add_parser("tensor",
                          help="export the nonzero intersection numbers of D(n, s)")
    p_tn.add_argument("--n", type=int, required=True)
    p_tn.add_argument("--s", type=int, required=True)
    common(p_tn, formats=("csv", "json", "text"))
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        primes = resolve_primes(args.primes)
    except ValueError as exc:
        parser.error(str(exc))  # exits 2

    try:
        if args.command == "analyze":
            analysis = pipeline.analyze_pair(
                args.n, args.s, closure=not args.no_closure, primes=primes,
                exact_rational=args.exact_rational)
            if args.format == "json":
                _emit(canonical_json(analysis.to_json_dict()), args.output)
            elif args.format == "csv":
                _emit(_csv_text([_analysis_csv_row(analysis)],
                                SWEEP_CSV_HEADER.split(",")), args.output)
            else:
                _emit(render_analysis_text(analysis), args.output)
            return 0 if analysis.passed else 1

        if args.command == "sweep":
            if not 3 <= args.n_min <= args.n_max:
                parser.error("need 3 <= n-min <= n-max")
            analyses = pipeline.sweep(
                args.n_min, args.n_max, threads=args.threads,
                closure_limit=args.closure_limit, force_closure=args.force_closure,
                primes=primes, generator_order_seed=args.generator_order)
            _emit(render_sweep(analyses, args.format), args.output)
            return 0 if all(a.passed for a in analyses) else 1

        if args.command == "audit-corollaries":
            if not 3 <= args.n_min <= args.n_max:
                parser.error("need 3 <= n-min <= n-max")
            audits = pipeline.audit_corollaries(args.n_min, args.n_max)
            _emit(render_audit(audits, args.format), args.output)
            return 0  # findings, not failures

        if args.command == "char-table":
            analysis = pipeline.analyze_pair(args.n, args.s, closure=False,
                                             primes=primes, desk_certificates=False)
            _emit(render_char_table(analysis, args.format, numeric=args.numeric),
                  args.output)
            return 0

        if args.command == "tensor":
            analysis = pipeline.analyze_pair(args.n, args.s, closure=False,
                                             primes=primes, desk_certificates=False)
            _emit(render_tensor(analysis, args.format), args.output)
            return 0

    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable command")


if __name__ == "__main__":
    sys.exit(main())
