"""Command line front end.

Exit status: 0 when a result was computed (including "absent" and "not
adequate"), 1 for usage, parse and input errors, 2 when a group exceeds
the element cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceeded, ParseError, SerreWeightsError
from .groups import DEFAULT_CAP
from .specfiles import parse_char_spec, parse_equiv_spec, parse_group_spec, parse_rep_spec
from .weights import (
    NONSPLIT,
    bdj_set,
    big_e_witness,
    det_char,
    det_weight_set,
    explicit_set,
    find_witness,
    ghs_inertial_set,
    schein_set,
    weights_equivalent,
)

SETS = {"bdj": bdj_set, "sch": schein_set, "explicit": explicit_set, "ghs": ghs_inertial_set}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")


def _fmt_vec(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def _fmt_weight(a) -> str:
    return "(" + ",".join(f"({x},{y})" for x, y in a.a) + ")"


def _witness_text(w) -> str:
    return "none" if w is None else f"J={_fmt_vec(w.J)} delta={_fmt_vec(w.delta)}"


def _emit(out, rows, fmt, header):
    """Rows are dicts with keys d, t, representative, witness, flags."""
    if fmt == "json-lines":
        for r in rows:
            out.write(json.dumps(r, sort_keys=True) + "\n")
        return
    out.write(header + "\n")
    out.write(f"{'d':<12} {'t':>6}  {'representative':<24} witness\n")
    for r in rows:
        w = r["witness"]
        wt = "-" if w is None else f"J={_fmt_vec(w['J'])} delta={_fmt_vec(w['delta'])}"
        rep = "(" + ",".join(f"({x},{y})" for x, y in r["representative"]) + ")"
        out.write(f"{_fmt_vec(r['d']):<12} {r['t']:>6}  {rep:<24} {wt}\n")


def _class_row(wc, witness, flags):
    return {
        "d": list(wc.d),
        "t": wc.t,
        "representative": [list(p) for p in wc.representative().a],
        "witness": None if witness is None else witness.as_dict(),
        "flags": flags,
    }


def cmd_weights(args, out) -> int:
    spec = parse_rep_spec(_read(args.input))
    rep = spec.to_rep()
    result = SETS[args.which](rep, jobs=args.jobs)
    flags = {"superset": result.superset}
    rows = [_class_row(wc, result.witnesses.get(wc), flags) for wc in result]
    header = (
        f"# which={args.which} l={rep.l} f={rep.f} e={rep.e} shape={rep.kind} "
        f"rows={len(rows)} superset={str(result.superset).lower()}"
    )
    _emit(out, rows, args.format, header)
    a = spec.query()
    if a is not None:
        present = a in result
        if args.format == "json-lines":
            out.write(json.dumps({"query": [list(p) for p in a.a], "status": "present" if present else "absent"}) + "\n")
        else:
            out.write(f"query {_fmt_weight(a)}: {'present' if present else 'absent'}\n")
    return 0


def cmd_detset(args, out) -> int:
    spec = parse_char_spec(_read(args.input))
    chi = spec.to_char()
    classes = sorted(det_weight_set(chi, spec.e))
    rows = [_class_row(wc, None, {}) for wc in classes]
    _emit(out, rows, args.format, f"# detset l={spec.l} f={spec.f} e={spec.e} E={chi.canonical} rows={len(rows)}")
    return 0


def cmd_witness(args, out) -> int:
    spec = parse_rep_spec(_read(args.input))
    rep = spec.to_rep()
    a = spec.query()
    if a is None:
        raise ParseError("missing required field", field="weight")
    a.require_serre()
    w, method = None, "search"
    if rep.kind != NONSPLIT and rep.e >= rep.l:
        method = "constructive"
        if det_char(a, rep.e) == rep.det():
            w = big_e_witness(rep, a)
    else:
        w = find_witness(rep, a)
    if args.format == "json-lines":
        out.write(json.dumps({"weight": [list(p) for p in a.a], "method": method, "witness": None if w is None else w.as_dict()}) + "\n")
    else:
        out.write(_witness_text(w) + "\n")
    return 0


def cmd_equiv(args, out) -> int:
    a, b = parse_equiv_spec(_read(args.input))
    same = weights_equivalent(a, b)
    if args.format == "json-lines":
        out.write(json.dumps({"a": [list(p) for p in a.a], "b": [list(p) for p in b.a], "equivalent": same}) + "\n")
    else:
        out.write(("true" if same else "false") + "\n")
    return 0


def cmd_adequacy(args, out) -> int:
    from .adequacy import is_adequate

    spec = parse_group_spec(_read(args.input))
    G = spec.build(args.cap)
    report = is_adequate(G, cap=args.cap)
    if args.format == "json-lines":
        out.write(json.dumps(report.as_dict(), sort_keys=True) + "\n")
        return 0
    out.write(f"group order {report.order} in GL_{report.n}(F_{report.q}), l={report.l}\n")
    out.write(f"cond1 {'pass' if report.cond1 else 'FAIL'}  l-part of |G^ab| = {report.l_part}\n")
    out.write(f"cond2 {'pass' if report.cond2 else 'FAIL'}  l does not divide n\n")
    out.write(f"cond3 {'pass' if report.cond3 else 'FAIL'}  span rank = {report.span_rank}\n")
    out.write(f"cond4 {'pass' if report.cond4 else 'FAIL'}  dim H^1 = {report.h1}\n")
    out.write(f"verdict {'adequate' if report.verdict else 'not adequate'}\n")
    return 0


def cmd_verify_paper(args, out) -> int:
    from .paperchecks import run_checks

    results = run_checks()
    for r in results:
        out.write(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail} ({r.seconds:.1f}s)\n")
    failed = [r.name for r in results if not r.ok]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="serreweights", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--input", "-i", required=True, help="YAML input file, '-' for stdin")
        sp.add_argument("--format", choices=["table", "json-lines"], default="table")

    sp = sub.add_parser("weights", help="explicit weight set of a local representation")
    common(sp)
    sp.add_argument("--which", choices=sorted(SETS), default="explicit")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for the class scan")
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("detset", help="weights satisfying the determinant condition")
    common(sp)
    sp.set_defaults(func=cmd_detset)

    sp = sub.add_parser("witness", help="a (J, delta) witness for one weight")
    common(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("equiv", help="are two weights equivalent")
    common(sp)
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("adequacy", help="adequacy report for a finite matrix group")
    common(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order to enumerate")
    sp.set_defaults(func=cmd_adequacy)

    sp = sub.add_parser("verify-paper", help="rerun the reference examples")
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 1
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SerreWeightsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
