"""Command-line entry point.

Exit status: 0 when every check passes, 1 on a verification mismatch,
2 on usage or input errors.
"""

import argparse
import json
import os
import sys

from . import audit, plotting
from .codes import audit_code, construct_multi_orbit, construct_single_orbit, ev_bound, pair_distances
from .errors import DegreeMismatch, NotIrreducible, NotPrimitive, QCError
from .gf import DEFAULT_TABLE_BITS
from .linpoly import DEFAULT_N_CAP, format_poly, search_trinomials, subspace_poly
from .orbits import ORBIT_CAP, quasi_orbit
from .subspace import characteristic_vector
from .textio import (bundled_path, format_code, format_linpoly, format_subspace, load_code, load_field,
                     parse_subspace)

EXAMPLE = "@example"


class Mismatch(Exception):
    """Raised after output is written when a check failed."""


def _emit(args, payload, text_lines=None):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        for line in text_lines if text_lines is not None else _flatten(payload):
            print(line)


def _flatten(payload, prefix=""):
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, dict):
            yield from _flatten(val, f"{prefix}{key}.")
        elif isinstance(val, list) and val and isinstance(val[0], (list, tuple, dict)):
            yield f"{prefix}{key}:"
            for item in val:
                yield f"  {item}"
        else:
            yield f"{prefix}{key}: {val}"


def _report_path(args, name):
    os.makedirs(args.report_dir, exist_ok=True)
    return os.path.join(args.report_dir, name)


def _field(args):
    path = args.field or bundled_path("gf256.field")
    return load_field(path, args.cap_table)


# -- subcommands ---------------------------------------------------------------

def cmd_field_check(args):
    try:
        F = load_field(args.file, args.cap_table)
    except (NotIrreducible, NotPrimitive, DegreeMismatch) as exc:
        _emit(args, {"file": args.file, "ok": False, "error": type(exc).__name__, "detail": str(exc)})
        raise Mismatch from exc
    _emit(args, {
        "file": args.file, "ok": True, "p": F.p, "e": F.e, "q": F.q, "n": F.n,
        "modulus": list(F.modulus), "order": F.order, "multiplicative_order": F.nonzero,
    })


def cmd_bound(args):
    value = ev_bound(args.n, args.k, args.delta, args.q)
    _emit(args, {"n": args.n, "k": args.k, "delta": args.delta, "q": args.q,
                 "d": 2 * args.delta + 2, "bound": value},
          [f"A_{args.q}({args.n},{2 * args.delta + 2},{args.k}) <= {value}"])


def cmd_subpoly(args):
    F = _field(args)
    V = parse_subspace(F, args.subspace)
    L = subspace_poly(V)
    _emit(args, {"subspace": format_subspace(V), "dim": V.dim, "poly": format_linpoly(L),
                 "pretty": format_poly(L)},
          [format_linpoly(L), format_poly(L)])


def cmd_orbit(args):
    F = _field(args)
    V = parse_subspace(F, args.subspace)
    rep = quasi_orbit(V, args.m, args.cap_orbit)
    payload = rep.to_dict(format_subspace)
    _emit(args, payload, [line for line in _flatten({k: v for k, v in payload.items() if k != "representatives"})]
          + ["representatives:"] + ["  " + s for s in payload["representatives"]])
    if args.report_dir:
        rows = [(i * args.m, format_subspace(W)) for i, W in enumerate(rep.representatives)]
        plotting.write_csv(_report_path(args, "orbit.csv"), ("shift_exponent", "subspace"), rows)
        shown = rep.representatives[:128]
        plotting.orbit_raster([characteristic_vector(W).to_list() for W in shown],
                              _report_path(args, "orbit.png"), f"m={args.m}, length {rep.length}")


def _write_code(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    return args.output


def cmd_construct(args):
    if args.construction == "c4":
        code = construct_single_orbit(args.q, args.n, args.k, args.s, args.m,
                                      cap_bits=args.cap_table, cap_orbit=args.cap_orbit)
        checks = code.provenance["checks"]
        ok = all(checks[key] for key in ("dimension", "size_ok", "distance_ok", "quasi_cyclic"))
        summary = dict(checks, construction="c4")
        d = checks["min_distance"]
    else:
        code = construct_multi_orbit(args.q, args.n, args.k, args.s, args.m, N_cap=args.cap_N,
                                     coeff_exponent=args.coeff_exp, cap_bits=args.cap_table,
                                     cap_orbit=args.cap_orbit)
        report = code.provenance["report"]
        ok = report.disjoint and report.quasi_cyclic and report.min_distance == report.claimed_distance
        summary = dict(report.to_dict(), construction="t4")
        d = report.min_distance
    claimed = (code.field.n, code.k, len(code), d)
    text = format_code(code, claimed=claimed)
    if args.output:
        _write_code(args, text)
        summary["output"] = args.output
        _emit(args, summary)
    else:
        sys.stdout.write(text)
    if not ok:
        raise Mismatch


def cmd_verify(args):
    path = bundled_path("example_gf256.code") if args.file == EXAMPLE else args.file
    code = load_code(path, "literal" if args.literal else "expand", args.cap_table, args.cap_orbit)
    report = audit_code(code)
    payload = dict(report.to_dict(), file=args.file)
    lines = [f"file: {args.file}",
             f"parameters [n, k, |C|, d] = [{report.n}, {report.k}, {report.size}, {report.d}] over F_{report.q}",
             f"{report.m}-quasi cyclic: {report.quasi_cyclic}"]
    if report.sandwich:
        lines.append(f"bound: {report.sandwich}")
    lines += [f"mismatch: {msg}" for msg in report.mismatches] + [f"note: {msg}" for msg in report.notes]
    lines.append("PASS" if report.passed else "FAIL")
    _emit(args, payload, lines)
    if args.report_dir and len(code) > 1 and code.k is not None:
        counts = pair_distances(code)
        plotting.write_csv(_report_path(args, "distances.csv"), ("distance", "pairs"), sorted(counts.items()))
        plotting.distance_histogram(counts, _report_path(args, "distances.png"),
                                    f"[{report.n}, {report.k}, {report.size}, {report.d}]")
    if not report.passed:
        raise Mismatch


def cmd_trinomials(args):
    rows = search_trinomials(args.q, args.k_max, args.N_cap)
    payload = {"q": args.q, "k_max": args.k_max, "N_cap": args.N_cap,
               "rows": [[r.k, r.s, r.N, r.check] for r in rows]}
    _emit(args, payload, ["k s N check"] + [f"{r.k} {r.s} {r.N} {r.check}" for r in rows])
    if args.report_dir:
        plotting.write_csv(_report_path(args, "trinomials.csv"), ("k", "s", "N", "check"),
                           [(r.k, r.s, r.N, r.check) for r in rows])
        if rows:
            plotting.trinomial_plot(rows, _report_path(args, "trinomials.png"))


def cmd_audit_lemmas(args):
    q, n_max = args.q, args.n_max
    l9 = audit.subfield_orbit_audit(q, n_max)
    l9_mismatch = [r.as_tuple() for r in l9 if r.length != r.closed_form]
    configs = [(q, n) for n in ((4, 6) if q == 2 else (3, 4)) if n <= n_max] or [(q, n_max)]
    conj = audit.conjugation_sweep(configs, args.samples, args.seed)
    l8 = audit.frobenius_identity_audit(q, min(n_max, 6 if q == 2 else 4))
    sweep_n = args.sweep_n or min(n_max, 6 if q == 2 else 4)
    l42 = audit.intersection_audit(q, sweep_n, tuple(args.sweep_dims))
    l13 = audit.coefficient_condition_audit((q,), min(n_max, 7))
    payload = {
        "q": q, "n_max": n_max, "seed": args.seed,
        "subfield_orbits": {
            "cases": len(l9),
            "oracle_mismatches": len(l9_mismatch),
            "closed_form_misfits": [list(r.as_tuple()) for r in l9 if not r.consistent],
        },
        "conjugation": {"samples": conj.samples, "scale_failures": len(conj.scale_failures),
                        "frobenius_failures": len(conj.frobenius_failures)},
        "frobenius_identity": {"trinomial_subspaces": l8.trinomial_subspaces, "coincidences": l8.coincidences,
                   "failures": len(l8.failures)},
        "intersection_bound": dict(l42.to_dict(), n=sweep_n, dims=list(args.sweep_dims)),
        "coefficient_condition": {"cases": len(l13), "condition_fails": [list(r[:5]) for r in l13 if not r[5]]},
    }
    _emit(args, payload)
    if args.report_dir:
        plotting.write_csv(_report_path(args, "subfield_orbits.csv"), audit.SUBFIELD_ORBIT_HEADER, [r.as_tuple() for r in l9])
        plotting.orbit_length_scatter(l9, _report_path(args, "subfield_orbits.png"))
    if l9_mismatch or conj.failures or l8.failures or l42.violations or not l42.support_invariant:
        raise Mismatch


# -- parser ----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap-table", type=int, default=DEFAULT_TABLE_BITS, metavar="BITS",
                        help="refuse fields larger than 2^BITS")
    common.add_argument("--cap-orbit", type=int, default=ORBIT_CAP, metavar="COUNT")
    common.add_argument("--cap-N", type=int, default=DEFAULT_N_CAP, dest="cap_N")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--report-dir", help="write CSV tables and PNG figures here")

    parser = argparse.ArgumentParser(prog="quasicyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-check", parents=[common], help="verify a field spec file")
    p.add_argument("file")
    p.set_defaults(func=cmd_field_check)

    p = sub.add_parser("bound", parents=[common], help="upper bound on A_q(n, 2delta+2, k)")
    for name in ("n", "k", "delta", "q"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("subpoly", parents=[common], help="subspace polynomial of a subspace")
    p.add_argument("subspace", help="'basis: e1 e2 ...' or 'elements: e1 e2 ...'")
    p.add_argument("--field", help="field spec file (default: bundled F_256)")
    p.set_defaults(func=cmd_subpoly)

    p = sub.add_parser("orbit", parents=[common], help="m-quasi orbit of a subspace")
    p.add_argument("subspace")
    p.add_argument("--field")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("construct", parents=[common], help="build a code (c4: single orbit, t4: Frobenius)")
    p.add_argument("construction", choices=("c4", "t4"))
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--coeff-exp", type=int, help="t4: exponent r in a_0 = g^r, a_s = g^(r q^s) (default m)")
    p.add_argument("-o", "--output", help="code file to write (default: print it)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="audit a code file ('@example' for the bundled example)")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--expand", action="store_true", help="lines are orbit generators (default)")
    mode.add_argument("--literal", action="store_true", help="lines are the complete word list")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trinomials", parents=[common], help="irreducible x^([k]-1)+x^([s]-1)+1 table")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--k-max", type=int, default=7)
    p.add_argument("--N-cap", type=int, default=127, dest="N_cap")
    p.set_defaults(func=cmd_trinomials)

    p = sub.add_parser("audit-lemmas", parents=[common], help="exhaustive/randomized lemma sweeps")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--sweep-n", type=int, help="field degree for the intersection-bound sweep")
    p.add_argument("--sweep-dims", type=int, nargs="+", default=[2, 3])
    p.set_defaults(func=cmd_audit_lemmas)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except Mismatch:
        return 1
    except (QCError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
