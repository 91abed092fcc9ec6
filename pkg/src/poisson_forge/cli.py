"""Command-line front end.

Subcommands: homology, hilbert, kernels, division, nf, verify, normalize.
The working truncation weight defaults to 12, can be set by the
POISSON_FORGE_MAX_WEIGHT environment variable, and is overridden by
--max-weight (the flag wins).  Exit codes: 0 all requested verdicts pass,
1 some verdict failed, 2 usage or parse error.
"""

import argparse
import os
import sys

from .division import (division_group_dim, ideal_dim_binomial_print,
                       ideal_slice_dim, lefschetz_problem,
                       submodule_contains, verify_division_basis)
from .homology import InvariantViolation, default_engine
from .parsing import ParseError, parse_polynomial, print_polynomial
from .poisson import verify_identity_suite
from .reports import ReportDocument, emit_report
from .series import H_SERIES, KERNEL3_PRINTED, KERNEL_SERIES

WEIGHT_CAP = 20
USAGE_ERROR = 2


def _working_weight(args):
    if args.max_weight is not None:
        w = args.max_weight
    else:
        env = os.environ.get("POISSON_FORGE_MAX_WEIGHT")
        try:
            w = int(env) if env else 12
        except ValueError:
            raise SystemExit(USAGE_ERROR)
    if w < 0 or w > WEIGHT_CAP:
        print("max weight %d beyond configured maximum %d" % (w, WEIGHT_CAP),
              file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return w


def _homology_block(doc, eng, k, w_max, with_reps=True):
    report = eng.homology_report(k, w_max, with_representatives=with_reps)
    doc.add_table("homology degree %d" % k,
                  ["weight", "dim_ker", "dim_im", "dim_H"],
                  [list(r) for r in report.rows])
    doc.add_series("H%d Hilbert function" % k, report.hilbert, report.expected,
                   str(report.series))
    if with_reps:
        verdicts = [v.as_dict() for v in report.representative_verdicts]
        for v in verdicts:
            v["name"] = "representatives (k=%d, w=%d)" % (v["degree"], v["weight"])
        doc.add_verdicts("representative families degree %d" % k, verdicts)


def _kernels_block(doc, eng, w_max):
    for k in range(1, 5):
        doc.add_series("ker delta_%d Hilbert function" % k,
                       eng.kernel_hilbert(k, w_max),
                       KERNEL_SERIES[k].expand(w_max), str(KERNEL_SERIES[k]))
    computed3 = eng.kernel_hilbert(3, w_max)
    printed = KERNEL3_PRINTED.expand(w_max)
    if computed3 != printed:
        doc.add_note("kernel degree 3 consistency flag",
                     "the printed series %s disagrees with the direct rank "
                     "computation; the corrected series %s (forced by the "
                     "short exact sequence for degree 3) matches."
                     % (KERNEL3_PRINTED, KERNEL_SERIES[3]))


def _division_blocks(doc, eng, d_max):
    rows1 = []
    ok1 = True
    for w in range(1, d_max + 3):
        dim = division_group_dim(lefschetz_problem(1, w))
        ok1 = ok1 and dim == 0
        rows1.append([w, dim, 0])
    doc.add_table("D^1(df1,df2) slices", ["weight", "dim", "expected"], rows1)
    doc.add_verdicts("D^1 vanishing", [{"name": "D^1 = 0 for all tested weights",
                                        "status": "pass" if ok1 else "fail"}])
    rows2 = []
    verd2 = []
    for d in range(d_max + 1):
        dim = division_group_dim(lefschetz_problem(2, d + 2))
        count, dim2, indep, inker = verify_division_basis(lefschetz_problem(2, d + 2))
        rows2.append([d, dim, 2 * (d + 1)])
        verd2.append({"name": "D^2 slice d=%d: dim=%d expected=%d, basis "
                              "count=%d independent=%s" % (d, dim, 2 * (d + 1),
                                                           count, indep),
                      "status": "pass" if (dim == 2 * (d + 1) == count and indep
                                           and inker and dim == dim2)
                      else "fail"})
    doc.add_table("D^2(df1,df2) by coefficient degree", ["coeff_degree", "dim",
                                                         "expected"], rows2)
    doc.add_verdicts("D^2 classification", verd2)
    cat = eng.cat
    v1 = cat.beta1 * cat.f1 - cat.beta2 * cat.f2
    v2 = cat.beta1 * cat.f2 + cat.beta2 * cat.f1
    doc.add_verdicts("second-group relation classes", [
        {"name": "[f1*beta1 - f2*beta2] = 0",
         "status": "pass" if submodule_contains(lefschetz_problem(2, 4), v1)
         else "fail"},
        {"name": "[f2*beta1 + f1*beta2] = 0",
         "status": "pass" if submodule_contains(lefschetz_problem(2, 4), v2)
         else "fail"},
    ])
    rows3 = []
    verd3 = []
    for d in range(d_max + 1):
        dj, dq = ideal_slice_dim(d)
        binom = ideal_dim_binomial_print(d)
        exp_q = 2 * (d + 1) if d >= 1 else 1
        rows3.append([d, dj, binom, dq, exp_q])
        verd3.append({"name": "quotient R_%d/J_%d = %d (binomial print %s)"
                              % (d, d, exp_q, "agrees" if dj == binom
                                 else "DISAGREES: %d vs %d" % (dj, binom)),
                      "status": "pass" if dq == exp_q else "fail"})
    doc.add_table("Jacobian ideal slices",
                  ["degree", "dim_J", "binomial_print", "quotient",
                   "expected_quotient"], rows3)
    doc.add_verdicts("Jacobian quotient dimensions", verd3)


def _module_structure_block(doc, eng, w_max):
    results = [r.as_dict() for r in eng.module_structure_check(w_max)]
    for r in results:
        r["status"] = "pass" if r["ok"] else "fail"
    doc.add_verdicts("module structure relations", results)


def _derham_block(doc, eng, w_max):
    table = eng.induced_de_rham(w_max)
    rows = [[k, w, table[(k, w)], 1 if (k, w) == (0, 0) else 0]
            for w in range(w_max + 1) for k in range(5)]
    doc.add_table("induced de Rham cohomology on homology",
                  ["degree", "weight", "dim", "expected"], rows)
    ok = all(r[2] == r[3] for r in rows)
    doc.add_verdicts("induced de Rham", [{
        "name": "dimension 1 at (k=0, w=0) and 0 elsewhere",
        "status": "pass" if ok else "fail"}])


def _identities_block(doc, cat, w_max):
    checks = verify_identity_suite(cat, max_weight=w_max)
    doc.add_verdicts("identity suite", [c.as_dict() for c in checks])


def _normalize_block(doc, eng, g, w_max):
    try:
        q, steps = eng.normalize_volume_deformation(g, w_max)
    except (InvariantViolation, ValueError) as exc:
        doc.add_verdicts("volume deformation", [{"name": str(exc),
                                                 "status": "fail"}])
        return
    doc.add_note("normalized factor q", print_polynomial(q))
    verdicts = [{"name": "q(0) = g(0)",
                 "status": "pass" if q.constant_term() == g.constant_term()
                 else "fail"},
                {"name": "q lies in the Casimir ring (certified slicewise)",
                 "status": "pass"}]
    for s in steps:
        verdicts.append({"name": "weight %d residual certified in im d_pi "
                                 "(Casimir part %s)" %
                                 (s.weight, print_polynomial(s.casimir_part)),
                         "status": "pass" if s.certified else "fail"})
    doc.add_verdicts("volume deformation", verdicts)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"],
                        default="text")
    common.add_argument("--output", default=None, help="write the report here")
    common.add_argument("--max-weight", type=int, default=None)

    ap = argparse.ArgumentParser(prog="poisson-forge",
                                 description="exact verification engine for "
                                             "the Lefschetz Poisson homology")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("homology", parents=[common],
                       help="slice dimensions of one degree")
    p.add_argument("--degree", type=int, required=True, choices=range(0, 5))

    p = sub.add_parser("hilbert", parents=[common],
                       help="Hilbert function of one homology group")
    p.add_argument("--group", required=True,
                   choices=["H%d" % k for k in range(5)])

    sub.add_parser("kernels", parents=[common],
                   help="kernel Hilbert functions of delta")

    p = sub.add_parser("division", parents=[common],
                       help="division group slices")
    p.add_argument("--p", type=int, default=2, choices=[1, 2, 3])
    p.add_argument("--max-degree", type=int, default=10)

    p = sub.add_parser("nf", parents=[common],
                       help="normal form against the Jacobian basis")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", required=True,
                   choices=["identities", "theorem1", "kernels", "division",
                            "module-structure", "derham", "all"])

    p = sub.add_parser("normalize", parents=[common],
                       help="volume deformation normalizer")
    p.add_argument("--g", required=True)

    return ap


def run_command(argv):
    """Parse argv and build the report; returns (document, exit_code)."""
    args = build_parser().parse_args(argv)
    return _execute(args, list(argv))


def _execute(args, argv):
    w_max = _working_weight(args)
    echo = []
    skip = False
    for a in argv:
        if skip:
            skip = False
            continue
        if a == "--output":
            skip = True
            continue
        if a.startswith("--output="):
            continue
        echo.append(a)
    doc = ReportDocument(" ".join(["poisson-forge"] + echo), w_max)
    eng = default_engine()

    if args.cmd == "homology":
        _homology_block(doc, eng, args.degree, w_max)
    elif args.cmd == "hilbert":
        k = int(args.group[1])
        doc.add_table("H%d dimensions" % k, ["group", "weight", "dim"],
                      [[args.group, w, eng.homology_dimension(k, w)]
                       for w in range(w_max + 1)])
        doc.add_series("H%d Hilbert function" % k, eng.hilbert_function(k, w_max),
                       H_SERIES[k].expand(w_max), str(H_SERIES[k]))
    elif args.cmd == "kernels":
        _kernels_block(doc, eng, w_max)
    elif args.cmd == "division":
        if args.p != 2 and args.p != 1:
            doc.add_table("D^%d slices" % args.p, ["weight", "dim"],
                          [[w, division_group_dim(
                              lefschetz_problem(args.p, w))]
                           for w in range(args.p, args.max_degree + args.p + 1)])
        else:
            _division_blocks(doc, eng, args.max_degree)
    elif args.cmd == "nf":
        from .normalform import lefschetz_ideal_basis, normal_form
        try:
            poly = parse_polynomial(args.poly)
        except ParseError as exc:
            print("parse error: %s" % exc, file=sys.stderr)
            return None, USAGE_ERROR
        nf = normal_form(poly, lefschetz_ideal_basis(eng.cat))
        doc.add_note("input", print_polynomial(poly))
        doc.add_note("normal form", print_polynomial(nf))
        doc.add_verdicts("normal form", [{"name": "reduction complete",
                                          "status": "pass"}])
    elif args.cmd == "verify":
        suites = ([args.suite] if args.suite != "all" else
                  ["identities", "theorem1", "kernels", "division",
                   "module-structure", "derham"])

        def capped(limit, label):
            if w_max > limit:
                doc.add_note("weight cap",
                             "%s runs at weight %d (requested %d)"
                             % (label, limit, w_max))
            return min(w_max, limit)

        for s in suites:
            if s == "identities":
                _identities_block(doc, eng.cat, capped(8, "identity suite"))
            elif s == "theorem1":
                w = capped(10, "representative verification")
                for k in range(5):
                    _homology_block(doc, eng, k, w)
            elif s == "kernels":
                _kernels_block(doc, eng, w_max)
            elif s == "division":
                _division_blocks(doc, eng, max(w_max - 2, 0))
            elif s == "module-structure":
                _module_structure_block(doc, eng, capped(10, "module structure"))
            elif s == "derham":
                _derham_block(doc, eng, capped(10, "induced de Rham"))
    elif args.cmd == "normalize":
        try:
            g = parse_polynomial(args.g)
        except ParseError as exc:
            print("parse error: %s" % exc, file=sys.stderr)
            return None, USAGE_ERROR
        if w_max > 8:
            doc.add_note("weight cap",
                         "deformation normalizer runs at weight 8 "
                         "(requested %d)" % w_max)
        _normalize_block(doc, eng, g, min(w_max, 8))
    return doc, 0 if doc.passed else 1


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    try:
        doc, code = _execute(args, argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    if doc is not None:
        payload = emit_report(doc, args.format, args.output)
        if args.output is None:
            sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
