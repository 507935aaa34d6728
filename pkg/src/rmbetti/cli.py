"""Command-line front end.

Subcommands construct codes, print dimension/distance/weight data, emit
Betti tables and purity verdicts, build and check non-purity certificates,
and run verification sweeps.  Text output is a convenience; JSON is the
contract (stable field names, deterministic byte-for-byte given the same
arguments, timing excluded under --no-timing).

Exit codes: 0 success/match, 2 bad parameters, 3 guard exceeded,
4 verification failure, 5 internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import codes, rm, srres, verify
from .errors import (CertificateError, CrossCheckError, NotPrimePowerError,
                     ParameterError, PreconditionError, TooLargeError)

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_TOO_LARGE = 3
EXIT_VERIFICATION = 4
EXIT_CROSS_CHECK = 5


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmbetti",
        description="Exact Reed-Muller code resolutions: Betti tables, "
                    "purity verdicts, certificates, sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_r=True, r_all=False):
        p.add_argument("--q", type=int, required=True, help="field size (prime power)")
        p.add_argument("--m", type=int, required=True, help="number of variables")
        if with_r:
            if r_all:
                group = p.add_mutually_exclusive_group(required=True)
                group.add_argument("--r", type=int, help="single order r")
                group.add_argument("--r-all", action="store_true",
                                   help="sweep every 0 <= r <= m(q-1)")
            else:
                p.add_argument("--r", type=int, required=True, help="order r")
        p.add_argument("--output", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", type=str, default=None, help="write to this path")
        p.add_argument("--no-timing", action="store_true",
                       help="omit timing_ms from JSON (for byte comparison)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
        p.add_argument("--max-n-betti", type=int, default=None)
        p.add_argument("--max-enum", type=int, default=None)
        p.add_argument("--max-subspaces", type=int, default=None)

    common(sub.add_parser("dim", help="dimension by all four sources"))
    common(sub.add_parser("distance", help="minimum distance: formula and brute force"))
    common(sub.add_parser("ghw", help="generalized Hamming weight profile"))
    p = sub.add_parser("betti", help="graded Betti table")
    common(p)
    p.add_argument("--backend", choices=("fast", "homology", "both"), default="fast")
    p.add_argument("--char", type=int, default=2, help="homology coefficient prime")
    common(sub.add_parser("purity", help="purity verdict vs predicted purity"))
    common(sub.add_parser("certificate", help="build and check a non-purity certificate"))
    p = sub.add_parser("verify-theorem", help="purity characterization sweep")
    common(p, r_all=True)
    p.add_argument("--method", choices=("betti", "certificate", "both"), default="both")
    common(sub.add_parser("verify-mds", help="MDS characterization sweep"), r_all=True)
    return parser


def _guards(args) -> verify.Guards:
    g = verify.DEFAULT_GUARDS
    max_n = g.max_n_betti
    env = os.environ.get("RM_RESOLVE_GUARD_N")
    if env is not None:
        max_n = int(env)
    if getattr(args, "max_n_betti", None) is not None:
        max_n = args.max_n_betti
    return verify.Guards(
        max_n_betti=max_n,
        cross_check_n=g.cross_check_n,
        max_enum=args.max_enum or g.max_enum,
        max_subspaces=args.max_subspaces or g.max_subspaces,
    )


def _report(q, m, r, *, code=None, ghw=None, betti=None, purity=None,
            certificate=None, prediction=None, match=None, details=None,
            guards=None):
    return {
        "params": {"q": q, "m": m, "r": r},
        "code": code,
        "ghw": ghw,
        "betti": betti,
        "purity": purity,
        "certificate": certificate,
        "prediction": prediction,
        "match": match,
        "details": details,
        "guards": guards.to_json_obj() if guards else None,
    }


def _purity_obj(verdict: srres.PurityVerdict):
    return {
        "pure": verdict.pure,
        "type": list(verdict.type) if verdict.type else None,
        "linear": verdict.linear,
        "violations": [[i, list(js)] for i, js in verdict.violations],
    }


def _code_obj(code) -> dict:
    return {"n": code.n, "k": code.k, "d": getattr(code, "d", None)}


# -- command bodies ----------------------------------------------------------


def _cmd_dim(args, guards):
    q, m, r = args.q, args.m, args.r
    code = rm.build_code(q, r, m)
    sources = {
        "double_sum": rm.dim_assmus_key(q, r, m),
        "inclusion_exclusion": rm.dim_inclusion_exclusion(q, r, m),
        "monomial_count": len(rm.monomial_basis(q, r, m)),
        "generator_rank": code.k,
    }
    agree = len(set(sources.values())) == 1
    report = _report(q, m, r, code=_code_obj(code), details=sources,
                     match=agree, guards=guards)
    text = (f"RM_q(r,m) with q={q}, r={r}, m={m}: [{code.n}, {code.k}, {code.d}]\n"
            + "\n".join(f"  {name}: {val}" for name, val in sources.items())
            + f"\n  all sources agree: {agree}")
    return report, text, EXIT_OK if agree else EXIT_CROSS_CHECK


def _cmd_distance(args, guards):
    q, m, r = args.q, args.m, args.r
    code = rm.build_code(q, r, m)
    formula = rm.min_distance_formula(q, r, m)
    brute = None
    if q ** code.k <= guards.max_enum:
        brute = codes.min_weight_bruteforce(code, max_enum=guards.max_enum)
    agree = brute is None or brute == formula
    details = {"formula": formula, "bruteforce": brute,
               "method": "formula+bruteforce" if brute is not None else "formula"}
    report = _report(q, m, r, code=_code_obj(code), details=details,
                     match=agree, guards=guards)
    text = (f"minimum distance of [{code.n}, {code.k}]_{q}: formula {formula}"
            + (f", brute force {brute}" if brute is not None else " (enumeration skipped)"))
    return report, text, EXIT_OK if agree else EXIT_CROSS_CHECK


def _cmd_ghw(args, guards):
    q, m, r = args.q, args.m, args.r
    code = rm.build_code(q, r, m)
    profile = codes.ghw_profile(code)
    report = _report(q, m, r, code=_code_obj(code), ghw=list(profile),
                     guards=guards)
    text = "generalized Hamming weights: " + ", ".join(
        f"d_{i + 1}={d}" for i, d in enumerate(profile))
    return report, text, EXIT_OK


def _cmd_betti(args, guards):
    q, m, r = args.q, args.m, args.r
    code = rm.build_code(q, r, m)
    if code.n > guards.max_n_betti:
        raise TooLargeError(f"n = {code.n} exceeds Betti guard {guards.max_n_betti}")
    if args.backend == "homology":
        table = srres.betti_hochster(code, args.char, max_n=guards.max_n_betti)
    else:
        table = srres.betti_fastpath(code, max_n=guards.max_n_betti)
        if args.backend == "both":
            slow = srres.betti_hochster(code, args.char, max_n=guards.max_n_betti)
            if slow != table:
                raise CrossCheckError("Betti backends disagree")
    verdict = srres.purity_verdict(table)
    report = _report(q, m, r, code=_code_obj(code), betti=table.to_json_obj(),
                     purity=_purity_obj(verdict), guards=guards)
    lines = [f"graded Betti numbers of the [{code.n}, {code.k}]_{q} code:"]
    lines += [f"  beta_{{{i},{j}}} = {b}" for i, j, b in table.rows()]
    lines.append(f"  pure: {verdict.pure}" +
                 (f", type {verdict.type}, linear: {verdict.linear}"
                  if verdict.pure else f", violations: {list(verdict.violations)}"))
    return report, "\n".join(lines), EXIT_OK


def _cmd_purity(args, guards):
    q, m, r = args.q, args.m, args.r
    comp = verify.purity_by_betti(q, m, r, guards)
    predicted = verify.purity_predicate(q, m, r)
    match = comp.verdict.pure == predicted
    report = _report(q, m, r, code=_code_obj(rm.build_code(q, r, m)),
                     betti=comp.table.to_json_obj(),
                     purity=_purity_obj(comp.verdict),
                     prediction={"pure_predicted": predicted},
                     match=match, guards=guards)
    text = (f"purity of (q={q}, m={m}, r={r}): computed {comp.verdict.pure}, "
            f"predicted {predicted}, match: {match}")
    return report, text, EXIT_OK if match else EXIT_VERIFICATION


def _cmd_certificate(args, guards):
    q, m, r = args.q, args.m, args.r
    cert = verify.non_purity_certificate(q, m, r, guards)
    check = verify.check_certificate(cert, guards)
    report = _report(q, m, r,
                     code={"n": cert.n, "k": cert.k, "d": cert.d1},
                     certificate=cert.to_json_dict(),
                     prediction={"pure_predicted": verify.purity_predicate(q, m, r)},
                     match=check.ok, guards=guards)
    text = (f"non-purity certificate for (q={q}, m={m}, r={r}): "
            f"witness weight {cert.weight} > d_1 = {cert.d1}; "
            f"1-minimal weight {cert.one_minimal_weight}; "
            f"re-check {'passed' if check.ok else 'FAILED: ' + ', '.join(check.reasons)}")
    return report, text, EXIT_OK if check.ok else EXIT_VERIFICATION


def _sweep_rows(args, guards, methods, include_mds):
    q, m = args.q, args.m
    rs = None if args.r_all else args.r
    report = verify.sweep(q, m, rs, guards=guards, methods=methods,
                          jobs=args.jobs, include_mds=include_mds)
    return report


def _cmd_verify_theorem(args, guards):
    methods = ("betti", "certificate") if args.method == "both" else (args.method,)
    sweep_report = _sweep_rows(args, guards, methods, include_mds=False)
    obj = sweep_report.to_json_obj()
    report = {"params": {"q": args.q, "m": args.m,
                         "r": "all" if args.r_all else args.r},
              "rows": obj["rows"], "match": obj["match"],
              "guards": guards.to_json_obj()}
    lines = ["q m r  n   k   d  predicted computed cert  match"]
    for row in sweep_report.rows:
        lines.append(
            f"{row.q} {row.m} {row.r}  {row.n:<3} {row.k:<3} {row.d:<3}"
            f" {str(row.pure_predicted):<9} {str(row.pure_computed):<8}"
            f" {str(row.certificate_ok):<5} {row.match}")
    lines.append(f"all rows match: {sweep_report.all_match}")
    code = EXIT_OK if sweep_report.all_match else EXIT_VERIFICATION
    return report, "\n".join(lines), code, sweep_report


def _cmd_verify_mds(args, guards):
    q, m = args.q, args.m
    rs = range(m * (q - 1) + 1) if args.r_all else [args.r]
    rows = [verify.mds_check(q, m, r, guards) for r in rs]
    decided = [row for row in rows if row.match is not None]
    all_match = bool(decided) and all(row.match for row in decided)
    report = {"params": {"q": q, "m": m, "r": "all" if args.r_all else args.r},
              "rows": [{"params": {"q": row.q, "m": row.m, "r": row.r},
                        "code": {"n": row.n, "k": row.k, "d": row.d_formula},
                        "prediction": {"mds_predicted": row.mds_predicted},
                        "mds_computed": row.mds_computed,
                        "ghw": list(row.ghw) if row.ghw else None,
                        "ghw_matches_formula": row.ghw_matches_formula,
                        "shifts_consecutive": row.shifts_consecutive,
                        "match": row.match} for row in rows],
              "match": all_match,
              "guards": guards.to_json_obj()}
    lines = ["q m r  n   k   d  predicted computed match"]
    for row in rows:
        lines.append(f"{row.q} {row.m} {row.r}  {row.n:<3} {row.k:<3} "
                     f"{row.d_formula:<3} {str(row.mds_predicted):<9} "
                     f"{str(row.mds_computed):<8} {row.match}")
    lines.append(f"all decided rows match: {all_match}")
    return report, "\n".join(lines), EXIT_OK if all_match else EXIT_VERIFICATION


# -- output plumbing ----------------------------------------------------------


def _csv_text(args, report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if args.command == "betti":
        writer.writerow(["i", "j", "beta"])
        for row in report["betti"]:
            writer.writerow([row["i"], row["j"], row["beta"]])
    elif args.command == "ghw":
        writer.writerow(["i", "d_i"])
        for i, d in enumerate(report["ghw"], start=1):
            writer.writerow([i, d])
    elif args.command in ("verify-theorem", "verify-mds"):
        writer.writerow(["q", "m", "r", "n", "k", "d", "predicted",
                         "computed", "certificate_ok", "match"])
        for row in report["rows"]:
            pred = row["prediction"]
            predicted = pred.get("pure_predicted", pred.get("mds_predicted"))
            if args.command == "verify-theorem":
                computed = (row["purity"] or {}).get("pure")
                cert_ok = (row["certificate"] or {}).get("check_passed")
            else:
                computed = row["mds_computed"]
                cert_ok = None
            writer.writerow([row["params"]["q"], row["params"]["m"],
                             row["params"]["r"], row["code"]["n"],
                             row["code"]["k"], row["code"]["d"],
                             predicted, computed, cert_ok, row["match"]])
    else:
        raise ParameterError(f"--output csv is not supported for '{args.command}'")
    return buf.getvalue()


def _emit(args, report, text, started) -> None:
    if args.output == "json":
        if not args.no_timing:
            report["timing_ms"] = int((time.monotonic() - started) * 1000)
        payload = json.dumps(report, indent=2) + "\n"
    elif args.output == "csv":
        payload = _csv_text(args, report)
    else:
        payload = text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    guards = _guards(args)
    handlers = {
        "dim": _cmd_dim,
        "distance": _cmd_distance,
        "ghw": _cmd_ghw,
        "betti": _cmd_betti,
        "purity": _cmd_purity,
        "certificate": _cmd_certificate,
        "verify-mds": _cmd_verify_mds,
    }
    try:
        if args.command == "verify-theorem":
            report, text, exit_code, _ = _cmd_verify_theorem(args, guards)
        else:
            report, text, exit_code = handlers[args.command](args, guards)
        _emit(args, report, text, started)
        return exit_code
    except (NotPrimePowerError, ParameterError, PreconditionError, ValueError,
            IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except TooLargeError as exc:
        print(json.dumps({"error": "too_large", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_TOO_LARGE
    except CertificateError as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except CrossCheckError as exc:
        print(f"internal cross-check mismatch: {exc}", file=sys.stderr)
        return EXIT_CROSS_CHECK


if __name__ == "__main__":
    sys.exit(main())
