"""Command line interface: identities, enumerate, certify, bound, gallery."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import wn
from .certify import THETA_LIMIT, bound_theta, certify_instance
from .config import ConfigError, InstanceConfig, load_config
from .poly import set_factor_seed
from .report import (
    cert_dict,
    instance_header,
    record_dict,
    unit_summary,
    weighted_dict,
    write_outputs,
)
from .solver import BudgetExceeded, enumerate_solutions, solve_weighted

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


# --- pipelines


def run_enumerate(cfg: InstanceConfig, jobs: int = 1):
    report = instance_header(cfg)
    if cfg.is_unit_equation:
        sols = enumerate_solutions(cfg.group, cfg.box, jobs=jobs)
        report["summary"] = unit_summary(cfg, sols)
        passed = report["summary"]["passed"]
    else:
        vol = solve_weighted(cfg.a, cfg.b, cfg.group, cfg.box, jobs=jobs)
        sols = vol.solutions
        report["weighted"] = weighted_dict(vol)
        passed = report["weighted"]["passed"]
    report["solutions"] = [record_dict(s) for s in sols]
    report["passed"] = passed
    return report, sols, passed


def run_certify(cfg: InstanceConfig, theta=None, N_list=None, jobs: int = 1):
    theta = cfg.theta if theta is None else theta
    N_list = cfg.N_list if N_list is None else tuple(N_list)
    report = instance_header(cfg)
    sols = enumerate_solutions(cfg.group, cfg.box, jobs=jobs)
    report["summary"] = unit_summary(cfg, sols)
    cert = certify_instance(cfg.group, sols, theta, N_list, box=cfg.box)
    report["certify"] = cert_dict(cert)
    passed = report["summary"]["passed"] and cert.passed
    if not cfg.is_unit_equation:
        vol = solve_weighted(cfg.a, cfg.b, cfg.group, cfg.box, jobs=jobs)
        report["weighted"] = weighted_dict(vol)
        passed = passed and report["weighted"]["passed"]
    report["solutions"] = [record_dict(s) for s in sols]
    report["passed"] = passed
    return report, sols, passed


def run_identities(nmax: int, primes):
    rows = []
    for N in range(0, nmax + 1):
        W = wn.wn_build(N)
        row = {
            "N": N,
            "coeffs_agree": W.coeffs == wn._wn_coeffs_incremental(N),
            "special_value": str(wn.wn_special_value(N)),
        }
        if N >= 1:
            row["antisymmetry"] = wn.wn_antisymmetry_check(N)
            row["syzygy"] = wn.wn_syzygy_check(N)
            row["c_N"] = str(wn.cn_compute(N))
        rows.append(row)
    windows = []
    for p in primes:
        rep = wn.cn_mod_p_window(p)
        windows.append({"p": p, "table": [[N, r] for N, r in rep.table], "passed": rep.passed})
    passed = all(r["coeffs_agree"] and r.get("antisymmetry", True) and r.get("syzygy", True) for r in rows)
    passed = passed and all(w["passed"] for w in windows)
    return {"schema": 1, "nmax": nmax, "rows": rows, "windows": windows, "passed": passed}, passed


def run_bound(theta: Fraction, r: int):
    rows = []
    for i in range(r + 1):
        b = bound_theta(theta, i)
        rows.append({"r": i, "value": f"{b.value:.6f}", "upper": f"{float(b.upper):.6f}",
                     "bound": b.bound, "holds": b.holds})
    # the count is only claimed in the limit theta -> 1/9
    asserted = theta == THETA_LIMIT
    passed = all(row["holds"] for row in rows) if asserted else True
    return {"schema": 1, "theta": str(theta), "asserted": asserted, "rows": rows, "passed": passed}, passed


def gallery_paths() -> list[Path]:
    root = resources.files("unitcount") / "gallery"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".toml"))


def _gallery_one(path: Path):
    cfg = load_config(path)
    report, sols, passed = run_certify(cfg)
    return report, sols, passed


def run_gallery(jobs: int = 1):
    paths = gallery_paths()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_gallery_one, paths))
    else:
        results = [_gallery_one(p) for p in paths]
    reports = [r for r, _, _ in results]
    passed = all(ok for _, _, ok in results)
    return {"schema": 1, "instances": reports, "passed": passed}, results, passed


# --- human-readable summaries


def _print_instance(report, out=None):
    out = out or sys.stdout
    s = report.get("summary")
    name = report["instance"]
    print(f"instance {name}: p={report['field']['p']} k={report['field']['k']} "
          f"rank={report['group']['rank']} B={report['search']['B']}", file=out)
    if s:
        print(f"  solutions {s['solutions']}, primitive {s['primitive']} <= {s['primitive_bound']}, "
              f"not in K^p {s['not_in_Kp']} <= {s['not_in_Kp_bound']}", file=out)
    v = report.get("weighted")
    if v:
        w = v["power_in_G"]
        if v["excluded"]:
            print(f"  (a,b)^n in G with n={w['n']}, gcd(n,p)=1: excluded case "
                  f"({v['count']} solutions in the box, no bound claimed)", file=out)
        else:
            print(f"  a*x + b*y = 1: {v['count']} solutions <= {v['bound']}", file=out)
    c = report.get("certify")
    if c:
        for chk in c["checks"]:
            extra = f" skipped={chk['skipped']}" if chk["skipped"] else ""
            print(f"  {chk['name']:<22} {chk['status']:<8} checked={chk['checked']}{extra}", file=out)
    print(f"  {'PASS' if report['passed'] else 'FAIL'} ({report['search']['completeness']})", file=out)


def _print_identities(rep):
    print(f"{'N':>3} {'coef':>5} {'anti':>5} {'syz':>5}  W_N(2,-1) / c_N")
    for r in rep["rows"]:
        print(f"{r['N']:>3} {str(r['coeffs_agree']):>5} {str(r.get('antisymmetry', '-')):>5} "
              f"{str(r.get('syzygy', '-')):>5}  {r['special_value']} / {r.get('c_N', '-')}")
    for w in rep["windows"]:
        status = "pass" if w["passed"] else "FAIL"
        if not w["table"]:
            status = "pass (empty window)"
        print(f"p={w['p']}: N in {[n for n, _ in w['table']]}, c_N mod p = {[r for _, r in w['table']]}: {status}")
    print("PASS" if rep["passed"] else "FAIL")


def _print_bound(rep):
    for row in rep["rows"]:
        rel = "<" if row["holds"] else ">="
        print(f"theta={rep['theta']} r={row['r']}: {row['value']} (upper {row['upper']}) {rel} {row['bound']}")
    print("PASS" if rep["passed"] else "FAIL")


# --- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for polynomial factorization")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", type=Path, default=None, help="directory for report.json / solutions.csv")
    ap = argparse.ArgumentParser(prog="unitcount", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities", parents=[common], help="W_N identities and c_N windows")
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--primes", type=_int_list, default=[11, 13, 97])

    p = sub.add_parser("enumerate", parents=[common], help="search a box for solutions")
    p.add_argument("--config", type=Path, required=True)

    p = sub.add_parser("certify", parents=[common], help="enumerate and check every inequality")
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--theta", type=_fraction, default=None)
    p.add_argument("--N", dest="N_list", type=_int_list, default=None)

    p = sub.add_parser("bound", parents=[common], help="evaluate the theta-parameterized count")
    p.add_argument("--theta", type=_fraction, default=THETA_LIMIT)
    p.add_argument("--r", type=int, default=0)

    sub.add_parser("gallery", parents=[common], help="run every bundled instance")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        set_factor_seed(args.seed)
    try:
        if args.command == "identities":
            rep, ok = run_identities(args.nmax, args.primes)
            _print_identities(rep)
            if args.out:
                write_outputs(args.out, rep)
        elif args.command == "bound":
            rep, ok = run_bound(args.theta, args.r)
            _print_bound(rep)
            if args.out:
                write_outputs(args.out, rep)
        elif args.command in ("enumerate", "certify"):
            cfg = load_config(args.config)
            if args.command == "enumerate":
                rep, sols, ok = run_enumerate(cfg, jobs=args.jobs)
            else:
                if args.theta is not None and not 0 < args.theta < THETA_LIMIT:
                    raise ConfigError(f"--theta {args.theta} is not in (0, 1/9)")
                rep, sols, ok = run_certify(cfg, args.theta, args.N_list, jobs=args.jobs)
            _print_instance(rep)
            if args.out:
                write_outputs(args.out, rep, sols)
        else:
            rep, results, ok = run_gallery(jobs=args.jobs)
            for r in rep["instances"]:
                _print_instance(r)
            print("GALLERY PASS" if ok else "GALLERY FAIL")
            if args.out:
                write_outputs(args.out, rep)
                for r, sols, _ in results:
                    write_outputs(args.out / r["instance"], r, sols)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ArithmeticError, AssertionError) as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
