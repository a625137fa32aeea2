"""Command-line front end.

Subcommands:

  compute    compute a generalized inverse and verify its defining equations
  verify     check equation labels for a candidate inverse
  rol        reverse-order-law report for the M-weighted core inverse
  decompose  weighted core-EP decomposition (float backend)
  selftest   run the seeded property-suite catalogue

Exit codes: 0 success, 2 requested inverse does not exist, 1 input or
usage error.  Reports are printed as ``key = value`` lines; ``--out``
writes a JSON document with the result matrix and the report.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms, bilateral, classical, indexmp, matio, selftest, wcore, wfamily
from . import matrix as matmod
from .matrix import (BackendError, ExistenceError, Matrix, MetricMatrix,
                     ShapeError, VerificationError, make_context)

INVERSES = ("mp", "wmp", "group", "drazin", "core", "dual-core", "core-ep",
            "m-core", "n-dual-core", "w-drazin", "w-core-ep", "w-1231k",
            "w-124k1", "w-k-mp", "w-mp-k", "w-mp-k-mp", "bilateral")

_LABEL_ALIASES = {"1231kW": "1231kW", "124kW1": "124kW1"}


def _add_common(p):
    p.add_argument("--backend", choices=("exact", "float"),
                   help="convert inputs to this backend after loading")
    p.add_argument("--tol", type=float,
                   help="float-backend comparison tolerance (default 1e-9)")
    p.add_argument("--out", help="write the JSON result document here")


def build_parser():
    ap = argparse.ArgumentParser(prog="wginv",
                                 description="weighted generalized inverses")
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute a generalized inverse")
    pc.add_argument("--inverse", required=True, choices=INVERSES)
    pc.add_argument("--matrix", required=True)
    pc.add_argument("--weight")
    pc.add_argument("--metric-m", dest="metric_m")
    pc.add_argument("--metric-n", dest="metric_n")
    pc.add_argument("--param", action="append", default=[],
                    help="parameter matrix file (repeatable)")
    _add_common(pc)

    pv = sub.add_parser("verify", help="verify equation labels")
    pv.add_argument("--matrix", required=True)
    pv.add_argument("--candidate", required=True)
    pv.add_argument("--weight")
    pv.add_argument("--metric-m", dest="metric_m")
    pv.add_argument("--metric-n", dest="metric_n")
    pv.add_argument("--labels", default="all",
                    help="comma list of labels, 'all', or the composite "
                         "labels 1231kW / 124kW1")
    pv.add_argument("--k", type=int, help="exponent for k-indexed labels")
    _add_common(pv)

    pr = sub.add_parser("rol", help="reverse-order-law report")
    pr.add_argument("--a", required=True)
    pr.add_argument("--b", required=True)
    pr.add_argument("--metric-m", dest="metric_m", required=True)
    pr.add_argument("--dual", action="store_true",
                    help="check the N-weighted dual-core law instead")
    _add_common(pr)

    pd = sub.add_parser("decompose", help="weighted core-EP decomposition")
    pd.add_argument("--matrix", required=True)
    pd.add_argument("--weight", required=True)
    _add_common(pd)

    ps = sub.add_parser("selftest", help="run the property-suite catalogue")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--instances", type=int, default=6)
    return ap


def _load(path, backend):
    return matio.read_matrix(path, backend)


def _metric(path, backend):
    return MetricMatrix(_load(path, backend))


def _report_from_ver(rep) -> dict:
    out = {e.label: {"holds": e.holds, "residual": e.residual}
           for e in rep.entries}
    if rep.skipped:
        out["skipped"] = ",".join(rep.skipped)
    out["overall"] = rep.overall
    return out


def _compute(args) -> tuple:
    """Returns (result matrix, report dict)."""
    backend = args.backend
    name = args.inverse
    a = _load(args.matrix, backend)

    def need(flag, value):
        if value is None:
            raise ValueError(f"--inverse {name} requires --{flag}")
        return value

    if name in ("mp", "group", "drazin", "core", "dual-core", "core-ep"):
        fn = {"mp": classical.moore_penrose, "group": classical.group_inverse,
              "drazin": classical.drazin, "core": classical.core,
              "dual-core": classical.dual_core, "core-ep": classical.core_ep}[name]
        x = fn(a)
        labels = {"mp": ["1", "2", "3", "4"], "group": ["1", "2", "5"],
                  "drazin": ["1k", "2", "5"], "core": ["1", "2", "3", "6", "7"],
                  "dual-core": ["1", "2", "4", "8", "9"],
                  "core-ep": ["1k", "2", "7"]}[name]
        return x, _report_from_ver(axioms.check_all(labels, a, x, tol=args.tol))

    if name == "wmp":
        m = _metric(need("metric-m", args.metric_m), backend)
        n = _metric(need("metric-n", args.metric_n), backend)
        x = classical.weighted_mp(a, m, n)
        rep = axioms.check_all(["1", "2"], a, x, tol=args.tol).entries + (
            axioms.check("3M", a, x, metric=m, tol=args.tol),
            axioms.check("4N", a, x, metric_n=n, tol=args.tol))
        return x, _report_from_ver(axioms.VerificationReport(tuple(rep)))

    if name in ("m-core", "n-dual-core"):
        key = "metric-m" if name == "m-core" else "metric-n"
        mfile = args.metric_m if name == "m-core" else args.metric_n
        metric = _metric(need(key, mfile), backend)
        if name == "m-core":
            if args.param:
                lblock = _load(args.param[0], backend)
                x = wcore.m_weighted_core(a, metric, "algorithm1", lblock)
            else:
                x = wcore.m_weighted_core(a, metric)
            rep = (axioms.check("3M", a, x, metric=metric, tol=args.tol),
                   axioms.check("6", a, x, tol=args.tol),
                   axioms.check("7", a, x, tol=args.tol))
        else:
            x = wcore.n_weighted_dual_core(a, metric)
            rep = (axioms.check("4N", a, x, metric_n=metric, tol=args.tol),
                   axioms.check("8", a, x, tol=args.tol),
                   axioms.check("9", a, x, tol=args.tol))
        return x, _report_from_ver(axioms.VerificationReport(rep))

    w = _load(need("weight", args.weight), backend)
    ctx = make_context(a, w)
    if name == "w-drazin":
        x = wfamily.w_drazin(ctx)
        labels = ["2W", "5W", axioms.EquationLabel("1kW", ctx.kappa)]
        return x, _report_from_ver(
            axioms.check_all(labels, a, x, ctx=ctx, tol=args.tol))
    if name == "w-core-ep":
        x = wfamily.w_core_ep(ctx)
        labels = ["3W", "6W", axioms.EquationLabel("1kW", ctx.kappa)]
        return x, _report_from_ver(
            axioms.check_all(labels, a, x, ctx=ctx, tol=args.tol))
    if name == "w-1231k":
        if args.param:
            x = wfamily.family_member_w1231k(ctx, _load(args.param[0], backend))
        else:
            x = wfamily.canonical_w1231k(ctx)
        return x, _report_from_ver(wfamily.is_w1231k(ctx, x, ctx.kappa,
                                                     tol=args.tol))
    if name == "w-124k1":
        if args.param:
            x = wfamily.family_member_w124k1(ctx, _load(args.param[0], backend))
        else:
            x = wfamily.canonical_w124k1(ctx)
        return x, _report_from_ver(wfamily.is_w124k1(ctx, x, ctx.kappa,
                                                     tol=args.tol))
    if name in ("w-k-mp", "w-mp-k", "w-mp-k-mp"):
        which = {"w-k-mp": "k-mp", "w-mp-k": "mp-k", "w-mp-k-mp": "mp-k-mp"}[name]
        x = {"k-mp": indexmp.w_k_mp, "mp-k": indexmp.w_mp_k,
             "mp-k-mp": indexmp.w_mp_k_mp}[which](ctx)
        systems = indexmp.check_characterizations(ctx, which, x)
        return x, {k: v for k, v in systems.items()}
    if name == "bilateral":
        if args.param:
            x1 = _load(args.param[0], backend)
            x2 = _load(args.param[1], backend) if len(args.param) > 1 else x1
        else:
            x1 = x2 = wfamily.waw_mp(ctx)
        spec = bilateral.bilateral_spec(ctx, x1, x2)
        x = bilateral.bilateral(ctx, spec)
        report = {
            "x1_class": ",".join(sorted(spec.x1_class)),
            "x2_class": ",".join(sorted(spec.x2_class)),
            "self_dual": bilateral.self_duality(ctx, spec).self_dual,
        }
        if "2W" in spec.x1_class and "1W" in spec.x2_class:
            bilateral.solve_bilateral_system(ctx, spec)
            report["uniqueness_system"] = True
        return x, report
    raise ValueError(f"unhandled inverse {name}")


def cmd_compute(args) -> int:
    if args.tol is not None:
        matmod.FLOAT_EQ_TOL = args.tol
    x, report = _compute(args)
    doc = {"inverse": args.inverse, "matrix": matio.matrix_to_obj(x),
           "report": report}
    for line in matio.kv_lines("", {"inverse": args.inverse, "report": report}):
        print(line)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    else:
        print("matrix =", json.dumps(matio.matrix_to_obj(x)))
    overall = report.get("overall", report.get("all_equal", True))
    return 0 if overall else 2


def cmd_verify(args) -> int:
    if args.tol is not None:
        matmod.FLOAT_EQ_TOL = args.tol
    backend = args.backend
    a = _load(args.matrix, backend)
    x = _load(args.candidate, backend)
    ctx = None
    if args.weight:
        ctx = make_context(a, _load(args.weight, backend))
    metric = _metric(args.metric_m, backend) if args.metric_m else None
    metric_n = _metric(args.metric_n, backend) if args.metric_n else None
    wanted = args.labels.strip()
    if wanted == "all":
        rep = axioms.classify(a, x, ctx=ctx, metric=metric, metric_n=metric_n,
                              k=args.k, tol=args.tol)
    elif wanted in ("1231kW", "124kW1"):
        if ctx is None:
            raise ValueError(f"label {wanted} requires --weight")
        k = args.k if args.k is not None else ctx.kappa
        fn = wfamily.is_w1231k if wanted == "1231kW" else wfamily.is_w124k1
        rep = fn(ctx, x, k, tol=args.tol)
    else:
        labels = [axioms.EquationLabel(tag, args.k if tag in ("1k", "1kW", "kW1")
                                       else None)
                  for tag in wanted.split(",") if tag]
        rep = axioms.check_all(labels, a, x, ctx=ctx, metric=metric,
                               metric_n=metric_n, tol=args.tol)
    for line in matio.kv_lines("label", _report_from_ver(rep)):
        print(line)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(_report_from_ver(rep), fh, indent=1)
            fh.write("\n")
    return 0 if rep.overall else 2


def cmd_rol(args) -> int:
    if args.tol is not None:
        matmod.FLOAT_EQ_TOL = args.tol
    backend = args.backend
    a = _load(args.a, backend)
    b = _load(args.b, backend)
    metric = _metric(args.metric_m, backend)
    rep = (wcore.check_rol_n_dual if args.dual else wcore.check_rol_m_core)(
        a, b, metric)
    data = {
        "rol_holds": rep.rol_holds,
        "range_incl_1": rep.range_incl_1.holds,
        "range_incl_2": rep.range_incl_2.holds,
        "commute_m": rep.commute_m,
        "commute_plain": rep.commute_plain,
        "c_membership_3M": rep.c_membership[0],
        "c_membership_6": rep.c_membership[1],
        "range_star_cond": rep.range_star_cond,
        "ind_a": rep.indices[0], "ind_b": rep.indices[1],
        "ind_ab": rep.indices[2],
    }
    for line in matio.kv_lines("rol", data):
        print(line)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, indent=1)
            fh.write("\n")
    return 0


def cmd_decompose(args) -> int:
    backend = args.backend or "float"
    a = _load(args.matrix, backend)
    w = _load(args.weight, backend)
    ctx = make_context(a, w)
    dec = wfamily.wcep_decompose(ctx, tol=args.tol)
    from .matrix import FLOAT, block
    r = dec.r_split
    m, n = a.shape
    recon_a = (dec.u @ block([[dec.a1, dec.a2],
                              [Matrix.zeros(m - r, r, FLOAT), dec.a3]]) @ dec.v.H
               - a).norm()
    recon_w = (dec.v @ block([[dec.w1, dec.w2],
                              [Matrix.zeros(n - r, r, FLOAT), dec.w3]]) @ dec.u.H
               - w).norm()
    eye_m = Matrix.eye(m, FLOAT)
    eye_n = Matrix.eye(n, FLOAT)
    info = {
        "r": r, "kappa": ctx.kappa,
        "unitarity_u": (dec.u @ dec.u.H - eye_m).norm(),
        "unitarity_v": (dec.v @ dec.v.H - eye_n).norm(),
        "reconstruction_residual": recon_a + recon_w,
        "nilpotency_n": matmod.mat_pow(dec.nblk, max(ctx.kappa, 1)).norm(),
        "nilpotency_t": matmod.mat_pow(dec.tblk, max(ctx.kappa, 1)).norm(),
    }
    for line in matio.kv_lines("decompose", info):
        print(line)
    if args.out:
        doc = {"info": info}
        for key in ("u", "v", "a1", "a2", "a3", "w1", "w2", "w3"):
            doc[key] = matio.matrix_to_obj(getattr(dec, key))
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    return 0


def cmd_selftest(args) -> int:
    results = selftest.run_all(seed=args.seed, instances=args.instances)
    width = max(len(k) for k in results)
    failures = 0
    for name, (ok, total) in results.items():
        status = "pass" if ok == total else "FAIL"
        failures += ok != total
        print(f"{name:<{width}}  {ok:>3}/{total:<3}  {status}")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "rol":
            return cmd_rol(args)
        if args.command == "decompose":
            return cmd_decompose(args)
        if args.command == "selftest":
            return cmd_selftest(args)
    except ExistenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ShapeError, BackendError, ArithmeticError, ValueError,
            OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
