"""Command line interface.

Subcommands:
  classify-torus   one JSON record per torus character
  predict          one JSON prediction record per torus character
  verify           run the verification checks for one case or a manifest
  sweep-conjecture level-one sign sweep over type A torus classes
  dump-table       character table as TSV or structured JSON

`verify` exits 0 exactly when no non-inapplicable check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import cached_character_table
from .predictor import predict_gl2, predict_sl2
from .torus import classify_all, make_torus
from .verifier import run_case, run_suite
from .weyl import sweep_classical_signs


def _out_stream(path):
    return open(path, "w") if path else sys.stdout


def _classification_record(tc) -> dict:
    return {
        "theta": list(tc.theta.a),
        "basis_orders": list(tc.theta.group.orders),
        "tau": tc.tau,
        "regular": tc.is_regular,
        "r0": tc.r0,
        "theta0": list(tc.theta0.a),
        "alpha": list(tc.alpha.a),
        "n_minimizing_twists": tc.n_minimizing_twists,
        "general_position": tc.general_position,
        "stabilizer": tc.stab_size,
        "sl_sigma_fixed": tc.sl_sigma_fixed,
        "sl_quadratic": tc.sl_quadratic,
    }


def cmd_classify_torus(args) -> int:
    torus = make_torus(args.p, args.k, args.r, args.mode)
    out = _out_stream(args.out)
    for tc in classify_all(torus, psi_scale=args.psi_scale):
        out.write(json.dumps(_classification_record(tc), sort_keys=True) + "\n")
    if args.out:
        out.close()
    return 0


def cmd_predict(args) -> int:
    torus = make_torus(args.p, args.k, args.r, args.mode)
    q = torus.q
    out = _out_stream(args.out)
    for tc in classify_all(torus):
        pred = (
            predict_gl2(tc, q, args.r)
            if args.flavor == "gl"
            else predict_sl2(tc, q, args.r)
        )
        rec = {"theta": list(tc.theta.a), "flavor": args.flavor}
        rec.update(pred.to_dict())
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    if args.out:
        out.close()
    return 0


def _parse_manifest(path) -> list[tuple]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            kv = dict(tok.split("=", 1) for tok in line.split())
            out.append(
                (
                    int(kv["p"]),
                    int(kv["k"]),
                    int(kv["r"]),
                    kv["flavor"].lower(),
                    kv["mode"].lower(),
                )
            )
    return out


def cmd_verify(args) -> int:
    if args.manifest:
        result = run_suite(_parse_manifest(args.manifest), cache_dir=args.cache_dir)
    else:
        required = [args.p, args.k, args.r, args.flavor, args.mode]
        if any(v is None for v in required):
            print("verify needs --manifest or all of --p --k --r --flavor --mode", file=sys.stderr)
            return 2
        rep = run_case(args.p, args.k, args.r, args.flavor, args.mode,
                       cache_dir=args.cache_dir)
        result = {"all_pass": rep.all_pass(), "cases": [rep.to_dict()], "suite_checks": []}
    text = json.dumps(result, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if result["all_pass"] else 1


def cmd_sweep_conjecture(args) -> int:
    qs = [int(q) for q in args.q.split(",")]
    cases = sweep_classical_signs(args.n_max, qs)
    out = _out_stream(args.out)
    if args.format == "json":
        out.write(json.dumps([c.to_dict() for c in cases], indent=2) + "\n")
    else:
        cols = [
            "flavor", "n", "cycle_type", "q", "p", "dim",
            "dim_p_part", "rk_T", "rk_G", "sign", "classical_sign", "verdict",
        ]
        out.write("\t".join(cols) + "\n")
        for c in cases:
            d = c.to_dict()
            d["cycle_type"] = "+".join(map(str, c.cycle_type))
            out.write("\t".join(str(d[col]) for col in cols) + "\n")
    if args.out:
        out.close()
    bad = [c for c in cases if c.sign != c.classical_sign]
    return 1 if bad else 0


def cmd_dump_table(args) -> int:
    tab = cached_character_table(
        args.p, args.k, args.r, args.mode, args.flavor, args.cache_dir
    )
    out = _out_stream(args.out)
    if args.format == "json":
        out.write(json.dumps(tab.to_json_dict(), sort_keys=True) + "\n")
    else:
        out.write(tab.to_tsv())
    if args.out:
        out.close()
    return 0


def _add_case_args(sp, need_flavor=True, required=True):
    sp.add_argument("--p", type=int, required=required)
    sp.add_argument("--k", type=int, default=1 if not required else None, required=required)
    sp.add_argument("--r", type=int, required=required)
    if need_flavor:
        sp.add_argument("--flavor", choices=["gl", "sl"], required=required)
    sp.add_argument("--mode", choices=["mixed", "equal"], required=required)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="dl2")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify-torus", help="classify all torus characters")
    _add_case_args(sp, need_flavor=False)
    sp.add_argument("--psi-scale", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_classify_torus)

    sp = sub.add_parser("predict", help="predictions for all torus characters")
    _add_case_args(sp)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_predict)

    sp = sub.add_parser("verify", help="run verification checks")
    sp.add_argument("--p", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--flavor", choices=["gl", "sl"])
    sp.add_argument("--mode", choices=["mixed", "equal"])
    sp.add_argument("--manifest")
    sp.add_argument("--report")
    sp.add_argument("--cache-dir")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("sweep-conjecture", help="level-one sign sweep, type A")
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--q", default="2,3,4,5,7,8,9")
    sp.add_argument("--format", choices=["tsv", "json"], default="tsv")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_sweep_conjecture)

    sp = sub.add_parser("dump-table", help="dump a character table")
    _add_case_args(sp)
    sp.add_argument("--format", choices=["tsv", "json"], default="tsv")
    sp.add_argument("--cache-dir")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_dump_table)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
