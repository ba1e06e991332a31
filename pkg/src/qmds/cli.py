"""Command-line entry point: ``qmds <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .gf import FieldError, GF, extension_for
from .gfla import BudgetExceeded, LinearCode, PairCode, WeightDistribution
from .gfla.enumeration import default_budget, set_workers
from .mdsgen import code_C, check_lemma1, check_lemma2
from .puncture import (
    ShorteningError,
    code_distribution,
    puncture_code_definition,
    shorten_to_length,
)
from .qecc import (
    ConstructionError,
    QuantumCode,
    family_theorem3,
    family_theorem4,
    from_symplectic,
    singleton_defect,
)
from .sweep import sweep_mds
from .table1 import format_weights, reproduce_table1

log = logging.getLogger("qmds")

CSV_HELP = """\
CSV columns:
  construct  code,n,k,d,q,self_orthogonal,defect,verified,method,provenance
  table1     q,mu,qecc,qecc_status,pcode,pcode_status,weights,weights_exact,weights_status,status
  shorten    r,k_prime,d_prime,k_bound,verified,method,support,witness
  sweep-mds  q,n,d,code,defect,verified,method,brute_force,ok
  weights    weight,count
  verify     check,value

Environment: QMDS_BUDGET (enumeration budget, default 2^31 codewords),
QMDS_WORKERS (numba threads).
"""


class CliError(Exception):
    pass


# --- output ------------------------------------------------------------------------


def _render(payload: dict, rows: list[dict], columns: list[str], fmt: str, title: str = "") -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, default=str) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        return buf.getvalue()
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(x[i]) for x in cells]) for i, c in enumerate(columns)]
    lines = [title] if title else []
    lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)))
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x[i].ljust(widths[i]) for i in range(len(columns))) for x in cells]
    for key, value in payload.get("summary", {}).items():
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, rows: list[dict], columns: list[str], title: str = "") -> None:
    text = _render(payload, rows, columns, args.format, title)
    if args.out:
        Path(args.out).write_text(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_quantum(path: str) -> QuantumCode:
    obj = _load_json(path)
    obj = obj.get("code", obj)
    if "stabilizer" not in obj:
        raise CliError(f"{path} does not hold a quantum code")
    return QuantumCode.from_json(obj)


# --- commands ----------------------------------------------------------------------


def _code_row(Q: QuantumCode) -> dict:
    cert = Q.certificate
    return {
        "code": str(Q), "n": Q.n, "k": Q.k, "d": Q.d, "q": Q.q,
        "self_orthogonal": Q.stabilizer.is_self_orthogonal(),
        "defect": singleton_defect(Q.params),
        "verified": cert.verified if cert else False,
        "method": cert.method if cert else "",
        "provenance": Q.provenance,
    }


def cmd_construct(args) -> None:
    q, mu = args.q, args.mu
    GF(q)
    if args.kind == "css":
        if not 0 <= mu or 2 * mu >= q - 1:
            raise CliError(f"mu={mu} out of range: css needs 0 <= mu < (q-1)/2 = {(q - 1) / 2}")
        full, short = family_theorem3(GF(q), mu, args.budget)
    else:
        if not 0 <= mu < q - 1:
            raise CliError(f"mu={mu} out of range: hermitian needs 0 <= mu < q-1 = {q - 1}")
        full, short = family_theorem4(extension_for(q), mu, args.budget, args.method)
    Q = short if args.shortened else full
    row = _code_row(Q)
    payload = {"code": Q.to_json(), "report": row}
    _emit(args, payload, [row], list(row), f"{args.kind} construction, q={q}, mu={mu}")


def cmd_table1(args) -> None:
    t0 = time.time()
    reports = reproduce_table1(tuple(args.q), args.budget, args.samples)
    rows = []
    for rep in reports:
        j = rep.to_json()
        rows.append({
            "q": rep.q, "mu": rep.mu,
            "qecc": "[[{},{},{}]]_{}".format(*j["qecc"], rep.q),
            "qecc_status": rep.qecc_status,
            "pcode": "[{},{},{}]_{}".format(*(x if x is not None else "?" for x in j["pcode"]), rep.q),
            "pcode_status": rep.pcode_status,
            "weights": j["weights"] if rep.support.exact else j["weights"] + " (sampled)",
            "weights_exact": rep.support.exact,
            "weights_status": rep.weights_status,
            "status": rep.status,
        })
    counts = {s: sum(r["status"] == s for r in rows) for s in ("MATCH", "MISMATCH", "UNVERIFIED")}
    payload = {"rows": [r.to_json() for r in reports], "summary": {**counts, "seconds": round(time.time() - t0, 1)}}
    cols = ["q", "mu", "qecc", "qecc_status", "pcode", "pcode_status", "weights", "weights_status", "status"]
    _emit(args, payload, rows, cols if args.format == "text" else list(rows[0]) if rows else cols,
          "Shortenings of quantum MDS codes of length q^2")


def cmd_shorten(args) -> None:
    Q = _load_quantum(args.code_file)
    if args.r <= 0:
        raise CliError("r must be positive")
    if args.r > Q.n:
        raise CliError(f"r={args.r} exceeds the code length {Q.n}")
    P = puncture_code_definition(Q.stabilizer)
    try:
        res = shorten_to_length(Q, args.r, budget=args.budget, P=P, method=args.method)
    except ShorteningError as exc:
        raise CliError(f"r={args.r} is not achievable: {exc}") from exc
    cert = res.code.certificate
    row = {
        "r": args.r, "code": str(res.code), "k_prime": res.k_prime, "d_prime": res.d_prime,
        "k_bound": res.k_bound, "verified": cert.verified, "method": cert.method,
        "support": " ".join(map(str, res.support)), "witness": " ".join(map(str, res.witness.tolist())),
    }
    payload = {"source": str(Q), "result": res.to_json(), "code": res.code.to_json()}
    _emit(args, payload, [row], list(row), f"shortening {Q} to length {args.r}")


def cmd_sweep(args) -> None:
    entries = sweep_mds(args.q_max, args.budget, args.q_min, args.brute_force_limit)
    rows = [e.to_json() for e in entries]
    summary = {"instances": len(rows), "ok": sum(r["ok"] for r in rows),
               "brute_force": sum(r["brute_force"] for r in rows)}
    cols = ["q", "n", "d", "code", "defect", "verified", "method", "brute_force", "ok"]
    _emit(args, {"entries": rows, "summary": summary}, rows, cols, "QECC(n, n-2d+2, d, q), 3 <= n <= q")


def _target_code(args) -> tuple[str, LinearCode | PairCode]:
    if args.code_file:
        obj = _load_json(args.code_file)
        obj = obj.get("code", obj)
        if "stabilizer" in obj:
            Q = QuantumCode.from_json(obj)
            if args.target == "stabilizer":
                return f"stabilizer of {Q}", Q.stabilizer
            return f"P(C) of {Q}", puncture_code_definition(Q.stabilizer)
        if "r" in obj:
            return "pair code", PairCode.from_json(obj)
        return "linear code", LinearCode.from_json(obj)
    if args.q is None or args.mu is None:
        raise CliError("give a code file or --q and --mu")
    if args.kind == "css":
        if args.target == "classical":
            return f"C^({args.q},{args.mu})", code_C(GF(args.q), args.mu)
        Q, _ = family_theorem3(GF(args.q), args.mu, args.budget)
    else:
        if args.target == "classical":
            return f"C^({args.q ** 2},{args.mu})", code_C(extension_for(args.q).ext, args.mu)
        Q, _ = family_theorem4(extension_for(args.q), args.mu, args.budget)
    if args.target == "stabilizer":
        return f"stabilizer of {Q}", Q.stabilizer
    return f"P(C) of {Q}", puncture_code_definition(Q.stabilizer)


def cmd_weights(args) -> None:
    t0 = time.time()
    label, C = _target_code(args)
    if isinstance(C, PairCode):
        dist: WeightDistribution = C.weight_distribution(args.budget)
        method = "exhaustive"
    else:
        dist, method = code_distribution(C, args.budget, args.method)
    rows = [{"weight": w, "count": c} for w, c in enumerate(dist.counts) if c]
    k = C.r if isinstance(C, PairCode) else C.k
    summary = {"code": f"{label}: n={C.n}, k={k}, q={C.field.q}", "method": method,
               "support": format_weights(w for w in dist.support if w), "total": dist.total,
               "seconds": round(time.time() - t0, 1)}
    _emit(args, {"distribution": dist.to_json(), "summary": summary}, rows, ["weight", "count"], label)


def cmd_verify(args) -> None:
    Q = _load_quantum(args.code_file)
    C = Q.stabilizer
    checks = {"claimed": str(Q), "self_orthogonal": C.is_self_orthogonal(),
              "k_consistent": Q.k == C.n - C.r}
    if checks["self_orthogonal"]:
        R = from_symplectic(C, budget=args.budget, method=args.method, designed=Q.d)
        cert = R.certificate
        checks.update({"computed": str(R), "distance_verified": cert.verified,
                       "method": cert.method, "pure": cert.pure,
                       "distance_matches": cert.d == Q.d if cert.verified else "unknown"})
        try:
            checks["singleton_defect"] = singleton_defect(R.params)
        except ValueError as exc:
            checks["singleton_defect"] = f"invalid: {exc}"
    rows = [{"check": k, "value": v} for k, v in checks.items()]
    _emit(args, {"checks": checks}, rows, ["check", "value"], f"verification of {args.code_file}")


def cmd_lemmas(args) -> None:
    rows = []
    for q in range(2, args.q_max + 1):
        try:
            F = GF(q)
        except FieldError:
            continue
        for mu in range(q - 1):
            rows.append({"q": q, "mu": mu, "lemma": "euclidean", "holds": check_lemma1(F, mu)})
        if q * q <= args.ext_max:
            ctx = extension_for(q)
            for mu in range(q + 1):
                rows.append({"q": q, "mu": mu, "lemma": "hermitian", "holds": check_lemma2(ctx, mu)})
    _emit(args, {"rows": rows}, rows, ["q", "mu", "lemma", "holds"], "self-orthogonality checks")


# --- parser ----------------------------------------------------------------------


def _positive_budget(text: str) -> int:
    v = int(float(text))
    if v < 1:
        raise argparse.ArgumentTypeError("budget must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--budget", type=_positive_budget, default=None,
                        help="max codewords per enumeration (default $QMDS_BUDGET or 2^31)")
    common.add_argument("--workers", type=int, default=None, help="numba threads (default $QMDS_WORKERS)")
    common.add_argument("-v", "--verbose", action="store_true")
    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=["auto", "exhaustive", "macwilliams"], default="auto")

    parser = argparse.ArgumentParser(prog="qmds", description="Quantum MDS code constructions and checks.",
                                     epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"qmds {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, method], help="build a CSS or Hermitian quantum MDS code")
    p.add_argument("kind", choices=["css", "hermitian"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--shortened", action="store_true", help="use the code shortened at the last coordinate")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table1", parents=[common], help="rebuild the length-q^2 shortening table")
    p.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5, 7])
    p.add_argument("--samples", type=int, default=200_000, help="random codewords for over-budget supports")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("shorten", parents=[common, method], help="shorten a stored quantum code to length r")
    p.add_argument("code_file")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_shorten)

    p = sub.add_parser("sweep-mds", parents=[common], help="QECC(n,n-2d+2,d,q) for all 3<=n<=q")
    p.add_argument("--q-max", type=int, default=9)
    p.add_argument("--q-min", type=int, default=3)
    p.add_argument("--brute-force-limit", type=float, default=1e7)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("weights", parents=[common, method], help="weight distribution of a code")
    p.add_argument("code_file", nargs="?")
    p.add_argument("--q", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--kind", choices=["css", "hermitian"], default="hermitian")
    p.add_argument("--target", choices=["puncture", "stabilizer", "classical"], default="puncture")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", parents=[common, method], help="recheck a stored quantum code")
    p.add_argument("code_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", parents=[common], help="evaluate both self-orthogonality predicates")
    p.add_argument("--q-max", type=int, default=16)
    p.add_argument("--ext-max", type=int, default=49 * 49)
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.budget is None:
        args.budget = default_budget()
    set_workers(args.workers)
    try:
        args.func(args)
    except (CliError, ConstructionError, ShorteningError, FieldError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
