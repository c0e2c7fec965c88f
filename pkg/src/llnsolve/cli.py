"""Command-line front end: ``llnsolve <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 invalid arguments.
JSON goes to stdout with sorted keys and integers only; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from . import classnum, families, lehmer, pell, search, solver

log = logging.getLogger("llnsolve")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _add_output(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="mode", action="store_const", const="json", help="JSON output")
    g.add_argument("--tsv", dest="mode", action="store_const", const="tsv", help="TSV output")
    p.set_defaults(mode="human")


def _add_instance(p: argparse.ArgumentParser) -> None:
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("-n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="llnsolve", description="a x^2 + b^(2l) = 4 y^n toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance and print its certificate")
    _add_instance(p)
    _add_output(p)

    p = sub.add_parser("search", help="brute-force search over y")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-l", type=int, nargs="+", required=True, help="one or more exponents l, searched in turn")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--y-max", type=int, required=True)
    p.add_argument("--threads", type=int, default=1, help="number of parallel y-chunks")
    _add_output(p)

    p = sub.add_parser("families", help="members of the p = 7, n = 3 families")
    p.add_argument("--id", choices=[f.value for f in families.FamilyId], required=True)
    p.add_argument("--count", type=int, default=5)
    _add_output(p)

    p = sub.add_parser("pell", help="solutions of u^2 - D v^2 = N")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-const", type=int, required=True, choices=pell.ALLOWED_N)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--odd", action="store_true", help="only solutions with u, v odd")
    _add_output(p)

    p = sub.add_parser("classnum", help="class numbers h(-a)")
    p.add_argument("-a", type=int)
    p.add_argument("--tally", action="store_true")
    p.add_argument("--h", dest="h_target", type=int)
    p.add_argument("--bound", type=int)
    _add_output(p)

    p = sub.add_parser("lehmer", help="Lehmer number of the pair (u, v, p)")
    p.add_argument("-u", type=int, required=True)
    p.add_argument("-v", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _add_output(p)

    p = sub.add_parser("verify-corpus", help="verify a TSV corpus of solutions")
    p.add_argument("path", nargs="?", help="TSV file; the published corpus when omitted")
    _add_output(p)
    return parser


# ---------------------------------------------------------------- solve


def _expr_json(e: solver.Expr) -> dict:
    return {"constant": e.constant, "terms": [list(t) for t in e.terms], "text": str(e)}


def certificate_json(cert: solver.Certificate) -> dict:
    body: dict
    if isinstance(cert, solver.ResidueContradiction):
        body = {
            "type": "ResidueContradiction",
            "modulus": cert.modulus,
            "left": _expr_json(cert.left),
            "right": _expr_json(cert.right),
            "left_residues": sorted(cert.left_residues),
            "right_residues": sorted(cert.right_residues),
            "odd_vars": sorted(cert.odd_vars),
            "relation": cert.relation,
        }
    elif isinstance(cert, solver.Mod4Reduction):
        body = {"type": "Mod4Reduction", "a": cert.a}
    else:
        body = {"type": "TheoremCitation", "theorem": cert.theorem}
    body["verified"] = solver.verify_certificate(cert)
    return body


def verdict_json(verdict: solver.Verdict) -> dict:
    if isinstance(verdict, solver.NoSolution):
        return {"kind": "NoSolution", "certificate": certificate_json(verdict.certificate), "details": {}}
    if isinstance(verdict, solver.FamilyCase):
        m = verdict.membership
        return {
            "kind": "FamilyCase",
            "certificate": None,
            "details": {
                "families": [f.value for f in verdict.families],
                "member": None if not m else {"family": m.family.value, "index": m.index},
                "search_exhausted": m.exhausted,
            },
        }
    return {
        "kind": "Undecided",
        "certificate": None,
        "details": {
            "reasons": list(verdict.reasons),
            "witnesses": [list(w.as_tuple()) for w in verdict.witnesses],
        },
    }


def conditions_json(rep: solver.ConditionReport) -> dict:
    d = asdict(rep)
    d["b_prime_power"] = None if rep.b_prime_power is None else asdict(rep.b_prime_power)
    d["residues"] = list(rep.residues)
    return d


def solve_payload(inst: solver.ProblemInstance) -> dict:
    return {
        "instance": asdict(inst),
        "verdict": verdict_json(solver.solve(inst)),
        "conditions": conditions_json(solver.condition_report(inst)),
    }


def _instance(args) -> solver.ProblemInstance:
    try:
        return solver.ProblemInstance(args.a, args.b, args.l, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args) -> int:
    payload = solve_payload(_instance(args))
    v = payload["verdict"]
    if args.mode == "json":
        print(_dump(payload))
    elif args.mode == "tsv":
        inst = payload["instance"]
        print("\t".join(str(inst[k]) for k in "abln") + "\t" + v["kind"])
    else:
        inst = payload["instance"]
        print(f"{inst['a']}x^2 + ({inst['b']})^{2 * inst['l']} = 4y^{inst['n']}: {v['kind']}")
        if v["certificate"]:
            c = v["certificate"]
            extra = {k: c[k] for k in ("theorem", "modulus", "a", "relation") if k in c}
            print(f"  certificate {c['type']} {extra} verified={c['verified']}")
        for key, val in sorted(v["details"].items()):
            print(f"  {key}: {val}")
    if v["certificate"] and not v["certificate"]["verified"]:
        return 1
    return 0


# ---------------------------------------------------------------- others


def cmd_search(args) -> int:
    if args.threads < 1 or args.y_max < 1:
        raise UsageError("--threads and --y-max must be positive")
    reports = []
    pool = ProcessPoolExecutor(args.threads) if args.threads > 1 else None
    try:
        for l in args.l:
            rep = search.brute_force(args.a, args.b, l, args.n, args.y_max, args.threads, pool)
            for i in range(rep.partitions):
                log.info("l = %d: chunk %d/%d done", l, i + 1, rep.partitions)
            reports.append(rep)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    finally:
        if pool is not None:
            pool.shutdown()
    sols = [s for rep in reports for s in rep.solutions]
    if args.mode == "json":
        print(
            _dump(
                {
                    "instance": {"a": args.a, "b": args.b, "l": list(args.l), "n": args.n},
                    "y_max": args.y_max,
                    "partitions": reports[0].partitions,
                    "elapsed_ms": int(sum(r.elapsed for r in reports) * 1000),
                    "solutions": [list(s.as_tuple()) for s in sols],
                }
            )
        )
    elif args.mode == "tsv":
        sys.stdout.write(search.format_corpus(sols))
    else:
        for rep in reports:
            print(f"l = {rep.instance[2]}: {len(rep.solutions)} solution(s) with y <= {rep.y_max}")
            for s in rep.solutions:
                print("  (a, x, y, b, l, n) =", s.as_tuple())
    return 0


def cmd_families(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    members = families.generate(args.id, args.count)
    rows = [
        {
            "family": m.id.value,
            "index": m.index,
            "u": m.u,
            "v": m.v,
            "x": m.x,
            "y": m.y,
            "blpow": m.blpow,
            "four_blpow_mod7": m.congruence_flag,
            "coprime": m.coprime,
        }
        for m in members
    ]
    if args.mode == "json":
        print(_dump({"family": args.id, "source": families.PELL_SOURCE[families.FamilyId(args.id)], "members": rows}))
    elif args.mode == "tsv":
        for r in rows:
            print("\t".join(str(r[k]) for k in ("family", "index", "u", "v", "x", "y", "blpow")))
    else:
        print(f"{args.id}: from {families.PELL_SOURCE[families.FamilyId(args.id)]}")
        for r in rows:
            print(f"  t={r['index']}: (u, v) = ({r['u']}, {r['v']})  x = {r['x']}  y = {r['y']}  b^l = {r['blpow']}")
    return 0


def cmd_pell(args) -> int:
    try:
        form = pell.PellForm(args.d, args.n_const)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.count < 1:
        raise UsageError("--count must be positive")
    truncated = False
    if args.odd:
        sols = pell.odd_solutions(form, args.count)
        truncated = sols.truncated
    else:
        sols = []
        for s in pell.iter_solutions(form):
            sols.append(s)
            if len(sols) == args.count:
                break
    if args.mode == "json":
        print(
            _dump(
                {
                    "D": form.D,
                    "N": form.N,
                    "solutions": [{"u": s.u, "v": s.v, "index": s.index} for s in sols],
                    "truncated": truncated,
                }
            )
        )
    elif args.mode == "tsv":
        for s in sols:
            print(f"{s.index}\t{s.u}\t{s.v}")
    else:
        if not sols:
            print(f"u^2 - {form.D}v^2 = {form.N}: no solutions")
        for s in sols:
            print(f"({s.u}, {s.v})")
    return 0


def cmd_classnum(args) -> int:
    if args.tally:
        if args.h_target is None or args.bound is None:
            raise UsageError("--tally needs --h and --bound")
        if args.h_target < 1 or args.bound < 1:
            raise UsageError("--h and --bound must be positive")
        values = classnum.tally_class_numbers(args.h_target, args.bound)
        if args.mode == "json":
            print(_dump({"h": args.h_target, "bound": args.bound, "count": len(values), "a": values}))
        elif args.mode == "tsv":
            print("\n".join(map(str, values)))
        else:
            print(f"{len(values)} square-free a <= {args.bound} with h(-a) = {args.h_target}")
            print("  " + " ".join(map(str, values)))
        return 0
    if args.a is None:
        raise UsageError("give -a or --tally")
    try:
        res = classnum.class_number(args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "json":
        print(_dump(asdict(res)))
    elif args.mode == "tsv":
        print(f"{res.a}\t{res.discriminant}\t{res.h}")
    else:
        print(f"h(-{res.a}) = {res.h}  (discriminant {res.discriminant})")
    return 0


def cmd_lehmer(args) -> int:
    try:
        params = lehmer.LehmerParams(args.u, args.v, args.p)
        value = lehmer.lehmer_number_abs(params, args.n)
        h = lehmer.half_power(args.u, args.v, args.p, args.n)
    except (ValueError, lehmer.NotIntegralError) as exc:
        raise UsageError(str(exc)) from None
    primitive = lehmer.has_primitive_divisor(params, args.n) if args.n >= 3 else None
    y = (args.u**2 + args.p * args.v**2) // 4
    out = {
        "u": args.u,
        "v": args.v,
        "p": args.p,
        "n": args.n,
        "lehmer_abs": value,
        "half_power": {"A": h.A, "B": h.B},
        "y": y,
        "primitive_divisor": None if primitive is None else primitive.value,
    }
    if args.mode == "json":
        print(_dump(out))
    elif args.mode == "tsv":
        print("\t".join(str(out[k]) for k in ("u", "v", "p", "n", "lehmer_abs")))
    else:
        print(f"|u_{args.n}| = {value}")
        print(f"((u + v sqrt(-p))/2)^n = ({h.A} + {h.B} sqrt(-{args.p}))/2, norm y^n with y = {y}")
        if primitive is not None:
            print(f"primitive divisor: {primitive.value}")
    return 0


def cmd_verify_corpus(args) -> int:
    if args.path:
        try:
            entries = search.read_corpus(args.path)
        except (OSError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    else:
        entries = search.published_corpus()
    checks = search.verify_corpus(entries)
    if args.mode == "json":
        print(
            _dump(
                [
                    {
                        "entry": list(c.entry.as_tuple()),
                        "ok": c.ok,
                        "equation_holds": c.equation_holds,
                        "residues": None if c.residues is None else list(c.residues),
                        "b_kind": c.b_kind,
                        "failures": list(c.failures),
                    }
                    for c in checks
                ]
            )
        )
    else:
        for c in checks:
            status = "PASS" if c.ok else "FAIL"
            cols = "\t".join(map(str, c.entry.as_tuple()))
            note = "; ".join(c.failures) if c.failures else f"residues={c.residues} b={c.b_kind}"
            print(f"{status}\t{cols}\t{note}")
    return 0 if all(c.ok for c in checks) else 1


COMMANDS = {
    "solve": cmd_solve,
    "search": cmd_search,
    "families": cmd_families,
    "pell": cmd_pell,
    "classnum": cmd_classnum,
    "lehmer": cmd_lehmer,
    "verify-corpus": cmd_verify_corpus,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"llnsolve {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
