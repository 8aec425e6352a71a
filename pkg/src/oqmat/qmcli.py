"""Command-line front end.

Exit status: 0 success or pass, 1 verification failure, 2 usage or parse
error, 3 domain error (the error's ``code`` is printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import qmatrix, strata, verify
from .errors import OqmatError, ParseError
from .gradedideal import GradedIdeal, ideal_membership
from .textio import parse_element, parse_minor_key, read_expression_file, serialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass
class CliConfig:
    n: int = 2
    output_format: str = "text"
    degree_bound: int = 2
    seed: int = 0

    def check(self) -> CliConfig:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.degree_bound < 1:
            raise ValueError("--degree-bound must be at least 1")
        return self


class _Usage(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument("-n", type=int, default=None, help="matrix size")

    ap = argparse.ArgumentParser(prog="oqmat", description="Exact computations in quantum matrix algebras.")
    ap.add_argument("--json", action="store_true", help="JSON output")
    sub = ap.add_subparsers(dest="cmd", required=True)

    for name, text in [("nf", "normal form"), ("delta", "comultiplication"), ("tau", "transpose"),
                       ("counit", "counit")]:
        p = sub.add_parser(name, parents=[common, sized], help=f"{text} of an expression")
        p.add_argument("expr")

    p = sub.add_parser("minor", parents=[common, sized], help="quantum minor [I|J]")
    p.add_argument("key")
    p.add_argument("--oracle", action="store_true", help="use the permutation sum")

    p = sub.add_parser("strata", help="step pairs, K generators, beta images")
    ssub = p.add_subparsers(dest="what", required=True)
    s = ssub.add_parser("list", parents=[common, sized])
    s.add_argument("-t", type=int, required=True)
    s = ssub.add_parser("kgens", parents=[common, sized])
    s.add_argument("--pair", required=True, help='e.g. "r=(1,2);c=(1,3)"')
    s = ssub.add_parser("beta", parents=[common, sized])
    s.add_argument("--pair", required=True)
    s.add_argument("expr")

    p = sub.add_parser("member", parents=[common, sized], help="graded ideal membership")
    p.add_argument("--gens", required=True, help="file of generator expressions, one per line")
    p.add_argument("--certificate", action="store_true")
    p.add_argument("expr")

    p = sub.add_parser("hspec", help="H-prime data")
    hsub = p.add_subparsers(dest="what", required=True)
    h = hsub.add_parser("m2", parents=[common])
    h.add_argument("--degree-bound", type=int, default=2, help="degree bound for computed generators")
    h = hsub.add_parser("count", parents=[common, sized])
    h.add_argument("-t", type=int, required=True)

    p = sub.add_parser("verify", parents=[common, sized], help="run a verification suite")
    p.add_argument("suite", help="suite id (S1..S16, S9a, S9b) or 'all'")
    p.add_argument("--seed", type=int, default=0)
    return ap


def _need_n(args) -> int:
    if args.n is None:
        raise _Usage("-n is required")
    if args.n < 1:
        raise _Usage("n must be at least 1")
    return args.n


def _oqm_parse(n: int, text: str):
    return parse_element(text, qmatrix.oqm_presentation(n), lambda r, c: qmatrix.minor(n, r, c))


def _run(args) -> tuple[int, dict, list[str]]:
    """Returns (status, json payload, text lines)."""
    cmd = args.cmd
    if cmd in ("nf", "delta", "tau", "counit"):
        n = _need_n(args)
        x = _oqm_parse(n, args.expr)
        if cmd == "nf":
            y = serialize(x)
        elif cmd == "delta":
            y = serialize(qmatrix.comultiply(n, x))
        elif cmd == "tau":
            y = serialize(qmatrix.transpose_tau(n, x))
        else:
            y = str(qmatrix.counit(n, x))
        return EXIT_OK, {"command": cmd, "n": n, "input": args.expr, "result": y}, [y]

    if cmd == "minor":
        n = _need_n(args)
        rows, cols = parse_minor_key(args.key)
        fn = qmatrix.quantum_minor_perm if args.oracle else qmatrix.quantum_minor
        y = serialize(fn(n, rows, cols))
        return EXIT_OK, {"command": "minor", "n": n, "key": args.key, "oracle": args.oracle, "result": y}, [y]

    if cmd == "strata":
        n = _need_n(args)
        if args.what == "list":
            pairs = strata.enumerate_rc(n, args.t)
            rows = [{"pair": str(p), "kgens": len(strata.krc_keys(n, p))} for p in pairs]
            lines = [f"{r['pair']}  K generators: {r['kgens']}" for r in rows]
            return EXIT_OK, {"command": "strata list", "n": n, "t": args.t, "pairs": rows}, lines
        pair = strata.StepPair.parse(args.pair).check(n)
        if args.what == "kgens":
            keys = [_key_text(I, J) for I, J in strata.krc_keys(n, pair)]
            return EXIT_OK, {"command": "strata kgens", "n": n, "pair": str(pair), "generators": keys}, keys
        beta = strata.beta_map(n, pair)
        y = serialize(beta(_oqm_parse(n, args.expr)))
        return EXIT_OK, {"command": "strata beta", "n": n, "pair": str(pair), "input": args.expr, "result": y}, [y]

    if cmd == "member":
        n = _need_n(args)
        A = qmatrix.oqm_presentation(n)
        gens = [_oqm_parse(n, e) for e in read_expression_file(args.gens)]
        L = GradedIdeal(A, gens, name=args.gens)
        x = _oqm_parse(n, args.expr)
        payload = {"command": "member", "n": n, "input": args.expr, "generators": [serialize(g) for g in L.generators]}
        if args.certificate:
            ok, cert = ideal_membership(L, x, certificate=True)
            payload["member"] = ok
            payload["certificate"] = cert.to_json(L) if cert is not None else None
            lines = ["true" if ok else "false"]
            if cert is not None:
                lines.append(f"denominator: {cert.denominator}")
                for idx, left, right, coef in cert.terms:
                    lines.append(f"({coef}) * {A.format_monomial(left)} * g{idx + 1} * {A.format_monomial(right)}")
            return EXIT_OK, payload, lines
        ok = ideal_membership(L, x)
        payload["member"] = ok
        return EXIT_OK, payload, ["true" if ok else "false"]

    if cmd == "hspec":
        if args.what == "count":
            n = _need_n(args)
            c = strata.hspec_count(n, args.t)
            val = c if isinstance(c, int) else str(c)
            return EXIT_OK, {"command": "hspec count", "n": n, "t": args.t, "count": val}, [str(c)]
        cfg = CliConfig(degree_bound=args.degree_bound).check()
        entries, lines = [], []
        for k, spec in enumerate(strata.hspec_m2_catalog(), 1):
            kap = strata.kappa_map(2, spec)
            computed = [serialize(g) for g in strata.kernel_generators(kap, cfg.degree_bound)]
            printed = None if spec.known_generators is None else [serialize(g) for g in spec.known_generators]
            entries.append({"index": k, "stratum": str(spec.pair), "q_plus": list(spec.q_plus),
                            "q_minus": list(spec.q_minus), "generators": computed, "printed": printed})
            lines.append(f"{k:2d}  {spec.label}  gens: {', '.join(computed) or '0'}")
        return EXIT_OK, {"command": "hspec m2", "degree_bound": cfg.degree_bound, "entries": entries}, lines

    if cmd == "verify":
        opts = {"seed": args.seed} if args.seed else {}
        if args.suite.lower() == "all":
            reports = verify.run_all(args.n, opts)
        else:
            reports = [verify.run_suite(args.suite, args.n, opts)]
        ok = all(r.passed for r in reports)
        lines = []
        for r in reports:
            lines.append(r.summary())
            lines += [f"  FAIL {f.case}: {f.lhs}  !=  {f.rhs}" for f in r.failures]
            lines += [f"  note: {x}" for x in r.notes]
        payload = {"command": "verify", "pass": ok, "reports": [r.to_json() for r in reports]}
        return (EXIT_OK if ok else EXIT_FAIL), payload, lines

    raise _Usage(f"unknown command {cmd}")  # pragma: no cover


def _key_text(I, J) -> str:
    return "[" + " ".join(map(str, I)) + "|" + " ".join(map(str, J)) + "]"


def _emit_error(as_json: bool, status: int, code: str, message: str, position=None) -> int:
    if as_json:
        body = {"error": code, "message": message}
        if position is not None:
            body["position"] = position
        print(json.dumps(body, sort_keys=True), file=sys.stderr)
    else:
        print(f"error [{code}]: {message}", file=sys.stderr)
    return status


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    as_json = bool(getattr(args, "json", False))
    try:
        status, payload, lines = _run(args)
    except ParseError as exc:
        return _emit_error(as_json, EXIT_USAGE, exc.code, str(exc), exc.position)
    except OqmatError as exc:
        return _emit_error(as_json, EXIT_DOMAIN, exc.code, str(exc))
    except (_Usage, ValueError) as exc:
        return _emit_error(as_json, EXIT_USAGE, "usage", str(exc))
    except OSError as exc:
        return _emit_error(as_json, EXIT_USAGE, "io", str(exc))
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry()
