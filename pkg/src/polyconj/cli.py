"""Command-line front end.

Exit codes: 0 = yes / solved / valid, 1 = no / unsolvable / invalid,
2 = usage, parse, or resource errors.  Witnesses and reduced instances go
to stdout in the text formats of :mod:`polyconj.formats`; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import bench as bench_mod
from .conjugacy import decide_conjugate, search_conjugator, verify_certificate
from .errors import InvalidParameterError, PolyconjError
from .formats import (
    CertificateFile,
    ConjugacyInstance,
    SolutionFile,
    parse_instance,
    serialize_instance,
)
from .generate import GenSpec, generate
from .reductions import (
    SspInstance,
    SspPrimeInstance,
    conjugator_to_assignment,
    pullback_sspprime_to_ssp,
    pullback_tssp_to_sspprime,
    solve_ssp_brute,
    solve_sspprime_brute,
    ssp_search_via_decision,
    ssp_to_sspprime,
    sspprime_to_tssp,
    tssp_to_conjugacy,
)
from .tssp import TsspInstance, solve_tssp_brute, solve_tssp_dp, twisted_sum

_EXPECTED = {
    "ssp": SspInstance,
    "sspp": SspPrimeInstance,
    "tssp": TsspInstance,
    "conj": ConjugacyInstance,
    "cert": CertificateFile,
    "sol": SolutionFile,
}


def _load(path: str, kind: str):
    obj = parse_instance(Path(path).read_text(encoding="utf-8"))
    expected = _EXPECTED[kind]
    if not isinstance(obj, expected):
        raise InvalidParameterError(
            f"{path}: expected a {kind!r} file, found {type(obj).__name__}"
        )
    return obj


def _emit(obj) -> None:
    sys.stdout.write(serialize_instance(obj))


def _solve_sspp_via_table(inst: SspPrimeInstance, max_cells: int):
    assign = solve_tssp_dp(sspprime_to_tssp(inst), max_cells=max_cells)
    if assign is None:
        return None
    return pullback_tssp_to_sspprime(inst, assign)


def _solve_ssp_via_table(inst: SspInstance, max_cells: int):
    prime = ssp_to_sspprime(inst)
    values = _solve_sspp_via_table(prime, max_cells)
    if values is None:
        return None
    return pullback_sspprime_to_ssp(inst, values)


def _cmd_solve(args) -> int:
    inst = _load(args.file, args.problem)
    if args.search and args.problem != "ssp":
        raise InvalidParameterError("--search only applies to ssp (the decision-to-search wrapper)")

    if args.problem == "tssp":
        if args.method == "brute":
            witness = solve_tssp_brute(inst)
        else:
            witness = solve_tssp_dp(inst, max_cells=args.max_cells)
    elif args.problem == "sspp":
        if args.method == "brute":
            witness = solve_sspprime_brute(inst)
        else:
            witness = _solve_sspp_via_table(inst, args.max_cells)
    else:
        if args.method == "brute":
            def decider(i):
                return solve_ssp_brute(i) is not None
        else:
            def decider(i):
                return _solve_ssp_via_table(i, args.max_cells) is not None
        if args.search:
            if not decider(inst):
                return 1
            witness = ssp_search_via_decision(decider, inst)
        elif args.method == "brute":
            witness = solve_ssp_brute(inst)
        else:
            witness = _solve_ssp_via_table(inst, args.max_cells)

    if witness is None:
        return 1
    _emit(SolutionFile(values=tuple(witness)))
    return 0


def _cmd_reduce(args) -> int:
    if args.which == "ssp-to-sspp":
        _emit(ssp_to_sspprime(_load(args.file, "ssp")))
    elif args.which == "sspp-to-tssp":
        _emit(sspprime_to_tssp(_load(args.file, "sspp")))
    elif args.which == "ssp-to-tssp":
        _emit(sspprime_to_tssp(ssp_to_sspprime(_load(args.file, "ssp"))))
    elif args.which == "tssp-to-conj":
        _emit(tssp_to_conjugacy(_load(args.file, "tssp")))
    else:  # ssp-to-conj
        _emit(tssp_to_conjugacy(sspprime_to_tssp(ssp_to_sspprime(_load(args.file, "ssp")))))
    return 0


def _assignment_from_certificate(tssp_inst: TsspInstance, cert_file: CertificateFile):
    derived = tssp_to_conjugacy(tssp_inst)
    if cert_file.ctx != derived.ctx:
        raise InvalidParameterError(
            f"certificate lives in G({cert_file.ctx.n}) but the reduced instance "
            f"needs G({derived.ctx.n})"
        )
    assign = conjugator_to_assignment(derived.ctx, cert_file.certificate.w)
    if twisted_sum(tssp_inst.coefficients, assign) != tssp_inst.target:
        raise InvalidParameterError(
            "certificate does not solve the reduced twisted-subset-sum instance"
        )
    return assign


def _cmd_pullback(args) -> int:
    if args.which == "sspp-to-ssp":
        orig = _load(args.original, "ssp")
        sol = _load(args.witness, "sol")
        _emit(SolutionFile(values=pullback_sspprime_to_ssp(orig, sol.values)))
    elif args.which == "tssp-to-sspp":
        orig = _load(args.original, "sspp")
        sol = _load(args.witness, "sol")
        _emit(SolutionFile(values=pullback_tssp_to_sspprime(orig, sol.values)))
    elif args.which == "tssp-to-ssp":
        orig = _load(args.original, "ssp")
        sol = _load(args.witness, "sol")
        values = pullback_tssp_to_sspprime(ssp_to_sspprime(orig), sol.values)
        _emit(SolutionFile(values=pullback_sspprime_to_ssp(orig, values)))
    elif args.which == "conj-to-tssp":
        orig = _load(args.original, "tssp")
        cert = _load(args.witness, "cert")
        _emit(SolutionFile(values=_assignment_from_certificate(orig, cert)))
    else:  # conj-to-ssp
        orig = _load(args.original, "ssp")
        cert = _load(args.witness, "cert")
        prime = ssp_to_sspprime(orig)
        assign = _assignment_from_certificate(sspprime_to_tssp(prime), cert)
        values = pullback_tssp_to_sspprime(prime, assign)
        _emit(SolutionFile(values=pullback_sspprime_to_ssp(orig, values)))
    return 0


def _cmd_conj(args) -> int:
    inst = _load(args.file, "conj")
    if args.action == "decide":
        return 0 if decide_conjugate(inst.ctx, inst.u, inst.v, max_states=args.max_states) else 1
    if args.action == "search":
        cert = search_conjugator(inst.ctx, inst.u, inst.v, max_states=args.max_states)
        if cert is None:
            return 1
        _emit(CertificateFile(ctx=inst.ctx, certificate=cert))
        return 0
    cert_file = _load(args.certificate, "cert")
    if cert_file.ctx != inst.ctx:
        raise InvalidParameterError(
            f"certificate lives in G({cert_file.ctx.n}) but the instance is in G({inst.ctx.n})"
        )
    return 0 if verify_certificate(inst.ctx, inst.u, inst.v, cert_file.certificate) else 1


def _cmd_gen(args) -> int:
    spec = GenSpec(kind=args.kind, n=args.n, bound=args.bound, seed=args.seed, solvable=args.solvable)
    _emit(generate(spec))
    return 0


def _cmd_bench(args) -> int:
    if args.suite in ("scaling", "all"):
        rows = bench_mod.scaling_rows(seed=args.seed, max_cells=args.max_cells)
        print("table solver on unary-scaled instances (fixed n, growing S)")
        print(bench_mod.format_table(rows, ("n", "S", "seconds", "states", "dense_cells")))
        print()
    if args.suite in ("adversarial", "all"):
        rows = bench_mod.adversarial_rows(seed=args.seed, max_cells=args.max_cells)
        print("table solver on random coefficients of growing bit-length")
        print(bench_mod.format_table(rows, ("n", "coefficient_bits", "S", "seconds", "states")))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyconj",
        description="Subset-sum variants, their reductions, and conjugacy in the groups G(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance and print a witness when one exists")
    p.add_argument("problem", choices=("ssp", "sspp", "tssp"))
    p.add_argument("file", help="instance file")
    p.add_argument("--method", choices=("brute", "dp"), default="dp",
                   help="brute enumeration or the pseudo-polynomial table (default)")
    p.add_argument("--search", action="store_true",
                   help="ssp only: recover the witness through the decision oracle")
    p.add_argument("--max-cells", type=int, default=10**8,
                   help="cap on (n+1)*(2S+1) before the table solver refuses")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("reduce", help="transform an instance along one reduction hop")
    p.add_argument("which", choices=("ssp-to-sspp", "sspp-to-tssp", "ssp-to-tssp",
                                     "tssp-to-conj", "ssp-to-conj"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("pullback", help="map a reduced-instance witness back to the source")
    p.add_argument("which", choices=("sspp-to-ssp", "tssp-to-sspp", "tssp-to-ssp",
                                     "conj-to-tssp", "conj-to-ssp"))
    p.add_argument("original", help="the source instance file")
    p.add_argument("witness", help="solution or certificate file for the reduced instance")
    p.set_defaults(func=_cmd_pullback)

    p = sub.add_parser("conj", help="conjugacy decision, search, and verification")
    p.add_argument("action", choices=("decide", "search", "verify"))
    p.add_argument("file", help="conj instance file")
    p.add_argument("certificate", nargs="?", help="cert file (verify only)")
    p.add_argument("--max-states", type=int, default=10**7,
                   help="cap on reachability states before giving up")
    p.set_defaults(func=_cmd_conj)

    p = sub.add_parser("gen", help="generate a random instance deterministically")
    p.add_argument("kind", choices=("ssp", "sspp", "tssp", "conj"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solvable", action="store_true",
                   help="pick the target as the image of a random witness")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="print solver scaling tables")
    p.add_argument("--suite", choices=("scaling", "adversarial", "all"), default="all")
    p.add_argument("--seed", type=int, default=20250809)
    p.add_argument("--max-cells", type=int, default=10**8)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "conj" and args.action == "verify" and args.certificate is None:
            raise InvalidParameterError("conj verify needs both an instance and a cert file")
        return args.func(args)
    except PolyconjError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
