"""Batch experiment runner.

Each command writes exactly one JSON record to stdout and a short human
summary to stderr. Exit codes: 0 completed, 1 usage error, 2 refused
precondition (caps, long-run gate, clock overflow), 3 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from importlib.metadata import PackageNotFoundError, version

from . import beaver, cnf, counterexample, folklore, search
from .bgs import clock_bound, decode_bgs, run_clocked
from .codes import cantor_unpair, check_bits, rank_to_string, string_to_rank
from .errors import DimacsError, InvariantViolation, Refused
from .machine import decode_machine, encode_machine
from .solvers import bgs_family, native_family

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_INVARIANT = 0, 1, 2, 3


def artifact_version() -> str:
    try:
        return version("bgs-forge")
    except PackageNotFoundError:
        return "0.0.0+unknown"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# -- argument helpers ---------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _bits(text: str) -> str:
    try:
        return check_bits(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_dimacs(path: str) -> cnf.CnfFormula:
    return cnf.parse_dimacs(_read_text(path))


def _instance_bits(arg: str) -> str:
    """A literal bit string, or else a DIMACS path (``-`` for stdin)."""
    if re.fullmatch(r"[01]*", arg):
        return arg
    return cnf.encode_instance(_read_dimacs(arg)).bits


def _family(args):
    if args.family == "bgs":
        return bgs_family()
    return native_family([folklore.lookup_solver(n, args.var_cap) for n in args.chain])


def _solver(spec: str, var_cap: int):
    name, _, arg = spec.partition(":")
    try:
        if name == "lookup":
            return folklore.lookup_solver(int(arg), var_cap)
        if name == "bgs":
            return bgs_family().at(int(arg))
        if name == "trivial":
            formula = cnf.decode_instance(rank_to_string(int(arg)))
            return folklore.trivial_instance_solver(formula, var_cap)
    except ValueError as exc:
        raise UsageError(f"bad solver spec {spec!r}: {exc}") from None
    if spec == "oracle":
        return folklore.OracleSolver(var_cap)
    if spec == "decline":
        return folklore.DeclineSolver()
    raise UsageError(f"unknown solver spec {spec!r} (lookup:N, bgs:K, trivial:RANK, oracle, decline)")


def _formula_dict(formula: cnf.CnfFormula) -> dict:
    return {
        "clauses": [list(c) for c in formula.clauses],
        "var_count": formula.var_count,
        "text": str(formula),
    }


# -- commands -----------------------------------------------------------------
# Each returns (result payload, one-line summary).


def cmd_decode_machine(args):
    m = decode_machine(args.index)
    res = {
        "index": args.index,
        "bits": rank_to_string(args.index),
        "state_count": m.state_count,
        "table": m.describe(),
        "canonical_index": encode_machine(m),
    }
    return res, f"machine {args.index}: {m.state_count} state(s) {' '.join(m.describe())}"


def cmd_decode_bgs(args):
    cm = decode_bgs(args.index)
    i, j = cantor_unpair(args.index)
    res = {
        "index": args.index,
        "machine_index": i,
        "poly_index": j,
        "machine": {"state_count": cm.machine.state_count, "table": cm.machine.describe()},
        "clock": list(cm.clock.coefficients),
        "clock_text": str(cm.clock),
    }
    return res, f"P_{args.index} = <M_{i}, p(n) = {cm.clock}>"


def cmd_run_clocked(args):
    cm = decode_bgs(args.index)
    r = run_clocked(cm, args.bits)
    res = {
        "index": args.index,
        "bits": args.bits,
        "status": r.status.value,
        "output": r.output,
        "cycles": r.cycles,
        "clock_bound": clock_bound(cm.clock, len(args.bits)),
    }
    return res, f"P_{args.index}({args.bits!r}) -> {r.status.value} output={r.output!r} cycles={r.cycles}"


def cmd_encode(args):
    formula = _read_dimacs(args.dimacs)
    code = cnf.encode_instance(formula)
    res = {"bits": code.bits, "rank": code.rank, "formula": _formula_dict(formula)}
    return res, f"{formula} -> {code.bits} (rank {code.rank})"


def cmd_decode(args):
    if args.rank is not None:
        bits = rank_to_string(args.rank)
    elif args.bits is not None:
        bits = args.bits
    else:
        raise UsageError("decode needs a bit string or --rank")
    formula = cnf.decode_instance(bits)
    res = {"bits": bits, "rank": string_to_rank(bits), "formula": _formula_dict(formula),
           "dimacs": cnf.to_dimacs(formula)}
    return res, f"{bits!r} -> {formula}"


def cmd_verify(args):
    formula = _read_dimacs(args.dimacs)
    ok = cnf.verify(formula, args.line)
    res = {"line": args.line, "satisfied": ok, "formula": _formula_dict(formula)}
    return res, f"line {args.line!r} {'satisfies' if ok else 'does not satisfy'} {formula}"


def cmd_solve(args):
    formula = _read_dimacs(args.dimacs)
    line = cnf.brute_force_solve(formula, args.var_cap)
    res = {"satisfiable": line is not None, "line": line, "formula": _formula_dict(formula)}
    return res, f"{formula}: " + ("UNSAT" if line is None else f"first line {line!r}")


def cmd_instances(args):
    insts = cnf.sat_instances_upto(args.upto, args.var_cap)
    res = {
        "satisfiable_count": len(insts),
        "instances": [
            {"rank": i.rank, "bits": rank_to_string(i.rank), "clauses": [list(c) for c in i.formula.clauses],
             "line": i.line}
            for i in insts
        ],
    }
    return res, f"{len(insts)} satisfiable instance(s) among ranks < {args.upto}"


def cmd_witness_check(args):
    family = _family(args)
    wt = folklore.WitnessTuple(family.at(args.index), args.index, args.a, args.b)
    report = folklore.check_witness_tuple(wt, args.upto, args.var_cap)
    res = {"family": family.name, **report.as_dict()}
    verdict = "holds" if report.holds else f"{len(report.violations)} violation(s)"
    return res, f"tuple (m={args.index}, a={args.a}, b={args.b}) on ranks < {args.upto}: {verdict}"


def cmd_folklore_chain(args):
    links = folklore.folklore_chain(args.upto, args.rank_bound, args.var_cap)
    strict = [l.n for l in links if l.dominance.relation is folklore.Relation.STRICTLY_MORE]
    res = {
        "links": [l.as_dict() for l in links],
        "all_included": all(l.included for l in links),
        "strictly_more_at": strict,
        "window": "windowed evidence over ranks < rank_bound, not an asymptotic claim",
    }
    return res, f"chain n < {args.upto}: inclusion {'holds' if res['all_included'] else 'FAILS'}, strict steps at {strict}"


def cmd_dominates(args):
    left = _solver(args.left, args.var_cap)
    right = _solver(args.right, args.var_cap)
    dom = folklore.dominates(left, right, args.upto, args.var_cap)
    return dom.as_dict(), f"{args.left} vs {args.right} on ranks < {args.upto}: {dom.relation.value}"


def cmd_search(args):
    bits = _instance_bits(args.instance)
    family = _family(args)
    outcome = search.universal_search(
        bits, family, args.rounds, unsat_guard=args.guard == "on", var_cap=args.var_cap, trace=args.trace
    )
    res = {"family": family.name, **search.search_report(outcome, bits)}
    return res, f"search {bits!r} over {family.name}: {res['kind']}"


def cmd_counterexample(args):
    family = _family(args)
    result = counterexample.counterexample_F(args.k, family, args.rank_budget, args.var_cap)
    counterexample.audit_minimality(args.k, family, result, args.var_cap)
    res = {"family": family.name, "k": args.k, **counterexample.describe(result)}
    return res, f"F({args.k}) over {family.name}: {res}"


def cmd_fprime(args):
    result = counterexample.counterexample_Fprime(args.k, args.rank_budget, args.var_cap)
    res = {"k": args.k, **counterexample.describe(result)}
    return res, f"F'({args.k}): {res}"


def cmd_empirical_r(args):
    family = _family(args)
    result = counterexample.empirical_R(args.upto, family, args.index_budget, args.var_cap)
    res = {"family": family.name, **counterexample.describe(result)}
    return res, f"R({args.upto}) over {family.name}: {res}"


def cmd_growth(args):
    family = _family(args)
    rows = counterexample.growth_table(args.ks, family, args.rank_budget, args.var_cap)
    res = {"family": family.name, "rows": [r.as_dict() for r in rows]}
    return res, f"growth table over {family.name}: {len(rows)} row(s)"


def cmd_beaver(args):
    census = beaver.beaver_census(
        args.n, args.cutoff, normalize=not args.no_normalize, method=args.method, allow_long=args.allow_long
    )
    res = census.as_dict()
    return res, f"BB({args.n}) cutoff {args.cutoff}: sigma={census.sigma} S={census.s_max} ({res['values_are']}, {census.unresolved} unresolved)"


def cmd_compare_growth(args):
    censuses = [
        beaver.beaver_census(n, args.cutoff, allow_long=args.allow_long) for n in args.ns
    ]
    rows = counterexample.growth_table(args.ks, _family(args), args.rank_budget, args.var_cap) if args.ks else []
    res = beaver.compare_growth(censuses, rows)
    return res, f"compare-growth: {len(censuses)} census row(s), {len(rows)} F row(s)"


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bgs-forge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--var-cap", type=int, default=cnf.DEFAULT_VAR_CAP, help="oracle variable cap")
        return sp

    def with_family(sp):
        sp.add_argument("--family", choices=["bgs", "native"], default="bgs")
        sp.add_argument("--chain", type=_int_list, default=[64],
                        help="lookup table sizes for the native family (default 64)")

    sp = add("decode-machine", cmd_decode_machine, "decode a Turing machine index")
    sp.add_argument("index", type=int)

    sp = add("decode-bgs", cmd_decode_bgs, "decode a clocked couple P_k")
    sp.add_argument("index", type=int)

    sp = add("run-clocked", cmd_run_clocked, "run P_k on a bit string")
    sp.add_argument("index", type=int)
    sp.add_argument("bits", type=_bits)

    sp = add("encode", cmd_encode, "DIMACS -> instance bits")
    sp.add_argument("dimacs", nargs="?", default="-")

    sp = add("decode", cmd_decode, "instance bits -> CNF and DIMACS")
    sp.add_argument("bits", nargs="?", type=_bits)
    sp.add_argument("--rank", type=int)

    sp = add("verify", cmd_verify, "check a satisfying line against a DIMACS formula")
    sp.add_argument("dimacs")
    sp.add_argument("line", type=_bits)

    sp = add("solve", cmd_solve, "exhaustive oracle on a DIMACS formula")
    sp.add_argument("dimacs", nargs="?", default="-")

    sp = add("instances", cmd_instances, "satisfiable instances below a rank")
    sp.add_argument("--upto", type=int, required=True)

    sp = add("witness-check", cmd_witness_check, "check (m, a, b) on a finite window")
    sp.add_argument("--index", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--upto", type=int, required=True)
    with_family(sp)

    sp = add("folklore-chain", cmd_folklore_chain, "dominance along the lookup-solver chain")
    sp.add_argument("--upto", type=int, required=True)
    sp.add_argument("--rank-bound", type=int, default=64)

    sp = add("dominates", cmd_dominates, "compare settled sets of two solvers")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--upto", type=int, required=True)

    sp = add("search", cmd_search, "universal search on one instance")
    sp.add_argument("instance", help="bit string, or DIMACS path ('-' for stdin)")
    sp.add_argument("--rounds", type=int, required=True)
    sp.add_argument("--guard", choices=["on", "off"], default="off")
    sp.add_argument("--trace", action="store_true")
    with_family(sp)

    sp = add("counterexample", cmd_counterexample, "F(k): first failing instance")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--rank-budget", type=int, required=True)
    with_family(sp)

    sp = add("fprime", cmd_fprime, "F'(k) over the tagged all-machines enumeration")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--rank-budget", type=int, required=True)

    sp = add("empirical-r", cmd_empirical_r, "least index settling a rank window")
    sp.add_argument("--upto", type=int, required=True)
    sp.add_argument("--index-budget", type=int, required=True)
    with_family(sp)

    sp = add("growth", cmd_growth, "F over a list of indices")
    sp.add_argument("--ks", type=_int_list, required=True)
    sp.add_argument("--rank-budget", type=int, required=True)
    with_family(sp)

    sp = add("beaver", cmd_beaver, "exhaustive Busy Beaver census")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--allow-long", action="store_true")
    sp.add_argument("--method", choices=["tree", "brute"], default="tree")
    sp.add_argument("--no-normalize", action="store_true")

    sp = add("compare-growth", cmd_compare_growth, "Busy Beaver census next to an F table")
    sp.add_argument("--ns", type=_int_list, required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--ks", type=_int_list, default=[])
    sp.add_argument("--rank-budget", type=int, default=64)
    sp.add_argument("--allow-long", action="store_true")
    with_family(sp)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    start = time.perf_counter()
    try:
        result, summary = args.func(args)
    except Refused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, DimacsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "parameters": params,
        "result": result,
        "wall_time_ms": round((time.perf_counter() - start) * 1000, 3),
        "artifact_version": artifact_version(),
    }
    line = json.dumps(record, sort_keys=True)
    sys.stdout.write(line + "\n")
    sys.stdout.flush()
    print(summary, file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
