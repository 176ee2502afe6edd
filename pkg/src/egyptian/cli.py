"""Command-line interface.

Every invocation prints one JSON record on a single line.  Records contain no
timestamps and no worker counts, so identical invocations give identical bytes.

Exit codes: 0 success, 2 input error, 3 budget exhausted / unknown,
4 mathematically infeasible conversion.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys
import time

from egyptian.arith import rat_format, rat_parse
from egyptian.classic import (
    InfeasibleConversion,
    RewriteBudgetExceeded,
    UnitFractionSum,
    extend_length,
    greedy_expand,
    to_distinct,
)
from egyptian.engine import (
    BudgetExceeded,
    BudgetExhausted,
    Finite,
    Infinite,
    InvalidProblem,
    Problem,
    check_representation,
    enumerate_representations,
    signed_search,
    j_set_membership,
)
from egyptian.topology import avoid_with_stats, gap_below, signed_probe

DEFAULT_BUDGET = 1_000_000
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")
EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INFEASIBLE = 0, 2, 3, 4


class InputError(Exception):
    pass


def load_problem(path: str) -> Problem:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read problem file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"problem file is not valid JSON: {exc}") from exc
    try:
        return Problem.from_json(obj)
    except InvalidProblem as exc:
        raise InputError(str(exc)) from exc


def problem_hash(p: Problem) -> str:
    canon = json.dumps(p.to_json(), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


def _rational(text: str):
    try:
        return rat_parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _budget(args) -> int:
    if args.budget is not None:
        value = args.budget
    else:
        env = os.environ.get("EGYPTIAN_BUDGET")
        try:
            value = int(env) if env else DEFAULT_BUDGET
        except ValueError:
            raise InputError(f"EGYPTIAN_BUDGET is not an integer: {env!r}") from None
    if value < 1:
        raise InputError("budget must be at least 1")
    return value


def _verify(p: Problem, reps, c) -> None:
    for r in reps:
        if not check_representation(p, r) or r.value != c:
            raise AssertionError(f"engine produced an invalid representation {r.to_json()}")


def _record(command, args, phash, status, result, budget=None):
    return {
        "command": command,
        "args": args,
        "problem_hash": phash,
        "exact": True,
        "status": status,
        "budget": budget,
        "result": result,
    }


def cmd_reps(args):
    p = load_problem(args.problem)
    c = _rational(args.c)
    reps = enumerate_representations(p, c, workers=args.workers)
    _verify(p, reps, c)
    result = {"count": len(reps), "representations": [r.to_json() for r in reps]}
    return EXIT_OK, _record("reps", {"c": rat_format(c)}, problem_hash(p), "ok", result)


def cmd_signed(args):
    p = load_problem(args.problem)
    c = _rational(args.c)
    budget = _budget(args)
    reps, cls, used = signed_search(p, c, budget)
    _verify(p, reps, c)
    result = {"classification": cls.tag}
    code = EXIT_OK
    if isinstance(cls, Finite):
        result["count"] = cls.count
        result["max_bound"] = rat_format(cls.max_bound)
    elif isinstance(cls, Infinite):
        members = cls.witness.members(10)
        _verify(p, members, c)
        result["witness"] = cls.witness.to_json()
    else:
        result["found_so_far"] = cls.found_so_far
        code = EXIT_BUDGET
    result["representations"] = [r.to_json() for r in reps]
    status = "ok" if code == EXIT_OK else "budget-exhausted"
    rec = _record(
        "signed", {"c": rat_format(c)}, problem_hash(p), status, result,
        {"limit": budget, "used": used},
    )
    return code, rec


def cmd_jset(args):
    p = load_problem(args.problem)
    c = _rational(args.c)
    budget = _budget(args)
    answer = j_set_membership(p, c, budget)
    code = EXIT_BUDGET if answer.value == "unknown" else EXIT_OK
    rec = _record(
        "jset",
        {"c": rat_format(c)},
        problem_hash(p),
        "ok" if code == EXIT_OK else "unknown",
        {"member": answer.value},
        {"limit": budget},
    )
    return code, rec


def cmd_gap(args):
    p = load_problem(args.problem)
    c = _rational(args.c)
    if c <= 0:
        raise InputError("gap needs c > 0")
    budget = _budget(args)
    try:
        cert = gap_below(p, c, budget)
    except BudgetExceeded as exc:
        rec = _record(
            "gap", {"c": rat_format(c)}, problem_hash(p), "budget-exhausted", None,
            {"limit": budget, "used": min(exc.used, budget)},
        )
        return EXIT_BUDGET, rec
    if cert.predecessor_witness is not None:
        _verify(p, [cert.predecessor_witness], cert.predecessor)
    rec = _record(
        "gap", {"c": rat_format(c)}, problem_hash(p), "ok", cert.to_json(),
        {"limit": budget, "used": cert.nodes_expanded},
    )
    return EXIT_OK, rec


def cmd_avoid(args):
    p = load_problem(args.problem)
    u, v = _rational(args.u), _rational(args.v)
    if not 0 <= u < v:
        raise InputError("avoid needs 0 <= u < v")
    budget = _budget(args)
    interval, stats = avoid_with_stats(p, u, v, budget)
    cargs = {"u": rat_format(u), "v": rat_format(v)}
    usage = {"limit": budget, "used": min(stats["nodes"], budget)}
    if interval is None:
        return EXIT_BUDGET, _record("avoid", cargs, problem_hash(p), "unknown", None, usage)
    result = {
        "interval": [rat_format(interval[0]), rat_format(interval[1])],
        "anchor": None if stats["anchor"] is None else rat_format(stats["anchor"]),
    }
    return EXIT_OK, _record("avoid", cargs, problem_hash(p), "ok", result, usage)


def cmd_probe(args):
    p = load_problem(args.problem)
    u, v, cap = _rational(args.u), _rational(args.v), _rational(args.cap)
    if not u < v or cap <= 0:
        raise InputError("probe needs u < v and cap > 0")
    hits = signed_probe(p, u, v, cap)
    result = {
        "values": sorted({rat_format(val) for val, _ in hits}, key=rat_parse),
        "representations": [[rat_format(val), r.to_json()] for val, r in hits],
    }
    cargs = {"u": rat_format(u), "v": rat_format(v), "cap": rat_format(cap)}
    return EXIT_OK, _record("probe", cargs, problem_hash(p), "ok", result)


def cmd_expand(args):
    try:
        s = UnitFractionSum.parse(args.sum)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    mode = args.mode
    cargs = {"sum": s.format(), "mode": mode}
    try:
        if mode == "distinct":
            out = to_distinct(s)
        elif mode.startswith("extend:"):
            try:
                n_prime = int(mode.split(":", 1)[1])
            except ValueError:
                raise InputError(f"bad extend length in {mode!r}") from None
            if not s.is_distinct:
                raise InputError("extend needs distinct denominators; use --mode distinct first")
            if n_prime < len(s):
                raise InputError("extend length must be at least the current length")
            out = extend_length(s, n_prime)
        elif mode == "greedy":
            if not 0 < s.value < 1:
                raise InputError("greedy needs a value strictly between 0 and 1")
            out = greedy_expand(s.value)
        else:
            raise InputError(f"unknown mode {mode!r}")
    except InfeasibleConversion as exc:
        rec = _record("expand", cargs, None, "infeasible", {"note": str(exc)})
        return EXIT_INFEASIBLE, rec
    except RewriteBudgetExceeded as exc:
        rec = _record("expand", cargs, None, "budget-exhausted", {"note": str(exc)})
        return EXIT_BUDGET, rec
    if out.value != s.value:
        raise AssertionError("conversion changed the sum")
    result = {"sum": out.format(), "length": len(out), "value": rat_format(out.value)}
    return EXIT_OK, _record("expand", cargs, None, "ok", result)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egyptian", description="Exact computations with weighted Egyptian numbers."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="search node limit")
    common.add_argument("--workers", type=int, default=1, help="worker processes")
    common.add_argument("--output", default=None, help="write the record here instead of stdout")
    common.add_argument("--timing", action="store_true", help="report wall time on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *positional):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        # let "-1/3" through as a positional, as argparse already does for "-1"
        sp._negative_number_matcher = _NEGATIVE_RATIONAL
        for pos in positional:
            sp.add_argument(pos)
        sp.set_defaults(func=func)
        return sp

    add("reps", cmd_reps, "enumerate and count representations of c", "problem", "c")
    add("signed", cmd_signed, "signed representations of c with a finiteness verdict",
        "problem", "c")
    add("jset", cmd_jset, "is c a signed sum over at most n-2 positions", "problem", "c")
    add("gap", cmd_gap, "certified gap below c", "problem", "c")
    add("avoid", cmd_avoid, "certified element-free subinterval of (u, v)", "problem", "u", "v")
    probe = add("probe", cmd_probe, "signed sums in (u, v) with bounded denominators",
                "problem", "u", "v")
    probe.add_argument("--cap", required=True, help="largest denominator to try")
    expand = add("expand", cmd_expand, "rewrite a unit-fraction sum", "sum")
    expand.add_argument("--mode", default="distinct", help="distinct | extend:N | greedy")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    start = time.perf_counter()
    try:
        code, record = args.func(args)
    except InputError as exc:
        code = EXIT_INPUT
        record = _record(args.command, None, None, "input-error", {"error": str(exc)})
        print(f"egyptian: {exc}", file=sys.stderr)
    line = json.dumps(record, separators=(",", ":"), ensure_ascii=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(line)
    else:
        sys.stdout.write(line)
    if args.timing:
        print(f"wall time {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
