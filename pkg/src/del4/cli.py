"""Command-line front end.

Exit codes: 0 success, 2 validation failure, 3 unsupported or ill-formed
input, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import bound_report, exact_cover_sqs, max_code_search
from .codes import optimal_code, optimal_size, perfect_code
from .errors import BudgetExhausted, ConstructionError, Del4Error, InvalidArgument, UnsupportedParameter
from .formats import format_blocks, format_code, parse_blocks, parse_code
from .gdd import GDD, build_gdd, family_A, format_gdd, gdd_violations, parse_gdd
from .sqs import build_sqs_step, is_sqs, select_upper_quads, step_violations
from .words import ball_collision, covered_words, is_deletion_correcting, min_distance, profile

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_BUDGET = 0, 2, 3, 4


def parse_q_range(text: str) -> list[int]:
    """``"8"`` or ``"4..10"``; ranges keep the even values only."""
    if ".." in text:
        lo, hi = (int(v) for v in text.split("..", 1))
        return [q for q in range(lo, hi + 1) if q % 2 == 0]
    return [int(text)]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _say(args, line: str) -> None:
    # Summaries go to stderr when the payload itself is on stdout.
    print(line, file=sys.stderr if not args.out else sys.stdout)


def cmd_construct(args) -> int:
    code, trace = optimal_code(args.q, args.budget)
    _emit(format_code(code, "optimal"), args.out)
    _say(args, f"route: {' <- '.join(trace.route)}")
    _say(args, "components: " + ", ".join(f"{k}={v}" for k, v in trace.components.items()))
    _say(args, f"optimal: {len(code)}/{optimal_size(args.q)}")
    return EXIT_OK


def cmd_perfect(args) -> int:
    code = perfect_code(args.q, args.budget)
    _emit(format_code(code, "perfect"), args.out)
    _say(args, f"perfect: {len(code)}/{optimal_size(args.q)} words, covers {args.q ** 3}/{args.q ** 3} subwords")
    return EXIT_OK


def cmd_verify(args) -> int:
    code, header = parse_code(Path(args.file).read_text())
    print(f"file: n={code.n} q={code.q} size={len(code)} kind={header.get('kind', '?')}")
    hit = ball_collision(code, 1)
    if hit is not None:
        x, y, shared = hit
        print(f"ball collision: {' '.join(map(str, x))} and {' '.join(map(str, y))} "
              f"both yield {' '.join(map(str, shared))}")
        return EXIT_INVALID
    ok = is_deletion_correcting(code, 1, args.jobs)
    if len(code) >= 2:
        print(f"min_distance: {min_distance(code, args.jobs)} (> 2: {ok})")
    if code.n == 4 and code.q % 2 == 0:
        print(f"size vs bound: {len(code)}/{optimal_size(code.q)}")
    covered = len(covered_words(code, 1))
    total = code.q ** (code.n - 1)
    print(f"perfect: {covered == total} ({covered}/{total} subwords covered)")
    return EXIT_OK


def cmd_sqs(args) -> int:
    if args.check:
        header, quads = parse_blocks(Path(args.check).read_text())
        q = args.q if args.q is not None else int(header.get("q", max(max(b) for b in quads) + 1))
        sqs_ok = is_sqs(quads, q)
        step_ok = not step_violations(quads)
        print(f"is_sqs: {sqs_ok}")
        print(f"step property: {step_ok}")
        return EXIT_OK if sqs_ok else EXIT_INVALID
    if args.q is None:
        raise InvalidArgument("sqs needs --q or --check FILE")
    if args.exact_cover:
        quads = exact_cover_sqs(args.q, args.budget)
        if quads is None:
            print(f"no SQS({args.q}) exists")
            return EXIT_INVALID
        _emit(format_blocks(quads, [f"sqs q={args.q} source=exact-cover"]), args.out)
        _say(args, f"is_sqs: {is_sqs(quads, args.q)}; {len(quads)} quadruples")
        return EXIT_OK
    s = build_sqs_step(args.q)
    _emit(format_blocks(s.quads, [f"sqs q={s.q} step=true"]), args.out)
    _say(args, f"is_sqs: {is_sqs(s.quads, s.q)}; step property: {not step_violations(s.quads)}")
    _say(args, f"{len(s)} quadruples, {len(select_upper_quads(s))} upper; route {s.route}")
    return EXIT_OK


def cmd_gdd(args) -> int:
    if args.check:
        m, blocks = parse_gdd(Path(args.check).read_text())
        A, A1 = family_A(m)
        bad = gdd_violations(GDD(m, tuple(sorted(blocks)), frozenset(A1 & set(blocks))))
        print(f"is_gdd: {not bad}" + (f" ({bad[0]})" if bad else ""))
        print(f"contains A: {A <= set(blocks)}")
        return EXIT_OK if not bad else EXIT_INVALID
    g = build_gdd(args.m, budget=args.budget)
    _emit(format_gdd(g), args.out)
    _say(args, f"is_gdd: True; {len(g)} blocks, {len(g.marked_A1)} marked A_1")
    return EXIT_OK


def cmd_bound(args) -> int:
    print("q\tlevenshtein\tsharp")
    for q in parse_q_range(args.q):
        r = bound_report(q)
        print(f"{q}\t{r.levenshtein_bound}\t{r.sharp_bound}")
    return EXIT_OK


def cmd_search(args) -> int:
    r = max_code_search(args.n, args.q, budget=args.budget)
    print(f"n={args.n} q={args.q} size={r.size} exact={r.exact} nodes={r.nodes} lp_bound={r.root_bound:.3f}")
    for w in r.witness:
        print(" ".join(map(str, w)))
    return EXIT_OK if r.exact else EXIT_BUDGET


def cmd_profile(args) -> int:
    if args.file:
        code, _ = parse_code(Path(args.file).read_text())
    elif args.q is not None:
        code, _ = optimal_code(args.q)
    else:
        raise InvalidArgument("profile needs FILE or --q")
    p = profile(code)
    print("class\tcount\tU\tV\tW\tZ")
    for k, count in p.class_counts.items():
        cov = "\t".join(str(p.coverage[x][k]) for x in "UVWZ")
        print(f"{k.value}\t{count}\t{cov}")
    print(f"size from coverage: {p.size_from_coverage()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="del4", description="Optimal single-deletion-correcting codes of length 4.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the file here instead of standard output")
    common.add_argument("--budget", type=float, default=None, help="search budget in seconds")
    common.add_argument("--jobs", type=int, default=1, help="validator threads")
    common.add_argument("--format", choices=["text"], default="text")
    # Every search here is deterministic already; the flag is accepted for scripts.
    common.add_argument("--seedless-deterministic", action="store_true", default=True)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an optimal code")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("perfect", parents=[common], help="build an optimal perfect code")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("verify", parents=[common], help="check a code file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sqs", parents=[common], help="build or check a Steiner quadruple system")
    p.add_argument("--q", type=int)
    p.add_argument("--check", metavar="FILE")
    p.add_argument("--exact-cover", action="store_true", help="use the exact-cover oracle instead")
    p.set_defaults(func=cmd_sqs)

    p = sub.add_parser("gdd", parents=[common], help="build or check a G(m,6,4,3)")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--check", metavar="FILE")
    p.set_defaults(func=cmd_gdd)

    p = sub.add_parser("bound", parents=[common], help="print bounds for a q range")
    p.add_argument("--q", default="4..10")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", parents=[common], help="exact maximum-code search")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("profile", parents=[common], help="class and coverage profile")
    p.add_argument("file", nargs="?")
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_profile)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ConstructionError as e:
        print(f"validation failed: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidArgument, UnsupportedParameter, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except Del4Error as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
