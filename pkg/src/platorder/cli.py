"""Command-line entry point: ``platorder <subcommand> ...``.

Exit codes: 0 success, 1 usage or malformed input, 2 budget exceeded or
nothing found within budget, 3 integrity failure. Every error is reported on
stderr as a single ``error: <kind>: <reason>`` line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidWord, format_word, parse_word
from .complexity import ComplexityFunction, ball_enumerate
from .dehornoy import DEFAULT_STEP_BUDGET, dehornoy_compare
from .errors import IntegrityError, PlatOrderError, UsageError
from .explorer import Budget, can_plat_search, explore_cell, order_classes
from .garside import normal_form
from .hilden import hilden_generators, verify_generators
from .plat import PlatSignature, plat_signature, tl_relation_checks


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _budget(args) -> Budget:
    return Budget(args.radius, args.depth, ComplexityFunction.parse(args.complexity))


def _word(args, text: str) -> BraidWord:
    return parse_word(text, args.strands)


def cmd_compare(args) -> str:
    outcome = dehornoy_compare(_word(args, args.a), _word(args, args.b), args.step_budget)
    return outcome.value + "\n"


def cmd_nf(args) -> str:
    return normal_form(_word(args, args.word)).key + "\n"


def cmd_plat(args) -> str:
    w = _word(args, args.word)
    return _dump({"word": format_word(w), "strands": w.strands, **plat_signature(w).to_json()})


def cmd_ball(args) -> str:
    ball = ball_enumerate(args.strands, args.radius)
    return "".join(f"{e.element.key} {e.length} {format_word(e.witness)}\n" for e in ball)


def cmd_hilden(args) -> str:
    return "".join(f"{g.name} {format_word(g.word)}\n" for g in hilden_generators(args.n))


def cmd_cell(args) -> str:
    return _dump(explore_cell(_word(args, args.seed), _budget(args)).to_json())


def cmd_order(args) -> str:
    seeds = [_word(args, s) for s in args.seeds]
    return _dump(order_classes(seeds, _budget(args)).to_json())


def cmd_canplat(args) -> str:
    if (args.target is None) == (args.target_signature is None):
        raise UsageError("give exactly one of --target WORD or --target-signature JSON")
    if args.target is not None:
        target = plat_signature(_word(args, args.target))
    else:
        try:
            target = PlatSignature.from_json(json.loads(args.target_signature))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad --target-signature: {exc}") from None
    return _dump(can_plat_search(target, args.strands, _budget(args)).to_json())


def cmd_selftest(args) -> str:
    lines = []
    for n in range(1, args.max_level + 1):
        lines += [c.line() for c in verify_generators(n)]
    lines += [f"{'PASS' if ok else 'FAIL'} {label}" for label, ok in tl_relation_checks(args.max_level)]
    if any(line.startswith("FAIL") for line in lines):
        # verify_generators raises on its own; only TL failures get here
        sys.stdout.write("\n".join(lines) + "\n")
        raise IntegrityError("Temperley-Lieb relation check failed")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="platorder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, strands=True):
        p = sub.add_parser(name, help=help_text)
        if strands:
            p.add_argument("--strands", type=int, required=True)
        p.add_argument("--output", help="write the report here instead of stdout")
        p.set_defaults(func=func)
        return p

    def budget_flags(p):
        p.add_argument("--radius", type=int, default=5, help="ball radius (default 5)")
        p.add_argument("--depth", type=int, default=4, help="Hilden moves per side (default 4)")
        p.add_argument("--complexity", default="geodesic:8",
                       help="'geodesic[:limit]' or 'garside' (default geodesic:8)")

    p = add("compare", cmd_compare, "Dehornoy comparison: LT, EQ or GT")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--step-budget", type=int, default=DEFAULT_STEP_BUDGET)

    add("nf", cmd_nf, "left normal form key").add_argument("word")
    add("plat", cmd_plat, "plat-closure signature as JSON").add_argument("word")

    p = add("ball", cmd_ball, "list the ball of a given radius")
    p.add_argument("--radius", type=int, required=True)

    p = add("hilden", cmd_hilden, "list Hilden generators", strands=False)
    p.add_argument("--n", type=int, required=True)

    p = add("cell", cmd_cell, "explore one double-coset cell")
    p.add_argument("seed")
    budget_flags(p)

    p = add("order", cmd_order, "order the cells of several seeds")
    p.add_argument("seeds", nargs="+")
    budget_flags(p)

    p = add("canplat", cmd_canplat, "distinguished class for a target signature")
    p.add_argument("--target", help="braid word whose plat signature is the target")
    p.add_argument("--target-signature", help="signature JSON as printed by 'plat'")
    budget_flags(p)

    p = add("selftest", cmd_selftest, "generator and Temperley-Lieb checks", strands=False)
    p.add_argument("--max-level", type=int, default=3)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        return 0
    except PlatOrderError as exc:
        reason = " ".join(str(exc).split())
        sys.stderr.write(f"error: {exc.kind}: {reason}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
