"""``platbraid`` command-line front end.

Exit codes of ``decide``: 0 equivalent, 1 distinguished, 2 unknown.
Other commands exit 0 on success and 3 on input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from . import hilden as hd
from . import io
from .braid import BudgetExhausted
from .corpus import bundle_of
from .equivalence import Budget, MoveError, MoveScript, decide_equivalence, random_equivalent
from .mixed import ALPHA, SIGMA, MixedBraidWord
from .morse import GeometricPlat, MixedMorseDiagram, braid_to_plat, part_to_algebraic, validate_morse
from .plat import PlatPresentation, format_bundle, pad_to_even
from .render import render

EXIT_CODES = {"equivalent": 0, "distinguished": 1, "unknown": 2}
INPUT_ERROR = 3


def _read(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return io.parse(text)


def _as_plat(obj, policy) -> PlatPresentation:
    if isinstance(obj, MixedMorseDiagram):
        obj = braid_to_plat(obj, policy)
    if isinstance(obj, GeometricPlat):
        return part_to_algebraic(obj)
    if isinstance(obj, MixedBraidWord):
        return PlatPresentation(pad_to_even(obj))
    if isinstance(obj, PlatPresentation):
        return obj
    raise io.ParseError(1, "expected a mixed word, geometric plat or Morse diagram")


def _policy(text: str):
    if text in ("over", "under"):
        return text
    items = [x.strip() for x in text.split(",")]
    if not all(x in ("o", "u", "over", "under") for x in items):
        raise argparse.ArgumentTypeError(f"bad label policy {text!r}")
    return items


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args) -> int:
    obj = _read(args.input)
    if isinstance(obj, MixedMorseDiagram):
        bundle = bundle_of(obj, args.label_policy)
    else:
        bundle = bundle_of(_as_plat(obj, args.label_policy))
    if args.format == "json":
        _emit(args, json.dumps({"components": bundle.component_count,
                                "classes": [list(v) for v in bundle.winding_classes]}) + "\n")
    else:
        _emit(args, format_bundle(bundle) + "\n")
    return 0


def cmd_decide(args) -> int:
    a = _as_plat(_read(args.a), args.label_policy)
    b = _as_plat(_read(args.b), args.label_policy)
    budget = Budget(max_nodes=args.budget_nodes, max_word_length=args.budget_length,
                    extra_strands=args.budget_strands, max_seconds=args.budget_seconds)
    verdict = decide_equivalence(a, b, budget)
    if args.format == "json":
        w = verdict.witness
        payload = {"status": verdict.status, "nodes": verdict.nodes,
                   "bundles": [format_bundle(x) for x in verdict.bundles or ()],
                   "script_a": str(w.script_a).splitlines() if w else None,
                   "script_b": str(w.script_b).splitlines() if w else None}
        _emit(args, json.dumps(payload) + "\n")
    else:
        _emit(args, str(verdict))
    return EXIT_CODES[verdict.status]


def cmd_moves(args) -> int:
    plat = _as_plat(_read(args.input), args.label_policy)
    with open(args.script, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    word = plat.word
    for no, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            word = MoveScript.parse(body).replay(word)
        except MoveError as exc:
            raise io.ParseError(no, str(exc)) from None
    _emit(args, io.format_mixed(word))
    return 0


def _random_word(g: int, n2: int, length: int, rng) -> MixedBraidWord:
    letters = []
    for _ in range(length):
        if g and rng.random() < 0.3:
            letters.append((ALPHA, rng.randint(1, g), rng.choice((1, -1))))
        elif n2 > 1:
            letters.append((SIGMA, rng.randint(1, n2 - 1), rng.choice((1, -1))))
    return MixedBraidWord(g, n2, tuple(letters))


def cmd_sample(args) -> int:
    rng = random.Random(args.seed)
    word = _random_word(args.g, args.strands, args.length, rng)
    text = io.format_mixed(word)
    if args.moves:
        other, script = random_equivalent(PlatPresentation(word), args.moves, args.seed)
        text = "# equivalent to:\n" + "".join(f"#   {ln}\n" for ln in text.splitlines())
        text += "".join(f"# move: {ln}\n" for ln in str(script).splitlines())
        text += io.format_mixed(other)
    _emit(args, text)
    return 0


def cmd_braid(args) -> int:
    d = _read(args.input)
    if not isinstance(d, MixedMorseDiagram):
        raise io.ParseError(1, "braid expects a morse file")
    report = validate_morse(d)
    if report:
        raise io.ParseError(1, report[0])
    _emit(args, io.format_geometric(braid_to_plat(d, args.label_policy)))
    return 0


def cmd_part(args) -> int:
    _emit(args, io.format_mixed(_as_plat(_read(args.input), args.label_policy)))
    return 0


def cmd_render(args) -> int:
    _emit(args, render(_read(args.input)))
    return 0


def cmd_gen(args) -> int:
    if args.strands % 2 or args.strands < 2:
        raise io.ParseError(1, "--strands must be even and positive")
    m = args.strands // 2
    names = args.names or [name for name, _ in hd.mixed_generators(args.g, m)]
    out = []
    for name in names:
        try:
            word = hd.generator_by_name(name, args.g, m)
        except ValueError as exc:
            raise io.ParseError(1, str(exc)) from None
        out.append(f"# {name}\n" + io.format_mixed(word))
    _emit(args, "".join(out))
    return 0


class _Parser(argparse.ArgumentParser):
    # usage errors share the input-error code so 2 always means "unknown"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="platbraid", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"platbraid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, policy=True):
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if policy:
            p.add_argument("--label-policy", type=_policy, default="over",
                           help="over, under, or a comma list with one o/u per Morse event")

    p = sub.add_parser("invariants", help="print the invariant bundle")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decide", help="search for a plat equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--budget-nodes", type=int, default=100_000)
    p.add_argument("--budget-strands", type=int, default=8,
                   help="extra moving strands allowed beyond the smaller plat")
    p.add_argument("--budget-length", type=int, default=200)
    p.add_argument("--budget-seconds", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("moves", help="apply a move script")
    p.add_argument("input")
    p.add_argument("script")
    common(p)
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("sample", help="random algebraic plat")
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--strands", type=int, default=4)
    p.add_argument("--length", type=int, default=8)
    p.add_argument("--moves", type=int, default=0, help="also emit a random equivalent plat")
    p.add_argument("--seed", type=int, default=0)
    common(p, policy=False)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("braid", help="Morse diagram to geometric plat")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("part", help="plat or Morse diagram to algebraic plat")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_part)

    p = sub.add_parser("render", help="SVG drawing")
    p.add_argument("input")
    common(p, policy=False)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("gen", help="emit mixed Hilden generator words")
    p.add_argument("names", nargs="*", help="e.g. sigma1 lambda1 mu2 tau1,3 rho1,2")
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--strands", type=int, default=4)
    common(p, policy=False)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget_nodes", 1) < 1 or getattr(args, "budget_strands", 0) < 0:
        parser.error("budgets must be positive")
    try:
        return args.func(args)
    except (io.ParseError, ValueError, BudgetExhausted, OSError) as exc:
        print(f"platbraid: error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
