"""Command-line interface.

Exit codes: 0 success (including member-true and equivalent), 1 for a
negative answer (member-false, not-equivalent), 2 for usage, syntax, or
validation problems, 3 when a transform or bound is undefined for the
input (empty language, variant explosion, bound too large).
"""

from __future__ import annotations

import argparse
import sys

from .closure import concat, star, union
from .core import DerivationTrace, Grammar, form_text, validate
from .errors import (
    BoundTooLarge,
    EmptyLanguage,
    GrammarSyntaxError,
    InvalidOperand,
    ValidationError,
    VariantExplosion,
)
from .harness import enumerate_sentences, equiv_bounded, member
from .simplify import (
    SIMPLIFY_ORDER,
    SIMPLIFY_STEPS,
    check_predicates,
    simplify_all,
)
from .textfmt import parse_document, parse_grammar, serialize_grammar


def _load(path: str) -> Grammar:
    with open(path, encoding="utf-8") as handle:
        return parse_grammar(handle.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def format_trace(trace: DerivationTrace) -> list[str]:
    lines = [form_text(trace.start_form)]
    form = trace.start_form
    for step in trace.steps:
        form = form[: step.position] + step.rule.rhs + form[step.position + 1 :]
        lines.append(f"=> {form_text(form)}   [{step.rule} @ {step.position}]")
    return lines


def cmd_validate(args) -> int:
    with open(args.file, encoding="utf-8") as handle:
        doc = parse_document(handle.read())
    report = validate(doc.grammar, strict=args.strict)
    if report.ok:
        print("ok")
        return 0
    for v in report.violations:
        print(f"{v.code}: {v.message}", file=sys.stderr)
    return 2


def cmd_simplify(args) -> int:
    g = _load(args.file)
    if args.steps is None:
        g = simplify_all(g)
    else:
        names = [s.strip() for s in args.steps.split(",") if s.strip()]
        unknown = [s for s in names if s not in SIMPLIFY_STEPS]
        if unknown or not names:
            print(
                f"error: --steps takes a comma-separated subset of "
                f"{', '.join(SIMPLIFY_ORDER)}",
                file=sys.stderr,
            )
            return 2
        for name in names:
            g = SIMPLIFY_STEPS[name](g)
    _emit(serialize_grammar(g), args.output)
    return 0


def cmd_union(args) -> int:
    _emit(serialize_grammar(union(_load(args.left), _load(args.right))), args.output)
    return 0


def cmd_concat(args) -> int:
    _emit(serialize_grammar(concat(_load(args.left), _load(args.right))), args.output)
    return 0


def cmd_star(args) -> int:
    _emit(serialize_grammar(star(_load(args.sole))), args.output)
    return 0


def cmd_enumerate(args) -> int:
    g = _load(args.file)
    for sentence in enumerate_sentences(g, args.max_len):
        print(form_text(sentence))
    return 0


def cmd_member(args) -> int:
    g = _load(args.file)
    tokens = args.word.split()
    if tokens == ["eps"]:
        tokens = []
    word = []
    for token in tokens:
        sym = g.terminal(token)
        if sym is None:
            print("no", file=sys.stdout)
            print(f"note: {token!r} is not a terminal of the grammar", file=sys.stderr)
            return 1
        word.append(sym)
    ok, trace = member(g, tuple(word))
    if not ok:
        print("no")
        return 1
    print("yes")
    if args.trace and trace is not None:
        for line in format_trace(trace):
            print(line)
    return 0


def cmd_equiv(args) -> int:
    verdict = equiv_bounded(_load(args.left), _load(args.right), args.max_len)
    if verdict.equivalent:
        print(f"equivalent up to length {verdict.max_len}")
        return 0
    side = args.left if verdict.side == "left" else args.right
    print(
        f"not equivalent: {form_text(verdict.counterexample)!r} "
        f"generated only by {side}"
    )
    return 1


def cmd_predicates(args) -> int:
    report = check_predicates(_load(args.file))
    for name, value in report.as_dict().items():
        print(f"{name}={'true' if value else 'false'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfg-forge",
        description="Context-free grammar toolkit: closure constructions, "
        "simplification, and bounded language checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a grammar file")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="flag generated-name characters")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("simplify", help="simplify a grammar")
    p.add_argument("file")
    p.add_argument(
        "--steps",
        default=None,
        help="comma-separated steps (empty,unit,useless,inaccessible) in order; "
        "default runs all four in that order",
    )
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("union", help="union of two grammars")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_union)

    p = sub.add_parser("concat", help="concatenation of two grammars")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_concat)

    p = sub.add_parser("star", help="Kleene star of a grammar")
    p.add_argument("sole")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("enumerate", help="list all sentences up to a length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("member", help="decide membership of a word")
    p.add_argument("file")
    p.add_argument("--word", required=True, help="space-separated terminal names ('eps' or '' for the empty word)")
    p.add_argument("--trace", action="store_true", help="print a derivation")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("equiv", help="compare bounded languages")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("predicates", help="report structural predicates")
    p.add_argument("file")
    p.set_defaults(func=cmd_predicates)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GrammarSyntaxError, ValidationError, InvalidOperand) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EmptyLanguage, VariantExplosion, BoundTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
