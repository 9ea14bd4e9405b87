"""Command-line interface: ``barlang <command> ...``.

Exit codes: 0 for a positive verdict or plain success, 1 for a negative
verdict (member/include/equiv), 2 for usage and parse errors, 3 when the
inclusion search runs out of budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import models
from .barnfa import BarNFA, ParseError, compile_rbe, dumps_nfa, enumerate_literal, loads_nfa, parse_rbe, to_dot
from .barstring import canonical_form, clean_form, format_bar_string, parse_bar_string, parse_word, unbind
from .inclusion import BudgetExceeded, default_budget, equivalence, inclusion, is_closed_nfa
from .nominal import fresh_names
from .oracle import alpha_representatives
from .rnna import Semantics, SymbolicRnna, accepts

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _automaton(arg: str, as_expr: bool) -> BarNFA:
    if as_expr:
        return compile_rbe(arg)
    return loads_nfa(_read(arg))


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _budget(args) -> int:
    if args.budget is not None:
        if args.budget <= 0:
            raise UsageError("--budget must be positive")
        return args.budget
    try:
        return default_budget()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _tokens(words: Sequence[str]) -> list[str]:
    return [t for w in words for t in w.split()]


# --- commands --------------------------------------------------------------

def cmd_compile(args) -> int:
    if (args.expr is None) == (args.file is None):
        raise UsageError("compile needs exactly one of --expr STR or FILE")
    text = args.expr if args.expr is not None else _read(args.file)
    _emit(dumps_nfa(compile_rbe(parse_rbe(text.strip()))), args.output)
    return EXIT_OK


def cmd_member(args) -> int:
    A = _automaton(args.automaton, args.expr)
    sem = Semantics.parse(args.semantics)
    tokens = _tokens(args.word)
    if sem in (Semantics.LITERAL, Semantics.BAR):
        word = parse_bar_string(tokens)
    else:
        word = parse_word(tokens)
    ok = accepts(SymbolicRnna(A), word, sem)
    print("yes" if ok else "no")
    return EXIT_OK if ok else EXIT_NO


def _warn_open(A1: BarNFA, A2: BarNFA) -> None:
    open_ones = [label for label, A in (("A1", A1), ("A2", A2)) if not is_closed_nfa(A)]
    if open_ones:
        print(f"warning: {' and '.join(open_ones)} accept(s) strings with free names; "
              "global-freshness inclusion is decided as bar inclusion, which is exact "
              "only for closed languages", file=sys.stderr)


def _report(label: str, verdict) -> None:
    print(f"{label}included" if verdict.included else f"{label}not included")
    if not verdict.included:
        print(f"witness: {verdict.witness_text()}")


def cmd_include(args) -> int:
    A1 = _automaton(args.a1, args.expr)
    A2 = _automaton(args.a2, args.expr)
    if Semantics.parse(args.semantics) is Semantics.GLOBAL:
        _warn_open(A1, A2)
    verdict = inclusion(A1, A2, args.semantics, budget=_budget(args))
    _report("", verdict)
    return EXIT_OK if verdict.included else EXIT_NO


def cmd_equiv(args) -> int:
    A1 = _automaton(args.a1, args.expr)
    A2 = _automaton(args.a2, args.expr)
    if Semantics.parse(args.semantics) is Semantics.GLOBAL:
        _warn_open(A1, A2)
    verdict = equivalence(A1, A2, args.semantics, budget=_budget(args))
    print("equal" if verdict.equal else "not equal")
    _report("A1 <= A2: ", verdict.forward)
    _report("A2 <= A1: ", verdict.backward)
    return EXIT_OK if verdict.equal else EXIT_NO


def cmd_canon(args) -> int:
    print(format_bar_string(canonical_form(parse_bar_string(_tokens(args.word)))))
    return EXIT_OK


def _sample_words(A: BarNFA, sem: Semantics, max_len: int) -> list[str]:
    literal = enumerate_literal(A, max_len)
    if sem is Semantics.LITERAL:
        words = {format_bar_string(w) for w in literal}
    elif sem is Semantics.BAR:
        words = {format_bar_string(canonical_form(w)) for w in literal}
    elif sem is Semantics.GLOBAL:
        words = {" ".join(unbind(clean_form(w, A.names))) for w in literal}
    else:
        pool = sorted(A.names) + fresh_names(A.names, max_len)
        words = {" ".join(unbind(r)) for w in literal for r in alpha_representatives(w, pool, A.names)}
    return sorted(words, key=lambda s: (len(s.split()), s))


def cmd_sample(args) -> int:
    if args.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    A = _automaton(args.automaton, args.expr)
    words = _sample_words(A, Semantics.parse(args.semantics), args.max_len)
    if args.limit is not None:
        words = words[: args.limit]
    for w in words:
        print(w if w else "(empty)")
    return EXIT_OK


def cmd_convert(args) -> int:
    text = _read(args.file)
    M = models.loads_fsuba(text) if args.source == "fsuba" else models.loads_fra(text)
    _emit(dumps_nfa(models.to_barnfa(M)), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    _emit(to_dot(_automaton(args.automaton, args.expr)), args.output)
    return EXIT_OK


# --- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="barlang", description="Bar NFAs and regular data languages.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def expr_flag(sp):
        sp.add_argument("--expr", action="store_true",
                        help="read automaton arguments as bar expressions instead of files")

    c = sub.add_parser("compile", help="compile a bar expression to a bar NFA file")
    c.add_argument("file", nargs="?", help="file containing the expression")
    c.add_argument("--expr", help="the expression itself")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_compile)

    m = sub.add_parser("member", help="test membership of a word")
    m.add_argument("--semantics", default="bar", choices=[s.value for s in Semantics])
    expr_flag(m)
    m.add_argument("automaton")
    m.add_argument("word", nargs="*", help="letters; bar letters are written |a")
    m.set_defaults(func=cmd_member)

    for name, func, helptext in (("include", cmd_include, "decide L(A1) <= L(A2)"),
                                 ("equiv", cmd_equiv, "decide L(A1) = L(A2)")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--semantics", default="bar", choices=["bar", "global", "local"])
        sp.add_argument("--budget", type=int, help="maximum number of explored configurations")
        expr_flag(sp)
        sp.add_argument("a1")
        sp.add_argument("a2")
        sp.set_defaults(func=func)

    k = sub.add_parser("canon", help="print the canonical representative of a bar string")
    k.add_argument("word", nargs="+")
    k.set_defaults(func=cmd_canon)

    s = sub.add_parser("sample", help="list accepted words up to a length")
    s.add_argument("--semantics", default="bar", choices=[x.value for x in Semantics])
    s.add_argument("--max-len", type=int, default=4)
    s.add_argument("--limit", type=int)
    expr_flag(s)
    s.add_argument("automaton")
    s.set_defaults(func=cmd_sample)

    v = sub.add_parser("convert", help="translate an FSUBA or forgetful RA into a bar NFA")
    v.add_argument("--from", dest="source", required=True, choices=["fsuba", "fra"])
    v.add_argument("file")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_convert)

    d = sub.add_parser("dot", help="export a bar NFA in Graphviz DOT syntax")
    expr_flag(d)
    d.add_argument("automaton")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
