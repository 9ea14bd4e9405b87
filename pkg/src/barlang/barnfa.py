"""Regular bar expressions and bar NFAs.

A bar NFA is an ordinary NFA whose alphabet is names plus bound names.
Expressions are compiled with the position (Glushkov) construction, so
automata never carry epsilon transitions.
"""

from __future__ import annotations

import re
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence, Union

from .barstring import BarLetter
from .nominal import Name


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif pos is not None:
            where = f"position {pos}: "
        super().__init__(where + message)
        self.pos = pos
        self.line = line


# --- expressions -----------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class One:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Letter:
    letter: BarLetter

    def __str__(self):
        return str(self.letter)


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"

    def __str__(self):
        return f"{self.left} + {self.right}"


@dataclass(frozen=True)
class Concat:
    left: "Expr"
    right: "Expr"

    def __str__(self):
        return f"{_wrap(self.left, Sum)} {_wrap(self.right, Sum)}"


@dataclass(frozen=True)
class Star:
    inner: "Expr"

    def __str__(self):
        if isinstance(self.inner, (Zero, One, Letter)):
            return f"{self.inner}*"
        return f"({self.inner})*"


Expr = Union[Zero, One, Letter, Sum, Concat, Star]


def _wrap(e, kinds) -> str:
    return f"({e})" if isinstance(e, kinds) else str(e)


def expr_names(e: Expr) -> set[Name]:
    if isinstance(e, Letter):
        return {e.letter.name}
    if isinstance(e, (Sum, Concat)):
        return expr_names(e.left) | expr_names(e.right)
    if isinstance(e, Star):
        return expr_names(e.inner)
    return set()


_TOKEN_RE = re.compile(r"\s*(?:(?P<bar>\|[A-Za-z][A-Za-z0-9_]*)|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
                       r"|(?P<const>[01])|(?P<op>[+.*()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", pos=bad)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        tok = self.peek()
        pos = tok[2] if tok else len(self.text)
        raise ParseError(msg, pos=pos)

    def parse(self) -> Expr:
        if not self.tokens:
            raise ParseError("empty expression", pos=0)
        e = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()[1]!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() and self.peek()[1] == "+":
            self.take()
            e = Sum(e, self.term())
        return e

    def starts_factor(self, tok) -> bool:
        return tok is not None and (tok[0] in ("bar", "name", "const") or tok[1] == "(")

    def term(self) -> Expr:
        e = self.factor()
        while True:
            tok = self.peek()
            if tok and tok[1] == ".":
                self.take()
                e = Concat(e, self.factor())
            elif self.starts_factor(tok):
                e = Concat(e, self.factor())
            else:
                return e

    def factor(self) -> Expr:
        e = self.atom()
        while self.peek() and self.peek()[1] == "*":
            self.take()
            e = Star(e)
        return e

    def atom(self) -> Expr:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        kind, value, _ = tok
        if kind == "const":
            self.take()
            return Zero() if value == "0" else One()
        if kind == "name":
            self.take()
            return Letter(BarLetter(value, False))
        if kind == "bar":
            self.take()
            return Letter(BarLetter(value[1:], True))
        if value == "(":
            self.take()
            e = self.expr()
            if not (self.peek() and self.peek()[1] == ")"):
                self.error("expected ')'")
            self.take()
            return e
        self.error(f"unexpected {value!r}")


def parse_rbe(text: str) -> Expr:
    """Parse a regular bar expression.

    ``+`` is choice, juxtaposition or ``.`` is concatenation, postfix ``*``
    is iteration, ``0``/``1`` are the empty language and the empty word,
    and ``|a`` is a bound letter.  Names may be several characters long,
    so adjacent letters need whitespace or ``.`` between them.
    """
    return _Parser(text).parse()


# --- automata --------------------------------------------------------------

State = Hashable
Transition = tuple  # (src, BarLetter, dst)


@dataclass(frozen=True)
class BarNFA:
    states: tuple
    initial: State
    finals: frozenset
    transitions: tuple = ()

    def __post_init__(self):
        sts = set(self.states)
        if self.initial not in sts:
            raise ValueError(f"initial state {self.initial!r} is not a state")
        if not set(self.finals) <= sts:
            raise ValueError(f"final states {set(self.finals) - sts} are not states")
        for src, letter, dst in self.transitions:
            if src not in sts or dst not in sts:
                raise ValueError(f"transition {src!r} {letter} {dst!r} leaves the state set")
            if not isinstance(letter, BarLetter):
                raise TypeError(f"transition label must be a BarLetter, got {letter!r}")

    @classmethod
    def build(cls, states: Iterable, initial, finals: Iterable, transitions: Iterable) -> BarNFA:
        seen = {}
        for t in transitions:
            seen.setdefault((t[0], t[1], t[2]), None)
        return cls(tuple(dict.fromkeys(states)), initial, frozenset(finals), tuple(seen))

    @cached_property
    def out(self) -> dict:
        """state -> list of (letter, target)."""
        d = defaultdict(list)
        for src, letter, dst in self.transitions:
            d[src].append((letter, dst))
        return dict(d)

    @cached_property
    def by_letter(self) -> dict:
        """(state, letter) -> tuple of targets."""
        d = defaultdict(list)
        for src, letter, dst in self.transitions:
            d[src, letter].append(dst)
        return {k: tuple(v) for k, v in d.items()}

    @cached_property
    def bound_out(self) -> dict:
        """state -> list of (binder name, target)."""
        d = defaultdict(list)
        for src, letter, dst in self.transitions:
            if letter.bound:
                d[src].append((letter.name, dst))
        return dict(d)

    @cached_property
    def names(self) -> frozenset[Name]:
        return frozenset(letter.name for _, letter, _ in self.transitions)

    @cached_property
    def support(self) -> dict:
        return free_name_support(self)

    def successors(self, q, letter: BarLetter) -> tuple:
        return self.by_letter.get((q, letter), ())


def compile_rbe(e: Expr | str) -> BarNFA:
    """Position automaton: one state per letter occurrence plus a start state."""
    if isinstance(e, str):
        e = parse_rbe(e)
    letters: list[BarLetter] = []
    follow: dict[int, set[int]] = defaultdict(set)

    def walk(node):
        # returns (nullable, first, last)
        if isinstance(node, Zero):
            return False, set(), set()
        if isinstance(node, One):
            return True, set(), set()
        if isinstance(node, Letter):
            letters.append(node.letter)
            p = len(letters)
            return False, {p}, {p}
        if isinstance(node, Sum):
            n1, f1, l1 = walk(node.left)
            n2, f2, l2 = walk(node.right)
            return n1 or n2, f1 | f2, l1 | l2
        if isinstance(node, Concat):
            n1, f1, l1 = walk(node.left)
            n2, f2, l2 = walk(node.right)
            for p in l1:
                follow[p] |= f2
            first = f1 | f2 if n1 else f1
            last = l1 | l2 if n2 else l2
            return n1 and n2, first, last
        if isinstance(node, Star):
            n, f, l = walk(node.inner)
            for p in l:
                follow[p] |= f
            return True, f, l
        raise TypeError(f"not an expression: {node!r}")

    nullable, first, last = walk(e)
    states = list(range(len(letters) + 1))
    trans = [(0, letters[p - 1], p) for p in sorted(first)]
    for p in sorted(follow):
        trans.extend((p, letters[r - 1], r) for r in sorted(follow[p]))
    finals = set(last) | ({0} if nullable else set())
    return BarNFA.build(states, 0, finals, trans)


compile = compile_rbe


def literal_accepts(A: BarNFA, w: Sequence[BarLetter]) -> bool:
    current = {A.initial}
    for x in w:
        current = {q2 for q in current for q2 in A.successors(q, x)}
        if not current:
            return False
    return bool(current & A.finals)


def degree(x: BarNFA | Expr) -> int:
    if isinstance(x, BarNFA):
        return len(x.names)
    return len(expr_names(x))


def coreachable(A: BarNFA) -> set:
    """States from which some final state is reachable."""
    back = defaultdict(list)
    for src, _, dst in A.transitions:
        back[dst].append(src)
    live = set(A.finals)
    todo = deque(live)
    while todo:
        q = todo.popleft()
        for p in back[q]:
            if p not in live:
                live.add(p)
                todo.append(p)
    return live


def free_name_support(A: BarNFA) -> dict:
    """N_q for every state q: the union of FN(w) over words accepted from q.

    a is in N_q iff some path from q reaches an a-labelled transition into
    a live state without crossing a |a-transition before it.
    """
    live = coreachable(A)
    support = {q: set() for q in A.states}
    for a in A.names:
        free_a = BarLetter(a, False)
        bound_a = BarLetter(a, True)
        # states with an outgoing a-transition into a live state
        hits = {src for src, letter, dst in A.transitions if letter == free_a and dst in live}
        if not hits:
            continue
        # backwards search from the hits through non-|a transitions
        back = defaultdict(list)
        for src, letter, dst in A.transitions:
            if letter != bound_a:
                back[dst].append(src)
        reach = set(hits)
        todo = deque(hits)
        while todo:
            q = todo.popleft()
            for p in back[q]:
                if p not in reach:
                    reach.add(p)
                    todo.append(p)
        for q in reach:
            support[q].add(a)
    return {q: frozenset(ns) for q, ns in support.items()}


def enumerate_literal(A: BarNFA, max_len: int, start=None) -> set[tuple[BarLetter, ...]]:
    """All literally accepted bar strings of length at most ``max_len``."""
    start = A.initial if start is None else start
    live = coreachable(A)
    result = set()
    layer = {((), start)} if start in live else set()
    for length in range(max_len + 1):
        nxt = set()
        for w, q in layer:
            if q in A.finals:
                result.add(w)
            if length == max_len:
                continue
            for letter, q2 in A.out.get(q, ()):
                if q2 in live:
                    nxt.add((w + (letter,), q2))
        layer = nxt
    return result


def trim(A: BarNFA) -> BarNFA:
    """Restrict to states that are reachable and co-reachable (initial kept)."""
    live = coreachable(A)
    reach = {A.initial}
    todo = deque([A.initial])
    while todo:
        q = todo.popleft()
        for _, q2 in A.out.get(q, ()):
            if q2 not in reach:
                reach.add(q2)
                todo.append(q2)
    keep = (reach & live) | {A.initial}
    return BarNFA.build([q for q in A.states if q in keep], A.initial,
                        [q for q in A.finals if q in keep],
                        [t for t in A.transitions if t[0] in keep and t[2] in keep])


def relabel(A: BarNFA, prefix: str = "q") -> BarNFA:
    """Rename states to ``q0, q1, ...`` in state order, initial first."""
    order = [A.initial] + [q for q in A.states if q != A.initial]
    m = {q: f"{prefix}{i}" for i, q in enumerate(order)}
    return BarNFA.build([m[q] for q in order], m[A.initial], [m[q] for q in A.finals],
                        [(m[s], x, m[t]) for s, x, t in A.transitions])


# --- file format -----------------------------------------------------------

_STATE_TOKEN_RE = re.compile(r"[^\s#]+\Z")


def _state_token(q) -> str:
    s = str(q)
    if not _STATE_TOKEN_RE.match(s):
        raise ValueError(f"state {q!r} cannot be written as a single token")
    return s


def dumps_nfa(A: BarNFA) -> str:
    lines = [
        "states: " + " ".join(_state_token(q) for q in A.states),
        "initial: " + _state_token(A.initial),
        "final: " + " ".join(_state_token(q) for q in A.states if q in A.finals),
        "trans:",
    ]
    for src, letter, dst in A.transitions:
        lines.append(f"{_state_token(src)} {letter} {_state_token(dst)}")
    return "\n".join(lines) + "\n"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def loads_nfa(text: str) -> BarNFA:
    from .barstring import parse_letter

    states = initial = finals = None
    transitions = []
    in_trans = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if sep and key in ("states", "initial", "final", "trans") and " " not in key:
            in_trans = False
            values = rest.split()
            if key == "states":
                states = values
            elif key == "initial":
                if len(values) != 1:
                    raise ParseError("exactly one initial state required", line=lineno)
                initial = values[0]
            elif key == "final":
                finals = values
            else:
                if values:
                    raise ParseError("transitions go on the lines after 'trans:'", line=lineno)
                in_trans = True
            continue
        if not in_trans:
            raise ParseError(f"unexpected line {raw.strip()!r}", line=lineno)
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("transition lines are 'SRC LABEL DST'", line=lineno)
        try:
            letter = parse_letter(parts[1])
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
        transitions.append((parts[0], letter, parts[2]))
    if states is None or initial is None:
        raise ParseError("missing 'states:' or 'initial:' line")
    try:
        return BarNFA.build(states, initial, finals or (), transitions)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def to_dot(A: BarNFA, name: str = "barnfa") -> str:
    ids = {q: f"n{i}" for i, q in enumerate(A.states)}
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in A.states:
        shape = "doublecircle" if q in A.finals else "circle"
        label = str(q).replace('"', '\\"')
        lines.append(f'  {ids[q]} [shape={shape}, label="{label}"];')
    lines.append(f"  __start -> {ids[A.initial]};")
    for src, letter, dst in A.transitions:
        lines.append(f'  {ids[src]} -> {ids[dst]} [label="{letter}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

