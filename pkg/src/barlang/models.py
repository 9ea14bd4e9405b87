"""Register-based frontends: FSUBAs and forgetful register automata.

Both come with their direct run semantics and a translation to bar NFAs.
The translation treats the configurations as an RNNA, keeps only those
whose register contents lie in a fixed finite name set A0, and labels
bound transitions by names in A0 plus one extra name.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple, Sequence, Union

from .barnfa import BarNFA, ParseError
from .barstring import BarLetter
from .nominal import Name, check_name, fresh_names, least_name_not_in, swap

Registers = tuple  # tuple[Optional[Name], ...]; None is an empty register


def _fmt_regs(regs: Registers) -> str:
    return "[" + ",".join("_" if r is None else r for r in regs) + "]"


def _swap_regs(regs: Registers, a: Name, b: Name) -> Registers:
    return tuple(None if r is None else swap(a, b, r) for r in regs)


def _contents(regs: Registers) -> frozenset[Name]:
    return frozenset(r for r in regs if r is not None)


# --- FSUBA -----------------------------------------------------------------

class FsubaConfig(NamedTuple):
    location: str
    assignment: Registers  # index k-1 holds register k

    def __str__(self) -> str:
        return f"{self.location}{_fmt_regs(self.assignment)}"

    @property
    def contents(self) -> frozenset[Name]:
        return _contents(self.assignment)

    def swapped(self, a: Name, b: Name) -> FsubaConfig:
        return FsubaConfig(self.location, _swap_regs(self.assignment, a, b))


@dataclass(frozen=True)
class FsubaTransition:
    source: str
    register: int
    erase: frozenset
    target: str


@dataclass(frozen=True)
class Fsuba:
    registers: int
    locations: tuple
    initial: str
    finals: frozenset
    transitions: tuple = ()
    assignment: tuple = ()  # pairs (register, name)

    def __post_init__(self):
        locs = set(self.locations)
        if self.initial not in locs:
            raise ValueError(f"initial location {self.initial!r} unknown")
        if not set(self.finals) <= locs:
            raise ValueError(f"final locations {set(self.finals) - locs} unknown")
        for t in self.transitions:
            if t.source not in locs or t.target not in locs:
                raise ValueError(f"transition {t} uses an unknown location")
            if not 1 <= t.register <= self.registers:
                raise ValueError(f"register {t.register} out of range 1..{self.registers}")
            if not all(1 <= i <= self.registers for i in t.erase):
                raise ValueError(f"erase set {sorted(t.erase)} out of range 1..{self.registers}")
        for k, n in self.assignment:
            if not 1 <= k <= self.registers:
                raise ValueError(f"initial assignment names register {k}")
            check_name(n)

    def initial_config(self) -> FsubaConfig:
        regs = [None] * self.registers
        for k, n in self.assignment:
            regs[k - 1] = n
        return FsubaConfig(self.initial, tuple(regs))

    def is_final(self, c: FsubaConfig) -> bool:
        return c.location in self.finals

    def outgoing(self, location: str):
        return [t for t in self.transitions if t.source == location]


def _write_erase(regs: Registers, k: int, x: Name, erase: Iterable[int]) -> Registers:
    out = list(regs)
    out[k - 1] = x
    for i in erase:
        out[i - 1] = None
    return tuple(out)


def fsuba_step(M: Fsuba, c: FsubaConfig, x: Name) -> set[FsubaConfig]:
    out = set()
    for t in M.outgoing(c.location):
        held = c.assignment[t.register - 1]
        if held is None or held == x:
            out.add(FsubaConfig(t.target, _write_erase(c.assignment, t.register, x, t.erase)))
    return out


def fsuba_accepts(M: Fsuba, word: Sequence[Name]) -> bool:
    current = {M.initial_config()}
    for x in word:
        current = {c2 for c in current for c2 in fsuba_step(M, c, x)}
        if not current:
            return False
    return any(M.is_final(c) for c in current)


def fsuba_rnna_successors(M: Fsuba, c: FsubaConfig, x: Name) -> tuple[set, set]:
    """Free and bound successors of a configuration in the induced RNNA.

    Free: read a stored x, or copy a stored x into an empty register.
    Bound: write x into an empty register, provided x is not stored.
    """
    free, bound = set(), set()
    stored = c.contents
    for t in M.outgoing(c.location):
        held = c.assignment[t.register - 1]
        if held is not None:
            if held == x:
                free.add(FsubaConfig(t.target, _write_erase(c.assignment, t.register, x, t.erase)))
        elif x in stored:
            free.add(FsubaConfig(t.target, _write_erase(c.assignment, t.register, x, t.erase)))
        else:
            bound.add(FsubaConfig(t.target, _write_erase(c.assignment, t.register, x, t.erase)))
    return free, bound


# --- forgetful register automata ------------------------------------------

@dataclass(frozen=True)
class Atom:
    kind: str  # cmp | store | fresh | keep
    i: int
    j: int = 0  # keep(j, i): copy register j into register i

    def __str__(self):
        if self.kind == "keep":
            return f"keep({self.j},{self.i})"
        return f"{self.kind}({self.i})"

    def holds(self, w: Registers, x: Name, v: Registers) -> bool:
        i = self.i - 1
        if self.kind == "cmp":
            return w[i] == x
        if self.kind == "store":
            return v[i] is None or v[i] == x
        if self.kind == "fresh":
            return w[i] != x
        if self.kind == "keep":
            return v[i] is None or v[i] == w[self.j - 1]
        raise ValueError(f"unknown atom {self.kind!r}")

    def indices(self):
        return (self.i, self.j) if self.kind == "keep" else (self.i,)


@dataclass(frozen=True)
class And:
    parts: tuple

    def __str__(self):
        if not self.parts:
            return "true"
        return " and ".join(f"({p})" if isinstance(p, Or) else str(p) for p in self.parts)

    def holds(self, w, x, v) -> bool:
        return all(p.holds(w, x, v) for p in self.parts)

    def indices(self):
        return tuple(i for p in self.parts for i in p.indices())


@dataclass(frozen=True)
class Or:
    parts: tuple

    def __str__(self):
        return " or ".join(str(p) for p in self.parts)

    def holds(self, w, x, v) -> bool:
        return any(p.holds(w, x, v) for p in self.parts)

    def indices(self):
        return tuple(i for p in self.parts for i in p.indices())


TRUE = And(())
Constraint = Union[Atom, And, Or]


def cmp(i):
    return Atom("cmp", i)


def store(i):
    return Atom("store", i)


def fresh(i):
    return Atom("fresh", i)


def keep(j, i):
    return Atom("keep", i, j)


class RaConfig(NamedTuple):
    location: str
    registers: Registers

    def __str__(self) -> str:
        return f"{self.location}{_fmt_regs(self.registers)}"

    @property
    def contents(self) -> frozenset[Name]:
        return _contents(self.registers)

    def swapped(self, a: Name, b: Name) -> RaConfig:
        return RaConfig(self.location, _swap_regs(self.registers, a, b))


@dataclass(frozen=True)
class ForgetfulRA:
    registers: int
    locations: tuple
    initial: str
    finals: frozenset
    constraints: tuple = ()  # triples (source, target, constraint)

    def __post_init__(self):
        locs = set(self.locations)
        if self.initial not in locs:
            raise ValueError(f"initial location {self.initial!r} unknown")
        if not set(self.finals) <= locs:
            raise ValueError(f"final locations {set(self.finals) - locs} unknown")
        for src, dst, phi in self.constraints:
            if src not in locs or dst not in locs:
                raise ValueError(f"constraint {src} -> {dst} uses an unknown location")
            bad = [i for i in phi.indices() if not 1 <= i <= self.registers]
            if bad:
                raise ValueError(f"register index {bad[0]} out of range 1..{self.registers}")

    def initial_config(self) -> RaConfig:
        return RaConfig(self.initial, (None,) * self.registers)

    def is_final(self, c: RaConfig) -> bool:
        return c.location in self.finals

    def outgoing(self, location: str):
        return [(dst, phi) for src, dst, phi in self.constraints if src == location]


def ra_successors(M: ForgetfulRA, c: RaConfig, x: Name) -> set[RaConfig]:
    """All configurations reachable on input x.

    Non-spontaneity confines each new cell to empty, x, or an old value,
    so the candidate assignments can be enumerated outright.
    """
    w = c.registers
    cells = [None, x] + sorted(c.contents - {x})
    out = set()
    for dst, phi in M.outgoing(c.location):
        for v in product(cells, repeat=M.registers):
            if phi.holds(w, x, v):
                out.add(RaConfig(dst, v))
    return out


def ra_accepts(M: ForgetfulRA, word: Sequence[Name]) -> bool:
    current = {M.initial_config()}
    for x in word:
        current = {c2 for c in current for c2 in ra_successors(M, c, x)}
        if not current:
            return False
    return any(M.is_final(c) for c in current)


# --- translation to bar NFAs ----------------------------------------------

def _alphabet(M) -> tuple[list[Name], Name]:
    """A0 (register count many names, covering the initial contents) and *."""
    init = sorted(M.initial_config().contents)
    a0 = init + fresh_names(init, max(0, M.registers - len(init)))
    star = least_name_not_in(a0)
    return a0, star


def _free_and_scratch(M, c, x):
    if isinstance(M, Fsuba):
        return fsuba_rnna_successors(M, c, x)
    succ = ra_successors(M, c, x)
    if x in c.contents:
        return succ, set()
    return set(), succ


def to_barnfa(M: Union[Fsuba, ForgetfulRA]) -> BarNFA:
    """Bar NFA with the same local-freshness language as the register model."""
    a0, star = _alphabet(M)
    inside = set(a0)
    labels = a0 + [star]
    start = M.initial_config()
    states = {start}
    transitions = []
    todo = deque([start])
    while todo:
        c = todo.popleft()
        targets = []
        for x in sorted(c.contents):
            free, _ = _free_and_scratch(M, c, x)
            targets += [(BarLetter(x, False), t) for t in sorted(free, key=str)]
        b = least_name_not_in(inside | {star} | c.contents)
        _, generic = _free_and_scratch(M, c, b)
        for t in sorted(generic, key=str):
            for a in labels:
                if a in t.contents:
                    continue
                t2 = t.swapped(a, b)
                if t2.contents <= inside:
                    targets.append((BarLetter(a, True), t2))
        for letter, t in targets:
            transitions.append((c, letter, t))
            if t not in states:
                states.add(t)
                todo.append(t)
    ordered = [start] + sorted(states - {start}, key=str)
    ids = {c: str(c) for c in ordered}
    return BarNFA.build([ids[c] for c in ordered], ids[start],
                        [ids[c] for c in ordered if M.is_final(c)],
                        [(ids[s], x, ids[t]) for s, x, t in transitions])


# --- file formats ----------------------------------------------------------

def _header(text: str):
    """Split a model file into header fields and transition lines."""
    fields: dict[str, str] = {}
    assigns: list[tuple[int, str]] = []
    trans: list[tuple[int, str]] = []
    in_trans = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"(registers|locations|initial|final|assign|trans)\s*:(.*)\Z", line)
        if m:
            key, rest = m.group(1), m.group(2).strip()
            in_trans = key == "trans"
            if key == "trans":
                if rest:
                    raise ParseError("transitions go on the lines after 'trans:'", line=lineno)
            elif key == "assign":
                assigns.append((lineno, rest))
            else:
                fields[key] = rest
            continue
        if not in_trans:
            raise ParseError(f"unexpected line {raw.strip()!r}", line=lineno)
        trans.append((lineno, line))
    for key in ("registers", "locations", "initial"):
        if key not in fields:
            raise ParseError(f"missing '{key}:' line")
    try:
        r = int(fields["registers"])
    except ValueError:
        raise ParseError("'registers:' expects an integer") from None
    if r < 0:
        raise ParseError("'registers:' must be nonnegative")
    return r, fields, assigns, trans


def loads_fsuba(text: str) -> Fsuba:
    r, fields, assigns, lines = _header(text)
    assignment = []
    for lineno, rest in assigns:
        for item in rest.replace(",", " ").split():
            m = re.match(r"(\d+)=([A-Za-z][A-Za-z0-9_]*)\Z", item)
            if not m:
                raise ParseError(f"bad assignment {item!r}; expected k=name", line=lineno)
            assignment.append((int(m.group(1)), m.group(2)))
    transitions = []
    for lineno, line in lines:
        m = re.match(r"(\S+)\s+(\d+)\s+\{([^}]*)\}\s+(\S+)\Z", line)
        if not m:
            raise ParseError("FSUBA transitions are 'SRC k {i,j} DST'", line=lineno)
        erase = [s for s in re.split(r"[,\s]+", m.group(3).strip()) if s]
        try:
            erase_set = frozenset(int(s) for s in erase)
        except ValueError:
            raise ParseError("erase sets hold register numbers", line=lineno) from None
        transitions.append(FsubaTransition(m.group(1), int(m.group(2)), erase_set, m.group(4)))
    try:
        return Fsuba(r, tuple(fields["locations"].split()), fields["initial"].strip(),
                     frozenset(fields.get("final", "").split()), tuple(transitions), tuple(assignment))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dumps_fsuba(M: Fsuba) -> str:
    lines = [f"registers: {M.registers}", "locations: " + " ".join(M.locations),
             f"initial: {M.initial}", "final: " + " ".join(l for l in M.locations if l in M.finals)]
    if M.assignment:
        lines.append("assign: " + " ".join(f"{k}={n}" for k, n in M.assignment))
    lines.append("trans:")
    for t in M.transitions:
        lines.append(f"{t.source} {t.register} {{{','.join(str(i) for i in sorted(t.erase))}}} {t.target}")
    return "\n".join(lines) + "\n"


_CTOK = re.compile(r"\s*(?:(?P<atom>(cmp|store|fresh)\s*\(\s*\d+\s*\)|keep\s*\(\s*\d+\s*,\s*\d+\s*\))"
                   r"|(?P<kw>and|or|true)\b|(?P<paren>[()]))")


def parse_constraint(text: str) -> Constraint:
    """constraint := conj ('or' conj)* ; conj := atom ('and' atom)*"""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _CTOK.match(text, pos)
        if not m:
            raise ParseError(f"bad constraint near {text[pos:]!r}", pos=pos)
        if m.group("atom"):
            kind = "atom"
        elif m.group("kw"):
            kind = "kw"
        else:
            kind = "paren"
        tokens.append((kind, m.group(kind).replace(" ", "")))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    i = 0

    def peek():
        return tokens[i][1] if i < len(tokens) else None

    def disj():
        nonlocal i
        parts = [conj()]
        while peek() == "or":
            i += 1
            parts.append(conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj():
        nonlocal i
        parts = [atom()]
        while peek() == "and":
            i += 1
            parts.append(atom())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def atom():
        nonlocal i
        if i >= len(tokens):
            raise ParseError("unexpected end of constraint")
        kind, value = tokens[i]
        i += 1
        if value == "(":
            inner = disj()
            if peek() != ")":
                raise ParseError("expected ')' in constraint")
            i += 1
            return inner
        if value == "true":
            return TRUE
        if kind != "atom":
            raise ParseError(f"unexpected {value!r} in constraint")
        head, args = value.split("(")
        nums = [int(s) for s in args.rstrip(")").split(",")]
        if head == "keep":
            return keep(nums[0], nums[1])
        return Atom(head, nums[0])

    if not tokens:
        raise ParseError("empty constraint")
    result = disj()
    if i != len(tokens):
        raise ParseError(f"trailing {tokens[i][1]!r} in constraint")
    return result


def loads_fra(text: str) -> ForgetfulRA:
    r, fields, assigns, lines = _header(text)
    if assigns:
        raise ParseError("forgetful RAs start with empty registers; 'assign:' is not allowed")
    pairs: dict[tuple[str, str], list] = {}
    for lineno, line in lines:
        parts = line.split(None, 2)
        if len(parts) != 3:
            raise ParseError("RA transitions are 'SRC DST CONSTRAINT'", line=lineno)
        try:
            phi = parse_constraint(parts[2])
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
        pairs.setdefault((parts[0], parts[1]), []).append(phi)
    constraints = tuple((s, d, phis[0] if len(phis) == 1 else Or(tuple(phis)))
                        for (s, d), phis in pairs.items())
    try:
        return ForgetfulRA(r, tuple(fields["locations"].split()), fields["initial"].strip(),
                           frozenset(fields.get("final", "").split()), constraints)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dumps_fra(M: ForgetfulRA) -> str:
    lines = [f"registers: {M.registers}", "locations: " + " ".join(M.locations),
             f"initial: {M.initial}", "final: " + " ".join(l for l in M.locations if l in M.finals),
             "trans:"]
    for src, dst, phi in M.constraints:
        lines.append(f"{src} {dst} {phi}")
    return "\n".join(lines) + "\n"
