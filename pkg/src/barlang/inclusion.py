"""Inclusion and equivalence of bar NFAs under bar and local semantics.

The left automaton is run literally; the right one is tracked as a set of
states of its name-dropping RNNA.  The search is an explicit
breadth-first exploration of (left state, right frontier) pairs with
memoisation, so it terminates and produces shortest counterexamples.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .barnfa import BarNFA
from .barstring import clean_form, unbind
from .rnna import RnnaState, Semantics, SymbolicRnna

DEFAULT_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"inclusion search exceeded the budget of {budget} configurations")
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get("BARLANG_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"BARLANG_BUDGET must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"BARLANG_BUDGET must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class ProductConfiguration:
    q1: object
    frontier: frozenset  # of RnnaState


@dataclass
class InclusionVerdict:
    included: bool
    witness: Optional[tuple] = None      # bar string (bar) or data word (local)
    trace: Optional[list] = None         # A1 transitions along the counterexample
    explored: int = 0
    semantics: str = "bar"

    def __bool__(self) -> bool:
        return self.included

    def witness_text(self) -> str:
        if self.witness is None:
            return ""
        return " ".join(str(x) for x in self.witness)


def _prune(frontier: set[RnnaState]) -> frozenset:
    """Drop states that are restrictions of another state at the same q."""
    by_q: dict = {}
    for st in frontier:
        by_q.setdefault(st.q, []).append(st)
    keep = []
    for sts in by_q.values():
        if len(sts) == 1:
            keep.extend(sts)
            continue
        sts.sort(key=lambda s: -len(s.rho))
        maximal = []
        for st in sts:
            if not any(st.rho.is_restriction_of(m.rho) for m in maximal):
                maximal.append(st)
        keep.extend(maximal)
    return frozenset(keep)


def _search(A1: BarNFA, A2: BarNFA, local: bool, maximal_only: bool, budget: int):
    R2 = SymbolicRnna(A2)
    start = ProductConfiguration(A1.initial, frozenset({R2.initial_state()}))
    parent = {start: None}
    todo = deque([start])
    while todo:
        conf = todo.popleft()
        if conf.q1 in A1.finals and not any(R2.is_final(st) for st in conf.frontier):
            path = []
            c = conf
            while parent[c] is not None:
                prev, trans = parent[c]
                path.append(trans)
                c = prev
            path.reverse()
            return path, len(parent)
        for letter, q1b in A1.out.get(conf.q1, ()):
            if letter.bound or not local:
                nxt = R2.step(conf.frontier, letter, maximal_only)
            else:
                nxt = R2.data_step(conf.frontier, letter.name, True, maximal_only)
            frontier = _prune(nxt) if maximal_only else frozenset(nxt)
            conf2 = ProductConfiguration(q1b, frontier)
            if conf2 in parent:
                continue
            if len(parent) >= budget:
                raise BudgetExceeded(budget)
            parent[conf2] = (conf, (conf.q1, letter, q1b))
            todo.append(conf2)
    return None, len(parent)


def inclusion_bar(A1: BarNFA, A2: BarNFA, maximal_only: bool = True,
                  budget: int | None = None) -> InclusionVerdict:
    """Decide L_alpha(A1) <= L_alpha(A2); the witness is an A1 bar string."""
    budget = default_budget() if budget is None else budget
    path, explored = _search(A1, A2, False, maximal_only, budget)
    if path is None:
        return InclusionVerdict(True, explored=explored, semantics="bar")
    w = tuple(letter for _, letter, _ in path)
    return InclusionVerdict(False, w, path, explored, "bar")


def local_witness(w: tuple, avoid) -> tuple:
    """Instantiate every binder of ``w`` with a distinct name outside ``avoid``."""
    return unbind(clean_form(w, avoid))


def inclusion_local(A1: BarNFA, A2: BarNFA, maximal_only: bool = True,
                    budget: int | None = None) -> InclusionVerdict:
    """Decide D(L_alpha(A1)) <= D(L_alpha(A2)); the witness is a data word."""
    budget = default_budget() if budget is None else budget
    path, explored = _search(A1, A2, True, maximal_only, budget)
    if path is None:
        return InclusionVerdict(True, explored=explored, semantics="local")
    w = tuple(letter for _, letter, _ in path)
    witness = local_witness(w, A1.names | A2.names)
    return InclusionVerdict(False, witness, path, explored, "local")


def is_closed_nfa(A: BarNFA) -> bool:
    return not A.support[A.initial]


def inclusion(A1: BarNFA, A2: BarNFA, semantics="bar", **kw) -> InclusionVerdict:
    sem = Semantics.parse(semantics)
    if sem is Semantics.LOCAL:
        return inclusion_local(A1, A2, **kw)
    if sem in (Semantics.BAR, Semantics.GLOBAL):
        verdict = inclusion_bar(A1, A2, **kw)
        if sem is Semantics.GLOBAL:
            verdict.semantics = "global"
            if verdict.witness is not None:
                verdict.witness = unbind(clean_form(verdict.witness, A1.names | A2.names))
        return verdict
    raise ValueError(f"inclusion is not defined for {sem.value} semantics")


@dataclass
class EquivalenceVerdict:
    forward: InclusionVerdict
    backward: InclusionVerdict

    @property
    def equal(self) -> bool:
        return self.forward.included and self.backward.included

    def __bool__(self) -> bool:
        return self.equal

    def __iter__(self):
        return iter((self.forward, self.backward))


def equivalence(A1: BarNFA, A2: BarNFA, semantics="bar", **kw) -> EquivalenceVerdict:
    return EquivalenceVerdict(inclusion(A1, A2, semantics, **kw), inclusion(A2, A1, semantics, **kw))
