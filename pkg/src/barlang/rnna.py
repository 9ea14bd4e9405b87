"""The name-dropping RNNA induced by a bar NFA, explored symbolically.

A state is a pair (q, rho): a bar NFA state together with an injective
renaming whose domain is a subset of N_q, the free names that words
accepted from q can mention.  Dropping names from the domain is the
name-dropping closure; the image of rho is the support of the state.
The automaton is infinite, so only successor functions are provided.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Hashable, Iterable, NamedTuple, Sequence

from .barnfa import BarNFA, free_name_support
from .barstring import BarLetter
from .nominal import Name, PartialRenaming


class Semantics(enum.Enum):
    LITERAL = "literal"
    BAR = "bar"
    GLOBAL = "global"
    LOCAL = "local"

    @classmethod
    def parse(cls, value: "str | Semantics") -> "Semantics":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown semantics {value!r}; expected one of "
                             + ", ".join(s.value for s in cls)) from None


class RnnaState(NamedTuple):
    q: Hashable
    rho: PartialRenaming

    @property
    def support(self) -> frozenset[Name]:
        return self.rho.image

    def __str__(self) -> str:
        return f"{self.q}{self.rho!r}"


def _subsets(names: Sequence[Name]):
    for k in range(len(names) + 1):
        yield from combinations(names, k)


class SymbolicRnna:
    """Successor functions of the name-dropping RNNA built from ``nfa``."""

    def __init__(self, nfa: BarNFA):
        self.nfa = nfa
        self.support = free_name_support(nfa)
        self._cache: dict = {}

    def initial_state(self) -> RnnaState:
        return RnnaState(self.nfa.initial, PartialRenaming.identity(self.support[self.nfa.initial]))

    def is_final(self, st: RnnaState) -> bool:
        return st.q in self.nfa.finals

    def free_successors(self, st: RnnaState, x: Name, maximal_only: bool = True) -> frozenset[RnnaState]:
        key = ("f", st, x, maximal_only)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rho = st.rho
        a = rho.preimage(x)
        out = set()
        if a is not None:
            dom = rho.domain
            for q2 in self.nfa.successors(st.q, BarLetter(a, False)):
                keep = dom & self.support[q2]
                if maximal_only:
                    out.add(RnnaState(q2, rho.restrict(keep)))
                else:
                    for sub in _subsets(sorted(keep)):
                        out.add(RnnaState(q2, rho.restrict(sub)))
        result = frozenset(out)
        self._cache[key] = result
        return result

    def bound_successors(self, st: RnnaState, x: Name, maximal_only: bool = True) -> frozenset[RnnaState]:
        key = ("b", st, x, maximal_only)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rho = st.rho
        dom = rho.domain
        clash = rho.preimage(x)
        out = set()
        for b, q2 in self.nfa.bound_out.get(st.q, ()):
            allowed = self.support[q2] & (dom | {b})
            # a stored name equal to x must be dropped unless it sits under b itself
            if clash is not None and clash != b:
                allowed = allowed - {clash}
            subsets = [tuple(allowed)] if maximal_only else _subsets(sorted(allowed))
            for sub in subsets:
                sigma = PartialRenaming((y, x if y == b else rho[y]) for y in sub)
                out.add(RnnaState(q2, sigma))
        result = frozenset(out)
        self._cache[key] = result
        return result

    def step(self, states: Iterable[RnnaState], letter: BarLetter, maximal_only: bool = True) -> set[RnnaState]:
        """Literal successors of a set of states under one bar letter."""
        succ = self.bound_successors if letter.bound else self.free_successors
        out = set()
        for st in states:
            out |= succ(st, letter.name, maximal_only)
        return out

    def data_step(self, states: Iterable[RnnaState], x: Name, allow_bound: bool,
                  maximal_only: bool = True) -> set[RnnaState]:
        out = set()
        for st in states:
            out |= self.free_successors(st, x, maximal_only)
            if allow_bound:
                out |= self.bound_successors(st, x, maximal_only)
        return out

    def accepts(self, word: Sequence, semantics: "Semantics | str" = Semantics.BAR,
                maximal_only: bool = True) -> bool:
        return accepts(self, word, semantics, maximal_only)


def _is_bar_string(word: Sequence) -> bool:
    return all(isinstance(x, BarLetter) for x in word)


def accepts(R: SymbolicRnna, word: Sequence, semantics: "Semantics | str" = Semantics.BAR,
            maximal_only: bool = True) -> bool:
    """Membership of ``word`` under the chosen semantics.

    LITERAL and BAR take a bar string, GLOBAL and LOCAL a plain data word
    (a sequence of names).
    """
    sem = Semantics.parse(semantics)
    word = tuple(word)
    if sem in (Semantics.LITERAL, Semantics.BAR):
        if not _is_bar_string(word):
            raise TypeError(f"{sem.value} membership expects a bar string")
    elif any(isinstance(x, BarLetter) or not isinstance(x, str) for x in word):
        raise TypeError(f"{sem.value} membership expects a data word of names")

    if sem is Semantics.LITERAL:
        from .barnfa import literal_accepts
        return literal_accepts(R.nfa, word)

    current = {R.initial_state()}
    seen: set[Name] = set()
    for letter in word:
        if sem is Semantics.BAR:
            current = R.step(current, letter, maximal_only)
        elif sem is Semantics.GLOBAL:
            current = R.data_step(current, letter, letter not in seen, maximal_only)
            seen.add(letter)
        else:
            current = R.data_step(current, letter, True, maximal_only)
        if not current:
            return False
    return any(R.is_final(st) for st in current)


def reachable_orbits(R: SymbolicRnna, word: Sequence, semantics="bar", maximal_only: bool = False) -> set:
    """Distinct (q, domain) pairs met along the run of ``word``."""
    sem = Semantics.parse(semantics)
    current = {R.initial_state()}
    seen_pairs = {(st.q, st.rho.domain) for st in current}
    seen: set[Name] = set()
    for letter in word:
        if sem is Semantics.BAR:
            current = R.step(current, letter, maximal_only)
        else:
            allow = sem is Semantics.LOCAL or letter not in seen
            current = R.data_step(current, letter, allow, maximal_only)
            seen.add(letter)
        seen_pairs |= {(st.q, st.rho.domain) for st in current}
    return seen_pairs
