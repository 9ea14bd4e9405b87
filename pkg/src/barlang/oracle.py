"""Brute-force reference semantics for tests and debugging.

Everything here works on explicit finite sets of concrete words over a
finite pool of names.  It is slow on purpose: none of it goes through the
symbolic RNNA, and the rewrite closure does not use the canonicaliser.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .barnfa import BarNFA, Concat, Expr, Letter, One, Star, Sum, Zero, enumerate_literal
from .barstring import BarLetter, free_names, is_clean, names_of, refines, swap_string, unbind
from .nominal import Name, fresh_names


@dataclass(frozen=True)
class NamePool:
    names: tuple[Name, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("a name pool must be nonempty")
        object.__setattr__(self, "names", tuple(dict.fromkeys(self.names)))

    @classmethod
    def of(cls, names: Iterable[Name] | str) -> NamePool:
        if isinstance(names, str):
            names = names.split() if " " in names else list(names)
        return cls(tuple(names))

    def __iter__(self):
        return iter(self.names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, x):
        return x in self.names


def _as_pool(pool) -> NamePool:
    return pool if isinstance(pool, NamePool) else NamePool.of(pool)


def _rewrites(w: tuple, names: Sequence[Name]):
    """One application of w|av ~ w|bu with <a>v = <b>u over bar strings."""
    for i, x in enumerate(w):
        if not x.bound:
            continue
        v = w[i + 1:]
        used = names_of(v)
        for b in names:
            if b == x.name or b in used:
                continue
            yield w[:i] + (BarLetter(b, True),) + swap_string(x.name, b, v)


def alpha_closure(w: Sequence[BarLetter], pool, scratch: int | None = None) -> set[tuple]:
    """All bar strings over ``pool`` rewrite-equivalent to ``w``.

    Intermediate strings may use ``scratch`` extra names outside the pool
    (default: two, or fewer if ``w`` has fewer binders).  Without them the
    closure is too small: e.g. |a |b b a and |b |a a b over {a, b} are only
    connected through a third name.
    """
    pool = _as_pool(pool)
    w = tuple(w)
    missing = names_of(w) - set(pool)
    if missing:
        raise ValueError(f"names {sorted(missing)} of the word are not in the pool")
    if scratch is None:
        scratch = min(2, sum(1 for x in w if x.bound))
    names = list(pool) + fresh_names(pool, scratch)
    seen = {w}
    todo = deque([w])
    while todo:
        u = todo.popleft()
        for u2 in _rewrites(u, names):
            if u2 not in seen:
                seen.add(u2)
                todo.append(u2)
    inside = set(pool)
    return {u for u in seen if names_of(u) <= inside}


def n_operator(L: Iterable[Sequence[BarLetter]], pool) -> set[tuple[Name, ...]]:
    """Global-freshness reading: unbind the clean representatives."""
    out = set()
    for w in L:
        out |= {unbind(u) for u in alpha_closure(w, pool) if is_clean(u)}
    return out


def d_operator(L: Iterable[Sequence[BarLetter]], pool) -> set[tuple[Name, ...]]:
    """Local-freshness reading: unbind every representative."""
    out = set()
    for w in L:
        out |= {unbind(u) for u in alpha_closure(w, pool)}
    return out


bar_refines = refines


def alpha_equal_recursive(w1: Sequence[BarLetter], w2: Sequence[BarLetter]) -> bool:
    """Decide alpha-equivalence by structural recursion on the first letter.

    Free heads must agree; for binders |a v and |b u either a == b and the
    tails agree, or b is not free in v and (a b)v agrees with u.  This is
    independent of the greedy canonicaliser and much cheaper than a closure.
    """
    w1, w2 = tuple(w1), tuple(w2)
    while w1 and w2:
        x, y = w1[0], w2[0]
        if x.bound != y.bound:
            return False
        if not x.bound:
            if x.name != y.name:
                return False
        elif x.name != y.name:
            if y.name in free_names(w1[1:]):
                return False
            w1 = (x,) + swap_string(x.name, y.name, w1[1:])
        w1, w2 = w1[1:], w2[1:]
    return not w1 and not w2


def alpha_representatives(w: Sequence[BarLetter], pool, fixed: Iterable[Name] | None = None) -> set[tuple]:
    """Representatives of [w] over ``pool`` generated binder by binder.

    With ``fixed`` given, names outside ``fixed`` are only produced in
    order of first use (one representative per orbit of permutations
    fixing ``fixed``), which keeps local-freshness checks small.
    """
    pool = list(_as_pool(pool))
    out = set()
    fixed_set = None if fixed is None else set(fixed)

    def rec(prefix, rest, extra_used):
        if not rest:
            out.add(prefix)
            return
        x = rest[0]
        tail = rest[1:]
        if not x.bound:
            nxt = extra_used
            if fixed_set is not None and x.name not in fixed_set and x.name not in extra_used:
                nxt = extra_used + (x.name,)
            rec(prefix + (x,), tail, nxt)
            return
        blocked = free_names(tail) - {x.name}
        new_extra_taken = False
        for c in pool:
            if c in blocked:
                continue
            nxt = extra_used
            if fixed_set is not None and c not in fixed_set and c not in extra_used:
                if new_extra_taken:
                    continue
                new_extra_taken = True
                nxt = extra_used + (c,)
            rec(prefix + (BarLetter(c, True),), swap_string(x.name, c, tail), nxt)

    w = tuple(w)
    if fixed_set is not None:
        # free names outside the fixed set occupy their extra slots up front
        extra = tuple(n for n in dict.fromkeys(x.name for x in w if not x.bound)
                      if n not in fixed_set and n in free_names(w))
        if extra:
            raise ValueError("free names of the word must lie in the fixed set")
    rec((), w, ())
    return out


def d_member(u: Sequence[Name], words: Iterable[Sequence[BarLetter]]) -> bool:
    """Is the data word ``u`` in D of the given literal words?"""
    u = tuple(u)
    for w in words:
        if len(w) != len(u):
            continue
        candidate = tuple(BarLetter(n, x.bound) for n, x in zip(u, w))
        if alpha_equal_recursive(candidate, w):
            return True
    return False


def bar_member(w: Sequence[BarLetter], words: Iterable[Sequence[BarLetter]]) -> bool:
    """Is [w] the class of one of ``words``?"""
    w = tuple(w)
    marks = tuple(x.bound for x in w)
    for w2 in words:
        if len(w2) == len(w) and tuple(x.bound for x in w2) == marks and alpha_equal_recursive(w, w2):
            return True
    return False


def _shortlex(words):
    return sorted(words, key=lambda w: (len(w), [str(x) for x in w]))


def brute_inclusion(A1: BarNFA, A2: BarNFA, semantics: str, max_len: int, pool=None):
    """First counterexample of length <= max_len to L(A1) <= L(A2), else None.

    ``semantics`` is "bar" or "local".  For "local" the data words are
    generated up to renaming of names outside the automata's names, which
    is exact because both data languages are supported by those names.
    """
    sem = str(getattr(semantics, "value", semantics)).lower()
    words1 = enumerate_literal(A1, max_len)
    words2 = enumerate_literal(A2, max_len)
    by_len2: dict[int, list] = {}
    for w in words2:
        by_len2.setdefault(len(w), []).append(w)
    if sem == "bar":
        for w in _shortlex(words1):
            if not bar_member(w, by_len2.get(len(w), ())):
                return w
        return None
    if sem != "local":
        raise ValueError(f"brute_inclusion supports 'bar' and 'local', not {semantics!r}")
    fixed = set(A1.names) | set(A2.names)
    if pool is None:
        pool = sorted(fixed) + fresh_names(fixed, max_len)
    pool = _as_pool(pool)
    checked = set()
    for w in _shortlex(words1):
        for u in _shortlex(unbind(r) for r in alpha_representatives(w, pool, fixed)):
            if u in checked:
                continue
            checked.add(u)
            if not d_member(u, by_len2.get(len(u), ())):
                return u
    return None


def rbe_matches(e: Expr, w: Sequence[BarLetter]) -> bool:
    """Literal membership by recursion on the expression (no automaton)."""
    w = tuple(w)

    @lru_cache(maxsize=None)
    def m(node, i, j):
        if isinstance(node, Zero):
            return False
        if isinstance(node, One):
            return i == j
        if isinstance(node, Letter):
            return j == i + 1 and w[i] == node.letter
        if isinstance(node, Sum):
            return m(node.left, i, j) or m(node.right, i, j)
        if isinstance(node, Concat):
            return any(m(node.left, i, k) and m(node.right, k, j) for k in range(i, j + 1))
        if isinstance(node, Star):
            if i == j:
                return True
            return any(m(node.inner, i, k) and m(node, k, j) for k in range(i + 1, j + 1))
        raise TypeError(f"not an expression: {node!r}")

    return m(e, 0, len(w))


def random_rbe(rng: random.Random, depth: int, names: Sequence[Name] = ("a", "b", "c")) -> Expr:
    """A random expression of nesting depth at most ``depth``.

    The root is an operator whenever ``depth`` > 0, so single letters
    only show up as subterms.
    """
    names = list(names)

    def leaf():
        r = rng.random()
        if r < 0.05:
            return Zero()
        if r < 0.12:
            return One()
        return Letter(BarLetter(rng.choice(names), rng.random() < 0.45))

    def node(d, root=False):
        if d <= 0 or (not root and rng.random() < 0.3):
            return leaf()
        kind = rng.choice(("sum", "concat", "concat", "star"))
        if kind == "star":
            return Star(node(d - 1))
        left, right = node(d - 1), node(d - 1)
        return Sum(left, right) if kind == "sum" else Concat(left, right)

    return node(depth, root=True)
