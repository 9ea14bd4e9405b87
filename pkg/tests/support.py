"""Shared fixtures and brute-force helpers for the test suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

from barlang.barnfa import BarNFA, compile_rbe
from barlang.barstring import BarLetter, parse_bar_string
from barlang.oracle import alpha_closure

POOL = ("a", "b", "c")


def bs(text: str) -> tuple:
    return parse_bar_string(text)


def nfa(expr: str) -> BarNFA:
    return compile_rbe(expr)


def swap_loop() -> BarNFA:
    """s -|b-> t -a-> u -|a-> v -b-> s with s and u accepting."""
    return BarNFA.build(
        ["s", "t", "u", "v"], "s", ["s", "u"],
        [("s", BarLetter("b", True), "t"), ("t", BarLetter("a", False), "u"),
         ("u", BarLetter("a", True), "v"), ("v", BarLetter("b", False), "s")])


def all_bar_strings(max_len: int, pool=POOL):
    letters = [BarLetter(n, b) for n in pool for b in (False, True)]
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def all_words(max_len: int, pool=POOL, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(pool, repeat=n)


@lru_cache(maxsize=None)
def closure_partition(max_len: int = 5, pool=POOL):
    """Partition all bar strings up to ``max_len`` by rewrite closure.

    Each class is computed once and all its members are marked, which is
    what keeps the exhaustive run affordable.
    """
    class_of: dict = {}
    classes: list = []
    for w in all_bar_strings(max_len, pool):
        if w in class_of:
            continue
        cls = alpha_closure(w, pool)
        for u in cls:
            class_of[u] = len(classes)
        classes.append(frozenset(cls))
    return class_of, classes


XX_FSUBA = """\
# accepts xx for any name x
registers: 1
locations: q0 q1 q2
initial: q0
final: q2
trans:
q0 1 {} q1
q1 1 {} q2
"""

ABA_RA = """\
# accepts aba with a != b
registers: 1
locations: c0 c1 c2 c3
initial: c0
final: c3
trans:
c0 c1 store(1)
c1 c2 fresh(1) and keep(1,1)
c2 c3 cmp(1)
"""
