"""Bar strings: words over names and bound names ``|a``."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .nominal import Name, Transposition, check_name, least_name_not_in, name_enumeration, swap


class BarLetter(NamedTuple):
    name: Name
    bound: bool = False

    def __str__(self) -> str:
        return ("|" if self.bound else "") + self.name

    def swapped(self, a: Name, b: Name) -> BarLetter:
        return BarLetter(swap(a, b, self.name), self.bound)


BarString = tuple[BarLetter, ...]


def free(a: Name) -> BarLetter:
    return BarLetter(a, False)


def bound(a: Name) -> BarLetter:
    return BarLetter(a, True)


def parse_letter(token: str) -> BarLetter:
    if token.startswith("|"):
        return BarLetter(check_name(token[1:]), True)
    return BarLetter(check_name(token), False)


def parse_bar_string(text: str | Sequence[str]) -> tuple[BarLetter, ...]:
    """Parse whitespace-separated tokens, ``|a`` being a bound letter.

    A list of tokens is accepted as well (e.g. straight from argv); each
    element may itself contain several whitespace-separated tokens.
    """
    if not isinstance(text, str):
        text = " ".join(text)
    return tuple(parse_letter(tok) for tok in text.split())


def format_bar_string(w: Iterable[BarLetter]) -> str:
    return " ".join(str(x) for x in w)


def parse_word(text: str | Sequence[str]) -> tuple[Name, ...]:
    if not isinstance(text, str):
        text = " ".join(text)
    return tuple(check_name(tok) for tok in text.split())


def names_of(w: Iterable[BarLetter]) -> set[Name]:
    return {x.name for x in w}


def free_names(w: Sequence[BarLetter]) -> frozenset[Name]:
    """Names with a free occurrence not preceded by their own binder."""
    binders: set[Name] = set()
    fn = set()
    for x in w:
        if x.bound:
            binders.add(x.name)
        elif x.name not in binders:
            fn.add(x.name)
    return frozenset(fn)


def is_closed(w: Sequence[BarLetter]) -> bool:
    return not free_names(w)


def is_clean(w: Sequence[BarLetter]) -> bool:
    bnames = [x.name for x in w if x.bound]
    if len(set(bnames)) != len(bnames):
        return False
    return not (set(bnames) & free_names(w))


def unbind(w: Iterable[BarLetter]) -> tuple[Name, ...]:
    return tuple(x.name for x in w)


def apply_transposition_string(t: Transposition, w: Iterable[BarLetter]) -> tuple[BarLetter, ...]:
    return swap_string(t.first, t.second, w)


def swap_string(a: Name, b: Name, w: Iterable[BarLetter]) -> tuple[BarLetter, ...]:
    if a == b:
        return tuple(w)
    return tuple(x.swapped(a, b) for x in w)


def canonical_form(w: Sequence[BarLetter]) -> tuple[BarLetter, ...]:
    """The least-name representative of the alpha-class of ``w``.

    Scanning left to right, each binder ``|a v`` is renamed to the first
    enumeration name c with c == a or c not free in v, and c is swapped
    with a throughout the remainder.  Only FN(v) matters because the
    admissible names are exactly those outside the support of <a>[v].
    """
    w = tuple(w)
    out = []
    i = 0
    while i < len(w):
        x = w[i]
        rest = w[i + 1:]
        if x.bound:
            blocked = free_names(rest) - {x.name}
            c = least_name_not_in(blocked)
            out.append(BarLetter(c, True))
            w = w[:i + 1] + swap_string(x.name, c, rest)
        else:
            out.append(x)
        i += 1
    return tuple(out)


def alpha_equivalent(w1: Sequence[BarLetter], w2: Sequence[BarLetter]) -> bool:
    return canonical_form(w1) == canonical_form(w2)


def clean_form(w: Sequence[BarLetter], avoid: Iterable[Name] = ()) -> tuple[BarLetter, ...]:
    """A clean alpha-equivalent of ``w``.

    Binders are renamed left to right to the least names occurring neither
    in the input, nor in the output so far, nor in ``avoid``.
    """
    w = tuple(w)
    used = names_of(w) | set(avoid)
    fresh = (n for n in name_enumeration() if n not in used)
    out = []
    for i in range(len(w)):
        x = w[i]
        if x.bound:
            c = next(fresh)
            out.append(BarLetter(c, True))
            w = w[:i + 1] + swap_string(x.name, c, w[i + 1:])
        else:
            out.append(x)
    return tuple(out)


def refines(w: Sequence[BarLetter], w2: Sequence[BarLetter]) -> bool:
    """w is below w2: w2 arises from w by barring some free letters."""
    if len(w) != len(w2):
        return False
    for x, y in zip(w, w2):
        if x.name != y.name:
            return False
        if x.bound and not y.bound:
            return False
    return True
