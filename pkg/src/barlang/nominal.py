"""Names, transpositions and injective partial renamings.

Names are plain identifier strings.  The group of finite permutations is
never materialised: everything downstream only needs single swaps and
injective partial maps, the latter standing for cosets of the pointwise
stabiliser of their domain.
"""

from __future__ import annotations

import itertools
import re
import string
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Name = str

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_name(text: str) -> bool:
    return bool(_NAME_RE.match(text))


def check_name(text: str) -> Name:
    if not is_name(text):
        raise ValueError(f"not a valid name: {text!r}")
    return text


def name_enumeration() -> Iterator[Name]:
    """Yield a, b, ..., z, aa, ab, ... (shortlex over lowercase letters).

    This is the order in which fresh names are handed out; it is a
    subsequence of the byte-lexicographic order restricted to each length.
    """
    for length in itertools.count(1):
        for letters in itertools.product(string.ascii_lowercase, repeat=length):
            yield "".join(letters)


def least_name_not_in(avoid: Iterable[Name]) -> Name:
    avoid = set(avoid)
    for n in name_enumeration():
        if n not in avoid:
            return n
    raise AssertionError("unreachable")


def fresh_names(avoid: Iterable[Name], count: int) -> list[Name]:
    avoid = set(avoid)
    out = []
    for n in name_enumeration():
        if len(out) == count:
            break
        if n not in avoid:
            out.append(n)
    return out


@dataclass(frozen=True)
class Transposition:
    first: Name
    second: Name

    def __call__(self, x: Name) -> Name:
        return apply_transposition(self, x)


def apply_transposition(t: Transposition, x: Name) -> Name:
    if x == t.first:
        return t.second
    if x == t.second:
        return t.first
    return x


def swap(a: Name, b: Name, x: Name) -> Name:
    """Apply the transposition (a b) to x."""
    if x == a:
        return b
    if x == b:
        return a
    return x


class PartialRenaming(Mapping[Name, Name]):
    """An injective finite map from names to names.

    A renaming with domain N represents the left coset pi Fix(N); two
    representatives denote the same coset iff they agree on N, which is
    exactly equality of the entries.  The image is the support of the
    coset.
    """

    __slots__ = ("_items", "_map", "_hash")

    def __init__(self, entries: Mapping[Name, Name] | Iterable[tuple[Name, Name]] = ()):
        m = dict(entries)
        if len(set(m.values())) != len(m):
            raise ValueError(f"renaming is not injective: {m}")
        self._map = m
        self._items = tuple(sorted(m.items()))
        self._hash = hash(self._items)

    @classmethod
    def identity(cls, names: Iterable[Name]) -> PartialRenaming:
        return cls((n, n) for n in names)

    def __getitem__(self, key: Name) -> Name:
        return self._map[key]

    def __iter__(self):
        return iter(k for k, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, PartialRenaming):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: PartialRenaming) -> bool:
        return self._items < other._items

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}->{v}" for k, v in self._items)
        return "{" + inner + "}"

    @property
    def items_tuple(self) -> tuple[tuple[Name, Name], ...]:
        return self._items

    @property
    def domain(self) -> frozenset[Name]:
        return frozenset(self._map)

    @property
    def image(self) -> frozenset[Name]:
        return frozenset(self._map.values())

    def preimage(self, x: Name) -> Name | None:
        for k, v in self._items:
            if v == x:
                return k
        return None

    def restrict(self, names: Iterable[Name]) -> PartialRenaming:
        return restrict(self, names)

    def post_swap(self, a: Name, b: Name) -> PartialRenaming:
        """The renaming (a b) . rho, i.e. the swap applied to every image."""
        return PartialRenaming((k, swap(a, b, v)) for k, v in self._items)

    def is_restriction_of(self, other: PartialRenaming) -> bool:
        return all(other._map.get(k) == v for k, v in self._items)


def restrict(rho: PartialRenaming, names: Iterable[Name]) -> PartialRenaming:
    keep = set(names)
    return PartialRenaming((k, v) for k, v in rho.items_tuple if k in keep)


def abstraction_equal_renaming(a: Name, rho: PartialRenaming,
                               b: Name, sigma: PartialRenaming) -> bool:
    """Decide <a>rho = <b>sigma, permutations acting on images.

    Either the pairs coincide, or a != b, b is fresh for rho and swapping
    a and b in the images of rho yields sigma.
    """
    if a == b and rho == sigma:
        return True
    if a == b:
        return False
    if b in rho.image:
        return False
    return rho.post_swap(a, b) == sigma
