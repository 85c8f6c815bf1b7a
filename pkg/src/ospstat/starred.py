"""
Ordered set partitions and their starred-permutation encodings.

A descent-starred permutation writes every block in decreasing order and
marks each within-block adjacency with a star; an ascent-starred one does
the same with increasing blocks.  A star "at position i" sits in the gap
between the i-th and (i+1)-th entries.

>>> d = DescentStarred.parse("7*3*2 6 4*1 5")
>>> op_inv(d), op_maj(d)
(7, 4)
>>> str(descent_starred_to_osp(d))
'237|6|14|5'
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .perm import (
    Permutation, asc_set, coinv, coinv_start_at, comaj, des_set, enumerate_sn,
    inv, inv_end_at, maj, rlcomaj, rlmaj,
)

__all__ = [
    "OrderedSetPartition", "DescentStarred", "AscentStarred", "PrimedStarred",
    "osp_to_descent_starred", "descent_starred_to_osp",
    "osp_to_ascent_starred", "ascent_starred_to_osp",
    "op_inv", "op_inv_pairs", "op_inv_ascent", "op_maj", "op_maj_by_descents",
    "op_coinv", "op_comaj", "op_rlmaj", "op_rlcomaj", "extended_stat",
    "inv_prime", "maj_prime", "right_to_left_minima",
    "starred_trivial_bijection", "enumerate_starred", "enumerate_osp",
    "parse_starred", "starred_from_json",
]


@dataclass(frozen=True)
class OrderedSetPartition:
    """A sequence of disjoint nonempty blocks whose union is {1..n}."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("ordered set partition with an empty block")
            if seen & b:
                raise ValueError("blocks of an ordered set partition must be disjoint")
            seen |= b
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"blocks do not cover 1..{len(seen)}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @classmethod
    def parse(cls, text: str) -> OrderedSetPartition:
        """Read "237|6|14|5"; blocks with separators (", " or spaces) allow n > 9."""
        text = text.strip()
        if not text:
            return cls(())
        blocks = []
        for chunk in text.split("|"):
            chunk = chunk.strip()
            if "," in chunk or " " in chunk:
                blocks.append(frozenset(int(t) for t in chunk.replace(",", " ").split()))
            else:
                blocks.append(frozenset(int(c) for c in chunk))
        return cls(tuple(blocks))

    def __str__(self) -> str:
        compact = self.n <= 9
        parts = []
        for b in self.blocks:
            vals = sorted(b)
            parts.append("".join(map(str, vals)) if compact else ",".join(map(str, vals)))
        return "|".join(parts)


def parse_starred(text: str) -> tuple[tuple[int, ...], frozenset[int]]:
    """Split starred text into (entries, star positions).

    Without whitespace every digit is one entry ("7*32*1"); with whitespace,
    entries are separated by spaces or stars ("7*3*2 6 4*1 5").  A trailing
    star marks the gap after the last entry.
    """
    text = text.strip()
    entries: list[int] = []
    stars: set[int] = set()
    if not any(ch.isspace() for ch in text):
        for ch in text:
            if ch == "*":
                if not entries:
                    raise ValueError(f"star before any entry in {text!r}")
                stars.add(len(entries))
            elif ch.isdigit():
                entries.append(int(ch))
            else:
                raise ValueError(f"unexpected character {ch!r} in {text!r}")
        return tuple(entries), frozenset(stars)
    for token in text.split():
        pieces = token.split("*")
        if not all(pieces[:-1]):
            raise ValueError(f"malformed starred token {token!r}")
        for idx, piece in enumerate(pieces):
            if piece:
                entries.append(int(piece))
            if idx < len(pieces) - 1:
                stars.add(len(entries))
    return tuple(entries), frozenset(stars)


def _format_starred(base: Sequence[int], stars: frozenset[int]) -> str:
    out = []
    for pos, v in enumerate(base, start=1):
        out.append(str(v))
        if pos in stars:
            out.append("*")
        elif pos < len(base):
            out.append(" ")
    return "".join(out)


@dataclass(frozen=True)
class _Starred:
    base: Permutation
    stars: frozenset[int]

    flavor = ""

    def __post_init__(self):
        if not isinstance(self.base, Permutation):
            object.__setattr__(self, "base", Permutation(self.base))
        if not isinstance(self.stars, frozenset):
            object.__setattr__(self, "stars", frozenset(self.stars))
        allowed = self._allowed_stars()
        if not self.stars <= allowed:
            bad = sorted(self.stars - allowed)
            raise ValueError(f"stars {bad} not allowed for a {self.flavor}-starred {self.base}")

    def _allowed_stars(self) -> frozenset[int]:
        raise NotImplementedError

    @classmethod
    def _trusted(cls, base: Permutation, stars: frozenset[int]):
        obj = object.__new__(cls)
        object.__setattr__(obj, "base", base)
        object.__setattr__(obj, "stars", stars)
        return obj

    @classmethod
    def parse(cls, text: str):
        entries, stars = parse_starred(text)
        return cls(Permutation(entries), stars)

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def k(self) -> int:
        return len(self.stars)

    def __str__(self) -> str:
        return _format_starred(self.base, self.stars)

    def __repr__(self) -> str:
        return f"{type(self).__name__}.parse({str(self)!r})"

    def to_json(self) -> str:
        return json.dumps(
            {"base": list(self.base), "stars": sorted(self.stars), "flavor": self.flavor}
        )


class DescentStarred(_Starred):
    """(sigma, S) with S a subset of Des(sigma)."""

    flavor = "descent"

    def _allowed_stars(self):
        return des_set(self.base)


class AscentStarred(_Starred):
    """(sigma, T) with T a subset of Asc(sigma)."""

    flavor = "ascent"

    def _allowed_stars(self):
        return asc_set(self.base)


class PrimedStarred(_Starred):
    """(sigma, S) with S a subset of Des(sigma) together with the sentinel n.

    Equivalently a descent-starred permutation of {0..n} ending in 0; the
    sentinel star at n joins sigma_n to that trailing zero.
    """

    flavor = "primed"

    def _allowed_stars(self):
        return des_set(self.base) | {len(self.base)} if self.base else frozenset()


_FLAVORS = {cls.flavor: cls for cls in (DescentStarred, AscentStarred, PrimedStarred)}


def starred_from_json(text: str) -> _Starred:
    data = json.loads(text)
    try:
        cls = _FLAVORS[data["flavor"]]
    except KeyError:
        raise ValueError(f"unknown flavor {data.get('flavor')!r}") from None
    return cls(Permutation(data["base"]), frozenset(data["stars"]))


# -- ordered set partition <-> starred permutations -------------------------

def _osp_to_starred(o: OrderedSetPartition, descending: bool):
    entries: list[int] = []
    stars: set[int] = set()
    for block in o.blocks:
        vals = sorted(block, reverse=descending)
        for v in vals[:-1]:
            entries.append(v)
            stars.add(len(entries))
        entries.append(vals[-1])
    return Permutation._trusted(entries), frozenset(stars)


def _starred_to_osp(base: Sequence[int], stars: frozenset[int]) -> OrderedSetPartition:
    blocks = []
    current: list[int] = []
    for pos, v in enumerate(base, start=1):
        current.append(v)
        if pos not in stars:
            blocks.append(frozenset(current))
            current = []
    return OrderedSetPartition(tuple(blocks))


def osp_to_descent_starred(o: OrderedSetPartition) -> DescentStarred:
    return DescentStarred._trusted(*_osp_to_starred(o, descending=True))


def osp_to_ascent_starred(o: OrderedSetPartition) -> AscentStarred:
    return AscentStarred._trusted(*_osp_to_starred(o, descending=False))


def descent_starred_to_osp(d: DescentStarred) -> OrderedSetPartition:
    return _starred_to_osp(d.base, d.stars)


def ascent_starred_to_osp(a: AscentStarred) -> OrderedSetPartition:
    return _starred_to_osp(a.base, a.stars)


# -- statistics ---------------------------------------------------------------

def _expect(x, cls, name):
    if not isinstance(x, cls):
        raise TypeError(f"{name} is defined on {cls.__name__}, got {type(x).__name__}")


def op_inv_pairs(d: DescentStarred) -> frozenset[tuple[int, int]]:
    """Inversions (i, j) of sigma with j unstarred and i..j-1 not all starred."""
    s, S = d.base, d.stars
    n = len(s)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if s[i - 1] > s[j - 1]
        and j not in S
        and not all(x in S for x in range(i, j))
    )


def op_inv(d: DescentStarred) -> int:
    _expect(d, DescentStarred, "op_inv")
    s = d.base
    return inv(s) - sum(1 + inv_end_at(s, i) for i in d.stars)


def op_inv_ascent(a: AscentStarred) -> int:
    _expect(a, AscentStarred, "op_inv_ascent")
    s = a.base
    return inv(s) - sum(inv_end_at(s, i + 1) for i in a.stars)


def _count_from(positions: frozenset[int], lo: int, hi: int) -> int:
    return sum(1 for x in positions if lo <= x <= hi)


def op_maj(d: DescentStarred) -> int:
    """maj(sigma) minus, for each star, the descents weakly to its right."""
    _expect(d, DescentStarred, "op_maj")
    s = d.base
    D = des_set(s)
    n = len(s)
    return maj(s) - sum(_count_from(D, i, n - 1) for i in d.stars)


def op_maj_by_descents(d: DescentStarred) -> int:
    """Same value, summed descent by descent: each loses the stars weakly left of it."""
    _expect(d, DescentStarred, "op_maj_by_descents")
    return sum(i - _count_from(d.stars, 1, i) for i in des_set(d.base))


def op_coinv(x: DescentStarred | AscentStarred) -> int:
    s = x.base
    if isinstance(x, DescentStarred):
        return coinv(s) - sum(coinv_start_at(s, i) for i in x.stars)
    if isinstance(x, AscentStarred):
        return coinv(s) - sum(1 + coinv_start_at(s, i + 1) for i in x.stars)
    raise TypeError(f"op_coinv is not defined on {type(x).__name__}")


def op_comaj(a: AscentStarred) -> int:
    _expect(a, AscentStarred, "op_comaj")
    s = a.base
    A = asc_set(s)
    return comaj(s) - sum(_count_from(A, i, len(s) - 1) for i in a.stars)


def op_rlmaj(d: DescentStarred) -> int:
    _expect(d, DescentStarred, "op_rlmaj")
    s = d.base
    D = des_set(s)
    return rlmaj(s) - sum(_count_from(D, 1, i) for i in d.stars)


def op_rlcomaj(a: AscentStarred) -> int:
    _expect(a, AscentStarred, "op_rlcomaj")
    s = a.base
    A = asc_set(s)
    return rlcomaj(s) - sum(_count_from(A, 1, i) for i in a.stars)


_EXTENDED = {
    "op_coinv": op_coinv,
    "op_comaj": op_comaj,
    "op_rlmaj": op_rlmaj,
    "op_rlcomaj": op_rlcomaj,
}


def extended_stat(x: DescentStarred | AscentStarred, which: str) -> int:
    try:
        fn = _EXTENDED[which]
    except KeyError:
        raise ValueError(f"unknown extended statistic {which!r}") from None
    return fn(x)


def inv_prime(x: PrimedStarred) -> int:
    _expect(x, PrimedStarred, "inv_prime")
    s = x.base
    return inv(s) - sum(inv_end_at(s, i) for i in x.stars)


def maj_prime(x: PrimedStarred) -> int:
    _expect(x, PrimedStarred, "maj_prime")
    s = x.base
    D = des_set(s)
    return maj(s) - sum(_count_from(D, i, len(s) - 1) for i in x.stars)


def right_to_left_minima(x) -> frozenset[int]:
    """Entries smaller than everything to their right (of the base permutation)."""
    s = x.base if isinstance(x, _Starred) else x
    out = []
    low = None
    for v in reversed(tuple(s)):
        if low is None or v < low:
            out.append(v)
            low = v
    return frozenset(out)


def starred_trivial_bijection(x: DescentStarred | AscentStarred, which: str):
    """Apply a trivial bijection to the base and carry the stars along.

    reverse and complement swap the descent and ascent flavors; reverse
    reflects star positions i -> n - i.
    """
    s, n = x.base, x.n
    if which == "reverse":
        base = Permutation._trusted(reversed(s))
        stars = frozenset(n - i for i in x.stars)
    elif which == "complement":
        base = Permutation._trusted(n + 1 - v for v in s)
        stars = x.stars
    elif which == "reverse_complement":
        base = Permutation._trusted(n + 1 - v for v in reversed(s))
        stars = frozenset(n - i for i in x.stars)
    else:
        raise ValueError(f"unknown trivial bijection {which!r}")
    if isinstance(x, DescentStarred):
        cls = DescentStarred if which == "reverse_complement" else AscentStarred
    elif isinstance(x, AscentStarred):
        cls = AscentStarred if which == "reverse_complement" else DescentStarred
    else:
        raise TypeError("trivial bijections act on descent- or ascent-starred permutations")
    return cls._trusted(base, stars)


# -- enumeration --------------------------------------------------------------

def enumerate_starred(n: int, k: int, flavor: str = "descent") -> Iterator[_Starred]:
    """All starred permutations of size n with k stars, lex on base then stars."""
    try:
        cls = _FLAVORS[flavor]
    except KeyError:
        raise ValueError(f"unknown flavor {flavor!r}") from None
    if n < 0 or k < 0:
        return
    for s in enumerate_sn(n):
        if flavor == "descent":
            slots = des_set(s)
        elif flavor == "ascent":
            slots = asc_set(s)
        else:
            slots = des_set(s) | {n} if n else frozenset()
        if len(slots) < k:
            continue
        for combo in itertools.combinations(sorted(slots), k):
            yield cls._trusted(s, frozenset(combo))


def enumerate_osp(n: int, blocks: int | None = None) -> Iterator[OrderedSetPartition]:
    """Ordered set partitions of {1..n}, optionally with a fixed block count."""
    ks: Iterable[int] = range(n) if blocks is None else [n - blocks]
    for k in ks:
        for d in enumerate_starred(n, k, "descent"):
            yield descent_starred_to_osp(d)
