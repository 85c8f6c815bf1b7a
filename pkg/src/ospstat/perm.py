"""
Permutations of {1..n} in one-line notation, with descent, ascent and
inversion machinery and the classical Mahonian statistics.

Positions and values are 1-based throughout.

>>> p = Permutation.parse("7326415")
>>> sorted(des_set(p)), stat(p, "inv"), stat(p, "maj")
([1, 2, 4, 5], 13, 12)
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from math import comb

__all__ = [
    "Permutation", "STATISTICS", "TRIVIAL_BIJECTIONS",
    "des_set", "asc_set", "inv_set",
    "inv_end_at", "inv_start_at", "coinv_start_at",
    "inv", "maj", "des", "asc", "coinv", "comaj", "rlmaj", "rlcomaj",
    "stat", "reverse", "complement", "reverse_complement",
    "trivial_bijection", "enumerate_sn", "format_entries", "parse_entries",
]


def parse_entries(text: str) -> tuple[int, ...]:
    """Read compact digits ("7326415") or space-separated integers."""
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() or ch == "," for ch in text):
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    if not text.isdigit():
        raise ValueError(f"not a permutation: {text!r}")
    return tuple(int(ch) for ch in text)


def format_entries(entries: Sequence[int]) -> str:
    if len(entries) <= 9:
        return "".join(str(v) for v in entries)
    return " ".join(str(v) for v in entries)


class Permutation(tuple):
    """A rearrangement of 1..n, stored as a tuple of its entries."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> Permutation:
        # skips validation; callers guarantee a bijection on 1..n
        return tuple.__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(parse_entries(text))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        """Entry at 1-based position i."""
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} outside 1..{len(self)}")
        return tuple.__getitem__(self, i - 1)

    def __str__(self) -> str:
        return format_entries(self)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def des_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def asc_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] < p[i])


def inv_set(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    n = len(p)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if p[i - 1] > p[j - 1]
    )


def _check_position(p: Sequence[int], i: int) -> None:
    if not 1 <= i <= len(p):
        raise IndexError(f"position {i} outside 1..{len(p)}")


def inv_end_at(p: Sequence[int], j: int) -> int:
    """Number of inversions (i, j) ending at position j."""
    _check_position(p, j)
    v = p[j - 1]
    return sum(1 for a in range(j - 1) if p[a] > v)


def inv_start_at(p: Sequence[int], i: int) -> int:
    """Number of inversions (i, j) starting at position i."""
    _check_position(p, i)
    v = p[i - 1]
    return sum(1 for b in range(i, len(p)) if p[b] < v)


def coinv_start_at(p: Sequence[int], i: int) -> int:
    """Number of coinversions (i, j), i.e. j > i with p_i < p_j."""
    _check_position(p, i)
    v = p[i - 1]
    return sum(1 for b in range(i, len(p)) if p[b] > v)


def inv(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def maj(p: Sequence[int]) -> int:
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p)) if p[i - 1] > p[i])


def asc(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p)) if p[i - 1] < p[i])


def coinv(p: Sequence[int]) -> int:
    return comb(len(p), 2) - inv(p)


def comaj(p: Sequence[int]) -> int:
    return sum(i for i in range(1, len(p)) if p[i - 1] < p[i])


def rlmaj(p: Sequence[int]) -> int:
    n = len(p)
    return sum(n - i for i in range(1, n) if p[i - 1] > p[i])


def rlcomaj(p: Sequence[int]) -> int:
    n = len(p)
    return sum(n - i for i in range(1, n) if p[i - 1] < p[i])


STATISTICS = {
    "inv": inv,
    "maj": maj,
    "des": des,
    "asc": asc,
    "coinv": coinv,
    "comaj": comaj,
    "rlmaj": rlmaj,
    "rlcomaj": rlcomaj,
}


def stat(p: Sequence[int], which: str) -> int:
    try:
        fn = STATISTICS[which]
    except KeyError:
        raise ValueError(f"unknown permutation statistic {which!r}") from None
    return fn(p)


def reverse(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(tuple(p)))


def complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return Permutation._trusted(n + 1 - v for v in p)


def reverse_complement(p: Sequence[int]) -> Permutation:
    return complement(reverse(p))


TRIVIAL_BIJECTIONS = {
    "reverse": reverse,
    "complement": complement,
    "reverse_complement": reverse_complement,
}


def trivial_bijection(p: Sequence[int], which: str) -> Permutation:
    try:
        fn = TRIVIAL_BIJECTIONS[which]
    except KeyError:
        raise ValueError(f"unknown trivial bijection {which!r}") from None
    return fn(p)


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """All n! permutations in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(entries)
