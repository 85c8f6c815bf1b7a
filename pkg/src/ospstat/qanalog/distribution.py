"""
Distribution polynomials: sum over a family of the monomial in named statistics.

A family is enumerated exhaustively; each requested statistic is attached
to one of the variables q, p, z, t.

>>> str(distribution("S", 3, stats="inv"))
'1 + 2*q + 2*q^2 + q^3'
>>> str(distribution("desc", 3, 1, stats="op_maj"))
'2 + 3*q + q^2'
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Iterator, Mapping

from .poly import VARS, LaurentPolynomial

__all__ = [
    "FAMILIES", "FAMILY_ALIASES", "family_stats", "resolve_family",
    "enumerate_family", "parse_stats", "distribution", "distribution_by_k",
]

FAMILY_ALIASES = {
    "S": "S", "sn": "S", "perm": "S",
    "desc": "desc", "sgt": "desc", "descent": "desc",
    "asc": "asc", "slt": "asc", "ascent": "asc",
    "primed": "primed", "sgt_prime": "primed",
    "file": "file", "F": "file",
    "na": "na", "nonattacking": "na",
    "mixed": "mixed", "M": "mixed",
    "mixed_prime": "mixed_prime", "M_prime": "mixed_prime",
}
FAMILIES = ("S", "desc", "asc", "primed", "file", "na", "mixed", "mixed_prime")


def resolve_family(name: str) -> str:
    try:
        return FAMILY_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


def _stars(x) -> int:
    return len(x.stars)


def _stat_tables() -> dict[str, dict[str, Callable]]:
    from .. import insertion, rook, starred
    from ..perm import STATISTICS, des

    def base(fn):
        return lambda x: fn(x.base)

    desc = {
        "op_inv": starred.op_inv, "inv": starred.op_inv,
        "op_maj": starred.op_maj, "maj": starred.op_maj,
        "op_coinv": starred.op_coinv, "coinv": starred.op_coinv,
        "op_rlmaj": starred.op_rlmaj, "rlmaj": starred.op_rlmaj,
        "overline_maj": insertion.overline_maj,
        "stars": _stars, "des": base(des),
    }
    asc = {
        "op_inv": starred.op_inv_ascent, "inv": starred.op_inv_ascent,
        "op_coinv": starred.op_coinv, "coinv": starred.op_coinv,
        "op_comaj": starred.op_comaj, "comaj": starred.op_comaj,
        "op_rlcomaj": starred.op_rlcomaj, "rlcomaj": starred.op_rlcomaj,
        "stars": _stars, "des": base(des),
    }
    primed = {
        "inv_prime": starred.inv_prime, "inv": starred.inv_prime,
        "maj_prime": starred.maj_prime, "maj": starred.maj_prime,
        "stars": _stars,
    }

    def pq(fn):
        return lambda x: fn(x, rook._pq_rule(x))

    placements = {
        "unc": rook.unc,
        "uncb": pq(rook.uncb), "unca": pq(rook.unca), "can": pq(rook.canceled_count),
        "rooks": lambda x: len(x.rooks), "k": lambda x: x.k,
    }
    return {
        "S": dict(STATISTICS),
        "desc": desc,
        "asc": asc,
        "primed": primed,
        "file": dict(placements),
        "na": dict(placements),
        "mixed": dict(placements),
        "mixed_prime": {"unc_prime": rook.unc_prime, "unc": rook.unc_prime,
                        "k": lambda x: x.k},
    }


_TABLES: dict[str, dict[str, Callable]] | None = None


def family_stats(family: str) -> dict[str, Callable]:
    global _TABLES
    if _TABLES is None:
        _TABLES = _stat_tables()
    return _TABLES[resolve_family(family)]


def _k_range(family: str, n: int) -> range:
    if family in ("primed", "mixed_prime"):
        return range(n + 1)
    if family in ("desc", "asc", "mixed", "na"):
        return range(max(n, 1))
    raise ValueError(f"{family} has no k parameter")


def enumerate_family(family: str, n: int, k: int | None = None) -> Iterator:
    """Objects of the family at size n.

    k is the star count for starred families and the number of
    non-attacking rooks for na, mixed and mixed_prime (None: every k).
    For file it is the number of rooks on St_n (default n).
    """
    from .. import rook
    from ..perm import enumerate_sn
    from ..starred import enumerate_starred

    fam = resolve_family(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    if fam == "S":
        yield from enumerate_sn(n)
        return
    if fam == "file":
        yield from rook.enumerate_file(rook.Board.staircase1(n), k)
        return
    ks = _k_range(fam, n) if k is None else [k]
    for kk in ks:
        if fam in ("desc", "asc", "primed"):
            flavor = {"desc": "descent", "asc": "ascent", "primed": "primed"}[fam]
            yield from enumerate_starred(n, kk, flavor)
        elif fam == "na":
            yield from rook.enumerate_nonattacking(rook.Board.staircase(n), kk)
        else:
            yield from rook.enumerate_placements(fam, n, kk)


def parse_stats(stats) -> dict[str, tuple[str, ...]]:
    """Normalize a stat request to {var: (stat, ...)}.

    Accepts "inv", "q=inv", ["op_coinv", "op_inv"] (assigned to q, p, z, t
    in order unless named), or a mapping.  "unca+can" sums two statistics.
    """
    if isinstance(stats, str):
        stats = [s for s in stats.split(",") if s.strip()]
    if isinstance(stats, Mapping):
        items = list(stats.items())
    else:
        items = []
        free = iter(VARS)
        taken = set()
        parsed = []
        for s in stats:
            var, sep, name = s.partition("=")
            parsed.append((var.strip(), name.strip()) if sep else (None, var.strip()))
            if sep:
                taken.add(var.strip())
        for var, name in parsed:
            if var is None:
                var = next(v for v in free if v not in taken)
                taken.add(var)
            items.append((var, name))
    out: dict[str, tuple[str, ...]] = {}
    for var, name in items:
        if var not in VARS:
            raise ValueError(f"unknown variable {var!r}")
        if var in out:
            raise ValueError(f"variable {var} assigned twice")
        names = tuple(name.split("+")) if isinstance(name, str) else tuple(name)
        out[var] = tuple(n.strip() for n in names)
    if not out:
        raise ValueError("no statistic requested")
    return out


def distribution(family: str, n: int, k: int | None = None, stats="inv",
                 objects: Iterable | None = None) -> LaurentPolynomial:
    """Sum over the family of prod var^stat(obj)."""
    fam = resolve_family(family)
    table = family_stats(fam)
    wanted = parse_stats(stats)
    fns = []
    for var in VARS:
        names = wanted.get(var, ())
        try:
            fns.append(tuple(table[name] for name in names))
        except KeyError as exc:
            raise ValueError(f"statistic {exc.args[0]!r} is not defined on {fam}") from None
    counts: Counter = Counter()
    objs = enumerate_family(fam, n, k) if objects is None else objects
    for x in objs:
        counts[tuple(sum(f(x) for f in group) for group in fns)] += 1
    return LaurentPolynomial(counts)


def distribution_by_k(family: str, n: int, stats="inv", var: str = "z") -> LaurentPolynomial:
    """Sum over k of var^k times the distribution at k."""
    fam = resolve_family(family)
    total = LaurentPolynomial()
    for kk in _k_range(fam, n):
        total = total + distribution(fam, n, kk, stats).shift(**{var: kk})
    return total
