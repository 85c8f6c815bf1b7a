"""
Rook placements on Ferrers boards and the unc statistic.

Cells are addressed (col, row), both 1-based, with row 1 at the bottom of
the board.  A placement records its family, which pins down which rooks are
legal and which cancellation rule unc uses:

    file          at most one rook per column, rooks may share rows
    nonattacking  at most one rook per row and per column
    mixed         M_{n,k}: St_n, one rook per column, k non-attacking rooks
                  none of which sits in row 1
    mixed_prime   M'_{n,k}: as mixed, but non-attacking rooks may use row 1

>>> P = RookPlacement.file(Board.staircase1(3), {1: 1, 2: 2, 3: 3})
>>> unc(P), str(alpha(P))
(3, '321')
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from functools import lru_cache

from .insertion import (
    inv_insertion_inverse, phi_bar_inv, phi_inv, phi_inv_inverse, phi_maj,
    phi_maj_inverse, phi_star_inv, psi_osp, psi_osp_inverse,
)
from .perm import Permutation
from .starred import DescentStarred, OrderedSetPartition

__all__ = [
    "Board", "Rook", "RookPlacement", "FILE", "NA", "FAMILIES", "RULES",
    "cancellation", "uncb", "unca", "unc", "unc_prime", "canceled_count",
    "w_pq_exponents", "W_pq_exponents", "w_pq", "W_pq",
    "alpha", "beta", "alpha_inverse", "beta_inverse",
    "gamma", "delta", "gamma_inverse", "delta_inverse",
    "phi_unc", "osp_of_mixed", "set_partition_of_nonattacking",
    "enumerate_file", "enumerate_nonattacking", "enumerate_mixed",
    "enumerate_mixed_prime", "enumerate_placements",
    "render", "placement_from_json",
]

FILE = "file"
NA = "na"
FAMILIES = ("file", "nonattacking", "mixed", "mixed_prime")
RULES = ("classic", "mixed", "wachs_white", "mixed_wachs_white")

Cell = tuple[int, int]


@dataclass(frozen=True)
class Board:
    """F(b_1, ..., b_n): column i holds b_i cells stacked from row 1."""

    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        if any(h < 0 for h in self.heights):
            raise ValueError(f"column heights must be non-negative: {self.heights}")

    @classmethod
    def staircase(cls, n: int) -> Board:
        """B_n = F(0, 1, ..., n-1)."""
        return cls(tuple(range(n)))

    @classmethod
    def staircase1(cls, n: int) -> Board:
        """St_n = F(1, 2, ..., n)."""
        return cls(tuple(range(1, n + 1)))

    @property
    def columns(self) -> int:
        return len(self.heights)

    def height(self, col: int) -> int:
        return self.heights[col - 1]

    def __contains__(self, cell: Cell) -> bool:
        c, r = cell
        return 1 <= c <= len(self.heights) and 1 <= r <= self.heights[c - 1]

    def cells(self) -> Iterator[Cell]:
        for c, h in enumerate(self.heights, start=1):
            for r in range(1, h + 1):
                yield c, r

    @property
    def size(self) -> int:
        return sum(self.heights)


@dataclass(frozen=True, order=True)
class Rook:
    col: int
    row: int
    kind: str = FILE

    def __post_init__(self):
        if self.kind not in (FILE, NA):
            raise ValueError(f"rook kind must be 'file' or 'na', not {self.kind!r}")


@dataclass(frozen=True)
class RookPlacement:
    board: Board
    rooks: tuple[Rook, ...]
    family: str = "file"
    _by_col: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        rooks = tuple(sorted(self.rooks))
        object.__setattr__(self, "rooks", rooks)
        object.__setattr__(self, "_by_col", {r.col: r for r in rooks})
        self._validate()

    # -- constructors ---------------------------------------------------------

    @classmethod
    def file(cls, board: Board, rows: Mapping[int, int]) -> RookPlacement:
        """File placement from a column -> row mapping."""
        return cls(board, tuple(Rook(c, r, FILE) for c, r in rows.items()), "file")

    @classmethod
    def nonattacking(cls, board: Board, rows: Mapping[int, int]) -> RookPlacement:
        return cls(board, tuple(Rook(c, r, NA) for c, r in rows.items()), "nonattacking")

    @classmethod
    def mixed(cls, n: int, rooks, prime: bool = False) -> RookPlacement:
        """Mixed placement on St_n from (col, row, kind) triples."""
        return cls(
            Board.staircase1(n),
            tuple(r if isinstance(r, Rook) else Rook(*r) for r in rooks),
            "mixed_prime" if prime else "mixed",
        )

    @classmethod
    def _trusted(cls, board: Board, rooks: tuple[Rook, ...], family: str) -> RookPlacement:
        self = object.__new__(cls)
        object.__setattr__(self, "board", board)
        object.__setattr__(self, "rooks", rooks)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "_by_col", {r.col: r for r in rooks})
        return self

    # -- validation -----------------------------------------------------------

    def _validate(self) -> None:
        fam = self.family
        if fam not in FAMILIES:
            raise ValueError(f"unknown placement family {fam!r}")
        cols = [r.col for r in self.rooks]
        if len(set(cols)) != len(cols):
            raise ValueError("at most one rook per column")
        for r in self.rooks:
            if (r.col, r.row) not in self.board:
                raise ValueError(f"rook at ({r.col},{r.row}) lies outside the board")
        if fam == "file" and any(r.kind != FILE for r in self.rooks):
            raise ValueError("file placements hold only file rooks")
        if fam == "nonattacking":
            if any(r.kind != NA for r in self.rooks):
                raise ValueError("non-attacking placements hold only non-attacking rooks")
            rows = [r.row for r in self.rooks]
            if len(set(rows)) != len(rows):
                raise ValueError("non-attacking rooks may not share a row")
        if fam in ("mixed", "mixed_prime"):
            n = self.board.columns
            if self.board != Board.staircase1(n):
                raise ValueError("mixed placements live on the staircase St_n")
            if len(self.rooks) != n:
                raise ValueError("mixed placements need one rook in each column")
            if fam == "mixed" and any(r.kind == NA and r.row == 1 for r in self.rooks):
                raise ValueError("non-attacking rooks may not sit in row 1")
            for r in self.rooks:
                if _canceled_by_others(self, r):
                    raise ValueError(f"rook at ({r.col},{r.row}) sits on a canceled cell")

    # -- accessors ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.board.columns

    @property
    def k(self) -> int:
        """Number of non-attacking rooks."""
        return sum(1 for r in self.rooks if r.kind == NA)

    def rook_in(self, col: int) -> Rook | None:
        return self._by_col.get(col)

    def restrict(self, columns: int) -> RookPlacement:
        """The placement on the first `columns` columns."""
        board = Board(self.board.heights[:columns])
        return RookPlacement._trusted(
            board, tuple(r for r in self.rooks if r.col <= columns), self.family
        )

    def to_dict(self) -> dict:
        return {
            "heights": list(self.board.heights),
            "rooks": [{"col": r.col, "row": r.row, "kind": r.kind} for r in self.rooks],
            "family": self.family,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return render(self)


def _canceled_by_others(p: RookPlacement, rook: Rook) -> bool:
    # only rooks to the left can reach another column, through their row
    for other in p.rooks:
        if other.col < rook.col and other.kind == NA and other.row == rook.row:
            return True
    return False


def placement_from_json(text: str | dict) -> RookPlacement:
    """Read {"heights": [...], "rooks": [{"col", "row", "kind"}], "family"?}.

    Without a family key it is inferred: all file rooks give a file placement,
    all non-attacking rooks a non-attacking one, and a full column-by-column
    mix on St_n a mixed placement (primed if some non-attacking rook uses row 1).
    """
    data = json.loads(text) if isinstance(text, str) else text
    try:
        board = Board(tuple(data["heights"]))
        rooks = tuple(Rook(int(r["col"]), int(r["row"]), r.get("kind", FILE)) for r in data["rooks"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed placement: {exc}") from None
    family = data.get("family")
    if family is None:
        kinds = {r.kind for r in rooks}
        if kinds <= {FILE}:
            family = "file"
        elif kinds == {NA} and len(rooks) < board.columns:
            family = "nonattacking"
        else:
            low = any(r.kind == NA and r.row == 1 for r in rooks)
            family = "mixed_prime" if low else "mixed"
    return RookPlacement(board, rooks, family)


# -- cancellation and unc ------------------------------------------------------

def _default_rule(family: str) -> str:
    return "mixed" if family == "mixed" else "classic"


def cancellation(p: RookPlacement, rule: str | None = None) -> frozenset[Cell]:
    """Cells canceled by the rooks of p under the named rule.

    classic:           every rook cancels its cell and the cells above it;
                       non-attacking rooks also cancel their row to the right.
    mixed:             classic, plus each non-attacking rook cancels the
                       row-1 cell of its column.
    wachs_white:       every rook cancels its cell; non-attacking rooks also
                       cancel their row to the right.  Nothing above.
    mixed_wachs_white: wachs_white plus the row-1 cell below each
                       non-attacking rook.
    """
    rule = _default_rule(p.family) if rule is None else rule
    if rule not in RULES:
        raise ValueError(f"unknown cancellation rule {rule!r}")
    board = p.board
    upward = rule in ("classic", "mixed")
    bottom = rule in ("mixed", "mixed_wachs_white")
    out: set[Cell] = set()
    for r in p.rooks:
        out.add((r.col, r.row))
        if upward:
            out.update((r.col, y) for y in range(r.row + 1, board.height(r.col) + 1))
        if r.kind == NA:
            out.update(
                (c, r.row) for c in range(r.col + 1, board.columns + 1)
                if r.row <= board.height(c)
            )
            if bottom:
                out.add((r.col, 1))
    return frozenset(out)


def _count(p: RookPlacement, rule: str | None, below: bool) -> int:
    mask = cancellation(p, rule)
    total = 0
    for r in p.rooks:
        rows = range(1, r.row) if below else range(r.row + 1, p.board.height(r.col) + 1)
        total += sum(1 for y in rows if (r.col, y) not in mask)
    return total


def uncb(p: RookPlacement, rule: str | None = None) -> int:
    """Uncanceled cells lying below a rook in its column."""
    return _count(p, rule, below=True)


def unca(p: RookPlacement, rule: str | None = None) -> int:
    """Uncanceled cells lying above a rook in its column."""
    return _count(p, rule, below=False)


def canceled_count(p: RookPlacement, rule: str | None = None) -> int:
    return len(cancellation(p, rule))


def unc(p: RookPlacement) -> int:
    """The unc statistic of p under its family's rule.

    For mixed families every column holds a rook that cancels everything
    above it, so this is also the total number of uncanceled cells.
    """
    return uncb(p, _default_rule(p.family))


def unc_prime(p: RookPlacement) -> int:
    """unc' on M'_{n,k}: row-1 cells below non-attacking rooks stay uncanceled."""
    if p.family != "mixed_prime":
        p = RookPlacement._trusted(p.board, p.rooks, "mixed_prime")
    return uncb(p, "classic")


def _pq_rule(p: RookPlacement) -> str:
    if p.family == "mixed":
        return "mixed_wachs_white"
    if p.family in ("file", "nonattacking"):
        return "wachs_white"
    raise ValueError(f"p,q weights are not defined for {p.family} placements")


def w_pq_exponents(p: RookPlacement) -> tuple[int, int]:
    """(q exponent, p exponent) of w_pq."""
    rule = _pq_rule(p)
    return uncb(p, rule), unca(p, rule)


def W_pq_exponents(p: RookPlacement) -> tuple[int, int]:
    """(q exponent, p exponent) of W_pq: canceled cells also carry a p."""
    rule = _pq_rule(p)
    return uncb(p, rule), unca(p, rule) + canceled_count(p, rule)


def w_pq(p: RookPlacement):
    from .qanalog.poly import LaurentPolynomial

    eq, ep = w_pq_exponents(p)
    return LaurentPolynomial.monomial(q=eq, p=ep)


def W_pq(p: RookPlacement):
    from .qanalog.poly import LaurentPolynomial

    eq, ep = W_pq_exponents(p)
    return LaurentPolynomial.monomial(q=eq, p=ep)


# -- file placements and permutations -----------------------------------------

def _file_rows(f: RookPlacement) -> list[int]:
    n = f.n
    if f.board != Board.staircase1(n) or len(f.rooks) != n:
        raise ValueError("expected a file placement with one rook in each column of St_n")
    return [f.rook_in(c).row for c in range(1, n + 1)]


def _from_rows(rows) -> RookPlacement:
    n = len(rows)
    return RookPlacement._trusted(
        Board.staircase1(n), tuple(Rook(c, r, FILE) for c, r in enumerate(rows, 1)), "file"
    )


def _chain(f: RookPlacement, insert) -> Permutation:
    p = Permutation()
    for row in _file_rows(f):
        p = insert(row - 1, p)
    return p


def alpha(f: RookPlacement) -> Permutation:
    """File placement in F_n to the permutation with inv = unc."""
    return _chain(f, phi_inv)


def beta(f: RookPlacement) -> Permutation:
    """File placement in F_n to the permutation with maj = unc."""
    return _chain(f, phi_maj)


def _unchain(p, peel) -> RookPlacement:
    p = p if isinstance(p, Permutation) else Permutation(p)
    rows = []
    while len(p):
        i, p = peel(p)
        rows.append(i + 1)
    return _from_rows(rows[::-1])


def alpha_inverse(p) -> RookPlacement:
    return _unchain(p, phi_inv_inverse)


def beta_inverse(p) -> RookPlacement:
    return _unchain(p, phi_maj_inverse)


# -- mixed placements and descent-starred permutations ------------------------

def phi_unc(i: int, p: RookPlacement, kind: str) -> RookPlacement:
    """Append a column to a mixed placement with a rook of the given kind
    ("bar" = file, "star" = non-attacking) having exactly i uncanceled cells
    below it."""
    n = p.n + 1
    used = {r.row for r in p.rooks if r.kind == NA}
    free = [y for y in range(1, n + 1) if y not in used]
    if kind == "bar":
        choices, rkind = free, FILE
    elif kind == "star":
        choices, rkind = [y for y in free if y != 1], NA
    else:
        raise ValueError(f"insertion kind must be 'bar' or 'star', not {kind!r}")
    if not 0 <= i < len(choices):
        raise ValueError(f"label {i} outside 0..{len(choices) - 1}")
    return RookPlacement._trusted(
        Board.staircase1(n), p.rooks + (Rook(n, choices[i], rkind),), "mixed"
    )


def _phi_unc_inverse(p: RookPlacement) -> tuple[str, int, RookPlacement]:
    n = p.n
    last = p.rook_in(n)
    reduced = p.restrict(n - 1)
    used = {r.row for r in reduced.rooks if r.kind == NA}
    below = sum(1 for y in range(1, last.row) if y not in used)
    if last.kind == NA:
        return "star", below - 1, reduced
    return "bar", below, reduced


def _empty_mixed() -> RookPlacement:
    return RookPlacement._trusted(Board(()), (), "mixed")


@lru_cache(maxsize=None)
def gamma(d: DescentStarred) -> RookPlacement:
    """Descent-starred permutation to M_{n,k} with unc = op_inv."""
    if d.n == 0:
        return _empty_mixed()
    kind, i, reduced = inv_insertion_inverse(d)
    return phi_unc(i, gamma(reduced), kind)


@lru_cache(maxsize=None)
def gamma_inverse(p: RookPlacement) -> DescentStarred:
    if p.family != "mixed":
        raise ValueError("gamma_inverse expects a placement in M_{n,k}")
    if p.n == 0:
        return DescentStarred._trusted(Permutation(), frozenset())
    kind, i, reduced = _phi_unc_inverse(p)
    prev = gamma_inverse(reduced)
    return phi_star_inv(i, prev) if kind == "star" else phi_bar_inv(i, prev)


def delta(d: DescentStarred) -> RookPlacement:
    """Descent-starred permutation to M_{n,k} with unc = op_maj."""
    return gamma(psi_osp_inverse(d))


def delta_inverse(p: RookPlacement) -> DescentStarred:
    return psi_osp(gamma_inverse(p))


def set_partition_of_nonattacking(n: int, rooks) -> list[frozenset[int]]:
    """Blocks of {1..n} from non-attacking rooks of B_n.

    A rook in column j at row r of B_n (r < j, counted from the bottom)
    puts r and j in one block.  Blocks are listed by their minima.
    """
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for col, row in rooks:
        parent[find(col)] = find(row)
    groups: dict[int, set[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), set()).add(x)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def osp_of_mixed(p: RookPlacement) -> OrderedSetPartition:
    """Ordered set partition with n-k blocks read off a mixed placement.

    Non-attacking rooks, read in B_n (drop the bottom row), give the set
    partition.  File rooks sit in the rook-free columns, whose free cells
    form a copy of St_{n-k}; alpha of that file placement orders the blocks
    by their minima.
    """
    if p.family != "mixed":
        raise ValueError("osp_of_mixed expects a placement in M_{n,k}")
    n = p.n
    na_rooks = [(r.col, r.row - 1) for r in p.rooks if r.kind == NA]
    blocks = set_partition_of_nonattacking(n, na_rooks)
    used: set[int] = set()
    embedded = []
    for c in range(1, n + 1):
        r = p.rook_in(c)
        if r.kind == NA:
            used.add(r.row)
            continue
        free = [y for y in range(1, c + 1) if y not in used]
        embedded.append(free.index(r.row) + 1)
    sigma = alpha(_from_rows(embedded))
    return OrderedSetPartition(tuple(blocks[v - 1] for v in sigma))


# -- enumeration ---------------------------------------------------------------

def enumerate_file(board: Board, count: int | None = None) -> Iterator[RookPlacement]:
    """File placements of `count` rooks (default: one per column)."""
    m = board.columns
    count = m if count is None else count
    for cols in itertools.combinations(range(1, m + 1), count):
        ranges = [range(1, board.height(c) + 1) for c in cols]
        for rows in itertools.product(*ranges):
            yield RookPlacement._trusted(
                board, tuple(Rook(c, r, FILE) for c, r in zip(cols, rows)), "file"
            )


def enumerate_nonattacking(board: Board, count: int) -> Iterator[RookPlacement]:
    """Non-attacking placements of `count` rooks, column by column."""
    m = board.columns

    def rec(col, left, used, acc):
        if left == 0:
            yield RookPlacement._trusted(board, tuple(acc), "nonattacking")
            return
        if col > m or m - col + 1 < left:
            return
        yield from rec(col + 1, left, used, acc)
        for row in range(1, board.height(col) + 1):
            if row not in used:
                yield from rec(col + 1, left - 1, used | {row}, acc + [Rook(col, row, NA)])

    yield from rec(1, count, frozenset(), [])


def _enumerate_mixed(n: int, k: int, prime: bool) -> Iterator[RookPlacement]:
    board = Board.staircase1(n)
    family = "mixed_prime" if prime else "mixed"
    low = 1 if prime else 2

    def rec(col, left, used, acc):
        if col > n:
            if left == 0:
                yield RookPlacement._trusted(board, tuple(acc), family)
            return
        for row in range(1, col + 1):
            if row not in used:
                yield from rec(col + 1, left, used, acc + [Rook(col, row, FILE)])
        if left:
            for row in range(low, col + 1):
                if row not in used:
                    yield from rec(col + 1, left - 1, used | {row}, acc + [Rook(col, row, NA)])

    if 0 <= k <= n:
        yield from rec(1, k, frozenset(), [])


def enumerate_mixed(n: int, k: int) -> Iterator[RookPlacement]:
    """M_{n,k}."""
    return _enumerate_mixed(n, k, prime=False)


def enumerate_mixed_prime(n: int, k: int) -> Iterator[RookPlacement]:
    """M'_{n,k}."""
    return _enumerate_mixed(n, k, prime=True)


def enumerate_placements(family: str, n: int, k: int | None = None,
                         board: Board | None = None) -> Iterator[RookPlacement]:
    """Dispatch on family name.

    file:         board (default St_n) with k rooks (default one per column)
    nonattacking: board (default B_n) with k rooks
    mixed, mixed_prime: M_{n,k} and M'_{n,k}
    """
    if family == "file":
        return enumerate_file(board or Board.staircase1(n), k)
    if family in ("nonattacking", "na"):
        if k is None:
            raise ValueError("non-attacking enumeration needs a rook count")
        return enumerate_nonattacking(board or Board.staircase(n), k)
    if family in ("mixed", "mixed_prime"):
        if k is None:
            raise ValueError(f"{family} enumeration needs k")
        return _enumerate_mixed(n, k, prime=(family == "mixed_prime"))
    raise ValueError(f"unknown placement family {family!r}")


# -- rendering -----------------------------------------------------------------

def render(p: RookPlacement, rule: str | None = None) -> str:
    """ASCII picture, highest row on top.

    [X] non-attacking rook, [O] file rook, [.] canceled, [ ] uncanceled.
    """
    mask = cancellation(p, rule)
    board = p.board
    top = max(board.heights, default=0)
    lines = []
    for y in range(top, 0, -1):
        cells = []
        for c in range(1, board.columns + 1):
            if y > board.height(c):
                cells.append("   ")
                continue
            r = p.rook_in(c)
            if r is not None and r.row == y:
                cells.append("[X]" if r.kind == NA else "[O]")
            elif (c, y) in mask:
                cells.append("[.]")
            else:
                cells.append("[ ]")
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)
