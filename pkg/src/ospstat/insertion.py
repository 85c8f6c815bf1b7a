"""
Carlitz's insertion method and its bar/star generalization.

Gaps of a word of length m are numbered 0..m: gap 0 precedes the first
entry and gap g follows the g-th entry.  A labeling maps the gaps where the
new largest letter may go to labels 0, 1, ...; inserting at label i raises
the relevant statistic by exactly i.

Bar insertions add n as a new block (no new star); star insertions add n
together with one new star.  The recursive bijections ``psi`` (on S_n) and
``psi_osp`` (on descent-starred permutations) peel n off with the inv-side
inverse map and re-insert it with the maj-side map at the same label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perm import Permutation, des_set
from .starred import DescentStarred, PrimedStarred

__all__ = [
    "Labeling", "PeelStep",
    "inv_labeling", "maj_labeling", "phi_inv", "phi_maj",
    "phi_inv_inverse", "phi_maj_inverse", "psi", "psi_inverse", "psi_trace",
    "starred_inv_labeling", "starred_maj_labeling",
    "phi_bar_inv", "phi_star_inv", "phi_bar_inv_inverse", "phi_star_inv_inverse",
    "inv_insertion_inverse",
    "phi_bar_maj", "phi_star_maj", "phi_bar_maj_inverse", "phi_star_maj_inverse",
    "maj_insertion_inverse", "maj_insertion_kind",
    "psi_osp", "psi_osp_inverse", "psi_osp_trace", "overline_maj",
    "lift_primed", "lower_primed", "primed_inv_labeling", "primed_maj_labeling",
    "primed_bar_inv", "primed_star_inv", "primed_bar_maj", "primed_star_maj",
    "primed_inv_inverse", "primed_maj_inverse", "psi_primed", "psi_primed_inverse",
]

# gap index -> label
Labeling = dict


@dataclass(frozen=True)
class PeelStep:
    """One level of a recursive bijection: n was removed with this label."""

    n: int
    label: int
    kind: str
    remaining: object

    def __str__(self) -> str:
        return f"n={self.n} removed_label={self.label} intermediate={self.remaining}"


def _gap_for(labeling: Labeling, label: int) -> int:
    for gap, lab in labeling.items():
        if lab == label:
            return gap
    raise ValueError(f"label {label} out of range 0..{len(labeling) - 1}")


def _insert(base, stars, gap: int, value: int):
    """Insert value after position gap; stars right of the gap shift along."""
    new_base = tuple(base[:gap]) + (value,) + tuple(base[gap:])
    new_stars = frozenset(s + 1 if s > gap else s for s in stars)
    return new_base, new_stars


def _remove(base, stars, pos: int):
    """Delete the entry at position pos (and any star directly after it)."""
    new_base = tuple(base[: pos - 1]) + tuple(base[pos:])
    new_stars = frozenset(s - 1 if s > pos else s for s in stars if s != pos)
    return new_base, new_stars


# -- permutations --------------------------------------------------------------

def inv_labeling(p) -> Labeling:
    """Gaps labeled 0..n from right to left."""
    n = len(p)
    return {g: n - g for g in range(n + 1)}


def _maj_labels(base, stars, skip_last: bool) -> Labeling:
    m = len(base)
    if m == 0:
        return {} if skip_last else {0: 0}
    labels: Labeling = {}
    nxt = 0
    if not skip_last:
        labels[m] = 0
        nxt = 1
    for g in range(m - 1, 0, -1):
        if base[g - 1] > base[g] and g not in stars:
            labels[g] = nxt
            nxt += 1
    labels[0] = nxt
    nxt += 1
    for g in range(1, m):
        if base[g - 1] < base[g]:
            labels[g] = nxt
            nxt += 1
    return dict(sorted(labels.items()))


def maj_labeling(p) -> Labeling:
    """Gap n gets 0, descent gaps 1..des right to left, then the rest left to right."""
    return _maj_labels(tuple(p), frozenset(), skip_last=False)


def _check_label(i: int, top: int) -> None:
    if not 0 <= i <= top:
        raise ValueError(f"label {i} outside 0..{top}")


def phi_inv(i: int, p) -> Permutation:
    n = len(p) + 1
    _check_label(i, n - 1)
    base, _ = _insert(tuple(p), frozenset(), n - 1 - i, n)
    return Permutation._trusted(base)


def phi_maj(i: int, p) -> Permutation:
    n = len(p) + 1
    _check_label(i, n - 1)
    base, _ = _insert(tuple(p), frozenset(), _gap_for(maj_labeling(p), i), n)
    return Permutation._trusted(base)


def _locate_max(base) -> int:
    return base.index(len(base)) + 1


def phi_inv_inverse(t) -> tuple[int, Permutation]:
    if not t:
        raise ValueError("cannot remove a letter from the empty permutation")
    pos = _locate_max(t)
    base, _ = _remove(tuple(t), frozenset(), pos)
    reduced = Permutation._trusted(base)
    return inv_labeling(reduced)[pos - 1], reduced


def phi_maj_inverse(t) -> tuple[int, Permutation]:
    if not t:
        raise ValueError("cannot remove a letter from the empty permutation")
    pos = _locate_max(t)
    base, _ = _remove(tuple(t), frozenset(), pos)
    reduced = Permutation._trusted(base)
    return maj_labeling(reduced)[pos - 1], reduced


def psi(p) -> Permutation:
    """Carlitz's bijection on S_n with maj(psi(p)) == inv(p)."""
    p = p if isinstance(p, Permutation) else Permutation(p)
    if len(p) <= 1:
        return p
    i, reduced = phi_inv_inverse(p)
    return phi_maj(i, psi(reduced))


def psi_inverse(p) -> Permutation:
    p = p if isinstance(p, Permutation) else Permutation(p)
    if len(p) <= 1:
        return p
    i, reduced = phi_maj_inverse(p)
    return phi_inv(i, psi_inverse(reduced))


def psi_trace(p) -> list[PeelStep]:
    steps = []
    cur = p if isinstance(p, Permutation) else Permutation(p)
    while len(cur) > 1:
        n = len(cur)
        i, cur = phi_inv_inverse(cur)
        steps.append(PeelStep(n, i, "bar", cur))
    return steps


# -- descent-starred permutations ---------------------------------------------

def _check_kind(kind: str) -> None:
    if kind not in ("bar", "star"):
        raise ValueError(f"insertion kind must be 'bar' or 'star', not {kind!r}")


def _inv_labels(base, stars, skip_last: bool) -> Labeling:
    m = len(base)
    gaps = [0] + [g for g in range(1, m + 1) if g not in stars]
    if skip_last and gaps and gaps[-1] == m:
        gaps.pop()
    top = len(gaps) - 1
    return {g: top - idx for idx, g in enumerate(gaps)}


def starred_inv_labeling(d: DescentStarred, kind: str = "bar") -> Labeling:
    """Gap 0 and gaps after unstarred entries, right to left; star skips gap n."""
    _check_kind(kind)
    return _inv_labels(d.base, d.stars, skip_last=(kind == "star"))


def starred_maj_labeling(d: DescentStarred, kind: str = "bar") -> Labeling:
    """Rightmost gap 0, unstarred descents right to left, gap 0, ascents left to right.

    The star labeling drops the rightmost gap and numbers the rest the same way
    starting from 0.
    """
    _check_kind(kind)
    return _maj_labels(d.base, d.stars, skip_last=(kind == "star"))


def _starred_range(d: DescentStarred, kind: str) -> tuple[int, int]:
    n = d.n + 1
    k = d.k + (kind == "star")
    return n, k


def _inv_insert(i: int, d: DescentStarred, kind: str) -> DescentStarred:
    n, k = _starred_range(d, kind)
    _check_label(i, n - k - 1)
    gap = _gap_for(starred_inv_labeling(d, kind), i)
    base, stars = _insert(d.base, d.stars, gap, n)
    if kind == "star":
        stars = stars | {gap + 1}
    return DescentStarred._trusted(Permutation._trusted(base), stars)


def phi_bar_inv(i: int, d: DescentStarred) -> DescentStarred:
    """Insert n unstarred at the bar inv-label i; op_inv grows by i."""
    return _inv_insert(i, d, "bar")


def phi_star_inv(i: int, d: DescentStarred) -> DescentStarred:
    """Insert n starred at the star inv-label i; op_inv grows by i."""
    return _inv_insert(i, d, "star")


def inv_insertion_inverse(t: DescentStarred) -> tuple[str, int, DescentStarred]:
    """Remove n; report the insertion kind, its label, and the smaller object."""
    if not t.n:
        raise ValueError("cannot remove a letter from the empty permutation")
    pos = _locate_max(t.base)
    kind = "star" if pos in t.stars else "bar"
    base, stars = _remove(t.base, t.stars, pos)
    reduced = DescentStarred._trusted(Permutation._trusted(base), stars)
    return kind, starred_inv_labeling(reduced, kind)[pos - 1], reduced


def phi_bar_inv_inverse(t: DescentStarred) -> tuple[int, DescentStarred]:
    kind, i, reduced = inv_insertion_inverse(t)
    if kind != "bar":
        raise ValueError(f"{t}: n is starred, not in the image of bar inv-insertion")
    return i, reduced


def phi_star_inv_inverse(t: DescentStarred) -> tuple[int, DescentStarred]:
    kind, i, reduced = inv_insertion_inverse(t)
    if kind != "star":
        raise ValueError(f"{t}: n is unstarred, not in the image of star inv-insertion")
    return i, reduced


def _maj_insert(i: int, d: DescentStarred, kind: str) -> DescentStarred:
    n, k = _starred_range(d, kind)
    _check_label(i, n - k - 1)
    gap = _gap_for(starred_maj_labeling(d, kind), i)
    base, stars = _insert(d.base, d.stars, gap, n)
    pos = gap + 1
    # descents at or right of n; stars on them slide one descent leftward
    chain = [g for g in range(pos, n) if base[g - 1] > base[g]]
    moved = {chain[j - 1] for j in range(1, len(chain)) if chain[j] in stars}
    stars = frozenset(s for s in stars if s < pos) | moved
    if kind == "star":
        stars = stars | {chain[-1]}
    return DescentStarred._trusted(Permutation._trusted(base), stars)


def phi_bar_maj(i: int, d: DescentStarred) -> DescentStarred:
    """Insert n at the bar maj-label i, then shift stars right of n one descent left."""
    return _maj_insert(i, d, "bar")


def phi_star_maj(i: int, d: DescentStarred) -> DescentStarred:
    """As phi_bar_maj with star labels, then star the rightmost descent."""
    return _maj_insert(i, d, "star")


def maj_insertion_kind(t: DescentStarred) -> str:
    """Which maj insertion produced t.

    n in last place comes from bar label 0 (nothing moves, so the rightmost
    descent may well be starred); otherwise a starred rightmost descent
    marks a star insertion.
    """
    base = t.base
    if not base or base[-1] == len(base):
        return "bar"
    descents = des_set(base)
    return "star" if max(descents) in t.stars else "bar"


def maj_insertion_inverse(t: DescentStarred) -> tuple[str, int, DescentStarred]:
    """Undo a maj insertion: unstar, slide stars back rightward, remove n."""
    if not t.n:
        raise ValueError("cannot remove a letter from the empty permutation")
    base = t.base
    descents = sorted(des_set(base))
    stars = set(t.stars)
    kind = maj_insertion_kind(t)
    if kind == "star":
        stars.discard(descents[-1])
    pos = _locate_max(base)
    chain = [g for g in descents if g >= pos]
    moved = {chain[j + 1] for j in range(len(chain) - 1) if chain[j] in stars}
    if chain and chain[-1] in stars:
        raise ValueError(f"{t}: stars cannot move past the rightmost descent")
    kept = frozenset(s for s in stars if s < pos) | moved
    rbase, rstars = _remove(base, kept, pos)
    reduced = DescentStarred._trusted(Permutation._trusted(rbase), rstars)
    return kind, starred_maj_labeling(reduced, kind)[pos - 1], reduced


def phi_bar_maj_inverse(t: DescentStarred) -> tuple[int, DescentStarred]:
    kind, i, reduced = maj_insertion_inverse(t)
    if kind != "bar":
        raise ValueError(f"{t}: rightmost descent is starred, not a bar maj-insertion")
    return i, reduced


def phi_star_maj_inverse(t: DescentStarred) -> tuple[int, DescentStarred]:
    kind, i, reduced = maj_insertion_inverse(t)
    if kind != "star":
        raise ValueError(f"{t}: rightmost descent is unstarred, not a star maj-insertion")
    return i, reduced


def _inv_map(kind):
    return phi_bar_inv if kind == "bar" else phi_star_inv


def _maj_map(kind):
    return phi_bar_maj if kind == "bar" else phi_star_maj


@lru_cache(maxsize=None)
def psi_osp(d: DescentStarred) -> DescentStarred:
    """Bijection on each S^>_{n,k} taking op_inv to op_maj."""
    if d.n <= 1:
        return d
    kind, i, reduced = inv_insertion_inverse(d)
    return _maj_map(kind)(i, psi_osp(reduced))


@lru_cache(maxsize=None)
def psi_osp_inverse(d: DescentStarred) -> DescentStarred:
    if d.n <= 1:
        return d
    kind, i, reduced = maj_insertion_inverse(d)
    return _inv_map(kind)(i, psi_osp_inverse(reduced))


def psi_osp_trace(d: DescentStarred) -> list[PeelStep]:
    steps = []
    cur = d
    while cur.n > 1:
        n = cur.n
        kind, i, cur = inv_insertion_inverse(cur)
        steps.append(PeelStep(n, i, kind, cur))
    return steps


@lru_cache(maxsize=None)
def overline_maj(d: DescentStarred) -> int:
    """Companion of op_maj, defined by peeling n with the maj-insertion inverses.

    Each level where n was inserted at label i into S^>_{n,k} adds n - k - 1 - i,
    so (overline_maj, op_maj) split every level's label as [n-k]_{p,q}.
    """
    if d.n <= 1:
        return 0
    _, i, reduced = maj_insertion_inverse(d)
    return overline_maj(reduced) + d.n - d.k - 1 - i


# -- primed starred permutations ----------------------------------------------
#
# A primed (sigma, S) of size n is handled through its image in S^>_{n+1}:
# add one to every entry and append a 1 (the trailing zero, shifted).  Under
# that view inv' and maj' are op_inv and op_maj minus (n - k), the bar labels
# lose the far-right gap, and the star labels coincide.

def lift_primed(x: PrimedStarred) -> DescentStarred:
    base = Permutation._trusted(tuple(v + 1 for v in x.base) + (1,))
    return DescentStarred._trusted(base, x.stars)


def lower_primed(d: DescentStarred) -> PrimedStarred:
    if not d.n or d.base[-1] != 1:
        raise ValueError(f"{d} does not end in its smallest letter")
    base = Permutation._trusted(v - 1 for v in d.base[:-1])
    return PrimedStarred._trusted(base, d.stars)


def primed_inv_labeling(x: PrimedStarred, kind: str = "bar") -> Labeling:
    labels = starred_inv_labeling(lift_primed(x), kind)
    if kind == "bar":
        labels = {g: lab - 1 for g, lab in labels.items() if g != x.n + 1}
    return labels


def primed_maj_labeling(x: PrimedStarred, kind: str = "bar") -> Labeling:
    labels = starred_maj_labeling(lift_primed(x), kind)
    if kind == "bar":
        labels = {g: lab - 1 for g, lab in labels.items() if g != x.n + 1}
    return labels


def _primed_apply(fn, i: int, x: PrimedStarred, shift: int) -> PrimedStarred:
    n = x.n + 1
    k = x.k + (fn in (phi_star_inv, phi_star_maj))
    top = n - k - 1 if shift else n - k
    _check_label(i, top)
    return lower_primed(fn(i + shift, lift_primed(x)))


def primed_bar_inv(i: int, x: PrimedStarred) -> PrimedStarred:
    """Insert n unstarred; inv' grows by i (labels 0..n-k-1)."""
    return _primed_apply(phi_bar_inv, i, x, 1)


def primed_star_inv(i: int, x: PrimedStarred) -> PrimedStarred:
    """Insert n starred; inv' grows by i (labels 0..n-k, label 0 = sentinel star)."""
    return _primed_apply(phi_star_inv, i, x, 0)


def primed_bar_maj(i: int, x: PrimedStarred) -> PrimedStarred:
    return _primed_apply(phi_bar_maj, i, x, 1)


def primed_star_maj(i: int, x: PrimedStarred) -> PrimedStarred:
    return _primed_apply(phi_star_maj, i, x, 0)


def primed_inv_inverse(x: PrimedStarred) -> tuple[str, int, PrimedStarred]:
    kind, i, reduced = inv_insertion_inverse(lift_primed(x))
    return kind, i - (kind == "bar"), lower_primed(reduced)


def primed_maj_inverse(x: PrimedStarred) -> tuple[str, int, PrimedStarred]:
    kind, i, reduced = maj_insertion_inverse(lift_primed(x))
    return kind, i - (kind == "bar"), lower_primed(reduced)


_PRIMED_MAJ = {"bar": primed_bar_maj, "star": primed_star_maj}
_PRIMED_INV = {"bar": primed_bar_inv, "star": primed_star_inv}


def psi_primed(x: PrimedStarred) -> PrimedStarred:
    """Bijection on each S^>'_{n,k} taking inv' to maj'."""
    if x.n == 0:
        return x
    kind, i, reduced = primed_inv_inverse(x)
    return _PRIMED_MAJ[kind](i, psi_primed(reduced))


def psi_primed_inverse(x: PrimedStarred) -> PrimedStarred:
    if x.n == 0:
        return x
    kind, i, reduced = primed_maj_inverse(x)
    return _PRIMED_INV[kind](i, psi_primed_inverse(reduced))
