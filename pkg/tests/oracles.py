"""
Brute-force reference implementations used by the tests.

Nothing here imports the package's polynomial code: univariate polynomials
are dense coefficient lists and bivariate ones are {(i, j): c} dicts, and
every statistic is computed straight from its combinatorial definition.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb, factorial


# -- dense univariate polynomials ---------------------------------------------

def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def qint(n):
    return [1] * n


def qfact(n):
    out = [1]
    for i in range(1, n + 1):
        out = pmul(out, qint(i))
    return out


def qstirling(n, k, _memo={}):
    if (n, k) in _memo:
        return _memo[n, k]
    if n == 0 and k == 0:
        val = [1]
    elif n <= 0 or k <= 0 or k > n:
        val = []
    else:
        val = padd(qstirling(n - 1, k - 1), pmul(qint(k), qstirling(n - 1, k)))
    _memo[n, k] = val
    return val


def counts_to_list(counter):
    if not counter:
        return []
    out = [0] * (max(counter) + 1)
    for e, c in counter.items():
        out[e] += c
    return trim(out)


def stirling2(n, k):
    """Integer Stirling numbers of the second kind by inclusion-exclusion."""
    if n == k == 0:
        return 1
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


# -- bivariate (p, q) polynomials as {(q_exp, p_exp): coef} -------------------

def bmul(a, b):
    out = Counter()
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            out[i1 + i2, j1 + j2] += c1 * c2
    return {e: c for e, c in out.items() if c}


def badd(a, b):
    out = Counter(a)
    for e, c in b.items():
        out[e] += c
    return {e: c for e, c in out.items() if c}


def pqint(n):
    return {(i, n - 1 - i): 1 for i in range(n)}


def pqfact(n):
    out = {(0, 0): 1}
    for i in range(1, n + 1):
        out = bmul(out, pqint(i))
    return out


def pqstirling(n, k, _memo={}):
    if (n, k) in _memo:
        return _memo[n, k]
    if n == 0 and k == 0:
        val = {(0, 0): 1}
    elif n <= 0 or k <= 0 or k > n:
        val = {}
    else:
        val = badd(pqstirling(n - 1, k - 1), bmul(pqint(k), pqstirling(n - 1, k)))
    _memo[n, k] = val
    return val


def to_bivariate(poly):
    """LaurentPolynomial in q, p -> {(q_exp, p_exp): coef}."""
    out = {}
    for (eq, ep, ez, et), c in poly.items():
        assert ez == 0 and et == 0
        out[eq, ep] = c
    return out


def to_list(poly):
    """LaurentPolynomial in q alone -> dense list."""
    return poly.coefficients("q")


# -- permutation statistics by definition -------------------------------------

def perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def inv(s):
    return sum(1 for i, j in itertools.combinations(range(len(s)), 2) if s[i] > s[j])


def maj(s):
    return sum(i + 1 for i in range(len(s) - 1) if s[i] > s[i + 1])


def des(s):
    return sum(1 for i in range(len(s) - 1) if s[i] > s[i + 1])


# -- ordered set partitions ----------------------------------------------------

def ordered_set_partitions(n, blocks):
    """Surjections {1..n} -> {0..blocks-1}, read as ordered block lists."""
    seen = []
    for labels in itertools.product(range(blocks), repeat=n):
        if len(set(labels)) != blocks:
            continue
        parts = [frozenset(x + 1 for x in range(n) if labels[x] == b) for b in range(blocks)]
        seen.append(tuple(parts))
    return seen


def _block_index(blocks):
    return {x: bi for bi, b in enumerate(blocks) for x in b}


def osp_inv(blocks):
    """Pairs a > b with b the minimum of its block and a's block strictly left of b's."""
    pos = _block_index(blocks)
    return sum(
        1 for a in pos for b in pos
        if a > b and b == min(blocks[pos[b]]) and pos[a] < pos[b]
    )


def osp_los(blocks):
    """Pairs a < b with a the minimum of its block and a's block strictly left of b's."""
    pos = _block_index(blocks)
    return sum(
        1 for a in pos for b in pos
        if a < b and a == min(blocks[pos[a]]) and pos[a] < pos[b]
    )


def descent_starred_from_blocks(blocks):
    """Blocks written decreasing; stars join entries of one block."""
    base, stars = [], set()
    for b in blocks:
        run = sorted(b, reverse=True)
        for idx, v in enumerate(run):
            base.append(v)
            if idx < len(run) - 1:
                stars.add(len(base))
    return tuple(base), frozenset(stars)


def op_maj_by_sequence(base, stars):
    """Sum over descents of (position minus stars weakly to its left)."""
    total = 0
    for i in range(1, len(base)):
        if base[i - 1] > base[i]:
            total += i - sum(1 for s in stars if s <= i)
    return total


# -- rook placements -----------------------------------------------------------

def nonattacking_placements(n, rooks):
    """All placements of `rooks` non-attacking rooks in B_n as {col: row}."""
    cells = [(c, r) for c in range(1, n + 1) for r in range(1, c)]
    for chosen in itertools.combinations(cells, rooks):
        cols = {c for c, _ in chosen}
        rows = {r for _, r in chosen}
        if len(cols) == rooks and len(rows) == rooks:
            yield dict(chosen)


def garsia_remmel_unc(n, placement):
    """Uncanceled cells below rooks in B_n: each rook cancels its cell, the cells
    above it, and the cells to its right in its row."""
    canceled = set()
    for c, r in placement.items():
        canceled.add((c, r))
        canceled.update((c, y) for y in range(r + 1, c))
        canceled.update((x, r) for x in range(c + 1, n + 1) if r < x)
    return sum(
        1 for c, r in placement.items() for y in range(1, r) if (c, y) not in canceled
    )
