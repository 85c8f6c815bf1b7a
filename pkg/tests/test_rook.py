import json
from collections import Counter
from math import comb

import pytest

import oracles
from ospstat.insertion import psi
from ospstat.perm import Permutation, enumerate_sn, inv, maj
from ospstat.rook import (
    FILE, NA, Board, Rook, RookPlacement, W_pq_exponents, alpha, alpha_inverse, beta,
    beta_inverse, cancellation, delta, delta_inverse, enumerate_file, enumerate_mixed,
    enumerate_mixed_prime, enumerate_nonattacking, enumerate_placements, gamma, gamma_inverse,
    osp_of_mixed, phi_unc, placement_from_json, render, unc, unc_prime, uncb, w_pq,
    w_pq_exponents,
)
from ospstat.starred import enumerate_osp, enumerate_starred, op_inv, op_maj


def dist(objs, fn):
    return oracles.counts_to_list(Counter(fn(x) for x in objs))


def bdist(objs, fn):
    return dict(Counter(fn(x) for x in objs))


# -- boards and placements ----------------------------------------------------

def test_boards():
    assert Board.staircase(3).heights == (0, 1, 2)
    assert Board.staircase1(3).heights == (1, 2, 3)
    assert Board.staircase1(4).size == 10
    assert (2, 2) in Board.staircase1(3) and (2, 3) not in Board.staircase1(3)
    with pytest.raises(ValueError):
        Board((1, -1))


def test_validation():
    st3 = Board.staircase1(3)
    with pytest.raises(ValueError):
        RookPlacement.file(st3, {1: 2})
    with pytest.raises(ValueError):
        RookPlacement.nonattacking(Board.staircase(3), {2: 1, 3: 1})
    with pytest.raises(ValueError):
        RookPlacement.mixed(3, [(1, 1, FILE), (2, 1, NA), (3, 1, FILE)])
    with pytest.raises(ValueError):
        RookPlacement.mixed(3, [(1, 1, FILE), (2, 2, NA), (3, 2, FILE)])
    with pytest.raises(ValueError):
        Rook(1, 1, "bishop")
    ok = RookPlacement.mixed(3, [(1, 1, FILE), (2, 2, NA), (3, 3, FILE)])
    assert ok.k == 1 and ok.n == 3
    assert RookPlacement.mixed(2, [(1, 1, NA), (2, 2, FILE)], prime=True).family == "mixed_prime"


def test_cancellation_rules():
    st3 = Board.staircase1(3)
    single = RookPlacement.file(st3, {3: 2})
    assert cancellation(single) == {(3, 2), (3, 3)}
    assert cancellation(RookPlacement.file(st3, {})) == frozenset()
    p = RookPlacement.mixed(3, [(1, 1, FILE), (2, 2, NA), (3, 1, FILE)])
    assert (2, 1) in cancellation(p)
    assert (3, 2) in cancellation(p)
    assert (2, 1) not in cancellation(p, "classic")
    assert cancellation(p, "wachs_white") == {(1, 1), (2, 2), (3, 2), (3, 1)}
    with pytest.raises(ValueError):
        cancellation(p, "bogus")


def test_unc_on_file_placements():
    n = 4
    st = Board.staircase1(n)
    assert unc(RookPlacement.file(st, {c: 1 for c in range(1, n + 1)})) == 0
    assert unc(RookPlacement.file(st, {c: c for c in range(1, n + 1)})) == 6
    for f in enumerate_file(st):
        assert unc(f) == sum(r.row - 1 for r in f.rooks)


def test_w_pq_single_rooks():
    assert w_pq(RookPlacement.file(Board.staircase1(1), {1: 1})) == 1
    st = Board.staircase1(5)
    for i in range(1, 6):
        for j in range(1, i + 1):
            assert w_pq_exponents(RookPlacement.file(st, {i: j})) == (j - 1, i - j)


def test_json_round_trip_and_inference():
    p = RookPlacement.mixed(3, [(1, 1, FILE), (2, 2, NA), (3, 1, FILE)])
    assert placement_from_json(p.to_json()) == p
    data = p.to_dict()
    del data["family"]
    assert placement_from_json(json.dumps(data)) == p
    n = RookPlacement.nonattacking(Board.staircase(3), {3: 1})
    data = n.to_dict()
    del data["family"]
    assert placement_from_json(data).family == "nonattacking"
    with pytest.raises(ValueError):
        placement_from_json('{"rooks": []}')


def test_render():
    p = RookPlacement.mixed(3, [(1, 1, FILE), (2, 2, NA), (3, 1, FILE)])
    assert render(p) == "      [.]\n   [X][.]\n[O][.][O]"
    assert str(p) == render(p)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_file(Board.staircase1(3))) == 6
    assert sum(1 for _ in enumerate_nonattacking(Board.staircase(3), 1)) == 3
    assert sum(1 for _ in enumerate_mixed(4, 2)) == 14
    assert sum(1 for _ in enumerate_mixed(3, 3)) == 0
    with pytest.raises(ValueError):
        list(enumerate_placements("hexagonal", 3, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_nonattacking_enumeration_matches_oracle(n):
    for count in range(n):
        got = {frozenset((r.col, r.row) for r in p.rooks)
               for p in enumerate_nonattacking(Board.staircase(n), count)}
        want = {frozenset(d.items()) for d in oracles.nonattacking_placements(n, count)}
        assert got == want


# -- distributions --------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_q_stirling_from_nonattacking(n):
    for k in range(1, n + 1):
        objs = list(enumerate_nonattacking(Board.staircase(n), n - k))
        assert dist(objs, unc) == oracles.qstirling(n, k)
        for p in objs:
            rooks = {r.col: r.row for r in p.rooks}
            assert unc(p) == oracles.garsia_remmel_unc(n, rooks)


@pytest.mark.parametrize("n", range(1, 7))
def test_embedded_staircase(n):
    for count in range(n):
        for p in enumerate_nonattacking(Board.staircase(n), count):
            na = {r.col: r.row + 1 for r in p.rooks}
            seen = []
            for c in range(1, n + 1):
                if c in na:
                    continue
                blocked = {row for col, row in na.items() if col < c}
                seen.append(sum(1 for y in range(1, c + 1) if y not in blocked))
            assert seen == list(range(1, n - count + 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_mixed_distribution(n):
    for k in range(n + 1):
        objs = list(enumerate_mixed(n, k))
        expected = oracles.pmul(oracles.qfact(n - k), oracles.qstirling(n, n - k))
        assert dist(objs, unc) == expected
        if 1 <= k < n:
            prev = oracles.padd(dist(enumerate_mixed(n - 1, k - 1), unc),
                                dist(enumerate_mixed(n - 1, k), unc))
            assert expected == oracles.pmul(oracles.qint(n - k), prev)


@pytest.mark.parametrize("n", range(1, 6))
def test_mixed_prime_distribution(n):
    for k in range(n + 1):
        objs = list(enumerate_mixed_prime(n, k))
        expected = oracles.pmul(oracles.qfact(n - k), oracles.qstirling(n + 1, n - k + 1))
        assert dist(objs, unc_prime) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_pq_weights(n):
    for k in range(1, n + 1):
        objs = list(enumerate_nonattacking(Board.staircase(n), n - k))
        assert bdist(objs, w_pq_exponents) == oracles.pqstirling(n, k)
        shift = comb(n, 2) - comb(k, 2)
        tilde = {(i, shift - i): c for i, c in enumerate(oracles.qstirling(n, k)) if c}
        assert bdist(objs, W_pq_exponents) == tilde
    file_sum = bdist(enumerate_file(Board.staircase1(n)), w_pq_exponents)
    assert file_sum == oracles.pqfact(n)
    for k in range(n):
        expected = oracles.bmul(oracles.pqfact(n - k), oracles.pqstirling(n, n - k))
        assert bdist(enumerate_mixed(n, k), w_pq_exponents) == expected


# -- maps ----------------------------------------------------------------------

def test_alpha_beta_examples():
    st = Board.staircase1(4)
    low = RookPlacement.file(st, {c: 1 for c in range(1, 5)})
    assert alpha(low) == beta(low) == Permutation.identity(4)
    assert beta(alpha_inverse(Permutation.parse("52143"))) == Permutation.parse("24153")


@pytest.mark.parametrize("n", range(1, 7))
def test_alpha_beta_contracts(n):
    for f in enumerate_file(Board.staircase1(n)):
        a, b = alpha(f), beta(f)
        assert inv(a) == unc(f) == maj(b)
        assert alpha_inverse(a) == f and beta_inverse(b) == f
    for p in enumerate_sn(n):
        assert beta(alpha_inverse(p)) == psi(p)


@pytest.mark.parametrize("n", range(1, 7))
def test_gamma_delta_contracts(n):
    for k in range(n):
        objs = list(enumerate_starred(n, k))
        target = set(enumerate_mixed(n, k))
        g = {gamma(d) for d in objs}
        dl = {delta(d) for d in objs}
        assert g == target and dl == target
        for d in objs:
            assert unc(gamma(d)) == op_inv(d)
            assert unc(delta(d)) == op_maj(d)
            assert gamma_inverse(gamma(d)) == d
            assert delta_inverse(delta(d)) == d


def test_gamma_without_stars_is_a_file_placement():
    for d in enumerate_starred(4, 0):
        assert all(r.kind == FILE for r in gamma(d).rooks)


def test_phi_unc_labels():
    empty = RookPlacement._trusted(Board(()), (), "mixed")
    one = phi_unc(0, empty, "bar")
    assert one.rooks == (Rook(1, 1, FILE),)
    two = phi_unc(0, one, "star")
    assert two.rooks[-1] == Rook(2, 2, NA) and uncb(two) == 0
    with pytest.raises(ValueError):
        phi_unc(1, one, "star")


def test_osp_of_mixed_examples():
    low = RookPlacement.mixed(4, [(c, 1, FILE) for c in range(1, 5)])
    assert str(osp_of_mixed(low)) == "1|2|3|4"


@pytest.mark.parametrize("n", range(1, 7))
def test_osp_of_mixed_is_a_bijection(n):
    for k in range(n):
        images = [osp_of_mixed(p) for p in enumerate_mixed(n, k)]
        assert all(len(o) == n - k for o in images)
        assert set(images) == set(enumerate_osp(n, n - k))
        assert len(set(images)) == len(images)
