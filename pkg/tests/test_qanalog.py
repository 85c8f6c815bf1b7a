import itertools
import json
from collections import Counter
from math import comb, factorial

import pytest

import oracles
from ospstat.qanalog import (
    ONE, ZERO, LaurentPolynomial, distribution, distribution_by_k, enumerate_family, eulerian_q,
    pq_fact, pq_int, q_binom, q_fact, q_int, stirling_pq, stirling_q, stirling_tilde_by_substitution,
    stirling_tilde_pq, verify,
)
from ospstat.qanalog.distribution import parse_stats, resolve_family
from ospstat.qanalog.identities import IDENTITIES, VARIANTS, stein_term

q = LaurentPolynomial.var("q")
p = LaurentPolynomial.var("p")
z = LaurentPolynomial.var("z")
t = LaurentPolynomial.var("t")


# -- polynomials ----------------------------------------------------------------

def test_arithmetic_examples():
    assert (1 + q) * (1 + q + q**2) == LaurentPolynomial.parse("1 + 2*q + 2*q^2 + q^3")
    assert ((1 + q).substitute_q_over_p() * p) == p + q == pq_int(2)
    assert (q * 0).is_zero() and len(q * 0) == 0
    assert q - q == ZERO and ONE == 1


def test_text_form():
    assert str(2 + 3 * q + q**2 + z * q**-1) == "2 + 3*q + q^2 + z*q^-1"
    assert str(pq_int(3)) == "q^2 + p*q + p^2"
    assert str(ZERO) == "0"
    assert str(-q + 1) == "1 - q"
    assert str(t * z**2 * p * q**3) == "z^2*t*p*q^3"


@pytest.mark.parametrize("text", [
    "0", "1", "-1", "2 + 3*q + q^2 + z*q^-1", "q^2 + p*q + p^2", "-5*z^2*t*p^-3*q^4 + 7",
])
def test_parse_round_trip(text):
    poly = LaurentPolynomial.parse(text)
    assert LaurentPolynomial.parse(str(poly)) == poly
    if text != "-5*z^2*t*p^-3*q^4 + 7":
        assert str(poly) == text


@pytest.mark.parametrize("bad", ["", "q +", "2*x", "z^-1", "q^^2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        LaurentPolynomial.parse(bad)


def test_json_schema():
    poly = 3 + z * q**-2 - 2 * p
    data = json.loads(poly.to_json())
    assert data["vars"] == ["q", "p", "z", "t"]
    exps = [term["exp"] for term in data["terms"]]
    assert exps == sorted(exps)
    assert all(isinstance(term["coef"], str) for term in data["terms"])
    assert LaurentPolynomial.from_json(poly.to_json()) == poly


def test_big_coefficients_are_exact():
    big = q_fact(12).evaluate(q=1).value()
    assert big == factorial(12)
    assert (LaurentPolynomial.constant(2**80) * 3).value() == 3 * 2**80


def test_evaluate_and_degrees():
    poly = 1 + 2 * q + z * q**-1
    assert poly.degree("q") == 1 and poly.low_degree("q") == -1
    assert poly.evaluate(q=1, z=1).value() == 4
    with pytest.raises(ValueError):
        poly.evaluate(q=2)
    assert poly.coefficient("z", 1) == q**-1
    with pytest.raises(ValueError):
        z**-1


def test_invalid_exponents():
    with pytest.raises(ValueError):
        LaurentPolynomial({(0, 0, -1, 0): 1})
    with pytest.raises(ValueError):
        LaurentPolynomial.monomial(w=1)


# -- q and p,q analogues ------------------------------------------------------------

def test_small_values():
    assert str(q_fact(3)) == "1 + 2*q + 2*q^2 + q^3"
    assert str(stirling_q(3, 2)) == "2 + q"
    assert q_int(0) == ZERO and q_fact(0) == ONE
    with pytest.raises(ValueError):
        q_binom(3, 4)
    with pytest.raises(ValueError):
        q_int(-1)


def _binom_oracle(n, k):
    # inversions of 0/1 words with k ones
    words = set(itertools.permutations([1] * k + [0] * (n - k)))
    return oracles.counts_to_list(Counter(oracles.inv(w) for w in words))


@pytest.mark.parametrize("n", range(0, 9))
def test_against_oracles(n):
    assert q_fact(n).coefficients("q") == oracles.qfact(n)
    assert oracles.to_bivariate(pq_fact(n)) == oracles.pqfact(n)
    for k in range(n + 1):
        assert stirling_q(n, k).coefficients("q") == oracles.qstirling(n, k)
        assert oracles.to_bivariate(stirling_pq(n, k)) == oracles.pqstirling(n, k)
        assert (q_fact(k) * stirling_q(n, k)).evaluate(q=1).value() == factorial(k) * oracles.stirling2(n, k)
        assert stirling_pq(n, k).evaluate(p=1) == stirling_q(n, k)
        if n <= 7:
            assert q_binom(n, k).coefficients("q") == _binom_oracle(n, k)
    assert pq_fact(n).evaluate(p=1) == q_fact(n)


@pytest.mark.parametrize("n", range(0, 8))
def test_tilde_stirling_two_ways(n):
    for k in range(n + 1):
        assert stirling_tilde_pq(n, k) == stirling_tilde_by_substitution(n, k)
        shift = comb(n, 2) - comb(k, 2)
        expected = {(i, shift - i): c for i, c in enumerate(oracles.qstirling(n, k)) if c}
        assert oracles.to_bivariate(stirling_tilde_pq(n, k)) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian(n):
    joint = Counter((oracles.maj(s), oracles.des(s)) for s in oracles.perms(n))
    for k in range(n):
        want = oracles.counts_to_list(Counter({m: c for (m, d), c in joint.items() if d == k}))
        assert eulerian_q(n, k).coefficients("q") == want
    with pytest.raises(ValueError):
        eulerian_q(n, n)


# -- distributions --------------------------------------------------------------

def test_family_aliases():
    assert resolve_family("sgt") == resolve_family("desc")
    assert resolve_family("M") == "mixed"
    with pytest.raises(ValueError):
        resolve_family("tableaux")


def test_parse_stats():
    assert parse_stats("inv") == {"q": ("inv",)}
    assert parse_stats(["op_inv", "op_coinv"]) == {"q": ("op_inv",), "p": ("op_coinv",)}
    assert parse_stats(["t=des", "maj"])["t"] == ("des",)
    assert parse_stats("q=op_maj+stars")["q"] == ("op_maj", "stars")
    with pytest.raises(ValueError):
        parse_stats("w=inv")


def test_distribution_examples():
    assert str(distribution("sgt", 3, 1, "op_maj")) == "2 + 3*q + q^2"
    assert str(distribution("sgt", 3, 1, "op_inv")) == "2 + 3*q + q^2"
    assert str(distribution("sgt", 3, 1, "op_coinv")) == "2 + 3*q + q^2"
    assert str(distribution("M", 3, 1, "unc")) == "2 + 3*q + q^2"
    assert str(distribution("primed", 2, 1, "inv_prime")) == "2 + q"
    assert distribution("mixed", 3, 3, "unc") == ZERO
    with pytest.raises(ValueError):
        distribution("sgt", 3, 1, "unc")


@pytest.mark.parametrize("n", range(0, 7))
def test_macmahon(n):
    f = q_fact(n)
    assert distribution("S", n, stats="inv") == f == distribution("S", n, stats="maj")
    if n:
        assert distribution("file", n, stats="unc") == f


def test_distribution_by_k_marks_k():
    got = distribution_by_k("desc", 3, "op_inv")
    assert got.coefficient("z", 1) == distribution("desc", 3, 1, "op_inv")
    assert got.evaluate(q=1, z=1).value() == 13


def test_enumerate_family_counts():
    assert sum(1 for _ in enumerate_family("mixed", 4, 2)) == 14
    assert sum(1 for _ in enumerate_family("na", 4, 2)) == oracles.stirling2(4, 2)
    assert sum(1 for _ in enumerate_family("S", 4)) == 24


# -- identities ------------------------------------------------------------------

def test_haglund_closed_form_n4():
    report = verify("haglund", 4)
    expected = ZERO
    for k in range(1, 5):
        coeffs = oracles.pmul(oracles.qfact(k), oracles.qstirling(4, k))
        expected += LaurentPolynomial({(i, 0, 4 - k, 0): c for i, c in enumerate(coeffs) if c})
    assert report.passed
    assert all(side == expected for side in report.sides.values())


def test_haglund_n1_is_trivial():
    report = verify("haglund", 1)
    assert report.passed
    assert all(side == 1 for side in report.sides.values())


def test_stein_term_example():
    assert str(stein_term(3, 2)) == "2 + 3*q + q^2"


@pytest.mark.parametrize("name", sorted(IDENTITIES))
@pytest.mark.parametrize("n", range(1, 5))
def test_every_identity_holds_at_small_n(name, n):
    report = verify(name, n)
    assert report.passed, report.text()


@pytest.mark.parametrize("name,first_bad", [("ascent_form", 3), ("pq_simple", 3), ("pq_subtle", 2)])
def test_printed_exponent_variant_is_reported_as_failing(name, first_bad):
    assert VARIANTS[name] == "j+1"
    for n in range(1, first_bad):
        assert verify(name, n, "j").passed
    bad = verify(name, first_bad, "j")
    assert not bad.passed
    assert bad.text().startswith(f"FAIL {name} n={first_bad}")
    assert len(set(map(str, bad.sides.values()))) > 1


def test_report_serialization():
    report = verify("main_theorem", 3)
    data = json.loads(report.to_json())
    assert data["identity"] == "main_theorem" and data["passed"] is True
    for side in data["sides"].values():
        assert LaurentPolynomial.from_json(side) in report.sides.values()


def test_verify_errors():
    with pytest.raises(ValueError):
        verify("fermat", 3)
    with pytest.raises(ValueError):
        verify("haglund", 3, "j")
    with pytest.raises(ValueError):
        verify("haglund", 0)
