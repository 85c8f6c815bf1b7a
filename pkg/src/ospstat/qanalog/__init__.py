"""Exact Laurent polynomials, q-analogues, distributions and identity checks."""

from .analogs import (
    eulerian_q, pq_fact, pq_int, q_binom, q_fact, q_int, stirling_pq, stirling_q,
    stirling_tilde_by_substitution, stirling_tilde_pq,
)
from .distribution import distribution, distribution_by_k, enumerate_family, parse_stats
from .identities import IDENTITIES, Report, verify
from .poly import ONE, VARS, ZERO, LaurentPolynomial

__all__ = [
    "LaurentPolynomial", "VARS", "ZERO", "ONE",
    "q_int", "q_fact", "q_binom", "pq_int", "pq_fact",
    "stirling_q", "stirling_pq", "stirling_tilde_pq", "stirling_tilde_by_substitution",
    "eulerian_q", "distribution", "distribution_by_k", "enumerate_family", "parse_stats",
    "IDENTITIES", "Report", "verify",
]
