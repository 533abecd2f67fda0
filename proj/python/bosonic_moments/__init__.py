"""Exact Haar second moments and outcome-collision probabilities for boson sampling."""

from fractions import Fraction

from . import _core
from ._core import (
    ConvergenceError,
    DegenerateModesError,
    asymptote,
    asymptote_for,
    dawson,
    mc_p2,
    mc_second_moment,
    p2_integral,
    pz_bound,
    regime,
)

__all__ = [
    "ConvergenceError",
    "DegenerateModesError",
    "alpha",
    "asymptote",
    "asymptote_for",
    "beta",
    "collision_free_ratio",
    "dawson",
    "g_fock",
    "g_fock_sum",
    "irrep_dim",
    "irrep_norms",
    "mc_p2",
    "mc_second_moment",
    "p2",
    "p2_beta",
    "p2_closed",
    "p2_integral",
    "pz_bound",
    "regime",
    "second_moment",
]


def _frac(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def p2_closed(m, n):
    return _frac(_core.p2_closed(m, n))


def p2_beta(m, n):
    return _frac(_core.p2_beta(m, n))


def p2(m, n, method="closed", **kwargs):
    """P2(m, n) by the named route: Fraction for closed/beta, float otherwise."""
    if method == "closed":
        return p2_closed(m, n)
    if method == "beta":
        return p2_beta(m, n)
    if method == "integral":
        return p2_integral(m, n, **kwargs)
    if method == "mc":
        return mc_p2(m, n, **kwargs)["mean"]
    raise ValueError(f"unknown method {method!r}")


def collision_free_ratio(m, n):
    return _frac(_core.collision_free_ratio(m, n))


def irrep_dim(m, k):
    return int(_core.irrep_dim(m, k))


def alpha(r, j, n, m):
    return _frac(_core.alpha(r, j, n, m))


def beta(r, k, m):
    return _frac(_core.beta(r, k, m))


def g_fock(occupation, l):
    return int(_core.g_fock(list(occupation), l))


def g_fock_sum(m, n, k):
    return _frac(_core.g_fock_sum(m, n, k))


def irrep_norms(occupation):
    return [_frac(p) for p in _core.irrep_norms(list(occupation))]


def second_moment(input, output):
    return _frac(_core.second_moment(list(input), list(output)))
