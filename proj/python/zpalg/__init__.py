"""Exact algebra over Z/p^s: free Lie algebras, Moore-space combinatorics and growth certificates."""

import json as _json

from . import _core
from ._core import InvalidInput, ResourceLimit

__all__ = [
    "InvalidInput",
    "ResourceLimit",
    "analyze",
    "basic_products",
    "boundary_growth",
    "crt_split",
    "growth_certificate",
    "hilton_milnor",
    "homology",
    "lie_dims",
    "selftest",
    "smash_power",
    "tau_sigma",
    "weight_inequalities",
    "witt",
]


def _int(v):
    # large integers arrive as decimal strings
    return int(v)


def witt(n, k):
    return _int(_json.loads(_core.witt(n, k)))


def basic_products(n, k):
    return list(_core.basic_products(n, k))


def lie_dims(degrees, p, s=1, u=None, max_weight=4, unsafe=False):
    return _json.loads(_core.lie_dims(list(degrees), p, s, s if u is None else u, max_weight, unsafe))


def homology(p, deg_x=2, max_weight=5, s=1, u=1, unsafe=False):
    return _json.loads(_core.homology(p, deg_x, max_weight, s, u, unsafe))


def tau_sigma(p, deg_x=2, k=1, unsafe=False):
    return _json.loads(_core.tau_sigma(p, deg_x, k, unsafe))


def weight_inequalities(p, deg_x=2, K=5, unsafe=False):
    return _json.loads(_core.weight_inequalities(p, deg_x, K, unsafe))


def boundary_growth(p, deg_x=2, K=5, unsafe=False):
    return _json.loads(_core.boundary_growth(p, deg_x, K, unsafe))


def crt_split(n, ell):
    return _json.loads(_core.crt_split(n, ell))


def smash_power(n, m, k1, k2, p, r):
    return _json.loads(_core.smash_power(n, m, k1, k2, p, r))


def hilton_milnor(n, m, p, r, K, unsafe=False):
    return _json.loads(_core.hilton_milnor(n, m, p, r, K, unsafe))


def growth_certificate(n, m, p, r, s, j, K, epsilon=0.05, window=0.5, unsafe=False):
    return _json.loads(_core.growth_certificate(n, m, p, r, s, j, K, epsilon, window, unsafe))


def analyze(values, start=1, epsilon=0.05, window=0.5):
    return _json.loads(_core.analyze([str(int(v)) for v in values], start, epsilon, window))


def selftest(suite="all", seed=1, seeds=1000, max_s=3, random_s=4):
    return _json.loads(_core.selftest(suite, seed, seeds, max_s, random_s))
