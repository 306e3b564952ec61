"""Exact Colonel Blotto values, equilibria and certificates."""

import json
from fractions import Fraction

from . import _blotto
from ._blotto import BlottoError

__all__ = [
    "BlottoError",
    "certify",
    "classify",
    "implement",
    "lotto_value",
    "solve",
    "sweep_csv",
    "value",
]


def _frac(s):
    return Fraction(s)


def _str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def value(a, b, k):
    return _frac(_blotto.value(a, b, k))


def classify(a, b, k):
    return _blotto.classify(a, b, k)


def solve(a, b, k):
    """Equilibrium report: value, case tag, certificate and both strategy matrices."""
    return json.loads(_blotto.solve(a, b, k))


def certify(strategy_a, strategy_b, a, b, k):
    return json.loads(_blotto.certify(strategy_a, strategy_b, a, b, k))


def lotto_value(a, b, c=None):
    return _frac(_blotto.lotto_value(_str(a), _str(b), None if c is None else _str(c)))


def implement(weights, c, k):
    """Rows of a matrix whose column cardinality matches `weights`, or None."""
    return _blotto.implement({int(x): _str(p) for x, p in weights.items()}, c, k)


def sweep_csv(kmax, amax, threads=0):
    return _blotto.sweep_csv(kmax, amax, threads)
