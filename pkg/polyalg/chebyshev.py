"""
The J_k polynomials: Chebyshev polynomials of the second kind in x/2.

J_{-1} = 0, J_0 = 1 and J_{k+1} = x*J_k - J_{k-1}. Every family polynomial
in the project is assembled from these, so this module is the only place the
recurrence is written down.
"""

import logging
import threading

from .polynomial import IntPolynomial, ZERO, ONE, X, eval_and_derivative_at

logger = logging.getLogger(__name__)

_cache = {-1: ZERO, 0: ONE}
_cache_lock = threading.Lock()


def chebyshev_j(k):
    """
    Return J_k.

    Args:
        k: integer >= -1

    Returns:
        IntPolynomial
    """
    if k < -1:
        raise ValueError(f"J_k is defined for k >= -1, got {k}")

    cached = _cache.get(k)
    if cached is not None:
        return cached

    with _cache_lock:
        top = max(_cache)
        if k > top:
            logger.debug(f"Extending J cache from {top} to {k}")
        while top < k:
            _cache[top + 1] = X * _cache[top] - _cache[top - 1]
            top += 1
        return _cache[k]


def j_limits_at_two(k):
    """Return ``(J_k(2), J_k'(2))``; closed forms are k+1 and k(k+1)(k+2)/6."""
    return eval_and_derivative_at(chebyshev_j(k), 2)


def _matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def check_matrix_power_identity(k):
    """
    Check [[x, -1], [1, 0]]^(k+1) == [[J_{k+1}, -J_k], [J_k, -J_{k-1}]].

    Args:
        k: integer >= 0

    Returns:
        bool
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")

    step = ((X, -ONE), (ONE, ZERO))
    power = step
    for _ in range(k):
        power = _matmul(power, step)

    expected = (
        (chebyshev_j(k + 1), -chebyshev_j(k)),
        (chebyshev_j(k), -chebyshev_j(k - 1)),
    )
    return power == expected


__all__ = [
    'IntPolynomial', 'chebyshev_j', 'j_limits_at_two', 'check_matrix_power_identity',
]
