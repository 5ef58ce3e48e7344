"""Exact combinatorial arithmetic: strided products, factorial products.

All results are arbitrary-precision integers.  When gmpy2 is available its
mpz type is used internally (GMP has sub-quadratic multiplication and
division, which the ranking codecs lean on for large graphs); plain Python
ints are a correct fallback.
"""

from __future__ import annotations

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - exercised only without gmpy2
    mpz = int

ONE = mpz(1)
ZERO = mpz(0)


def compute_product(p: int, k: int, s: int):
    """Product of k terms p, p-s, p-2s, ... with empty/nonpositive guards.

    Returns 1 if k == 0, returns 0 if the last term p-(k-1)s is <= 0, and
    otherwise the full product, computed by splitting the terms into two
    halves (keeps intermediate factors balanced).
    """
    if k == 0:
        return ONE
    if p - (k - 1) * s <= 0:
        return ZERO
    return _product_positive(mpz(p), k, s)


def _product_positive(p, k: int, s: int):
    if k == 1:
        return p
    half = k // 2
    return _product_positive(p, half, s) * _product_positive(p - half * s, k - half, s)


def prod_factorial(v, i: int, j: int):
    """Product of v_p! for p in the 1-based inclusive range [i, j]."""
    if not 1 <= i <= j <= len(v):
        raise IndexError(f"range [{i}, {j}] out of bounds for length {len(v)}")
    if i == j:
        x = v[i - 1]
        return compute_product(x, x, 1)
    m = (i + j) // 2
    return prod_factorial(v, i, m) * prod_factorial(v, m + 1, j)


def double_factorial_ratio(s_hi: int, s_lo: int):
    """(s_hi - 1)!! / (s_lo - 1)!! for even s_hi >= s_lo >= 0.

    With s_lo == 0 this is (s_hi - 1)!!, the number of matchings on s_hi
    points ((-1)!! == 1 by convention).
    """
    if s_hi % 2 or s_lo % 2:
        raise ValueError("double_factorial_ratio needs even arguments")
    if s_hi < s_lo or s_lo < 0:
        raise ValueError("need s_hi >= s_lo >= 0")
    return compute_product(s_hi - 1, (s_hi - s_lo) // 2, 2)


def binomial(n: int, m: int):
    """n choose m, zero when n < m."""
    num = compute_product(n, m, 1)
    if num == 0:
        return num
    return num // compute_product(m, m, 1)


def ceil_div(a, b):
    """Exact ceiling of a / b for nonnegative a, positive b."""
    q = a // b
    if q * b < a:
        q += 1
    return q
