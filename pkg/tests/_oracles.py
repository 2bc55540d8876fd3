"""Independent oracles used to freeze expected values.

Everything here is deliberately naive (truncated power series, brute-force
scans) and shares no code with the package under test.
"""

from __future__ import annotations

import math
from fractions import Fraction as Q

from bgcert.chern import ChernVector


# --- truncated power series in one variable h, coefficients exact -----------

def series_mul(a, b, deg=3):
    out = [Q(0)] * (deg + 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j <= deg:
                out[i + j] += ai * bj
    return out


def series_inv(a, deg=3):
    assert a[0] == 1
    out = [Q(1)] + [Q(0)] * deg
    for k in range(1, deg + 1):
        out[k] = -sum(a[j] * out[k - j] for j in range(1, k + 1))
    return out


def ci_chern_numbers(n, degrees):
    """(H^3, c2(X).H) for a 3-dimensional complete intersection in P^n.

    Expands c(P^n) / prod(1 + deg_i h) and pairs the h^2 coefficient with H.
    """
    assert n - len(degrees) == 3
    total = [Q(1)]
    for _ in range(n + 1):
        total = series_mul(total, [Q(1), Q(1), Q(0), Q(0)])
    denom = [Q(1)]
    for dg in degrees:
        denom = series_mul(denom, [Q(1), Q(dg), Q(0), Q(0)])
    c = series_mul(total, series_inv(denom))
    d = math.prod(degrees)
    return d, c[2] * d


def exp_line_bundle(d, n):
    """ch(O(nH)) via the exponential series, as intersection numbers."""
    coeffs = [Q(n) ** k / math.factorial(k) for k in range(4)]
    return (int(coeffs[0]), int(coeffs[1]), coeffs[2] * d, coeffs[3] * d)


# --- twist rule: multiply a Chern vector by exp(n h) -------------------------

def twist(ch: ChernVector, d: int, n: int) -> ChernVector:
    return ChernVector(
        ch.ch0,
        ch.c1 + n * ch.ch0,
        ch.ch2H + n * ch.c1 * d + Q(n * n * ch.ch0 * d, 2),
        ch.ch3 + n * ch.ch2H + Q(n * n, 2) * ch.c1 * d + Q(n ** 3 * ch.ch0 * d, 6),
    )


# --- brute-force scans --------------------------------------------------------

def naive_candidates(d):
    """Literal triple-constraint scan over 1 <= r <= 2d, 0 <= c2H <= d."""
    out = []
    for r in range(1, 2 * d + 1):
        for c2h in range(0, d + 1):
            ch2h = Q(d, 2) - c2h
            if ch2h > 0 and 2 * r * c2h >= (r - 1) * d:
                out.append((r, c2h))
    return sorted(out)


def naive_lemma1_window(r):
    return sorted(
        (k, s)
        for s in range(1, r + 1)
        for k in range(1, s + 2)
        if Q(1, r + 1) <= Q(k, s) <= Q(1, r)
    )


def naive_lemma2_window(r):
    return sorted(
        (k, s)
        for s in range(1, r - 1)
        for k in range(1, s + 2)
        if Q(1, r) <= Q(k, s) <= Q(1, r - 1)
    )
