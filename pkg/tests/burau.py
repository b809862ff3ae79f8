"""
Reduced Burau representation of B3 with polynomial entries in t.

Faithful on B3, so two positive words give the same braid iff their matrices
agree.  Polynomials are tuples of integer coefficients, lowest degree first.
"""

from __future__ import annotations


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _add(p, q):
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def _mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _matmul(x, y):
    return tuple(
        tuple(_add(_mul(x[i][0], y[0][j]), _mul(x[i][1], y[1][j])) for j in range(2))
        for i in range(2)
    )


ONE, ZERO, T, NEG_T = (1,), (), (0, 1), (0, -1)
IDENTITY = ((ONE, ZERO), (ZERO, ONE))
GENERATORS = {
    "1": ((NEG_T, ONE), (ZERO, ONE)),
    "2": ((ONE, ZERO), (T, NEG_T)),
}


def burau(word: str):
    m = IDENTITY
    for ch in word:
        m = _matmul(m, GENERATORS[ch])
    return m
