"""Low-level exact polynomial helpers.

Polynomials are coefficient sequences in ascending degree order.  Integer
polynomials are tuples of int; rational ones tuples of Fraction.  Everything
here is exact; the only floating point that ever appears in the package is as
a *hint* that is re-certified by Sturm counts or interval arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(p):
    """Drop trailing zero coefficients (the zero polynomial becomes (0,))."""
    d = len(p) - 1
    while d > 0 and p[d] == 0:
        d -= 1
    return tuple(p[: d + 1])


def degree(p):
    p = trim(p)
    if len(p) == 1 and p[0] == 0:
        return -1
    return len(p) - 1


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return trim(out)


def poly_add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_neg(p):
    return tuple(-a for a in p)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    if len(p) <= 1:
        return (0,)
    return tuple(i * c for i, c in enumerate(p))[1:]


def monic_divmod(p, q):
    """Divide by a monic polynomial, exactly, preserving the coefficient type."""
    q = trim(q)
    if q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(q) - 1
    quot = [0] * max(1, len(p) - dq)
    while len(trim(rem)) - 1 >= dq and any(rem):
        rem = list(trim(rem))
        d = len(rem) - 1
        if d < dq:
            break
        c = rem[d]
        quot[d - dq] = c
        for i in range(dq + 1):
            rem[d - dq + i] -= c * q[i]
    return trim(quot), trim(rem)


def frac_divmod(p, q):
    """Polynomial division over the rationals."""
    q = trim(q)
    if degree(q) < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(q[-1])
    rem = [Fraction(c) for c in p]
    dq = len(q) - 1
    quot = [Fraction(0)] * max(1, len(p) - dq)
    while True:
        rem = [Fraction(c) for c in trim(rem)]
        d = len(rem) - 1
        if d < dq or (d == 0 and rem[0] == 0):
            break
        c = rem[d] / lead
        quot[d - dq] = c
        for i in range(dq + 1):
            rem[d - dq + i] -= c * q[i]
    return trim(quot), trim(rem)


def divides(q, p):
    """True when q divides p exactly over the rationals."""
    _, rem = frac_divmod(p, q)
    return degree(rem) < 0


def _primitive_int(p):
    """Scale a rational polynomial by a positive rational to a primitive integer one."""
    p = trim(p)
    if all(c == 0 for c in p):
        return (0,)
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return tuple(c // g for c in ints)


def squarefree_part(p):
    """p / gcd(p, p'), as a primitive integer polynomial (positive leading coeff)."""
    a = [Fraction(c) for c in trim(p)]
    b = [Fraction(c) for c in poly_derivative(a)]
    while degree(b) >= 0:
        _, r = frac_divmod(a, b)
        a, b = b, [Fraction(c) for c in trim(r)]
    g = trim(a)
    if degree(g) <= 0:
        sf = trim(p)
    else:
        sf, _ = frac_divmod(p, g)
    sf = _primitive_int(sf)
    if sf[-1] < 0:
        sf = poly_neg(sf)
    return sf


def sturm_chain(p):
    """Sturm chain of a squarefree integer polynomial, as primitive integer polys."""
    chain = [trim(p), _primitive_int(poly_derivative(p))]
    while degree(chain[-1]) > 0:
        _, r = frac_divmod(chain[-2], chain[-1])
        r = trim(r)
        if degree(r) < 0:
            break
        chain.append(poly_neg(_primitive_int(r)))
    return chain


def _variations(chain, x):
    count, prev = 0, 0
    for q in chain:
        s = poly_eval(q, x)
        s = (s > 0) - (s < 0)
        if s != 0:
            if prev != 0 and s != prev:
                count += 1
            prev = s
    return count


def count_roots(chain, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    if a >= b:
        return 0
    return _variations(chain, a) - _variations(chain, b)


def charpoly_int(mat):
    """Characteristic polynomial det(xI - M) of an integer matrix.

    Faddeev-LeVerrier; all intermediate values are integers.  Returned in
    ascending order, monic of degree n.
    """
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    c_prev = 1
    for k in range(1, n + 1):
        # mk <- M (mk + c_prev I)
        tmp = [row[:] for row in mk]
        for i in range(n):
            tmp[i][i] += c_prev
        new = [[sum(mat[i][l] * tmp[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(new[i][i] for i in range(n))
        if tr % k != 0:
            raise ArithmeticError("trace not divisible in Faddeev-LeVerrier step")
        c_prev = -tr // k
        coeffs[n - k] = c_prev
        mk = new
    return tuple(coeffs)
