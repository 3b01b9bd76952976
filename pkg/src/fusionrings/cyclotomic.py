"""Exact arithmetic in cyclotomic fields, with certified interval embeddings.

An element of Q(zeta_n) is stored in the power basis 1, x, ..., x^{phi(n)-1}
of Q[x]/Phi_n(x), where Phi_n is the n-th cyclotomic polynomial and x stands
for zeta_n = e^{2*pi*i/n}.  Coefficients are kept as an integer vector over a
common positive denominator and are always reduced mod Phi_n, so equality is
coefficient-wise once two elements are lifted to a common conductor.

Real/complex comparisons go through mpmath interval arithmetic: enclosures
are refined until they decide, and equalities are never decided numerically.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from ._polys import monic_divmod, trim

DEFAULT_PRECISION = int(os.environ.get("FUSIONRINGS_PREC", "128"))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial, ascending integer coefficients, monic."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    p = [0] * (n + 1)
    p[0], p[n] = -1, 1
    p = tuple(p)
    for d in _divisors(n):
        if d < n:
            p, rem = monic_divmod(p, cyclotomic_polynomial(d))
            assert not any(rem) or rem == (0,), "cyclotomic division must be exact"
    assert len(p) == euler_phi(n) + 1 and p[-1] == 1
    return p


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer rows giving x^m mod Phi_n for 0 <= m <= max(n-1, 2*phi-2)."""
    phi = euler_phi(n)
    top = max(n - 1, 2 * phi - 2)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    if phi > 0:
        cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(top):
        nxt = [0] + cur[: phi - 1] if phi > 1 else [0]
        lead = cur[phi - 1] if phi >= 1 else 0
        if lead:
            for i in range(phi):
                nxt[i] -= lead * poly[i]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        g = gcd(g, abs(c))
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class Cyc:
    """An element of a cyclotomic field, exact and immutable."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi = euler_phi(n)
        num = list(num)
        if len(num) != phi:
            raise ValueError(f"need {phi} coefficients at conductor {n}, got {len(num)}")
        num, den = _normalize(num, den)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyc":
        q = Fraction(q)
        return Cyc(1, [q.numerator], q.denominator)

    @staticmethod
    def from_fractions(n: int, coeffs) -> "Cyc":
        den = 1
        fr = [Fraction(c) for c in coeffs]
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return Cyc(n, [int(c * den) for c in fr], den)

    # -- representation helpers --------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def raised(self, m: int) -> "Cyc":
        """The same element at conductor m (n must divide m)."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise ValueError("can only raise to a multiple of the conductor")
        step = m // self.n
        rows = _power_rows(m)
        phi = euler_phi(m)
        out = [0] * phi
        for j, c in enumerate(self.num):
            if c:
                row = rows[j * step]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyc(m, out, self.den)

    def _common(self, other: "Cyc"):
        m = self.n * other.n // gcd(self.n, other.n)
        return self.raised(m), other.raised(m)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def is_real(self) -> bool:
        return self == self.conjugate()

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = self._common(other)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Cyc(a.n, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-c for c in self.num], self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self._common(other)
        phi = euler_phi(a.n)
        conv = [0] * (2 * phi - 1 if phi > 0 else 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        rows = _power_rows(a.n)
        out = list(conv[:phi]) + [0] * max(0, phi - len(conv))
        for m in range(phi, len(conv)):
            c = conv[m]
            if c:
                row = rows[m]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyc(a.n, out[:phi], a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyc.rational(1 / self.as_fraction())
        nz = [j for j, c in enumerate(self.num) if c]
        if len(nz) == 1:
            # monomial c * x^j: invert the coefficient and flip the exponent
            j = nz[0]
            coef = Fraction(self.den, self.num[j])
            return zeta(self.n, self.n - j) * Cyc.rational(coef)
        # extended Euclid against Phi_n over the rationals: s*a + t*Phi = const
        from ._polys import degree, frac_divmod, poly_add, poly_mul, poly_neg

        phi_poly = tuple(Fraction(c) for c in cyclotomic_polynomial(self.n))
        r0, r1 = phi_poly, trim(self.coeffs)
        s0, s1 = (Fraction(0),), (Fraction(1),)
        while degree(r1) > 0:
            q, r = frac_divmod(r0, r1)
            r0, r1 = r1, trim(r)
            s0, s1 = s1, poly_add(s0, poly_neg(poly_mul(q, s1)))
        c = r1[0]  # nonzero constant: Phi_n irreducible, self != 0 mod Phi_n
        assert c != 0
        phi = euler_phi(self.n)
        inv_coeffs = [Fraction(x) / c for x in s1] + [Fraction(0)] * phi
        result = Cyc.from_fractions(self.n, inv_coeffs[:phi])
        assert result * self == Cyc.rational(1), "inverse verification failed"
        return result

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_rational():
            q = other.as_fraction()
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * Cyc.rational(1 / q)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    __hash__ = None

    # -- Galois action -------------------------------------------------------

    def galois(self, k: int) -> "Cyc":
        """Apply the field automorphism zeta_n -> zeta_n^k (k coprime to n)."""
        k %= self.n
        if gcd(k, self.n) != 1:
            raise ValueError(f"exponent {k} not coprime to conductor {self.n}")
        rows = _power_rows(self.n)
        phi = euler_phi(self.n)
        out = [0] * phi
        for j, c in enumerate(self.num):
            if c:
                row = rows[(j * k) % self.n]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyc(self.n, out, self.den)

    def conjugate(self) -> "Cyc":
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def norm_squared(self) -> "Cyc":
        return self * self.conjugate()

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc({body} | zeta_{self.n})"


def _coerce(x) -> Cyc:
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Cyc")


def zeta(n: int, k: int = 1) -> Cyc:
    """zeta_n^k as an exact element of conductor n."""
    k %= n
    rows = _power_rows(n)
    return Cyc(n, list(rows[k]))


def cyc_arith(a: Cyc, b: Cyc, op: str) -> Cyc:
    """Dispatch arithmetic by name; 'div' rejects a zero divisor."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def galois_conjugate(a: Cyc, k: int) -> Cyc:
    return a.galois(k)


# -- integer square roots as Gauss sums --------------------------------------


def _factor(m: int):
    out = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyc:
    """The positive square root of a prime, inside Q(zeta_{4p})."""
    if p == 2:
        cand = zeta(8) + zeta(8, 7)
    else:
        g = Cyc(p, [0] * euler_phi(p))
        for k in range(1, p):
            g = g + _legendre(k, p) * zeta(p, k)
        if p % 4 == 1:
            cand = g
        else:
            cand = g * zeta(4, 3)  # g = i*sqrt(p); multiply by -i
    if sign_real(cand) < 0:
        cand = -cand
    assert cand * cand == Cyc.rational(p)
    return cand


def sqrt_integer_as_cyclotomic(m: int) -> Cyc:
    """The positive square root of a positive integer, as an exact cyclotomic.

    Realized through quadratic Gauss sums; the result lives in Q(zeta_{4m})
    (the conductor actually used divides 4m), squares to m exactly, and its
    interval embedding is positive.
    """
    if m < 1:
        raise ValueError("need a positive integer")
    square_part, rest = 1, 1
    for p, e in _factor(m).items():
        square_part *= p ** (e // 2)
        if e % 2:
            rest *= p
    result = Cyc.rational(square_part)
    for p in _factor(rest):
        result = result * _sqrt_prime(p)
    assert result * result == Cyc.rational(m)
    return result


# -- interval embedding -------------------------------------------------------


@dataclass(frozen=True)
class RealInterval:
    """A closed interval certified to contain the represented real number."""

    lo: object
    hi: object

    def width(self):
        return self.hi - self.lo

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, q) -> bool:
        return self.lo <= q <= self.hi

    def disjoint(self, other: "RealInterval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def __repr__(self):
        return f"[{mpmath.nstr(mpmath.mpf(self.lo), 17)}, {mpmath.nstr(mpmath.mpf(self.hi), 17)}]"


def embed_interval(a: Cyc, precision: int = DEFAULT_PRECISION):
    """Certified enclosures of Re and Im of the embedding zeta_n -> e^{2 pi i/n}."""
    if precision < 32:
        raise ValueError("precision must be at least 32 bits")
    iv = mpmath.iv
    old = iv.prec
    iv.prec = precision
    try:
        re = iv.mpf(0)
        im = iv.mpf(0)
        two_pi = 2 * iv.pi
        for j, c in enumerate(a.num):
            if c == 0:
                continue
            coef = iv.mpf(c) / a.den
            if j == 0:
                re += coef
                continue
            ang = two_pi * j / a.n
            re += coef * iv.cos(ang)
            im += coef * iv.sin(ang)
        def exact(x):  # endpoint without re-rounding at the global precision
            lo, hi = x._mpi_
            return RealInterval(mpmath.mp.make_mpf(lo), mpmath.mp.make_mpf(hi))

        return exact(re), exact(im)
    finally:
        iv.prec = old


def sign_real(a: Cyc, precision: int = DEFAULT_PRECISION) -> int:
    """Exact sign of a real cyclotomic value (never decided by overlap)."""
    if a.is_zero():
        return 0
    if a.is_rational():
        q = a.as_fraction()
        return (q > 0) - (q < 0)
    if not a.is_real():
        raise ValueError("sign of a non-real value")
    prec = precision
    while True:
        re, _ = embed_interval(a, prec)
        if not re.contains_zero():
            return 1 if re.lo > 0 else -1
        prec *= 2
        if prec > 1 << 22:  # pragma: no cover - nonzero values always separate
            raise ArithmeticError("interval refinement did not separate from zero")


def compare_real(a: Cyc, b: Cyc) -> int:
    return sign_real(a - b)


def root_of_unity_exponent(q: Cyc):
    """Return (d, k) with q = zeta_d^k, gcd(k, d) = 1, or None if q is not one."""
    if q.is_zero():
        return None
    bound = q.n if q.n % 2 == 0 else 2 * q.n
    if not (q ** bound == Cyc.rational(1)):
        return None
    d = next(t for t in _divisors(bound) if q ** t == Cyc.rational(1))
    for k in range(d):
        if gcd(k, d) == 1 and q == zeta(d, k):
            return (d, k)
    return None  # pragma: no cover


def root_of_unity_power(q: Cyc, e: Fraction) -> Cyc:
    """q**e for q a root of unity and rational e, via the principal branch.

    With q = e^{2 pi i k/d} the result is e^{2 pi i k e/d}, exact.
    """
    dk = root_of_unity_exponent(q)
    if dk is None:
        raise ValueError("base is not a root of unity")
    d, k = dk
    e = Fraction(e)
    return zeta(d * e.denominator, k * e.numerator)


def canonical_sqrt_of_unit(v: Cyc) -> Cyc:
    """The square root of a root of unity whose argument lies in [0, pi).

    For v = e^{2 pi i j/d} the two roots are +/- e^{pi i j/d}; exactly one has
    argument in [0, pi), which makes labels built from square roots canonical.
    """
    dk = root_of_unity_exponent(v)
    if dk is None:
        raise ValueError("value is not a root of unity")
    d, k = dk
    root = zeta(2 * d, k)
    if _arg_in_upper_half(root):
        return root
    other = -root
    assert _arg_in_upper_half(other)
    return other


def _arg_in_upper_half(x: Cyc, precision: int = DEFAULT_PRECISION) -> bool:
    """True when arg(x) lies in [0, pi), for x a nonzero root of unity."""
    im = (x - x.conjugate()) * zeta(4, 3)  # 2*Im(x), as a real cyclotomic
    s = sign_real(im * Cyc.rational(Fraction(1, 2)))
    if s > 0:
        return True
    if s < 0:
        return False
    re = (x + x.conjugate()) * Cyc.rational(Fraction(1, 2))
    return sign_real(re) > 0


# -- JSON form ----------------------------------------------------------------


def cyc_to_json(a: Cyc):
    """{"n": conductor, "c": [[num, den], ...]} with phi(n) reduced pairs."""
    return {"n": a.n, "c": [[c.numerator, c.denominator] for c in a.coeffs]}


def cyc_from_json(obj) -> Cyc:
    n = int(obj["n"])
    coeffs = [Fraction(int(p), int(q)) for p, q in obj["c"]]
    if len(coeffs) != euler_phi(n):
        raise ValueError("coefficient vector has wrong length for the conductor")
    return Cyc.from_fractions(n, coeffs)
