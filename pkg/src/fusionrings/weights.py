"""Root-system data and exact quantum dimension / twist formulas.

For the two orthogonal series handled here the pairing is normalized so that
short roots have squared length 2: for so_{2r+1} that doubles the Euclidean
dot product, for so_{2r} (simply laced) it is the dot product itself.  Twists
are theta = q^{<lambda+2rho, lambda>} and dimensions are products of quantum
integers [<lambda+rho, alpha>] / [<rho, alpha>] over the positive roots; both
are evaluated exactly, with fractional powers of q taken on the principal
branch of the presented root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyc, root_of_unity_power


@dataclass(frozen=True)
class WeightData:
    """Positive roots, Weyl vector and normalized pairing for one family."""

    family: str  # 'B' (so_{2r+1}) or 'D' (so_{2r})
    rank: int
    positive_roots: tuple
    rho: tuple
    scale: int  # pairing = scale * (Euclidean dot)

    def ip(self, x, y) -> Fraction:
        return self.scale * sum(Fraction(a) * Fraction(b) for a, b in zip(x, y))


def weight_data(family: str, rank: int) -> WeightData:
    if family == "B":
        roots = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                for sign in (1, -1):
                    roots.append(
                        tuple(
                            (1 if k == i else 0) + sign * (1 if k == j else 0)
                            for k in range(rank)
                        )
                    )
        rho = tuple(Fraction(2 * (rank - i) - 1, 2) for i in range(rank))
        return WeightData("B", rank, tuple(roots), rho, 2)
    if family == "D":
        roots = []
        for i in range(rank):
            for j in range(i + 1, rank):
                for sign in (1, -1):
                    roots.append(
                        tuple(
                            (1 if k == i else 0) + sign * (1 if k == j else 0)
                            for k in range(rank)
                        )
                    )
        rho = tuple(Fraction(rank - 1 - i) for i in range(rank))
        return WeightData("D", rank, tuple(roots), rho, 1)
    raise ValueError(f"unsupported family {family!r}")


def quantum_integer(n: int, q: Cyc) -> Cyc:
    """[n] = (q^n - q^-n)/(q - q^-1), evaluated via the telescoped sum."""
    if q * q == Cyc.rational(1):
        raise ValueError("quantum integers are undefined at q = +-1")
    if n < 0:
        return -quantum_integer(-n, q)
    acc = Cyc.rational(0)
    power = q ** (n - 1) if n >= 1 else None
    qinv2 = (q * q).inverse()
    for _ in range(n):
        acc = acc + power
        power = power * qinv2
    return acc


def twist_from_weight(w: WeightData, lam, q: Cyc) -> Cyc:
    """theta_lambda = q^{<lambda+2rho, lambda>}, exact for rational exponents."""
    lam = tuple(Fraction(x) for x in lam)
    shifted = tuple(a + 2 * b for a, b in zip(lam, w.rho))
    exponent = w.ip(shifted, lam)
    return root_of_unity_power(q, exponent)


def qdim_from_weight(w: WeightData, lam, q: Cyc) -> Cyc:
    """prod over positive roots of [<lambda+rho, alpha>] / [<rho, alpha>]."""
    lam = tuple(Fraction(x) for x in lam)
    shifted = tuple(a + b for a, b in zip(lam, w.rho))
    num = Cyc.rational(1)
    den = Cyc.rational(1)
    cache = {}
    for alpha in w.positive_roots:
        top = w.ip(shifted, alpha)
        bot = w.ip(w.rho, alpha)
        if top.denominator != 1 or bot.denominator != 1:
            raise ValueError("pairing against a root must be an integer")
        for key, target in ((int(top), "num"), (int(bot), "den")):
            if key not in cache:
                cache[key] = quantum_integer(key, q)
        t, b = cache[int(top)], cache[int(bot)]
        if b.is_zero():
            raise ValueError(f"vanishing quantum integer [{int(bot)}] in the denominator")
        num = num * t
        den = den * b
    if den.is_zero():
        raise ValueError("vanishing denominator in the dimension formula")
    return num / den
