"""Finite abelian groups, bilinear and quadratic forms, Lagrangian subgroups.

Groups are products of cyclic factors with elements stored as exponent
tuples.  Forms take root-of-unity values represented exactly; nondegeneracy,
well-definedness and the quadratic-form axioms are verified by brute force on
construction, which is cheap at the group sizes this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd, prod

from .cyclotomic import Cyc, zeta


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        if any(o < 1 for o in self.orders):
            raise ValueError("cyclic factor orders must be positive")

    @property
    def order(self) -> int:
        return prod(self.orders) if self.orders else 1

    def elements(self):
        return [tuple(v) for v in iproduct(*[range(o) for o in self.orders])]

    def zero(self):
        return tuple(0 for _ in self.orders)

    def add(self, x, y):
        return tuple((a + b) % o for a, b, o in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % o for a, o in zip(x, self.orders))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def element_order(self, x) -> int:
        out = 1
        for a, o in zip(x, self.orders):
            comp = o // gcd(o, a)
            out = out * comp // gcd(out, comp)
        return out

    def subgroup_generated(self, gens) -> frozenset:
        members = {self.zero()}
        gens = list(gens)
        changed = True
        while changed:
            changed = False
            for g in gens:
                for m in list(members):
                    s = self.add(m, g)
                    if s not in members:
                        members.add(s)
                        changed = True
        return frozenset(members)

    def subgroups(self):
        """All subgroups, each a frozenset of elements, smallest first."""
        subs = {frozenset({self.zero()})}
        agenda = [frozenset({self.zero()})]
        elements = self.elements()
        while agenda:
            cur = agenda.pop()
            for g in elements:
                if g in cur:
                    continue
                grown = self.subgroup_generated(set(cur) | {g})
                if grown not in subs:
                    subs.add(grown)
                    agenda.append(grown)
        return sorted(subs, key=lambda s: (len(s), sorted(s)))

    def __repr__(self):
        return "Z" + "xZ".join(str(o) for o in self.orders) if self.orders else "Z1"


def parse_group(spec: str) -> AbelianGroup:
    """Comma-separated cyclic orders, e.g. '3,3'."""
    try:
        orders = tuple(int(tok) for tok in spec.split(",") if tok.strip())
    except ValueError as exc:
        raise ValueError(f"bad group spec {spec!r}") from exc
    if not orders:
        raise ValueError(f"bad group spec {spec!r}")
    return AbelianGroup(orders)


class BilinearForm:
    """Nondegenerate symmetric pairing chi(x,y) = zeta_M^{x^T G y}."""

    __slots__ = ("group", "order", "gram")

    def __init__(self, group: AbelianGroup, order: int, gram):
        self.group = group
        self.order = order
        self.gram = tuple(tuple(int(v) % order for v in row) for row in gram)
        k = len(group.orders)
        if len(self.gram) != k or any(len(r) != k for r in self.gram):
            raise ValueError("Gram matrix shape does not match the group")
        for i in range(k):
            for j in range(k):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
                # well-defined on Z_{n_i} x Z_{n_j}
                if (self.gram[i][j] * group.orders[i]) % order != 0:
                    raise ValueError(
                        f"pairing ill-defined: M does not divide G[{i}][{j}] * n_{i}"
                    )
        rad = self.radical()
        if len(rad) != 1:
            raise ValueError(f"form is degenerate; radical has {len(rad)} elements")

    def exponent(self, x, y) -> int:
        acc = 0
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                acc += xi * sum(row[j] * yj for j, yj in enumerate(y))
        return acc % self.order

    def chi(self, x, y) -> Cyc:
        return zeta(self.order, self.exponent(x, y))

    def radical(self) -> frozenset:
        elems = self.group.elements()
        return frozenset(
            x for x in elems if all(self.exponent(x, y) == 0 for y in elems)
        )

    def orthogonal_complement(self, subgroup) -> frozenset:
        return frozenset(
            x for x in self.group.elements() if all(self.exponent(x, l) == 0 for l in subgroup)
        )

    def __repr__(self):
        return f"BilinearForm({self.group!r}, zeta_{self.order}, gram={self.gram})"


def hyperbolic_form(n: int) -> BilinearForm:
    """The pairing ((x1,x2),(y1,y2)) -> xi^{x1 y2 + y1 x2} on Z_n x Z_n."""
    return BilinearForm(AbelianGroup((n, n)), n, ((0, 1), (1, 0)))


def standard_form(group: AbelianGroup) -> BilinearForm:
    """A canonical nondegenerate diagonal pairing, zeta_{n_i}^{x_i y_i} per factor."""
    m = 1
    for o in group.orders:
        m = m * o // gcd(m, o)
    gram = [[0] * len(group.orders) for _ in group.orders]
    for i, o in enumerate(group.orders):
        gram[i][i] = m // o
    return BilinearForm(group, m, gram)


def parse_form(group: AbelianGroup, spec: str) -> BilinearForm:
    """Gram-matrix syntax 'a,b;c,d@M': integer exponents against zeta_M."""
    try:
        matpart, mpart = spec.split("@")
        order = int(mpart)
        gram = [[int(v) for v in row.split(",")] for row in matpart.split(";")]
    except ValueError as exc:
        raise ValueError(f"bad form spec {spec!r}") from exc
    return BilinearForm(group, order, gram)


def lagrangian_search(group: AbelianGroup, form: BilinearForm):
    """First subgroup L with L = L^perp, or None after exhausting all subgroups.

    Any returned subgroup satisfies |L|^2 = |A|.
    """
    if form.group != group:
        raise ValueError("form is defined on a different group")
    for sub in group.subgroups():
        if form.orthogonal_complement(sub) == sub:
            assert len(sub) ** 2 == group.order
            return sub
    return None


class QuadraticForm:
    """q(x) = zeta_M^{sum_{i<=j} C[i][j] x_i x_j}, with q(-x) = q(x) checked.

    The associated symmetric pairing is b(x,y) = q(x+y)/(q(x)q(y)); the
    constructor verifies bilinearity, well-definedness on the group, and
    (when required) nondegeneracy, all by brute force.
    """

    __slots__ = ("group", "order", "coeffs", "_values")

    def __init__(self, group: AbelianGroup, order: int, coeffs, require_nondegenerate=True):
        self.group = group
        self.order = order
        self.coeffs = tuple(tuple(int(v) % order for v in row) for row in coeffs)
        values = {}
        for x in group.elements():
            e = 0
            k = len(group.orders)
            for i in range(k):
                for j in range(i, k):
                    if self.coeffs[i][j]:
                        e += self.coeffs[i][j] * x[i] * x[j]
            values[x] = zeta(order, e % order)
        self._values = values
        for x in group.elements():
            if not (values[group.neg(x)] == values[x]):
                raise ValueError(f"not a quadratic form: q(-x) != q(x) at {x}")
        bad = self._bilinearity_defect()
        if bad is not None:
            raise ValueError(f"associated pairing not bilinear at {bad}")
        if require_nondegenerate and len(self.bilinear_radical()) != 1:
            raise ValueError("associated bilinear form is degenerate")

    def q(self, x) -> Cyc:
        return self._values[x]

    def bilinear(self, x, y) -> Cyc:
        return self.q(self.group.add(x, y)) / (self.q(x) * self.q(y))

    def _bilinearity_defect(self):
        # b(x+y, g) = b(x, g) b(y, g) on generators g implies full bilinearity
        elems = self.group.elements()
        k = len(self.group.orders)
        gens = [
            tuple((1 if i == t else 0) % self.group.orders[i] for i in range(k))
            for t in range(k)
        ]
        for g in gens:
            for x in elems:
                for y in elems:
                    lhs = self.bilinear(self.group.add(x, y), g)
                    rhs = self.bilinear(x, g) * self.bilinear(y, g)
                    if not (lhs == rhs):
                        return (x, y, g)
        return None

    def bilinear_radical(self) -> frozenset:
        elems = self.group.elements()
        one = Cyc.rational(1)
        return frozenset(
            x for x in elems if all(self.bilinear(x, y) == one for y in elems)
        )


def standard_quadratic_form(group: AbelianGroup) -> QuadraticForm:
    """Canonical nondegenerate quadratic form, stitched per cyclic factor.

    On an even factor Z_n the diagonal exponent is taken against zeta_{2n};
    on an odd factor against zeta_n with the inverse of 2 mod n, so that the
    values stay well-defined on the group.
    """
    m = 1
    for o in group.orders:
        step = 2 * o if o % 2 == 0 else o
        m = m * step // gcd(m, step)
    k = len(group.orders)
    coeffs = [[0] * k for _ in range(k)]
    for i, o in enumerate(group.orders):
        if o == 1:
            continue
        if o % 2 == 0:
            coeffs[i][i] = m // (2 * o)
        else:
            inv2 = pow(2, -1, o)
            coeffs[i][i] = (m // o) * inv2
    return QuadraticForm(group, m, coeffs)


# -- chi-characters (quadratic refinements of a pairing) ---------------------------


def chi_characters(form: BilinearForm):
    """All functions rho with rho(x+y) = rho(x) rho(y) chi(x,y), as value dicts.

    One base refinement is built from the Gram matrix (diagonal exponents are
    halved against zeta_{2M} on even factors, via the inverse of 2 on odd
    ones); the rest differ from it by the characters chi(g, .).  The defining
    identity is verified on all pairs before returning.
    """
    group, M = form.group, form.order
    k = len(group.orders)
    elems = group.elements()

    diag = []
    for i in range(k):
        gii, o = form.gram[i][i], group.orders[i]
        # zeta_{2M}^{g x^2} descends to Z_o iff (g*o/M)*o is even; g and g+M
        # give the same pairing, and one of them always works
        if gii and ((gii * o) // M * o) % 2 != 0:
            gii += M
        diag.append(gii)

    def base_value(x):
        e2 = sum(diag[i] * x[i] * x[i] for i in range(k))  # against zeta_{2M}
        e1 = 0  # cross terms against zeta_M
        for i in range(k):
            for j in range(i + 1, k):
                if form.gram[i][j] and x[i] and x[j]:
                    e1 += form.gram[i][j] * x[i] * x[j]
        return zeta(2 * M, e2 % (2 * M)) * zeta(M, e1 % M)

    base = {x: base_value(x) for x in elems}
    for x in elems:
        for y in elems:
            want = base[x] * base[y] * form.chi(x, y)
            if not (base[group.add(x, y)] == want):
                raise ArithmeticError(f"base refinement fails the defining identity at {(x, y)}")
    out = []
    for g in elems:
        out.append({x: base[x] * form.chi(g, x) for x in elems})
    return out
