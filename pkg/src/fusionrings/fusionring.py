"""Based rings with duality (Grothendieck rings of fusion categories).

A FusionRing stores basis labels, the duality involution and the nonnegative
integer structure constants N_{a,b}^c.  Everything downstream is exact: the
Frobenius-Perron dimension of an object is the largest real root of the
characteristic polynomial of its fusion matrix, certified either as an exact
integer, as an exact quadratic integer, or as an isolated interval produced
by Sturm counts at rational points.  Floats (numpy eigenvalues) only ever
guide the search for a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._polys import charpoly_int, count_roots, divides, poly_eval, squarefree_part, sturm_chain
from .cyclotomic import Cyc, sqrt_integer_as_cyclotomic


class FusionDataError(Exception):
    """Structural problem with fusion data."""


class MissingDataError(FusionDataError):
    """An operation needed a value that the data does not determine."""

    def __init__(self, what, pair=None):
        super().__init__(what)
        self.pair = pair


class FusionRing:
    """Unital based ring: labels, duality involution, sparse fusion tensor."""

    __slots__ = ("labels", "dual", "tensor", "_products", "_mats", "_fpdims")

    def __init__(self, labels, dual, tensor):
        self.labels = tuple(labels)
        self.dual = tuple(dual)
        n = len(self.labels)
        if sorted(self.dual) != list(range(n)):
            raise FusionDataError("dual map is not a permutation of the basis")
        clean = {}
        for (a, b, c), m in tensor.items():
            m = int(m)
            if m < 0:
                raise FusionDataError(f"negative multiplicity at {(a, b, c)}")
            if m > 0:
                clean[(int(a), int(b), int(c))] = m
        self.tensor = clean
        prods = {}
        for (a, b, c), m in clean.items():
            prods.setdefault((a, b), []).append((c, m))
        for key in prods:
            prods[key].sort()
        self._products = {k: tuple(v) for k, v in prods.items()}
        self._mats = None
        self._fpdims = {}

    # -- basic access --------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    def N(self, a: int, b: int, c: int) -> int:
        return self.tensor.get((a, b, c), 0)

    def product(self, a: int, b: int):
        """Decomposition of a (x) b as a sorted tuple of (index, multiplicity)."""
        return self._products.get((a, b), ())

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def fusion_matrices(self):
        if self._mats is None:
            n = self.rank
            mats = np.zeros((n, n, n), dtype=np.int64)
            for (a, b, c), m in self.tensor.items():
                mats[a][c][b] = m
            self._mats = mats
        return self._mats

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.dual == other.dual
            and self.tensor == other.tensor
        )

    def __repr__(self):
        return f"FusionRing(rank={self.rank}, labels={list(self.labels)!r})"


def ring_from_products(labels, dual, products) -> FusionRing:
    """Build a ring from a {(a, b): [(c, mult), ...]} product table."""
    tensor = {}
    for (a, b), decomp in products.items():
        for c, m in decomp:
            if m:
                tensor[(a, b, c)] = tensor.get((a, b, c), 0) + m
    return FusionRing(labels, dual, tensor)


def fusion_matrix(ring: FusionRing, a: int) -> np.ndarray:
    """Matrix M with M[c][b] = N_{a,b}^c (left multiplication by a)."""
    return np.array(ring.fusion_matrices()[a])


# -- validation ---------------------------------------------------------------


@dataclass
class CheckItem:
    name: str
    ok: bool
    witness: str | None = None


@dataclass
class ValidationReport:
    items: list[CheckItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.ok for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.ok]

    def add(self, name, ok, witness=None):
        self.items.append(CheckItem(name, ok, witness))


def validate(ring: FusionRing) -> ValidationReport:
    """Check the based-ring axioms; failures are reported with witnesses."""
    rep = ValidationReport()
    n = ring.rank

    bad = None
    for b in range(n):
        for c in range(n):
            want = 1 if b == c else 0
            if ring.N(0, b, c) != want or ring.N(b, 0, c) != want:
                bad = (b, c)
                break
        if bad:
            break
    rep.add("unit", bad is None, None if bad is None else f"unit axiom fails at {bad}")

    bad = None
    if ring.dual[0] != 0:
        bad = "dual(unit) != unit"
    else:
        for a in range(n):
            if ring.dual[ring.dual[a]] != a:
                bad = f"dual not involutive at {a}"
                break
            for b in range(n):
                want = 1 if b == ring.dual[a] else 0
                if ring.N(a, b, 0) != want:
                    bad = f"N_({a},{b})^0 = {ring.N(a, b, 0)}, expected {want}"
                    break
            if bad:
                break
    rep.add("duality", bad is None, bad)

    bad = None
    for (a, b, c), m in ring.tensor.items():
        if ring.N(ring.dual[a], c, b) != m or ring.N(c, ring.dual[b], a) != m:
            bad = f"Frobenius reciprocity fails at N_({a},{b})^{c} = {m}"
            break
    if bad is None:
        # also scan zero entries reachable through reciprocity
        for (a, b, c), m in ring.tensor.items():
            if ring.N(ring.dual[a], c, b) != ring.N(a, b, c):
                bad = f"reciprocity asymmetry at {(a, b, c)}"
                break
    rep.add("frobenius", bad is None, bad)

    mats = ring.fusion_matrices()
    bad = None
    for a in range(n):
        for b in range(n):
            lhs = mats[a] @ mats[b]
            rhs = np.zeros_like(lhs)
            for c, m in ring.product(a, b):
                rhs += m * mats[c]
            if not np.array_equal(lhs, rhs):
                bad = f"associativity fails for pair ({a},{b})"
                break
        if bad:
            break
    rep.add("associativity", bad is None, bad)
    return rep


# -- Frobenius-Perron dimensions -----------------------------------------------


@dataclass(frozen=True)
class FPDim:
    """Certified largest eigenvalue of a fusion matrix.

    kind is 'rational' (value set), 'quadratic' (larger root of
    x^2 - qa*x - qb, both integers), or 'interval' (isolated enclosure with
    rational endpoints).  The certificate records how exactness was decided.
    """

    kind: str
    value: Fraction | None = None
    qa: int | None = None
    qb: int | None = None
    lo: Fraction | None = None
    hi: Fraction | None = None
    certificate: str = ""

    def approx(self) -> float:
        if self.kind == "rational":
            return float(self.value)
        if self.kind == "quadratic":
            return (self.qa + (self.qa * self.qa + 4 * self.qb) ** 0.5) / 2
        return (float(self.lo) + float(self.hi)) / 2

    def is_exact(self) -> bool:
        return self.kind in ("rational", "quadratic")

    def as_cyclotomic(self) -> Cyc:
        if self.kind == "rational":
            return Cyc.rational(self.value)
        if self.kind == "quadratic":
            disc = self.qa * self.qa + 4 * self.qb
            return (Cyc.rational(self.qa) + sqrt_integer_as_cyclotomic(disc)) / 2
        raise MissingDataError("no exact certificate for this dimension")

    def equals_integer(self, d: int) -> bool:
        return self.kind == "rational" and self.value == d

    def square_is_integer(self) -> bool:
        if self.kind == "rational":
            return self.value.denominator == 1
        if self.kind == "quadratic":
            # larger root of x^2 - a x - b: lambda^2 = a*lambda + b, irrational iff a != 0
            return self.qa == 0
        return False  # interval kind: both recognitions failed, see fp_dimension


def _isolate_largest_root(poly, bound, hint=None):
    """Return (chain, lo, hi) with exactly one root of poly in (lo, hi].

    poly must be squarefree with integer coefficients and at least one real
    root in (0, bound].  A float hint speeds up but never decides anything.
    """
    chain = sturm_chain(poly)
    lo, hi = Fraction(0), Fraction(bound)
    total = count_roots(chain, lo, hi)
    assert total >= 1, "no root in the Perron bound window"
    if hint is not None:
        a = Fraction(hint).limit_denominator(10**9) - Fraction(1, 10**6)
        if lo < a < hi and count_roots(chain, a, hi) == 1:
            lo = a
    while count_roots(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return chain, lo, hi


def _refine(chain, lo, hi, width):
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def fp_dimension(ring: FusionRing, a: int) -> FPDim:
    """Perron root of the fusion matrix of object a, with an exactness certificate."""
    if a in ring._fpdims:
        return ring._fpdims[a]
    mat = [list(map(int, row)) for row in ring.fusion_matrices()[a]]
    n = len(mat)
    poly = charpoly_int(mat)
    bound = max(1, max(sum(row) for row in mat))
    sf = squarefree_part(poly)
    try:
        hint = float(max(np.linalg.eigvals(np.array(mat, dtype=float)).real))
    except Exception:  # pragma: no cover - numerical hint only
        hint = None
    chain, lo, hi = _isolate_largest_root(sf, bound + 1, hint)

    # integer recognition: shrink until at most one integer candidate remains
    while int(hi) - int(lo) > 1:
        lo, hi = _refine(chain, lo, hi, (hi - lo) / 4)
    for d in range(int(lo), int(hi) + 2):
        if lo < d <= hi and poly_eval(sf, Fraction(d)) == 0:
            result = FPDim(
                kind="rational",
                value=Fraction(d),
                certificate=f"integer root {d} isolated in ({lo},{hi}] by Sturm counts",
            )
            ring._fpdims[a] = result
            return result

    # quadratic recognition: x^2 - qa*x - qb with the larger root in (lo, hi]
    lo, hi = _refine(chain, lo, hi, Fraction(1, 10**6))
    for qa in range(-2 * bound, 2 * bound + 1):
        approx = (float(lo) + float(hi)) / 2
        qb0 = round(approx * approx - qa * approx)
        for qb in (qb0 - 1, qb0, qb0 + 1):
            disc = qa * qa + 4 * qb
            if disc <= 0:
                continue
            if not divides((Fraction(-qb), Fraction(-qa), Fraction(1)), [Fraction(c) for c in sf]):
                continue
            if _larger_quadratic_root_in(qa, qb, lo, hi):
                result = FPDim(
                    kind="quadratic",
                    qa=qa,
                    qb=qb,
                    certificate=f"x^2-{qa}x-{qb} divides the characteristic polynomial; "
                    f"root isolated in ({lo},{hi}]",
                )
                ring._fpdims[a] = result
                return result

    lo, hi = _refine(chain, lo, hi, Fraction(1, 10**13))
    result = FPDim(
        kind="interval",
        lo=lo,
        hi=hi,
        certificate="isolated interval of width < 1e-12; integer and quadratic "
        "recognitions certified negative",
    )
    ring._fpdims[a] = result
    return result


def _larger_quadratic_root_in(qa, qb, lo, hi):
    """Exact test that (qa + sqrt(qa^2+4qb))/2 lies in (lo, hi]."""
    disc = qa * qa + 4 * qb

    def root_gt(q):  # root > q  <=>  sqrt(disc) > 2q - qa
        rhs = 2 * q - qa
        if rhs < 0:
            return True
        return disc > rhs * rhs

    def root_le(q):  # root <= q
        rhs = 2 * q - qa
        if rhs < 0:
            return False
        return disc <= rhs * rhs

    return root_gt(lo) and root_le(hi)


def fp_dimension_category(ring: FusionRing):
    """Sum of squared FP-dimensions; exact (a Fraction) when all dims are exact."""
    total = Cyc.rational(0)
    for a in range(ring.rank):
        d = fp_dimension(ring, a)
        if not d.is_exact():
            lo = hi = Fraction(0)
            for b in range(ring.rank):
                db = fp_dimension(ring, b)
                if db.is_exact():
                    q = db.as_cyclotomic()
                    sq = (q * q).as_fraction()
                    lo += sq
                    hi += sq
                else:
                    lo += db.lo * db.lo
                    hi += db.hi * db.hi
            return ("interval", (lo, hi))
        c = d.as_cyclotomic()
        total = total + c * c
    return ("exact", total.as_fraction())


def is_integral(ring: FusionRing) -> bool:
    return all(fp_dimension(ring, a).kind == "rational" for a in range(ring.rank))


def is_weakly_integral(ring: FusionRing) -> bool:
    return all(fp_dimension(ring, a).square_is_integer() for a in range(ring.rank))


# -- subrings -------------------------------------------------------------------


@dataclass(frozen=True)
class SubRing:
    ring: FusionRing
    parent_indices: tuple[int, ...]

    @property
    def rank(self):
        return self.ring.rank


def _closure(ring: FusionRing, seeds) -> tuple[int, ...]:
    members = {0}
    members.update(seeds)
    members.update(ring.dual[a] for a in list(members))
    frontier = True
    while frontier:
        frontier = False
        for a in list(members):
            for b in list(members):
                for c, _ in ring.product(a, b):
                    if c not in members:
                        members.add(c)
                        members.add(ring.dual[c])
                        frontier = True
    return tuple(sorted(members))


def subring_generated(ring: FusionRing, seeds) -> SubRing:
    """Smallest based subring containing the unit and the seed objects."""
    if not seeds:
        raise FusionDataError("need at least one seed object")
    members = _closure(ring, seeds)
    index = {p: i for i, p in enumerate(members)}
    labels = tuple(ring.labels[p] for p in members)
    dual = tuple(index[ring.dual[p]] for p in members)
    tensor = {}
    for a in members:
        for b in members:
            for c, m in ring.product(a, b):
                tensor[(index[a], index[b], index[c])] = m
    return SubRing(FusionRing(labels, dual, tensor), members)


def adjoint_subring(ring: FusionRing) -> SubRing:
    """Subring generated by all constituents of a (x) a* over all simples."""
    seeds = set()
    for a in range(ring.rank):
        for c, _ in ring.product(a, ring.dual[a]):
            seeds.add(c)
    return subring_generated(ring, seeds)


def is_invertible(ring: FusionRing, a: int) -> bool:
    return ring.product(a, ring.dual[a]) == ((0, 1),)


def pointed_part(ring: FusionRing):
    """Subring on the invertible objects; also reports whether the ring is pointed."""
    invs = [a for a in range(ring.rank) if is_invertible(ring, a)]
    sub = subring_generated(ring, invs)
    assert set(sub.parent_indices) == set(invs), "invertibles are closed under fusion"
    return sub, len(invs) == ring.rank


def invertible_group(ring: FusionRing):
    """The group of invertible objects: (elements, product table)."""
    invs = tuple(a for a in range(ring.rank) if is_invertible(ring, a))
    table = {}
    for a in invs:
        for b in invs:
            prod = ring.product(a, b)
            if len(prod) != 1 or prod[0][1] != 1 or prod[0][0] not in invs:
                raise FusionDataError("invertibles do not close into a group")
            table[(a, b)] = prod[0][0]
    return invs, table


# -- universal grading -----------------------------------------------------------


class GradingError(FusionDataError):
    pass


@dataclass(frozen=True)
class Grading:
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    table: dict
    identity: int

    @property
    def order(self):
        return len(self.components)


def universal_grading(ring: FusionRing) -> Grading:
    """Partition by the adjoint subring, with the induced group law on components.

    Objects a, b share a component iff some constituent of a (x) b* lies in
    the adjoint subring.  The component product must be single-valued and the
    squared FP-dimension totals of the components must agree; violations mean
    the input is not a valid fusion ring and raise GradingError.
    """
    ad = set(adjoint_subring(ring).parent_indices)
    n = ring.rank
    comp = [-1] * n
    comps = []
    for a in range(n):
        if comp[a] != -1:
            continue
        cur = [b for b in range(n) if any(c in ad for c, _ in ring.product(a, ring.dual[b]))]
        idx = len(comps)
        for b in cur:
            if comp[b] != -1:
                raise GradingError(f"object {b} falls in two components")
            comp[b] = idx
        comps.append(tuple(sorted(cur)))
    table = {}
    for i, members_i in enumerate(comps):
        for j, members_j in enumerate(comps):
            targets = set()
            for a in members_i:
                for b in members_j:
                    targets.update(comp[c] for c, _ in ring.product(a, b))
            if len(targets) != 1:
                raise GradingError(f"component product ({i},{j}) is not single-valued")
            table[(i, j)] = targets.pop()
    identity = comp[0]
    if set(comps[identity]) != ad:
        raise GradingError("adjoint subring differs from the identity component")
    sizes = set()
    for members in comps:
        total = Cyc.rational(0)
        exact = True
        for a in members:
            d = fp_dimension(ring, a)
            if not d.is_exact():
                exact = False
                break
            c = d.as_cyclotomic()
            total = total + c * c
        if exact:
            sizes.add(total.as_fraction())
    if len(sizes) > 1:
        raise GradingError(f"components have unequal total FPdim^2: {sorted(sizes)}")
    return Grading(tuple(comps), tuple(comp), table, identity)


# -- Grothendieck equivalence -----------------------------------------------------


MAX_EQUIV_RANK = 24


def grothendieck_equivalent(r1: FusionRing, r2: FusionRing):
    """A unit- and duality-preserving basis bijection matching the tensors, or None.

    Backtracking search pruned by fusion-matrix characteristic polynomials
    (a relabeling invariant) and self-duality flags.
    """
    if r1.rank > MAX_EQUIV_RANK or r2.rank > MAX_EQUIV_RANK:
        raise FusionDataError(f"equivalence search capped at rank {MAX_EQUIV_RANK}")
    if r1.rank != r2.rank:
        return None
    n = r1.rank

    def signature(ring, a):
        mat = [list(map(int, row)) for row in ring.fusion_matrices()[a]]
        return (charpoly_int(mat), ring.dual[a] == a, ring.N(a, a, a), ring.N(a, a, 0))

    sig1 = [signature(r1, a) for a in range(n)]
    sig2 = [signature(r2, a) for a in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[b for b in range(n) if sig2[b] == sig1[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: (len(candidates[a]), a))
    mapping = [-1] * n
    used = [False] * n

    def compatible(a, b):
        da = mapping[r1.dual[a]]
        if da != -1 and da != r2.dual[b]:
            return False
        for x in range(n):
            mx = mapping[x]
            if mx == -1:
                continue
            for y in range(n):
                my = mapping[y]
                if my == -1:
                    continue
                if r1.N(a, x, y) != r2.N(b, mx, my):
                    return False
                if r1.N(x, a, y) != r2.N(mx, b, my):
                    return False
                if r1.N(x, y, a) != r2.N(mx, my, b):
                    return False
        return True

    if 0 not in candidates[0]:
        return None
    mapping[0] = 0
    used[0] = True
    order = [0] + [a for a in order if a != 0]

    def search(k):
        if k == n:
            return True
        a = order[k]
        for b in candidates[a]:
            if used[b]:
                continue
            if compatible(a, b):
                mapping[a] = b
                used[b] = True
                if search(k + 1):
                    return True
                mapping[a] = -1
                used[b] = False
        return False

    if search(1):
        return tuple(mapping)
    return None
