"""Modular and partially-known modular data.

A PartialModularData carries exact dimensions and twists for every simple
object, an S-matrix whose entries may individually be unknown (optionally
with a known modulus), and a fusion table that may itself be partial.  Every
operation declares exactly which entries it reads; when a needed entry is
missing it fails naming the pair instead of guessing, and batch checks report
such pairs as undecided rather than failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import Cyc
from .fusionring import (
    CheckItem,
    FusionRing,
    MissingDataError,
    ValidationReport,
)

UNIT = 0


def _key(i, j):
    return (i, j) if i <= j else (j, i)


class PartialModularData:
    """Dims, twists and a (possibly partial) S-matrix over a partial fusion table."""

    __slots__ = ("labels", "dual", "dims", "twists", "s", "s_norm_sq", "fusion", "ring", "conductor")

    def __init__(self, labels, dual, dims, twists, s, fusion=None, ring=None, s_norm_sq=None):
        self.labels = tuple(labels)
        n = len(self.labels)
        self.dual = tuple(dual)
        self.dims = tuple(dims)
        self.twists = tuple(twists)
        self.s = {}
        for (i, j), v in s.items():
            k = _key(i, j)
            if k in self.s and not (self.s[k] == v):
                raise ValueError(f"conflicting S entries at {k}")
            self.s[k] = v
        self.s_norm_sq = dict(s_norm_sq or {})
        self.ring = ring
        if ring is not None:
            fusion = {(a, b): ring.product(a, b) for a in range(n) for b in range(n)}
        self.fusion = {k: tuple(v) for k, v in (fusion or {}).items()}
        for b in range(n):  # unit products are always forced
            self.fusion.setdefault((UNIT, b), ((b, 1),))
            self.fusion.setdefault((b, UNIT), ((b, 1),))

        # normalization invariants
        if not (self.dims[UNIT] == Cyc.rational(1)):
            raise ValueError("dims[0] must be 1")
        if not (self.twists[UNIT] == Cyc.rational(1)):
            raise ValueError("twists[0] must be 1")
        for j in range(n):
            k = _key(UNIT, j)
            if k in self.s:
                if not (self.s[k] == self.dims[j]):
                    raise ValueError(f"S row 0 disagrees with dims at {j}")
            else:
                self.s[k] = self.dims[j]
        cond = 1
        for v in list(self.dims) + list(self.twists) + list(self.s.values()):
            cond = cond * v.n // _gcd(cond, v.n)
        for t in self.twists:
            o = _root_order(t)
            if o is None:
                raise ValueError("twists must be roots of unity")
            cond = cond * o // _gcd(cond, o)
        self.conductor = cond
        for t in self.twists:
            assert t ** self.conductor == Cyc.rational(1)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def s_entry(self, i, j):
        return self.s.get(_key(i, j))

    def s_entry_required(self, i, j) -> Cyc:
        v = self.s.get(_key(i, j))
        if v is None:
            raise MissingDataError(f"S entry ({self.labels[i]}, {self.labels[j]}) unknown", _key(i, j))
        return v

    def s_known(self, i, j) -> bool:
        return _key(i, j) in self.s

    def product(self, a, b):
        """Known fusion decomposition of a (x) b, or None."""
        return self.fusion.get((a, b))

    def global_dim(self) -> Cyc:
        total = Cyc.rational(0)
        for d in self.dims:
            total = total + d * d
        return total

    def is_integral(self) -> bool:
        return all(d.is_integer() for d in self.dims)

    def __repr__(self):
        known = len(self.s)
        return f"PartialModularData(rank={self.rank}, known_s={known}/{self.rank*(self.rank+1)//2})"


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def _root_order(t: Cyc):
    from .cyclotomic import root_of_unity_exponent

    dk = root_of_unity_exponent(t)
    return None if dk is None else dk[0]


def modular_from_ring(ring: FusionRing, dims, twists, s, s_norm_sq=None) -> PartialModularData:
    return PartialModularData(ring.labels, ring.dual, dims, twists, s, ring=ring, s_norm_sq=s_norm_sq)


@dataclass(frozen=True)
class SubObjectSet:
    """A duality-closed set of simple objects containing the unit."""

    members: frozenset

    @staticmethod
    def of(md: PartialModularData, members, require_closed: bool = True) -> "SubObjectSet":
        members = frozenset(members) | {UNIT}
        for a in members:
            d = md.dual[a]
            if d is not None and d not in members:
                raise ValueError(f"set not closed under duality at {md.labels[a]}")
        if require_closed:
            # closed under fusion whenever the products among members are all known
            for a in members:
                for b in members:
                    prod = md.product(a, b)
                    if prod is not None:
                        for c, _ in prod:
                            if c not in members:
                                raise ValueError(
                                    f"set not closed under fusion: {md.labels[a]} x {md.labels[b]} "
                                    f"contains {md.labels[c]}"
                                )
        return SubObjectSet(members)


def _as_subset(md: PartialModularData, sub) -> SubObjectSet:
    if isinstance(sub, SubObjectSet):
        return sub
    return SubObjectSet.of(md, sub, require_closed=False)


# -- Verlinde fusion -------------------------------------------------------------


def verlinde_fusion(md: PartialModularData) -> FusionRing:
    """Fusion tensor from a complete S-matrix by the Verlinde formula.

    N_{a,b}^c = (1/D) sum_x s(a,x) s(b,x) conj(s(c,x)) / s(0,x) with
    D the global dimension.  Raises when entries are missing, when a
    dimension vanishes, or when an output fails to be a nonnegative integer.
    """
    n = md.rank
    for i in range(n):
        for j in range(i, n):
            if not md.s_known(i, j):
                raise MissingDataError(f"S entry {(i, j)} unknown", (i, j))
    for j, d in enumerate(md.dims):
        if d.is_zero():
            raise ValueError(f"dimension of object {j} is zero")
    D = md.global_dim()
    if D.is_zero():
        raise ValueError("global dimension is zero")
    invD = D.inverse()
    rows = [[md.s_entry(a, x) for x in range(n)] for a in range(n)]
    conj_rows = [[v.conjugate() for v in row] for row in rows]
    inv0 = [md.dims[x].inverse() for x in range(n)]
    tensor = {}
    for a in range(n):
        for b in range(a, n):
            u = [rows[a][x] * rows[b][x] * inv0[x] for x in range(n)]
            for c in range(n):
                val = Cyc.rational(0)
                for x in range(n):
                    val = val + u[x] * conj_rows[c][x]
                val = val * invD
                if not val.is_rational():
                    raise ValueError(f"Verlinde output not rational at {(a, b, c)}")
                q = val.as_fraction()
                if q.denominator != 1 or q < 0:
                    raise ValueError(f"Verlinde output {q} not a nonnegative integer at {(a, b, c)}")
                m = int(q)
                if m:
                    tensor[(a, b, c)] = m
                    if a != b:
                        tensor[(b, a, c)] = m
    return FusionRing(md.labels, md.dual, tensor)


def complete_smatrix(md: PartialModularData) -> PartialModularData:
    """Solve unknown S entries through row orthogonality and symmetry.

    Repeatedly, for a row with a single unknown entry, pair it against a fully
    known row c and solve sum_x s(a,x) conj(s(c,x)) = delta_{a,c} D.  Returns
    a new datum; entries that stay undetermined stay unknown.
    """
    n = md.rank
    s = dict(md.s)

    def known(i, j):
        return _key(i, j) in s

    D = md.global_dim()
    progress = True
    while progress:
        progress = False
        full_rows = [c for c in range(n) if all(known(c, x) for x in range(n))]
        for a in range(n):
            unknowns = [x for x in range(n) if not known(a, x)]
            if len(unknowns) != 1:
                continue
            b = unknowns[0]
            for c in full_rows:
                coeff = s[_key(c, b)].conjugate()
                if coeff.is_zero():
                    continue
                acc = Cyc.rational(0)
                for x in range(n):
                    if x != b:
                        acc = acc + s[_key(a, x)] * s[_key(c, x)].conjugate()
                target = D if a == c else Cyc.rational(0)
                s[_key(a, b)] = (target - acc) / coeff
                progress = True
                break
    return PartialModularData(
        md.labels,
        md.dual,
        md.dims,
        md.twists,
        s,
        fusion=md.fusion,
        ring=md.ring,
        s_norm_sq=md.s_norm_sq,
    )


# -- balancing -------------------------------------------------------------------


@dataclass
class BalancingReport:
    checked: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    undecided: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations


def check_balancing(md: PartialModularData) -> BalancingReport:
    """Verify theta_a theta_b s(a,b) = sum_c N_{a*,b}^c theta_c dim(c) on known entries."""
    rep = BalancingReport()
    n = md.rank
    for a in range(n):
        for b in range(a, n):
            if not md.s_known(a, b):
                continue
            astar = md.dual[a]
            if astar is None:
                rep.undecided.append(((a, b), "dual of first object unresolved"))
                continue
            prod = md.product(astar, b)
            if prod is None:
                rep.undecided.append(((a, b), f"fusion {md.labels[astar]} x {md.labels[b]} unknown"))
                continue
            lhs = md.twists[a] * md.twists[b] * md.s_entry(a, b)
            rhs = Cyc.rational(0)
            for c, m in prod:
                rhs = rhs + m * md.twists[c] * md.dims[c]
            if lhs == rhs:
                rep.checked.append((a, b))
            else:
                rep.violations.append(((a, b), f"lhs {lhs!r} != rhs {rhs!r}"))
    return rep


# -- centralizers and symmetric subcategories --------------------------------------


def centralizes(md: PartialModularData, x: int, y: int) -> bool:
    """s(x,y) = dim(x) dim(y), exactly; raises when the entry is unknown."""
    v = md.s_entry(x, y)
    if v is None:
        raise MissingDataError(
            f"S entry ({md.labels[x]}, {md.labels[y]}) needed but unknown", _key(x, y)
        )
    return v == md.dims[x] * md.dims[y]


def centralizer(md: PartialModularData, sub) -> SubObjectSet:
    """All simples centralizing every member of sub (Mueger's S-matrix criterion).

    sub may be any duality-closed collection of indices; it need not be
    fusion-closed.
    """
    sub = _as_subset(md, sub)
    out = []
    for y in range(md.rank):
        if all(centralizes(md, x, y) for x in sub.members):
            out.append(y)
    return SubObjectSet(frozenset(out))


def is_symmetric_subcategory(md: PartialModularData, sub) -> bool:
    sub = _as_subset(md, sub)
    return all(centralizes(md, x, y) for x in sub.members for y in sub.members if x <= y)


def enumerate_symmetric_subcategories(md: PartialModularData):
    """All decidably-symmetric fusion-closed subsets, plus the undecidable seeds.

    Objects whose diagonal entry (or its known modulus) differs from dim^2 are
    discarded immediately; subsets whose closure or pairwise entries fall
    outside the known data are returned in the second list instead of being
    guessed either way.
    """
    n = md.rank
    keep, unsure = [], []
    for x in range(n):
        v = md.s_entry(x, x)
        dsq = md.dims[x] * md.dims[x]
        if v is not None:
            if v == dsq:
                keep.append(x)
        else:
            mod = md.s_norm_sq.get(_key(x, x))
            if mod is not None:
                if Cyc.rational(mod) == dsq * dsq:
                    unsure.append(x)
            else:
                unsure.append(x)

    def close(seed):
        """Fusion-and-duality closure; (members, None) or (None, reason)."""
        members = set(seed) | {UNIT}
        for a in list(members):
            d = md.dual[a]
            if d is None:
                return None, f"dual of {md.labels[a]} unresolved"
            members.add(d)
        frontier = True
        while frontier:
            frontier = False
            for a in list(members):
                for b in list(members):
                    prod = md.product(a, b)
                    if prod is None:
                        return None, f"fusion {md.labels[a]} x {md.labels[b]} unknown"
                    for c, _ in prod:
                        if c not in members:
                            d = md.dual[c]
                            if d is None:
                                return None, f"dual of {md.labels[c]} unresolved"
                            members.update((c, d))
                            frontier = True
        return frozenset(members), None

    decided = set()
    undecidable = []
    base, why = close(set())
    if base is None:
        undecidable.append((frozenset({UNIT}), why))
        return [], undecidable
    agenda = [base]
    seen = {base}
    closed_sets = []
    while agenda:
        cur = agenda.pop()
        closed_sets.append(cur)
        for x in keep + unsure:
            if x in cur:
                continue
            grown, why = close(cur | {x})
            if grown is None:
                undecidable.append((cur | {x}, why))
                continue
            if grown not in seen:
                seen.add(grown)
                agenda.append(grown)

    for members in closed_sets:
        if any(x not in keep and x not in unsure for x in members if x != UNIT):
            continue  # contains an object that provably centralizes nothing
        status = "symmetric"
        for x in members:
            for y in members:
                if x > y:
                    continue
                v = md.s_entry(x, y)
                if v is None:
                    status = "undecidable"
                    break
                if not (v == md.dims[x] * md.dims[y]):
                    status = "not"
                    break
            if status != "symmetric":
                break
        if status == "symmetric":
            decided.add(members)
        elif status == "undecidable":
            undecidable.append((members, "pairwise S entry unknown"))
    decided_list = sorted(decided, key=lambda s: (len(s), sorted(s)))
    return [SubObjectSet(s) for s in decided_list], undecidable


# -- group-theoreticity -------------------------------------------------------------


@dataclass(frozen=True)
class GTDecision:
    status: str  # 'GT' | 'NOT_GT' | 'UNDECIDED'
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "GT"


def _adjoint_inside(md: PartialModularData, lprime: SubObjectSet, l: SubObjectSet):
    """Decide whether the adjoint of lprime sits inside l; three-valued.

    Returns 'yes', 'no', or 'unknown'.  The adjoint subring is generated by
    the constituents of x (x) x*; since l is fusion-closed, containing the
    generators is enough for containment of the closure.
    """
    unknown = False
    for x in lprime.members:
        xstar = md.dual[x]
        if xstar is None:
            unknown = True
            continue
        prod = md.product(x, xstar)
        if prod is None:
            unknown = True
            continue
        for c, _ in prod:
            if c not in l.members:
                return "no"
    return "unknown" if unknown else "yes"


def is_group_theoretical_modular(md: PartialModularData) -> GTDecision:
    """Decide group-theoreticity of a modular datum through symmetric subcategories.

    Group-theoretical modular categories are exactly the integral ones with a
    symmetric subcategory L whose centralizer has adjoint inside L.  A non-
    integral datum is immediately NOT_GT; otherwise the decided symmetric
    subcategories are searched for a witness, and missing data only ever
    produces UNDECIDED, never a guessed answer.
    """
    for j, d in enumerate(md.dims):
        if not d.is_integer():
            return GTDecision(
                "NOT_GT",
                reason=f"not integral: dim({md.labels[j]}) is not an integer",
            )
    decided, undecidable = enumerate_symmetric_subcategories(md)
    blocked = []
    for sub in decided:
        try:
            lprime = centralizer(md, sub)
        except MissingDataError as exc:
            blocked.append((sub, str(exc)))
            continue
        verdict = _adjoint_inside(md, lprime, sub)
        if verdict == "yes":
            witness = tuple(sorted(sub.members))
            return GTDecision("GT", witness=witness, reason="(L')_ad inside L")
        if verdict == "unknown":
            blocked.append((sub, "adjoint of centralizer not fully determined"))
    if blocked or undecidable:
        details = "; ".join(str(b) for b in (blocked + undecidable)[:3])
        return GTDecision("UNDECIDED", reason=f"insufficient data: {details}")
    return GTDecision(
        "NOT_GT",
        reason="no symmetric subcategory satisfies the centralizer-adjoint criterion "
        "(enumeration exhaustive)",
    )


def _factorization(n: int):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_group_theoretical_by_dimension(ring: FusionRing):
    """Sufficient dimension-count criterion: p^n, pq or pqr forces group-theoreticity.

    Returns GTDecision('GT') when it applies and None when the dimension shape
    gives no decision.  Precondition: the ring is integral.
    """
    from .fusionring import fp_dimension_category, is_integral

    if not is_integral(ring):
        raise ValueError("dimension criterion needs an integral ring")
    kind, value = fp_dimension_category(ring)
    assert kind == "exact"
    total = int(value)
    fact = _factorization(total)
    shape = sorted(fact.values(), reverse=True)
    if len(fact) == 1:
        return GTDecision("GT", reason=f"FPdim = {total} is a prime power")
    if len(fact) == 2 and shape == [1, 1]:
        return GTDecision("GT", reason=f"FPdim = {total} = pq")
    if len(fact) == 3 and shape == [1, 1, 1]:
        return GTDecision("GT", reason=f"FPdim = {total} = pqr")
    return None


# -- dimension identities -------------------------------------------------------------


def muger_dimension_identity(md: PartialModularData, sub) -> CheckItem:
    """dim(sub) * dim(centralizer(sub)) = dim(C), exactly."""
    sub = _as_subset(md, sub)
    lprime = centralizer(md, sub)

    def total(members):
        acc = Cyc.rational(0)
        for x in members:
            acc = acc + md.dims[x] * md.dims[x]
        return acc

    lhs = total(sub.members) * total(lprime.members)
    rhs = md.global_dim()
    ok = lhs == rhs
    return CheckItem(
        "muger-dimension-identity",
        ok,
        f"dim(sub)={total(sub.members)!r} dim(sub')={total(lprime.members)!r} dim(C)={rhs!r}",
    )


def verify_pq_propositions(md: PartialModularData, p: int, q: int, exponent: int) -> ValidationReport:
    """Pointedness forced for integral modular data of dimension p*q^2 or p*q^3.

    When the datum is pointed the report simply passes.  Otherwise it walks
    the dimension-count contradiction (possible simple dimensions, candidate
    pointed-part dimensions, grading component counts) and flags the datum as
    inconsistent with modularity.
    """
    if exponent not in (2, 3):
        raise ValueError("exponent must be 2 or 3")
    rep = ValidationReport()
    D = md.global_dim()
    expected = p * q**exponent
    if not (D == Cyc.rational(expected)):
        raise ValueError(f"dimension is {D!r}, not {expected}")
    if not md.is_integral():
        raise ValueError("datum must be integral")
    dims = [int(d.as_fraction()) for d in md.dims]
    pointed = all(d == 1 for d in dims)
    rep.add("pointed", pointed, f"simple dimensions {sorted(set(dims))}")
    if pointed:
        return rep
    ok_dims = set(dims) <= {1, q}
    rep.add(
        "possible-simple-dims",
        ok_dims,
        f"integral modular of dim p*q^{exponent} only allows simple dims 1 and q; saw {sorted(set(dims))}",
    )
    l = sum(1 for d in dims if d == 1)
    m = sum(1 for d in dims if d == q)
    rep.add(
        "dimension-count",
        l + m * q * q == expected,
        f"l + m q^2 = {l} + {m}*{q}^2 vs {expected}",
    )
    if exponent == 2:
        rep.add(
            "forced-pointed-part",
            l == q * q,
            f"dim(C_pt) = {l}; the count forces q^2 = {q * q}, then dim((C_pt)') = {p} "
            f"gives a pointed centralizer inside C_pt, so p | q^2: contradiction",
        )
    else:
        candidates = {q**3, p * q * q, q * q}
        rep.add(
            "pointed-part-candidates",
            l in candidates,
            f"dim(C_pt) = {l}, numerically possible values {sorted(candidates)}; each case "
            f"contradicts: q^3 forces p | q^3; p*q^2 leaves components of dim q with no room "
            f"for a q-dimensional object; q^2 forces at least q^3 invertibles",
        )
    rep.add(
        "verdict",
        False,
        "data inconsistent with an integral modular category of this dimension (must be pointed)",
    )
    return rep
