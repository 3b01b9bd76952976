"""Constructors for every concrete family handled by the package.

Quantum-group orthogonal series (full or partial modular data), dihedral and
semidirect-product character rings, the rank-10 counterexample with partially
known S-matrix, truncated sl2 rings, Tambara-Yamagami rings, Drinfeld-center
object lists and the trivially-graded center component, and pointed modular
data from a quadratic form.  Dimensions and twists of the quantum-group
families come from the weight formulas and are cross-checked against the
closed forms at construction time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyc, canonical_sqrt_of_unit, sqrt_integer_as_cyclotomic, zeta
from .fusionring import FusionRing, ring_from_products, subring_generated
from .groups import (
    AbelianGroup,
    BilinearForm,
    QuadraticForm,
    chi_characters,
    parse_group,
    standard_form,
    standard_quadratic_form,
)
from .modular import PartialModularData, modular_from_ring
from .weights import quantum_integer, twist_from_weight, weight_data


def _qdim_cancelled(w, lam, q):
    """Dimension formula with equal quantum integers cancelled before multiplying."""
    lam = tuple(Fraction(x) for x in lam)
    shifted = tuple(a + b for a, b in zip(lam, w.rho))
    top = Counter()
    bot = Counter()
    for alpha in w.positive_roots:
        top[int(w.ip(shifted, alpha))] += 1
        bot[int(w.ip(w.rho, alpha))] += 1
    common = top & bot
    top -= common
    bot -= common
    num = Cyc.rational(1)
    den = Cyc.rational(1)
    for n, k in top.items():
        num = num * quantum_integer(n, q) ** k
    for n, k in bot.items():
        den = den * quantum_integer(n, q) ** k
    return num / den


# -- type B orthogonal series ---------------------------------------------------


def build_B(r: int, sign: int = 1, complete: bool = False) -> PartialModularData:
    """Level-2 odd orthogonal datum of rank r+4 and global dimension 4(2r+1).

    Basis order: unit, the order-two invertible v, the two-dimensional objects
    g1..gr, then the two spin objects e, e'.  The sign argument fixes the
    undetermined S entry s(e,e) = sign * sqrt(2r+1); with the principal choice
    q = e^{i pi / (4r+2)} the balancing identity holds for sign = +1.
    """
    if r < 2:
        raise ValueError("rank must be at least 2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n_obj = r + 4
    N = 2 * r + 1
    labels = ["1", "v"] + [f"g{i}" for i in range(1, r + 1)] + ["e", "e'"]
    V, E, EP = 1, r + 2, r + 3

    def g(i):
        return 1 + i  # index of g_i

    def fold(m):
        m %= N
        m = min(m, N - m)
        if m == 0:
            return [(0, 1), (V, 1)]
        return [(g(m), 1)]

    products = {}
    products[(V, V)] = [(0, 1)]
    products[(V, E)] = products[(E, V)] = [(EP, 1)]
    products[(V, EP)] = products[(EP, V)] = [(E, 1)]
    for i in range(1, r + 1):
        products[(V, g(i))] = products[(g(i), V)] = [(g(i), 1)]
        products[(g(i), E)] = products[(E, g(i))] = [(E, 1), (EP, 1)]
        products[(g(i), EP)] = products[(EP, g(i))] = [(E, 1), (EP, 1)]
        for j in range(1, r + 1):
            decomp = Counter()
            for c, m in fold(i + j) + fold(i - j):
                decomp[c] += m
            products[(g(i), g(j))] = sorted(decomp.items())
    full_g = [(g(i), 1) for i in range(1, r + 1)]
    products[(E, E)] = [(0, 1)] + full_g
    products[(EP, EP)] = [(0, 1)] + full_g
    products[(E, EP)] = products[(EP, E)] = [(V, 1)] + full_g
    for b in range(n_obj):
        products[(0, b)] = [(b, 1)]
        products.setdefault((b, 0), [(b, 1)])
    ring = ring_from_products(labels, tuple(range(n_obj)), products)

    ell = 4 * r + 2
    q = zeta(2 * ell)
    w = weight_data("B", r)
    weights = [(0,) * r, (2,) + (0,) * (r - 1)]
    for i in range(1, r):
        weights.append(tuple(1 if k < i else 0 for k in range(r)))
    weights.append((1,) * r)
    weights.append((Fraction(1, 2),) * r)
    weights.append((Fraction(3, 2),) + (Fraction(1, 2),) * (r - 1))

    sqrtN = sqrt_integer_as_cyclotomic(N)
    dims = [_qdim_cancelled(w, lam, q) for lam in weights]
    expected = [Cyc.rational(1), Cyc.rational(1)] + [Cyc.rational(2)] * r + [sqrtN, sqrtN]
    assert all(d == e for d, e in zip(dims, expected)), "weight-formula dims mismatch"
    twists = [twist_from_weight(w, lam, q) for lam in weights]

    s = {}
    s[(V, V)] = Cyc.rational(1)
    for i in range(1, r + 1):
        s[(V, g(i))] = Cyc.rational(2)
        s[(g(i), E)] = Cyc.rational(0)
        s[(g(i), EP)] = Cyc.rational(0)
        for j in range(i, r + 1):
            s[(g(i), g(j))] = 2 * (zeta(N, (i * j) % N) + zeta(N, (-i * j) % N))
    s[(V, E)] = -sqrtN
    s[(V, EP)] = -sqrtN
    s[(E, E)] = sign * sqrtN
    s[(E, EP)] = -sign * sqrtN
    md = modular_from_ring(ring, dims, twists, s)
    if complete:
        from .modular import complete_smatrix

        md = complete_smatrix(md)
    return md


def even_part_B(r: int) -> FusionRing:
    """The dimension-{1,2} subring of the type B datum, as a standalone ring."""
    md = build_B(r)
    sub = subring_generated(md.ring, list(range(1, r + 2)))
    assert sub.parent_indices == tuple(range(r + 2))
    return sub.ring


# -- type D orthogonal series ----------------------------------------------------


def even_part_D(r: int) -> FusionRing:
    """Dimension-{1,2} part of the type D datum: four invertibles and r-1 twos.

    Folding happens mod 2r; index 0 splits into unit + v and index r into
    u + u'.  For even r the invertibles form Z2 x Z2 and everything is
    self-dual; for odd r they form Z4 with u* = u'.
    """
    if r < 4:
        raise ValueError("rank must be at least 4")
    labels = ["1", "v", "u", "u'"] + [f"g{j}" for j in range(1, r)]
    U, UP = 2, 3

    def g(j):
        return 3 + j

    def fold(m):
        m %= 2 * r
        m = min(m, 2 * r - m)
        if m == 0:
            return [(0, 1), (1, 1)]
        if m == r:
            return [(U, 1), (UP, 1)]
        return [(g(m), 1)]

    products = {}
    pointed = {  # multiplication of the invertible labels 1, v, u, u'
        (1, 1): 0,
        (1, U): UP,
        (1, UP): U,
        (U, UP): 0 if r % 2 else 1,
        (U, U): 1 if r % 2 else 0,
        (UP, UP): 1 if r % 2 else 0,
    }
    for (a, b), c in list(pointed.items()):
        products[(a, b)] = [(c, 1)]
        products[(b, a)] = [(c, 1)]
    for j in range(1, r):
        products[(1, g(j))] = products[(g(j), 1)] = [(g(j), 1)]
        products[(U, g(j))] = products[(g(j), U)] = [(g(r - j), 1)]
        products[(UP, g(j))] = products[(g(j), UP)] = [(g(r - j), 1)]
        for i in range(1, r):
            decomp = Counter()
            for c, m in fold(i + j) + fold(abs(i - j)):
                decomp[c] += m
            products[(g(i), g(j))] = sorted(decomp.items())
    n_obj = r + 3
    for b in range(n_obj):
        products[(0, b)] = [(b, 1)]
        products.setdefault((b, 0), [(b, 1)])
    dual = list(range(n_obj))
    if r % 2 == 1:
        dual[U], dual[UP] = UP, U
    return ring_from_products(labels, tuple(dual), products)


def build_D(r: int) -> PartialModularData:
    """Level-2 even orthogonal datum: rank r+7, dimension 8r, partial data.

    The fusion table is known on the dimension-{1,2} part only, and the
    S-matrix carries the classically tabulated entries; everything touching
    the four spin objects beyond their dimensions, twists and the recorded
    rows stays unknown.  For odd r the duals of the spin objects are left as
    an unresolved pairing.
    """
    if r < 4:
        raise ValueError("rank must be at least 4")
    even = even_part_D(r)
    n_even = r + 3
    labels = list(even.labels) + ["e1", "e2", "e3", "e4"]
    n_obj = r + 7
    V, U, UP = 1, 2, 3

    def g(j):
        return 3 + j

    spins = [n_even + t for t in range(4)]
    dual = [even.dual[a] for a in range(n_even)]
    if r % 2 == 0:
        dual += spins
    else:
        dual += [None] * 4

    fusion = {}
    for a in range(n_even):
        for b in range(n_even):
            fusion[(a, b)] = even.product(a, b)

    ell = 2 * r
    q = zeta(2 * ell)
    w = weight_data("D", r)
    half = Fraction(1, 2)
    weights = [
        (0,) * r,
        (2,) + (0,) * (r - 1),
        (1,) * (r - 1) + (-1,),
        (1,) * r,
    ]
    for j in range(1, r - 1):
        weights.append(tuple(1 if k < j else 0 for k in range(r)))
    weights.append((1,) * (r - 1) + (0,))
    weights.append((half,) * (r - 1) + (-half,))
    weights.append((half,) * r)
    weights.append((Fraction(3, 2),) + (half,) * (r - 2) + (-half,))
    weights.append((Fraction(3, 2),) + (half,) * (r - 1))

    sqrtr = sqrt_integer_as_cyclotomic(r)
    dims = [_qdim_cancelled(w, lam, q) for lam in weights]
    expected = [Cyc.rational(1)] * 4 + [Cyc.rational(2)] * (r - 1) + [sqrtr] * 4
    assert all(d == e for d, e in zip(dims, expected)), "weight-formula dims mismatch"
    twists = [twist_from_weight(w, lam, q) for lam in weights]

    one = Cyc.rational(1)
    sgn_r = one if r % 2 == 0 else -one
    s = {}
    s[(V, V)] = one
    s[(V, U)] = one
    s[(V, UP)] = one
    s[(U, U)] = sgn_r
    s[(U, UP)] = sgn_r
    s[(UP, UP)] = sgn_r
    for j in range(1, r):
        s[(V, g(j))] = Cyc.rational(2)
        s[(U, g(j))] = Cyc.rational(2 if j % 2 == 0 else -2)
        s[(UP, g(j))] = Cyc.rational(2 if j % 2 == 0 else -2)
        for i in range(1, j + 1):
            s[(g(i), g(j))] = 2 * (zeta(2 * r, (i * j) % (2 * r)) + zeta(2 * r, (-i * j) % (2 * r)))
        for e in spins:
            s[(g(j), e)] = Cyc.rational(0)
    for e in spins:
        s[(V, e)] = -sqrtr
    return PartialModularData(labels, dual, dims, twists, s, fusion=fusion)


def build_even_part(family: str, r: int) -> FusionRing:
    if family == "B":
        return even_part_B(r)
    if family == "D":
        return even_part_D(r)
    raise ValueError(f"unknown family {family!r}")


# -- truncated sl2 ----------------------------------------------------------------


def build_sl2(ell: int) -> FusionRing:
    """Truncated Clebsch-Gordan ring on ell-1 objects X_0..X_{ell-2}."""
    if ell < 2:
        raise ValueError("need ell >= 2")
    n = ell - 1
    labels = [f"X{a}" for a in range(n)]
    products = {}
    for a in range(n):
        for b in range(n):
            top = min(a + b, 2 * (ell - 2) - a - b)
            products[(a, b)] = [(c, 1) for c in range(abs(a - b), top + 1, 2)]
    return ring_from_products(labels, tuple(range(n)), products)


# -- the rank-10 integral counterexample ------------------------------------------


def build_su3_example() -> PartialModularData:
    """Rank-10 integral modular datum of global dimension 36, partially known.

    Basis order: 1, x3, x3*, y, x1, x1*, x2, x2*, z, z*.  The upper-left and
    off-diagonal S blocks are entered exactly; the lower-right block is kept
    unknown with modulus 2 recorded per entry.  Known fusion: the pointed
    group generated by x3, and y (x) y = 1 + x3 + x3* + 2y.
    """
    labels = ["1", "x3", "x3*", "y", "x1", "x1*", "x2", "x2*", "z", "z*"]
    dual = (0, 2, 1, 3, 5, 4, 7, 6, 9, 8)
    two = Cyc.rational(2)
    dims = [Cyc.rational(1)] * 3 + [Cyc.rational(3)] + [two] * 6
    zz = zeta(18)
    twists = [
        Cyc.rational(1),
        Cyc.rational(1),
        Cyc.rational(1),
        Cyc.rational(-1),
        zz**4,
        zz**4,
        zz**10,
        zz**10,
        zz**16,
        zz**16,
    ]
    w = zeta(3)
    winv = zeta(3, 2)
    s = {}
    a_block = [
        [1, 1, 1, 3],
        [1, 1, 1, 3],
        [1, 1, 1, 3],
        [3, 3, 3, -3],
    ]
    for i in range(4):
        for j in range(i, 4):
            s[(i, j)] = Cyc.rational(a_block[i][j])
    b_rows = {
        0: [Cyc.rational(1)] * 6,
        1: [w, winv, winv, w, w, winv],
        2: [winv, w, w, winv, winv, w],
        3: [Cyc.rational(0)] * 6,
    }
    for i, row in b_rows.items():
        for t, val in enumerate(row):
            s[(i, 4 + t)] = two * val
    s_norm_sq = {}
    for i in range(4, 10):
        for j in range(i, 10):
            s_norm_sq[(i, j)] = Fraction(4)  # entries are 2 * (root of unity)

    fusion = {}
    group = {(1, 1): 2, (1, 2): 0, (2, 1): 0, (2, 2): 1}
    for (a, b), c in group.items():
        fusion[(a, b)] = ((c, 1),)
    fusion[(3, 3)] = ((0, 1), (1, 1), (2, 1), (3, 2))
    return PartialModularData(labels, dual, dims, twists, s, fusion=fusion, s_norm_sq=s_norm_sq)


# -- dihedral and semidirect character rings ---------------------------------------


def _fusion_from_characters(labels, classes, chars, group_order):
    """Exact tensor decompositions from a character table.

    classes: list of (size, values-index); chars: list of value rows (Cyc),
    one per irreducible.  N_{i,j}^k = (1/|G|) sum |cl| chi_i chi_j conj(chi_k).
    """
    n = len(chars)
    products = {}
    for i in range(n):
        for j in range(i, n):
            decomp = []
            for k in range(n):
                acc = Cyc.rational(0)
                for t, (size, _) in enumerate(classes):
                    acc = acc + size * chars[i][t] * chars[j][t] * chars[k][t].conjugate()
                val = acc / group_order
                if not val.is_rational():
                    raise ArithmeticError("character inner product is not rational")
                qv = val.as_fraction()
                if qv.denominator != 1 or qv < 0:
                    raise ArithmeticError(f"bad multiplicity {qv} at {(i, j, k)}")
                if qv:
                    decomp.append((k, int(qv)))
            products[(i, j)] = decomp
            products[(j, i)] = decomp
    dual = []
    for i in range(n):
        conj_row = [v.conjugate() for v in chars[i]]
        dual.append(next(k for k in range(n) if all(a == b for a, b in zip(conj_row, chars[k]))))
    return ring_from_products(labels, tuple(dual), products)


def build_dihedral_rep(n: int) -> FusionRing:
    """Character ring of the dihedral group of order 2n, from its character table."""
    if n < 3:
        raise ValueError("need n >= 3")
    one = Cyc.rational(1)
    minus = Cyc.rational(-1)
    two = Cyc.rational(2)
    zero = Cyc.rational(0)
    if n % 2 == 1:
        classes = [(1, "e")] + [(2, f"r{j}") for j in range(1, (n - 1) // 2 + 1)] + [(n, "s")]
        labels = ["1", "s"] + [f"c{k}" for k in range(1, (n - 1) // 2 + 1)]
        chars = [
            [one] * len(classes),
            [one] * (len(classes) - 1) + [minus],
        ]
        for k in range(1, (n - 1) // 2 + 1):
            row = [two]
            for j in range(1, (n - 1) // 2 + 1):
                row.append(zeta(n, (k * j) % n) + zeta(n, (-k * j) % n))
            row.append(zero)
            chars.append(row)
    else:
        half = n // 2
        classes = (
            [(1, "e")]
            + [(2, f"r{j}") for j in range(1, half)]
            + [(1, f"r{half}"), (half, "s_even"), (half, "s_odd")]
        )
        labels = ["1", "s", "u", "u'"] + [f"c{k}" for k in range(1, half)]
        ncl = len(classes)
        triv = [one] * ncl
        sgn = [one] * (ncl - 2) + [minus, minus]
        u = (
            [one]
            + [one if j % 2 == 0 else minus for j in range(1, half)]
            + [one if half % 2 == 0 else minus, one, minus]
        )
        uprime = [a * b for a, b in zip(sgn, u)]
        chars = [triv, sgn, u, uprime]
        for k in range(1, half):
            row = [two]
            for j in range(1, half):
                row.append(zeta(n, (k * j) % n) + zeta(n, (-k * j) % n))
            row.append(two if (k * half) % n == 0 else (two if k % 2 == 0 else -two))
            row.extend([zero, zero])
            chars.append(row)
    return _fusion_from_characters(labels, classes, chars, 2 * n)


def build_semidirect_rep(k: int) -> FusionRing:
    """Character ring of Z_k x| Z_4 with the generator of Z_4 inverting Z_k.

    Needs odd k; the four linear characters form Z_4 with the two faithful
    ones dual to each other, and there are k-1 self-dual two-dimensional
    irreducibles.  Built by brute force over the conjugacy classes.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError("need odd k >= 3")
    one = Cyc.rational(1)
    two = Cyc.rational(2)
    zero = Cyc.rational(0)
    i_unit = zeta(4)
    half = (k - 1) // 2
    # classes: e, b^2, {a^m, a^-m}, {a^m b^2, a^-m b^2}, b-coset, b^3-coset
    classes = (
        [(1, "e"), (1, "b2")]
        + [(2, f"a{m}") for m in range(1, half + 1)]
        + [(2, f"a{m}b2") for m in range(1, half + 1)]
        + [(k, "b"), (k, "b3")]
    )
    labels = ["1", "u", "u2", "u3"] + [f"c{j}{sgn}" for j in range(1, half + 1) for sgn in "+-"]
    chars = []
    for t in range(4):
        it = i_unit**t
        row = [one, it * it]
        row += [one] * half
        row += [it * it] * half
        row += [it, it.conjugate()]
        chars.append(row)
    for j in range(1, half + 1):
        for sgn in (1, -1):
            sv = Cyc.rational(sgn)
            row = [two, two * sv]
            row += [zeta(k, (j * m) % k) + zeta(k, (-j * m) % k) for m in range(1, half + 1)]
            row += [sv * (zeta(k, (j * m) % k) + zeta(k, (-j * m) % k)) for m in range(1, half + 1)]
            row += [zero, zero]
            chars.append(row)
    ring = _fusion_from_characters(labels, classes, chars, 4 * k)
    assert ring.dual[1] == 3 and ring.dual[2] == 2, "faithful linears must be dual to each other"
    return ring


# -- Tambara-Yamagami and its center -----------------------------------------------


def _element_labels(group: AbelianGroup):
    elems = sorted(group.elements())
    elems.remove(group.zero())
    elems = [group.zero()] + elems
    return elems, ["a" + ",".join(map(str, e)) for e in elems]


def build_TY(group: AbelianGroup) -> FusionRing:
    """Pointed part A plus one extra simple m with m (x) m = sum over A."""
    if group.order < 2:
        raise ValueError("need |A| >= 2")
    elems, labels = _element_labels(group)
    index = {e: i for i, e in enumerate(elems)}
    m = len(elems)
    labels = labels + ["m"]
    products = {}
    for x in elems:
        for y in elems:
            products[(index[x], index[y])] = [(index[group.add(x, y)], 1)]
        products[(index[x], m)] = [(m, 1)]
        products[(m, index[x])] = [(m, 1)]
    products[(m, m)] = [(i, 1) for i in range(len(elems))]
    dual = tuple(index[group.neg(e)] for e in elems) + (m,)
    return ring_from_products(labels, dual, products)


@dataclass(frozen=True)
class DTYObject:
    label: str
    kind: str  # 'invertible' | 'twodim' | 'spin'
    dim: Cyc
    grade: int  # +1 for the trivial component, -1 for the spin component
    dual_label: str | None


def _x_labels(group: AbelianGroup, form: BilinearForm):
    """Canonical square-root labels for the invertible center objects."""
    elems, _ = _element_labels(group)
    out = {}
    for a in elems:
        target = form.chi(a, a).inverse()
        delta_plus = canonical_sqrt_of_unit(target)
        out[a] = (delta_plus, -delta_plus)
    return elems, out


def build_DTY_plus(group: AbelianGroup, form: BilinearForm) -> FusionRing:
    """Trivial component of the center of a Tambara-Yamagami category.

    Objects X[a;+-] (invertible) and Y[a|b] (dimension two, unordered pairs
    of distinct group elements); the fusion rules twist the group product by
    the pairing, with Y[a|a] standing for X[a;+] + X[a;-].
    """
    elems, deltas = _x_labels(group, form)
    x_index = {}
    labels = []
    for a in elems:
        for tag in "+-":
            x_index[(a, tag)] = len(labels)
            labels.append(f"X[{','.join(map(str, a))};{tag}]")
    pairs = []
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            pairs.append(frozenset((a, b)))
    y_index = {}
    for p in pairs:
        y_index[p] = len(labels)
        a, b = sorted(p)
        labels.append(f"Y[{','.join(map(str, a))}|{','.join(map(str, b))}]")

    def x_of(a, delta):
        plus, minus = deltas[a]
        if delta == plus:
            return x_index[(a, "+")]
        assert delta == minus, "square-root label must match one of the two roots"
        return x_index[(a, "-")]

    def y_or_split(u, v):
        if u == v:
            return [(x_index[(u, "+")], 1), (x_index[(u, "-")], 1)]
        return [(y_index[frozenset((u, v))], 1)]

    products = {}
    for a in elems:
        for sa, da in zip("+-", deltas[a]):
            ia = x_index[(a, sa)]
            for b in elems:
                for sb, db in zip("+-", deltas[b]):
                    ib = x_index[(b, sb)]
                    target = da * db * form.chi(a, b).inverse()
                    products[(ia, ib)] = [(x_of(group.add(a, b), target), 1)]
            for p in pairs:
                u, v = sorted(p)
                iy = y_index[p]
                out = [(y_index[frozenset((group.add(a, u), group.add(a, v)))], 1)]
                products[(ia, iy)] = out
                products[(iy, ia)] = out
    for p in pairs:
        for q_ in pairs:
            a, b = sorted(p)
            c, d = sorted(q_)
            decomp = Counter()
            for u, v in ((group.add(a, c), group.add(b, d)), (group.add(a, d), group.add(b, c))):
                for idx, mult in y_or_split(u, v):
                    decomp[idx] += mult
            products[(y_index[p], y_index[q_])] = sorted(decomp.items())
    dual = []
    for a in elems:
        for tag in "+-":
            dual.append(x_index[(group.neg(a), tag)])
    for p in pairs:
        a, b = sorted(p)
        dual.append(y_index[frozenset((group.neg(a), group.neg(b)))])
    return ring_from_products(labels, tuple(dual), products)


def build_DTY_objects(group: AbelianGroup, form: BilinearForm, tau_sign: int = 1):
    """Simple-object list of the full center: invertibles, two-dims, spins.

    2|A| invertibles X[a;+-], |A|(|A|-1)/2 objects Y, and 2|A| spin objects
    Z[g;+-] of dimension sqrt|A| labelled by the quadratic refinements of the
    pairing, with the square-root tag for tau * sum_x rho(x).  Spins carry
    the nontrivial grade; their duals are not recorded.
    """
    if tau_sign not in (1, -1):
        raise ValueError("tau sign must be +1 or -1")
    elems, deltas = _x_labels(group, form)
    objs = []
    one = Cyc.rational(1)
    for a in elems:
        for tag in "+-":
            dual = f"X[{','.join(map(str, group.neg(a)))};{tag}]"
            objs.append(DTYObject(f"X[{','.join(map(str, a))};{tag}]", "invertible", one, 1, dual))
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            u, v = sorted((a, b))
            nu, nv = sorted((group.neg(a), group.neg(b)))
            objs.append(
                DTYObject(
                    f"Y[{','.join(map(str, u))}|{','.join(map(str, v))}]",
                    "twodim",
                    Cyc.rational(2),
                    1,
                    f"Y[{','.join(map(str, nu))}|{','.join(map(str, nv))}]",
                )
            )
    order = group.order
    sqrt_a = sqrt_integer_as_cyclotomic(order)
    tau = Cyc.rational(tau_sign) / sqrt_a
    refinements = chi_characters(form)
    assert len(refinements) == order
    for g, rho in zip(elems, refinements):
        total = Cyc.rational(0)
        for x in elems:
            total = total + rho[x]
        assert total * total.conjugate() == Cyc.rational(order), "Gauss sum modulus check"
        value = tau * total
        delta = canonical_sqrt_of_unit(value)
        assert delta * delta == value
        for tag in "+-":
            objs.append(
                DTYObject(f"Z[{','.join(map(str, g))};{tag}]", "spin", sqrt_a, -1, None)
            )
    expected_rank = order * (order + 7) // 2
    assert len(objs) == expected_rank
    return objs


# -- pointed modular data -----------------------------------------------------------


def build_pointed_modular(group: AbelianGroup, qform: QuadraticForm) -> PartialModularData:
    """Pointed modular datum from a nondegenerate quadratic form.

    Twists are theta_a = q(a) and S entries s(a,b) = q(a)q(b)/q(a+b), the
    inverse of the associated bilinear pairing; with these conventions the
    balancing identity holds identically.
    """
    if qform.group != group:
        raise ValueError("form defined on a different group")
    elems, labels = _element_labels(group)
    index = {e: i for i, e in enumerate(elems)}
    products = {}
    for x in elems:
        for y in elems:
            products[(index[x], index[y])] = [(index[group.add(x, y)], 1)]
    dual = tuple(index[group.neg(e)] for e in elems)
    ring = ring_from_products(labels, dual, products)
    dims = [Cyc.rational(1)] * len(elems)
    twists = [qform.q(e) for e in elems]
    s = {}
    for i, x in enumerate(elems):
        for j in range(i, len(elems)):
            y = elems[j]
            s[(i, j)] = qform.q(x) * qform.q(y) / qform.q(group.add(x, y))
    return modular_from_ring(ring, dims, twists, s)


# -- family grammar -----------------------------------------------------------------


def parse_family(spec: str):
    """Build a family datum from its textual name.

    Returns ('modular', PartialModularData) or ('ring', FusionRing).  Grammar:
    B:r, D:r, TY:A, DTYPLUS:A, SL2:l, SU3, DIH:n, SEMI:k, POINTED:A with A a
    comma-separated list of cyclic orders, plus BEVEN:r / DEVEN:r for the
    dimension-{1,2} parts.
    """
    spec = spec.strip()
    head, _, arg = spec.partition(":")
    head = head.upper()
    try:
        if head == "B":
            return "modular", build_B(int(arg))
        if head == "D":
            return "modular", build_D(int(arg))
        if head == "SU3":
            return "modular", build_su3_example()
        if head == "POINTED":
            group = parse_group(arg)
            return "modular", build_pointed_modular(group, standard_quadratic_form(group))
        if head == "TY":
            return "ring", build_TY(parse_group(arg))
        if head == "DTYPLUS":
            group = parse_group(arg)
            return "ring", build_DTY_plus(group, standard_form(group))
        if head == "SL2":
            return "ring", build_sl2(int(arg))
        if head == "DIH":
            return "ring", build_dihedral_rep(int(arg))
        if head == "SEMI":
            return "ring", build_semidirect_rep(int(arg))
        if head == "BEVEN":
            return "ring", even_part_B(int(arg))
        if head == "DEVEN":
            return "ring", even_part_D(int(arg))
    except ValueError as exc:
        raise FamilySpecError(f"bad family spec {spec!r}: {exc}") from exc
    raise FamilySpecError(f"unknown family {spec!r}")


class FamilySpecError(ValueError):
    pass
