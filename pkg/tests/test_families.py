"""Tests for the family constructors: stated ranks, dims, twists, S entries."""

from fractions import Fraction

import pytest

from fusionrings.cyclotomic import Cyc, sqrt_integer_as_cyclotomic, zeta
from fusionrings.families import (
    FamilySpecError,
    build_B,
    build_D,
    build_DTY_objects,
    build_DTY_plus,
    build_TY,
    build_dihedral_rep,
    build_even_part,
    build_pointed_modular,
    build_semidirect_rep,
    build_sl2,
    build_su3_example,
    parse_family,
)
from fusionrings.fusionring import (
    fp_dimension,
    fp_dimension_category,
    invertible_group,
    is_integral,
    is_weakly_integral,
    universal_grading,
    validate,
)
from fusionrings.groups import AbelianGroup, standard_form, standard_quadratic_form
from fusionrings.modular import check_balancing
from fusionrings.weights import quantum_integer, weight_data, twist_from_weight


# -- quantum integers and weight formulas ----------------------------------------


def test_quantum_integer_basics():
    q = zeta(20)
    assert quantum_integer(1, q) == Cyc.rational(1)
    assert quantum_integer(0, q).is_zero()
    assert quantum_integer(2, q) == q + q.inverse()
    with pytest.raises(ValueError):
        quantum_integer(3, Cyc.rational(1))
    with pytest.raises(ValueError):
        quantum_integer(3, Cyc.rational(-1))


def test_quantum_integer_matches_ratio_definition():
    q = zeta(14, 3)
    for n in range(-4, 8):
        lhs = quantum_integer(n, q) * (q - q.inverse())
        assert lhs == q**n - q ** (-n)


def test_twist_formula_values():
    # gamma^j twist in the even series is q^{j(2r-j)}
    r = 9
    w = weight_data("D", r)
    q = zeta(4 * r)
    lam = (1, 1, 0, 0, 0, 0, 0, 0, 0)
    assert twist_from_weight(w, lam, q) == q ** (2 * (2 * r - 2))


# -- type B ------------------------------------------------------------------------


def test_b_series_rank_and_dimension():
    md = build_B(2)
    assert md.rank == 6
    assert md.global_dim() == Cyc.rational(20)
    assert fp_dimension_category(md.ring) == ("exact", Fraction(20))


def test_b4_is_integral_with_small_dims():
    md = build_B(4)
    assert md.is_integral()
    vals = sorted(int(d.as_fraction()) for d in md.dims)
    assert vals == [1, 1, 2, 2, 2, 2, 3, 3]


def test_b3_weakly_integral_only():
    md = build_B(3)
    assert not md.is_integral()
    assert is_weakly_integral(md.ring) and not is_integral(md.ring)
    s7 = sqrt_integer_as_cyclotomic(7)
    assert md.dims[md.labels.index("e")] == s7


def test_b_fusion_rules():
    md = build_B(5)
    ring = md.ring
    e, ep, v = ring.index_of("e"), ring.index_of("e'"), ring.index_of("v")
    gs = [ring.index_of(f"g{i}") for i in range(1, 6)]
    assert ring.product(e, e) == tuple(sorted([(0, 1)] + [(g, 1) for g in gs]))
    for g in gs:
        assert ring.product(e, g) == ((e, 1), (ep, 1))
    assert ring.product(e, ep) == tuple(sorted([(v, 1)] + [(g, 1) for g in gs]))
    assert ring.product(e, v) == ((ep, 1),)


def test_b_smatrix_entries():
    r = 4
    md = build_B(r)
    N = 2 * r + 1
    sq = sqrt_integer_as_cyclotomic(N)
    v = md.labels.index("v")
    e, ep = md.labels.index("e"), md.labels.index("e'")
    assert md.s_entry(v, v) == Cyc.rational(1)
    assert md.s_entry(v, e) == -sq and md.s_entry(v, ep) == -sq
    for i in range(1, r + 1):
        gi = md.labels.index(f"g{i}")
        assert md.s_entry(v, gi) == Cyc.rational(2)
        assert md.s_entry(gi, e).is_zero() and md.s_entry(gi, ep).is_zero()
        for j in range(1, r + 1):
            gj = md.labels.index(f"g{j}")
            expected = 2 * (zeta(N, i * j % N) + zeta(N, -i * j % N))
            assert md.s_entry(gi, gj) == expected
    assert md.s_entry(e, e) == sq
    assert md.s_entry(e, ep) == -sq
    assert md.s_entry(ep, ep) is None


def test_b_sign_parameter():
    plus = build_B(3, sign=1)
    minus = build_B(3, sign=-1)
    e = plus.labels.index("e")
    assert plus.s_entry(e, e) == -minus.s_entry(e, e)
    # group-theoreticity conclusions do not depend on the sign
    from fusionrings.modular import is_group_theoretical_modular

    for r in (3, 4):
        assert (
            is_group_theoretical_modular(build_B(r, sign=1)).status
            == is_group_theoretical_modular(build_B(r, sign=-1)).status
        )


def test_b_twist_values_match_lemma():
    # theta(2l1) = 1, and theta(gamma^j) = 1 exactly when t | j for square 2r+1
    md = build_B(4)  # t = 3
    assert md.twists[md.labels.index("v")] == Cyc.rational(1)
    for j in range(1, 5):
        tw = md.twists[md.labels.index(f"g{j}")]
        assert (tw == Cyc.rational(1)) == (j % 3 == 0)


def test_b_balancing_everywhere():
    for r in range(2, 7):
        rep = check_balancing(build_B(r))
        assert rep.passed and not rep.undecided


def test_even_part_b():
    ring = build_even_part("B", 4)
    assert ring.rank == 6
    assert fp_dimension_category(ring) == ("exact", Fraction(18))
    assert validate(ring).passed


def test_b_grading():
    grading = universal_grading(build_B(4).ring)
    assert grading.order == 2


def test_b_invertibles():
    invs, _ = invertible_group(build_B(6).ring)
    assert len(invs) == 2


# -- type D ------------------------------------------------------------------------


def test_d_series_rank_and_dimension():
    md = build_D(4)
    assert md.rank == 11
    assert md.global_dim() == Cyc.rational(32)


def test_d9_spin_dims_integral():
    md = build_D(9)
    assert md.is_integral()
    assert md.dims[md.labels.index("e1")] == Cyc.rational(3)


def test_d5_dual_structure():
    md = build_D(5)
    u, up = md.labels.index("u"), md.labels.index("u'")
    assert md.dual[u] == up and md.dual[up] == u
    for lab in ("e1", "e2", "e3", "e4"):
        assert md.dual[md.labels.index(lab)] is None  # unresolved pairing
    # u (x) u' = 1 in the known fusion
    assert md.product(u, up) == ((0, 1),)


def test_d_even_self_dual():
    md = build_D(4)
    assert all(md.dual[i] == i for i in range(md.rank))


def test_d_smatrix_entries():
    r = 5
    md = build_D(r)
    sq = sqrt_integer_as_cyclotomic(r)
    v, u, up = 1, 2, 3
    assert md.s_entry(v, u) == Cyc.rational(1)
    assert md.s_entry(u, up) == Cyc.rational(-1)  # (-1)^r, r odd
    for j in range(1, r):
        gj = md.labels.index(f"g{j}")
        assert md.s_entry(u, gj) == Cyc.rational(2 if j % 2 == 0 else -2)
        for i in range(1, r):
            gi = md.labels.index(f"g{i}")
            expected = 2 * (zeta(2 * r, i * j % (2 * r)) + zeta(2 * r, -i * j % (2 * r)))
            assert md.s_entry(gi, gj) == expected
    for lab in ("e1", "e2", "e3", "e4"):
        e = md.labels.index(lab)
        assert md.s_entry(v, e) == -sq
        assert md.s_entry(md.labels.index("g1"), e).is_zero()
        assert md.s_entry(u, e) is None
        assert md.s_entry(e, e) is None


def test_d_twists():
    # theta(u) = theta(u') = i^r and spins are sixteenth roots of unity
    for r in (4, 5):
        md = build_D(r)
        iu = zeta(4) ** r
        assert md.twists[md.labels.index("u")] == iu
        assert md.twists[md.labels.index("u'")] == iu
        e1 = md.twists[md.labels.index("e1")]
        assert e1 == zeta(16, (2 * r - 1) % 16)


def test_d_balancing_known_pairs():
    for r in range(4, 9):
        rep = check_balancing(build_D(r))
        assert rep.passed


def test_even_part_d():
    ring = build_even_part("D", 4)
    assert ring.rank == 7
    assert fp_dimension_category(ring) == ("exact", Fraction(16))
    ring5 = build_even_part("D", 5)
    assert ring5.dual[ring5.index_of("u")] == ring5.index_of("u'")
    assert validate(ring5).passed


def test_d_invertibles_order_four():
    ring = build_even_part("D", 6)
    invs, _ = invertible_group(ring)
    assert len(invs) == 4


@pytest.mark.parametrize("family,r", [("B", r) for r in range(2, 9)] + [("D", r) for r in range(4, 11)])
def test_even_parts_validate(family, r):
    assert validate(build_even_part(family, r)).passed


def test_d_pointed_part_rank_four():
    from fusionrings.fusionring import pointed_part

    ring = build_even_part("D", 7)
    sub, is_pointed = pointed_part(ring)
    assert sorted(ring.labels[i] for i in sub.parent_indices) == ["1", "u", "u'", "v"]
    assert not is_pointed


# -- dihedral and semidirect character rings ----------------------------------------


def test_dihedral_rep_shapes():
    r5 = build_dihedral_rep(5)
    assert r5.rank == 4
    dims = sorted(int(fp_dimension(r5, a).value) for a in range(4))
    assert dims == [1, 1, 2, 2]
    r4 = build_dihedral_rep(4)
    x = next(a for a in range(r4.rank) if fp_dimension(r4, a).equals_integer(2))
    assert r4.product(x, x) == ((0, 1), (1, 1), (2, 1), (3, 1))
    r3 = build_dihedral_rep(3)
    x = r3.index_of("c1")
    assert r3.product(x, x) == ((0, 1), (1, 1), (x, 1))


def test_dihedral_rep_validates():
    for n in range(3, 13):
        assert validate(build_dihedral_rep(n)).passed


def test_semidirect_rep_shapes():
    ring = build_semidirect_rep(5)
    assert ring.rank == 8
    assert fp_dimension_category(ring) == ("exact", Fraction(20))
    invs, _ = invertible_group(ring)
    assert len(invs) == 4
    assert ring.dual[ring.index_of("u")] == ring.index_of("u3")
    ring3 = build_semidirect_rep(3)
    assert fp_dimension_category(ring3) == ("exact", Fraction(12))


def test_semidirect_rep_validates_and_rejects_even():
    for k in (3, 5, 7, 9):
        assert validate(build_semidirect_rep(k)).passed
    with pytest.raises(ValueError):
        build_semidirect_rep(4)


# -- truncated sl2 -------------------------------------------------------------------


def test_sl2_small_cases():
    r4 = build_sl2(4)
    assert r4.product(1, 1) == ((0, 1), (2, 1))
    d = fp_dimension(r4, 1)
    assert d.kind == "quadratic" and (d.qa, d.qb) == (0, 2)  # sqrt(2)
    r6 = build_sl2(6)
    d = fp_dimension(r6, 1)
    assert (d.qa, d.qb) == (0, 3)  # sqrt(3)
    assert build_sl2(2).rank == 1


def test_sl2_weak_integrality_cutoff():
    good = {2, 3, 4, 6}
    for ell in range(2, 21):
        assert is_weakly_integral(build_sl2(ell)) == (ell in good), ell


def test_sl2_validates():
    for ell in (3, 5, 8, 11):
        assert validate(build_sl2(ell)).passed


# -- the rank-10 counterexample -------------------------------------------------------


def test_su3_dims_and_twists():
    md = build_su3_example()
    assert md.rank == 10
    assert md.global_dim() == Cyc.rational(36)
    dims = [d.as_fraction() for d in md.dims]
    assert dims == [1, 1, 1, 3, 2, 2, 2, 2, 2, 2]
    assert md.twists[3] == Cyc.rational(-1)
    zz = zeta(18)
    assert md.twists[4] == zz**4 and md.twists[8] == zz**16


def test_su3_c_block_unknown_with_modulus():
    md = build_su3_example()
    for i in range(4, 10):
        for j in range(i, 10):
            assert md.s_entry(i, j) is None
            assert md.s_norm_sq[(i, j)] == Fraction(4)


def test_su3_known_fusion():
    md = build_su3_example()
    assert md.product(3, 3) == ((0, 1), (1, 1), (2, 1), (3, 2))
    assert md.product(1, 1) == ((2, 1),)
    assert md.product(1, 4) is None


# -- Tambara-Yamagami ------------------------------------------------------------------


def test_ty_rules_and_dims():
    ring = build_TY(AbelianGroup((2,)))
    m = ring.index_of("m")
    d = fp_dimension(ring, m)
    assert (d.qa, d.qb) == (0, 2)
    ring4 = build_TY(AbelianGroup((4,)))
    assert is_integral(ring4)
    assert fp_dimension_category(ring4) == ("exact", Fraction(8))
    assert validate(ring4).passed


def test_dty_plus_small_groups_validate():
    for orders in ((2,), (3,), (4,), (2, 2), (5,)):
        group = AbelianGroup(orders)
        ring = build_DTY_plus(group, standard_form(group))
        assert ring.rank == 2 * group.order + group.order * (group.order - 1) // 2
        assert validate(ring).passed, orders


def test_dty_plus_invertible_group():
    group = AbelianGroup((3,))
    form = standard_form(group)
    ring = build_DTY_plus(group, form)
    invs, table = invertible_group(ring)
    assert len(invs) == 2 * group.order
    # X[a;+] (x) X[a^-1;+] lands at the unit component with the pairing twist
    a_plus = ring.index_of("X[1;+]")
    a_inv_plus = ring.index_of("X[2;+]")
    prod = ring.product(a_plus, a_inv_plus)
    assert len(prod) == 1 and ring.labels[prod[0][0]].startswith("X[0;")


def test_dty_plus_invertibles_surject_onto_group():
    group = AbelianGroup((2, 2))
    ring = build_DTY_plus(group, standard_form(group))
    invs, _ = invertible_group(ring)
    base_elements = {ring.labels[i].split(";")[0] for i in invs}
    assert len(base_elements) == group.order  # the extension covers every element
    assert len(invs) == 2 * group.order


def test_twist_of_zero_weight_is_one():
    from fusionrings.weights import twist_from_weight, qdim_from_weight, weight_data

    w = weight_data("B", 3)
    q = zeta(28)
    assert twist_from_weight(w, (0, 0, 0), q) == Cyc.rational(1)
    assert qdim_from_weight(w, (0, 0, 0), q) == Cyc.rational(1)


def test_dty_plus_duals():
    group = AbelianGroup((3,))
    ring = build_DTY_plus(group, standard_form(group))
    assert ring.dual[ring.index_of("X[1;+]")] == ring.index_of("X[2;+]")
    assert ring.dual[ring.index_of("X[1;-]")] == ring.index_of("X[2;-]")


def test_dty_objects_census():
    # rank |A|(|A|+7)/2 split into 2|A| invertibles, |A|(|A|-1)/2 twos, 2|A| spins
    for orders in ((2,), (3,), (2, 2)):
        group = AbelianGroup(orders)
        objs = build_DTY_objects(group, standard_form(group), 1)
        n = group.order
        assert len(objs) == n * (n + 7) // 2
        kinds = {}
        for o in objs:
            kinds[o.kind] = kinds.get(o.kind, 0) + 1
        assert kinds == {"invertible": 2 * n, "twodim": n * (n - 1) // 2, "spin": 2 * n}
        total = Cyc.rational(0)
        for o in objs:
            total = total + o.dim * o.dim
        assert total == Cyc.rational(4 * n * n)
        assert all((o.grade == -1) == (o.kind == "spin") for o in objs)


def test_dty_objects_x_duals():
    group = AbelianGroup((3,))
    objs = build_DTY_objects(group, standard_form(group), 1)
    xs = {o.label: o for o in objs if o.kind == "invertible"}
    assert xs["X[1;+]"].dual_label == "X[2;+]"


def test_dty_objects_tau_sign():
    group = AbelianGroup((2,))
    plus = build_DTY_objects(group, standard_form(group), 1)
    minus = build_DTY_objects(group, standard_form(group), -1)
    assert len(plus) == len(minus)
    with pytest.raises(ValueError):
        build_DTY_objects(group, standard_form(group), 0)


# -- pointed data ------------------------------------------------------------------------


def test_pointed_modular_z3():
    group = AbelianGroup((3,))
    md = build_pointed_modular(group, standard_quadratic_form(group))
    assert md.rank == 3
    assert check_balancing(md).passed


def test_pointed_modular_trivial_group():
    group = AbelianGroup((1,))
    md = build_pointed_modular(group, standard_quadratic_form(group))
    assert md.rank == 1


def test_pointed_modular_hyperbolic_z2z2():
    from fusionrings.groups import QuadraticForm

    group = AbelianGroup((2, 2))
    q = QuadraticForm(group, 2, ((0, 1), (0, 0)))
    md = build_pointed_modular(group, q)
    assert md.global_dim() == Cyc.rational(4)
    from fusionrings.fusionring import pointed_part

    assert pointed_part(md.ring)[1]


# -- the family grammar --------------------------------------------------------------------


def test_parse_family_dispatch():
    kind, md = parse_family("B:4")
    assert kind == "modular" and md.rank == 8
    kind, ring = parse_family("DTYPLUS:3")
    assert kind == "ring" and ring.rank == 9
    kind, md = parse_family("SU3")
    assert kind == "modular" and md.rank == 10
    kind, ring = parse_family("DIH:8")
    assert kind == "ring" and ring.rank == 7
    kind, ring = parse_family("BEVEN:4")
    assert kind == "ring" and ring.rank == 6


def test_parse_family_rejects_garbage():
    for bad in ("", "Q:4", "B:x", "B:-1", "TY:"):
        with pytest.raises(FamilySpecError):
            parse_family(bad)
