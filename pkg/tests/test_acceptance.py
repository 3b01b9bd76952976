"""Acceptance suite: one test per criterion, exact tolerances, stated runtimes.

Every check below is exact (integer / cyclotomic equality); runtime bounds are
asserted against the stated budgets.  Run with -s to see the per-criterion
pass lines.
"""

import random
import time

from fusionrings.classifier import classify, enumerate_rank_bounded
from fusionrings.cyclotomic import Cyc, sqrt_integer_as_cyclotomic
from fusionrings.families import (
    build_B,
    build_D,
    build_DTY_objects,
    build_DTY_plus,
    build_dihedral_rep,
    build_pointed_modular,
    build_sl2,
    build_su3_example,
    even_part_B,
    even_part_D,
)
from fusionrings.fusionring import (
    fp_dimension,
    fp_dimension_category,
    invertible_group,
    is_weakly_integral,
    universal_grading,
    validate,
)
from fusionrings.groups import (
    AbelianGroup,
    BilinearForm,
    hyperbolic_form,
    lagrangian_search,
    standard_form,
    standard_quadratic_form,
)
from fusionrings.modular import (
    centralizer,
    check_balancing,
    complete_smatrix,
    enumerate_symmetric_subcategories,
    is_group_theoretical_modular,
    muger_dimension_identity,
    verlinde_fusion,
)


class criterion:
    def __init__(self, number, budget_seconds):
        self.number = number
        self.budget = budget_seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        print(f"criterion {self.number}: {status} ({elapsed:.2f}s, budget {self.budget}s)")
        if exc_type is None:
            assert elapsed < self.budget, f"criterion {self.number} over budget: {elapsed:.2f}s"
        return False


def labset(md, members):
    return sorted(md.labels[i] for i in members)


def run_cli(capsys, *argv):
    from fusionrings.cli import main

    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_criterion_1_b_series_group_theoretical(capsys):
    with criterion("1a (B:4 GT)", 5):
        md = build_B(4)
        gt = is_group_theoretical_modular(md)
        assert gt.status == "GT"
        assert labset(md, gt.witness) == ["1", "g3", "v"]  # {1, 2l1, gamma^3}
        code, out = run_cli(capsys, "check", "B:4", "--suite", "gt")
        assert code == 0 and "GT" in out and "'g3'" in out
    with criterion("1b (B:12 GT)", 5):
        md = build_B(12)
        gt = is_group_theoretical_modular(md)
        assert gt.status == "GT"
        assert labset(md, gt.witness) == ["1", "g10", "g5", "v"]
        code, out = run_cli(capsys, "check", "B:12", "--suite", "gt")
        assert code == 0 and "GT" in out


def test_criterion_2_b3_negative_control(capsys):
    with criterion("2 (B:3 NOT-GT)", 1):
        md = build_B(3)
        gt = is_group_theoretical_modular(md)
        assert gt.status == "NOT_GT"
        e = md.labels.index("e")
        assert md.dims[e] == sqrt_integer_as_cyclotomic(7)
        assert not md.dims[e].is_integer()
        code, out = run_cli(capsys, "check", "B:3", "--suite", "gt")
        assert code == 0 and "NOT_GT" in out


def test_criterion_3_d_series_group_theoretical(capsys):
    for r in (4, 9, 16):
        with criterion(f"3 (D:{r} GT)", 10):
            md = build_D(r)
            gt = is_group_theoretical_modular(md)
            assert gt.status == "GT", gt.reason
            code, out = run_cli(capsys, "check", f"D:{r}", "--suite", "gt")
            assert code == 0 and "GT" in out
            if r % 2 == 1:
                # odd case: the witness is the odd symmetric part and its
                # centralizer picks up u, u' with u (x) u' = 1
                assert labset(md, gt.witness) == ["1", "g6", "v"]
                lp = centralizer(md, gt.witness)
                u, up = md.labels.index("u"), md.labels.index("u'")
                assert u in lp.members and up in lp.members
                assert md.dual[u] == up
                assert md.product(u, up) == ((0, 1),)


def test_criterion_4_verlinde_roundtrip():
    with criterion("4 (Verlinde roundtrip B:2..6)", 10):
        for r in range(2, 7):
            md = complete_smatrix(build_B(r))
            ring = verlinde_fusion(md)
            e, ep, v = ring.index_of("e"), ring.index_of("e'"), ring.index_of("v")
            gs = [ring.index_of(f"g{i}") for i in range(1, r + 1)]
            assert ring.product(e, e) == tuple(sorted([(0, 1)] + [(g, 1) for g in gs]))
            for g in gs:
                assert ring.product(e, g) == tuple(sorted([(e, 1), (ep, 1)]))
            assert ring.product(e, ep) == tuple(sorted([(v, 1)] + [(g, 1) for g in gs]))
            assert ring.product(e, v) == ((ep, 1),)
            assert ring.tensor == md.ring.tensor
            assert validate(ring).passed


def test_criterion_5_balancing_everywhere():
    with criterion("5 (balancing, all constructed data)", 60):
        for r in range(2, 9):
            rep = check_balancing(build_B(r))
            assert rep.passed and not rep.undecided, f"B:{r}"
        for r in range(4, 11):
            rep = check_balancing(build_D(r))
            assert rep.passed, f"D:{r}"
        assert check_balancing(build_su3_example()).passed
        for orders in ((2,), (3,), (4,), (2, 2), (5,), (12,)):
            group = AbelianGroup(orders)
            md = build_pointed_modular(group, standard_quadratic_form(group))
            rep = check_balancing(md)
            assert rep.passed and not rep.undecided, orders


def test_criterion_6_classification():
    with criterion("6 (classification of even parts and dihedral reps)", 30):
        for r in range(2, 9):
            res = classify(even_part_B(r))
            assert res.outcome == "dihedral" and res.n_or_k == 2 * r + 1, (r, res.reason)
        for r in (4, 6, 8, 10):
            res = classify(even_part_D(r))
            assert res.outcome == "dihedral" and res.n_or_k == 2 * r, (r, res.reason)
        for r in (5, 7, 9):
            res = classify(even_part_D(r))
            assert res.outcome == "semidirect" and res.n_or_k == r, (r, res.reason)
        for n in range(3, 17):
            res = classify(build_dihedral_rep(n))
            assert res.outcome == "dihedral" and res.n_or_k == n


def test_criterion_7_enumeration_oracle():
    with criterion("7 (rank-7 enumeration oracle)", 120):
        rings = enumerate_rank_bounded(7)
        assert rings, "enumeration found nothing"
        for ring in rings:
            res = classify(ring)
            assert res.outcome in ("dihedral", "semidirect"), res.reason
            kind, total = fp_dimension_category(ring)
            assert kind == "exact"
            k = sum(1 for a in range(ring.rank) if fp_dimension(ring, a).equals_integer(2))
            case_b = any("case b" in s or "three invertibles" in s for s in res.trace)
            if case_b:
                assert total == 4 * k + 4, (res.n_or_k, total)
            else:
                assert total == 4 * k + 2, (res.n_or_k, total)


def test_criterion_8_sl2_weak_integrality():
    with criterion("8 (sl2 weak integrality)", 5):
        good = {2, 3, 4, 6}
        for ell in range(2, 21):
            assert is_weakly_integral(build_sl2(ell)) == (ell in good), ell


def test_criterion_9_rank10_counterexample():
    with criterion("9 (rank-10 counterexample)", 5):
        md = build_su3_example()
        assert md.rank == 10
        assert md.global_dim() == Cyc.rational(36)
        decided, undecidable = enumerate_symmetric_subcategories(md)
        assert [labset(md, s.members) for s in decided] == [["1"], ["1", "x3", "x3*"]]
        assert not undecidable
        gt = is_group_theoretical_modular(md)
        assert gt.status == "NOT_GT"


def test_criterion_10_doubled_ty_structure():
    with criterion("10 (doubled Tambara-Yamagami structure)", 10):
        for orders in ((2,), (3,), (4,), (2, 2), (5,)):
            group = AbelianGroup(orders)
            form = standard_form(group)
            ring = build_DTY_plus(group, form)
            assert validate(ring).passed, orders
            invs, _ = invertible_group(ring)
            assert len(invs) == 2 * group.order
            objs = build_DTY_objects(group, form, 1)
            n = group.order
            assert len(objs) == n * (n + 7) // 2
            total = Cyc.rational(0)
            for o in objs:
                total = total + o.dim * o.dim
            assert total == Cyc.rational(4 * n * n)
        # Lagrangian searches: hyperbolic plane and cyclic squares
        for n in (2, 3, 4):
            g2 = AbelianGroup((n, n))
            found = lagrangian_search(g2, hyperbolic_form(n))
            assert found is not None and len(found) ** 2 == g2.order
            gsq = AbelianGroup((n * n,))
            found = lagrangian_search(gsq, BilinearForm(gsq, n * n, ((1,),)))
            assert found == gsq.subgroup_generated([(n,)])
        for n in (2, 3, 5, 6, 7, 8):
            g = AbelianGroup((n,))
            assert lagrangian_search(g, standard_form(g)) is None


def test_criterion_11_property_suites():
    with criterion("11 (randomized property suites)", 120):
        cases = 0
        rng = random.Random(20240809)

        # cyclotomic field axioms on random elements, conductors <= 60
        conductors = [n for n in range(1, 61)]
        from fusionrings.cyclotomic import euler_phi

        conductors = [n for n in conductors if euler_phi(n) <= 12]
        for _ in range(400):
            n1, n2, n3 = (rng.choice(conductors) for _ in range(3))
            a = _rand_cyc(rng, n1)
            b = _rand_cyc(rng, n2)
            c = _rand_cyc(rng, n3)
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            cases += 1
        for _ in range(150):
            a = _rand_cyc(rng, rng.choice(conductors))
            if not a.is_zero():
                assert a * a.inverse() == Cyc.rational(1)
            cases += 1
        for _ in range(150):
            a = _rand_cyc(rng, rng.choice(conductors))
            assert a.conjugate().conjugate() == a
            cases += 1

        # integer square roots as exact cyclotomics, m <= 200
        for m in range(1, 201):
            s = sqrt_integer_as_cyclotomic(m)
            assert s * s == Cyc.rational(m)
            cases += 1

        # ring axioms + FPdim homomorphism on random pairs in constructed rings
        pool = [
            build_B(2).ring,
            build_B(4).ring,
            even_part_B(5),
            even_part_D(6),
            build_dihedral_rep(7),
            build_DTY_plus(AbelianGroup((3,)), standard_form(AbelianGroup((3,)))),
        ]
        dims_cache = []
        for ring in pool:
            assert validate(ring).passed
            dims_cache.append([fp_dimension(ring, a).as_cyclotomic() for a in range(ring.rank)])
        for _ in range(180):
            idx = rng.randrange(len(pool))
            ring, dims = pool[idx], dims_cache[idx]
            a = rng.randrange(ring.rank)
            b = rng.randrange(ring.rank)
            rhs = Cyc.rational(0)
            for c, m in ring.product(a, b):
                rhs = rhs + m * dims[c]
            assert dims[a] * dims[b] == rhs
            assert dims[a] == dims[ring.dual[a]]
            cases += 1

        # grading equidimensionality across components (checked inside)
        for ring in pool:
            universal_grading(ring)
            cases += 1

        # centralizer antitonicity on random nested subsets of completed B:4
        md = complete_smatrix(build_B(4))
        for _ in range(120):
            small = {0} | {rng.randrange(md.rank) for _ in range(2)}
            small |= {md.dual[x] for x in small}
            extra = {rng.randrange(md.rank)}
            big = small | extra | {md.dual[x] for x in extra}
            c_small = centralizer(md, small)
            c_big = centralizer(md, big)
            assert c_big.members <= c_small.members
            cases += 1

        # the exact dimension identity on the pointed part of B:4
        item = muger_dimension_identity(build_B(4), {0, 1})
        assert item.ok and "dim(C)=Cyc(36" in item.witness.replace(" ", "")
        cases += 1

        assert cases >= 1000, cases
        print(f"criterion 11 randomized case count: {cases}")


def _rand_cyc(rng, n):
    from fusionrings.cyclotomic import euler_phi

    k = euler_phi(n)
    return Cyc(n, [rng.randint(-6, 6) for _ in range(k)], rng.randint(1, 5))
