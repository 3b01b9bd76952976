"""Tambara-Yamagami rings, their doubled centers, and Lagrangian subgroups.

For a finite abelian group A with a nondegenerate symmetric pairing, the
center of the associated near-group category has |A|(|A|+7)/2 simple objects
in three families; the trivially-graded part is an honest fusion ring built
here from the twisted product rules.  A Lagrangian subgroup (L = L-perp)
certifies group-theoreticity of the double.
"""

from fusionrings.cyclotomic import Cyc
from fusionrings.families import build_DTY_objects, build_DTY_plus, build_TY
from fusionrings.fusionring import fp_dimension, invertible_group, validate
from fusionrings.groups import (
    AbelianGroup,
    BilinearForm,
    hyperbolic_form,
    lagrangian_search,
    standard_form,
)

print("near-group rings: A plus one extra simple m with m (x) m = sum over A")
for orders in ((2,), (3,), (4,)):
    ring = build_TY(AbelianGroup(orders))
    m = ring.index_of("m")
    d = fp_dimension(ring, m)
    print(f"  A = Z{orders[0]}: rank {ring.rank}, dim(m) certificate: {d.certificate[:60]}...")

print("\nthe trivially-graded center component and its object census:")
for orders in ((2,), (3,), (2, 2)):
    group = AbelianGroup(orders)
    form = standard_form(group)
    ring = build_DTY_plus(group, form)
    invs, _ = invertible_group(ring)
    objs = build_DTY_objects(group, form, 1)
    total = Cyc.rational(0)
    for o in objs:
        total = total + o.dim * o.dim
    name = "x".join(f"Z{o}" for o in orders)
    print(
        f"  A = {name}: plus-part rank {ring.rank} (valid: {validate(ring).passed}), "
        f"invertibles {len(invs)}; full center rank {len(objs)}, total FPdim^2 = {total!r}"
    )

print("\nLagrangian subgroups (L = L-perp forces |L|^2 = |A|):")
for n in (2, 3):
    g = AbelianGroup((n, n))
    found = lagrangian_search(g, hyperbolic_form(n))
    print(f"  Z{n} x Z{n}, hyperbolic pairing: found {sorted(found)}")
for n in (2, 3):
    g = AbelianGroup((n * n,))
    found = lagrangian_search(g, BilinearForm(g, n * n, ((1,),)))
    print(f"  Z{n * n}, standard pairing: found {sorted(found)}")
g = AbelianGroup((5,))
print(f"  Z5: {lagrangian_search(g, standard_form(g))}  (5 is not a perfect square)")
