"""Group-theoreticity decisions through symmetric subcategories.

A modular datum is group-theoretical exactly when it is integral and has a
symmetric subcategory L whose centralizer has adjoint inside L.  The decision
procedure enumerates the decidably-symmetric fusion-closed subsets and hunts
for such a witness; missing S entries can only ever produce an honest
"undecided", never a guess.
"""

from fusionrings.families import build_B, build_D, build_su3_example
from fusionrings.modular import (
    centralizer,
    enumerate_symmetric_subcategories,
    is_group_theoretical_modular,
)


def show(name, md):
    gt = is_group_theoretical_modular(md)
    witness = sorted(md.labels[i] for i in gt.witness) if gt.witness else None
    print(f"{name:6} -> {gt.status:8} witness={witness}")
    return gt


print("odd orthogonal series: group-theoretical exactly at square 2r+1")
for r in (2, 3, 4, 12):
    show(f"B:{r}", build_B(r))

print("\neven orthogonal series: group-theoretical exactly at square r,")
print("with the odd-rank case walking through the dual pair u, u':")
for r in (4, 5, 9, 16):
    show(f"D:{r}", build_D(r))

md = build_D(9)
gt = is_group_theoretical_modular(md)
lp = centralizer(md, gt.witness)
print(f"  D:9 witness {sorted(md.labels[i] for i in gt.witness)}; its centralizer adds "
      f"{sorted(md.labels[i] for i in lp.members - frozenset(gt.witness))}")
u, up = md.labels.index("u"), md.labels.index("u'")
print(f"  u (x) u' = {md.product(u, up)}  (the adjoint stays inside the witness)")

print("\nthe rank-10, dimension-36 integral datum is NOT group-theoretical:")
md = build_su3_example()
decided, undecidable = enumerate_symmetric_subcategories(md)
print(f"  symmetric subcategories: {[sorted(md.labels[i] for i in s.members) for s in decided]}")
show("SU3", md)
