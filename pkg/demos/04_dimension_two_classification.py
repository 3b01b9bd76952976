"""Classifying fusion rings generated by a self-dual two-dimensional simple.

Such rings (dimensions in {1,2}, commutative) are Grothendieck equivalent to
dihedral character rings; allowing non-self-dual invertibles adds the
semidirect-product rings Rep(Z_k x| Z_4).  classify walks the generator chain
and certifies the answer by an explicit bijection; the exhaustive low-rank
enumeration independently confirms that nothing else satisfies the axioms.
"""

from fusionrings.classifier import classify, enumerate_rank_bounded
from fusionrings.families import build_sl2, even_part_B, even_part_D

print("dimension-{1,2} parts of the orthogonal families:")
for r in (2, 4, 6):
    res = classify(even_part_B(r))
    print(f"  B:{r} even part -> {res.outcome}({res.n_or_k})")
for r in (4, 5, 6, 9):
    res = classify(even_part_D(r))
    print(f"  D:{r} even part -> {res.outcome}({res.n_or_k})")

print("\na chain trace, step by step (D:7 even part):")
res = classify(even_part_D(7))
for step in res.trace:
    print(f"  {step}")

print("\nrings outside the hypotheses are refused, not forced:")
res = classify(build_sl2(5))
print(f"  truncated sl2 at level 5 -> {res.outcome}: {res.reason}")

print("\nexhaustive enumeration at rank <= 6 (the oracle view):")
for ring in enumerate_rank_bounded(6):
    res = classify(ring)
    print(f"  rank {ring.rank}: {res.outcome}({res.n_or_k})")
