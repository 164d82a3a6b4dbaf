"""A first walk through indexed part sums.

Sum the parts of a partition at the odd positions only: over partitions
whose parts repeat at most once, the count at each total matches p(n).
The same machinery runs the generalizations below.
"""

from schmidtq import (
    Partition,
    partitions_of,
    partitions_with_schmidt_weight,
    schmidt_weight,
    verify_counting,
)

lam = Partition((7, 5, 4, 4, 2, 1))
print("partition:", lam.to_text())
print("odd-index part sum:", schmidt_weight(lam, 2, (1,)))
print("first-of-three part sum:", schmidt_weight(lam, 3, (1,)))
print()

for n in range(7):
    bounded = list(partitions_with_schmidt_weight(n, 2, (1,), "D"))
    plain = list(partitions_of(n))
    print(f"weight {n}: {len(bounded)} distinct-part partitions, p({n}) = {len(plain)}")
print()

# The bucketed checks compare both sides one statistic at a time.
for name in ("schmidt", "uncu"):
    report = verify_counting(name, n=6)
    print(f"{name} at weight 6: {report.status}")

report = verify_counting("ak_main", n=6, m=3, s={1, 2})
print("three-row variant, residues {1,2}:", report.status)
report = verify_counting("franklin_ext", n=6, m=2, s={1})
print("unrestricted multiplicities, modulus 2:", report.status)
