"""One coefficient, four ways.

The overpartition identity tracks overlined parts with t1 and the rest of
the length with t2. The t1*t2^2*q^6 coefficient is 6, and four independent
computations agree on it: the double sum, the infinite product, direct
enumeration of overpartitions, and enumeration of the multiplicity-below-4
partitions the identity also counts.
"""

from schmidtq import enum_side, product_side, sum_side, verify_identity, witnesses

mono = {"q": 6, "t1": 1, "t2": 2}

print("sum side:    ", sum_side("overpartition", 6).coefficient_at(**mono))
print("product side:", product_side("overpartition", qcap=6).coefficient_at(**mono))
print("enumeration: ", enum_side("overpartition", qcap=6).coefficient_at(**mono))
print("via bounded multiplicities:", enum_side("cor22", qcap=6).coefficient_at(**mono))
print()

print("the six overpartitions (one overline, three parts):")
for text in witnesses("overpartition", mono):
    print("  ", text)
print("the six bounded-multiplicity partitions:")
for text in witnesses("cor22", mono):
    print("  ", text)
print()

# Not just one coefficient: every monomial through the cap agrees.
report = verify_identity("overpartition", qcap=12)
print("all sides through q^12:", report.status)
print(report.to_json_text())
