"""Conjugation with colors: where each statistic lands.

Mark the rows whose index sits in the residue set, read columns as parts,
and turn each column's unmarked overhang into a color. Size becomes the
marked-row part sum, and the count of columns with height j mod m becomes
the count of color-j parts.
"""

from schmidtq import (
    Partition,
    color_conjugate,
    color_conjugate_inverse,
    color_counts,
    residue_column_count,
    schmidt_weight,
)

m, s = 5, (1, 2, 3)
lam = Partition((5, 5, 4, 4, 4, 4, 4, 4, 3, 2, 1))
mu = color_conjugate(lam, m, s)

print("source:", lam.to_text())
print("image: ", mu.to_text())
print()
print("marked-row sum:", schmidt_weight(lam, m, s), "  image size:", mu.size)
for j in range(1, m + 1):
    cols = residue_column_count(lam, m, j)
    print(f"columns with height {j} mod {m}: {cols}   color-{j} parts: {color_counts(mu, m)[j - 1]}")
print()
print("inverse returns the source:", color_conjugate_inverse(mu, m, s) == lam)

# The same transport holds for every residue choice, not just the drawn one.
for s in ((1,), (1, 3), (1, 2, 3, 4, 5)):
    mu = color_conjugate(lam, m, s)
    assert color_conjugate_inverse(mu, m, s) == lam
    print(f"residues {s}: image {mu.to_text()}")
