"""Bijections between partition families that transport diagram statistics.

Four maps live here.

``color_conjugate`` sends an ordinary partition to a colored partition:
mark the rows of the diagram whose index residue lies in the chosen set,
replace each column by the count of marked cells it contains, and record
how far the column overshoots its last marked row as a color offset.
The inverse reads the overshoot back out of the color.

``mork_forward`` cuts the diagram into hooks along the main diagonal and
interleaves, for each diagonal cell, the hook through it with the hook
through the cell just right of it.  The images are exactly the
partitions with distinct parts, and the odd-indexed parts of the image
sum to the size of the source.

``glaisher_reduce`` repeatedly removes groups of ``m`` equal-height
columns, banking each removed group of height ``k`` as a part ``k * m``;
what remains has all column multiplicities below ``m``, i.e. all gaps
below ``m``.

``decompose_multiplicity`` splits each part multiplicity into its
residue and its multiple-of-``m`` bulk.
"""

from __future__ import annotations

from collections import Counter
from itertools import groupby

from .colored import ColoredPartition
from .partitions import Partition, in_class, normalize_residue_set

__all__ = [
    "color_conjugate",
    "color_conjugate_inverse",
    "mork_forward",
    "mork_inverse",
    "glaisher_reduce",
    "glaisher_expand",
    "decompose_multiplicity",
    "merge_partitions",
]


def _marked_rows_below(h, m, residues):
    # Count row indices r <= h with ((r - 1) % m) + 1 in residues.
    full, rem = divmod(h, m)
    return full * len(residues) + sum(1 for r in residues if r <= rem)


def color_conjugate(lam, m, s):
    """Transpose the diagram while folding the marked-row structure into colors.

    Rows whose 1-based index has residue (mod ``m``, in ``1..m``) inside
    ``s`` are marked.  A column of height ``h`` containing ``p`` marked
    cells becomes a colored part of size ``p``; its color is ``s_k + j``
    where ``k = ((p - 1) mod i) + 1`` indexes the last marked row covered
    and ``j = h - (that row)`` counts the unmarked overhang.  The
    resulting parts satisfy the palette rule with ceiling ``m + 1``, the
    total size equals the marked-index weight of ``lam``, and the number
    of parts colored ``j`` equals the number of columns of height
    congruent to ``j`` mod ``m``.
    """
    residues = normalize_residue_set(m, s, allow_m=True)
    i = len(residues)
    parts = []
    for h in lam.conjugate().parts:
        p = _marked_rows_below(h, m, residues)
        # Row 1 is always marked, so every positive column has p >= 1.
        k = ((p - 1) % i) + 1
        last_marked = m * ((p - 1) // i) + residues[k - 1]
        j = h - last_marked
        parts.append((p, residues[k - 1] + j))
    return ColoredPartition(parts)


def color_conjugate_inverse(mu, m, s):
    """Recover the partition whose marked-conjugate coloring is ``mu``.

    Each colored part (p, c) pins down a column height: the color offset
    ``c - s_k`` is the overhang above the p-th marked row.  Raises
    ``ValueError`` when some color is outside its size's palette.
    """
    residues = normalize_residue_set(m, s, allow_m=True)
    i = len(residues)
    heights = []
    for p, c in mu.parts:
        k = ((p - 1) % i) + 1
        lo = residues[k - 1]
        hi = residues[k] if k < i else m + 1
        if not lo <= c < hi:
            raise ValueError(
                f"part ({p}, {c}) is not admissible for modulus {m}, residues {residues}"
            )
        last_marked = m * ((p - 1) // i) + lo
        heights.append(last_marked + (c - lo))
    heights.sort(reverse=True)
    return Partition(heights).conjugate()


def mork_forward(lam):
    """Interleave the diagonal hooks with their right-shifted companions.

    For each diagonal cell (d, d) the image receives
    ``lam_d + conj_d - 2d + 1`` (the hook through (d, d)) and, when the
    cell (d, d + 1) exists, ``lam_d + conj_{d+1} - 2d`` (the hook through
    it).  The image has strictly decreasing parts.
    """
    conj = lam.conjugate()
    out = []
    d = 1
    while lam.part(d) >= d:
        out.append(lam.part(d) + conj.part(d) - 2 * d + 1)
        if lam.part(d) >= d + 1:
            out.append(lam.part(d) + conj.part(d + 1) - 2 * d)
        d += 1
    return Partition(out)


def mork_inverse(mu):
    """Rebuild the partition whose interleaved diagonal hooks give ``mu``.

    Works back from the innermost hook: the last lower hook fixes the
    final arm/leg pair, and each earlier pair is determined by peeling
    one hook length off the next.  Raises ``ValueError`` when ``mu`` has
    repeated parts or the reconstructed arms and legs fail to decrease
    strictly, i.e. when ``mu`` is not an image of the map.
    """
    parts = mu.parts
    if len(set(parts)) != len(parts):
        raise ValueError(f"{parts} has repeated parts, so it is not an image")
    n = len(parts)
    if n == 0:
        return Partition()
    dm = (n + 1) // 2

    def mu_at(idx):
        return parts[idx - 1]

    arm = [0] * (dm + 2)
    leg = [0] * (dm + 2)
    arm[dm] = mu_at(2 * dm) if n % 2 == 0 else 0
    leg[dm] = mu_at(2 * dm - 1) - arm[dm] - 1
    for d in range(dm - 1, 0, -1):
        arm[d] = mu_at(2 * d) - leg[d + 1] - 1
        leg[d] = mu_at(2 * d - 1) - arm[d] - 1
    for d in range(1, dm + 1):
        if arm[d] < 0 or leg[d] < 0:
            raise ValueError(f"{parts} is not an image: negative hook component")
    for d in range(1, dm):
        if arm[d] <= arm[d + 1] or leg[d] <= leg[d + 1]:
            raise ValueError(f"{parts} is not an image: hook components must nest")
    rows = [arm[d] + d for d in range(1, dm + 1)]
    cols = [leg[d] + d for d in range(1, dm + 1)]
    # Rows below the diagonal square are read off the column heights.
    for r in range(dm + 1, cols[0] + 1):
        rows.append(sum(1 for c in cols if c >= r))
    return Partition(rows)


def glaisher_reduce(lam, m):
    """Strip out full groups of ``m`` equal columns, banking them as parts of ``k * m``.

    Returns ``(kept, banked)`` where ``kept`` has all gaps below ``m``
    and ``banked`` has all parts divisible by ``m``, with sizes adding up
    to the size of ``lam``.
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    heights = Counter(lam.conjugate().parts)
    kept_cols = []
    banked = []
    for h, count in heights.items():
        kept_cols.extend([h] * (count % m))
        banked.extend([h * m] * (count // m))
    kept = Partition(sorted(kept_cols, reverse=True)).conjugate()
    return kept, Partition(sorted(banked, reverse=True))


def glaisher_expand(kept, banked, m):
    """Inverse of :func:`glaisher_reduce`: reinsert each banked part as ``m`` equal columns."""
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    if not in_class(kept, "F", m):
        raise ValueError(f"{kept.parts} has a gap of {m} or more, so it is not reduced")
    cols = list(kept.conjugate().parts)
    for p in banked.parts:
        if p % m:
            raise ValueError(f"banked part {p} is not divisible by {m}")
        cols.extend([p // m] * m)
    return Partition(sorted(cols, reverse=True)).conjugate()


def decompose_multiplicity(mu, m):
    """Split each part's multiplicity into (multiplicity mod ``m``, the rest).

    Returns ``(low, bulk)``: ``low`` keeps each part with its
    multiplicity reduced mod ``m`` (so ``low`` has multiplicities below
    ``m``) and ``bulk`` keeps the complementary ``m * floor(count / m)``
    copies (so every multiplicity in ``bulk`` is divisible by ``m``).
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    low = []
    bulk = []
    for size, grp in groupby(mu.parts):
        count = len(tuple(grp))
        low.extend([size] * (count % m))
        bulk.extend([size] * (count - count % m))
    return Partition(low), Partition(bulk)


def merge_partitions(a, b):
    """Union of two partitions as multisets of parts."""
    return Partition(sorted(a.parts + b.parts, reverse=True))
