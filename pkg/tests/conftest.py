from itertools import combinations

from schmidtq import Partition


def residue_sets(m, include_m):
    """All S with 1 in S, ascending, bounded by m or m-1."""
    upper = m if include_m else m - 1
    out = []
    for k in range(upper):
        for extra in combinations(range(2, upper + 1), k):
            out.append((1,) + extra)
    return out


def descending(parts):
    return Partition(tuple(sorted(parts, reverse=True)))
