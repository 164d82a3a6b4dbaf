"""Colored partitions with residue-keyed palettes, and overpartitions."""

import pytest

from schmidtq import (
    ColoredPartition,
    Overpartition,
    admissible_colors,
    color_counts,
    colored_partitions,
    cs_validate,
    over_stats,
    overpartitions,
    partitions_of,
)


FIG_IMAGE = ColoredPartition(((7, 1), (6, 5), (6, 4), (6, 3), (2, 2)))


def test_admissible_colors():
    # i = 3 residues: sizes 1 mod 3 take color 1, sizes 2 mod 3 take
    # color 2, sizes 0 mod 3 take colors 3..5.
    assert list(admissible_colors(7, 5, (1, 2, 3), 6)) == [1]
    assert list(admissible_colors(2, 5, (1, 2, 3), 6)) == [2]
    assert list(admissible_colors(6, 5, (1, 2, 3), 6)) == [3, 4, 5]
    assert list(admissible_colors(1, 2, (1,), 3)) == [1, 2]
    assert list(admissible_colors(1, 2, (1,), 2)) == [1]


def test_palette_validation():
    with pytest.raises(ValueError):
        admissible_colors(1, 2, (1,), 4)  # top must be m or m+1
    with pytest.raises(ValueError):
        admissible_colors(1, 2, (1, 2), 2)  # residues must stay below top
    with pytest.raises(ValueError):
        admissible_colors(0, 2, (1,), 3)


def test_cs_validate():
    assert cs_validate(FIG_IMAGE, 5, (1, 2, 3), 6)
    assert not cs_validate(ColoredPartition(((2, 1),)), 5, (1, 2, 3), 6)
    assert cs_validate(ColoredPartition(()), 5, (1, 2, 3), 6)


def test_color_counts():
    assert color_counts(FIG_IMAGE, 5) == (1, 1, 1, 1, 1)
    assert color_counts(ColoredPartition(((1, 1), (1, 1))), 2) == (2, 0)
    with pytest.raises(ValueError):
        color_counts(ColoredPartition(((1, 3),)), 2)


def test_colored_partition_canonical_form():
    mu = ColoredPartition(((2, 1), (7, 1), (6, 5), (6, 3)))
    assert mu.parts == ((7, 1), (6, 5), (6, 3), (2, 1))
    assert mu.size == 21
    assert mu.to_text() == "7_1,6_5,6_3,2_1"
    assert ColoredPartition.from_text("7_1,6_5,6_3,2_1") == mu
    assert ColoredPartition.from_text("") == ColoredPartition(())
    with pytest.raises(ValueError):
        ColoredPartition.from_text("3_")
    with pytest.raises(ValueError):
        ColoredPartition(((0, 1),))
    with pytest.raises(ValueError):
        ColoredPartition(((1, 0),))


def test_two_colored_count_of_three():
    listing = list(colored_partitions(3, 2, (1,), 3))
    assert len(listing) == 10
    assert len(set(listing)) == 10
    for mu in listing:
        assert cs_validate(mu, 2, (1,), 3)
        assert mu.size == 3


def test_colored_counts_match_partition_pairs():
    # With two unrestricted colors, a colored partition is exactly a
    # pair of ordinary partitions.
    pcount = [sum(1 for _ in partitions_of(k)) for k in range(11)]
    for n in range(11):
        want = sum(pcount[k] * pcount[n - k] for k in range(n + 1))
        assert sum(1 for _ in colored_partitions(n, 2, (1,), 3)) == want


def test_single_color_collapses_to_plain_partitions():
    for n in range(9):
        got = sum(1 for _ in colored_partitions(n, 2, (1,), 2))
        assert got == sum(1 for _ in partitions_of(n))


def test_enumeration_is_deterministic_and_valid():
    for n in range(7):
        a = [mu.to_text() for mu in colored_partitions(n, 3, (1, 2), 4)]
        b = [mu.to_text() for mu in colored_partitions(n, 3, (1, 2), 4)]
        assert a == b
        assert len(a) == len(set(a))
        for mu in colored_partitions(n, 3, (1, 2), 4):
            assert cs_validate(mu, 3, (1, 2), 4)


def test_overpartition_construction():
    mu = Overpartition.from_flagged_parts(((3, True), (2, False), (1, True)))
    assert mu.size == 6
    assert len(mu) == 3
    assert mu.overlined_count == 2
    assert over_stats(mu) == (2, 3)
    assert mu.to_text() == "3',2,1'"
    assert Overpartition.from_text("3',2,1'") == mu
    with pytest.raises(ValueError):
        Overpartition.from_flagged_parts(((2, True), (2, True)))
    with pytest.raises(ValueError):
        Overpartition.from_text("1,2")  # must be weakly decreasing
    with pytest.raises(ValueError):
        Overpartition.from_text("2,2'")  # flag only on the first copy


def test_overpartitions_of_three():
    texts = {mu.to_text() for mu in overpartitions(3)}
    assert texts == {
        "3", "3'", "2,1", "2',1", "2,1'", "2',1'", "1,1,1", "1',1,1",
    }


def test_overpartition_counts():
    # First occurrences of each part size may carry a flag, so the count
    # is sum over plain partitions of 2^(number of distinct sizes).
    want = [1, 2, 4, 8, 14, 24, 40, 64, 100]
    got = [sum(1 for _ in overpartitions(n)) for n in range(9)]
    assert got == want


def test_overpartition_enumeration_no_duplicates():
    for n in range(9):
        listing = list(overpartitions(n))
        assert len(listing) == len(set(listing))
