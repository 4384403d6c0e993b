import pytest
from hypothesis import given
from hypothesis import strategies as st

from pfq.errors import NotContained
from pfq.partitions import (HAS_BLOCK, StrictPartition, as_partition, connected_components,
                            contains, count_strict, enumerate_strict, has_block, parse_parts,
                            shifted_diagram, skew_cells, strict_of_weight, strip_decompose)

# number of partitions of w into distinct parts, w = 0..15
DISTINCT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27]

strict = st.sets(st.integers(1, 9), max_size=4).map(lambda s: StrictPartition(tuple(sorted(s, reverse=True))))


def test_validation():
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    with pytest.raises(ValueError):
        StrictPartition((3, 0))
    assert StrictPartition.parse("(4, 2,1)").parts == (4, 2, 1)
    assert StrictPartition.parse("").parts == ()
    assert parse_parts("[3,1]") == (3, 1)


def test_indexing_pads_with_zero():
    lam = StrictPartition((5, 2))
    assert (lam[0], lam[1], lam[2], lam[7]) == (5, 2, 0, 0)
    assert lam.padded() == (5, 2, 0)
    assert lam.weight == 7 and lam.length == 2


def test_distinct_part_counts():
    assert [len(strict_of_weight(w)) for w in range(16)] == DISTINCT_COUNTS
    assert [count_strict(w, w) for w in range(16)] == DISTINCT_COUNTS


@given(st.integers(0, 14), st.integers(0, 5))
def test_count_matches_enumeration(w, l):
    assert count_strict(w, l) == len(strict_of_weight(w, l))


def test_enumeration_order():
    got = [p.parts for p in enumerate_strict(4, 2)]
    assert got == [(), (1,), (2,), (3,), (2, 1), (4,), (3, 1)]


def test_shifted_diagram():
    assert shifted_diagram((3, 1)) == {(1, 1), (1, 2), (1, 3), (2, 2)}


@given(strict)
def test_diagram_size_is_weight(lam):
    assert len(shifted_diagram(lam)) == lam.weight


@given(strict, strict)
def test_containment_is_diagram_inclusion(lam, mu):
    assert contains(lam, mu) == (shifted_diagram(mu) <= shifted_diagram(lam))


def test_strips_and_blocks():
    assert strip_decompose((3, 2), (2,)).strips == ((1, 2),)
    # cells (1,3) and (2,2) touch only at a corner
    assert strip_decompose((3, 1), (2,)).strips == ((1, 1), (2, 2))
    assert strip_decompose((4, 1), (2, 1)).strips == ((1, 1),)
    assert strip_decompose((4, 1), (2, 1)).fixed == (2,)
    assert strip_decompose((4, 3), (2,)) is HAS_BLOCK
    # two rows below mu count as a block
    assert has_block((2, 1), ())
    with pytest.raises(NotContained):
        strip_decompose((2,), (3,))


@given(strict, strict)
def test_block_free_means_every_strip_is_connected(lam, mu):
    if not contains(lam, mu) or len(lam) > len(mu) + 1:
        return
    dec = strip_decompose(lam, mu)
    cells = skew_cells(lam, mu)
    if dec is HAS_BLOCK:
        assert any((i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
                   for i, j in cells)
    else:
        assert len(connected_components(cells)) == len(dec.strips)


def test_as_partition_accepts_several_forms():
    assert as_partition("3,1") == as_partition((3, 1)) == as_partition(StrictPartition((3, 1)))
