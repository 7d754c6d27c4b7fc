import pytest

from agband.construct import gbar_derived, standard_g, tower_level
from agband.decompose import (
    BandDecomposition,
    DecompositionWitness,
    IntersectionAudit,
    Partition,
    check_band_decomposition,
    copy_intersection_audit,
    extension_block_decomposition,
    g_copy_partition,
    singleton_partition,
)
from agband.errors import ResourceLimitError, SearchInvariantError, VarietyError
from agband.groupoid import FiniteGroupoid
from agband.laws import check_variety, get_variety
from agband.morphisms import iso_search

G = standard_g()


def test_partition_validates_cover_and_disjointness():
    p = Partition(blocks=((0, 1), (2, 3)))
    assert p.order == 4
    assert p.block_of()[3] == 1
    with pytest.raises(ValueError):
        Partition(blocks=((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        Partition(blocks=((0, 1), (3,)))
    with pytest.raises(ValueError):
        Partition(blocks=((0, 1), ()))


def test_singleton_partition_shape():
    p = singleton_partition(3)
    assert p.blocks == ((0,), (1,), (2,))


def test_band_decomposition_of_a_semilattice_of_blocks():
    gbar = gbar_derived()
    quarters = Partition(blocks=tuple(tuple(range(4 * b, 4 * b + 4)) for b in range(4)))
    result = check_band_decomposition(gbar, quarters)
    assert isinstance(result, BandDecomposition)
    assert result.quotient.order == 4
    assert result.quotient.labels == ("B0", "B1", "B2", "B3")
    assert result.quotient.table == G.table


def test_band_decomposition_reports_a_smearing_witness():
    halves = Partition(blocks=((0, 1), (2, 3)))
    result = check_band_decomposition(G, halves)
    assert isinstance(result, DecompositionWitness)
    u, v, u2, v2 = result.u, result.v, result.u2, result.v2
    where = halves.block_of()
    assert where[u] == where[u2]
    assert where[v] == where[v2]
    assert where[G.table[u][v]] != where[G.table[u2][v2]]


def test_quotient_of_an_ag_model_stays_in_the_variety():
    gbar = gbar_derived()
    quarters = Partition(blocks=tuple(tuple(range(4 * b, 4 * b + 4)) for b in range(4)))
    result = check_band_decomposition(gbar, quarters)
    assert check_variety(result.quotient, get_variety("ag")).holds


def test_extension_block_decomposition_levels():
    one = extension_block_decomposition(1)
    assert one.partition == singleton_partition(4) or len(one.partition.blocks) in (1, 4)
    two = extension_block_decomposition(2)
    assert len(two.partition.blocks) == 4
    assert all(len(b) == 4 for b in two.partition.blocks)
    assert iso_search(two.quotient, G) is not None
    with pytest.raises(ValueError):
        extension_block_decomposition(0)


def test_extension_blocks_are_copies_of_the_previous_level():
    three = extension_block_decomposition(3)
    g2 = tower_level(2)
    for block in three.partition.blocks:
        sub = tower_level(3).restrict(block)
        assert iso_search(sub, g2) is not None


def test_g_copy_partition_tiles_each_tower_level():
    for lvl, blocks in ((1, 1), (2, 4), (3, 16)):
        p = g_copy_partition(tower_level(lvl))
        assert len(p.blocks) == blocks
        assert all(len(b) == 4 for b in p.blocks)


def test_g_copy_partition_rejects_wrong_orders_and_varieties():
    with pytest.raises(ValueError):
        g_copy_partition(FiniteGroupoid(table=((0,) * 5,) * 5))
    with pytest.raises(VarietyError):
        g_copy_partition(gbar_derived())


def test_intersection_audit_on_the_small_model():
    audit = copy_intersection_audit(G)
    assert isinstance(audit, IntersectionAudit)
    assert audit.ok
    # every pair of distinct generators spans the whole thing, so all the
    # pairwise intersections have size 4
    assert set(audit.distribution) == {4}
    assert audit.nonstandard_pairs == 0


def test_intersection_audit_sees_all_three_sizes():
    audit = copy_intersection_audit(tower_level(2))
    assert audit.ok
    assert set(audit.distribution) == {0, 1, 4}
    # 120 unordered generator pairs, six per copy
    assert audit.generator_pairs == 120
    assert audit.distinct_copies == 20


def test_intersection_audit_order_limit():
    with pytest.raises(ResourceLimitError):
        copy_intersection_audit(tower_level(4))


def test_intersection_audit_requires_the_variety():
    with pytest.raises(VarietyError):
        copy_intersection_audit(gbar_derived())
