import json

import pytest
from hypothesis import given, strategies as st

from agband.errors import ClosureError
from agband.groupoid import (
    FiniteGroupoid,
    default_labels,
    from_json,
    render_text,
    to_json,
)

LEFT_ZERO_3 = FiniteGroupoid(table=((0, 0, 0), (1, 1, 1), (2, 2, 2)))
Z3 = FiniteGroupoid(table=tuple(tuple((i + j) % 3 for j in range(3)) for i in range(3)))


def small_tables(max_order=5):
    def build(n):
        return st.lists(
            st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        ).map(lambda rows: tuple(tuple(r) for r in rows))

    return st.integers(1, max_order).flatmap(build)


def test_rejects_ragged_table():
    with pytest.raises(ValueError):
        FiniteGroupoid(table=((0, 1), (0,)))


def test_rejects_out_of_range_entry():
    with pytest.raises(ValueError):
        FiniteGroupoid(table=((0, 2), (1, 0)))


def test_rejects_empty_table():
    with pytest.raises(ValueError):
        FiniteGroupoid(table=())


def test_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        FiniteGroupoid(table=((0, 1), (1, 0)), labels=("x", "x"))


def test_default_labels_fill_in():
    g = FiniteGroupoid(table=((0, 1), (1, 0)))
    assert g.labels == default_labels(2) == ("e0", "e1")


def test_product_bounds():
    with pytest.raises(IndexError):
        Z3.product(0, 3)
    with pytest.raises(IndexError):
        Z3.product(-1, 0)
    assert Z3.product(1, 2) == 0


@given(small_tables())
def test_opposite_is_an_involution(table):
    g = FiniteGroupoid(table=table)
    assert g.opposite().opposite().table == g.table


def test_opposite_transposes():
    g = LEFT_ZERO_3.opposite()
    assert all(g.table[i][j] == j for i in range(3) for j in range(3))


def test_generated_subgroupoid_grows_to_closure():
    # in Z3 any single nonzero element generates everything
    assert Z3.generated_subgroupoid({1}) == {0, 1, 2}
    assert LEFT_ZERO_3.generated_subgroupoid({2}) == {2}


def test_generated_subgroupoid_rejects_bad_seeds():
    with pytest.raises(ValueError):
        Z3.generated_subgroupoid(set())
    with pytest.raises(IndexError):
        Z3.generated_subgroupoid({5})


def test_cancellativity_report_witnesses():
    rep = LEFT_ZERO_3.is_cancellative()
    assert not rep.left and rep.right is False or not rep.both
    # row 0 repeats 0 at columns 0 and 1
    assert rep.left_witness == (0, 0, 1)
    ok = Z3.is_cancellative()
    assert ok.both and ok.left_witness is None and ok.right_witness is None


def test_restrict_reindexes_and_checks_closure():
    sub = LEFT_ZERO_3.restrict([0, 2])
    assert sub.order == 2
    assert sub.table == ((0, 0), (1, 1))
    assert sub.labels == ("e0", "e2")
    with pytest.raises(ClosureError) as exc:
        Z3.restrict([1, 2])
    assert exc.value.witness == (1, 1, 2) or exc.value.witness[2] not in (1, 2)


def test_relabel_moves_products_with_elements():
    perm = (2, 0, 1)
    h = Z3.relabel(perm)
    for i in range(3):
        for j in range(3):
            assert h.table[perm[i]][perm[j]] == perm[Z3.table[i][j]]
    assert h.labels[perm[0]] == Z3.labels[0]


def test_relabel_rejects_non_permutation():
    with pytest.raises(ValueError):
        Z3.relabel((0, 0, 1))


@given(small_tables(), st.randoms(use_true_random=False))
def test_relabel_round_trip(table, rng):
    g = FiniteGroupoid(table=table)
    perm = list(range(g.order))
    rng.shuffle(perm)
    inv = [0] * g.order
    for i, p in enumerate(perm):
        inv[p] = i
    assert g.relabel(perm).relabel(inv).table == g.table


@given(small_tables())
def test_json_round_trip(table):
    g = FiniteGroupoid(table=table)
    assert from_json(to_json(g)).table == g.table


def test_from_json_validates_shape():
    with pytest.raises(ValueError):
        from_json("[1, 2]")
    with pytest.raises(ValueError):
        from_json("not json at all")
    doc = json.loads(to_json(Z3))
    doc["order"] = 7
    with pytest.raises(ValueError):
        from_json(json.dumps(doc))


def test_render_text_aligns_columns():
    text = render_text(Z3)
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("*")
    assert "e1" in lines[0] and "e2" in lines[2]
