"""Constructions of anti-rectangular bands.

The pieces: the standard order-4 model on two generators, an order-quadrupling
extension that adjoins one fresh generator, the tower of iterated extensions
together with the product of its direct limit, the proper sub-band witnessing
self-embedding, and an order-16 table that is cancellative without being
anti-rectangular.  The order-16 table is kept in two forms, one derived from
its block description and one transcribed from its printed source, so the two
can be diffed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .errors import VarietyError
from .groupoid import FiniteGroupoid
from .laws import VARIETIES, check_variety, eval_term, parse_term

# ---------------------------------------------------------------------------
# the standard order-4 model

_G_TABLE = (
    (0, 2, 3, 1),
    (3, 1, 0, 2),
    (1, 3, 2, 0),
    (2, 0, 1, 3),
)


def standard_g() -> FiniteGroupoid:
    """The order-4 model generated by two elements a and b."""
    return FiniteGroupoid(_G_TABLE, ("a", "b", "ab", "ba"))


# ---------------------------------------------------------------------------
# the order-quadrupling extension
#
# extend(h, a, x) has carrier h + xh + hx + (ax)h, indexed in four blocks of
# |h|.  The fresh generator x is the AX-block element at the designated
# position, since (ax)a = x under the anti-rectangular law.  Each of the 16
# block pairs multiplies into a single block, with the inner index given by a
# fixed word in the base product; the words below are written for row inner
# index i, column inner index j and designated element a.


class Block(IntEnum):
    BASE = 0
    X_LEFT = 1  # x * h
    X_RIGHT = 2  # h * x
    AX = 3  # (a * x) * h


@dataclass(frozen=True)
class TowerElement:
    """Position of one element inside a tower level."""

    level: int
    index: int
    block: Block
    base_index: int


def tower_element(level: int, index: int) -> TowerElement:
    if level < 0 or not 0 <= index < 4 ** level:
        raise IndexError(f"no element {index} at level {level}")
    if level == 0:
        return TowerElement(0, 0, Block.BASE, 0)
    quarter = 4 ** (level - 1)
    return TowerElement(level, index, Block(index // quarter), index % quarter)


_EXT_CELLS = {
    (0, 0): (0, lambda m, i, j, a: m[i][j]),
    (0, 1): (3, lambda m, i, j, a: m[m[j][a]][i]),
    (0, 2): (1, lambda m, i, j, a: m[j][i]),
    (0, 3): (2, lambda m, i, j, a: m[m[i][j]][m[a][i]]),
    (1, 0): (2, lambda m, i, j, a: m[j][i]),
    (1, 1): (1, lambda m, i, j, a: m[i][j]),
    (1, 2): (3, lambda m, i, j, a: m[j][m[a][i]]),
    (1, 3): (0, lambda m, i, j, a: m[a][m[i][j]]),
    (2, 0): (3, lambda m, i, j, a: m[m[i][a]][m[j][i]]),
    (2, 1): (0, lambda m, i, j, a: m[j][i]),
    (2, 2): (2, lambda m, i, j, a: m[i][j]),
    (2, 3): (1, lambda m, i, j, a: m[m[a][i]][j]),
    (3, 0): (1, lambda m, i, j, a: m[i][m[j][a]]),
    (3, 1): (2, lambda m, i, j, a: m[m[i][j]][a]),
    (3, 2): (0, lambda m, i, j, a: m[m[a][i]][m[j][a]]),
    (3, 3): (3, lambda m, i, j, a: m[i][j]),
}


def _wrap(s: str) -> str:
    return f"({s})" if "*" in s else s


def _mul_label(u: str, v: str) -> str:
    return f"{_wrap(u)}*{_wrap(v)}"


def extend(base: FiniteGroupoid, designated: int = 0,
           x_label: str | None = None) -> FiniteGroupoid:
    """Adjoin a fresh generator to ``base`` at the designated element.

    Quadruples the order.  The first block of the result is ``base`` itself
    (same indices, same labels), so iterating the construction gives a chain
    of prefix-compatible tables.  The base must already satisfy the three
    defining laws; they then carry over to the result.
    """
    n = base.order
    if n < 4:
        raise ValueError(f"base must have order at least 4, got {n}")
    if not 0 <= designated < n:
        raise IndexError(f"designated element {designated} out of range")
    if x_label is None:
        x_label = "x"
    if x_label in base.labels:
        raise ValueError(f"label {x_label!r} already used in the base")
    report = check_variety(base, VARIETIES["aragb"])
    if not report.holds:
        bad = report.first_failure
        raise VarietyError(
            f"base violates '{bad.identity}' at {bad.counterexample}",
            report=report,
        )
    m = base.table
    a = designated
    table = [[0] * (4 * n) for _ in range(4 * n)]
    for rb in range(4):
        for cb in range(4):
            ob, word = _EXT_CELLS[(rb, cb)]
            off = ob * n
            for i in range(n):
                row = table[rb * n + i]
                col0 = cb * n
                for j in range(n):
                    row[col0 + j] = off + word(m, i, j, a)
    ax = _mul_label(base.labels[a], x_label)
    labels = (
        list(base.labels)
        + [_mul_label(x_label, s) for s in base.labels]
        + [_mul_label(s, x_label) for s in base.labels]
        + [x_label if i == a else _mul_label(ax, base.labels[i]) for i in range(n)]
    )
    return FiniteGroupoid(tuple(tuple(r) for r in table), tuple(labels))


# ---------------------------------------------------------------------------
# the tower and its limit

_tower_cache: list[FiniteGroupoid] = []


def tower(n: int) -> tuple[FiniteGroupoid, ...]:
    """Levels 0..n of the iterated extension.

    Level 0 is the one-element band, level 1 the standard order-4 model, and
    each later level extends the previous one at its first element with a
    generator named x1, x2, ...  Level k has order 4**k, and every level's
    table is the top-left corner of the next one's.
    """
    if n < 0:
        raise IndexError("tower levels start at 0")
    if not _tower_cache:
        _tower_cache.append(FiniteGroupoid(((0,),), ("a",)))
        _tower_cache.append(standard_g())
    while len(_tower_cache) <= n:
        k = len(_tower_cache)
        _tower_cache.append(extend(_tower_cache[k - 1], 0, f"x{k - 1}"))
    return tuple(_tower_cache[: n + 1])


def tower_level(n: int) -> FiniteGroupoid:
    """Just level n of the tower."""
    return tower(n)[n]


def limit_product(i: int, j: int) -> int:
    """Product of elements i and j of the union of all tower levels.

    Prefix compatibility makes this well defined: any level whose order
    exceeds both indices gives the same answer.
    """
    if i < 0 or j < 0:
        raise IndexError("indices must be nonnegative")
    level = 1
    while 4 ** level <= max(i, j):
        level += 1
    return tower_level(level).table[i][j]


def adjoined_generator_index(level: int) -> int:
    """Ambient index of the generator adjoined at the given level (>= 2)."""
    if level < 2:
        raise IndexError("levels below 2 adjoin no generator")
    return 3 * 4 ** (level - 1)


def j_subband(n: int) -> FiniteGroupoid:
    """The order-4**n sub-band of level n+1 generated by element 0 together
    with the generators adjoined at levels 2..n+1.  Proper in its ambient
    level, yet isomorphic to level n: the self-embedding witness.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    g = tower_level(n + 1)
    seeds = {0} | {adjoined_generator_index(k) for k in range(2, n + 2)}
    carrier = sorted(g.generated_subgroupoid(seeds))
    return g.restrict(carrier)


# ---------------------------------------------------------------------------
# the order-16 cancellative near-miss
#
# Four blocks of four: each block is a copy of the standard model in a
# twisted parameterization, blocks multiply like the standard model, and the
# entry inside the target block is a fixed word in the row and column
# parameters evaluated back in the base copy (designated elements a, x).

_BLOCK_SYMBOLS = ("A", "B", "AB", "BA")

# Row r of the parameter grid lists, position by position, which base-copy
# element parameterizes each element of block r.
_GBAR_PARAMS = (
    (0, 1, 2, 3),
    (3, 0, 2, 1),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

GBAR_LABELS = (
    "a", "x", "ax", "xa",
    "b", "y", "by", "yb",
    "ab", "xy", "(ab)(xy)", "(xy)(ab)",
    "ba", "yx", "(ba)(yx)", "(yx)(ba)",
)

# Entry words per (row block, column block): g is the row element's
# parameter, h the column element's, and a, x are the base copy's designated
# elements (indices 0 and 1).
_GBAR_WORDS = {
    ("A", "A"): "gh",
    ("A", "B"): "x(g(ah))",
    ("A", "AB"): "(a(hg))x",
    ("A", "BA"): "(ga)h",
    ("B", "A"): "(xa)(hg)",
    ("B", "B"): "gh",
    ("B", "AB"): "(xg)(ha)",
    ("B", "BA"): "(gh)a",
    ("AB", "A"): "(ha)(gh)",
    ("AB", "B"): "(hg)(xa)",
    ("AB", "AB"): "gh",
    ("AB", "BA"): "h((ag)x)",
    ("BA", "A"): "hg",
    ("BA", "B"): "h(gx)",
    ("BA", "AB"): "g(xh)",
    ("BA", "BA"): "gh",
}


@dataclass(frozen=True)
class GbarScaffold:
    """Block-level description the order-16 table is built from."""

    base_copy: FiniteGroupoid
    block_table: tuple[tuple[str, ...], ...]
    component_formulas: dict[tuple[str, str], str]


def gbar_scaffold() -> GbarScaffold:
    base = FiniteGroupoid(_G_TABLE, ("a", "x", "ax", "xa"))
    block_table = tuple(
        tuple(_BLOCK_SYMBOLS[v] for v in row) for row in _G_TABLE
    )
    return GbarScaffold(base, block_table, dict(_GBAR_WORDS))


def gbar_derived() -> FiniteGroupoid:
    """The order-16 table built from its block description (ground truth)."""
    scaffold = gbar_scaffold()
    m = scaffold.base_copy.table
    sym_index = {s: k for k, s in enumerate(_BLOCK_SYMBOLS)}
    terms = {
        key: parse_term(src) for key, src in scaffold.component_formulas.items()
    }
    params = _GBAR_PARAMS
    inv = tuple({v: p for p, v in enumerate(row)} for row in params)
    table = [[0] * 16 for _ in range(16)]
    for rb in range(4):
        rsym = _BLOCK_SYMBOLS[rb]
        for cb in range(4):
            ob = sym_index[scaffold.block_table[rb][cb]]
            term = terms[(rsym, _BLOCK_SYMBOLS[cb])]
            for rp in range(4):
                for cp in range(4):
                    env = {"g": params[rb][rp], "h": params[cb][cp],
                           "a": 0, "x": 1}
                    value = eval_term(term, m, env)
                    table[rb * 4 + rp][cb * 4 + cp] = ob * 4 + inv[ob][value]
    return FiniteGroupoid(tuple(tuple(r) for r in table), GBAR_LABELS)


# Transcribed 1-based form of the same table as printed in its source.  Kept
# verbatim, flaws included: the fourth row lists 12 twice and omits 15, so
# that row is not a permutation.  Diff against gbar_derived() to locate the
# bad cell.
_TABLE3_ROWS = (
    (1, 3, 4, 2, 9, 11, 12, 10, 16, 14, 13, 15, 6, 8, 7, 5),
    (4, 2, 1, 3, 12, 10, 9, 11, 13, 15, 16, 14, 7, 5, 6, 8),
    (2, 4, 3, 1, 10, 12, 11, 9, 15, 13, 14, 16, 5, 7, 8, 6),
    (3, 1, 2, 4, 11, 9, 10, 12, 14, 16, 12, 13, 8, 6, 5, 7),
    (13, 15, 16, 14, 5, 7, 8, 6, 2, 4, 3, 1, 12, 10, 9, 11),
    (16, 14, 13, 15, 8, 6, 5, 7, 3, 1, 2, 4, 9, 11, 12, 10),
    (14, 16, 15, 13, 6, 8, 7, 5, 1, 3, 4, 2, 11, 9, 10, 12),
    (15, 13, 14, 16, 7, 5, 6, 8, 4, 2, 1, 3, 10, 12, 11, 9),
    (6, 8, 7, 5, 13, 15, 16, 14, 9, 11, 12, 10, 4, 2, 1, 3),
    (7, 5, 6, 8, 16, 14, 13, 15, 12, 10, 9, 11, 1, 3, 4, 2),
    (5, 7, 8, 6, 14, 16, 15, 13, 10, 12, 11, 9, 3, 1, 2, 4),
    (8, 6, 5, 7, 15, 13, 14, 16, 11, 9, 10, 12, 2, 4, 3, 1),
    (9, 11, 12, 10, 2, 4, 3, 1, 8, 6, 5, 7, 13, 15, 16, 14),
    (12, 10, 9, 11, 3, 1, 2, 4, 5, 7, 8, 6, 16, 14, 13, 15),
    (10, 12, 11, 9, 1, 3, 4, 2, 7, 5, 6, 8, 14, 16, 15, 13),
    (11, 9, 10, 12, 4, 2, 1, 3, 6, 8, 7, 5, 15, 13, 14, 16),
)


def gbar_table3() -> FiniteGroupoid:
    """The transcribed printed form of the order-16 table (0-based).

    A fixture for diffing only; carries no validity guarantee.
    """
    table = tuple(tuple(v - 1 for v in row) for row in _TABLE3_ROWS)
    return FiniteGroupoid(table, GBAR_LABELS)


def diff_tables(a: FiniteGroupoid, b: FiniteGroupoid) -> tuple[tuple[int, int, int, int], ...]:
    """Cells where two same-order tables disagree, as (row, col, left, right),
    in row-major order.  Empty iff the tables are identical."""
    if a.order != b.order:
        raise ValueError(f"orders differ: {a.order} vs {b.order}")
    n = a.order
    return tuple(
        (i, j, a.table[i][j], b.table[i][j])
        for i in range(n)
        for j in range(n)
        if a.table[i][j] != b.table[i][j]
    )


# ---------------------------------------------------------------------------
# a square-order witness family for the law (xy)(yz) = y


def square_pair_model(k: int) -> FiniteGroupoid:
    """Order k*k model of (xy)(yz) = y: pairs multiply by (a,b)(c,d) = (b,c)."""
    if k < 1:
        raise ValueError("k must be positive")
    n = k * k
    table = tuple(
        tuple((i % k) * k + (j // k) for j in range(n)) for i in range(n)
    )
    labels = tuple(f"p{i // k}{i % k}" for i in range(n))
    return FiniteGroupoid(table, labels)
