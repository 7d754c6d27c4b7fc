"""Finite groupoids as immutable Cayley tables.

Elements are the indices 0..n-1.  Labels are display strings only and never
influence multiplication; every operation works on indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ClosureError


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(n))


@dataclass(frozen=True)
class CancellativityReport:
    left: bool
    right: bool
    # witness triples (x, a, b): x*a == x*b (left) or a*x == b*x (right), a != b
    left_witness: tuple[int, int, int] | None = None
    right_witness: tuple[int, int, int] | None = None

    @property
    def both(self) -> bool:
        return self.left and self.right


@dataclass(frozen=True)
class FiniteGroupoid:
    """An order-n magma given by its n x n multiplication table."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        if not table:
            raise ValueError("order must be at least 1")
        n = len(table)
        labels = self.labels
        if labels is None:
            labels = default_labels(n)
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n or any(not s for s in labels):
            raise ValueError("labels must be distinct and nonempty")
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValueError(f"entry ({i}, {j}) = {v!r} out of range")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def product(self, i: int, j: int) -> int:
        n = self.order
        if not (isinstance(i, int) and 0 <= i < n):
            raise IndexError(f"left index {i!r} out of range for order {n}")
        if not (isinstance(j, int) and 0 <= j < n):
            raise IndexError(f"right index {j!r} out of range for order {n}")
        return self.table[i][j]

    def opposite(self) -> "FiniteGroupoid":
        """Transpose of the table; same carrier, same labels."""
        n = self.order
        return FiniteGroupoid(
            table=tuple(tuple(self.table[j][i] for j in range(n)) for i in range(n)),
            labels=self.labels,
        )

    def generated_subgroupoid(self, seeds) -> set[int]:
        """Least subset containing ``seeds`` and closed under the product."""
        seeds = set(seeds)
        if not seeds:
            raise ValueError("seed set must be nonempty")
        n = self.order
        for s in seeds:
            if not (isinstance(s, int) and 0 <= s < n):
                raise IndexError(f"seed {s!r} out of range for order {n}")
        t = self.table
        closed = set(seeds)
        work = list(closed)
        while work:
            u = work.pop()
            for v in tuple(closed):
                for w in (t[u][v], t[v][u]):
                    if w not in closed:
                        closed.add(w)
                        work.append(w)
        return closed

    def is_cancellative(self) -> CancellativityReport:
        """Row and column injectivity, with the first failure as a witness."""
        n = self.order
        t = self.table
        left = True
        right = True
        lw = rw = None
        for x in range(n):
            seen: dict[int, int] = {}
            for a in range(n):
                v = t[x][a]
                if v in seen:
                    left, lw = False, (x, seen[v], a)
                    break
                seen[v] = a
            if not left:
                break
        for x in range(n):
            seen = {}
            for a in range(n):
                v = t[a][x]
                if v in seen:
                    right, rw = False, (x, seen[v], a)
                    break
                seen[v] = a
            if not right:
                break
        return CancellativityReport(left, right, lw, rw)

    def restrict(self, subset) -> "FiniteGroupoid":
        """Subgroupoid on ``subset``, re-indexed in ascending index order.

        Raises ClosureError if some product of two members escapes the subset.
        """
        sub = sorted(set(subset))
        if not sub:
            raise ValueError("subset must be nonempty")
        n = self.order
        for s in sub:
            if not (isinstance(s, int) and 0 <= s < n):
                raise IndexError(f"index {s!r} out of range for order {n}")
        pos = {v: k for k, v in enumerate(sub)}
        t = self.table
        for i in sub:
            for j in sub:
                if t[i][j] not in pos:
                    raise ClosureError(
                        f"subset not closed: {i} * {j} = {t[i][j]} escapes",
                        witness=(i, j, t[i][j]),
                    )
        return FiniteGroupoid(
            table=tuple(tuple(pos[t[i][j]] for j in sub) for i in sub),
            labels=tuple(self.labels[i] for i in sub),
        )

    def relabel(self, perm) -> "FiniteGroupoid":
        """Carrier permutation: element i becomes perm[i].  Labels follow."""
        n = self.order
        perm = tuple(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation of the carrier")
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        t = self.table
        return FiniteGroupoid(
            table=tuple(
                tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
            ),
            labels=tuple(self.labels[inv[i]] for i in range(n)),
        )


def to_json(g: FiniteGroupoid) -> str:
    doc = {"order": g.order, "labels": list(g.labels), "table": [list(r) for r in g.table]}
    return json.dumps(doc, indent=2)


def from_json(text: str) -> FiniteGroupoid:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict) or not {"order", "labels", "table"} <= set(doc):
        raise ValueError('expected an object with "order", "labels" and "table"')
    g = FiniteGroupoid(table=doc["table"], labels=doc["labels"])
    if g.order != doc["order"]:
        raise ValueError(f'"order" is {doc["order"]} but the table has {g.order} rows')
    return g


def render_text(g: FiniteGroupoid, corner: str = "*") -> str:
    """Whitespace-aligned table with labelled rows and columns."""
    cells = [[corner, *g.labels]]
    for i in range(g.order):
        cells.append([g.labels[i], *(g.labels[v] for v in g.table[i])])
    widths = [max(len(row[c]) for row in cells) for c in range(g.order + 1)]
    lines = ["  ".join(row[c].ljust(widths[c]) for c in range(g.order + 1)).rstrip()
             for row in cells]
    return "\n".join(lines)
