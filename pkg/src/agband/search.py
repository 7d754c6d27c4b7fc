"""Exhaustive search for finite models of an identity variety.

Backtracking over Cayley-table cells in row-major order.  After each
assignment the search propagates: idempotency fixes the diagonal up front,
the law (xy)x = y forces table[k][i] = j whenever table[i][j] = k, varieties
containing that law get row/column all-different pruning (it implies both
cancellation properties), and every ground instance of the remaining
identities is re-checked as soon as its cells are decided.  Symmetry is
broken by a first-row lex constraint during search plus exact
canonicalization over all relabelings at the leaves for orders up to 8.

Orders 9..16 run in witness mode only: a limit is required, found tables
are re-verified but not canonicalized, so duplicates up to isomorphism may
appear among the witnesses.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

from .errors import ResourceLimitError, SearchInvariantError
from .groupoid import FiniteGroupoid, default_labels
from .laws import (
    Identity,
    Var,
    VarietySpec,
    alpha_key,
    check_variety,
    parse_identity,
    variables,
)

_IDEMPOTENT_KEYS = frozenset(
    alpha_key(parse_identity(s)) for s in ("x = xx", "xx = x")
)
_FORCING_KEYS = frozenset(
    alpha_key(parse_identity(s)) for s in ("(xy)x = y", "y = (xy)x")
)

_CANONICAL_LIMIT = 8
_FORCED_FULL_LIMIT = 8
_PLAIN_FULL_LIMIT = 6
_WITNESS_LIMIT = 16


@dataclass(frozen=True)
class SearchStats:
    nodes: int  # branching assignments attempted
    propagation_failures: int  # assignments undone by a detected conflict
    seconds: float


@dataclass(frozen=True)
class SearchOutcome:
    order: int
    variety: str
    canonical_models: tuple[FiniteGroupoid, ...]
    count: int
    stats: SearchStats


class _StopSearch(Exception):
    pass


# ---------------------------------------------------------------------------
# partial-table ground-instance scanners
#
# Same generated-loop shape as the full-table kernels in laws.py, except
# every compound subterm may be undecided (None); an undecided subterm makes
# the instance unverifiable for now, so the scanner skips past it.

_SCANNERS: dict[str, object] = {}


def _compile_scanner(identity: Identity):
    """Build ``_scan(t, n) -> None | tuple`` over a table with None holes."""
    order = variables(identity)
    level = {v: i for i, v in enumerate(order)}
    temps: dict[tuple[str, str], tuple[str, int, str]] = {}
    creation: list[tuple[str, str]] = []

    def build(t) -> tuple[str, int]:
        if isinstance(t, Var):
            return t.name, level[t.name]
        le, ll = build(t.left)
        re_, rl = build(t.right)
        key = (le, re_)
        lvl = max(ll, rl)
        if key not in temps:
            temps[key] = (f"_s{len(temps)}", lvl, f"t[{le}][{re_}]")
            creation.append(key)
        return temps[key][0], lvl

    lexpr, _ = build(identity.lhs)
    rexpr, _ = build(identity.rhs)

    pad = "    "
    lines = ["def _scan(t, n):"]
    for lvl, var in enumerate(order):
        lines.append(pad * (lvl + 1) + f"for {var} in range(n):")
        for key in creation:
            name, tl, expr = temps[key]
            if tl == lvl:
                body = pad * (lvl + 2)
                lines.append(body + f"{name} = {expr}")
                lines.append(body + f"if {name} is None: continue")
    inner = pad * (len(order) + 1)
    lines.append(inner + f"if {lexpr} != {rexpr}:")
    lines.append(inner + pad + f"return ({', '.join(order)},)")
    lines.append(pad + "return None")
    ns: dict = {}
    exec("\n".join(lines), ns)  # noqa: S102 - source is generated above
    return ns["_scan"]


def _scanner_for(identity: Identity):
    key = alpha_key(identity)
    scan = _SCANNERS.get(key)
    if scan is None:
        scan = _SCANNERS[key] = _compile_scanner(identity)
    return scan


# ---------------------------------------------------------------------------
# canonical forms


def canonical_table(
    table: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    """Lexicographic minimum of the table over all relabelings."""
    n = len(table)
    if n > _CANONICAL_LIMIT:
        raise ResourceLimitError(
            f"canonicalization sweeps all {n}! relabelings; supported up to "
            f"order {_CANONICAL_LIMIT}"
        )
    best = None
    rng = range(n)
    for p in itertools.permutations(rng):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        i0 = inv[0]
        row0 = tuple(p[table[i0][inv[c]]] for c in rng)
        if best is not None and row0 > best[0]:
            continue
        cand = (row0,) + tuple(
            tuple(p[table[inv[r]][inv[c]]] for c in rng) for r in range(1, n)
        )
        if best is None or cand < best:
            best = cand
    return best


def canonical_form(g: FiniteGroupoid) -> FiniteGroupoid:
    """The isomorphism-class representative with the lex-least table."""
    return FiniteGroupoid(canonical_table(g.table), default_labels(g.order))


# ---------------------------------------------------------------------------
# first-row symmetry breaking
#
# The canonical table's first row is lex-minimal among all relabelings that
# fix element 0 (any relabeling lowering row 0 would lower the whole table,
# rows compare in order).  Pruning first rows that fail this test therefore
# never discards a canonical representative.


@lru_cache(maxsize=None)
def _stabilizer_perms(n: int):
    out = []
    for rest in itertools.permutations(range(1, n)):
        sigma = (0,) + rest
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        out.append((sigma, tuple(inv)))
    return tuple(out)


def _row0_minimal(row0: tuple[int, ...], n: int) -> bool:
    for sigma, inv in _stabilizer_perms(n):
        for j in range(1, n):
            v = sigma[row0[inv[j]]]
            cur = row0[j]
            if v < cur:
                return False
            if v > cur:
                break
    return True


def _full_limit(has_forcing: bool) -> int:
    return _FORCED_FULL_LIMIT if has_forcing else _PLAIN_FULL_LIMIT


# ---------------------------------------------------------------------------
# the search itself


def enumerate_models(
    order: int, v: VarietySpec, limit: int | None = None
) -> SearchOutcome:
    """All isomorphism classes of order-`order` models of v, or the first
    `limit` of them.

    Above the full-enumeration envelope (8 for varieties containing the
    forcing law (xy)x = y, 6 otherwise) and up to order 16, a limit is
    mandatory and the returned witnesses are not canonicalized.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive when given")
    if order > _WITNESS_LIMIT:
        raise ResourceLimitError(
            f"order {order} exceeds the supported envelope "
            f"({_WITNESS_LIMIT}); no search mode is available that far out"
        )
    keys = [alpha_key(i) for i in v.identities]
    has_idem = any(k in _IDEMPOTENT_KEYS for k in keys)
    has_forcing = any(k in _FORCING_KEYS for k in keys)
    witness_mode = order > _full_limit(has_forcing)
    if witness_mode and limit is None:
        raise ResourceLimitError(
            f"full enumeration of '{v.name}' at order {order} exceeds the "
            f"desk-scale envelope ({_full_limit(has_forcing)}); pass limit= "
            f"to search for witnesses instead"
        )
    scanners = [
        _scanner_for(ident)
        for ident, k in zip(v.identities, keys)
        if k not in _IDEMPOTENT_KEYS and k not in _FORCING_KEYS
    ]

    n = order
    t0 = time.perf_counter()
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    row_mask = [0] * n
    col_mask = [0] * n
    trail: list[tuple[int, int]] = []
    nodes = 0
    failures = 0
    models: list[FiniteGroupoid] = []
    seen: set[tuple[tuple[int, ...], ...]] = set()
    row0_holes = n
    row0_memo: dict[tuple[int, ...], bool] = {}

    def assign(i: int, j: int, val: int) -> bool:
        nonlocal row0_holes
        queue = [(i, j, val)]
        while queue:
            a, b, x = queue.pop()
            cur = table[a][b]
            if cur is not None:
                if cur != x:
                    return False
                continue
            if has_forcing:
                bit = 1 << x
                if row_mask[a] & bit or col_mask[b] & bit:
                    return False
                row_mask[a] |= bit
                col_mask[b] |= bit
                queue.append((x, a, b))
            table[a][b] = x
            trail.append((a, b))
            if a == 0:
                row0_holes -= 1
        return True

    def undo(mark: int) -> None:
        nonlocal row0_holes
        while len(trail) > mark:
            a, b = trail.pop()
            x = table[a][b]
            table[a][b] = None
            if has_forcing:
                bit = ~(1 << x)
                row_mask[a] &= bit
                col_mask[b] &= bit
            if a == 0:
                row0_holes += 1

    def consistent() -> bool:
        for scan in scanners:
            if scan(table, n) is not None:
                return False
        if row0_holes == 0 and not witness_mode:
            key = tuple(table[0])
            ok = row0_memo.get(key)
            if ok is None:
                ok = row0_memo[key] = _row0_minimal(key, n)
            if not ok:
                return False
        return True

    def leaf() -> None:
        tab = tuple(tuple(row) for row in table)
        g = FiniteGroupoid(tab)
        report = check_variety(g, v)
        if not report.holds:
            raise SearchInvariantError(
                f"search leaf fails '{report.first_failure.identity}'; "
                "propagation is unsound"
            )
        if witness_mode:
            models.append(g)
        else:
            canon = canonical_table(tab)
            if canon in seen:
                return
            seen.add(canon)
            models.append(FiniteGroupoid(canon))
        if limit is not None and len(models) >= limit:
            raise _StopSearch

    cells = [(i, j) for i in range(n) for j in range(n)]
    total = n * n

    def dfs(pos: int) -> None:
        nonlocal nodes, failures
        while pos < total and table[cells[pos][0]][cells[pos][1]] is not None:
            pos += 1
        if pos == total:
            leaf()
            return
        i, j = cells[pos]
        for val in range(n):
            if has_forcing and (
                row_mask[i] >> val & 1 or col_mask[j] >> val & 1
            ):
                continue
            mark = len(trail)
            nodes += 1
            if assign(i, j, val) and consistent():
                dfs(pos + 1)
            else:
                failures += 1
            undo(mark)

    try:
        feasible = True
        if has_idem:
            for i in range(n):
                if not assign(i, i, i):
                    feasible = False
                    break
        if feasible and consistent():
            dfs(0)
    except _StopSearch:
        pass

    models.sort(key=lambda g: g.table)
    if not witness_mode and len(models) <= 10:
        from .morphisms import iso_search

        for a, b in itertools.combinations(models, 2):
            if iso_search(a, b) is not None:
                raise SearchInvariantError(
                    "two canonical models are isomorphic; deduplication is "
                    "broken"
                )
    stats = SearchStats(nodes, failures, time.perf_counter() - t0)
    return SearchOutcome(order, v.name, tuple(models), len(models), stats)


def spectrum_scan(
    v: VarietySpec, max_order: int
) -> tuple[tuple[int, int], ...]:
    """(order, isomorphism-class count) for every order 1..max_order."""
    if max_order < 1:
        raise ValueError("max_order must be positive")
    return tuple(
        (k, enumerate_models(k, v).count) for k in range(1, max_order + 1)
    )


# ---------------------------------------------------------------------------
# independent oracle
#
# Used by tests to validate enumerate_models.  Deliberately shares nothing
# with the search above: straight enumeration, the recursive term evaluator
# instead of generated scanners, no forcing, no all-different, no symmetry
# breaking.

_ORACLE_NAIVE_LIMIT = 3


def _eval_partial(term, env: dict[str, int], table):
    if isinstance(term, Var):
        return env[term.name]
    left = _eval_partial(term.left, env, table)
    if left is None:
        return None
    right = _eval_partial(term.right, env, table)
    if right is None:
        return None
    return table[left][right]


def brute_force_oracle(order: int, v: VarietySpec) -> int:
    """Isomorphism-class count by direct enumeration of whole tables.

    Orders 1..3 sweep all order**(order**2) tables.  Order 4 is allowed
    only for varieties containing idempotency, which pins the diagonal and
    leaves the 4**12 off-diagonal assignments, walked with early rejection
    of instances that are already fully decided and failing.
    """
    if order < 1:
        raise ValueError("order must be positive")
    keys = [alpha_key(i) for i in v.identities]
    classes: set[tuple[tuple[int, ...], ...]] = set()
    if order <= _ORACLE_NAIVE_LIMIT:
        n = order
        for flat in itertools.product(range(n), repeat=n * n):
            tab = tuple(flat[r * n:(r + 1) * n] for r in range(n))
            if check_variety(FiniteGroupoid(tab), v).holds:
                classes.add(canonical_table(tab))
        return len(classes)
    if order == 4 and any(k in _IDEMPOTENT_KEYS for k in keys):
        return _oracle_diagonal_fixed(v, classes)
    raise ResourceLimitError(
        f"oracle enumeration at order {order} needs "
        f"{order ** (order * order)} tables; only orders 1..3 are naive, "
        "and 4 requires an idempotent variety"
    )


def _oracle_diagonal_fixed(v: VarietySpec, classes: set) -> int:
    n = 4
    instances = [
        (ident, [
            dict(zip(variables(ident), vals))
            for vals in itertools.product(range(n), repeat=len(variables(ident)))
        ])
        for ident in v.identities
    ]
    table: list[list[int | None]] = [
        [i if i == j else None for j in range(n)] for i in range(n)
    ]
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]

    def decided_instances_hold() -> bool:
        for ident, envs in instances:
            for env in envs:
                left = _eval_partial(ident.lhs, env, table)
                if left is None:
                    continue
                right = _eval_partial(ident.rhs, env, table)
                if right is None:
                    continue
                if left != right:
                    return False
        return True

    def walk(k: int) -> None:
        if k == len(cells):
            tab = tuple(tuple(row) for row in table)
            if check_variety(FiniteGroupoid(tab), v).holds:
                classes.add(canonical_table(tab))
            return
        i, j = cells[k]
        for val in range(n):
            table[i][j] = val
            if decided_instances_hold():
                walk(k + 1)
            table[i][j] = None

    walk(0)
    return len(classes)
