"""Structure-preserving bijections between finite groupoids.

A Mapping is a plain images array tagged with what it has been verified to
be.  Verification is always a full sweep over all order-squared pairs; no
operation here returns a mapping whose tag it has not just checked.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import ResourceLimitError, SearchInvariantError, VarietyError
from .groupoid import FiniteGroupoid
from .laws import VARIETIES, check_variety


class MapKind(str, Enum):
    ISO = "ISO"
    ANTI_ISO = "ANTI_ISO"
    NEITHER = "NEITHER"
    UNVERIFIED = "UNVERIFIED"


@dataclass(frozen=True)
class Mapping:
    source_order: int
    target_order: int
    images: tuple[int, ...]
    kind: MapKind = MapKind.UNVERIFIED

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.source_order:
            raise ValueError(
                f"expected {self.source_order} images, got {len(images)}"
            )
        for v in images:
            if not 0 <= v < self.target_order:
                raise ValueError(f"image {v} out of range")
        object.__setattr__(self, "images", images)

    @property
    def bijective(self) -> bool:
        return (
            self.source_order == self.target_order
            and len(set(self.images)) == self.source_order
        )


def identity_mapping(g: FiniteGroupoid) -> Mapping:
    return Mapping(g.order, g.order, tuple(range(g.order)))


def compose(first: Mapping, then: Mapping) -> Mapping:
    """Apply ``first``, then ``then``.  The result is left unverified."""
    if first.target_order != then.source_order:
        raise ValueError("orders do not chain")
    return Mapping(
        first.source_order,
        then.target_order,
        tuple(then.images[v] for v in first.images),
    )


def _is_hom(images, s_table, d_table, n) -> bool:
    for i in range(n):
        row = s_table[i]
        fi = images[i]
        for j in range(n):
            if images[row[j]] != d_table[fi][images[j]]:
                return False
    return True


def _is_anti_hom(images, s_table, d_table, n) -> bool:
    for i in range(n):
        row = s_table[i]
        fi = images[i]
        for j in range(n):
            if images[row[j]] != d_table[images[j]][fi]:
                return False
    return True


def classify_mapping(f: Mapping, src: FiniteGroupoid, dst: FiniteGroupoid) -> MapKind:
    """Full-sweep classification.  Homomorphic bijections report ISO even
    when they are also anti-homomorphic (the commutative case)."""
    if f.source_order != src.order or f.target_order != dst.order:
        raise ValueError("mapping does not fit the given groupoids")
    if not f.bijective:
        raise ValueError("mapping is not a bijection between equal orders")
    n = src.order
    if _is_hom(f.images, src.table, dst.table, n):
        return MapKind.ISO
    if _is_anti_hom(f.images, src.table, dst.table, n):
        return MapKind.ANTI_ISO
    return MapKind.NEITHER


def verified(images, src: FiniteGroupoid, dst: FiniteGroupoid) -> Mapping:
    """Build a Mapping from raw images and stamp it with its classified kind."""
    f = Mapping(src.order, dst.order, tuple(images))
    return replace(f, kind=classify_mapping(f, src, dst))


# ---------------------------------------------------------------------------
# exhaustive census of self-bijections


def cycle_type(perm) -> tuple[int, ...]:
    """Cycle lengths of a permutation, longest first."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def cycle_type_name(ct: tuple[int, ...]) -> str:
    if all(c == 1 for c in ct):
        return "identity"
    moved = [c for c in ct if c > 1]
    if moved == [2]:
        return "transposition"
    if moved == [2, 2]:
        return "double-transposition"
    if len(moved) == 1:
        return f"{moved[0]}-cycle"
    return "+".join(str(c) for c in ct)


@dataclass(frozen=True)
class BijectionCensus:
    order: int
    total: int
    counts: dict[MapKind, int]
    by_cycle_type: dict[tuple[MapKind, tuple[int, ...]], int]


_CENSUS_LIMIT = 8


def classify_all_bijections(g: FiniteGroupoid) -> BijectionCensus:
    """Tabulate every self-bijection of g by kind and cycle type."""
    n = g.order
    if n > _CENSUS_LIMIT:
        raise ResourceLimitError(
            f"census enumerates {n}! bijections; supported only up to order "
            f"{_CENSUS_LIMIT}"
        )
    t = g.table
    counts = {MapKind.ISO: 0, MapKind.ANTI_ISO: 0, MapKind.NEITHER: 0}
    by_type: dict[tuple[MapKind, tuple[int, ...]], int] = {}
    for perm in itertools.permutations(range(n)):
        if _is_hom(perm, t, t, n):
            kind = MapKind.ISO
        elif _is_anti_hom(perm, t, t, n):
            kind = MapKind.ANTI_ISO
        else:
            kind = MapKind.NEITHER
        counts[kind] += 1
        key = (kind, cycle_type(perm))
        by_type[key] = by_type.get(key, 0) + 1
    return BijectionCensus(n, math.factorial(n), counts, by_type)


# ---------------------------------------------------------------------------
# backtracking isomorphism search


def _invariant_vectors(g: FiniteGroupoid) -> list[tuple[int, int]]:
    """Per-element (row fixed points, column fixed points); preserved by
    isomorphism."""
    n = g.order
    t = g.table
    out = []
    for i in range(n):
        rf = sum(1 for j in range(n) if t[i][j] == j)
        cf = sum(1 for j in range(n) if t[j][i] == j)
        out.append((rf, cf))
    return out


def _search_hom_bijection(ts, td, candidates, n):
    """First (lexicographically least) bijective homomorphism images, or
    None.  Source elements are decided in index order; consequences of each
    decision are propagated immediately."""
    images = [-1] * n
    used = [False] * n
    trail: list[int] = []

    def assign(u: int, p: int) -> bool:
        queue = [(u, p)]
        while queue:
            u, p = queue.pop()
            if images[u] != -1:
                if images[u] != p:
                    return False
                continue
            if used[p] or p not in candidates[u]:
                return False
            images[u] = p
            used[p] = True
            trail.append(u)
            for v in range(n):
                q = images[v]
                if q == -1:
                    continue
                queue.append((ts[u][v], td[p][q]))
                queue.append((ts[v][u], td[q][p]))
        return True

    def extend_from(u: int) -> bool:
        while u < n and images[u] != -1:
            u += 1
        if u == n:
            return True
        for p in sorted(candidates[u]):
            if used[p]:
                continue
            mark = len(trail)
            if assign(u, p) and extend_from(u + 1):
                return True
            while len(trail) > mark:
                w = trail.pop()
                used[images[w]] = False
                images[w] = -1
        return False

    return tuple(images) if extend_from(0) else None


def iso_search(src: FiniteGroupoid, dst: FiniteGroupoid,
               anti: bool = False) -> Mapping | None:
    """Deterministic search for an isomorphism (or anti-isomorphism).

    Returns the mapping with lexicographically least images, re-verified, or
    None if the groupoids are not (anti-)isomorphic.
    """
    if src.order != dst.order:
        return None
    n = src.order
    effective = src.opposite() if anti else src
    inv_s = _invariant_vectors(effective)
    inv_d = _invariant_vectors(dst)
    if sorted(inv_s) != sorted(inv_d):
        return None
    candidates = [
        frozenset(p for p in range(n) if inv_d[p] == inv_s[u]) for u in range(n)
    ]
    images = _search_hom_bijection(effective.table, dst.table, candidates, n)
    if images is None:
        return None
    f = verified(images, src, dst)
    want = MapKind.ANTI_ISO if anti else MapKind.ISO
    if f.kind != want and not (
        anti and f.kind == MapKind.ISO
        and _is_anti_hom(f.images, src.table, dst.table, n)
    ):
        raise SearchInvariantError(
            f"search produced a mapping that re-verifies as {f.kind}, not {want}"
        )
    return f


# ---------------------------------------------------------------------------
# turning anti-isomorphisms into isomorphisms


def _require_aragb(g: FiniteGroupoid, who: str):
    report = check_variety(g, VARIETIES["aragb"])
    if not report.holds:
        bad = report.first_failure
        raise VarietyError(
            f"{who} violates '{bad.identity}' at {bad.counterexample}",
            report=report,
        )


def anti_to_iso(phi: Mapping, src: FiniteGroupoid, dst: FiniteGroupoid) -> Mapping:
    """Given an anti-isomorphism src -> dst, produce an isomorphism.

    At order 4 the isomorphism is written down directly: keep the images of
    the two generators c = 0 and d = 1 and swap the images of cd and dc.
    Larger orders fall back to iso_search; a fruitless search is an invariant
    violation, not a normal miss, because an anti-isomorphic pair of these
    bands is always isomorphic.
    """
    kind = classify_mapping(phi, src, dst)
    n = src.order
    if kind == MapKind.ISO and _is_anti_hom(phi.images, src.table, dst.table, n):
        # commutative case: the given mapping already is an isomorphism
        return replace(phi, kind=MapKind.ISO)
    if kind != MapKind.ANTI_ISO:
        raise ValueError(f"expected an ANTI_ISO mapping, got {kind}")
    _require_aragb(src, "source")
    if n == 4:
        c, d = 0, 1
        cd = src.table[c][d]
        dc = src.table[d][c]
        images = [-1] * 4
        images[c] = phi.images[c]
        images[d] = phi.images[d]
        images[cd] = phi.images[dc]
        images[dc] = phi.images[cd]
        f = verified(images, src, dst)
        if f.kind != MapKind.ISO:
            raise SearchInvariantError(
                "generator-swap recipe failed to produce an isomorphism"
            )
        return f
    f = iso_search(src, dst, anti=False)
    if f is None:
        raise SearchInvariantError(
            "anti-isomorphic pair admits no isomorphism; this contradicts the "
            "structure theory and indicates corrupt input"
        )
    return f


# ---------------------------------------------------------------------------
# the two-generator recipe and the inductive canonical isomorphism


def two_generator_recipe(g: FiniteGroupoid, c: int, d: int):
    """Materialize <c, d> and map it onto the standard model by
    c -> a, d -> b, cd -> ab, dc -> ba.

    Returns (subgroupoid, carrier, mapping).  In any groupoid satisfying the
    three defining laws the carrier has exactly four elements and the mapping
    verifies as ISO.
    """
    from .construct import standard_g

    if c == d:
        raise ValueError("generators must be distinct")
    carrier = tuple(sorted(g.generated_subgroupoid({c, d})))
    sub = g.restrict(carrier)
    if sub.order != 4:
        raise SearchInvariantError(
            f"<{c}, {d}> has {sub.order} elements, expected 4"
        )
    pos = {v: k for k, v in enumerate(carrier)}
    images = [-1] * 4
    images[pos[c]] = 0
    images[pos[d]] = 1
    images[pos[g.table[c][d]]] = 2
    images[pos[g.table[d][c]]] = 3
    return sub, carrier, verified(images, sub, standard_g())


def canonical_iso(k: FiniteGroupoid, enumeration=None) -> Mapping:
    """Inductively build an isomorphism from k onto the tower level of the
    same order.

    The enumeration fixes which elements play the generator roles: the first
    two seed the base copy, and each later stage adjoins the least-enumerated
    element not yet covered.  Images are forced by the three product shapes
    of the extension (left product, right product, and product through the
    seed), so the construction either succeeds in one pass or trips an
    invariant error; the result is re-verified before returning.
    """
    from .construct import tower_level

    n = k.order
    level = 0
    while 4 ** level < n:
        level += 1
    if 4 ** level != n or level < 1:
        raise ValueError(f"order {n} is not 4**n for some n >= 1")
    if enumeration is None:
        enumeration = range(n)
    enumeration = tuple(enumeration)
    if sorted(enumeration) != list(range(n)):
        raise ValueError("enumeration must be a permutation of the indices")
    _require_aragb(k, "input")

    target = tower_level(level)
    tt = target.table
    tk = k.table
    rank = {e: r for r, e in enumerate(enumeration)}

    y1, y2 = enumeration[0], enumeration[1]
    phi = {y1: 0, y2: 1, tk[y1][y2]: 2, tk[y2][y1]: 3}
    if len(phi) != 4:
        raise SearchInvariantError("the first two elements generate fewer "
                                   "than four elements")

    for m in range(1, level):
        covered = set(phi)
        outside = [e for e in enumeration if e not in covered]
        y = min(outside, key=rank.__getitem__)
        x_idx = 3 * 4 ** m
        y1y = tk[y1][y]
        new_phi = dict(phi)
        taken = set(phi.values())
        for c in list(phi):
            pc = phi[c]
            for source, image in (
                (tk[y][c], tt[x_idx][pc]),
                (tk[c][y], tt[pc][x_idx]),
                (tk[y1y][c], tt[tt[phi[y1]][x_idx]][pc]),
            ):
                prior = new_phi.get(source)
                if prior is None:
                    if image in taken:
                        raise SearchInvariantError(
                            "two elements were sent to the same image while "
                            f"extending past order {4 ** m}"
                        )
                    new_phi[source] = image
                    taken.add(image)
                elif prior != image:
                    raise SearchInvariantError(
                        f"conflicting images for element {source} while "
                        f"extending past order {4 ** m}"
                    )
        if len(new_phi) != 4 ** (m + 1):
            raise SearchInvariantError(
                f"extension step covered {len(new_phi)} elements, expected "
                f"{4 ** (m + 1)}"
            )
        phi = new_phi

    images = [-1] * n
    for source, image in phi.items():
        images[source] = image
    f = verified(images, k, target)
    if f.kind != MapKind.ISO:
        raise SearchInvariantError(
            f"constructed mapping re-verifies as {f.kind}, not ISO"
        )
    return f
