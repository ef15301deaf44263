"""Catalogs of all skew braces of a small order, up to isomorphism.

For each additive group G the braces with that additive group correspond
to the regular subgroups of the holomorph of G (the permutations
x -> g + alpha(x) with alpha an automorphism). A regular subgroup contains
exactly one element per shift g, so the search assigns an automorphism to
every shift and propagates the closure constraint
alpha_{a + alpha_a(b)} = alpha_a o alpha_b; complete assignments are
exactly the regular subgroups. Two regular subgroups conjugate under an
automorphism of G give isomorphic braces, so orbit representatives are
kept and then certified pairwise non-isomorphic by an explicit search.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .braces import SkewBrace, assemble
from .errors import ConstructionFailed, SkewBraceKitError, UnsupportedOrder
from .groups import (
    FiniteGroup,
    Perm,
    alternating_group_4,
    automorphism_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    element_order,
    make_group,
    table_isomorphisms,
    trivial_group,
)

DEFAULT_ORDER_CAP = 12
HARD_ORDER_CAP = 15
GROUP_ORDER_CAP = 15


@dataclass(frozen=True)
class HolomorphElement:
    shift: int
    auto: Perm
    perm: Perm


@dataclass(frozen=True)
class Holomorph:
    group: FiniteGroup
    auts: tuple[Perm, ...]
    elements: tuple[HolomorphElement, ...]


@dataclass(frozen=True)
class BraceCatalog:
    order: int
    entries: tuple[SkewBrace, ...]
    group_names: tuple[str, ...]
    provenance: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.entries)

    def per_group_counts(self) -> list[tuple[str, int]]:
        counts = [0] * len(self.group_names)
        for gi in self.provenance:
            counts[gi] += 1
        return list(zip(self.group_names, counts))


def groups_of_order(n: int) -> list[FiniteGroup]:
    """One representative per isomorphism class of groups of order n <= 15."""
    if not 1 <= n <= GROUP_ORDER_CAP:
        raise UnsupportedOrder(n, GROUP_ORDER_CAP)
    if n == 1:
        return [trivial_group()]
    if n in (2, 3, 5, 7, 11, 13):
        return [cyclic_group(n)]
    if n == 4:
        c2 = cyclic_group(2)
        return [cyclic_group(4), direct_product(c2, c2)]
    if n == 6:
        return [cyclic_group(6), dihedral_group(6)]
    if n == 8:
        c2 = cyclic_group(2)
        return [
            cyclic_group(8),
            direct_product(cyclic_group(4), c2),
            direct_product(direct_product(c2, c2), c2),
            dihedral_group(8),
            dicyclic_group(8),
        ]
    if n == 9:
        c3 = cyclic_group(3)
        return [cyclic_group(9), direct_product(c3, c3)]
    if n == 10:
        return [cyclic_group(10), dihedral_group(10)]
    if n == 12:
        return [
            cyclic_group(12),
            direct_product(cyclic_group(2), cyclic_group(6)),
            dihedral_group(12),
            alternating_group_4(),
            dicyclic_group(12),
        ]
    if n == 14:
        return [cyclic_group(14), dihedral_group(14)]
    if n == 15:
        return [cyclic_group(15)]
    raise UnsupportedOrder(n, GROUP_ORDER_CAP)  # pragma: no cover


def holomorph(G: FiniteGroup) -> Holomorph:
    """All n * |Aut(G)| maps x -> g + alpha(x), verified to act faithfully
    and to compose as (g, alpha)(h, beta) = (g + alpha(h), alpha o beta)."""
    auts = tuple(automorphism_group(G))
    n = G.n
    add = G.table
    elements = []
    for g in range(n):
        row = add[g]
        for alpha in auts:
            perm = tuple(row[alpha[x]] for x in range(n))
            elements.append(HolomorphElement(shift=g, auto=alpha, perm=perm))
    perms = {el.perm for el in elements}
    if len(perms) != len(elements):
        raise ConstructionFailed("holomorph action is not faithful")
    _verify_holomorph_composition(G, auts, elements)
    return Holomorph(group=G, auts=auts, elements=tuple(elements))


def _verify_holomorph_composition(
    G: FiniteGroup, auts: Sequence[Perm], elements: Sequence[HolomorphElement]
) -> None:
    n = G.n
    add = G.table
    aut_pos = {a: i for i, a in enumerate(auts)}

    def composed(x: HolomorphElement, y: HolomorphElement) -> HolomorphElement:
        shift = add[x.shift][x.auto[y.shift]]
        alpha = tuple(x.auto[y.auto[i]] for i in range(n))
        return elements[shift * len(auts) + aut_pos[alpha]]

    if len(elements) <= 500:
        pairs: Iterable[tuple[HolomorphElement, HolomorphElement]] = (
            (x, y) for x in elements for y in elements
        )
    else:
        gens = [el for el in elements if el.shift == 0 or el.auto == auts[0]]
        pairs = ((x, y) for x in elements for y in gens)
    for x, y in pairs:
        z = composed(x, y)
        if tuple(x.perm[y.perm[i]] for i in range(n)) != z.perm:
            raise ConstructionFailed("holomorph composition law violated")


def _regular_assignments(G: FiniteGroup, auts: Sequence[Perm]) -> list[tuple[int, ...]]:
    """All maps shift -> automorphism index whose graph is a regular
    subgroup of the holomorph, in lexicographic search order."""
    n = G.n
    add = G.table
    k = len(auts)
    aut_idx = {p: i for i, p in enumerate(auts)}
    id_idx = aut_idx[tuple(range(n))]
    amul = [
        [aut_idx[tuple(p[q[x]] for x in range(n))] for q in auts] for p in auts
    ]

    # Every non-identity element of a regular subgroup moves every point,
    # so each shift only admits automorphisms giving a fixed-point-free map.
    candidates: list[set[int]] = []
    for a in range(n):
        if a == 0:
            candidates.append({id_idx})
            continue
        row = add[a]
        ok = {
            i
            for i, p in enumerate(auts)
            if all(row[p[x]] != x for x in range(n))
        }
        candidates.append(ok)

    results: list[tuple[int, ...]] = []

    def propagate(assign: list[int], queue: list[int]) -> bool:
        while queue:
            a = queue.pop()
            pa = auts[assign[a]]
            row_a = add[a]
            for b in [x for x in range(n) if assign[x] >= 0]:
                c = row_a[pa[b]]
                req = amul[assign[a]][assign[b]]
                cur = assign[c]
                if cur >= 0:
                    if cur != req:
                        return False
                elif req not in candidates[c]:
                    return False
                else:
                    assign[c] = req
                    queue.append(c)
                if b == a:
                    continue
                pb = auts[assign[b]]
                c2 = add[b][pb[a]]
                req2 = amul[assign[b]][assign[a]]
                cur2 = assign[c2]
                if cur2 >= 0:
                    if cur2 != req2:
                        return False
                elif req2 not in candidates[c2]:
                    return False
                else:
                    assign[c2] = req2
                    queue.append(c2)
        return True

    def backtrack(assign: list[int]) -> None:
        try:
            a = assign.index(-1)
        except ValueError:
            results.append(tuple(assign))
            return
        for phi in sorted(candidates[a]):
            trial = assign.copy()
            trial[a] = phi
            if propagate(trial, [a]):
                backtrack(trial)

    init = [-1] * n
    init[0] = id_idx
    if propagate(init, [0]):
        backtrack(init)
    return results


def regular_subgroups(hol: Holomorph) -> list[tuple[HolomorphElement, ...]]:
    """All regular subgroups (transitive with trivial point stabilizers),
    each listed by ascending shift."""
    G = hol.group
    auts = hol.auts
    k = len(auts)
    assignments = _regular_assignments(G, auts)
    out = []
    for assign in assignments:
        out.append(
            tuple(hol.elements[a * k + assign[a]] for a in range(G.n))
        )
    return out


def brace_from_regular_subgroup(
    G: FiniteGroup, R: Sequence[HolomorphElement]
) -> SkewBrace:
    """Brace with additive group G and a * b = r_a(b), where r_a is the
    unique member of R sending 0 to a."""
    n = G.n
    by_shift: dict[int, Perm] = {}
    for el in R:
        by_shift[el.perm[0]] = el.perm
    if sorted(by_shift) != list(range(n)):
        raise ConstructionFailed("subgroup is not regular: shifts do not cover 0..n-1")
    mul_table = [by_shift[a] for a in range(n)]
    try:
        mul = make_group([list(row) for row in mul_table])
        return assemble(G, mul)
    except SkewBraceKitError as exc:
        raise ConstructionFailed(f"regular subgroup produced an invalid brace: {exc}") from exc


def _lambda_cycle_type(perm: Perm) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        l = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            l += 1
        lens.append(l)
    return tuple(sorted(lens))


def _brace_fingerprint(B: SkewBrace) -> tuple:
    per_element = sorted(
        (
            element_order(B.add, x),
            element_order(B.mul, x),
            _lambda_cycle_type(B.lam[x]),
        )
        for x in range(B.n)
    )
    return tuple(per_element)


def are_isomorphic_braces(B1: SkewBrace, B2: SkewBrace) -> Optional[Perm]:
    """A bijection fixing 0 preserving both operations, or None."""
    if B1.n != B2.n:
        return None
    if B1.add.table == B2.add.table and B1.mul.table == B2.mul.table:
        return tuple(range(B1.n))
    if _brace_fingerprint(B1) != _brace_fingerprint(B2):
        return None
    found = table_isomorphisms(
        [B1.add.table, B1.mul.table], [B2.add.table, B2.mul.table]
    )
    return found[0] if found else None


def canonical_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabeling of the table over all
    permutations fixing 0. Exponential in n; intended for n <= 8."""
    n = len(table)
    best: Optional[tuple[tuple[int, ...], ...]] = None
    for tail in itertools.permutations(range(1, n)):
        sigma = (0,) + tail
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s] = i
        rows: list[tuple[int, ...]] = []
        verdict = 0
        for i in range(n):
            src = table[inv[i]]
            row = tuple(sigma[src[inv[j]]] for j in range(n))
            if best is not None and verdict == 0:
                ref = best[i]
                if row > ref:
                    verdict = 1
                    break
                if row < ref:
                    verdict = -1
            rows.append(row)
        if verdict == 1:
            continue
        cand = tuple(rows)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def _conjugate_assignment(
    assign: Sequence[int],
    f: int,
    auts: Sequence[Perm],
    amul: Sequence[Sequence[int]],
    ainv: Sequence[int],
) -> tuple[int, ...]:
    phi = auts[f]
    out = [0] * len(assign)
    for a, alpha in enumerate(assign):
        out[phi[a]] = amul[f][amul[alpha][ainv[f]]]
    return tuple(out)


def _orbit_representatives(
    assignments: Sequence[tuple[int, ...]], auts: Sequence[Perm]
) -> list[tuple[int, ...]]:
    n = len(auts[0])
    k = len(auts)
    aut_idx = {p: i for i, p in enumerate(auts)}
    amul = [
        [aut_idx[tuple(p[q[x]] for x in range(n))] for q in auts] for p in auts
    ]
    ainv = [0] * k
    for i, p in enumerate(auts):
        inv = [0] * n
        for x, y in enumerate(p):
            inv[y] = x
        ainv[i] = aut_idx[tuple(inv)]
    reps = sorted(
        {
            min(
                _conjugate_assignment(a, f, auts, amul, ainv)
                for f in range(k)
            )
            for a in assignments
        }
    )
    return reps


def _resolve_cap(cap: Optional[int]) -> int:
    if cap is None:
        env = os.environ.get("SBK_MAX_ORDER")
        cap = int(env) if env else DEFAULT_ORDER_CAP
    return min(cap, HARD_ORDER_CAP)


@lru_cache(maxsize=None)
def _catalog(n: int) -> BraceCatalog:
    groups = groups_of_order(n)
    entries: list[SkewBrace] = []
    provenance: list[int] = []
    for gi, G in enumerate(groups):
        auts = automorphism_group(G)
        assignments = _regular_assignments(G, auts)
        reps = _orbit_representatives(assignments, auts)
        braces = []
        for assign in reps:
            mul_table = [
                [G.table[a][auts[assign[a]][b]] for b in range(n)] for a in range(n)
            ]
            braces.append(assemble(G, make_group(mul_table)))
        # conjugacy already separates classes; certify it by explicit search
        kept: list[SkewBrace] = []
        for b in braces:
            if any(are_isomorphic_braces(b, other) is not None for other in kept):
                continue
            kept.append(b)
        if n <= 8:
            kept.sort(key=lambda b: canonical_table(b.mul.table))
        entries.extend(kept)
        provenance.extend([gi] * len(kept))
    return BraceCatalog(
        order=n,
        entries=tuple(entries),
        group_names=tuple(G.name for G in groups),
        provenance=tuple(provenance),
    )


def all_skew_braces(n: int, cap: Optional[int] = None) -> BraceCatalog:
    """Catalog of all skew braces of order n up to isomorphism.

    The default cap of 12 can be raised with the SBK_MAX_ORDER environment
    variable or the cap argument, never past 15.
    """
    limit = _resolve_cap(cap)
    if not 1 <= n <= limit:
        raise UnsupportedOrder(n, limit)
    return _catalog(n)
