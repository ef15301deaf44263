"""Finite groups as explicit Cayley tables on indices 0..n-1.

Every group is normalized at construction so that the identity is index 0;
the two group structures of a skew brace can then share their identity by
sharing the index. Orders are capped at 64 so subsets fit in one machine
word as bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .bitset import ElementSet, contains, full_mask, mask_of, members, size, sort_key
from .errors import (
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotPrime,
)

Perm = tuple[int, ...]

MAX_GROUP_ORDER = 64


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by its Cayley table; identity is always index 0."""

    n: int
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    name: str = field(default="", compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def elements(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        label = self.name or f"order {self.n}"
        return f"FiniteGroup({label})"


@dataclass(frozen=True)
class GroupProperties:
    abelian: bool
    nilpotent: bool
    soluble: bool


@dataclass(frozen=True)
class CharacteristicSubgroups:
    center: ElementSet
    derived: ElementSet


def make_group(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Validate a Cayley table and return the group, identity moved to 0.

    Raises NoIdentity, NotLatinSquare, NotAssociative or NoInverse naming
    the first violation found. A ValueError signals a malformed table
    (non-square or out-of-range entries).
    """
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    if n > MAX_GROUP_ORDER:
        raise GroupTooLarge(n, MAX_GROUP_ORDER)
    rows = [tuple(row) for row in table]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not isinstance(x, int) or not 0 <= x < n:
                raise ValueError(f"entry {x!r} in row {i} out of range 0..{n - 1}")

    identity = None
    for e in range(n):
        if all(rows[e][j] == j for j in range(n)) and all(rows[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    expected = frozenset(range(n))
    for i in range(n):
        if frozenset(rows[i]) != expected:
            raise NotLatinSquare("row", i)
    for j in range(n):
        if frozenset(rows[i][j] for i in range(n)) != expected:
            raise NotLatinSquare("column", j)

    for i in range(n):
        for j in range(n):
            tij = rows[i][j]
            for k in range(n):
                if rows[tij][k] != rows[i][rows[j][k]]:
                    raise NotAssociative(i, j, k)

    if identity != 0:
        # relabel by the transposition (0 identity)
        sigma = list(range(n))
        sigma[0], sigma[identity] = identity, 0
        rows = [
            tuple(sigma[rows[sigma[i]][sigma[j]]] for j in range(n)) for i in range(n)
        ]

    inv = [-1] * n
    for i in range(n):
        for j in range(n):
            if rows[i][j] == 0 and rows[j][i] == 0:
                inv[i] = j
                break
        if inv[i] < 0:
            raise NoInverse(i)

    return FiniteGroup(n=n, table=tuple(rows), inv=tuple(inv), name=name)


def element_order(G: FiniteGroup, x: int) -> int:
    """Least k >= 1 with the k-fold product of x equal to the identity."""
    k = 1
    y = x
    while y != 0:
        y = G.table[y][x]
        k += 1
    return k


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> ElementSet:
    """Subgroup generated by the given elements, as a bitmask."""
    seen = 1  # identity
    frontier = [0]
    gen_list = [g for g in gens]
    for g in gen_list:
        if not contains(seen, g):
            seen |= 1 << g
            frontier.append(g)
    table = G.table
    while frontier:
        a = frontier.pop()
        for b in members(seen):
            for c in (table[a][b], table[b][a]):
                if not contains(seen, c):
                    seen |= 1 << c
                    frontier.append(c)
    return seen


def is_subgroup(G: FiniteGroup, mask: ElementSet) -> bool:
    if not contains(mask, 0):
        return False
    ms = members(mask)
    table = G.table
    for a in ms:
        if not contains(mask, G.inv[a]):
            return False
        row = table[a]
        for b in ms:
            if not contains(mask, row[b]):
                return False
    return True


def subgroups(G: FiniteGroup) -> list[ElementSet]:
    """All subgroups, sorted by size then by member sequence.

    Cyclic subgroups seed the search; the lattice is completed by joining
    each known subgroup with each cyclic seed until no new subgroup
    appears. Every subgroup is a join of cyclic ones, so this is complete.
    """
    cyclics = sorted({generated_subgroup(G, [x]) for x in G.elements()})
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        new: list[ElementSet] = []
        for sub in frontier:
            for cyc in cyclics:
                if cyc & ~sub == 0:
                    continue
                join = generated_subgroup(G, members(sub | cyc))
                if join not in found:
                    found.add(join)
                    new.append(join)
        frontier = new
    return sorted(found, key=sort_key)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_divisors(n: int) -> list[int]:
    out = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def sylow_p(G: FiniteGroup, p: int) -> list[ElementSet]:
    """All Sylow p-subgroups; empty exactly when p does not divide |G|."""
    if not _is_prime(p):
        raise NotPrime(p)
    if G.n % p != 0:
        return []
    q = 1
    while G.n % (q * p) == 0:
        q *= p
    return [m for m in subgroups(G) if size(m) == q]


def centralizer(G: FiniteGroup, x: int) -> ElementSet:
    table = G.table
    return mask_of(g for g in G.elements() if table[g][x] == table[x][g])


def center(G: FiniteGroup) -> ElementSet:
    table = G.table
    out = 0
    for g in G.elements():
        row = table[g]
        if all(row[h] == table[h][g] for h in G.elements()):
            out |= 1 << g
    return out


def _commutator(G: FiniteGroup, a: int, b: int) -> int:
    t = G.table
    return t[t[t[a][b]][G.inv[a]]][G.inv[b]]


def _derived_of(G: FiniteGroup, mask: ElementSet) -> ElementSet:
    ms = members(mask)
    comms = {_commutator(G, a, b) for a in ms for b in ms}
    return generated_subgroup(G, comms)


def characteristic_subgroups(G: FiniteGroup) -> CharacteristicSubgroups:
    """Center and derived subgroup of the group."""
    return CharacteristicSubgroups(
        center=center(G),
        derived=_derived_of(G, full_mask(G.n)),
    )


def is_normal(G: FiniteGroup, mask: ElementSet) -> bool:
    table = G.table
    inv = G.inv
    ms = members(mask)
    for g in G.elements():
        for s in ms:
            if not contains(mask, table[table[g][s]][inv[g]]):
                return False
    return True


def group_properties(G: FiniteGroup) -> GroupProperties:
    """Abelian by table scan, nilpotency by the ascending central series,
    solubility by the derived series."""
    table = G.table
    abelian = all(
        table[a][b] == table[b][a] for a in G.elements() for b in G.elements()
    )

    full = full_mask(G.n)
    z = 1  # trivial subgroup
    while True:
        nxt = 0
        for x in G.elements():
            if all(contains(z, _commutator(G, x, g)) for g in G.elements()):
                nxt |= 1 << x
        if nxt == z:
            break
        z = nxt
    nilpotent = z == full

    d = full
    while True:
        nxt = _derived_of(G, d)
        if nxt == d:
            break
        d = nxt
    soluble = d == 1

    return GroupProperties(abelian=abelian, nilpotent=nilpotent, soluble=soluble)


# ---------------------------------------------------------------------------
# Isomorphism machinery shared with the skew brace layer.  A map between two
# structures carrying k parallel Cayley tables is searched by backtracking on
# images of a greedy generating sequence, pruned by per-element order tuples.
# ---------------------------------------------------------------------------


def _order_in_table(table: Sequence[Sequence[int]], x: int) -> int:
    k = 1
    y = x
    while y != 0:
        y = table[y][x]
        k += 1
    return k


def _order_profile(tables: Sequence[Sequence[Sequence[int]]], n: int) -> list[tuple[int, ...]]:
    return [tuple(_order_in_table(t, x) for t in tables) for x in range(n)]


def _closure_multi(tables: Sequence[Sequence[Sequence[int]]], base: set[int]) -> set[int]:
    seen = set(base)
    seen.add(0)
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for t in tables:
            for b in list(seen):
                for c in (t[a][b], t[b][a]):
                    if c not in seen:
                        seen.add(c)
                        frontier.append(c)
    return seen


def _generating_sequence(tables: Sequence[Sequence[Sequence[int]]], n: int) -> list[int]:
    """Greedy generators: repeatedly take the element of largest order
    profile outside the closure of those chosen so far."""
    profile = _order_profile(tables, n)
    gens: list[int] = []
    closed = {0}
    while len(closed) < n:
        best = max(
            (x for x in range(n) if x not in closed),
            key=lambda x: (profile[x], -x),
        )
        gens.append(best)
        closed = _closure_multi(tables, set(gens))
    return gens


def table_isomorphisms(
    src_tables: Sequence[Sequence[Sequence[int]]],
    dst_tables: Sequence[Sequence[Sequence[int]]],
    find_all: bool = False,
) -> list[Perm]:
    """Bijections fixing 0 that respect every table pair simultaneously.

    Returns all such maps when find_all is set, otherwise at most one.
    """
    n = len(src_tables[0])
    if len(dst_tables[0]) != n:
        return []
    src_profile = _order_profile(src_tables, n)
    dst_profile = _order_profile(dst_tables, n)
    if sorted(src_profile) != sorted(dst_profile):
        return []

    gens = _generating_sequence(src_tables, n)
    candidates = [
        [y for y in range(n) if dst_profile[y] == src_profile[g]] for g in gens
    ]

    results: list[Perm] = []

    def propagate(fwd: list[int], used: list[bool], start: int) -> bool:
        queue = [start]
        known = [x for x in range(n) if fwd[x] >= 0]
        while queue:
            a = queue.pop()
            for b in list(known):
                for ts, td in zip(src_tables, dst_tables):
                    for (c, d) in (
                        (ts[a][b], td[fwd[a]][fwd[b]]),
                        (ts[b][a], td[fwd[b]][fwd[a]]),
                    ):
                        fc = fwd[c]
                        if fc >= 0:
                            if fc != d:
                                return False
                        else:
                            if used[d]:
                                return False
                            fwd[c] = d
                            used[d] = True
                            known.append(c)
                            queue.append(c)
        return True

    def verify(fwd: list[int]) -> bool:
        for ts, td in zip(src_tables, dst_tables):
            for a in range(n):
                fa = fwd[a]
                for b in range(n):
                    if fwd[ts[a][b]] != td[fa][fwd[b]]:
                        return False
        return True

    def search(level: int, fwd: list[int], used: list[bool]) -> bool:
        if level == len(gens):
            if all(x >= 0 for x in fwd) and verify(fwd):
                results.append(tuple(fwd))
                return not find_all
            return False
        g = gens[level]
        for img in candidates[level]:
            if used[img] or fwd[g] >= 0:
                if fwd[g] == img:
                    if search(level + 1, fwd, used):
                        return True
                continue
            fwd2 = fwd.copy()
            used2 = used.copy()
            fwd2[g] = img
            used2[img] = True
            if propagate(fwd2, used2, g) and search(level + 1, fwd2, used2):
                return True
        return False

    fwd0 = [-1] * n
    used0 = [False] * n
    fwd0[0] = 0
    used0[0] = True
    search(0, fwd0, used0)
    return results


def automorphism_group(G: FiniteGroup) -> list[Perm]:
    """Every automorphism, found by backtracking on generator images."""
    auts = table_isomorphisms([G.table], [G.table], find_all=True)
    auts.sort()
    # sanity: closed under composition and each fixes the identity
    index = set(auts)
    for p in auts:
        if p[0] != 0:
            raise AssertionError("automorphism moves the identity")
    if len(auts) <= 256:
        rng = range(G.n)
        for p in auts:
            for q in auts:
                if tuple(p[q[i]] for i in rng) not in index:
                    raise AssertionError("automorphism set is not closed")
    return auts


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> Optional[Perm]:
    """An isomorphism G -> H, or None if the groups are not isomorphic."""
    if G.n != H.n:
        return None
    if G.table == H.table:
        return tuple(range(G.n))
    found = table_isomorphisms([G.table], [H.table])
    return found[0] if found else None


def is_automorphism(G: FiniteGroup, perm: Perm) -> bool:
    if perm[0] != 0 or sorted(perm) != list(range(G.n)):
        return False
    t = G.table
    return all(
        perm[t[a][b]] == t[perm[a]][perm[b]] for a in range(G.n) for b in range(G.n)
    )


# ---------------------------------------------------------------------------
# Standard constructions used to seed the catalogs.
# ---------------------------------------------------------------------------


def trivial_group() -> FiniteGroup:
    return make_group([[0]], name="C1")


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return make_group(table, name=f"C{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = "") -> FiniteGroup:
    n = G.n * H.n

    def enc(a: int, b: int) -> int:
        return a * H.n + b

    table = [[0] * n for _ in range(n)]
    for a1 in range(G.n):
        for b1 in range(H.n):
            for a2 in range(G.n):
                for b2 in range(H.n):
                    table[enc(a1, b1)][enc(a2, b2)] = enc(
                        G.table[a1][a2], H.table[b1][b2]
                    )
    return make_group(table, name=name or f"{G.name}x{H.name}")


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given even order >= 6 (rotations then
    reflections)."""
    if order % 2 != 0 or order < 6:
        raise ValueError(f"dihedral order must be even and >= 6, got {order}")
    m = order // 2
    table = [[0] * order for _ in range(order)]
    for i in range(m):
        for j in range(m):
            table[i][j] = (i + j) % m
            table[i][m + j] = m + (i + j) % m
            table[m + i][j] = m + (i - j) % m
            table[m + i][m + j] = (i - j) % m
    return make_group(table, name=f"D{order}")


def dicyclic_group(order: int) -> FiniteGroup:
    """Dicyclic group of order 4m (quaternion group for order 8)."""
    if order % 4 != 0 or order < 8:
        raise ValueError(f"dicyclic order must be a multiple of 4 and >= 8, got {order}")
    m = order // 4
    two_m = 2 * m
    table = [[0] * order for _ in range(order)]
    for i in range(two_m):
        for j in range(two_m):
            table[i][j] = (i + j) % two_m
            table[i][two_m + j] = two_m + (i + j) % two_m
            table[two_m + i][j] = two_m + (i - j) % two_m
            table[two_m + i][two_m + j] = (i - j + m) % two_m
    return make_group(table, name=f"Q{order}")


def alternating_group_4() -> FiniteGroup:
    perms = sorted(
        p
        for p in itertools.permutations(range(4))
        if _parity(p) == 0
    )
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(4))] for q in perms] for p in perms
    ]
    return make_group(table, name="A4")


def _parity(perm: Sequence[int]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2
