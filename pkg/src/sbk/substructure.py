"""Subbraces, ideals, quotients, star spans and derived structure flags.

An ideal is a subbrace that is invariant under every lambda map and normal
in both groups; the quotient of a brace by an ideal is again a brace on
the cosets, with a + I = a * I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bitset import ElementSet, apply_perm, contains, full_mask, mask_of, members, size, sort_key
from .braces import SkewBrace, assemble, star
from .errors import NotAnIdeal
from .groups import center, generated_subgroup, is_normal, is_subgroup, make_group, subgroups


@dataclass(frozen=True)
class Subbrace:
    carrier: ElementSet
    is_ideal: bool
    is_trivial_sub: bool
    is_abelian_sub: bool


@dataclass(frozen=True)
class BraceCenters:
    z_add: ElementSet
    z_mul: ElementSet
    z_mul_is_ideal: bool


@dataclass(frozen=True)
class QuotientBrace:
    brace: SkewBrace
    reps: tuple[int, ...]
    projection: tuple[int, ...]


def subbrace_carriers(B: SkewBrace) -> list[ElementSet]:
    """Subsets that are subgroups of both operations at once."""
    common = set(subgroups(B.add)) & set(subgroups(B.mul))
    return sorted(common, key=sort_key)


def is_trivial_carrier(B: SkewBrace, mask: ElementSet) -> bool:
    ms = members(mask)
    at = B.add.table
    mt = B.mul.table
    return all(mt[x][y] == at[x][y] for x in ms for y in ms)


def is_abelian_carrier(B: SkewBrace, mask: ElementSet) -> bool:
    ms = members(mask)
    at = B.add.table
    return is_trivial_carrier(B, mask) and all(
        at[x][y] == at[y][x] for x in ms for y in ms
    )


def subbraces(B: SkewBrace) -> list[Subbrace]:
    out = []
    for mask in subbrace_carriers(B):
        out.append(
            Subbrace(
                carrier=mask,
                is_ideal=is_ideal(B, mask),
                is_trivial_sub=is_trivial_carrier(B, mask),
                is_abelian_sub=is_abelian_carrier(B, mask),
            )
        )
    return out


def is_lambda_invariant(B: SkewBrace, mask: ElementSet) -> bool:
    return all(apply_perm(B.lam[a], mask) == mask for a in range(B.n))


def is_ideal(B: SkewBrace, mask: ElementSet) -> bool:
    """Definitional test: subgroup of both operations, lambda invariant,
    normal in both groups."""
    if not contains(mask, 0):
        return False
    if not (is_subgroup(B.add, mask) and is_subgroup(B.mul, mask)):
        return False
    if not is_lambda_invariant(B, mask):
        return False
    return is_normal(B.add, mask) and is_normal(B.mul, mask)


def ideals(B: SkewBrace) -> list[ElementSet]:
    return [m for m in subbrace_carriers(B) if is_ideal(B, m)]


def minimal_ideals(B: SkewBrace) -> list[ElementSet]:
    nonzero = [m for m in ideals(B) if size(m) > 1]
    return [
        m
        for m in nonzero
        if not any(other != m and other & ~m == 0 for other in nonzero)
    ]


def quotient(B: SkewBrace, ideal_mask: ElementSet) -> QuotientBrace:
    """Brace on the cosets of an ideal; representatives are the smallest
    index of each coset, ordered by representative."""
    if not is_ideal(B, ideal_mask):
        raise NotAnIdeal(ideal_mask)
    n = B.n
    at = B.add.table
    proj = [-1] * n
    reps: list[int] = []
    for a in range(n):
        if proj[a] >= 0:
            continue
        k = len(reps)
        reps.append(a)
        for i in members(ideal_mask):
            proj[at[a][i]] = k
    m = len(reps)
    q_add = [[proj[at[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    q_mul = [
        [proj[B.mul.table[reps[i]][reps[j]]] for j in range(m)] for i in range(m)
    ]
    qb = assemble(make_group(q_add), make_group(q_mul))
    return QuotientBrace(brace=qb, reps=tuple(reps), projection=tuple(proj))


def star_span(B: SkewBrace, x_mask: ElementSet, y_mask: ElementSet) -> ElementSet:
    """Additive subgroup generated by all star products x*y with x in X,
    y in Y."""
    gens = {star(B, x, y) for x in members(x_mask) for y in members(y_mask)}
    return generated_subgroup(B.add, gens)


def brace_square(B: SkewBrace) -> ElementSet:
    """Star span of the whole brace with itself; zero exactly for trivial
    braces, and the smallest ideal with trivial quotient."""
    full = full_mask(B.n)
    return star_span(B, full, full)


def ker_lambda(B: SkewBrace) -> ElementSet:
    identity = tuple(range(B.n))
    return mask_of(a for a in range(B.n) if B.lam[a] == identity)


def brace_centers(B: SkewBrace) -> BraceCenters:
    z_mul = center(B.mul)
    return BraceCenters(
        z_add=center(B.add),
        z_mul=z_mul,
        z_mul_is_ideal=is_ideal(B, z_mul),
    )


def is_simple(B: SkewBrace) -> bool:
    return len(ideals(B)) == 2


def is_soluble_brace(B: SkewBrace) -> Optional[list[ElementSet]]:
    """A witness chain of ideals 0 = I_0 <= ... <= I_k = B whose successive
    quotients are abelian braces, or None.

    The search takes any nonzero ideal that is an abelian brace (minimal
    ideals first) and recurses on the quotient; solubility passes to
    quotients, so the first such ideal decides.
    """
    if B.n == 1:
        return [1]
    full = full_mask(B.n)
    if is_abelian_carrier(B, full):
        return [1, full]
    all_ideals = ideals(B)
    minimal = minimal_ideals(B)
    ordered = minimal + [m for m in all_ideals if size(m) > 1 and m not in minimal]
    for cand in ordered:
        if not is_abelian_carrier(B, cand):
            continue
        q = quotient(B, cand)
        rest = is_soluble_brace(q.brace)
        if rest is None:
            continue
        chain = [1, cand]
        for coset_mask in rest:
            lifted = mask_of(
                x for x in range(B.n) if contains(coset_mask, q.projection[x])
            )
            if lifted != cand:
                chain.append(lifted)
        return chain
    return None
