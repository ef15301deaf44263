"""Skew braces: two group structures on one index set, sharing identity 0
and linked by the left compatibility law

    a * (b + c) = (a * b) - a + (a * c).

The lambda maps lam[a](b) = -a + a*b are precomputed at construction; each
is an automorphism of the additive group and a in (B,*) -> lam[a] is a
group homomorphism. Both facts are re-verified when a brace is built, so
every downstream module can rely on the cache.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence

from .errors import ConstructionFailed, IdentityMismatch, LeftDistributivityFails
from .groups import FiniteGroup, Perm, make_group


@dataclass(frozen=True)
class SkewBrace:
    n: int
    add: FiniteGroup
    mul: FiniteGroup
    lam: tuple[Perm, ...] = field(compare=False)

    def __repr__(self) -> str:
        return f"SkewBrace(n={self.n}, add={self.add.name or '?'}, mul={self.mul.name or '?'})"


@dataclass(frozen=True)
class BraceFlags:
    trivial: bool
    almost_trivial: bool
    abelian: bool
    two_sided: bool
    bi_skew: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "trivial": self.trivial,
            "almost_trivial": self.almost_trivial,
            "abelian": self.abelian,
            "two_sided": self.two_sided,
            "bi_skew": self.bi_skew,
        }


def _find_identity(table: Sequence[Sequence[int]]) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(
            table[i][e] == i for i in range(n)
        ):
            return e
    return None


def _relabel(table: Sequence[Sequence[int]], sigma: Sequence[int]) -> list[list[int]]:
    n = len(table)
    return [[sigma[table[sigma[i]][sigma[j]]] for j in range(n)] for i in range(n)]


def assemble(add: FiniteGroup, mul: FiniteGroup) -> SkewBrace:
    """Build a brace from two validated groups on the same index set.

    Checks the compatibility law on every triple, then builds and verifies
    the lambda cache. Raises LeftDistributivityFails at the first bad
    triple.
    """
    n = add.n
    if mul.n != n:
        raise ValueError(f"group orders differ: {add.n} vs {mul.n}")
    at = add.table
    mt = mul.table
    ainv = add.inv
    for a in range(n):
        neg_a = ainv[a]
        mrow = mt[a]
        for b in range(n):
            ab_minus_a = at[mrow[b]][neg_a]
            for c in range(n):
                if mrow[at[b][c]] != at[ab_minus_a][mrow[c]]:
                    raise LeftDistributivityFails(a, b, c)

    lam = tuple(
        tuple(at[ainv[a]][mt[a][b]] for b in range(n)) for a in range(n)
    )
    _verify_lambda(add, mul, lam)
    return SkewBrace(n=n, add=add, mul=mul, lam=lam)


def _verify_lambda(add: FiniteGroup, mul: FiniteGroup, lam: tuple[Perm, ...]) -> None:
    n = add.n
    if lam[0] != tuple(range(n)):
        raise ConstructionFailed("lambda of the identity is not the identity map")
    at = add.table
    for a in range(n):
        p = lam[a]
        if sorted(p) != list(range(n)):
            raise ConstructionFailed(f"lambda[{a}] is not a permutation")
        for b in range(n):
            for c in range(n):
                if p[at[b][c]] != at[p[b]][p[c]]:
                    raise ConstructionFailed(
                        f"lambda[{a}] is not additive at ({b}, {c})"
                    )
    for a in range(n):
        for b in range(n):
            composed = tuple(lam[a][lam[b][c]] for c in range(n))
            if lam[mul.table[a][b]] != composed:
                raise ConstructionFailed(
                    f"lambda is not multiplicative at ({a}, {b})"
                )


def make_skew_brace(
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    add_name: str = "",
    mul_name: str = "",
) -> SkewBrace:
    """Validate both tables, normalize the shared identity to 0, and check
    the compatibility law. Raises IdentityMismatch if the two tables have
    different identity elements."""
    if len(add_table) != len(mul_table):
        raise ValueError("additive and multiplicative tables differ in size")
    e_add = _find_identity(add_table)
    e_mul = _find_identity(mul_table)
    if e_add is None or e_mul is None:
        # let make_group produce the precise NoIdentity error
        add = make_group(add_table, name=add_name)
        make_group(mul_table, name=mul_name)
        raise ConstructionFailed("unreachable")  # pragma: no cover
    if e_add != e_mul:
        raise IdentityMismatch(e_add, e_mul)
    if e_add != 0:
        sigma = list(range(len(add_table)))
        sigma[0], sigma[e_add] = e_add, 0
        add_table = _relabel(add_table, sigma)
        mul_table = _relabel(mul_table, sigma)
    add = make_group(add_table, name=add_name)
    mul = make_group(mul_table, name=mul_name)
    return assemble(add, mul)


def lambda_of(B: SkewBrace, a: int) -> Perm:
    """The additive automorphism b -> -a + a*b."""
    return B.lam[a]


def star(B: SkewBrace, a: int, b: int) -> int:
    """The star product -a + a*b - b, the gap between the two operations."""
    return B.add.table[B.lam[a][b]][B.add.inv[b]]


def opposite(B: SkewBrace) -> SkewBrace:
    """Same multiplication over the opposite additive group (a + b read
    as b + a)."""
    n = B.n
    t = B.add.table
    transposed = [[t[j][i] for j in range(n)] for i in range(n)]
    add = make_group(transposed, name=B.add.name + "^op" if B.add.name else "")
    return assemble(add, B.mul)


def swap(B: SkewBrace) -> Optional[SkewBrace]:
    """The structure with the two operations exchanged, when it is again a
    skew brace; None otherwise. Success is exactly the bi-skew property."""
    try:
        return assemble(B.mul, B.add)
    except LeftDistributivityFails:
        return None


def is_trivial(B: SkewBrace) -> bool:
    return B.mul.table == B.add.table


def is_almost_trivial(B: SkewBrace) -> bool:
    n = B.n
    at = B.add.table
    mt = B.mul.table
    return all(mt[a][b] == at[b][a] for a in range(n) for b in range(n))


def is_two_sided(B: SkewBrace) -> bool:
    """Whether the mirrored law (b + c)*a = b*a - a + c*a also holds."""
    n = B.n
    at = B.add.table
    mt = B.mul.table
    ainv = B.add.inv
    for a in range(n):
        neg_a = ainv[a]
        col = [mt[x][a] for x in range(n)]
        for b in range(n):
            ba_minus_a = at[col[b]][neg_a]
            for c in range(n):
                if col[at[b][c]] != at[ba_minus_a][col[c]]:
                    return False
    return True


def classify(B: SkewBrace) -> BraceFlags:
    trivial = is_trivial(B)
    almost = is_almost_trivial(B)
    add_abelian = all(
        B.add.table[a][b] == B.add.table[b][a]
        for a in range(B.n)
        for b in range(B.n)
    )
    return BraceFlags(
        trivial=trivial,
        almost_trivial=almost,
        abelian=trivial and add_abelian,
        two_sided=is_two_sided(B),
        bi_skew=swap(B) is not None,
    )


def from_group(G: FiniteGroup, mode: Literal["trivial", "almost_trivial"]) -> SkewBrace:
    """The trivial brace (a*b = a+b) or the almost trivial brace
    (a*b = b+a) on a group."""
    if mode == "trivial":
        return assemble(G, G)
    if mode == "almost_trivial":
        n = G.n
        t = G.table
        mul_table = [[t[b][a] for b in range(n)] for a in range(n)]
        mul = make_group(mul_table, name=G.name + "^op" if G.name else "")
        return assemble(G, mul)
    raise ValueError(f"unknown mode {mode!r}")
