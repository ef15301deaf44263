from itertools import product

import pytest

from sbk.braces import (
    classify,
    from_group,
    is_two_sided,
    lambda_of,
    make_skew_brace,
    opposite,
    star,
    swap,
)
from sbk.enumeration import all_skew_braces
from sbk.errors import IdentityMismatch, LeftDistributivityFails
from sbk.groups import cyclic_group, dihedral_group, element_order


def z3_table():
    return [[(i + j) % 3 for j in range(3)] for i in range(3)]


def test_trivial_brace_of_order_3():
    B = make_skew_brace(z3_table(), z3_table())
    flags = classify(B)
    assert flags.trivial and flags.abelian and flags.two_sided and flags.bi_skew


def test_invalid_pairing_raises():
    # two cyclic tables sharing identity 0 but incompatibly labeled;
    # found by scanning all table pairs of order 4
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]]
    mul = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]
    with pytest.raises(LeftDistributivityFails) as err:
        make_skew_brace(add, mul)
    a, b, c = err.value.triple
    neg = [row.index(0) for row in add]
    assert mul[a][add[b][c]] != add[add[mul[a][b]][neg[a]]][mul[a][c]]


def test_every_klein_cyclic_pairing_is_valid():
    # at order 4 the Klein table with identity 0 is unique and pairs
    # compatibly with every cyclic table in either orientation
    import oracles

    tables = oracles.group_tables_with_identity(4)
    kleins = [t for t in tables if all(t[i][i] == 0 for i in range(4))]
    cyclics = [t for t in tables if any(t[i][i] != 0 for i in range(4))]
    assert len(kleins) == 1 and len(cyclics) == 3
    for k in kleins:
        for c in cyclics:
            make_skew_brace([list(r) for r in k], [list(r) for r in c])
            make_skew_brace([list(r) for r in c], [list(r) for r in k])


def test_identity_mismatch():
    # second table is a group whose identity sits at index 2
    z3 = z3_table()
    relabeled = [[z3[(i + 1) % 3][(j + 1) % 3] for j in range(3)] for i in range(3)]
    relabeled = [[(x - 1) % 3 for x in row] for row in relabeled]
    # relabeled is Z3 with identity at index 2
    with pytest.raises(IdentityMismatch):
        make_skew_brace(z3, relabeled)


def test_shared_identity_normalized_on_load():
    # both tables written with identity at index 1: loader renumbers
    z3 = z3_table()
    sigma = [1, 0, 2]
    relabeled = [
        [sigma[z3[sigma[i]][sigma[j]]] for j in range(3)] for i in range(3)
    ]
    B = make_skew_brace(relabeled, relabeled)
    assert B.add.table[0] == (0, 1, 2)
    assert classify(B).trivial


def test_almost_trivial_sym3_valid():
    B = from_group(dihedral_group(6), "almost_trivial")
    flags = classify(B)
    assert flags.almost_trivial and not flags.trivial
    assert flags.two_sided and flags.bi_skew and not flags.abelian


def test_lambda_trivial_brace_is_identity():
    B = from_group(cyclic_group(6), "trivial")
    for a in range(6):
        assert lambda_of(B, a) == tuple(range(6))


def test_lambda_almost_trivial_is_conjugation():
    B = from_group(dihedral_group(6), "almost_trivial")
    at = B.add.table
    ainv = B.add.inv
    for a in range(6):
        expected = tuple(at[at[ainv[a]][b]][a] for b in range(6))
        assert lambda_of(B, a) == expected


def test_lambda_of_zero_is_identity():
    for B in all_skew_braces(6).entries:
        assert lambda_of(B, 0) == tuple(range(6))


def test_star_trivial_brace_vanishes():
    B = from_group(cyclic_group(6), "trivial")
    assert all(star(B, a, b) == 0 for a in range(6) for b in range(6))


def test_star_fixes_zero_slots():
    for B in all_skew_braces(8).entries[:10]:
        for a in range(8):
            assert star(B, a, 0) == 0
            assert star(B, 0, a) == 0


def test_star_almost_trivial_matches_definition():
    B = from_group(dihedral_group(6), "almost_trivial")
    at = B.add.table
    ainv = B.add.inv
    mt = B.mul.table
    for a in range(6):
        for b in range(6):
            assert star(B, a, b) == at[at[ainv[a]][mt[a][b]]][ainv[b]]


def test_opposite_is_involutive():
    for B in all_skew_braces(6).entries:
        BB = opposite(opposite(B))
        assert BB.add.table == B.add.table
        assert BB.mul.table == B.mul.table


def test_opposite_of_trivial_is_almost_trivial():
    B = opposite(from_group(dihedral_group(6), "trivial"))
    assert classify(B).almost_trivial


def test_opposite_lambda_formula():
    # the opposite lambda is the additive conjugate: a + lam_a(b) - a
    for B in all_skew_braces(6).entries:
        Bo = opposite(B)
        at = B.add.table
        ainv = B.add.inv
        for a in range(B.n):
            for b in range(B.n):
                assert Bo.lam[a][b] == at[at[a][B.lam[a][b]]][ainv[a]]


def test_opposite_star_formula():
    # a *op b = -b + ab - a, computed through the opposite brace
    for B in all_skew_braces(6).entries:
        Bo = opposite(B)
        at = B.add.table
        ainv = B.add.inv
        mt = B.mul.table
        for a in range(B.n):
            for b in range(B.n):
                assert star(Bo, a, b) == at[at[ainv[b]][mt[a][b]]][ainv[a]]


def test_swap_of_trivial_brace_always_succeeds():
    for n in (4, 6, 8):
        from sbk.enumeration import groups_of_order

        for G in groups_of_order(n):
            B = from_group(G, "trivial")
            assert swap(B) is not None


def test_swap_returns_none_for_two_sided_non_bi_skew():
    found = None
    for n in range(2, 9):
        for B in all_skew_braces(n).entries:
            flags = classify(B)
            if flags.two_sided and not flags.bi_skew:
                found = B
                break
        if found:
            break
    assert found is not None
    assert swap(found) is None


def test_swapped_lambda_relation_on_bi_skew():
    # the lambda map of the swapped brace at the inverse index agrees with
    # the original lambda map
    for B in all_skew_braces(6).entries:
        sw = swap(B)
        if sw is None:
            continue
        for a in range(B.n):
            for b in range(B.n):
                assert sw.lam[B.mul.inv[a]][b] == B.lam[a][b]


def test_classify_trivial_on_abelian_group():
    B = from_group(cyclic_group(4), "trivial")
    flags = classify(B)
    assert flags == classify(from_group(cyclic_group(4), "almost_trivial"))
    assert flags.trivial and flags.almost_trivial and flags.abelian
    assert flags.two_sided and flags.bi_skew


def test_classify_flag_implications():
    for n in range(1, 9):
        for B in all_skew_braces(n).entries:
            flags = classify(B)
            if flags.abelian:
                assert flags.trivial
            add_abelian = all(
                B.add.table[a][b] == B.add.table[b][a]
                for a in range(n)
                for b in range(n)
            )
            assert flags.abelian == (flags.trivial and add_abelian)


def test_prime_order_braces_are_trivial_with_equal_groups():
    for p in (2, 3, 5, 7, 11):
        entries = all_skew_braces(p).entries
        assert len(entries) == 1
        B = entries[0]
        assert classify(B).trivial
        assert B.add.table == B.mul.table
        assert element_order(B.add, 1) == p


def test_trivial_braces_are_two_sided():
    from sbk.enumeration import groups_of_order

    for n in (4, 6, 8, 12):
        for G in groups_of_order(n):
            assert classify(from_group(G, "trivial")).two_sided


def test_from_group_same_brace_on_abelian():
    G = cyclic_group(5)
    assert (
        from_group(G, "trivial").mul.table
        == from_group(G, "almost_trivial").mul.table
    )


def test_lambda_is_multiplicative_homomorphism():
    for B in all_skew_braces(8).entries[:12]:
        n = B.n
        for a in range(n):
            for b in range(n):
                composed = tuple(B.lam[a][B.lam[b][c]] for c in range(n))
                assert B.lam[B.mul.table[a][b]] == composed


def test_two_sided_scan_matches_flag():
    for B in all_skew_braces(6).entries:
        at, mt, ainv = B.add.table, B.mul.table, B.add.inv
        expected = all(
            mt[at[b][c]][a] == at[at[mt[b][a]][ainv[a]]][mt[c][a]]
            for a, b, c in product(range(B.n), repeat=3)
        )
        assert is_two_sided(B) == expected
