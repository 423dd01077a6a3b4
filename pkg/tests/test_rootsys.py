from itertools import combinations

import numpy as np
import pytest

from flagdeform.rootsys import (
    CartanType,
    RootSystemError,
    build,
    cartan_matrix,
    expansion_multiplicity,
    filter_roots,
)

ALL_TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C6", "D3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


def euclidean_positive_roots(family, n):
    """Classical positive roots in e-coordinates, converted to simple-root coordinates."""
    e = lambda i: tuple(1 if k == i else 0 for k in range(n + (1 if family == "A" else 0)))
    add = lambda x, y, s=1: tuple(a + s * b for a, b in zip(x, y))
    if family == "A":
        simple = [add(e(i), e(i + 1), -1) for i in range(n)]
        roots = [add(e(i), e(j), -1) for i, j in combinations(range(n + 1), 2)]
    else:
        simple = [add(e(i), e(i + 1), -1) for i in range(n - 1)]
        roots = [add(e(i), e(j), s) for i, j in combinations(range(n), 2) for s in (1, -1)]
        if family == "B":
            simple.append(e(n - 1))
            roots += [e(i) for i in range(n)]
        elif family == "C":
            simple.append(tuple(2 * x for x in e(n - 1)))
            roots += [tuple(2 * x for x in e(i)) for i in range(n)]
        else:
            simple.append(add(e(n - 2), e(n - 1)))
    # solve by least squares in exact arithmetic: simple roots are independent
    M = np.array(simple, dtype=float).T
    out = set()
    for r in roots:
        c, *_ = np.linalg.lstsq(M, np.array(r, dtype=float), rcond=None)
        ci = tuple(int(round(x)) for x in c)
        assert np.allclose(M @ np.array(ci), r)
        out.add(ci)
    return out


@pytest.mark.parametrize("t", ["A1", "A2", "A4", "B2", "B3", "B4", "C2", "C3", "C6", "D4", "D5"])
def test_closure_matches_euclidean_realisation(t):
    rs = build(t)
    assert set(rs.positive_roots) == euclidean_positive_roots(rs.cartan_type.family, rs.rank)


@pytest.mark.parametrize(
    "t, count", [("A2", 3), ("B4", 16), ("C6", 36), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("E8", 120)]
)
def test_positive_root_counts(t, count):
    assert build(t).n_positive == count


def test_a2_roots():
    assert set(build("A2").positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_ordering_is_height_graded_with_simple_roots_first():
    rs = build("B4")
    heights = [sum(r) for r in rs.positive_roots]
    assert heights == sorted(heights)
    assert rs.positive_roots[:4] == tuple(rs.simple_root(i) for i in range(1, 5))


def test_bourbaki_short_and_long_last_roots():
    b4, c6 = build("B4"), build("C6")
    assert b4.symmetrizer[-1] < b4.symmetrizer[0]
    assert c6.symmetrizer[-1] > c6.symmetrizer[0]


@pytest.mark.parametrize(
    "t, short",
    [("B4", {4}), ("C4", {1, 2, 3}), ("G2", {1}), ("F4", {3, 4})],
)
def test_bourbaki_short_roots(t, short):
    rs = build(t)
    d = rs.symmetrizer
    assert {i + 1 for i in range(rs.rank) if d[i] == min(d)} == short
    # the short root's row carries the -2 or -3
    a = cartan_matrix(rs.cartan_type)
    for i, j in [(i, j) for i in range(rs.rank) for j in range(rs.rank) if a[i][j] < -1]:
        assert i + 1 in short and j + 1 not in short


def test_cartan_matrix_symmetrizable():
    for t in ALL_TYPES:
        rs = build(t)
        a, d = rs.cartan_matrix, rs.symmetrizer
        for i in range(rs.rank):
            for j in range(rs.rank):
                assert d[i] * a[i][j] == d[j] * a[j][i]


@pytest.mark.parametrize("text", ["B4", "b4", " C6 ", "A_3", "g2"])
def test_parse(text):
    ct = CartanType.parse(text)
    assert str(ct) == text.strip().replace("_", "").upper()


@pytest.mark.parametrize("text", ["D2", "E5", "F3", "G3", "A0", "X4", "B", "4B"])
def test_invalid_types_rejected(text):
    with pytest.raises(RootSystemError):
        CartanType.parse(text)


def test_expansion_multiplicity():
    rs = build("B2")
    assert expansion_multiplicity(rs, 2, (1, 2)) == 2
    for t in ["A3", "B4", "G2"]:
        rs = build(t)
        for i in range(1, rs.rank + 1):
            assert expansion_multiplicity(rs, i, rs.simple_root(i)) == 1
    # beta in the A_2 spanned by alpha_1, alpha_2 inside B4 avoids alpha_4
    assert expansion_multiplicity(build("B4"), 4, (1, 1, 0, 0)) == 0
    with pytest.raises(RootSystemError):
        expansion_multiplicity(rs, 1, (5, 5))


def test_filters():
    assert filter_roots(build("A2"), 1, 1) == {(1, 0), (1, 1)}
    assert filter_roots(build("B2"), 2, 2) == {(1, 2)}
    for t in ["B4", "G2", "F4"]:
        rs = build(t)
        for i in range(1, rs.rank + 1):
            assert filter_roots(rs, i, rs.max_multiplicity + 1) == frozenset()
    with pytest.raises(RootSystemError):
        filter_roots(build("A2"), 1, 0)


def _root_poset_leq(rs, beta, gamma):
    """gamma - beta is a nonnegative integer combination of positive roots: coordinatewise >= 0."""
    return all(g >= b for b, g in zip(beta, gamma))


@pytest.mark.parametrize("t", ["A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"])
def test_filters_are_upsets(t):
    rs = build(t)
    for i in range(1, rs.rank + 1):
        for k in range(1, rs.max_multiplicity + 1):
            J = filter_roots(rs, i, k)
            for beta in J:
                for gamma in rs.positive_roots:
                    if _root_poset_leq(rs, beta, gamma):
                        assert gamma in J


@pytest.mark.parametrize("t", ALL_TYPES)
def test_reflections_are_involutions_and_permute(t):
    rs = build(t)
    table = rs.reflection_table
    ids = np.arange(2 * rs.n_positive)
    for i in range(rs.rank):
        assert (table[i][table[i]] == ids).all()
        ai = rs.simple_root_id(i + 1)
        assert table[i][ai] == rs.negate(ai)
        others = [r for r in range(rs.n_positive) if r != ai]
        assert all(rs.is_positive(int(table[i][r])) for r in others)


@pytest.mark.parametrize("t", [t for t in ALL_TYPES if int(t[1:]) <= 6])
def test_twice_rho_pairs_to_two(t):
    rs = build(t)
    two_rho = np.sum(np.array(rs.positive_roots), axis=0)
    assert (np.array(rs.cartan_matrix) @ two_rho == 2).all()


@pytest.mark.parametrize("n", range(1, 9))
def test_type_a_multiplicities_at_most_one(n):
    assert build(f"A{n}").max_multiplicity == 1


def test_coroot_coefficients_b2():
    rs = build("B2")
    # alpha_1 + alpha_2 = e_1 is short, its coroot is 2 alpha_1^vee + alpha_2^vee
    assert [rs.coroot_coefficient(i, (1, 1)) for i in (1, 2)] == [2, 1]
    assert [rs.coroot_coefficient(i, (1, 2)) for i in (1, 2)] == [1, 1]
    assert rs.inner((1, 2), (1, 2)) == 2 * rs.inner((1, 1), (1, 1))
