from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from colourdyck.errors import SizeTooLarge
from colourdyck.structures import (
    LIMITS,
    Dissection,
    EvenPartition,
    NCOTree,
    NCTree,
    NonCrossingPartition,
    check_size,
    chords_cross,
    crossing_witness,
    enumerate_structures,
    from_json,
    hulls_disjoint,
    set_limit,
    validate,
)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def set_partitions(points):
    """Every set partition of ``points`` (restricted growth strings)."""
    points = list(points)
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def polygon_cells_brute(k, diagonals):
    """Cells found by walking the planar faces: at each vertex take the next neighbour clockwise."""
    v = k + 2
    nbrs = {x: {(x + 1) % v, (x - 1) % v} for x in range(v)}
    for x, y in diagonals:
        nbrs[x].add(y)
        nbrs[y].add(x)
    faces = set()
    for x in range(v):
        for y in nbrs[x]:
            face, a, b = [x], x, y
            while b != x:
                face.append(b)
                # next vertex after a, going clockwise around b
                cands = sorted(nbrs[b], key=lambda z: (z - b) % v)
                a, b = b, cands[(cands.index(a) - 1) % len(cands)]
            if len(face) > 2 and len(face) < v or not diagonals:
                faces.add(tuple(sorted(face)))
    return sorted(faces)


@pytest.mark.parametrize("e, f, crossing", [
    ((1, 3), (2, 4), True),
    ((1, 2), (3, 4), False),
    ((1, 4), (2, 3), False),
    ((1, 3), (3, 4), False),
    ((2, 4), (3, 1), True),
])
def test_chords_cross(e, f, crossing):
    assert chords_cross(e, f) is crossing


def test_tree_examples():
    assert validate(NCTree(3, ((1, 2), (1, 3)))) is None
    v = validate(NCTree(4, ((1, 3), (2, 4))))
    assert v.invariant == "non-crossing"
    assert v.witness == ((1, 3), (2, 4))


@pytest.mark.parametrize("tree, invariant", [
    (NCTree(3, ((1, 2),)), "tree has n-1 edges"),
    (NCTree(3, ((1, 2), (1, 2))), "no repeated edges"),
    (NCTree(3, ((1, 4), (1, 2))), "edge endpoints within 1..n and distinct"),
    (NCTree(4, ((1, 2), (2, 3), (1, 3))), "acyclic"),
    (NCTree(5, ((1, 2), (2, 3), (1, 3), (4, 5))), "acyclic"),
    (NCOTree(3, ((1, 3), (2, 3))), "in-degree 1 at every vertex except 1"),
])
def test_tree_violations(tree, invariant):
    assert validate(tree).invariant == invariant


def test_partition_examples():
    assert validate(NonCrossingPartition(4, ((1, 4), (2, 3)))) is None
    v = validate(NonCrossingPartition(4, ((1, 3), (2, 4))))
    assert v.invariant == "non-crossing"
    assert v.witness == ((1, 3), (2, 4))
    assert validate(NonCrossingPartition(3, ((1, 2),))).invariant == "blocks partition 1..n"


def test_even_partition_rules():
    assert validate(EvenPartition(4, ((1, 2, 3, 4),))) is None
    assert validate(EvenPartition(4, ((1, 2, 3), (4,)))).invariant == "blocks of even size"
    assert validate(EvenPartition(4, ((1, 2, 3, 4),), 1)).invariant == "blocks of size at most 2"


def test_dissection_examples():
    d = Dissection(3, ((0, 2),))
    assert validate(d) is None
    assert sorted(len(c) for c in d.cells()) == [3, 4]
    assert validate(Dissection(3, ((0, 1),))).invariant == "diagonals are not polygon sides"
    assert validate(Dissection(3, ((0, 4),))).invariant == "diagonals are not polygon sides"
    assert validate(Dissection(4, ((0, 2), (1, 3)))).invariant == "non-crossing"
    assert validate(Dissection(3, (), 1)).invariant == "cells have at most 3 vertices"
    assert validate(Dissection(-1, ())) is not None


@pytest.mark.parametrize("text", [
    '{"n":3,"edges":[[1,2],[1,3]]}',
    '{"blocks":[[1,2],[3]]}',
    '{"k":3,"diagonals":[[0,2]]}',
])
def test_json_roundtrip(text):
    assert from_json(text).to_json() == text


def test_json_unknown_shape():
    with pytest.raises(ValueError):
        from_json('{"points":[1]}')


@pytest.mark.parametrize("n", range(0, 9))
def test_crossing_predicates_agree_on_all_partitions(n):
    pts = range(1, n + 1)
    for part in set_partitions(pts):
        plain = crossing_witness(part) is None
        assert plain == hulls_disjoint(part), part
        chord_based = not any(
            chords_cross(e, f)
            for x, y in combinations(part, 2)
            for e in combinations(x, 2) for f in combinations(y, 2))
        assert plain == chord_based


@pytest.mark.parametrize("n", range(0, 11))
def test_partition_oracle(n):
    found = list(enumerate_structures("partition", n))
    assert len(found) == catalan(n)
    assert len(set(found)) == len(found)
    assert all(validate(p) is None for p in found)


@pytest.mark.parametrize("n", range(1, 7))
def test_partition_oracle_is_the_noncrossing_filter(n):
    brute = {NonCrossingPartition(n, tuple(map(tuple, p)))
             for p in set_partitions(range(1, n + 1)) if crossing_witness(p) is None}
    assert set(enumerate_structures("partition", n)) == brute


@pytest.mark.parametrize("n", range(0, 6))
def test_nc_tree_counts(n):
    trees = list(enumerate_structures("nc_tree", n + 1))
    assert len(trees) == comb(3 * n, n) // (2 * n + 1)
    assert all(validate(t) is None for t in trees)


@pytest.mark.parametrize("n", range(0, 8))
def test_nco_tree_counts(n):
    trees = list(enumerate_structures("nco_tree", n + 1))
    assert len(trees) == catalan(n)
    assert all(t.in_degree(1) == 0 for t in trees)


def test_nc_tree_oracle_against_brute_force():
    n = 5
    chords = list(combinations(range(1, n + 1), 2))
    brute = set()
    for edges in combinations(chords, n - 1):
        t = NCTree(n, edges)
        if validate(t) is None:
            brute.add(t)
    assert set(enumerate_structures("nc_tree", n)) == brute


@pytest.mark.parametrize("m, expected", [
    (None, [1, 1, 3, 12, 55, 273]),
    (1, [1, 1, 2, 5, 14, 42]),
    (2, [1, 1, 3, 11, 46, 207]),
])
def test_even_partition_counts(m, expected):
    assert [sum(1 for _ in enumerate_structures("even_partition", n, m)) for n in range(6)] == expected


@pytest.mark.parametrize("m, expected", [
    (None, [1, 1, 3, 11, 45, 197, 903]),
    (1, [1, 1, 2, 5, 14, 42, 132]),
    (2, [1, 1, 3, 10, 38, 154, 654]),
])
def test_dissection_counts(m, expected):
    assert [sum(1 for _ in enumerate_structures("dissection", k, m)) for k in range(7)] == expected


@pytest.mark.parametrize("k", range(0, 7))
def test_cell_sizes_add_up(k):
    for d in enumerate_structures("dissection", k):
        cells = d.cells()
        assert len(cells) == len(d.diagonals) + 1
        assert sum(len(c) - 2 for c in cells) == k


@pytest.mark.parametrize("k", range(1, 6))
def test_cells_match_face_walk(k):
    for d in enumerate_structures("dissection", k):
        assert d.cells() == polygon_cells_brute(k, d.diagonals)


def test_guardrails():
    with pytest.raises(SizeTooLarge):
        list(enumerate_structures("nc_tree", LIMITS["tree"] + 1))
    with pytest.raises(SizeTooLarge):
        list(enumerate_structures("dissection", LIMITS["polygon"] - 1))
    with pytest.raises(SizeTooLarge):
        check_size("t_path", LIMITS["t_path"] + 1)
    old = LIMITS["tree"]
    try:
        set_limit("tree", 2)
        with pytest.raises(SizeTooLarge):
            list(enumerate_structures("nc_tree", 3))
    finally:
        set_limit("tree", old)
    with pytest.raises(KeyError):
        set_limit("graph", 3)


def test_unknown_kind():
    with pytest.raises(ValueError):
        list(enumerate_structures("graph", 2))


@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=n)
    .map(lambda es: (n, es))))
def test_validate_accepts_exactly_the_oracle_trees(case):
    n, edges = case
    edges = tuple(tuple(sorted(e)) for e in edges if e[0] != e[1])
    t = NCTree(n, edges)
    expected = len(set(edges)) == len(edges) and t in set(enumerate_structures("nc_tree", n))
    assert (validate(t) is None) == expected
