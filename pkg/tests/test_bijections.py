from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from colourdyck.bijections import (
    fib_to_ls,
    ls_to_fib,
    phi,
    phi_inv,
    psi,
    psi_inv,
    rho,
    rho_inv,
    schroeder_to_t,
    sigma,
    sigma_inv,
    t_to_schroeder,
    theta,
    theta_inv,
)
from colourdyck.colours import ColourSystem, enumerate_coloured, parse_coloured
from colourdyck.errors import (
    InvalidDissection,
    InvalidPartition,
    NotALittleSchroederPath,
    NotAnNCOTree,
    NotAnNCTree,
    NotATPath,
    WrongColourSystem,
)
from colourdyck.paths import DyckPath, ascents, enumerate_family
from colourdyck.structures import (
    Dissection,
    EvenPartition,
    NCTree,
    NonCrossingPartition,
    enumerate_structures,
    validate,
)


def cp(text, system=None):
    return parse_coloured(text, system)


def pyramid_sizes(colour):
    """Sizes of the pyramids whose concatenation is ``colour``."""
    out, run = [], 0
    for c in str(colour):
        if c == "U":
            run += 1
        elif run:
            out.append(run)
            run = 0
    return out


# -- worked examples ---------------------------------------------------------

@pytest.mark.parametrize("word, edges", [
    ("UD", ((1, 2),)),
    ("UUDD", ((1, 2), (1, 3))),
    ("UDUD", ((1, 2), (2, 3))),
])
def test_theta_examples(word, edges):
    tree = theta(DyckPath(word))
    assert tree.edges == edges
    assert theta_inv(tree) == DyckPath(word)


@pytest.mark.parametrize("text, edges", [
    ("UUDD;UUDD", ((1, 2), (1, 3))),
    ("UUDD;UDUD", ((1, 2), (2, 3))),
    ("UDUD;UD,UD", ((1, 3), (2, 3))),
])
def test_phi_examples(text, edges):
    assert phi(cp(text)).edges == edges


@pytest.mark.parametrize("word, blocks", [
    ("UD", ((1,),)),
    ("UUDDUD", ((1, 2), (3,))),
    ("UUDUDD", ((1, 3), (2,))),
])
def test_psi_examples(word, blocks):
    assert psi(DyckPath(word)).blocks == blocks
    assert psi_inv(NonCrossingPartition(len(word) // 2, blocks)) == DyckPath(word)


@pytest.mark.parametrize("text, blocks", [
    ("UD;UD", ((1, 2),)),
    ("UUDD;UDUD", ((1, 2), (3, 4))),
    ("UUDD;UUDD", ((1, 2, 3, 4),)),
])
def test_rho_examples(text, blocks):
    assert rho(cp(text)).blocks == blocks


@pytest.mark.parametrize("text, k, diagonals, cells", [
    ("UD;UD", 1, (), [3]),
    ("UUUDDD;UDUUDD", 3, ((0, 2),), [3, 4]),
    ("UUDD;UUDD", 2, (), [4]),
])
def test_sigma_examples(text, k, diagonals, cells):
    d = sigma(cp(text))
    assert (d.k, d.diagonals) == (k, diagonals)
    assert sorted(len(c) for c in d.cells()) == cells


@pytest.mark.parametrize("text, word", [
    ("UUDD;UUDD", "ULD"),
    ("UUDD;UDUD", "UUDD"),
    ("UUUDDD;UDUUDD", "UULDD"),
    ("UDUD;UD,UD", "UDUD"),
])
def test_fib_to_ls_examples(text, word):
    assert str(fib_to_ls(cp(text))) == word
    assert ls_to_fib(word) == cp(text)


@pytest.mark.parametrize("text, word", [
    ("UD;L", "GD"),
    ("UD;UD", "HDD"),
    ("UUDD;LL", "GGDD"),
])
def test_schroeder_to_t_examples(text, word):
    system = ColourSystem.schroeder()
    assert str(schroeder_to_t(cp(text, system))) == word
    assert t_to_schroeder(word) == cp(text, system)


# -- exhaustive roundtrips, surjectivity and size laws -------------------------

def test_theta_bijective():
    for n in range(0, 7):
        images = set()
        for p in enumerate_family(n, "dyck"):
            t = theta(p)
            assert t.n == n + 1
            assert validate(t) is None
            assert theta_inv(t) == p
            images.add(t)
        assert images == set(enumerate_structures("nco_tree", n + 1))


def test_psi_bijective():
    for n in range(0, 7):
        images = set()
        for p in enumerate_family(n, "dyck"):
            part = psi(p)
            assert part.n == n
            assert validate(part) is None
            assert psi_inv(part) == p
            assert sorted(len(b) for b in part.blocks) == sorted(a.length for a in ascents(p))
            images.add(part)
        assert images == set(enumerate_structures("partition", n))


@pytest.mark.parametrize("n", range(0, 6))
def test_phi_bijective(n):
    images = set()
    for p in enumerate_coloured(n, ColourSystem.catalan()):
        t = phi(p)
        assert t.n == n + 1
        assert validate(t) is None
        assert phi_inv(t) == p
        images.add(t)
    oracle = set(enumerate_structures("nc_tree", n + 1))
    assert images == oracle
    for t in oracle:
        assert phi(phi_inv(t)) == t


def test_phi_on_pyramids_is_theta():
    for k in range(1, 6):
        for c in enumerate_family(k, "dyck"):
            t = phi(cp(f"{'U' * k}{'D' * k};{c}"))
            assert (t.n, t.edges) == (theta(c).n, theta(c).edges)


def test_phi_accepts_trivial_colours():
    for p in enumerate_coloured(4, ColourSystem.trivial()):
        assert phi_inv(phi(p)) == p


@pytest.mark.parametrize("m", [None, 1, 2, 3])
@pytest.mark.parametrize("n", range(0, 6))
def test_rho_bijective(m, n):
    system = ColourSystem.catalan() if m is None else ColourSystem.bounded_ascent(m)
    images = set()
    for p in enumerate_coloured(n, system):
        part = rho(p, m)
        assert part.n == 2 * n
        assert validate(part) is None
        assert rho_inv(part, m) == p
        colour_ascents = [2 * a.length for c in p.colours for a in ascents(c)]
        assert Counter(len(b) for b in part.blocks) == Counter(colour_ascents)
        images.add(part)
    oracle = set(enumerate_structures("even_partition", n, m))
    assert images == oracle
    for part in oracle:
        assert rho(rho_inv(part, m), m) == part


def test_rho_with_m_one_gives_matchings():
    for n in range(1, 6):
        for p in enumerate_coloured(n, ColourSystem.bounded_ascent(1)):
            assert all(len(b) == 2 for b in rho(p, 1).blocks)


@pytest.mark.parametrize("m", [None, 1, 2, 3])
@pytest.mark.parametrize("n", range(0, 6))
def test_sigma_bijective(m, n):
    system = ColourSystem.fibonacci(m)
    images = set()
    for p in enumerate_coloured(n, system):
        d = sigma(p, m)
        assert d.k == n
        assert validate(d) is None
        assert sigma_inv(d, m) == p
        if n:
            # the empty path maps to the bare 2-gon, which has no cells to speak of
            sizes = [j + 2 for c in p.colours for j in pyramid_sizes(c)]
            assert Counter(len(c) for c in d.cells()) == Counter(sizes)
        images.add(d)
    oracle = set(enumerate_structures("dissection", n, m))
    assert images == oracle
    for d in oracle:
        assert sigma(sigma_inv(d, m), m) == d


@pytest.mark.parametrize("n", range(0, 7))
def test_fib_to_ls_bijective(n):
    images = set()
    for p in enumerate_coloured(n, ColourSystem.fibonacci_free()):
        ls = fib_to_ls(p)
        assert ls.span == 2 * n
        assert ls_to_fib(ls) == p
        images.add(ls)
    oracle = set(enumerate_family(n, "little_schroeder"))
    assert images == oracle
    for ls in oracle:
        assert fib_to_ls(ls_to_fib(ls)) == ls


@pytest.mark.parametrize("n", range(0, 5))
def test_schroeder_to_t_bijective(n):
    images = set()
    for p in enumerate_coloured(n, ColourSystem.schroeder()):
        t = schroeder_to_t(p)
        assert t.semilength == n
        assert len(t.steps) + t.steps.count("G") == 3 * n
        assert t_to_schroeder(t) == p
        images.add(t)
    oracle = set(enumerate_structures("t_path", n))
    assert images == oracle
    for t in oracle:
        assert schroeder_to_t(t_to_schroeder(t)) == t


@pytest.mark.parametrize("n", range(0, 5))
def test_colours_without_l_give_t_paths_without_g(n):
    catalan_like = set()
    for p in enumerate_coloured(n, ColourSystem.schroeder()):
        t = schroeder_to_t(p)
        has_l = any("L" in str(c) for c in p.colours)
        assert ("G" in t.steps) == has_l
        if not has_l:
            catalan_like.add(t)
    expected = sum(1 for _ in enumerate_coloured(n, ColourSystem.catalan()))
    assert len(catalan_like) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.data())
def test_phi_roundtrip_random(n, data):
    paths = list(enumerate_coloured(n, ColourSystem.catalan())) if n <= 5 else None
    if paths is None:
        base = data.draw(st.sampled_from(list(enumerate_family(n, "dyck"))))
        cols = [data.draw(st.sampled_from(list(enumerate_family(a.length, "dyck"))))
                for a in ascents(base)]
        p = parse_coloured(f"{base};{','.join(map(str, cols))}")
    else:
        p = data.draw(st.sampled_from(paths))
    assert phi_inv(phi(p)) == p


# -- rejections ------------------------------------------------------------------

def test_wrong_colour_systems():
    with pytest.raises(WrongColourSystem):
        phi(cp("UD;L"))
    with pytest.raises(WrongColourSystem):
        rho(cp("UUDD;UUDD"), 1)
    with pytest.raises(WrongColourSystem):
        sigma(cp("UUUDDD;UUDUDD"))
    with pytest.raises(WrongColourSystem):
        sigma(cp("UUDD;UUDD"), 1)
    with pytest.raises(WrongColourSystem):
        fib_to_ls(cp("UUUDDD;UUDUDD"))


def test_inverse_rejections():
    with pytest.raises(NotAnNCOTree):
        theta_inv(NCTree(3, ((1, 3), (2, 3))))
    with pytest.raises(NotAnNCTree):
        phi_inv(NCTree(4, ((1, 3), (2, 4), (1, 2))))
    with pytest.raises(InvalidPartition):
        psi_inv(NonCrossingPartition(4, ((1, 3), (2, 4))))
    with pytest.raises(InvalidPartition):
        rho_inv(EvenPartition(4, ((1, 2, 3), (4,))))
    with pytest.raises(InvalidPartition):
        rho_inv(EvenPartition(4, ((1, 2, 3, 4),)), 1)
    with pytest.raises(InvalidDissection):
        sigma_inv(Dissection(4, ((0, 2), (1, 3))))
    with pytest.raises(InvalidDissection):
        sigma_inv(Dissection(2, ()), 1)
    with pytest.raises(NotALittleSchroederPath):
        ls_to_fib("LUD")
    with pytest.raises(NotATPath):
        t_to_schroeder("HD")
