import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracle import f_chain, group, naive_fmaj, naive_inv, naive_maj, naive_majF, naive_product
from signed_mahonian.cycring import CycCoeff
from signed_mahonian.perm import (
    CharacterSpec,
    ColoredInt,
    ColoredPermutation,
    ColoredWord,
    Des,
    character,
    col,
    colored_inverse,
    compose,
    des,
    des_F,
    dmaj,
    f_less,
    fmaj,
    format_word,
    inv,
    maj,
    maj_F,
    parse_permutation,
    parse_word,
    stats,
)

WORKED = "4^2,2^1,5^1,1,3^1"
LONG_W = (8, 9, 7, 1, 6, 2, 4, 3, 5)


def P(text, r):
    return parse_permutation(text, r)


# -- F-order --------------------------------------------------------------------

def test_f_less_examples():
    assert f_less(ColoredInt(4, 2), ColoredInt(2, 1), 3)
    assert f_less(ColoredInt(2, 1), ColoredInt(5, 1), 3)
    assert not f_less(ColoredInt(1, 0), ColoredInt(3, 1), 3)


def test_f_less_rejects_color_out_of_range():
    with pytest.raises(ValueError):
        f_less(ColoredInt(1, 3), ColoredInt(2, 0), 3)


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 6) for n in range(1, 6)])
def test_f_order_is_strict_total_order(r, n):
    elems = [ColoredInt(v, c) for v in range(1, n + 1) for c in range(r)]
    for a in elems:
        assert not f_less(a, a, r)
        for b in elems:
            if a != b:
                assert f_less(a, b, r) != f_less(b, a, r)
    ordered = sorted(elems, key=lambda e: sum(f_less(x, e, r) for x in elems))
    assert [(e.value, e.color) for e in ordered] == f_chain(r, n)
    for a, b, c in itertools.combinations(ordered, 3):
        assert f_less(a, b, r) and f_less(b, c, r) and f_less(a, c, r)


# -- integer sequences ---------------------------------------------------------

def test_inv_examples():
    assert inv((1, 2, 3)) == 0
    assert inv((2, 1)) == 1
    # independent pair count; the hand value 17 sometimes quoted for this word is maj, not inv
    assert inv(LONG_W) == naive_inv(LONG_W) == 25


def test_maj_examples():
    assert maj(LONG_W) == 17
    assert maj(tuple(range(1, 8))) == 0
    assert Des(LONG_W) == {2, 3, 5, 7}
    assert des(LONG_W) == 4


def test_duplicates_rejected():
    with pytest.raises(ValueError):
        inv((1, 1))
    with pytest.raises(ValueError):
        Des((2, 2, 1))
    with pytest.raises(ValueError):
        ColoredWord(2, (1, 1), (0, 0))


# -- statistics -----------------------------------------------------------------

def test_worked_example():
    pi = P(WORKED, 3)
    assert col(pi) == 5
    assert maj_F(pi) == 4
    assert fmaj(pi) == 17
    assert des_F(pi) == {4}


def test_col_examples():
    assert col(ColoredPermutation.identity(3, 4)) == 0
    assert col(P("1^1,2^1", 2)) == 2


def test_identity_fmaj_is_zero():
    for r in range(1, 4):
        assert fmaj(ColoredPermutation.identity(r, 5)) == 0


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 4) for n in range(1, 5)])
def test_stats_match_naive(r, n):
    for sigma, z in group(r, n):
        pi = ColoredPermutation(r, sigma, z)
        assert maj_F(pi) == naive_majF(sigma, z, r)
        assert fmaj(pi) == naive_fmaj(sigma, z, r) == r * maj_F(pi) + col(pi)
        if r == 1:
            assert fmaj(pi) == maj(sigma) == naive_maj(sigma)


def test_character_examples():
    pi = P(WORKED, 3)
    assert character(pi, CharacterSpec(1, 0)) == CycCoeff.integer(3, 1)
    # r=2, (2^1, 1): inv 1, col 1 -> -zeta = +1
    assert character(P("2^1,1", 2), CharacterSpec(-1, 1)) == CycCoeff.integer(2, 1)
    # inv(4,2,5,1,3) = 6 by pair count, so the value is +zeta^2
    assert naive_inv((4, 2, 5, 1, 3)) == 6
    assert character(pi, CharacterSpec(-1, 1)) == CycCoeff.zeta_power(3, 2)


def test_r1_character_is_sign():
    for sigma, z in group(1, 4):
        pi = ColoredPermutation(1, sigma, z)
        assert character(pi, CharacterSpec(-1, 0)) == CycCoeff.integer(1, (-1) ** inv(sigma))


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 4) for n in range(1, 4)])
def test_characters_are_homomorphisms(r, n):
    elems = [ColoredPermutation(r, s, z) for s, z in group(r, n)]
    specs = [CharacterSpec(e, h) for e in (1, -1) for h in range(r)]
    for a in elems:
        for b in elems:
            ab = a * b
            for spec in specs:
                assert character(a, spec) * character(b, spec) == character(ab, spec)


def test_dmaj_examples():
    # uncolored: Dmaj = fmaj = r * maj, which is maj only at r = 1
    for sigma in itertools.permutations(range(1, 5)):
        assert dmaj(ColoredPermutation(1, sigma, (0,) * 4)) == maj(sigma)
        assert dmaj(ColoredPermutation(3, sigma, (0,) * 4)) == 3 * maj(sigma)
    assert dmaj(P("2^1,1^1", 2)) == 1
    tws = P("8^1,9^1,7,1^2,6^2,2^1,4^1,3,5^1", 3)
    assert dmaj(tws) == 17


def test_dmaj_outside_star_group_raises():
    with pytest.raises(ValueError):
        dmaj(P("2^1,1", 2))


# -- group law --------------------------------------------------------------------

def test_inverse_examples():
    e = ColoredPermutation.identity(3, 4)
    assert colored_inverse(e) == e
    assert colored_inverse(P("2^1,1", 2)) == P("2,1^1", 2)


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 5) for n in range(1, 5)])
def test_inverse_and_involution(r, n):
    e = ColoredPermutation.identity(r, n)
    for sigma, z in group(r, n):
        pi = ColoredPermutation(r, sigma, z)
        ip = colored_inverse(pi)
        assert pi * ip == e and ip * pi == e
        assert colored_inverse(ip) == pi


@pytest.mark.parametrize("r, n", [(2, 3), (3, 3)])
def test_compose_matches_function_composition(r, n):
    elems = list(group(r, n))
    for a in elems:
        for b in elems:
            got = compose(ColoredPermutation(r, *a), ColoredPermutation(r, *b))
            assert (got.values, got.colors) == naive_product(a, b, r)


def test_compose_rejects_mismatch():
    with pytest.raises(ValueError):
        compose(ColoredPermutation.identity(2, 2), ColoredPermutation.identity(3, 2))


# -- notation --------------------------------------------------------------------------

def test_parse_and_format():
    pi = P(WORKED, 3)
    assert pi.values == (4, 2, 5, 1, 3) and pi.colors == (2, 1, 1, 0, 1)
    assert format_word(pi) == WORKED
    assert str(pi) == WORKED
    assert P("(1, 2^1)", 2) == P("1,2^1", 2)


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 5) for n in range(1, 5)])
def test_round_trip_exhaustive(r, n):
    for sigma, z in group(r, n):
        pi = ColoredPermutation(r, sigma, z)
        assert parse_permutation(format_word(pi), r) == pi


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))), st.data())
def test_round_trip_random(r, sigma, data):
    z = data.draw(st.lists(st.integers(0, r - 1), min_size=len(sigma), max_size=len(sigma)))
    pi = ColoredPermutation(r, tuple(sigma), tuple(z))
    assert parse_word(format_word(pi), r) == pi


@pytest.mark.parametrize("bad", ["1,1", "2,3", "1^3,2", "1,,2", "a,b"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_permutation(bad, 3)


def test_parse_word_returns_word_for_partial_support():
    w = parse_word("3^1,5", 2)
    assert type(w) is ColoredWord and w.support == {3, 5}


def test_stats_output():
    assert stats(P(WORKED, 3)) == {"inv": 6, "Des_F": [4], "maj_F": 4, "col": 5, "fmaj": 17}
    s = stats(P("1,2,3", 1))
    assert all(v in (0, []) for v in s.values()) and "Dmaj" in s
    s = stats(P("2^1,1", 2))
    assert (s["inv"], s["col"], s["fmaj"]) == (1, 1, 1) and "Dmaj" not in s
