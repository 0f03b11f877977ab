from fractions import Fraction
from math import floor

import pytest
from hypothesis import given, strategies as st

from conftest import HALF, eps
from rootableaux.boxes_c import (
    book_from_shape,
    build_book_c,
    bijection_check_thm57,
    enumerate_signed_fillings,
    filling_violations,
    is_standard_filling,
    normalize_gamma_c,
    signed_values,
    tableau_word_c,
)
from rootableaux.errors import InvalidShape, NotStandard
from rootableaux.roots import WeylElement, build_root_system
from rootableaux.shapes import dominant_grid, enumerate_standard_tableaux, placed_shape, subsets_of, zero_and_one_sets


def cells(points):
    return {k: (-floor(y), floor(x)) for k, (x, y) in points.items()}


def adjacent_relations(pos):
    """(a, b, a northwest of b) for boxes on equal or adjacent diagonals."""
    c = {k: col - row for k, (row, col) in pos.items()}
    return {
        (a, b, pos[a][0] < pos[b][0] and pos[a][1] <= pos[b][1])
        for a in pos for b in pos if a != b and c[a] - c[b] in (0, 1)
    }


def plus(n, j, i):
    return eps(n, j, i, plus=True)


GENERIC_BETA = Fraction(7, 10)
GENERIC_J = [eps(12, *p) for p in [(4, 1), (4, 2), (4, 3), (5, 2), (5, 3), (7, 5), (7, 6), (8, 6),
                                   (10, 9), (10, 8), (10, 7), (11, 9), (11, 8), (11, 7), (12, 9)]]
GENERIC_POS = {1: (0.5, 2.5), 2: (1.5, 1.5), 3: (2.5, 0.5), 4: (0.5, 3.5), 5: (1.5, 2.5), 6: (3.5, 0.5),
               7: (1.5, 3.5), 8: (3.5, 1.5), 9: (4.5, 0.5), 10: (0.5, 5.5), 11: (1.5, 4.5), 12: (4.5, 1.5)}
HALF_GAMMA = (HALF, HALF, HALF, HALF, 3 * HALF, 3 * HALF, 3 * HALF, 3 * HALF, 5 * HALF, 5 * HALF, 7 * HALF)
HALF_J = [eps(11, *p) for p in [(11, 10), (10, 8), (9, 7), (9, 8), (7, 3), (7, 4), (6, 2), (6, 3), (6, 4),
                                 (5, 4), (5, 3), (5, 2)]] + [plus(11, 1, k) for k in (2, 3, 4, 1)]
HALF_POS = {-11: (0.5, 3.5), -10: (0.5, 4.5), -9: (2.5, 2.5), -8: (0.5, 5.5), -7: (2.5, 3.5), -6: (3.5, 2.5),
            -5: (4.5, 1.5), -4: (1.5, 5.5), -3: (2.5, 4.5), -2: (3.5, 3.5), -1: (6.5, 0.5), 1: (1.5, 6.5),
            2: (4.5, 3.5), 3: (5.5, 2.5), 4: (6.5, 1.5), 5: (3.5, 5.5), 6: (4.5, 4.5), 7: (5.5, 3.5),
            8: (7.5, 1.5), 9: (5.5, 4.5), 10: (7.5, 2.5), 11: (7.5, 3.5)}
ZERO_GAMMA = (0, 0, 0, 1, 1, 1, 2)
ZERO_J = [eps(7, *p) for p in [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3), (7, 6)]] + [
    plus(7, 6, 1), plus(7, 5, 1), plus(7, 5, 2), plus(7, 4, 1), plus(7, 4, 2)]
ZERO_POS = {-7: (2.5, 1.5), -6: (2.5, 2.5), -5: (3.5, 1.5), -4: (4.5, 0.5), 1: (2.5, 3.5), 2: (3.5, 2.5),
            3: (5.5, 0.5), 4: (0.5, 6.5), 5: (1.5, 5.5), 6: (2.5, 4.5), 7: (2.5, 5.5)}


def page_cells(book):
    return {b.index: (b.row, b.col) for b in book.pages[0].boxes}


def same_up_to_translation(mine, drawn):
    k0 = next(iter(mine))
    dr, dc = mine[k0][0] - drawn[k0][0], mine[k0][1] - drawn[k0][1]
    return all(mine[k] == (drawn[k][0] + dr, drawn[k][1] + dc) for k in mine) and mine.keys() == drawn.keys()


# rearrangement ------------------------------------------------------------------------

def test_normalize_orders_cosets():
    vec, w, groups = normalize_gamma_c((Fraction(-3, 2), 1, Fraction(1, 4), 0))
    assert vec == (0, 1, HALF * 3, Fraction(-1, 4))
    assert w.act((Fraction(-3, 2), 1, Fraction(1, 4), 0)) == vec
    assert [g.kind for g in groups] == ["zero", "half", "generic"]
    assert groups[2].label == Fraction(3, 4) and groups[2].base == Fraction(-1, 4)


@given(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=1, max_size=5))
def test_normalize_is_idempotent(gamma):
    vec, w, groups = normalize_gamma_c(gamma)
    assert w.act(tuple(Fraction(x) for x in gamma)) == vec
    again, w2, _ = normalize_gamma_c(vec)
    assert again == vec and w2.perm == tuple(range(1, len(vec) + 1))
    assert sum(g.size for g in groups) == len(vec)


def test_build_book_requires_rearranged_weight():
    with pytest.raises(InvalidShape):
        build_book_c((1, 0))


# golden pages ----------------------------------------------------------------------------

def test_generic_page_golden():
    g = tuple(GENERIC_BETA + z for z in (0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3))
    book = build_book_c(g, GENERIC_J)
    assert [p.kind for p in book.pages] == ["generic"]
    mine = page_cells(book)
    assert adjacent_relations(mine) == adjacent_relations(cells(GENERIC_POS))
    assert [b.content for b in book.pages[0].boxes] == [0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3]


def test_generic_page_displayed_filling_breaks_column_rule():
    """The drawn filling puts -2 above -8 and 6 above 4."""
    g = tuple(GENERIC_BETA + z for z in (0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3))
    book = build_book_c(g, GENERIC_J)
    w = (-9, -7, -5, -12, -8, 3, -2, 1, 4, -11, -10, 6)
    bad = {tuple(v) for v in filling_violations(book, w)}
    assert bad == {(7, 5), (12, 9)}


def test_half_page_golden():
    book = build_book_c(HALF_GAMMA, HALF_J)
    page = book.pages[0]
    assert page.kind == "half" and page.is_mirror_symmetric()
    drawn = cells(HALF_POS)
    mine = page_cells(book)
    # the drawing slides some boxes along their diagonals; only relative positions must agree
    assert adjacent_relations(mine) == adjacent_relations(drawn)
    assert all(Fraction(drawn[k][1] - drawn[k][0]) - Fraction(13, 2) == b.content for k, b in page.by_index().items())
    w = (-11, 1, 4, 6, -10, -9, 2, 7, -8, 5, 3)
    assert is_standard_filling(book, w)
    assert book.shape().contains(WeylElement(book.shape().system, w))


def test_zero_page_golden():
    book = build_book_c(ZERO_GAMMA, ZERO_J)
    drawn = cells(ZERO_POS)
    mine = page_cells(book)
    assert adjacent_relations(mine) == adjacent_relations(drawn)
    assert same_up_to_translation(mine, drawn)
    w = (1, 3, 7, -6, -5, -2, -4)
    assert is_standard_filling(book, w)
    assert tableau_word_c(book, w).perm == w
    assert book.shape().contains(WeylElement(book.shape().system, w))


def test_signed_values_mirror():
    book = build_book_c(ZERO_GAMMA, ZERO_J)
    t = signed_values(book, (1, 3, 7, -6, -5, -2, -4))
    assert t[-4] == 6 and t[1] == 1 and -1 not in t


def test_non_standard_word_rejected():
    book = build_book_c(ZERO_GAMMA, ZERO_J)
    with pytest.raises(NotStandard):
        tableau_word_c(book, (1, 2, 3, 4, 5, 6, 7))
    assert filling_violations(book, (1, 1, 2, 3, 4, 5, 6)) == [("not a signed permutation",)]


# bijection ----------------------------------------------------------------------------------

@pytest.mark.parametrize("rank", [2, 3])
def test_fillings_match_tableaux(rank):
    R = build_root_system("C", rank)
    for gamma in dominant_grid(R, (0, HALF, 1, 3 * HALF, 2)):
        vec, _, _ = normalize_gamma_c(gamma)
        _, P = zero_and_one_sets(R, vec)
        for J in subsets_of(r for r in P if R.is_positive(r)):
            rep = bijection_check_thm57(vec, J, limit=rank)
            assert rep["bijective"], rep


def test_book_from_shape_carries_j():
    R = build_root_system("C", 2)
    shape = placed_shape(R, (0, 1), [(-1, 1)])
    book, w = book_from_shape(shape)
    assert w.perm == (1, 2)
    fills = enumerate_signed_fillings(book)
    assert {f for f in fills} == {x.perm for x in enumerate_standard_tableaux(shape)}
    with pytest.raises(InvalidShape):
        book_from_shape(placed_shape(build_root_system("A", 1), (0, 1)))
