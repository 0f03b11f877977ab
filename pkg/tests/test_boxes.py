from fractions import Fraction
from math import floor

import pytest
from hypothesis import given, strategies as st

from conftest import eps
from rootableaux.boxes import (
    Box,
    BoxConfiguration,
    Filling,
    bijection_check_thm35,
    book_for_shape,
    build_book,
    classical_tableaux,
    configuration_from_cells,
    detect_skew,
    enumerate_fillings,
    is_border_strip,
    linear_extensions,
    reading_fillings,
    shape_to_configuration,
    skew_configuration,
    skew_defects,
    skew_shapes,
    standardness_violations,
    tableau_word,
    transpose_configuration,
)
from rootableaux.errors import InvalidShape, NotStandard, PlacementError
from rootableaux.roots import WeylElement, build_root_system
from rootableaux.shapes import (
    conjugate_shape,
    dominant_grid,
    enumerate_standard_tableaux,
    is_skew,
    nonempty_labels,
    placed_shape,
    reading_tableaux,
    subsets_of,
    zero_and_one_sets,
)


def pictex_cells(points):
    """Cell centres (x, y) of a picture -> matrix cells (row, col)."""
    return [(-floor(y), floor(x)) for x, y in points]


EXAMPLE_GAMMA = (-1, -1, -1, 0, 0, 0, 1, 1, 1, 2, 2, 2)
EXAMPLE_J = [eps(12, *p) for p in [(4, 1), (4, 2), (4, 3), (5, 2), (5, 3), (7, 5), (7, 6), (8, 6),
                                   (10, 9), (10, 8), (10, 7), (11, 9), (11, 8), (11, 7), (12, 9)]]
CONJ_GAMMA = (-1, -1, -1, 0, 0, 1, 1)
CONJ_J = [eps(7, 4, 2), eps(7, 4, 3), eps(7, 6, 5), eps(7, 7, 5)]


def small_type_a_shapes(max_n=5):
    for n in range(1, max_n + 1):
        R = build_root_system("A", n - 1)
        for g in dominant_grid(R, (0, 1, 2)):
            g = tuple(int(x) for x in g)
            labels = nonempty_labels(R, g)
            _, P = zero_and_one_sets(R, g)
            for J in subsets_of(P):
                yield R, g, J, labels.get(J)


# configurations -------------------------------------------------------------------------

def test_box_content_checked():
    with pytest.raises(InvalidShape):
        Box(0, 0, 1)
    with pytest.raises(InvalidShape):
        configuration_from_cells([(0, 0), (0, 0)])


def test_numbering_is_by_content_then_row():
    cfg = configuration_from_cells([(1, 1), (0, 1), (0, 0), (1, 0)])
    assert [b.cell for b in cfg.boxes] == [(1, 0), (0, 0), (1, 1), (0, 1)]
    assert cfg.gamma == (-1, 0, 0, 1)
    with pytest.raises(InvalidShape):
        BoxConfiguration(tuple(reversed(cfg.boxes)))


def test_skew_configuration_and_word_golden():
    cfg = skew_configuration((9, 7, 7, 4, 2, 1), (5, 4, 4, 3), -2)
    t = Filling(cfg, (11, 6, 8, 2, 7, 1, 13, 5, 14, 3, 10, 4, 9, 12))
    assert t.is_standard()
    assert cfg.shape().contains(tableau_word(t))
    assert detect_skew(cfg)


def test_placed_example_matches_picture_up_to_sliding():
    cfg = shape_to_configuration(EXAMPLE_GAMMA, EXAMPLE_J)
    assert cfg.J() == frozenset(EXAMPLE_J)
    drawn = {1: (4, 1), 2: (5, 2), 3: (6, 3), 4: (3, 1), 5: (4, 2), 6: (6, 4), 7: (3, 2),
             8: (5, 4), 9: (6, 5), 10: (1, 1), 11: (2, 2), 12: (5, 5)}
    pic = configuration_from_cells(drawn.values(), content_shift=2)
    assert pic.same_up_to_sliding(cfg)
    assert [b.cell for b in pic.boxes] == [(r, c + 2) for r, c in drawn.values()]
    word = (2, 9, 10, 1, 6, 11, 5, 7, 12, 3, 4, 8)
    assert Filling(cfg, word).is_standard()
    fills = enumerate_fillings(cfg)
    assert word in {f.entries for f in fills}
    assert len(fills) == 81
    shape = cfg.shape()
    assert all(shape.contains(tableau_word(f)) for f in fills)
    assert not detect_skew(cfg)


def test_inconsistent_j_raises_placement_error():
    # box_3 northwest of box_1 forces box_3 above box_2, but box_2 must sit higher on their diagonal
    with pytest.raises(PlacementError):
        shape_to_configuration((0, 1, 1), [eps(3, 3, 1)])
    with pytest.raises(InvalidShape):
        shape_to_configuration((0, Fraction(1, 2)))


def test_conjugation_is_transposition():
    cfg = shape_to_configuration(CONJ_GAMMA, CONJ_J)
    T = transpose_configuration(cfg)
    conj = conjugate_shape(cfg.shape())
    assert T.gamma == conj.gamma == (-1, -1, 0, 0, 1, 1, 1)
    assert T.J() == conj.J
    assert transpose_configuration(T).same_up_to_sliding(cfg)


def test_reading_fillings_golden():
    cfg = shape_to_configuration(CONJ_GAMMA, CONJ_J)
    t_min, t_max = reading_fillings(cfg)
    assert t_min.entries == (1, 3, 4, 2, 7, 5, 6)
    assert t_max.entries == (1, 5, 6, 2, 7, 3, 4)
    assert not detect_skew(cfg) and not is_skew(cfg.shape())


def test_small_shapes_all_properties():
    """Placement, fillings, reading fillings, skewness and transposition on every small shape."""
    for R, g, J, idx in small_type_a_shapes():
        if idx is None:
            # an empty tableau set must still be rejected or give no fillings
            try:
                cfg = shape_to_configuration(g, J)
            except InvalidShape:
                continue
            assert not enumerate_fillings(cfg)
            continue
        cfg = shape_to_configuration(g, J)
        assert cfg.J() == J
        shape = placed_shape(R, g, J)
        table = R.group()
        assert {f.entries for f in enumerate_fillings(cfg)} == {table.perms[i] for i in idx}
        lo, hi = reading_tableaux(shape)
        t_min, t_max = reading_fillings(cfg)
        assert (lo[0].perm, hi[0].perm) == (t_min.entries, t_max.entries)
        assert detect_skew(cfg) == is_skew(shape)
        T = transpose_configuration(cfg)
        conj = conjugate_shape(shape)
        assert (T.gamma, T.J()) == (conj.gamma, conj.J)


def test_border_strip():
    assert is_border_strip(skew_configuration((3, 1), (1,)))
    assert not is_border_strip(skew_configuration((2, 2)))


def test_skew_defect_cases():
    cfg = shape_to_configuration((0, 1, 2), [eps(3, 3, 2)])
    assert detect_skew(cfg)
    cfg = shape_to_configuration((0, 0), [])
    assert skew_defects(cfg) == [(3, 1, 2)]


# fillings -----------------------------------------------------------------------------------

def test_filling_rejects_non_permutation():
    cfg = skew_configuration((2,))
    with pytest.raises(NotStandard):
        Filling(cfg, (1, 1))
    t = Filling(cfg, (2, 1))
    assert standardness_violations(cfg, t.entries) == [(1, 2)]
    with pytest.raises(NotStandard):
        tableau_word(t)


def test_linear_extensions_limit():
    assert len(list(linear_extensions(4, []))) == 24
    assert len(list(linear_extensions(4, [], limit=5))) == 5
    assert list(linear_extensions(3, [(0, 1), (1, 2)])) == [(1, 2, 3)]


@pytest.mark.parametrize("lam,mu,count", [((2, 1), (), 2), ((3, 2), (1,), 5), ((2, 2), (), 2), ((3, 3, 3), (), 42)])
def test_classical_counts(lam, mu, count):
    assert len(classical_tableaux(lam, mu)) == count


@given(st.sampled_from(list(skew_shapes(3, 3, 6))), st.integers(-3, 3))
def test_skew_bijection_property(lm, offset):
    lam, mu = lm
    rep = bijection_check_thm35(lam, mu, offset)
    assert rep["bijective"] and rep["classical"] == rep["F"]


def test_partition_validation():
    with pytest.raises(InvalidShape):
        skew_configuration((1, 2))
    with pytest.raises(InvalidShape):
        skew_configuration((2,), (3,))
    with pytest.raises(InvalidShape):
        skew_configuration((1,), (1,))


# books ---------------------------------------------------------------------------------------

def test_book_golden():
    n = 17
    H = Fraction(1, 2)
    g = [H, H, 1, 1, 1, 3 * H, -2, -2, -H, -1, -1, -1, -H, H, 0, 0, 0]
    J = [eps(n, *p) for p in [(14, 13), (17, 16), (3, 2), (4, 2), (5, 2), (6, 3), (6, 4), (6, 5),
                              (9, 7), (9, 8), (10, 7), (10, 8)]]
    book = build_book(g, J)
    assert [p.label for p in book.pages] == [0, H]
    page0 = {1: (0.5, 3.5), 2: (3.5, 0.5), 3: (1.5, 3.5), 4: (2.5, 2.5), 5: (3.5, 1.5), 6: (1.5, 4.5),
             7: (4.5, 1.5), 8: (5.5, 0.5), 9: (2.5, 4.5), 10: (4.5, 2.5), 11: (6.5, 0.5)}
    page_half = {12: (9.5, 3.5), 13: (10.5, 2.5), 14: (10.5, 3.5), 15: (11.5, 2.5), 16: (12.5, 1.5),
                 17: (12.5, 2.5)}
    c0 = configuration_from_cells(pictex_cells(page0.values()), content_shift=-5)
    ch = configuration_from_cells(pictex_cells(page_half.values()), content_shift=-13)
    assert c0.same_up_to_sliding(book.pages[0].config)
    assert ch.same_up_to_sliding(book.pages[1].config)
    # the numbering of the picture is the computed numbering
    assert [(b.row, b.col + 5) for b in c0.boxes] == pictex_cells(page0.values())
    assert [(b.row, b.col + 13) for b in ch.boxes] == pictex_cells(page_half.values())
    w = (2, 12, 4, 5, 9, 1, 13, 15, 8, 11, 17, 3, 7, 6, 10, 16, 14)
    assert book.is_standard(w)
    shape = book.shape()
    assert shape.contains(WeylElement(shape.system, w))


def test_book_for_shape_moves_j():
    R = build_root_system("A", 3)
    shape = placed_shape(R, (0, Fraction(1, 2), 1, Fraction(3, 2)), [eps(4, 3, 1)])
    book = book_for_shape(shape)
    assert book.order == (0, 2, 1, 3)
    assert book.J == {eps(4, 2, 1)}
    assert [len(p.config) for p in book.pages] == [2, 2]


def test_book_rejects_cross_page_roots():
    with pytest.raises(InvalidShape):
        build_book((0, Fraction(1, 2)), [(-1, 1)])
