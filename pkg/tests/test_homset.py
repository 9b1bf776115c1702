"""Colorings of Gauss diagrams and their transport through moves."""

import pytest

from arrowquiver.gausscode import (
    R1Delete,
    R1Insert,
    R2Insert,
    R3Slide,
    apply_move,
    enumerate_moves,
    inverse_move,
    parse_gauss_code,
)
from arrowquiver.homset import (
    TransportError,
    arrow_label,
    chord_colors,
    chord_status,
    counting_invariant,
    enumerate_colorings,
    is_coloring,
    transport_coloring,
)

VIRTUAL_HOPF = parse_gauss_code("O1+O2+U1+U2+")
TREFOIL = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
R3_HOST = parse_gauss_code("U1+U2+O1+U3+O2+O3+")


class TestEnumeration:
    def test_empty_diagram_colorings(self, flip2, cyc3):
        assert enumerate_colorings(flip2, parse_gauss_code("")) == [(1,), (2,)]
        assert counting_invariant(cyc3, parse_gauss_code("")) == 3

    def test_kink_has_one_coloring_per_element(self, flip2, cyc3, quad4, shift4):
        kink = parse_gauss_code("O1+U1+")
        for b in (flip2, cyc3, quad4, shift4):
            assert counting_invariant(b, kink) == b.n

    def test_positive_kink_flip(self, flip2):
        assert enumerate_colorings(flip2, parse_gauss_code("O1+U1+")) == [
            (1, 2),
            (2, 1),
        ]

    def test_negative_kink_cyclic(self, cyc3):
        assert enumerate_colorings(cyc3, parse_gauss_code("O1-U1-")) == [
            (1, 2),
            (2, 3),
            (3, 1),
        ]

    def test_virtual_hopf_flip(self, flip2):
        assert enumerate_colorings(flip2, VIRTUAL_HOPF) == [
            (1, 2, 1, 2),
            (2, 1, 2, 1),
        ]

    def test_trefoil_cyclic(self, cyc3):
        assert enumerate_colorings(cyc3, TREFOIL) == [
            (1, 3, 1, 3, 1, 3),
            (2, 1, 2, 1, 2, 1),
            (3, 2, 3, 2, 3, 2),
        ]

    def test_trefoil_quad(self, quad4):
        assert counting_invariant(quad4, TREFOIL) == 16

    def test_all_results_are_colorings(self, quad4):
        for c in enumerate_colorings(quad4, TREFOIL):
            assert is_coloring(quad4, TREFOIL, c)

    def test_output_sorted_and_fresh(self, flip2):
        first = enumerate_colorings(flip2, VIRTUAL_HOPF)
        assert first == sorted(first)
        first.append("junk")
        assert enumerate_colorings(flip2, VIRTUAL_HOPF) == sorted(first[:-1])

    def test_rotation_permutes_colorings(self, cyc3, quad4):
        for b in (cyc3, quad4):
            for d in (TREFOIL, R3_HOST):
                base = set(enumerate_colorings(b, d))
                two_n = len(d.endpoints)
                for k in range(two_n):
                    rotated = set(enumerate_colorings(b, d.rotated(k)))
                    assert rotated == {c[k:] + c[:k] for c in base}


class TestPredicates:
    def test_is_coloring_checks_length(self, flip2):
        assert not is_coloring(flip2, VIRTUAL_HOPF, (1, 2))

    def test_is_coloring_checks_range(self, flip2):
        assert not is_coloring(flip2, VIRTUAL_HOPF, (1, 3, 1, 3))

    def test_is_coloring_checks_equations(self, flip2):
        assert is_coloring(flip2, VIRTUAL_HOPF, (1, 2, 1, 2))
        assert not is_coloring(flip2, VIRTUAL_HOPF, (1, 1, 1, 1))

    def test_chord_colors(self):
        c = (1, 2, 1, 2)
        assert chord_colors(VIRTUAL_HOPF, c, 1) == (2, 1, 2, 1)
        assert chord_colors(VIRTUAL_HOPF, c, 2) == (1, 2, 1, 2)

    def test_chord_status(self, flip2):
        assert chord_status(flip2, VIRTUAL_HOPF, (1, None, 1, 2), 1) == "undetermined"
        assert chord_status(flip2, VIRTUAL_HOPF, (1, 2, 1, 2), 1) == "satisfied"
        assert chord_status(flip2, VIRTUAL_HOPF, (1, 2, 2, 2), 1) == "violated"

    def test_arrow_label_positive(self):
        # Positive chords label by (under color in, over color out).
        c = (1, 2, 1, 2)
        assert arrow_label(VIRTUAL_HOPF, c, 1) == (2, 1)
        assert arrow_label(VIRTUAL_HOPF, c, 2) == (1, 2)

    def test_arrow_label_negative(self, cyc3):
        # Negative chords read the inverted crossing: (under out, over in).
        kink = parse_gauss_code("O1-U1-")
        assert arrow_label(kink, (1, 2), 1) == (2, 2)


class TestTransport:
    def test_requires_a_coloring(self, flip2):
        move = R1Insert(0, False, 1)
        with pytest.raises(TransportError, match="not a coloring"):
            transport_coloring(flip2, VIRTUAL_HOPF, move, (1, 1, 1, 1))

    def test_insert_preserves_far_colors(self, flip2):
        move = R1Insert(2, False, 1)
        c2 = transport_coloring(flip2, VIRTUAL_HOPF, move, (1, 2, 1, 2))
        d2 = apply_move(VIRTUAL_HOPF, move)
        assert is_coloring(flip2, d2, c2)
        # Two new semiarcs appear at the insertion point; the rest shift.
        assert (c2[0], c2[1]) == (1, 2)
        assert (c2[4], c2[5]) == (1, 2)

    def test_insert_then_delete_roundtrip(self, flip2, cyc3):
        cases = [
            (flip2, VIRTUAL_HOPF, R1Insert(1, True, -1)),
            (flip2, VIRTUAL_HOPF, R2Insert(0, 2, False, 1)),
            (cyc3, R3_HOST, R2Insert(3, 3, True, -1)),
        ]
        for b, d, move in cases:
            d2 = apply_move(d, move)
            inv = inverse_move(d, move)
            for c in enumerate_colorings(b, d):
                c2 = transport_coloring(b, d, move, c)
                assert is_coloring(b, d2, c2)
                assert transport_coloring(b, d2, inv, c2) == c

    def test_delete_restricts(self, cyc3):
        d = parse_gauss_code("O1-U1-")
        for c in enumerate_colorings(cyc3, d):
            back = transport_coloring(cyc3, d, R1Delete(0), c)
            assert back == (c[1],)

    def test_r3_slide_bijects_colorings(self, cyc3, quad4):
        move = R3Slide((0, 2, 4), "L", (1, 2, 3), 1)
        d2 = apply_move(R3_HOST, move)
        for b in (cyc3, quad4):
            images = set()
            for c in enumerate_colorings(b, R3_HOST):
                c2 = transport_coloring(b, R3_HOST, move, c)
                assert is_coloring(b, d2, c2)
                images.add(c2)
            assert images == set(enumerate_colorings(b, d2))

    def test_every_move_preserves_count(self, shift4):
        d = VIRTUAL_HOPF
        base = counting_invariant(shift4, d)
        for move in enumerate_moves(d):
            d2 = apply_move(d, move)
            assert counting_invariant(shift4, d2) == base, move
