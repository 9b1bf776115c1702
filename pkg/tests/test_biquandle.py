"""Biquandle axioms, table validation, inverses, and endomorphisms."""

import pytest

from arrowquiver.biquandle import (
    Biquandle,
    BiquandleError,
    Violation,
    load,
    loads,
    validate_tables,
)
from arrowquiver.knotdata import bundled_path

TRIVIAL_2 = Biquandle(under=((1, 1), (2, 2)), over=((1, 1), (2, 2)))


class TestValidation:
    def test_bundled_tables_are_biquandles(self, flip2, cyc3, quad4, shift4):
        for b in (flip2, cyc3, quad4, shift4):
            assert validate_tables(b.under, b.over) == []

    def test_row_count_mismatch(self):
        vs = validate_tables(((1, 1), (2, 2)), ((1, 1),))
        assert [v.axiom for v in vs] == ["shape"]

    def test_ragged_row(self):
        vs = validate_tables(((1, 1), (2,)), ((1, 1), (2, 2)))
        assert [v.axiom for v in vs] == ["shape"]
        assert vs[0].witness == (2,)

    def test_out_of_range_entry(self):
        vs = validate_tables(((1, 3), (2, 2)), ((1, 1), (2, 2)))
        assert [v.axiom for v in vs] == ["range"]
        assert vs[0].witness == (1, 3)
        assert "outside 1..2" in vs[0].message

    def test_non_bijective_column(self):
        vs = validate_tables(((1, 1), (1, 2)), ((1, 1), (2, 2)))
        assert all(v.axiom == "B2" for v in vs)
        assert vs[0].witness == (1,)
        assert "not a bijection" in vs[0].message

    def test_every_bad_column_reported(self):
        vs = validate_tables(((1, 1), (1, 1)), ((1, 1), (2, 2)))
        assert [v.witness for v in vs if v.axiom == "B2"] == [(1,), (2,)]

    def test_kink_rule_violation(self):
        # Columns stay bijective but under(2,2)=1 != over(2,2)=2.
        vs = validate_tables(((1, 2), (2, 1)), ((1, 1), (2, 2)))
        assert any(v.axiom == "B1" and v.witness == (2,) for v in vs)

    def test_misprinted_table_reports_bad_column(self):
        path = bundled_path("biquandle_cyc3_misprint.txt")
        with pytest.raises(BiquandleError) as exc:
            load(path)
        vs = exc.value.violations
        assert len(vs) == 1
        assert vs[0].axiom == "B2"
        assert vs[0].witness == (3,)
        assert "under column y=3 is (3, 1, 3)" in vs[0].message

    def test_error_message_lists_violations(self):
        err = BiquandleError([Violation("B1", (2,), "mismatch")])
        assert "not a biquandle" in str(err)
        assert "B1 fails at (2,): mismatch" in str(err)

    def test_violation_str_format(self):
        v = Violation("B2", (3,), "under column y=3 is (3, 1, 3), not a bijection")
        assert str(v) == (
            "B2 fails at (3,): under column y=3 is (3, 1, 3), not a bijection"
        )


class TestOperations:
    def test_flip_operations(self, flip2):
        assert flip2.under_of(1, 1) == 2
        assert flip2.under_of(2, 2) == 1
        assert flip2.over_of(1, 2) == 2
        assert list(flip2.elements) == [1, 2]

    def test_cyclic_operations_ignore_second_argument(self, cyc3):
        for x in cyc3.elements:
            for y in cyc3.elements:
                assert cyc3.under_of(x, y) == cyc3.under_of(x, 1)
                assert cyc3.over_of(x, y) == cyc3.over_of(x, 1)

    def test_inverses_roundtrip(self, flip2, cyc3, quad4, shift4):
        for b in (flip2, cyc3, quad4, shift4):
            for x in b.elements:
                for y in b.elements:
                    assert b.under_inv(b.under_of(x, y), y) == x
                    assert b.over_inv(b.over_of(x, y), y) == x

    def test_gate_bijective(self, quad4):
        images = {quad4.gate(x, y) for x in quad4.elements for y in quad4.elements}
        assert len(images) == quad4.n * quad4.n

    def test_gate_solves_crossing(self, shift4):
        # gate(x, y) = (t, v) means over(t, x) == y and under(x, t) == v.
        for x in shift4.elements:
            for y in shift4.elements:
                t, v = shift4.gate(x, y)
                assert shift4.over_of(t, x) == y
                assert shift4.under_of(x, t) == v


class TestEndomorphisms:
    def test_identity_always_endomorphism(self, flip2, cyc3, quad4, shift4):
        for b in (flip2, cyc3, quad4, shift4):
            assert b.is_endomorphism(tuple(b.elements))

    def test_flip_endomorphisms(self, flip2):
        assert flip2.endomorphisms() == [(1, 2), (2, 1)]

    def test_cyclic_endomorphisms_are_rotations(self, cyc3):
        assert cyc3.endomorphisms() == [(1, 2, 3), (2, 3, 1), (3, 1, 2)]

    def test_constant_map_rejected(self, flip2):
        assert not flip2.is_endomorphism((1, 1))

    def test_wrong_length_rejected(self, flip2):
        assert not flip2.is_endomorphism((1,))

    def test_endomorphism_files_match_search(
        self, cyc3, quad4, shift4, endos_cyc3, endos_quad4, endos_shift4
    ):
        assert endos_cyc3 == cyc3.endomorphisms()
        assert endos_quad4 == quad4.endomorphisms()
        assert endos_shift4 == shift4.endomorphisms()

    def test_trivial_biquandle_endos_are_all_maps(self):
        assert TRIVIAL_2.endomorphisms() == [(1, 1), (1, 2), (2, 1), (2, 2)]


class TestLoading:
    def test_loads_ignores_comments_and_blanks(self):
        text = "# flip\n\n2\n2 2\n1 1\n\n# over\n2 2\n1 1\n"
        b = loads(text)
        assert b.n == 2
        assert b.under_of(1, 1) == 2

    def test_loads_empty_input(self):
        with pytest.raises(ValueError, match="empty biquandle description"):
            loads("# nothing here\n")

    def test_loads_wrong_row_count(self):
        with pytest.raises(ValueError, match="expected 4 table rows, found 3"):
            loads("2\n2 2\n1 1\n2 2\n")

    def test_loads_invalid_tables_raise(self):
        text = "2\n1 1\n2 2\n1 2\n2 1\n"
        with pytest.raises(BiquandleError):
            loads(text)

    def test_load_matches_fixture(self, flip2):
        assert load(bundled_path("biquandle_flip2.txt")) == flip2
