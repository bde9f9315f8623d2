import pytest
from hypothesis import given

from conftest import oriented_graphs
from otg import OrientedGraph, dtg_build, emit_edge_list, export_dot, parse_edge_list, parse_sequence
from otg.io import ParseError, parse_binary_sequence
from otg.sequences import MINUS, PLUS, ZERO, SequenceParseError


class TestParseSequence:
    def test_figure(self):
        assert parse_sequence("+-0-*").symbols == (PLUS, MINUS, ZERO, MINUS)

    def test_star_only(self):
        assert parse_sequence("*").symbols == ()

    def test_star_must_be_last(self):
        with pytest.raises(SequenceParseError) as err:
            parse_sequence("+*0")
        assert err.value.offset == 1

    def test_illegal_character(self):
        with pytest.raises(SequenceParseError) as err:
            parse_sequence("+0x*")
        assert err.value.offset == 2

    def test_binary(self):
        assert parse_binary_sequence("10*") == parse_sequence("+0*")
        with pytest.raises(SequenceParseError):
            parse_binary_sequence("-0*")


class TestEdgeList:
    def test_minimal(self):
        g = parse_edge_list("otg 2\n0 1\n")
        assert g == OrientedGraph(2, frozenset({(0, 1)}))

    def test_comments_and_blanks(self):
        g = parse_edge_list("# figure\n\notg 3\n  # arcs\n2 0\n\n1 0\n")
        assert g.sorted_arcs() == [(1, 0), (2, 0)]

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("otg 2\n0 1\n1 0\n", 3, "2-cycle"),
            ("otg 2\n0 1\n0 1\n", 3, "duplicate"),
            ("otg 2\n1 1\n", 2, "loop"),
            ("otg 2\n0 2\n", 2, "range"),
            ("graph 2\n", 1, "header"),
            ("otg 0\n", 1, "positive"),
            ("otg 3\n0 1 2\n", 2, "malformed"),
            ("otg 3\n0 -1\n", 2, "malformed"),
            ("# nothing\n", 1, "missing"),
        ],
    )
    def test_errors(self, text, line, fragment):
        with pytest.raises(ParseError, match=fragment) as err:
            parse_edge_list(text)
        assert err.value.line == line

    def test_emit_figure(self):
        text = emit_edge_list(dtg_build("+-0-*"))
        lines = text.splitlines()
        assert lines[0] == "otg 5"
        assert lines[1:] == ["0 1", "0 3", "1 3", "2 3", "4 0", "4 1", "4 2", "4 3"]

    @given(oriented_graphs(max_n=8))
    def test_round_trip(self, g):
        assert parse_edge_list(emit_edge_list(g)) == g


class TestDot:
    def test_single_vertex(self):
        assert export_dot(OrientedGraph(1)) == "digraph {\n  0;\n}\n"

    def test_arc(self):
        assert "0 -> 1;" in export_dot(OrientedGraph(2, frozenset({(0, 1)})))

    def test_figure_with_weight_labels(self, dtg1):
        dot = export_dot(dtg1, ["6", "−9", "3", "−12", "15"])
        assert dot.count("->") == 8
        assert '4 [label="15"];' in dot
        assert '1 [label="−9"];' in dot

    def test_label_count(self, dtg1):
        with pytest.raises(ValueError, match="labels"):
            export_dot(dtg1, ["a"])
