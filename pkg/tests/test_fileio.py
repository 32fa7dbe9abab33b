import pytest

from nplabel.errors import ParseError
from nplabel.fileio import (
    parse_edge_list,
    parse_labels,
    to_dot,
    write_edge_list,
    write_labels,
)
from nplabel.families import gear_graph, parse_family, generate
from nplabel.graph import Graph, verify


class TestParseEdgeList:
    def test_p3(self):
        g = parse_edge_list("3 2\n1 2\n2 3\n")
        assert g == Graph(3, [(1, 2), (2, 3)])

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a path\n\n3 2\n1 2\n\n# middle\n2 3\n")
        assert g.n == 3

    def test_duplicate_edge_line_number(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("3 2\n1 2\n1 2\n")
        assert exc.value.line == 3
        assert "duplicate" in str(exc.value)

    def test_bad_header(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("3\n1 2\n")
        assert exc.value.line == 1

    def test_non_integer_header(self):
        with pytest.raises(ParseError):
            parse_edge_list("three 2\n1 2\n2 3\n")

    def test_out_of_range_endpoint(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("3 2\n1 2\n2 4\n")
        assert exc.value.line == 3

    def test_unordered_endpoints_rejected(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 2\n2 1\n2 3\n")

    def test_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 2\n1 2\n")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_edge_list("")


class TestLabels:
    def test_write(self):
        assert write_labels([2, 1, 3]) == "2\n1\n3\n"

    def test_parse(self):
        assert parse_labels("2\n1\n3\n") == [2, 1, 3]
        assert parse_labels("# header\n2\n\n1\n3\n") == [2, 1, 3]

    def test_parse_bad_value(self):
        with pytest.raises(ParseError) as exc:
            parse_labels("2\nx\n3\n")
        assert exc.value.line == 2

    def test_parse_empty(self):
        with pytest.raises(ParseError):
            parse_labels("# nothing\n")


class TestRoundTrips:
    def test_edge_list_round_trip(self):
        for family in ("gear:5", "snake:4,3", "mobius:4", "spider:1,2,3"):
            g = generate(parse_family(family))
            assert parse_edge_list(write_edge_list(g)) == g

    def test_labels_round_trip(self):
        labels = list(range(1, 12))
        assert parse_labels(write_labels(labels)) == labels


class TestDot:
    def test_plain_graph(self):
        text = to_dot(Graph(2, [(1, 2)]))
        assert "graph G {" in text
        assert "v1 -- v2;" in text

    def test_labels_included(self):
        text = to_dot(Graph(2, [(1, 2)]), labels=[2, 1])
        assert 'v1 [label="2"];' in text

    def test_violations_highlighted(self):
        g = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        report = verify(g, [1, 2, 3, 4])
        text = to_dot(g, labels=[1, 2, 3, 4], report=report)
        assert text.count("lightpink") == 2

    def test_gear_has_all_vertices(self):
        g = gear_graph(3)
        text = to_dot(g)
        for v in range(1, 8):
            assert ("v%d" % v) in text
