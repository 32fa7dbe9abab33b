import math

import pytest
from hypothesis import assume, given, strategies as st

from nplabel.errors import LabelingInvalid, UsageError
from nplabel.graph import (
    Graph,
    contract,
    gcd_of,
    is_connected,
    is_tree,
    neighborhood,
    verify,
    with_pendant,
)


def P(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def C(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(UsageError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(UsageError):
            Graph(3, [(1, 4)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(UsageError):
            Graph(3, [(1, 2), (2, 1)])

    def test_rejects_nonpositive_n(self):
        with pytest.raises(UsageError):
            Graph(0, [])

    def test_adjacency_sorted(self):
        g = Graph(4, [(2, 4), (2, 3), (1, 2)])
        assert g.adj[2] == (1, 3, 4)
        assert g.degree(2) == 3
        assert g.degree(1) == 1

    def test_equality_and_hash(self):
        a = Graph(3, [(1, 2), (2, 3)])
        b = Graph(3, [(2, 3), (2, 1)])
        assert a == b
        assert hash(a) == hash(b)
        assert a != Graph(3, [(1, 2)])

    def test_pickle_roundtrip(self):
        import pickle

        g = C(5)
        assert pickle.loads(pickle.dumps(g)) == g


class TestGcdOf:
    def test_consecutive_odds(self):
        assert gcd_of([3, 5, 7]) == 1

    def test_singleton(self):
        assert gcd_of([6]) == 6

    def test_common_factor(self):
        assert gcd_of([4, 6, 10]) == 2

    def test_empty_rejected(self):
        with pytest.raises(UsageError):
            gcd_of([])

    def test_nonpositive_rejected(self):
        with pytest.raises(UsageError):
            gcd_of([0, 3])

    @given(
        st.integers(1, 10**6),
        st.integers(1, 10**6),
        st.integers(0, 1000),
        st.integers(0, 1000),
    )
    def test_linear_combination_first_argument(self, a, b, c, d):
        # gcd{a, b} is invariant under replacing a with c*a + d*b as long as
        # c shares no factor with b (c = 1 is the usual case)
        assume(math.gcd(c, b) == 1)
        assume(c * a + d * b >= 1)
        assert gcd_of([a, b]) == gcd_of([c * a + d * b, b])

    @given(
        st.integers(1, 10**6),
        st.integers(1, 10**6),
        st.integers(0, 1000),
        st.integers(0, 1000),
    )
    def test_linear_combination_second_argument(self, a, b, c, d):
        assume(math.gcd(d, a) == 1)
        assume(c * a + d * b >= 1)
        assert gcd_of([a, b]) == gcd_of([a, c * a + d * b])


class TestNeighborhood:
    def test_path_interior(self):
        assert neighborhood(P(3), 2) == [1, 3]

    def test_path_end(self):
        assert neighborhood(P(3), 1) == [2]

    def test_cycle(self):
        assert neighborhood(C(4), 1) == [2, 4]

    def test_out_of_range(self):
        with pytest.raises(UsageError):
            neighborhood(P(3), 4)


class TestVerify:
    def test_c4_identity_fails_at_both_even_neighborhoods(self):
        report = verify(C(4), [1, 2, 3, 4])
        assert not report.ok
        assert [v.vertex for v in report.violations] == [1, 3]
        for v in report.violations:
            assert v.neighbor_labels == (2, 4)
            assert v.gcd_value == 2

    def test_c4_swapped_passes(self):
        report = verify(C(4), [1, 2, 4, 3])
        assert report.ok
        assert report.checked_count == 4

    def test_p3_path_labels(self):
        report = verify(P(3), [2, 1, 3])
        assert report.ok
        assert report.checked_count == 1

    def test_leaves_never_checked(self):
        # star: only the center has degree >= 2
        g = Graph(4, [(1, 2), (1, 3), (1, 4)])
        report = verify(g, [4, 1, 2, 3])
        assert report.ok
        assert report.checked_count == 1

    def test_non_bijection_rejected(self):
        with pytest.raises(LabelingInvalid):
            verify(P(3), [1, 1, 2])

    def test_length_mismatch_rejected(self):
        with pytest.raises(UsageError):
            verify(P(3), [1, 2])


class TestStructurePredicates:
    def test_path_is_tree(self):
        assert is_tree(P(3))

    def test_cycle_is_not_tree(self):
        assert not is_tree(C(4))

    def test_disconnected_is_not_tree(self):
        assert not is_tree(Graph(4, [(1, 2), (3, 4)]))

    def test_connectivity(self):
        assert is_connected(C(5))
        assert not is_connected(Graph(3, [(1, 2)]))


class TestContract:
    def test_snake_ends_give_triangle_fan(self):
        # two triangles sharing the trace path; merging the end base
        # vertices closes the fan
        g = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (3, 5)])
        h = contract(g, 1, 5)
        assert h.n == 4
        assert (1, 4) in h.edges

    def test_merged_id_is_min(self):
        g = Graph(3, [(1, 2), (2, 3)])
        h = contract(g, 1, 3)
        assert h.n == 2
        assert h.edges == frozenset({(1, 2)})

    def test_contracting_an_edge_drops_it(self):
        g = Graph(3, [(1, 2), (2, 3)])
        h = contract(g, 1, 2)
        assert h.n == 2
        assert h.edges == frozenset({(1, 2)})

    def test_same_vertex_rejected(self):
        with pytest.raises(UsageError):
            contract(P(3), 2, 2)


class TestWithPendant:
    def test_appends_vertex(self):
        h = with_pendant(P(3), 2)
        assert h.n == 4
        assert (2, 4) in h.edges

    def test_out_of_range(self):
        with pytest.raises(UsageError):
            with_pendant(P(3), 9)
