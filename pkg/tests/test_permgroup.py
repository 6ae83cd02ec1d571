from typing import List, Tuple

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st
from sympy.combinatorics import Permutation as SymPermutation, PermutationGroup

from app.core.exceptions import DegreeMismatchError, InvalidParameterError, RefusalError
from app.core.graphs.colored_graph import ColoredGraph
from app.core.graphs.named_graphs import complete, complete_bipartite, cycle, empty, path, star
from app.core.permutations.automorphism_search import AutomorphismSearch, automorphism_group, is_automorphism
from app.core.permutations.edge_orbits import edge_orbits, is_edge_transitive
from app.core.permutations.naive import naive_automorphisms
from app.core.permutations.perm_group import PermGroup
from app.core.permutations.permutation import Permutation
from app.core.permutations.refinement import certificate, initial_partition, refine


def _sympy_order(degree: int, generators: List[Permutation]) -> int:
    if not generators:
        return 1
    return int(PermutationGroup([SymPermutation(list(g.images), size=degree) for g in generators]).order())


@st.composite
def small_graphs(draw) -> ColoredGraph:
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    colors = draw(st.lists(st.integers(min_value=0, max_value=1), min_size=len(chosen), max_size=len(chosen)))
    return ColoredGraph(n, [(u, v, c) for (u, v), c in zip(chosen, colors)])


class TestPermutation:
    def test_composition_is_left_to_right(self):
        """
        Test that (p * q)(i) = q(p(i)).
        """
        p = Permutation.from_cycles(3, [[0, 1]])
        q = Permutation.from_cycles(3, [[1, 2]])
        assert (p * q)(0) == 2
        assert (q * p)(0) == 1
        assert (p * p.inverse()).is_identity()

    def test_cycle_notation(self):
        """
        Test cycle notation and moved points.
        """
        assert Permutation.identity(4).cycle_notation() == "()"
        p = Permutation([1, 2, 0, 4, 3])
        assert p.cycle_notation() == "(0 1 2)(3 4)"
        assert p.moved_points() == [0, 1, 2, 3, 4]

    def test_invalid_permutations(self):
        """
        Test non-bijective images and degree mismatches.
        """
        with pytest.raises(InvalidParameterError):
            Permutation([0, 0])
        with pytest.raises(DegreeMismatchError):
            Permutation.identity(2) * Permutation.identity(3)


class TestPermGroup:
    def test_dihedral_order(self):
        """
        Test the dihedral group of order 10.
        """
        rotation = Permutation([1, 2, 3, 4, 0])
        reflection = Permutation([0, 4, 3, 2, 1])
        group = PermGroup(5, [rotation, reflection])
        assert group.order == 10
        assert group.is_member(rotation * reflection)
        assert not group.is_member(Permutation([1, 0, 2, 3, 4]))
        assert group.vertex_orbits() == [[0, 1, 2, 3, 4]]

    @pytest.mark.parametrize("n", [3, 5, 7, 8])
    def test_symmetric_group_order(self, n: int):
        """
        Test that a transposition and an n-cycle generate S_n.
        """
        transposition = Permutation.from_cycles(n, [[0, 1]])
        long_cycle = Permutation([(i + 1) % n for i in range(n)])
        group = PermGroup(n, [transposition, long_cycle])
        assert group.order == _sympy_order(n, [transposition, long_cycle])

    def test_trivial_group(self):
        """
        Test the group generated by nothing.
        """
        group = PermGroup(4, [])
        assert group.order == 1
        assert group.is_member(Permutation.identity(4))
        assert group.vertex_orbits() == [[0], [1], [2], [3]]
        with pytest.raises(DegreeMismatchError):
            group.is_member(Permutation.identity(5))

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_order_ignores_generator_order(self, data):
        """
        Test that shuffling and repeating generators leaves the order unchanged.
        """
        n = data.draw(st.integers(min_value=1, max_value=7))
        images = st.permutations(list(range(n)))
        generators = [Permutation(p) for p in data.draw(st.lists(images, min_size=1, max_size=4))]
        shuffled = data.draw(st.permutations(generators))
        assert PermGroup(n, shuffled + generators[:1]).order == PermGroup(n, generators).order

    def test_strong_generators_generate(self):
        """
        Test that strong generators generate a group of the same order.
        """
        generators = [Permutation([1, 2, 3, 4, 5, 0]), Permutation([0, 5, 4, 3, 2, 1])]
        group = PermGroup(6, generators)
        assert PermGroup(6, group.strong_generators()).order == group.order == 12
        assert group.orbit_lengths()[0] == 6


class TestAutomorphismSearch:
    @pytest.mark.parametrize(
        "X, order",
        [
            (cycle(5), 10),
            (cycle(9), 18),
            (complete(7), 5040),
            (complete_bipartite(2, 3), 12),
            (star(3), 6),
            (path(4), 2),
            (empty(4), 24),
            (ColoredGraph(1), 1),
        ],
    )
    def test_known_orders(self, X: ColoredGraph, order: int):
        """
        Test automorphism group orders of named graphs.
        """
        group = automorphism_group(X)
        assert group.order == order
        assert all(is_automorphism(X, g) for g in group.generators)

    def test_sympy_oracle(self, corpus: List[Tuple[str, ColoredGraph]]):
        """
        Test the stabilizer-chain order against sympy on the corpus.
        """
        for name, X in corpus:
            group = automorphism_group(X)
            assert group.order == _sympy_order(X.vertex_count, group.generators), name

    def test_naive_oracle_on_corpus(self, corpus: List[Tuple[str, ColoredGraph]]):
        """
        Test that the search agrees with exhaustive enumeration on all thirty corpus graphs.
        """
        for name, X in corpus:
            group = automorphism_group(X)
            found = naive_automorphisms(X)
            assert group.order == len(found), name
            assert all(group.is_member(a) for a in found), name

    def test_naive_small_cases(self, alternating_c4: ColoredGraph):
        """
        Test the naive oracle on hand-checked graphs.
        """
        assert len(naive_automorphisms(cycle(3))) == 6
        assert len(naive_automorphisms(path(4))) == 2
        assert len(naive_automorphisms(alternating_c4)) == 4
        with pytest.raises(RefusalError):
            naive_automorphisms(cycle(9))

    def test_colours_restrict_the_group(self, alternating_c4: ColoredGraph):
        """
        Test that edge and vertex colours are preserved.
        """
        assert automorphism_group(alternating_c4).order == 4
        assert automorphism_group(cycle(5), vertex_colors=[1, 0, 0, 0, 0]).order == 2
        with pytest.raises(InvalidParameterError):
            AutomorphismSearch(cycle(5), vertex_colors=[0, 0])

    def test_search_counts_refinements(self):
        """
        Test that the search records its work.
        """
        search = AutomorphismSearch(cycle(6))
        assert search.run().order == 12
        assert search.nodes_visited > 0

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(X=small_graphs(), data=st.data())
    def test_order_is_relabelling_invariant(self, X: ColoredGraph, data):
        """
        Test that relabelling a graph preserves the order and the refinement certificate.
        """
        images = data.draw(st.permutations(list(range(X.vertex_count))))
        Y = X.relabel(images)
        assert automorphism_group(X).order == automorphism_group(Y).order == len(naive_automorphisms(X))
        cells_x = refine(X, initial_partition(X))
        cells_y = refine(Y, initial_partition(Y))
        assert certificate(X, cells_x) == certificate(Y, cells_y)


class TestEdgeOrbits:
    def test_edge_transitive_graphs(self):
        """
        Test edge-transitivity of cycles, stars and complete bipartite graphs.
        """
        assert is_edge_transitive(cycle(5))
        assert is_edge_transitive(star(3))
        assert is_edge_transitive(complete_bipartite(2, 3))

    def test_not_edge_transitive(self):
        """
        Test graphs with several edge orbits, or none.
        """
        X = path(4)
        assert edge_orbits(automorphism_group(X), X) == [[(0, 1), (2, 3)], [(1, 2)]]
        assert not is_edge_transitive(X)
        assert not is_edge_transitive(empty(3))

    def test_loops_form_their_own_orbits(self):
        """
        Test that loop orbits are ignored by the transitivity predicate.
        """
        X = ColoredGraph(3, [(0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (2, 2)])
        assert len(edge_orbits(automorphism_group(X), X)) == 2
        assert is_edge_transitive(X)


class TestBipartiteAutomorphisms:
    def test_part_preserving_subgroup_has_index_at_most_two(self, corpus: List[Tuple[str, ColoredGraph]]):
        """
        Test that automorphisms fixing both parts of a connected bipartite graph have index 1 or 2.
        """
        bipartite = [(name, X) for name, X in corpus if X.is_connected() and X.is_bipartite()]
        assert bipartite
        for name, X in bipartite:
            parts = X.bipartition()
            colors = [0 if v in parts.part0 else 1 for v in range(X.vertex_count)]
            index, remainder = divmod(automorphism_group(X).order, automorphism_group(X, vertex_colors=colors).order)
            assert remainder == 0, name
            assert index in (1, 2), name
