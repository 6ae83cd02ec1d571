import pytest

from app.core.cayley.cayley_graph import cayley_graph
from app.core.cayley.connection_set import parse_connection_set
from app.core.exceptions import InvalidParameterError, PreconditionError, RefusalError
from app.core.graphs.colored_graph import ColoredGraph
from app.core.graphs.named_graphs import complete, cycle, empty, path
from app.core.groups.finite_group import FiniteGroup
from app.core.permutations.automorphism_search import automorphism_group
from app.core.stability.chao import chao_check, is_multiplicative_coset, symmetric_sets
from app.core.stability.example21 import example21_graph, reproduce_example_21
from app.core.stability.stability_check import lifted_subgroup, stability_check, witness_is_valid
from app.core.stability.theorem_sweep import enumerate_assignments, inverse_classes, theorem_sweep


class TestStabilityCheck:
    def test_odd_cycle_is_stable(self, c5: ColoredGraph):
        """
        Test that C5 is stable with |Aut BX| = 20.
        """
        report = stability_check(c5)
        assert report.stable
        assert report.aut_x_order == 10
        assert report.aut_bx_order == 20
        assert report.divides
        assert report.witness is None
        assert report.reason is None

    def test_nine_cycle(self, z9: FiniteGroup):
        """
        Test Cay(Z9; {1, -1}) with |Aut X| = 18 and |Aut BX| = 36.
        """
        X = cayley_graph(z9, parse_connection_set(z9, "1,-1"))
        report = stability_check(X, group=z9.name, connection_set=["1", "8"])
        assert report.stable
        assert (report.aut_x_order, report.aut_bx_order) == (18, 36)
        assert report.model_dump(by_alias=True, mode="json")["autBX"] == "36"

    def test_bipartite_graph_is_unstable(self):
        """
        Test that C6 is unstable and that the witness is verified.
        """
        X = cycle(6)
        report = stability_check(X)
        assert not report.stable
        assert report.aut_bx_order == 288
        assert report.witness is not None
        assert witness_is_valid(X, report)

    def test_reasons(self):
        """
        Test disconnected graphs and graphs with twins.
        """
        report = stability_check(empty(2))
        assert report.reason == "disconnected"
        assert not report.stable
        report = stability_check(path(3))
        assert report.reason == "has twins"
        assert not report.stable

    def test_lifted_subgroup(self, c5: ColoredGraph):
        """
        Test that Aut X x S2 has order 2 |Aut X|.
        """
        aut_x = automorphism_group(c5)
        assert lifted_subgroup(aut_x).order == 2 * aut_x.order

    def test_complete_graph(self):
        """
        Test that K3 is stable.
        """
        assert stability_check(complete(3)).stable


class TestExample21:
    def test_graph_shape(self):
        """
        Test that the order-21 Cayley graph is 6-regular, connected and twin-free.
        """
        X, S = example21_graph()
        assert X.vertex_count == 21
        assert all(X.degree(v) == 6 for v in range(21))
        assert X.is_connected()
        assert X.is_twin_free()
        assert len(S.members) == 6

    def test_reproduction(self):
        """
        Test |Aut X| = 42, |Aut BX| = 252 and a valid witness.
        """
        report = reproduce_example_21()
        assert report.aut_x_order == 42
        assert report.aut_bx_order == 252
        assert not report.stable
        assert report.witness_verified
        assert report.passed
        payload = report.model_dump(by_alias=True, mode="json")
        assert payload["autX"] == "42"
        assert payload["autBX"] == "252"
        assert payload["group"] == "SD(7,3,2)"


class TestTheoremSweep:
    def test_inverse_classes(self, z9: FiniteGroup):
        """
        Test inverse pairs with and without the identity class.
        """
        assert inverse_classes(z9) == [(1, 8), (2, 7), (3, 6), (4, 5)]
        assert inverse_classes(z9, loops=True)[-1] == (0,)

    def test_enumeration_order(self):
        """
        Test that class 0 is the least significant digit.
        """
        assert enumerate_assignments(2, colored=False) == [(None, None), (0, None), (None, 0), (0, 0)]
        colored = enumerate_assignments(2, colored=True)
        assert len(colored) == 9
        assert colored[1] == (0, None)
        assert colored[2] == (1, None)
        assert colored[3] == (None, 0)

    def test_z7(self):
        """
        Test every connection set of Z7.
        """
        summary = theorem_sweep("Z7")
        assert summary.total == 8
        assert summary.disconnected == 1
        assert summary.has_twins == 0
        assert summary.stable == 7
        assert summary.unstable == 0
        assert summary.passed
        assert [instance.encoding for instance in summary.instances] == list(range(8))

    def test_z15(self):
        """
        Test the 128 connection sets of Z15.
        """
        summary = theorem_sweep("Z15")
        assert summary.total == 128
        assert summary.unstable == 0
        assert summary.checked == summary.stable
        assert summary.passed

    def test_z3xz3(self):
        """
        Test the 16 connection sets of Z3 x Z3.
        """
        summary = theorem_sweep("Z3xZ3")
        assert summary.total == 16
        assert summary.unstable == 0

    def test_colored_mode(self):
        """
        Test the 2-coloured sweep of Z3 x Z3.
        """
        summary = theorem_sweep("Z3xZ3", colored=True)
        assert summary.total == 81
        assert summary.unstable == 0
        assert summary.shadow_failures == 0
        assert summary.passed

    def test_loops_mode(self):
        """
        Test sweeps that allow the identity in S.
        """
        summary = theorem_sweep("Z5", loops=True)
        assert summary.total == 8
        assert summary.unstable == 0

    def test_parallel_matches_serial(self):
        """
        Test that worker processes give the same summary.
        """
        assert theorem_sweep("Z7", jobs=2) == theorem_sweep("Z7", jobs=1)

    def test_refusals(self):
        """
        Test groups outside the sweep's scope.
        """
        with pytest.raises(PreconditionError):
            theorem_sweep("SD(7,3,2)")
        with pytest.raises(PreconditionError):
            theorem_sweep("Z4")
        with pytest.raises(RefusalError):
            theorem_sweep("Z27")

    @pytest.mark.slow
    def test_z21(self):
        """
        Test the 1024 connection sets of Z21.
        """
        summary = theorem_sweep("Z21")
        assert summary.total == 1024
        assert summary.unstable == 0


class TestChao:
    def test_coset_predicate(self):
        """
        Test multiplicative cosets mod 13 and mod 7.
        """
        assert is_multiplicative_coset(frozenset({1, 5, 8, 12}), 13)
        assert not is_multiplicative_coset(frozenset({1, 2, 5, 6}), 7)
        assert is_multiplicative_coset(frozenset({1, 6}), 7)
        assert is_multiplicative_coset(frozenset({2, 5}), 7)

    def test_symmetric_sets(self):
        """
        Test that there are 2^((p-1)/2) - 1 non-empty symmetric sets.
        """
        assert len(symmetric_sets(7)) == 7
        assert all(frozenset(7 - s for s in S) == S for S in symmetric_sets(7))

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_small_primes(self, p: int):
        """
        Test that edge-transitivity and the coset criterion agree.
        """
        report = chao_check(p)
        assert report.total == 2 ** ((p - 1) // 2) - 1
        assert report.disagreements == []
        assert report.passed

    def test_instances_record_both_predicates(self):
        """
        Test the per-set rows for p = 7.
        """
        rows = {tuple(instance.connection_set): instance for instance in chao_check(7).instances}
        assert rows[(1, 2, 5, 6)].edge_transitive is False
        assert rows[(1, 2, 5, 6)].coset is False
        assert rows[(1, 6)].edge_orbits == 1

    def test_invalid_primes(self):
        """
        Test composite, even and out-of-range values.
        """
        for p in [1, 2, 9, 19]:
            with pytest.raises(InvalidParameterError):
                chao_check(p)

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [11, 13])
    def test_larger_primes(self, p: int):
        """
        Test the classification for p = 11 and p = 13.
        """
        assert chao_check(p).passed
