import json

from app.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, run
from app.core.exceptions import TheoremViolationError
from app.services.verification_service import VerificationService


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestCommands:
    def test_example21(self, capsys):
        """
        Test the order-21 reproduction from the command line.
        """
        code, payload = _run_json(capsys, ["example21"])
        assert code == EXIT_OK
        assert payload["autX"] == "42"
        assert payload["autBX"] == "252"
        assert payload["stable"] is False

    def test_autgrp_graph6(self, capsys):
        """
        Test |Aut C5| from graph6 input.
        """
        code, payload = _run_json(capsys, ["autgrp", "--graph6", "Dhc"])
        assert code == EXIT_OK
        assert payload["order"] == "10"
        assert payload["edge_transitive"] is True

    def test_autgrp_json_file(self, capsys, tmp_path):
        """
        Test a coloured graph read from a JSON file.
        """
        graph_file = tmp_path / "c4.json"
        graph_file.write_text(json.dumps({"n": 4, "edges": [[0, 1, 0], [1, 2, 1], [2, 3, 0], [3, 0, 1]]}))
        code, payload = _run_json(capsys, ["autgrp", "--json", str(graph_file)])
        assert code == EXIT_OK
        assert payload["order"] == "4"

    def test_cayley(self, capsys):
        """
        Test the description of a coloured Cayley graph.
        """
        code, payload = _run_json(capsys, ["cayley", "--group", "Z9", "--set", "1,-1@0,2,-2@1"])
        assert code == EXIT_OK
        assert payload["S"] == ["1@0", "2@1", "7@1", "8@0"]
        assert payload["color_count"] == 2
        assert payload["graph6"] is None
        assert payload["degrees"] == [4]

    def test_stability_on_cayley_graph(self, capsys):
        """
        Test the stability report with the External Interfaces keys.
        """
        code, payload = _run_json(capsys, ["stability", "--group", "Z5", "--set", "1,-1"])
        assert code == EXIT_OK
        assert payload["group"] == "Z5"
        assert payload["S"] == ["1", "4"]
        assert payload["autX"] == "10"
        assert payload["autBX"] == "20"
        assert payload["stable"] is True

    def test_unstable_graph_without_group(self, capsys):
        """
        Test that an unstable graph outside the theorem exits 0.
        """
        code, payload = _run_json(capsys, ["stability", "--graph", "C6"])
        assert code == EXIT_OK
        assert payload["stable"] is False
        assert payload["witness"] is not None

    def test_sweep(self, capsys):
        """
        Test a sweep summary.
        """
        code, payload = _run_json(capsys, ["sweep", "--group", "Z7"])
        assert code == EXIT_OK
        assert payload["total"] == 8
        assert payload["unstable"] == 0

    def test_sweep_text(self, capsys):
        """
        Test the tabular sweep output.
        """
        code = run(["sweep", "--group", "Z5", "--output", "text"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "unstable: 0" in out
        assert "status" in out

    def test_lemma_check_variants(self, capsys):
        """
        Test the plain, chain and double-cover lemma checks.
        """
        code, payload = _run_json(capsys, ["lemma-check", "--group", "Z9", "--set", "1,-1@0,2,-2@1", "--k", "3"])
        assert code == EXIT_OK
        assert payload["kS"] == ["3@0+1", "6@0+1"]
        code, payload = _run_json(capsys, ["lemma-check", "--group", "Z7", "--set", "1,-1", "--k", "6", "--chain"])
        assert code == EXIT_OK
        assert payload["primes"] == [2, 3]
        code, payload = _run_json(capsys, ["lemma-check", "--group", "Z5", "--set", "1,-1", "--double-cover"])
        assert code == EXIT_OK
        assert payload["k"] == 6

    def test_walkmod_and_chao(self, capsys):
        """
        Test the walk congruence and the Z_p classification.
        """
        code, payload = _run_json(capsys, ["walkmod-check", "--group", "Z9", "--set", "1,-1,2,-2", "--p", "5"])
        assert code == EXIT_OK
        assert payload["passed"] is True
        code, payload = _run_json(capsys, ["chao", "--p", "7"])
        assert code == EXIT_OK
        assert payload["total"] == 7

    def test_products(self, capsys):
        """
        Test product construction and the product theorems.
        """
        code, payload = _run_json(capsys, ["product", "--graph", "C3", "--y", "P2", "--kind", "direct"])
        assert code == EXIT_OK
        assert payload["vertex_count"] == 6
        code, payload = _run_json(capsys, ["product", "--graph", "C5", "--kind", "doublecover"])
        assert payload["bipartite"] is True
        code, payload = _run_json(capsys, ["dorfler", "--graph", "C5", "--y", "C7"])
        assert payload["autXY"] == "140"
        code, payload = _run_json(capsys, ["bip-product", "--group", "Z5", "--set", "1,-1", "--y", "P4", "--route", "odd-abelian"])
        assert code == EXIT_OK
        assert payload["autXY"] == "20"

    def test_output_is_deterministic(self, capsys):
        """
        Test byte-identical JSON across runs.
        """
        run(["autgrp", "--graph", "K2,3"])
        first = capsys.readouterr().out
        run(["autgrp", "--graph", "K2,3"])
        assert capsys.readouterr().out == first


class TestExitCodes:
    def test_usage_errors(self, capsys):
        """
        Test unknown subcommands and missing arguments.
        """
        assert run(["bogus"]) == EXIT_USAGE
        assert run([]) == EXIT_USAGE
        assert run(["chao"]) == EXIT_USAGE
        assert run(["--help"]) == EXIT_OK

    def test_precondition_errors(self, capsys):
        """
        Test errors raised by the checkers.
        """
        assert run(["sweep", "--group", "SD(7,3,2)"]) == EXIT_USAGE
        assert run(["autgrp"]) == EXIT_USAGE
        assert run(["autgrp", "--graph6", "Dhc", "--graph", "C5"]) == EXIT_USAGE
        assert run(["cayley", "--group", "Z9", "--set", "1"]) == EXIT_USAGE
        assert run(["autgrp", "--json", "/nonexistent/graph.json"]) == EXIT_USAGE

    def test_failed_report_exits_with_violation(self, capsys, monkeypatch):
        """
        Test that a report with passed = false maps to exit code 1.
        """
        failed = VerificationService().example21().model_copy(update={"passed": False})
        monkeypatch.setattr(VerificationService, "example21", lambda self: failed)
        assert run(["example21"]) == EXIT_VIOLATION

    def test_theorem_violation_maps_to_exit_1(self, capsys, monkeypatch):
        """
        Test that TheoremViolationError from a checker maps to exit code 1.
        """
        def violate(self, p):
            raise TheoremViolationError("forced")

        monkeypatch.setattr(VerificationService, "chao", violate)
        assert run(["chao", "--p", "5"]) == EXIT_VIOLATION
