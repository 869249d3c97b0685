"""End-to-end smoke tests for the python module and the CLI."""

import json
import os
import subprocess

import pytest

import poltan

CLI = os.environ.get("POLTAN_CLI")


def test_box_dimensions():
    for n, d, want in [(2, 2, 12), (3, 2, 29), (2, 3, 48)]:
        ideal = poltan.box_polarization(n, d)
        assert ideal.tangent_dimension() == want
        assert poltan.determinantal_component_dim(n, d) == want


def test_standard_polarization_extras():
    p = poltan.standard_polarization(3, 2)
    assert p.tangent_dimension() == 27
    assert p.variable_deformation_dim() == 24


def test_generators_and_hilbert():
    p = poltan.standard_polarization(3, 2)
    assert p.generator_strings[0] == "x_{1,1}*x_{1,2}"
    assert len(p) == 6
    assert p.hilbert_function(2) == 15
    assert poltan.power_ideal(2, 2).hilbert_numerator() == [1, 0, -3, 2]
    assert poltan.box_polarization(2, 2).hilbert_numerator() == [1, 0, -3, 2]


def test_polarization_certificate():
    split = poltan.box_polarization(3, 2)
    base = poltan.power_ideal(3, 2)
    report = poltan.is_polarization(split, base, poltan.split_grouping(3, 2))
    assert report["ok"]
    assert report["generator_bijection"]
    assert report["numerator_match"]


def test_tree_operations():
    # The 5-vertex example: edges (1,2),(2,3),(3,4),(3,5) has Pruefer code (2,3,3).
    seq = poltan.prufer_encode(5, [(1, 2), (2, 3), (3, 4), (3, 5)])
    assert poltan.tree_edges(seq) == [(1, 2), (2, 3), (3, 4), (3, 5)]
    report = poltan.tree_index(seq)
    assert (report["nu1"], report["nu2"], report["index"]) == (1, 2, 5)

    tree = poltan.tree_ideal(seq)
    assert len(tree.ideal) == 10
    assert tree.ideal.tangent_dimension() == poltan.predicted_tangent_dim(seq)

    cert = poltan.is_polarization(tree.ideal, poltan.sqfree_power_ideal(4, 2), tree.grouping)
    assert cert["ok"]


def test_json_round_trip():
    ideal = poltan.box_polarization(2, 3)
    again = poltan.ideal_from_json(ideal.to_json())
    assert again == ideal
    assert again.generator_strings == ideal.generator_strings


def test_initial_ideal_and_flat_family():
    assert poltan.verify_initial_ideal(2, 2, 5)["pass"]
    assert poltan.verify_flat_family(2, ["1", "1/2", "-2"], 6)["pass"]
    assert poltan.verify_flat_family(2, ["0", "0", "0"], 6)["pass"]


def test_verify_all_quick():
    report = poltan.verify_all("quick", seed=0, jobs=2)
    assert report["pass"]
    assert report["profile"] == "quick"
    names = [row["name"] for row in report["checks"]]
    assert names == sorted(names)
    for row in report["checks"]:
        assert set(row) == {"name", "expected", "computed", "match", "millis"}


@pytest.mark.skipif(CLI is None, reason="POLTAN_CLI not set")
class TestCli:
    def run(self, *args, expect=0):
        proc = subprocess.run([CLI, *args], capture_output=True, text=True)
        assert proc.returncode == expect, proc.stderr
        return proc.stdout

    def test_verify_all_json_schema(self):
        out = json.loads(self.run("--json", "verify-all", "--profile", "quick"))
        assert set(out) == {"command", "profile", "seed", "jobs", "checks", "pass"}
        assert out["pass"] is True
        for row in out["checks"]:
            assert set(row) == {"name", "expected", "computed", "match", "millis"}
            assert isinstance(row["match"], bool)

    def test_ideal_json_matches_module(self):
        out = json.loads(self.run("--json", "ideal", "--kind", "box", "--n", "2", "--d", "2"))
        assert out == json.loads(poltan.box_polarization(2, 2).to_json())

    def test_tangent_formula(self):
        out = json.loads(
            self.run("--json", "tangent", "box:3,2", "--verify-formula", "box")
        )
        assert out["dimension"] == 29
        assert out["formulaValue"] == 29
        assert out["match"] is True

    def test_trees_rows(self):
        rows = json.loads(
            self.run("--json", "trees", "--n", "4", "--enumerate", "--verify", "--index")
        )
        assert len(rows) == 16
        assert all(row["match"] for row in rows)
        assert {"prufer", "index", "predicted", "computed", "match"} <= set(rows[0])

    def test_groebner_and_flat(self):
        out = json.loads(self.run("--json", "groebner-check", "--n", "2", "--d", "2"))
        assert out["pass"] is True
        out = json.loads(
            self.run("--json", "flat-check", "--d", "2", "--t", "1,1/2,-2", "--max-degree", "6")
        )
        assert out["pass"] is True

    def test_component(self):
        out = json.loads(self.run("--json", "component", "--n", "3", "--d", "2"))
        assert out["dimension"] == 29

    def test_exit_codes(self):
        self.run("no-such-subcommand", expect=2)
        self.run("trees", "--n", "4", expect=2)  # neither --enumerate nor --sample
        self.run("flat-check", "--d", "2", "--t", "1,nope,3", expect=2)
