import json
import subprocess
import sys

import pytest

from quadrantal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


class TestPolyCommands:
    def test_divrem(self, capsys):
        data = run_json(capsys, "poly", "divrem", "--dividend", "x^2 - 2", "--divisor", "x - 1")
        assert data["quotient"] == ["1", "1"]
        assert data["remainder"] == ["-1"]

    def test_gcd(self, capsys):
        data = run_json(capsys, "poly", "gcd", "--a", "x^2 - 1", "--b", "x - 1")
        assert data["gcd"] == ["-1", "1"]

    def test_content(self, capsys):
        data = run_json(capsys, "poly", "content", "--poly", "[\"2\", \"4\", \"6\"]")
        assert data["content"] == "2" and data["primitive"] == ["1", "2", "3"]

    def test_eisenstein(self, capsys):
        data = run_json(capsys, "poly", "eisenstein", "--poly", "x^3 - 2")
        assert data["witness"] == "2"
        data = run_json(capsys, "poly", "eisenstein", "--poly", "x^2 + 4")
        assert data["witness"] is None

    def test_cyclotomic(self, capsys):
        data = run_json(capsys, "poly", "cyclotomic", "--p", "3")
        assert data["poly"] == ["1", "1", "1"]


class TestFieldCommands:
    def test_trace_norm(self, capsys):
        data = run_json(
            capsys, "field", "trace-norm", "--minpoly", "x^2 + 5", "--element", "1,2"
        )
        assert data == {"trace": "2", "norm": "21"}

    def test_discriminant(self, capsys):
        data = run_json(
            capsys, "field", "discriminant", "--minpoly", "x^2 - 2", "--tuple", "1,0;0,1"
        )
        assert data["discriminant"] == "8"

    def test_minpoly_of(self, capsys):
        data = run_json(
            capsys, "field", "minpoly-of", "--minpoly", "x^3 - 3", "--element", "0,0,1"
        )
        assert data["minpoly"] == ["-9", "0", "0", "1"]
        assert data["is_algebraic_integer"] is True

    def test_compose(self, capsys):
        data = run_json(
            capsys, "field", "compose", "--op", "sum", "--p", "x^2 - 2", "--q", "x^2 - 3"
        )
        assert data["poly"] == ["1", "0", "-10", "0", "1"]

    def test_primitive_element(self, capsys):
        data = run_json(
            capsys, "field", "primitive-element", "--p", "x^2 - 2", "--q", "x^3 - 3"
        )
        assert data["c"] == "1"

    def test_denominator_clearing(self, capsys):
        data = run_json(
            capsys,
            "field",
            "denominator-clearing",
            "--minpoly",
            "x^2 - 2",
            "--element",
            "0,1/3",
        )
        assert data["n"] == "3"


class TestQuadCommands:
    def test_ring(self, capsys):
        data = run_json(capsys, "quad", "ring", "--m", "-23")
        assert data["d"] == -23 and data["omega"] == "(1+sqrt(m))/2"

    def test_split(self, capsys):
        data = run_json(capsys, "quad", "split", "--m", "-5", "--q", "2")
        assert data["type"] == "ramified"
        assert data["factors"][0]["multiplicity"] == 2
        data = run_json(capsys, "quad", "split", "--m", "-5", "--q", "7")
        assert data["type"] == "split"

    def test_factor_with_verify(self, capsys):
        data = run_json(
            capsys, "quad", "factor", "--m", "-5", "--ideal", "(21)", "--verify"
        )
        assert [f["norm"] for f in data["factors"]] == ["3", "3", "7", "7"]
        assert data["verification"] == {"product_equals_input": True}

    def test_factor_generator_syntax(self, capsys):
        data = run_json(capsys, "quad", "factor", "--m", "-5", "--ideal", "(3, 1+2w)")
        assert len(data["factors"]) == 1 and data["factors"][0]["norm"] == "3"

    def test_ideal_ops(self, capsys):
        data = run_json(
            capsys, "quad", "product", "--m", "-5", "--ideal-a", "(2, 1+w)", "--ideal-b", "(2, 1+w)"
        )
        assert data["product"] == {"m": -5, "a": "1", "b": "0", "c": "2"}
        data = run_json(
            capsys, "quad", "gcd", "--m", "-5", "--ideal-a", "(4)", "--ideal-b", "(6)"
        )
        assert data["gcd"] == {"m": -5, "a": "1", "b": "0", "c": "2"}
        data = run_json(
            capsys, "quad", "quotient", "--m", "-5", "--ideal-a", "(6)", "--ideal-b", "(2)"
        )
        assert data["divides"] is True and data["quotient"]["c"] == "3"
        data = run_json(
            capsys, "quad", "quotient", "--m", "-5", "--ideal-a", "(2, 1+w)", "--ideal-b", "(3, 1+w)"
        )
        assert data == {"divides": False}

    def test_principal(self, capsys):
        data = run_json(capsys, "quad", "principal", "--m", "-5", "--ideal", "(2, 1+w)")
        assert data == {"principal": False}
        data = run_json(capsys, "quad", "principal", "--m", "-5", "--ideal", "(7)")
        assert data["principal"] is True and data["generator"] == {"a": 7, "b": 0}

    def test_minkowski(self, capsys):
        data = run_json(capsys, "quad", "minkowski", "--m", "-23")
        assert data["floor"] == "3"

    def test_classgroup_with_verify(self, capsys):
        data = run_json(capsys, "quad", "classgroup", "--m", "-23", "--verify")
        assert data["h"] == 3 and data["structure"] == [3]
        assert all(data["verification"].values())

    def test_ideal_json_triple_input(self, capsys):
        data = run_json(
            capsys,
            "quad",
            "principal",
            "--m",
            "-5",
            "--ideal",
            '{"m": -5, "a": "2", "b": "1", "c": "1"}',
        )
        assert data == {"principal": False}


class TestUnitsAndPell:
    def test_units_real(self, capsys):
        data = run_json(capsys, "units", "--m", "2")
        assert data["w"] == 2 and data["rank"] == 1
        assert data["fundamental_unit"] == {"a": 1, "b": 1}
        assert data["regulator"].startswith("0.8813735870")
        assert data["precision_digits"] == 50
        assert data["continued_fraction"] == {"quotients": [1, 2], "period": 1}

    def test_units_imaginary(self, capsys):
        data = run_json(capsys, "units", "--m", "-3")
        assert data["w"] == 6 and data["rank"] == 0 and data["regulator"] == "1"

    def test_pell(self, capsys):
        data = run_json(capsys, "pell", "--m", "2", "--kind", "minusOne")
        assert data["solvable"] and (data["x"], data["y"]) == ("1", "1")
        data = run_json(capsys, "pell", "--m", "3", "--kind", "minusOne")
        assert data == {"m": 3, "kind": "minusOne", "solvable": False}


class TestCycloCommands:
    def test_split(self, capsys):
        data = run_json(capsys, "cyclo", "split", "--m", "12", "--q", "2")
        assert (data["e"], data["f"], data["g"]) == (2, 2, 1)
        assert data["phi_m"] == 4

    def test_lists(self, capsys):
        data = run_json(capsys, "cyclo", "lists")
        assert len(data["imaginary_quadratic"]) == 9


class TestCensusCommand:
    def test_basic(self, capsys):
        data = run_json(capsys, "census", "--m", "-5", "--k", "1000")
        assert data["h"] == 2
        assert int(data["Z_k"]) == sum_of_sieve(-5, 1000)

    def test_per_class_and_csv(self, capsys, tmp_path):
        csv = tmp_path / "ratios.csv"
        data = run_json(
            capsys, "census", "--m", "-5", "--k", "500", "--per-class", "--csv", str(csv)
        )
        assert len(data["per_class"]) == 2
        lines = csv.read_text().strip().splitlines()
        assert lines[0] == "k,z_over_k"
        assert lines[-1].startswith("500,")


def sum_of_sieve(m, k):
    from quadrantal.census import ideal_count_sieve
    from quadrantal.quadring import ring_of_integers

    return sum(ideal_count_sieve(ring_of_integers(m), k))


class TestFormatsAndExitCodes:
    def test_text_format(self, capsys):
        code, out = run_cli(capsys, "quad", "ring", "--m", "2", "--format", "text")
        assert code == 0
        assert "d: 8" in out

    def test_exit_2_on_bad_input(self, capsys):
        code, _ = run_cli(capsys, "quad", "factor", "--m", "-5", "--ideal", "bogus")
        assert code == 2
        code, _ = run_cli(capsys, "poly", "divrem", "--dividend", "??", "--divisor", "x")
        assert code == 2

    def test_exit_3_on_precondition(self, capsys):
        code, _ = run_cli(capsys, "quad", "classgroup", "--m", "12")
        assert code == 3
        code, _ = run_cli(capsys, "poly", "cyclotomic", "--p", "6")
        assert code == 3

    def test_unknown_subcommand_exits_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "quadrantal.cli", "frobnicate"],
            capture_output=True,
        )
        assert proc.returncode == 2

    def test_byte_identical_runs(self):
        for argv in (
            ["quad", "classgroup", "--m", "-23"],
            ["units", "--m", "2"],
            ["census", "--m", "-5", "--k", "300"],
        ):
            cmd = [sys.executable, "-m", "quadrantal.cli"] + argv
            a = subprocess.run(cmd, capture_output=True)
            b = subprocess.run(cmd, capture_output=True)
            assert a.returncode == b.returncode == 0
            assert a.stdout == b.stdout

    def test_precision_env(self, capsys, monkeypatch):
        monkeypatch.setenv("QUADRANTAL_PRECISION", "40")
        data = run_json(capsys, "units", "--m", "2")
        assert data["precision_digits"] == 40
        monkeypatch.setenv("QUADRANTAL_PRECISION", "10")  # clamped to the minimum
        data = run_json(capsys, "units", "--m", "2")
        assert data["precision_digits"] == 30
