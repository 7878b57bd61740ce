import csv
import io
import json

import click
import pytest
from click.testing import CliRunner

from cli import entry_point
from exactalg.rational import RationalFunction, parse_rational
from util.config import threads_from_env
from util.errors import LaurentError

D4 = '{"dtilde": {"n": 4, "arrows": "all-in"}}'


def u(i):
  return RationalFunction.variable(i, 7)


def run(*args):
  return CliRunner(mix_stderr=False).invoke(entry_point, list(args))


def test_tile_periodic_boundary():
  result = run("tile", "-b", "^inf( x x x y )^inf", "-w", "1,1,8,1", "--numeric", "all=1", "-f", "json")
  assert result.exit_code == 0, result.stderr
  doc = json.loads(result.output)
  assert doc["columns"] == list(range(1, 9))
  assert doc["rows"][0]["values"] == ["2", "3", "4", "9", "14", "19", "43", "67"]


def test_tile_quiver_boundary():
  result = run("tile", "-q", D4, "-w", "1,1,1,1", "-f", "json", "--check")
  assert result.exit_code == 0, result.stderr
  value = json.loads(result.output)["rows"][0]["values"][0]
  assert parse_rational(value) == (1 + u(3)) ** 2 / (u(1) * u(2))


def test_tile_text_marks_cells_above_the_boundary():
  result = run("tile", "-b", "^inf( x x x y )^inf", "-w", "0,-1,2,1")
  assert result.exit_code == 0, result.stderr
  assert "." in result.output
  assert result.output.startswith("# boundary:")


def test_tile_usage_errors():
  assert run("tile", "-w", "0,0,1,1").exit_code == 1
  assert run("tile", "-b", "^inf( x y )^inf", "-q", D4, "-w", "0,0,1,1").exit_code == 1
  assert run("tile", "-b", "^inf( x y )^inf", "-w", "0,0,1").exit_code == 1


def test_window_above_the_boundary_fails():
  result = run("tile", "-b", "^inf( x x x y )^inf", "-w", "0,-9,1,-8")
  assert result.exit_code == 1
  assert "Error" in result.stderr


def test_variables_contains_the_tube_mouths(alphas):
  result = run("variables", "-q", D4, "-k", "-1,1", "-t", "1")
  assert result.exit_code == 0, result.stderr
  doc = json.loads(result.output)
  values = [parse_rational(row["value"]) for row in doc["rows"]]
  assert alphas["alpha2'"] in values
  assert len(set(values)) == len(values) == doc["meta"]["size"]
  first = doc["rows"][0]
  assert (first["kind"], first["vertex"], first["value"], first["k"]) == ("initial", 1, "u1", None)


def test_variables_rejects_small_n():
  result = run("variables", "-q", '{"dtilde": {"n": 3}}')
  assert result.exit_code == 1
  assert "n >= 4" in result.stderr


def test_variables_numeric_csv():
  result = run("variables", "-q", D4, "-k", "0,0", "-t", "0", "-f", "csv", "--numeric", "all=1")
  assert result.exit_code == 0, result.stderr
  rows = list(csv.DictReader(io.StringIO(result.output)))
  assert [row["value"] for row in rows] == ["1"] * 5


def test_variables_output_is_deterministic(tmp_path):
  first, second = tmp_path / "a.json", tmp_path / "b.json"
  assert run("variables", "-q", D4, "-o", str(first)).exit_code == 0
  assert run("variables", "-q", D4, "-o", str(second)).exit_code == 0
  assert first.read_bytes() == second.read_bytes()


def test_invariant_breach_exits_with_2(monkeypatch):
  def breach(*args, **kwargs):
    raise LaurentError("value is not a Laurent polynomial")

  monkeypatch.setattr("dtilde.variables.all_variables", breach)
  result = run("variables", "-q", D4)
  assert result.exit_code == 2
  assert "Laurent" in result.stderr


def test_frieze_table():
  result = run("frieze", "-q", D4, "-k", "0,1", "-f", "json")
  assert result.exit_code == 0, result.stderr
  rows = json.loads(result.output)["rows"]
  found = {(row["k"], row["vertex"]): parse_rational(row["value"]) for row in rows}
  assert found[(1, 2)] == (1 + u(3)) / u(2)
  assert found[(0, 5)] == u(5)


def test_frieze_modelled_lines():
  result = run("frieze", "-q", D4, "-k", "1,1", "--modelled", "-f", "json")
  assert result.exit_code == 0, result.stderr
  rows = json.loads(result.output)["rows"]
  top = [row for row in rows if row["line"] == "top"]
  assert parse_rational(top[0]["value"]) == (1 + u(3)) ** 2 / (u(4) * u(5))


def test_frieze_single_slot_is_the_seed():
  result = run("frieze", "-q", D4, "-k", "0,0", "-f", "csv")
  assert result.exit_code == 0, result.stderr
  rows = list(csv.DictReader(io.StringIO(result.output)))
  assert [row["value"] for row in rows] == ["u1", "u2", "u3", "u4", "u5"]


def test_frieze_art():
  result = run("frieze", "-q", D4, "-k", "0,1", "--art")
  assert result.exit_code == 0, result.stderr
  assert "(u3 + 1)/u2" in result.output


def test_every_printed_value_parses_back():
  result = run("variables", "-q", '{"dtilde": {"n": 5, "arrows": "proof"}}', "-k", "-1,1", "-t", "2")
  assert result.exit_code == 0, result.stderr
  for row in json.loads(result.output)["rows"]:
    assert str(parse_rational(row["value"])) == row["value"]


def test_threads_from_env(monkeypatch):
  monkeypatch.delenv("FRIEZE_LAB_THREADS", raising=False)
  assert threads_from_env() is None
  monkeypatch.setenv("FRIEZE_LAB_THREADS", "4")
  assert threads_from_env() == 4
  monkeypatch.setenv("FRIEZE_LAB_THREADS", "1")
  assert threads_from_env() is None
  monkeypatch.setenv("FRIEZE_LAB_THREADS", "many")
  with pytest.raises(click.UsageError):
    threads_from_env()


def test_bad_thread_count_is_a_usage_error(monkeypatch):
  monkeypatch.setenv("FRIEZE_LAB_THREADS", "0")
  assert run("variables", "-q", D4, "-t", "0", "-k", "none").exit_code == 1


@pytest.mark.slow
def test_verify_command():
  result = run("verify", "-q", D4, "-d", "9", "-f", "json")
  assert result.exit_code == 0, result.stderr
  doc = json.loads(result.output)
  assert doc["meta"]["passed"] is True
  assert all(row["found"] for row in doc["rows"])
