import pytest

from exactalg.rational import RationalFunction, laurent_decompose
from frieze.render import render_frieze
from frieze.session import (FriezeSession, fork_relation, fork_relation_shift, frieze_table, frieze_value,
  modelled_determinant, modelled_lines, modelled_value)
from quiver.quiver import Quiver, build_d_tilde
from quiver.seed import Seed
from util.errors import FriezeError


def u(i):
  return RationalFunction.variable(i, 7)


def session(n, orientation):
  return FriezeSession(Seed.initial(build_d_tilde(n, orientation)))


def test_slice_zero_is_the_seed(d4_seed):
  s = FriezeSession(d4_seed)
  assert s.slice(0) == d4_seed.variables


def test_first_slice_of_d4(d4_seed):
  s = FriezeSession(d4_seed)
  assert frieze_value(s, 1, 1) == (1 + u(3)) / u(1)
  assert frieze_value(s, 1, 2) == (1 + u(3)) / u(2)
  assert frieze_value(s, 1, 4) == (1 + u(3)) / u(4)
  assert frieze_value(s, 1, 3) == (u(1) * u(2) * u(4) * u(5) + (1 + u(3)) ** 4) / (u(1) * u(2) * u(3) * u(4) * u(5))


def test_knitting_backwards_inverts_forwards(d4_seed):
  forward = FriezeSession(d4_seed)
  back = FriezeSession(Seed(d4_seed.quiver, forward.slice(2)))
  assert back.slice(-2) == d4_seed.variables
  assert back.slice(-1) == forward.slice(1)


def test_frieze_values_are_laurent(d4_seed):
  s = FriezeSession(d4_seed)
  for k in range(-3, 4):
    for v in d4_seed.quiver.vertices:
      assert laurent_decompose(frieze_value(s, k, v)) is not None


def test_frieze_needs_an_acyclic_quiver():
  with pytest.raises(FriezeError):
    FriezeSession(Seed.initial(Quiver([1, 2, 3], [(1, 2), (2, 3), (3, 1)])))


def test_unknown_vertex(d4_seed):
  with pytest.raises(FriezeError):
    frieze_value(FriezeSession(d4_seed), 0, 9)


def test_modelled_lines(d4_seed):
  s = FriezeSession(d4_seed)
  assert modelled_lines(5) == ["bottom", 3, 4, "top"]
  assert modelled_value(s, 0, "bottom") == u(1) * u(2)
  assert modelled_value(s, 1, "top") == (1 + u(3)) ** 2 / (u(4) * u(5))
  assert modelled_value(s, 1, 3) == frieze_value(s, 1, 3)
  with pytest.raises(FriezeError):
    modelled_value(s, 0, 7)


def test_mixed_forks_have_no_modelled_line():
  mixed = FriezeSession(Seed.initial(build_d_tilde(4, [(1, 3), (3, 2), (4, 3), (5, 3)])))
  with pytest.raises(FriezeError):
    modelled_value(mixed, 1, "bottom")
  with pytest.raises(FriezeError):
    fork_relation_shift(mixed.quiver, "bottom")


def test_fork_relation_shift():
  assert fork_relation_shift(build_d_tilde(5, "all-in"), "bottom") == 1
  assert fork_relation_shift(build_d_tilde(5, "proof"), "top") == -1


@pytest.mark.parametrize("n", [4, 5])
def test_fork_relations_both_in(n):
  s = session(n, "all-in")
  for fork in ("bottom", "top"):
    for k in range(0, 5):
      lhs, rhs = fork_relation(s, k, fork)
      assert lhs == rhs


@pytest.mark.parametrize("n", [4, 5, 6])
def test_fork_relations_of_the_proof_orientation(n):
  s = session(n, "proof")
  for k in range(0, 5):
    lhs, rhs = fork_relation(s, k, "bottom")
    assert lhs == rhs
  for k in range(1, 5):
    lhs, rhs = fork_relation(s, k, "top")
    assert lhs == rhs


def test_modelled_determinants_are_one():
  s = session(5, "all-in")
  for line in (3, 4):
    for k in range(0, 4):
      assert modelled_determinant(s, k, line) == 1
  with pytest.raises(FriezeError):
    modelled_determinant(s, 0, "top")


def test_frieze_table(d4_seed):
  s = FriezeSession(d4_seed)
  rows = frieze_table(s, 0, 0)
  assert [row["vertex"] for row in rows] == [1, 2, 3, 4, 5]
  assert [row["value"] for row in rows] == [u(i) for i in range(1, 6)]
  modelled = frieze_table(s, 0, 1, modelled=True)
  assert len(modelled) == 6
  assert modelled[-1] == {"k": 1, "line": "top", "value": (1 + u(3)) ** 2 / (u(4) * u(5))}


def test_render_frieze(d4_seed):
  text = render_frieze(FriezeSession(d4_seed), 0, 1)
  lines = text.splitlines()
  assert lines[0].split(" | ")[0].strip() == "k"
  assert len(lines) == 2 + 5
  assert "(u3 + 1)/u2" in text
