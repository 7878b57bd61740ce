import pytest

from dtilde.catalog import VariableCatalog, all_variables
from dtilde.transjective import (DtildeTiling, check_ray_correspondence, split_extreme_value, tiling_fork_relation,
  transjective_variables)
from dtilde.tubes import TubeSpec, big_tube_mouth, rank2_tube_mouths, tube_variable
from exactalg.polynomial import poly_sqrt
from exactalg.rational import RationalFunction, is_positive, laurent_decompose, substitute
from quiver.quiver import build_d_tilde, fork_vertices
from util.errors import FriezeLabError, LaurentError, QuiverError, SplitError

MIXED_BOTTOM = [(1, 3), (3, 2), (4, 3), (5, 3)]


def u(i):
  return RationalFunction.variable(i, 7)


def ones(value):
  return substitute(value, {i: 1 for i in range(0, 7)})


def by_slot(entries):
  slots = {}
  for e in entries:
    slots.setdefault((e["k"], e["line"]), []).append(e["value"])
  return slots


def test_split_extreme_values():
  v1 = (1 + u(3)) ** 2 / (u(1) * u(2))
  assert set(split_extreme_value(v1, "bottom", 4)) == {(1 + u(3)) / u(1), (1 + u(3)) / u(2)}
  v3 = (1 + u(3)) ** 2 / (u(4) * u(5))
  assert set(split_extreme_value(v3, "top", 4)) == {(1 + u(3)) / u(4), (1 + u(3)) / u(5)}
  assert set(split_extreme_value(u(1) * u(2), "bottom", 4)) == {u(1), u(2)}


def test_split_rejects_non_fork_products():
  with pytest.raises(SplitError, match="extreme ray value is not a fork product"):
    split_extreme_value((1 + u(3)) / (u(1) * u(2)), "bottom", 4)


def test_d4_transjective_slots(d4, alphas):
  slots = by_slot(transjective_variables(d4, 0, 1))
  assert slots[(0, 3)] == [u(3)]
  assert set(slots[(0, "bottom")]) == {u(1), u(2)}
  assert set(slots[(1, "bottom")]) == {(1 + u(3)) / u(1), (1 + u(3)) / u(2)}
  assert slots[(1, 3)] == [(u(1) * u(2) * u(4) * u(5) + (1 + u(3)) ** 4) / (u(1) * u(2) * u(3) * u(4) * u(5))]
  assert set(slots[(1, "top")]) == {(1 + u(3)) / u(4), (1 + u(3)) / u(5)}


def test_negative_slots_come_from_the_frieze(d4):
  entries = transjective_variables(d4, -2, 2)
  slots = by_slot(entries)
  assert sorted({k for k, _ in slots}) == [-2, -1, 0, 1, 2]
  for values in slots.values():
    for value in values:
      assert laurent_decompose(value) is not None
  assert transjective_variables(d4, 1, 0) == []


def test_transjective_needs_canonical_forks():
  with pytest.raises(QuiverError):
    transjective_variables(build_d_tilde(4, MIXED_BOTTOM), 0, 1)


@pytest.mark.parametrize("n", [4, 5])
def test_rays_match_the_modelled_frieze(n):
  assert check_ray_correspondence(build_d_tilde(n, "all-in"), 6) == 7 * (n - 1)


def test_rays_match_the_modelled_frieze_in_other_orientations():
  assert check_ray_correspondence(build_d_tilde(5, "proof"), 3) == 4 * 4
  assert check_ray_correspondence(build_d_tilde(4, "all-out"), 3) == 4 * 3


@pytest.mark.parametrize("n", [4, 5])
def test_joint_and_fork_ray_relations(n):
  tiling = DtildeTiling(build_d_tilde(n, "proof"))
  for k in range(0, 5):
    lhs, rhs = tiling_fork_relation(tiling, k, "bottom")
    assert lhs == rhs
  for k in range(1, 5):
    lhs, rhs = tiling_fork_relation(tiling, k, "top")
    assert lhs == rhs


@pytest.mark.parametrize("n", [4, 5])
def test_extreme_ray_values_are_fork_products(n):
  tiling = DtildeTiling(build_d_tilde(n, "all-in"))
  for fork in ("bottom", "top"):
    _, a, b = fork_vertices(n, fork)
    for k in range(0, 5):
      value = tiling.slot_value(fork, k)
      square = value * u(a) * u(b)
      poly_sqrt(square.numerator)
      poly_sqrt(square.denominator)
      left, right = split_extreme_value(value, fork, n)
      assert left * right == value
      assert laurent_decompose(left) is not None
      assert laurent_decompose(right) is not None


def test_d4_big_tube(d4, alphas):
  tube = big_tube_mouth(d4)
  assert tube.rank == 2
  assert tube.mouth == [alphas["alpha1"], alphas["alpha1'"]]
  assert [ones(v) for v in tube.mouth] == [5, 5]


def test_d5_big_tube_has_rank_3(d5):
  tube = big_tube_mouth(d5)
  assert tube.rank == 3
  assert len(set(tube.mouth)) == 3
  for value in tube.mouth:
    assert laurent_decompose(value) is not None


def test_d4_rank2_tubes(d4, alphas):
  second, third = rank2_tube_mouths(d4)
  assert second.name == "1-5 2-4"
  assert second.mouth == [alphas["alpha2"], alphas["alpha2'"]]
  assert third.mouth == [alphas["alpha3"], alphas["alpha3'"]]
  assert [ones(v) for v in second.mouth + third.mouth] == [5, 5, 5, 5]


def test_tube_variables(alphas):
  big = TubeSpec("big", [alphas["alpha1"], alphas["alpha1'"]])
  assert tube_variable(big, 1, 1) == alphas["alpha1"]
  assert tube_variable(big, 1, 2) == alphas["alpha1"] * alphas["alpha1'"] - 1
  second = TubeSpec("1-5 2-4", [alphas["alpha2"], alphas["alpha2'"]])
  deep = tube_variable(second, 1, 3)
  assert deep == alphas["alpha2"] * alphas["alpha2'"] * alphas["alpha2"] - 2 * alphas["alpha2"]
  assert laurent_decompose(deep) is not None
  with pytest.raises(FriezeLabError):
    tube_variable(big, 3, 1)
  with pytest.raises(FriezeLabError):
    tube_variable(big, 1, 0)


def test_d4_catalog(d4, alphas):
  catalog = all_variables(d4, (0, 1), 1)
  values = set(catalog.values())
  expected = [u(i) for i in range(1, 6)] + [(1 + u(3)) / u(i) for i in (1, 2, 4, 5)] + list(alphas.values())
  for value in expected:
    assert value in values
  assert len(values) == len(catalog)
  assert catalog.entries[0]["kind"] == "initial"


def test_catalog_entries_are_positive_laurent(d4):
  catalog = all_variables(d4, (-2, 2), 2)
  for value in catalog.values():
    assert laurent_decompose(value) is not None
    assert is_positive(value)


def test_catalog_ordering(d4):
  catalog = all_variables(d4, (-1, 1), 1)
  kinds = [e["kind"] for e in catalog.entries]
  assert kinds == sorted(kinds, key=["initial", "transjective", "tube"].index)
  slots = [e["k"] for e in catalog.transjective]
  assert slots == sorted(slots)
  ranks = [e["tube_rank"] for e in catalog.entries if e["kind"] == "tube"]
  assert ranks == sorted(ranks, reverse=True)


def test_tube_depth_is_capped_below_the_rank(d5):
  catalog = all_variables(d5, None, 3)
  depths = {(e["tube"], e["depth"]) for e in catalog.entries if e["kind"] == "tube"}
  assert ("big", 2) in depths
  assert ("big", 3) not in depths
  assert max(d for name, d in depths if name != "big") == 1


def test_empty_catalog_has_only_initial_variables(d4):
  catalog = all_variables(d4, None, 0)
  assert catalog.values() == [u(i) for i in range(1, 6)]


def test_mixed_fork_catalog_is_mapped_back():
  mixed = build_d_tilde(4, MIXED_BOTTOM)
  catalog = all_variables(mixed, (0, 1), 1)
  values = set(catalog.values())
  assert (1 + u(3)) / u(1) in values
  for i in range(1, 6):
    assert u(i) in values
  for value in values:
    assert laurent_decompose(value) is not None


def test_catalog_rejects_non_laurent_values(d4):
  catalog = VariableCatalog(d4)
  with pytest.raises(LaurentError):
    catalog.add({"kind": "tube", "value": u(1) / (1 + u(2))})
  assert catalog.add({"kind": "initial", "vertex": 1, "value": u(1)})
  assert not catalog.add({"kind": "transjective", "value": u(1)})
