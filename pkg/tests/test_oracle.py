import pytest

from dtilde.catalog import all_variables
from exactalg.rational import RationalFunction, is_positive, laurent_decompose
from oracle.enumerate import ExplorationFrontier, enumerate_by_mutation, explore
from oracle.report import verify_catalog
from quiver.quiver import Quiver, build_d_tilde
from quiver.seed import Seed, mutate_seed
from util.errors import FriezeLabError


def u(i):
  return RationalFunction.variable(i, 7)


def a2_seed():
  return Seed.initial(Quiver([1, 2], [(1, 2)]))


def test_a2_has_five_variables():
  x1, x2 = u(1), u(2)
  assert enumerate_by_mutation(a2_seed(), 5) == {x1, x2, (1 + x2) / x1, (1 + x1) / x2, (1 + x1 + x2) / (x1 * x2)}
  assert enumerate_by_mutation(a2_seed(), 12) == enumerate_by_mutation(a2_seed(), 5)


def test_depth_zero_gives_the_initial_cluster(d4_seed):
  assert enumerate_by_mutation(d4_seed, 0) == set(d4_seed.cluster())
  with pytest.raises(FriezeLabError):
    ExplorationFrontier(d4_seed, -1)


def test_enumeration_is_monotone(d4_seed):
  previous = enumerate_by_mutation(d4_seed, 0)
  for depth in range(1, 5):
    current = enumerate_by_mutation(d4_seed, depth)
    assert previous <= current
    previous = current


def test_witness_depths(d4_seed):
  frontier = explore(d4_seed, 2)
  assert frontier.witness[u(3)] == 0
  assert frontier.witness[(1 + u(3)) / u(1)] == 1
  assert max(frontier.witness.values()) == 2


def test_revisited_seeds_are_not_expanded(d4_seed):
  frontier = explore(d4_seed, 3)
  # every vertex of D~4 leads somewhere new at depth 1
  assert sum(1 for depth in frontier.visited.values() if depth == 1) == 5
  seed = mutate_seed(mutate_seed(d4_seed, 1), 2)
  again = mutate_seed(mutate_seed(d4_seed, 2), 1)
  assert seed.key() == again.key()
  assert set(seed.cluster()) == set(again.cluster())


def test_oracle_variables_are_positive_laurent(d4_seed):
  for value in enumerate_by_mutation(d4_seed, 5):
    assert laurent_decompose(value) is not None
    assert is_positive(value)


def test_parallel_levels_give_the_same_result(d4_seed):
  assert explore(d4_seed, 3, processes=2).witness == explore(d4_seed, 3).witness


def test_empty_catalog_passes():
  report = verify_catalog([], {u(1)})
  assert report.passed
  assert report.rows == []


def test_injected_variable_is_flagged(d4, d4_seed):
  frontier = explore(d4_seed, 4)
  fake = (1 + u(1)) / u(3)
  assert fake not in frontier.witness
  report = verify_catalog([u(1), fake], frontier)
  assert not report.passed
  assert report.missing == [fake]
  assert report.to_dict()["rows"][0] == {"entry": "u1", "found": True, "witness_depth": 0}


def test_small_catalog_is_reached_quickly(d4, d4_seed):
  catalog = all_variables(d4, (0, 1), 0)
  report = verify_catalog(catalog, explore(d4_seed, 5))
  assert report.passed, report.missing


@pytest.mark.slow
def test_d4_catalog_is_contained_in_the_depth_9_oracle(d4, d4_seed):
  catalog = all_variables(d4, (-2, 2), 2)
  frontier = explore(d4_seed, 9)
  report = verify_catalog(catalog, frontier)
  assert report.passed, report.missing
  assert not verify_catalog(catalog.values() + [(1 + u(1)) / u(3)], frontier).passed


@pytest.mark.slow
def test_d4_oracle_at_depth_8_is_positive_laurent(d4_seed):
  for value in enumerate_by_mutation(d4_seed, 8):
    assert laurent_decompose(value) is not None
    assert is_positive(value)


@pytest.mark.slow
def test_mixed_fork_catalog_is_contained_in_the_oracle():
  mixed = build_d_tilde(4, [(1, 3), (3, 2), (4, 3), (5, 3)])
  report = verify_catalog(all_variables(mixed, (-1, 1), 1), explore(Seed.initial(mixed), 9))
  assert report.passed, report.missing


def test_second_transjective_value_is_reached_by_mutation(d4_seed):
  # mutating the four leaves and then the joint
  value = (u(1) * u(2) * u(4) * u(5) + (1 + u(3)) ** 4) / (u(1) * u(2) * u(3) * u(4) * u(5))
  wrong = (u(1) * u(2) * u(3) * u(4) * u(5) + (1 + u(3)) ** 4) / (u(1) * u(2) * u(3) * u(4) * u(5))
  frontier = explore(d4_seed, 5)
  assert value in frontier.witness
  assert wrong not in frontier.witness
