import logging
from collections import deque
from multiprocessing import Pool

from quiver.seed import Seed, mutate_seed
from util.errors import FriezeLabError


class ExplorationFrontier:
  """
    Breadth-first state of a mutation search. Seeds are visited once per canonical key; every
    collected variable remembers the smallest number of mutations that produced it.
  """

  def __init__(self, seed: Seed, depth: int):
    if depth < 0:
      raise FriezeLabError(f"mutation depth must be >= 0, got {depth}")
    self.depth = depth
    self.visited = {seed.key(): 0}
    self.witness = {}
    # (seed, vertex mutated last) per entry of the current level
    self.level = deque([(seed, None)])
    self.current = 0
    self._collect(seed, 0)

  def _collect(self, seed: Seed, depth: int):
    for x in seed.cluster():
      self.witness.setdefault(x, depth)

  def done(self) -> bool:
    return self.current >= self.depth or not self.level

  def admit(self, children: list) -> int:
    """
      Adds the unvisited children of the current level as the next level. Returns how many were new.
    """

    next_level = deque()
    depth = self.current + 1
    for child, vertex in children:
      key = child.key()
      if key in self.visited:
        continue
      self.visited[key] = depth
      self._collect(child, depth)
      next_level.append((child, vertex))
    self.level = next_level
    self.current = depth
    return len(next_level)

  @property
  def variables(self) -> set:
    return set(self.witness)


def _expand(seed: Seed, last) -> list:
  return [(mutate_seed(seed, k), k) for k in seed.quiver.vertices if k != last]


def _run(frontier: ExplorationFrontier, starmap) -> ExplorationFrontier:
  while not frontier.done():
    expanded = starmap(_expand, list(frontier.level))
    new = frontier.admit([child for children in expanded for child in children])
    logging.info(f"Depth {frontier.current}: {new} new seeds, {len(frontier.witness)} variables, {len(frontier.visited)} seeds visited")
  return frontier


def explore(s0: Seed, depth: int, processes: int=None) -> ExplorationFrontier:
  """
    Mutates s0 breadth first up to depth mutations. A level is expanded by a process pool when
    processes > 1; the merge keeps the level's order, so the result does not depend on it.
  """

  frontier = ExplorationFrontier(s0, depth)
  if processes and processes > 1:
    with Pool(processes) as p:
      return _run(frontier, p.starmap)
  return _run(frontier, lambda f, work: [f(*args) for args in work])


def enumerate_by_mutation(s0: Seed, depth: int, processes: int=None) -> set:
  return explore(s0, depth, processes).variables
