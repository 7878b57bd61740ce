import logging

import networkx as nx

from exactalg.rational import RationalFunction
from quiver.quiver import dtilde_rank, fork_kind, fork_vertices
from quiver.seed import Seed
from util.errors import FriezeError


class FriezeSession:
  """
    Frieze function a(k, i) on ZQ with a(0, i) the seed variables and the mesh relation

      a(k, i) a(k+1, i) = 1 + prod over arrows (k, i) -> (m, j) of a(m, j)

    Slices are knitted forward for k > 0 and backward for k < 0, and memoized.
  """

  def __init__(self, seed: Seed):
    graph = seed.quiver.digraph()
    if not nx.is_directed_acyclic_graph(graph):
      raise FriezeError("a frieze needs an acyclic quiver")
    self.seed = seed
    self.quiver = seed.quiver
    self._order = list(nx.topological_sort(graph))
    self._cache = {(0, v): x for v, x in seed.variables.items()}
    self._low = 0
    self._high = 0

  @property
  def n(self) -> int:
    return dtilde_rank(self.quiver)

  def _mesh_product(self, k: int, i) -> RationalFunction:
    """
      Product over the successors of (k, i): (k, j) for i -> j and (k+1, j) for j -> i.
    """

    value = RationalFunction.constant(1)
    for j, count in self.quiver.successors(i):
      value = value * self._cache[(k, j)] ** count
    for j, count in self.quiver.predecessors(i):
      value = value * self._cache[(k + 1, j)] ** count
    return value

  def _knit_forward(self):
    k = self._high
    for i in self._order:
      self._cache[(k + 1, i)] = (1 + self._mesh_product(k, i)) / self._cache[(k, i)]
    self._high = k + 1

  def _knit_backward(self):
    k = self._low - 1
    for i in reversed(self._order):
      self._cache[(k, i)] = (1 + self._mesh_product(k, i)) / self._cache[(k + 1, i)]
    self._low = k

  def ensure(self, k: int):
    while k > self._high:
      self._knit_forward()
    while k < self._low:
      self._knit_backward()

  def value(self, k: int, i) -> RationalFunction:
    self.ensure(k)
    return self._cache[(k, i)]

  def slice(self, k: int) -> dict:
    self.ensure(k)
    return {i: self._cache[(k, i)] for i in self.quiver.vertices}


def frieze_value(s: FriezeSession, k: int, i) -> RationalFunction:
  if i not in s.quiver.vertices:
    raise FriezeError(f"unknown vertex {i}")
  return s.value(k, i)


def modelled_lines(n: int) -> list:
  return ["bottom"] + list(range(3, n)) + ["top"]


def modelled_value(s: FriezeSession, k: int, line) -> RationalFunction:
  """
    Value of the modelled quiver on a line: the fork lines carry a(k,1) a(k,2) and a(k,n) a(k,n+1),
    the interior line i carries a(k, i).
  """

  n = s.n
  if line in ("bottom", "top"):
    if fork_kind(s.quiver, line) == "mixed":
      raise FriezeError(f"the {line} fork is mixed; mutate it to a both-in or both-out fork first")
    _, a, b = fork_vertices(n, line)
    return frieze_value(s, k, a) * frieze_value(s, k, b)
  if isinstance(line, int) and 3 <= line <= n - 1:
    return frieze_value(s, k, line)
  raise FriezeError(f"unknown modelled line {line}")


def fork_relation_shift(q, fork: str) -> int:
  """
    +1 when the fork arrows enter the joint, -1 when they leave it.
  """

  kind = fork_kind(q, fork)
  if kind == "mixed":
    raise FriezeError(f"the {fork} fork is mixed")
  return 1 if kind == "both-in" else -1


def fork_relation(s: FriezeSession, k: int, fork: str) -> tuple:
  """
    Both sides of [a(k, joint) + 1]^2 = F(k) F(k + shift) for the fork line F.
  """

  joint, _, _ = fork_vertices(s.n, fork)
  shift = fork_relation_shift(s.quiver, fork)
  lhs = (frieze_value(s, k, joint) + 1) ** 2
  return lhs, modelled_value(s, k, fork) * modelled_value(s, k + shift, fork)


def _line_of(n: int, vertex) -> object:
  if vertex in (1, 2):
    return "bottom"
  if vertex in (n, n + 1):
    return "top"
  return vertex


def modelled_determinant(s: FriezeSession, k: int, line: int) -> RationalFunction:
  """
    ad - bc on the square of the modelled quiver around the interior line at slot k.
    Glued fork vertices share one factor; the result is 1 on every square.
  """

  n = s.n
  if not (isinstance(line, int) and 3 <= line <= n - 1):
    raise FriezeError(f"{line} is not an interior line")
  neighbours = {}
  for j, _ in s.quiver.successors(line):
    neighbours[_line_of(n, j)] = k
  for j, _ in s.quiver.predecessors(line):
    neighbours[_line_of(n, j)] = k + 1
  bc = RationalFunction.constant(1)
  for neighbour, slot in sorted(neighbours.items(), key=lambda item: str(item[0])):
    bc = bc * modelled_value(s, slot, neighbour)
  return modelled_value(s, k, line) * modelled_value(s, k + 1, line) - bc


def frieze_table(s: FriezeSession, k_min: int, k_max: int, modelled: bool=False) -> list:
  """
    Rows of {k, vertex, value} (or {k, line, value} for the modelled quiver) ordered by k.
  """

  logging.info(f"Knitting frieze slices {k_min}..{k_max}")
  rows = []
  for k in range(k_min, k_max + 1):
    if modelled:
      rows += [{"k": k, "line": line, "value": modelled_value(s, k, line)} for line in modelled_lines(s.n)]
    else:
      rows += [{"k": k, "vertex": v, "value": frieze_value(s, k, v)} for v in s.quiver.vertices]
  return rows
