import networkx as nx

from exactalg.matrix import Matrix2, row_product
from exactalg.rational import RationalFunction
from quiver.quiver import Quiver
from quiver.seed import Seed
from util.errors import QuiverError


class Step:
  """
    One step of a walk: an arrow (source, target) traversed forward or backward.
  """

  def __init__(self, arrow: tuple, forward: bool):
    self.arrow = tuple(arrow)
    self.forward = forward

  @property
  def start(self):
    return self.arrow[0] if self.forward else self.arrow[1]

  @property
  def end(self):
    return self.arrow[1] if self.forward else self.arrow[0]

  def is_inverse_of(self, other) -> bool:
    return self.arrow == other.arrow and self.forward != other.forward

  def __eq__(self, other):
    return isinstance(other, Step) and self.arrow == other.arrow and self.forward == other.forward

  def __str__(self):
    return f"{self.arrow[0]}->{self.arrow[1]}" if self.forward else f"({self.arrow[0]}->{self.arrow[1]})^-1"


class Walk:

  def __init__(self, start, steps: list=None):
    self.start = start
    self.steps = list(steps or [])
    current = start
    for step in self.steps:
      if step.start != current:
        raise QuiverError(f"walk step {step} does not start at {current}")
      current = step.end

  @property
  def vertices(self) -> list:
    return [self.start] + [step.end for step in self.steps]

  @property
  def end(self):
    return self.vertices[-1]

  def __len__(self):
    return len(self.steps)

  def is_reduced(self) -> bool:
    return all(not b.is_inverse_of(a) for a, b in zip(self.steps, self.steps[1:]))

  def __str__(self):
    out = str(self.start)
    for step in self.steps:
      out += f" -> {step.end}" if step.forward else f" <- {step.end}"
    return out


def reduced_walk(q: Quiver, source, target) -> Walk:
  """
    The unique reduced walk between two vertices of a quiver whose underlying graph is a tree there.
  """

  graph = q.underlying_graph()
  if source not in graph or target not in graph:
    raise QuiverError(f"unknown walk endpoint {source if source not in graph else target}")
  try:
    path = nx.shortest_path(graph, source, target)
  except nx.NetworkXNoPath as e:
    raise QuiverError(f"no walk from {source} to {target}") from e
  steps = []
  for a, b in zip(path, path[1:]):
    if q.multiplicity(a, b) + q.multiplicity(b, a) != 1:
      raise QuiverError(f"walk from {source} to {target} is not unique")
    steps.append(Step((a, b), True) if q.multiplicity(a, b) else Step((b, a), False))
  return Walk(source, steps)


def _arrow_matrix(seed: Seed, step: Step) -> Matrix2:
  s, t = step.arrow
  u_s, u_t = seed.variables[s], seed.variables[t]
  one = RationalFunction.constant(1)
  zero = RationalFunction.constant(0)
  if step.forward:
    return Matrix2(u_t, zero, one, u_s)
  return Matrix2(u_t, one, zero, u_s)


def _vertex_matrix(seed: Seed, vertex, adjacent: list) -> Matrix2:
  """
    diag(prod of u_target over arrows out of vertex, prod of u_source over arrows into vertex),
    skipping the arrows of the adjacent walk steps.
  """

  used = {step.arrow for step in adjacent}
  out_product = RationalFunction.constant(1)
  for target, count in seed.quiver.successors(vertex):
    skipped = 1 if (vertex, target) in used else 0
    out_product = out_product * seed.variables[target] ** (count - skipped)
  in_product = RationalFunction.constant(1)
  for source, count in seed.quiver.predecessors(vertex):
    skipped = 1 if (source, vertex) in used else 0
    in_product = in_product * seed.variables[source] ** (count - skipped)
  return Matrix2.diagonal(out_product, in_product)


def walk_cluster_variable(s: Seed, c: Walk) -> RationalFunction:
  """
    Cluster variable of a reduced walk c = v_1 - ... - v_{m+1}:

      1 / (u_{v_1} ... u_{v_{m+1}}) . [1, 1] . prod_k M(d_k) V_c(k+1) . [1; 1]

    with M(e) = [[u_t, 0], [1, u_s]] for a forward arrow e: s -> t, M(e^-1) = [[u_t, 1], [0, u_s]]
    and M(d_0) the identity.
  """

  if not c.is_reduced():
    raise QuiverError(f"walk {c} is not reduced")
  vertices = c.vertices
  matrices = []
  for k, vertex in enumerate(vertices):
    adjacent = c.steps[max(k - 1, 0):k + 1]
    if k > 0:
      matrices.append(_arrow_matrix(s, c.steps[k - 1]))
    matrices.append(_vertex_matrix(s, vertex, adjacent))
  one = RationalFunction.constant(1)
  value = row_product((one, one), matrices, (one, one))
  for vertex in vertices:
    value = value / s.variables[vertex]
  return value
