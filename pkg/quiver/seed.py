from exactalg.rational import RationalFunction
from quiver.quiver import Quiver, dtilde_rank, fork_kind, fork_vertices
from util.errors import QuiverError


class Seed:
  """
    A quiver together with one cluster variable per vertex.
  """

  def __init__(self, quiver: Quiver, variables: dict):
    missing = [v for v in quiver.vertices if v not in variables]
    if missing:
      raise QuiverError(f"seed has no variable for vertices {missing}")
    self.quiver = quiver
    self.variables = {v: variables[v] for v in quiver.vertices}

  @staticmethod
  def initial(quiver: Quiver):
    """
      Seed with the variable u_i at vertex i.
    """

    size = max(quiver.vertices) + 1
    return Seed(quiver, {v: RationalFunction.variable(v, size) for v in quiver.vertices})

  def cluster(self) -> list:
    return [self.variables[v] for v in self.quiver.vertices]

  def key(self) -> tuple:
    """
      Sorted canonical variable strings with the arrow multiset. Vertex permutations are not quotiented.
    """

    return (tuple(sorted(str(x) for x in self.variables.values())), self.quiver.key())

  def __eq__(self, other):
    return isinstance(other, Seed) and self.quiver == other.quiver and self.variables == other.variables

  def __hash__(self):
    return hash(self.key())

  def __str__(self):
    return f"Seed({self.quiver}; " + ", ".join(f"{v}: {x}" for v, x in self.variables.items()) + ")"


def exchange_value(seed: Seed, k) -> RationalFunction:
  """
    (prod over arrows into k of x_source + prod over arrows out of k of x_target) / x_k
  """

  size = seed.variables[k].size
  incoming = RationalFunction.constant(1, size)
  for source, count in seed.quiver.predecessors(k):
    incoming = incoming * seed.variables[source] ** count
  outgoing = RationalFunction.constant(1, size)
  for target, count in seed.quiver.successors(k):
    outgoing = outgoing * seed.variables[target] ** count
  return (incoming + outgoing) / seed.variables[k]


def mutate_seed(s: Seed, k) -> Seed:
  if k not in s.quiver.vertices:
    raise QuiverError(f"unknown vertex {k}")
  variables = dict(s.variables)
  variables[k] = exchange_value(s, k)
  return Seed(s.quiver.mutate(k), variables)


class CanonicalSeed:
  """
    A D~n seed whose mixed forks were mutated at the fork vertex 1 (resp. n), which leaves
    both-in or both-out forks. back_substitution maps values written in the mutated seed's
    variables back to the original ones.
  """

  def __init__(self, original: Quiver):
    n = dtilde_rank(original)
    self.original = original
    self.n = n
    self.mutated_at = []
    quiver = original
    size = n + 2
    self.back_substitution = {}
    for fork in ("bottom", "top"):
      if fork_kind(original, fork) != "mixed":
        continue
      joint, leaf, _ = fork_vertices(n, fork)
      quiver = quiver.mutate(leaf)
      self.mutated_at.append(leaf)
      self.back_substitution[leaf] = (1 + RationalFunction.variable(joint, size)) / RationalFunction.variable(leaf, size)
    self.quiver = quiver

  @property
  def is_identity(self) -> bool:
    return not self.mutated_at


def canonical_seed(q: Quiver) -> CanonicalSeed:
  return CanonicalSeed(q)
