import logging

from dtilde.transjective import DtildeTiling, require_canonical_forks
from exactalg.rational import RationalFunction
from quiver.quiver import Quiver, dtilde_rank
from quiver.seed import Seed
from quiver.walk import reduced_walk, walk_cluster_variable
from tiling.continuant import continuant
from tiling.session import linearization_coefficient
from util.errors import FriezeLabError, PeriodError


class TubeSpec:
  """
    A tube given by the cluster variables on its mouth, read cyclically.
  """

  def __init__(self, name: str, mouth: list):
    self.name = name
    self.mouth = list(mouth)

  @property
  def rank(self) -> int:
    return len(self.mouth)

  def __str__(self):
    return f"{self.name} (rank {self.rank}): " + ", ".join(str(x) for x in self.mouth)


def big_tube_mouth(q: Quiver) -> TubeSpec:
  """
    The tube of rank n-2. Its mouth holds the linearization coefficients of the columns right of the
    root, which repeat with period n-2. The mouth starts with the column class of the root vertex u3.
  """

  require_canonical_forks(q)
  tiling = DtildeTiling(q)
  s = tiling.session
  rank = tiling.n - 2
  first_col = tiling.span.coordinates[-1][0] + 1
  coefficients = [linearization_coefficient(s, first_col + i) for i in range(2 * rank)]
  if coefficients[:rank] != coefficients[rank:]:
    raise PeriodError(f"column coefficients right of column {first_col - 1} do not repeat after {rank} columns")
  start = (tiling.span.coordinates[1][0] - first_col) % rank
  mouth = coefficients[start:rank] + coefficients[:start]
  logging.info(f"Big tube of D~{tiling.n}: rank {rank}, columns {first_col}..{first_col + 2 * rank - 1}")
  return TubeSpec("big", mouth)


def rank2_tube_mouths(q: Quiver) -> tuple:
  """
    The two tubes of rank 2, from the reduced walks 1 -> n+1, 2 -> n and 1 -> n, 2 -> n+1.
    Each tube is named after its walks' endpoints.
  """

  n = dtilde_rank(q)
  seed = Seed.initial(q)
  tubes = []
  for pairs in (((1, n + 1), (2, n)), ((1, n), (2, n + 1))):
    mouth = [walk_cluster_variable(seed, reduced_walk(q, a, b)) for a, b in pairs]
    tubes.append(TubeSpec(" ".join(f"{a}-{b}" for a, b in pairs), mouth))
  return tuple(tubes)


def tube_variable(tube: TubeSpec, i: int, d: int) -> RationalFunction:
  """
    q_d of the d mouth variables starting at mouth index i (1-based, cyclic).
  """

  if not 1 <= i <= tube.rank or d < 1:
    raise FriezeLabError(f"no tube variable at mouth index {i}, depth {d} of a rank {tube.rank} tube")
  return continuant(tube.mouth[(i - 1 + j) % tube.rank] for j in range(d))
