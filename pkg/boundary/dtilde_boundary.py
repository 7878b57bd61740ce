from exactalg.rational import RationalFunction
from boundary.boundary_word import BoundaryWord
from boundary.embedding import BoundaryEmbedding
from boundary.generator import LinearWord, generator_from_a_tilde
from quiver.quiver import Quiver, dtilde_rank, fork_kind
from util.errors import BoundaryError


class RootSpan:
  """
    The distinguished occurrence of the Sigma word in ^inf(w1) root (w2)^inf.
    Root vertex j carries Sigma label labels[j]; the bottom fork line sits at index 0,
    interior vertex i at index i - 2 and the top fork line at index n - 2.
  """

  def __init__(self, n: int, labels: list, values: list, coordinates: list):
    self.n = n
    self.first = 0
    self.last = len(labels) - 1
    self.labels = list(labels)
    self.values = list(values)
    self.coordinates = list(coordinates)

  def index_of(self, line) -> int:
    if line == "bottom":
      return 0
    if line == "top":
      return self.n - 2
    if isinstance(line, int) and 3 <= line <= self.n - 1:
      return line - 2
    raise BoundaryError(f"unknown modelled line {line}")

  def origin(self, line) -> tuple:
    return self.coordinates[self.index_of(line)]

  def lines(self) -> list:
    return ["bottom"] + list(range(3, self.n)) + ["top"]


def sigma_labels(n: int) -> list:
  return [1] + list(range(3, n + 1))


def _sigma_values(q: Quiver, n: int) -> dict:
  size = n + 2
  u = [RationalFunction.variable(i, size) for i in range(size)]
  values = {i: u[i] for i in range(3, n)}
  values[1] = u[1] * u[2]
  values[n] = u[n] * u[n + 1]
  if fork_kind(q, "bottom") == "mixed":
    values[1] = u[2] * (1 + u[3]) / u[1]
  if fork_kind(q, "top") == "mixed":
    values[n] = u[n + 1] * (1 + u[n - 1]) / u[n]
  return values


def _sigma_arrow(q: Quiver, n: int, a: int, b: int) -> bool:
  """
    True when the Sigma edge a - b points from a to b. A mixed fork is read off its second leaf.
  """

  if (a, b) == (1, 3) and fork_kind(q, "bottom") == "mixed":
    return q.multiplicity(2, 3) > 0
  if (a, b) == (n - 1, n) and fork_kind(q, "top") == "mixed":
    return q.multiplicity(n - 1, n + 1) > 0
  return q.multiplicity(a, b) > 0


def a_tilde_cover(q: Quiver, keep_u0: bool=False) -> tuple:
  """
    The cycle quiver Sigma / o / tSigma / o with its vertex values, labelled 1..2n clockwise:
    Sigma at 1..n-1, o at n, the mirrored copy of Sigma at n+1..2n-1 and o again at 2n.
  """

  n = dtilde_rank(q)
  sigma = sigma_labels(n)
  labels = _sigma_values(q, n)
  o = RationalFunction.variable(0, n + 2) if keep_u0 else RationalFunction.constant(1, n + 2)
  arrows = []
  for pos, (a, b) in enumerate(zip(sigma, sigma[1:]), start=1):
    forward = _sigma_arrow(q, n, a, b)
    arrows.append((pos, pos + 1) if forward else (pos + 1, pos))
    # the copy of position p sits at 2n - p
    copy_a, copy_b = 2 * n - pos, 2 * n - pos - 1
    arrows.append((copy_a, copy_b) if forward else (copy_b, copy_a))
  arrows += [(n - 1, n), (n, n + 1), (2 * n - 1, 2 * n), (2 * n, 1)]
  values = {}
  for pos, label in enumerate(sigma, start=1):
    values[pos] = labels[label]
    values[2 * n - pos] = labels[label]
  values[n] = o
  values[2 * n] = o
  return Quiver(range(1, 2 * n + 1), arrows), values


def build_dtilde_boundary(q: Quiver, keep_u0: bool=False) -> tuple:
  """
    The boundary ^inf(w1) root (w2)^inf of a D~n quiver and its root span.
    w1 cuts the cover at vertex 1 reading clockwise, w2 cuts it at the copy of Sigma's last
    vertex reading anticlockwise. Fork products sit at the Sigma ends and o carries u0 = 1.
  """

  n = dtilde_rank(q)
  cover, values = a_tilde_cover(q, keep_u0)
  omega_1 = generator_from_a_tilde(cover, 1, "clockwise", values)
  omega_2 = generator_from_a_tilde(cover, n + 1, "anticlockwise", values)
  root = LinearWord(omega_1.letters[:n - 2], omega_1.values[:n - 1])
  word = BoundaryWord(omega_1, root, omega_2)
  embedding = BoundaryEmbedding(word)
  span = RootSpan(n, sigma_labels(n), list(root.values), [embedding.position(j) for j in range(n - 1)])
  return word, span
