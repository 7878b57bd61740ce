import logging

from boundary.dtilde_boundary import build_dtilde_boundary
from exactalg.polynomial import poly_sqrt
from exactalg.rational import RationalFunction
from frieze.session import FriezeSession, fork_relation_shift, frieze_value, modelled_lines, modelled_value
from quiver.quiver import Quiver, dtilde_rank, fork_classification, fork_vertices
from quiver.seed import Seed
from tiling.session import TilingSession, tile_value
from util.errors import InvariantBreach, NotASquareError, QuiverError, SplitError

# slots where the frieze and the tiling are compared when both are requested
_OVERLAP = range(0, 3)


class DtildeTiling:
  """
    The tiling of a D~n quiver's boundary with its root span. Line `line` at slot k >= 0 is the
    point reached from the line's root vertex after k diagonal steps.
  """

  def __init__(self, q: Quiver, keep_u0: bool=False):
    self.quiver = q
    self.n = dtilde_rank(q)
    self.boundary, self.span = build_dtilde_boundary(q, keep_u0)
    self.session = TilingSession.from_boundary(self.boundary)

  def slot_point(self, line, k: int) -> tuple:
    col, row = self.span.origin(line)
    return (col + k, row + k)

  def slot_value(self, line, k: int) -> RationalFunction:
    return tile_value(self.session, self.slot_point(line, k))

  def lines(self) -> list:
    return self.span.lines()


def require_canonical_forks(q: Quiver):
  mixed = [fork for fork, kind in fork_classification(q).items() if kind == "mixed"]
  if mixed:
    raise QuiverError(f"mixed {' and '.join(mixed)} fork; mutate it to a both-in or both-out fork first")


def split_extreme_value(v: RationalFunction, fork: str, n: int) -> tuple:
  """
    The two cluster variables U, V with U V = v sitting on a fork line.
    With u_a u_b the fork leaves, U = sqrt(v u_a u_b) / u_a and V = sqrt(v u_a u_b) / u_b.
  """

  _, a, b = fork_vertices(n, fork)
  size = max(v.size, b + 1)
  u_a = RationalFunction.variable(a, size)
  u_b = RationalFunction.variable(b, size)
  square = v * u_a * u_b
  try:
    root = RationalFunction.from_polynomial(poly_sqrt(square.numerator)) / RationalFunction.from_polynomial(poly_sqrt(square.denominator))
  except NotASquareError as e:
    raise SplitError() from e
  pair = (root / u_a, root / u_b)
  if pair[0] * pair[1] != v:
    raise SplitError()
  return pair


def _line_entries(k: int, line, fork_pair: tuple=None, value: RationalFunction=None) -> list:
  if fork_pair is None:
    return [{"kind": "transjective", "k": k, "line": line, "member": None, "value": value}]
  return [{"kind": "transjective", "k": k, "line": line, "member": member, "value": x} for member, x in enumerate(fork_pair)]


def transjective_variables(q: Quiver, k_min: int, k_max: int) -> list:
  """
    Transjective cluster variables of the slots k_min..k_max, one entry per variable:
    {kind, k, line, member, value}. Interior lines give one variable per slot, fork lines give the
    two factors of the fork product (member 0 and 1).

    Slots k >= 0 are read from the diagonal rays of the tiling, slots k < 0 from the frieze knitted
    backwards. Slots 0..2 inside the range are computed both ways and compared.
  """

  if k_min > k_max:
    return []
  require_canonical_forks(q)
  n = dtilde_rank(q)
  tiling = DtildeTiling(q) if k_max >= 0 else None
  frieze = FriezeSession(Seed.initial(q))
  logging.info(f"Collecting transjective variables of D~{n} for slots {k_min}..{k_max}")

  entries = []
  for k in range(k_min, k_max + 1):
    for line in modelled_lines(n):
      fork = line in ("bottom", "top")
      if k < 0:
        if fork:
          _, a, b = fork_vertices(n, line)
          entries += _line_entries(k, line, fork_pair=(frieze_value(frieze, k, a), frieze_value(frieze, k, b)))
        else:
          entries += _line_entries(k, line, value=frieze_value(frieze, k, line))
        continue
      value = tiling.slot_value(line, k)
      if k in _OVERLAP and value != modelled_value(frieze, k, line):
        raise InvariantBreach(f"tiling and frieze disagree on line {line} at slot {k}")
      if fork:
        pair = split_extreme_value(value, line, n)
        if k in _OVERLAP:
          _, a, b = fork_vertices(n, line)
          if set(pair) != {frieze_value(frieze, k, a), frieze_value(frieze, k, b)}:
            raise InvariantBreach(f"split of line {line} at slot {k} disagrees with the frieze")
        entries += _line_entries(k, line, fork_pair=pair)
      else:
        entries += _line_entries(k, line, value=value)
  logging.info(f"Found {len(entries)} transjective entries, tiling cache holds {tiling.session.cache_size if tiling else 0} points")
  return entries


def tiling_fork_relation(t: DtildeTiling, k: int, fork: str) -> tuple:
  """
    Both sides of [t(d_k) + 1]^2 = t(j_k) t(j_{k+shift}) with d_k on the joint's ray and j_k on the
    fork's ray. shift is +1 for a fork whose arrows enter the joint and -1 for one whose arrows leave it.
  """

  joint, _, _ = fork_vertices(t.n, fork)
  shift = fork_relation_shift(t.quiver, fork)
  lhs = (t.slot_value(joint, k) + 1) ** 2
  return lhs, t.slot_value(fork, k) * t.slot_value(fork, k + shift)


def check_ray_correspondence(q: Quiver, k_max: int) -> int:
  """
    Compares every modelled frieze value with slots 0..k_max against the diagonal ray value of the
    tiling, symbolically. Returns the number of comparisons.
  """

  require_canonical_forks(q)
  tiling = DtildeTiling(q)
  frieze = FriezeSession(Seed.initial(q))
  checked = 0
  for k in range(0, k_max + 1):
    for line in tiling.lines():
      if tiling.slot_value(line, k) != modelled_value(frieze, k, line):
        raise InvariantBreach(f"tiling and frieze disagree on line {line} at slot {k}")
      checked += 1
  logging.info(f"Checked {checked} ray values against the modelled frieze")
  return checked
