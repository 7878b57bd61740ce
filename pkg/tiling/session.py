import logging

from boundary.boundary_word import BoundaryWord
from boundary.embedding import BoundaryEmbedding, first_index, word_at_point, word_for_columns
from exactalg.matrix import Matrix2
from exactalg.rational import RationalFunction
from tiling.continuant import continuant_formula, tiling_formula
from tiling.fillers.product_filler import ProductFiller
from tiling.fillers.recurrence_filler import RecurrenceFiller
from util.errors import LinearizationError, TilingError, TilingInvariantError

DIRECTIONS = {
  "horizontal": (1, 0),
  "vertical": (0, 1),
  "diagonal": (1, 1),
}

_fill_builders = {
  "product": lambda s: ProductFiller(**s),
  "recurrence": lambda s: RecurrenceFiller(**s),
}


class TilingSession:
  """
    The SL2-tiling extending a boundary, evaluated lazily and memoized per point.
    Cache writes are idempotent: a point always maps to the same canonical value.
  """

  def __init__(self, embedding: BoundaryEmbedding):
    self.embedding = embedding
    self._cache = {}

  @staticmethod
  def from_boundary(word: BoundaryWord, anchor: tuple=(0, 0)):
    return TilingSession(BoundaryEmbedding(word, anchor))

  @property
  def cache_size(self) -> int:
    return len(self._cache)

  def cached(self, p: tuple):
    return self._cache.get(tuple(p))

  def store(self, p: tuple, value: RationalFunction):
    self._cache[tuple(p)] = value

  def product_value(self, p: tuple) -> RationalFunction:
    """
      Fresh evaluation of a point strictly below the boundary, bypassing the cache.
    """

    return tiling_formula(word_at_point(self.embedding, p))

  def value_or_none(self, p: tuple):
    p = tuple(p)
    if p in self._cache:
      return self._cache[p]
    kind = self.embedding.classify(p)
    if kind == "above":
      return None
    if kind == "boundary":
      value = self.embedding.value(self.embedding.vertex_at(p))
    else:
      value = self.product_value(p)
    self._cache[p] = value
    return value

  def is_numeric(self) -> bool:
    word = self.embedding.word
    return all(v.is_constant() for part in (word.left, word.root, word.right) for v in part.values)


def tile_value(s: TilingSession, p: tuple) -> RationalFunction:
  value = s.value_or_none(p)
  if value is None:
    raise TilingError(f"point {tuple(p)} lies above the boundary")
  return value


class Ray:
  """
    The sequence t(origin + k * direction), extended on demand.
  """

  def __init__(self, origin: tuple, direction: str):
    if direction not in DIRECTIONS:
      raise TilingError(f"unknown ray direction '{direction}'")
    self.origin = tuple(origin)
    self.direction = direction
    self._values = []

  def point(self, k: int) -> tuple:
    dc, dr = DIRECTIONS[self.direction]
    return (self.origin[0] + k * dc, self.origin[1] + k * dr)

  def values(self, session: TilingSession, count: int) -> list:
    while len(self._values) < count:
      self._values.append(tile_value(session, self.point(len(self._values))))
    return self._values[:count]


def ray_values(s: TilingSession, origin: tuple, direction: str, count: int) -> list:
  return Ray(origin, direction).values(s, count)


def linearization_coefficient(s: TilingSession, col: int, cross_check: bool=True) -> RationalFunction:
  """
    The alpha with C_{col-1} + C_{col+1} = alpha C_col, read on the first row below the boundary
    where all three columns are defined and checked on the next row.
  """

  e = s.embedding
  first_row = e.position(e.column_start(col - 1))[1] + 1
  values = []
  for row in (first_row, first_row + 1):
    middle = tile_value(s, (col, row))
    if middle.is_zero():
      raise TilingError(f"zero tiling value at {(col, row)}")
    values.append((tile_value(s, (col - 1, row)) + tile_value(s, (col + 1, row))) / middle)
  if values[0] != values[1]:
    raise LinearizationError(f"column {col} has row-dependent coefficients {values[0]} and {values[1]}")
  if cross_check and continuant_via_word(s, col, col) != values[0]:
    raise LinearizationError(f"column {col} coefficient disagrees with its column word")
  return values[0]


def row_linearization_coefficient(s: TilingSession, row: int) -> RationalFunction:
  """
    The mirrored call for three successive rows, read on the first column where rows row-1..row+1
    are all below the boundary and checked on the next column.
  """

  e = s.embedding
  j = first_index(lambda i: e.position(i)[1] < row - 1)
  first_col = e.position(j)[0] + 1
  values = []
  for col in (first_col, first_col + 1):
    middle = tile_value(s, (col, row))
    if middle.is_zero():
      raise TilingError(f"zero tiling value at {(col, row)}")
    values.append((tile_value(s, (col, row - 1)) + tile_value(s, (col, row + 1))) / middle)
  if values[0] != values[1]:
    raise LinearizationError(f"row {row} has column-dependent coefficients {values[0]} and {values[1]}")
  return values[0]


def continuant_via_word(s: TilingSession, col_first: int, col_last: int) -> RationalFunction:
  return continuant_formula(word_for_columns(s.embedding, col_first, col_last))


def window(s: TilingSession, c0: int, r0: int, c1: int, r1: int, fill: str=None, fill_settings: dict=None) -> list:
  """
    Rows r0..r1 of columns c0..c1, row-major. Cells above the boundary are None.
  """

  if c1 < c0 or r1 < r0:
    raise TilingError(f"invalid window {c0},{r0},{c1},{r1}")
  if fill is None:
    fill = "recurrence" if s.is_numeric() else "product"
  if fill not in _fill_builders:
    raise TilingError(f"unknown fill strategy '{fill}'")
  points = [(c, r) for r in range(r0, r1 + 1) for c in range(c0, c1 + 1)]
  if all(s.embedding.classify(p) == "above" for p in points):
    raise TilingError(f"window {c0},{r0},{c1},{r1} lies entirely above the boundary")
  filler = _fill_builders[fill](dict(fill_settings or {}))
  logging.info(f"Filling window {c0},{r0},{c1},{r1} ({len(points)} cells) with the {fill} strategy")
  values = filler.fill(s, points)
  return [[values[(c, r)] for c in range(c0, c1 + 1)] for r in range(r0, r1 + 1)]


def check_unimodular(grid: list) -> int:
  """
    Every 2x2 block of defined cells has determinant 1. Returns the number of blocks checked.
  """

  checked = 0
  for r in range(len(grid) - 1):
    for c in range(len(grid[r]) - 1):
      cells = (grid[r][c], grid[r][c + 1], grid[r + 1][c], grid[r + 1][c + 1])
      if any(v is None for v in cells):
        continue
      det = Matrix2(*cells).det()
      if det != 1:
        raise TilingInvariantError(f"2x2 block at offset ({c}, {r}) has determinant {det}")
      checked += 1
  return checked
