from boundary.boundary_word import BoundaryWord, is_admissible
from boundary.generator import LinearWord
from util.errors import BoundaryError

# galloping stops here; an admissible boundary always crosses a row or column much sooner
_MAX_SEARCH = 1 << 62


def first_index(pred) -> int:
  """
    Smallest integer j with pred(j), for pred monotone False...True over the integers.
  """

  if pred(0):
    hi, step = 0, 1
    while pred(-step):
      step *= 2
      if step > _MAX_SEARCH:
        raise BoundaryError("boundary search did not terminate")
    lo = -step
  else:
    lo, step = 0, 1
    while not pred(step):
      step *= 2
      if step > _MAX_SEARCH:
        raise BoundaryError("boundary search did not terminate")
    hi = step
  while hi - lo > 1:
    mid = (lo + hi) // 2
    if pred(mid):
      hi = mid
    else:
      lo = mid
  return hi


class BoundaryEmbedding:
  """
    A boundary drawn in the lattice. Points are (col, row) with columns growing to the right and
    rows growing downwards; x moves one column right, y moves one row up. The tiling lives
    strictly below the staircase.
  """

  def __init__(self, word: BoundaryWord, anchor: tuple=(0, 0)):
    if not is_admissible(word):
      raise BoundaryError("boundary is not admissible: an infinite tail is ultimately constant")
    self.word = word
    self.anchor = tuple(anchor)

  def position(self, j: int) -> tuple:
    dc, dr = self.word.offset(j)
    return (self.anchor[0] + dc, self.anchor[1] + dr)

  def value(self, j: int):
    return self.word.value(j)

  def letter(self, j: int) -> str:
    return self.word.letter(j)

  def column_start(self, col: int) -> int:
    """
      Index of the lowest boundary vertex in a column (the right end of the x step entering it).
    """

    return first_index(lambda j: self.position(j)[0] >= col)

  def row_end(self, row: int) -> int:
    """
      Index of the rightmost boundary vertex on or below a row.
    """

    return first_index(lambda j: self.position(j)[1] < row) - 1

  def vertex_at(self, p: tuple):
    """
      Word index of the boundary vertex at p, or None.
    """

    col, row = p
    j = self.column_start(col)
    lowest = self.position(j)[1]
    if row > lowest:
      return None
    j += lowest - row
    return j if self.position(j) == tuple(p) else None

  def is_below(self, p: tuple) -> bool:
    col, row = p
    return row > self.position(self.column_start(col))[1]

  def classify(self, p: tuple) -> str:
    if self.is_below(p):
      return "below"
    if self.vertex_at(p) is not None:
      return "boundary"
    return "above"

  def segment(self, first: int, last: int) -> LinearWord:
    return self.word.segment(first, last)


def word_at_point(e: BoundaryEmbedding, p: tuple) -> LinearWord:
  """
    The part of the boundary cut out by the horizontal and vertical projections of p: from the
    lower end of the y step met by the ray going left, to the right end of the x step met by the
    ray going up. It starts with y and ends with x.
  """

  if not e.is_below(p):
    raise BoundaryError(f"point {tuple(p)} is not strictly below the boundary")
  col, row = p
  return e.segment(e.row_end(row), e.column_start(col))


def word_for_columns(e: BoundaryEmbedding, col_first: int, col_last: int) -> LinearWord:
  """
    The boundary between the columns col_first..col_last, extended one step left and one step right.
  """

  if col_first > col_last:
    raise BoundaryError(f"invalid column range {col_first}..{col_last}")
  return e.segment(e.column_start(col_first) - 1, e.column_start(col_last + 1))
