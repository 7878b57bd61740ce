from exactalg.rational import RationalFunction
from boundary.generator import LinearWord, concat, generator_from_a_tilde, parse_word_tokens
from util.errors import BoundaryError

_INF = "^inf"


class BoundaryWord:
  """
    Bi-infinite word ^inf(left) root (right)^inf, or ^inf(generator)^inf when periodic.
    Vertex 0 is the first vertex of the root; vertex j is expanded on demand by index arithmetic.
  """

  def __init__(self, left: LinearWord, root: LinearWord, right: LinearWord, periodic: bool=False):
    if not len(left) or not len(right):
      raise BoundaryError("generators must contain at least one letter")
    # each generator closes on itself and the root sits between them
    concat(left, left)
    concat(right, right)
    concat(left, root, right)
    self.left = left
    self.root = root
    self.right = right
    self.periodic = periodic

  @staticmethod
  def from_generator(generator: LinearWord):
    return BoundaryWord(generator, LinearWord((), (generator.first,)), generator, periodic=True)

  @property
  def root_length(self) -> int:
    return len(self.root)

  def value(self, j: int) -> RationalFunction:
    m = len(self.root)
    if 0 <= j <= m:
      return self.root.values[j]
    if j > m:
      return self.right.values[(j - m) % len(self.right)]
    return self.left.values[j % len(self.left)]

  def letter(self, j: int) -> str:
    """
      Letter of the step from vertex j to vertex j + 1.
    """

    m = len(self.root)
    if 0 <= j < m:
      return self.root.letters[j]
    if j >= m:
      return self.right.letters[(j - m) % len(self.right)]
    return self.left.letters[j % len(self.left)]

  def offset(self, j: int) -> tuple:
    """
      (col, row) displacement of vertex j from vertex 0.
    """

    m = len(self.root)
    if 0 <= j <= m:
      return self.root.prefix[j]
    if j > m:
      copies, rest = divmod(j - m, len(self.right))
      base = self.root.displacement
      dc, dr = self.right.displacement
      pc, pr = self.right.prefix[rest]
      return (base[0] + copies * dc + pc, base[1] + copies * dr + pr)
    copies, rest = divmod(j, len(self.left))
    dc, dr = self.left.displacement
    pc, pr = self.left.prefix[rest]
    return (copies * dc + pc, copies * dr + pr)

  def segment(self, first: int, last: int) -> LinearWord:
    if last < first:
      raise BoundaryError(f"empty segment {first}..{last}")
    return LinearWord([self.letter(j) for j in range(first, last)], [self.value(j) for j in range(first, last + 1)])

  def map_values(self, f):
    return BoundaryWord(self.left.map_values(f), self.root.map_values(f), self.right.map_values(f), self.periodic)

  def period_vector(self, side: str="right") -> tuple:
    """
      Translation (r, -s) carried by one copy of a generator with r letters x and s letters y.
    """

    return (self.right if side == "right" else self.left).displacement

  def __eq__(self, other):
    return (isinstance(other, BoundaryWord) and self.periodic == other.periodic
      and (self.left, self.root, self.right) == (other.left, other.root, other.right))

  def __str__(self):
    if self.periodic:
      return f"{_INF}( {self.left} ){_INF}"
    return f"{_INF}( {self.left} ) ( {self.root} ) ( {self.right} ){_INF}"


def is_admissible(w: BoundaryWord) -> bool:
  """
    Neither infinite tail is ultimately constant.
  """

  return w.left.has_both_letters() and w.right.has_both_letters()


def periodic_boundary_from_a_tilde(q, cut_vertex, direction: str="clockwise", values: dict=None) -> BoundaryWord:
  return BoundaryWord.from_generator(generator_from_a_tilde(q, cut_vertex, direction, values))


def _top_level_spans(text: str) -> list:
  spans = []
  depth = 0
  start = None
  for i, ch in enumerate(text):
    if ch == "(":
      if depth == 0:
        start = i
      depth += 1
    elif ch == ")":
      depth -= 1
      if depth < 0:
        raise BoundaryError("unbalanced parentheses in boundary")
      if depth == 0:
        spans.append((start, i))
  if depth != 0:
    raise BoundaryError("unbalanced parentheses in boundary")
  return spans


def _split_groups(inner: str) -> tuple:
  """
    (first group, middle text, last group) of '( .. ) middle ( .. )'; middle and last are None
    when the text is a single group.
  """

  spans = _top_level_spans(inner)
  if not spans or spans[0][0] != 0 or spans[-1][1] != len(inner) - 1:
    raise BoundaryError("boundary must look like ^inf( gen )^inf or ^inf( gen ) root ( gen )^inf")
  first, last = spans[0], spans[-1]
  if first == last:
    return inner[1:-1], None, None
  middle = inner[first[1] + 1:last[0]].strip()
  if middle and _top_level_spans(middle) == [(0, len(middle) - 1)]:
    middle = middle[1:-1]
  return inner[1:first[1]], middle, inner[last[0] + 1:-1]


def _resolve(groups: list) -> list:
  """
    Fills missing values. groups holds (letters, values) with None for missing values plus the
    glue points, each a list of (group index, value index) naming one shared vertex.
  """

  words, glue_points = groups
  for point in glue_points:
    given = [words[g][1][i] for g, i in point if words[g][1][i] is not None]
    if any(v != given[0] for v in given[1:]):
      raise BoundaryError("generator does not glue")
    value = given[0] if given else RationalFunction.constant(1)
    for g, i in point:
      words[g][1][i] = value
  one = RationalFunction.constant(1)
  return [LinearWord(letters, [one if v is None else v for v in values]) for letters, values in words]


def parse_boundary(text: str) -> BoundaryWord:
  """
    Parses ^inf( <gen> )^inf or ^inf( <gen> ) <root> ( <gen> )^inf, where a word is
    whitespace separated values and letters, e.g. 'u1*u2 x u3 y u4*u5'. Omitted values are 1;
    omitted values at a gluing point are taken from the other words meeting there.
  """

  text = text.strip()
  if not text.startswith(_INF) or not text.endswith(_INF):
    raise BoundaryError("boundary must start and end with ^inf")
  first, middle, last = _split_groups(text[len(_INF):-len(_INF)].strip())
  if middle is None:
    letters, values = parse_word_tokens(first)
    words = [(letters, values)]
    ends = [(0, 0), (0, len(letters))]
    generator, = _resolve((words, [ends]))
    if not len(generator):
      raise BoundaryError("generators must contain at least one letter")
    return BoundaryWord.from_generator(generator)
  words = [list(parse_word_tokens(part)) for part in (first, middle, last)]
  m = len(words[1][0])
  left_point = [(0, 0), (0, len(words[0][0])), (1, 0)]
  right_point = [(1, m), (2, 0), (2, len(words[2][0]))]
  points = [left_point + right_point] if m == 0 else [left_point, right_point]
  left, root, right = _resolve((words, points))
  return BoundaryWord(left, root, right)
