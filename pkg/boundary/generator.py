from collections import Counter

from exactalg.rational import RationalFunction, parse_rational
from quiver.quiver import Quiver
from util.errors import BoundaryError

LETTERS = ("x", "y")
_STEPS = {"x": (1, 0), "y": (0, -1)}
_SWAP = {"x": "y", "y": "x"}


class LinearWord:
  """
    Finite word c_0 x_1 c_1 ... x_m c_m with letters in {x, y} and a value at every vertex.
    Used for generators, the root and the words read off a tiling.
  """

  def __init__(self, letters, values):
    self.letters = tuple(letters)
    self.values = tuple(values)
    if any(letter not in LETTERS for letter in self.letters):
      raise BoundaryError(f"letters must be x or y, got {''.join(self.letters)}")
    if len(self.values) != len(self.letters) + 1:
      raise BoundaryError("a word needs exactly one more value than letters")
    prefix = [(0, 0)]
    for letter in self.letters:
      dc, dr = _STEPS[letter]
      prefix.append((prefix[-1][0] + dc, prefix[-1][1] + dr))
    self._prefix = tuple(prefix)

  @staticmethod
  def ones(letters: str, size: int=1):
    one = RationalFunction.constant(1, size)
    return LinearWord(letters, [one] * (len(letters) + 1))

  @property
  def first(self):
    return self.values[0]

  @property
  def last(self):
    return self.values[-1]

  @property
  def prefix(self) -> tuple:
    """
      Offset of every vertex from the first one, in (col, row); x moves right, y moves up.
    """

    return self._prefix

  @property
  def displacement(self) -> tuple:
    return self._prefix[-1]

  @property
  def word(self) -> str:
    return "".join(self.letters)

  def counts(self) -> tuple:
    """
      (number of x, number of y)
    """

    return (self.letters.count("x"), self.letters.count("y"))

  def has_both_letters(self) -> bool:
    return "x" in self.letters and "y" in self.letters

  def transposed(self):
    """
      The word read backwards with x and y exchanged.
    """

    return LinearWord([_SWAP[letter] for letter in reversed(self.letters)], list(reversed(self.values)))

  def map_values(self, f):
    return LinearWord(self.letters, [f(v) for v in self.values])

  def __len__(self):
    return len(self.letters)

  def __eq__(self, other):
    return isinstance(other, LinearWord) and self.letters == other.letters and self.values == other.values

  def __str__(self):
    parts = [str(self.values[0])]
    for letter, value in zip(self.letters, self.values[1:]):
      parts += [letter, str(value)]
    return " ".join(parts)

  def __repr__(self):
    return f"LinearWord({self})"


def concat(*words) -> LinearWord:
  """
    Glues words end to start; adjacent end values must agree.
  """

  letters = list(words[0].letters)
  values = list(words[0].values)
  for word in words[1:]:
    if word.first != values[-1]:
      raise BoundaryError("generator does not glue")
    letters += word.letters
    values += word.values[1:]
  return LinearWord(letters, values)


def _cycle_order(q: Quiver) -> list:
  vertices = list(q.vertices)
  if len(vertices) < 2:
    raise BoundaryError("a cycle quiver needs at least two vertices")
  pairs = Counter(frozenset((vertices[i], vertices[(i + 1) % len(vertices)])) for i in range(len(vertices)))
  arrows = Counter()
  for (s, t), c in q.arrows.items():
    arrows[frozenset((s, t))] += c
  if pairs != arrows:
    raise BoundaryError("quiver is not a cycle labelled clockwise by its vertex order")
  return vertices


def generator_from_a_tilde(q: Quiver, cut_vertex, direction: str="clockwise", values: dict=None) -> LinearWord:
  """
    Cuts a cycle quiver at cut_vertex and reads it in the given direction.
    Vertex labels in increasing order run clockwise. A letter is x when the arrow points
    along the reading direction and y otherwise. values maps vertices to their labels (default 1).
  """

  order = _cycle_order(q)
  if cut_vertex not in order:
    raise BoundaryError(f"unknown cut vertex {cut_vertex}")
  if direction not in ("clockwise", "anticlockwise"):
    raise BoundaryError(f"unknown reading direction '{direction}'")
  start = order.index(cut_vertex)
  reading = order[start:] + order[:start]
  if direction == "anticlockwise":
    reading = [reading[0]] + list(reversed(reading[1:]))
  reading.append(cut_vertex)
  letters = ["x" if q.multiplicity(a, b) else "y" for a, b in zip(reading, reading[1:])]
  one = RationalFunction.constant(1)
  values = values or {}
  return LinearWord(letters, [values.get(v, one) for v in reading])


def parse_word_tokens(text: str) -> tuple:
  """
    Splits '<value> x <value> y ...' into letters and values. Consecutive non-letter tokens
    form one value; a missing value is None.
  """

  letters = []
  values = [None]
  pending = []
  for token in text.split():
    if token in LETTERS:
      if pending:
        values[-1] = parse_rational(" ".join(pending))
        pending = []
      letters.append(token)
      values.append(None)
    else:
      pending.append(token)
  if pending:
    values[-1] = parse_rational(" ".join(pending))
  return letters, values
