import json
import os
from collections import Counter

import networkx as nx

from util.errors import QuiverError


class Quiver:
  """
    Finite quiver without loops or oriented 2-cycles. Arrows are counted pairs (source, target).
  """

  def __init__(self, vertices, arrows):
    self._vertices = tuple(sorted(set(vertices)))
    counted = Counter()
    given = arrows if isinstance(arrows, Counter) else Counter(arrows)
    for arrow, count in given.items():
      source, target = arrow
      if source not in self._vertices or target not in self._vertices:
        raise QuiverError(f"arrow {source}->{target} uses an unknown vertex")
      if source == target:
        raise QuiverError(f"loop at vertex {source}")
      if count < 0:
        raise QuiverError(f"negative multiplicity for arrow {source}->{target}")
      if count:
        counted[(source, target)] += count
    for (source, target) in counted:
      if (target, source) in counted:
        raise QuiverError(f"oriented 2-cycle between {source} and {target}")
    self._arrows = counted

  @staticmethod
  def from_dict(d: dict):
    if "dtilde" in d:
      shorthand = d["dtilde"]
      return build_d_tilde(shorthand.get("n"), shorthand.get("arrows", "all-in"))
    if "vertices" not in d or "arrows" not in d:
      raise QuiverError("quiver needs 'vertices' and 'arrows'")
    return Quiver(d["vertices"], [tuple(a) for a in d["arrows"]])

  def to_dict(self) -> dict:
    arrows = []
    for arrow in sorted(self._arrows):
      arrows.extend([list(arrow)] * self._arrows[arrow])
    return {"vertices": list(self._vertices), "arrows": arrows}

  @property
  def vertices(self) -> tuple:
    return self._vertices

  @property
  def arrows(self) -> Counter:
    return Counter(self._arrows)

  def multiplicity(self, source, target) -> int:
    return self._arrows.get((source, target), 0)

  def successors(self, v) -> list:
    """
      (target, multiplicity) for arrows v -> target.
    """

    return [(t, c) for (s, t), c in sorted(self._arrows.items()) if s == v]

  def predecessors(self, v) -> list:
    return [(s, c) for (s, t), c in sorted(self._arrows.items()) if t == v]

  def underlying_graph(self) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(self._vertices)
    g.add_edges_from(self._arrows)
    return g

  def digraph(self) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(self._vertices)
    g.add_edges_from(self._arrows)
    return g

  def mutate(self, k):
    """
      Fomin-Zelevinsky mutation at k: add i->j for every path i->k->j, reverse the arrows at k,
      then cancel oriented 2-cycles.
    """

    if k not in self._vertices:
      raise QuiverError(f"unknown vertex {k}")
    counts = Counter()
    for (s, t), c in self._arrows.items():
      if k in (s, t):
        counts[(t, s)] += c
      else:
        counts[(s, t)] += c
    for i, a in self.predecessors(k):
      for j, b in self.successors(k):
        counts[(i, j)] += a * b
    reduced = Counter()
    for (s, t), c in counts.items():
      back = counts.get((t, s), 0)
      if c > back:
        reduced[(s, t)] = c - back
    return Quiver(self._vertices, reduced)

  def key(self) -> tuple:
    return tuple(sorted(self._arrows.items()))

  def __eq__(self, other):
    return isinstance(other, Quiver) and self._vertices == other._vertices and self._arrows == other._arrows

  def __hash__(self):
    return hash((self._vertices, self.key()))

  def __str__(self):
    return ", ".join(f"{s}->{t}" if c == 1 else f"{s}->{t} (x{c})" for (s, t), c in sorted(self._arrows.items()))


def d_tilde_edges(n: int) -> list:
  """
    Edges of the D~n diagram: forks {1,2,3} and {n-1,n,n+1} joined by the chain 3 - 4 - ... - (n-1).
  """

  edges = [(1, 3), (2, 3)]
  edges += [(i, i + 1) for i in range(3, n - 1)]
  edges += [(n - 1, n), (n - 1, n + 1)]
  return edges


def _preset_arrows(n: int, preset: str) -> list:
  chain = [(i, i + 1) for i in range(3, n - 1)]
  if preset == "all-in":
    return [(1, 3), (2, 3)] + chain + [(n, n - 1), (n + 1, n - 1)]
  if preset == "all-out":
    return [(3, 1), (3, 2)] + chain + [(n - 1, n), (n - 1, n + 1)]
  if preset == "proof":
    return [(1, 3), (2, 3)] + chain + [(n - 1, n), (n - 1, n + 1)]
  raise QuiverError(f"unknown orientation preset '{preset}'")


def build_d_tilde(n: int, orientation) -> Quiver:
  """
    Quiver of type D~n on the vertices 1..n+1.
    orientation is a preset name (all-in, all-out, proof) or one arrow per edge of the diagram.
  """

  if not isinstance(n, int) or n < 4:
    raise QuiverError(f"D~n requires n >= 4, got {n}")
  if isinstance(orientation, str):
    arrows = _preset_arrows(n, orientation)
  else:
    arrows = [tuple(a) for a in orientation]
  edges = {frozenset(e) for e in d_tilde_edges(n)}
  given = [frozenset(a) for a in arrows]
  if any(len(a) != 2 for a in arrows) or set(given) != edges or len(given) != len(edges):
    raise QuiverError(f"orientation must give exactly one arrow for each of the {n} edges of D~{n}")
  return Quiver(range(1, n + 2), arrows)


def dtilde_rank(q: Quiver) -> int:
  """
    n for a quiver of type D~n in the standard labelling, QuiverError otherwise.
  """

  n = len(q.vertices) - 1
  if n < 4 or q.vertices != tuple(range(1, n + 2)):
    raise QuiverError("quiver is not of type D~n (n >= 4) in the standard labelling")
  edges = {frozenset(e) for e in d_tilde_edges(n)}
  arrows = q.arrows
  if any(c != 1 for c in arrows.values()) or {frozenset(a) for a in arrows} != edges:
    raise QuiverError("quiver is not of type D~n (n >= 4) in the standard labelling")
  return n


def fork_vertices(n: int, fork: str) -> tuple:
  """
    (joint, leaf, leaf) of the bottom fork {1,2,3} or the top fork {n-1,n,n+1}.
  """

  if fork == "bottom":
    return (3, 1, 2)
  if fork == "top":
    return (n - 1, n, n + 1)
  raise QuiverError(f"unknown fork '{fork}'")


def fork_kind(q: Quiver, fork: str) -> str:
  joint, a, b = fork_vertices(dtilde_rank(q), fork)
  into = [q.multiplicity(leaf, joint) > 0 for leaf in (a, b)]
  if all(into):
    return "both-in"
  if not any(into):
    return "both-out"
  return "mixed"


def fork_classification(q: Quiver) -> dict:
  return {fork: fork_kind(q, fork) for fork in ("bottom", "top")}


def load_quiver(source: str) -> Quiver:
  """
    Reads a quiver from a JSON file path or inline JSON text.
  """

  try:
    if os.path.isfile(source):
      with open(source, "r", encoding="utf-8") as quiver_file:
        data = json.load(quiver_file)
    else:
      data = json.loads(source)
  except json.JSONDecodeError as e:
    raise QuiverError(f"quiver input is not valid JSON: {e}") from e
  if not isinstance(data, dict):
    raise QuiverError("quiver input must be a JSON object")
  return Quiver.from_dict(data)
