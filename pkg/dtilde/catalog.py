import logging
from multiprocessing import Pool

from dtilde.transjective import DtildeTiling, transjective_variables
from dtilde.tubes import big_tube_mouth, rank2_tube_mouths, tube_variable
from exactalg.rational import RationalFunction, laurent_decompose, substitute
from quiver.quiver import Quiver, dtilde_rank
from quiver.seed import canonical_seed
from util.errors import LaurentError

_LINE_ORDER = {"bottom": 0, "top": 1 << 30}


class VariableCatalog:
  """
    Cluster variables of a D~n quiver with their provenance. Entries are dicts with the keys
    kind (initial, transjective or tube), k, line, member, vertex, tube, tube_rank, mouth_index,
    depth and value. Values are unique within a catalog; the first provenance found is kept.
  """

  def __init__(self, quiver: Quiver, k_range: tuple=None, tube_depth: int=0, boundary: str=None):
    self.quiver = quiver
    self.k_range = k_range
    self.tube_depth = tube_depth
    self.boundary = boundary
    self.entries = []
    self._seen = set()

  def add(self, entry: dict) -> bool:
    value = entry["value"]
    if laurent_decompose(value) is None:
      raise LaurentError(f"{entry['kind']} variable {value} is not a Laurent polynomial")
    if value in self._seen:
      return False
    self._seen.add(value)
    full = {"kind": None, "k": None, "line": None, "member": None, "vertex": None, "tube": None, "tube_rank": None, "mouth_index": None, "depth": None}
    full.update(entry)
    self.entries.append(full)
    return True

  @property
  def transjective(self) -> list:
    return [e for e in self.entries if e["kind"] == "transjective"]

  @property
  def tubes(self) -> dict:
    tubes = {}
    for e in self.entries:
      if e["kind"] == "tube":
        tubes.setdefault(e["tube"], []).append(e)
    return tubes

  def values(self) -> list:
    return [e["value"] for e in self.entries]

  def __contains__(self, value):
    return value in self._seen

  def __len__(self):
    return len(self.entries)

  def metadata(self) -> dict:
    return {
      "quiver": self.quiver.to_dict(),
      "boundary": self.boundary,
      "k_range": list(self.k_range) if self.k_range else None,
      "tube_depth": self.tube_depth,
      "size": len(self.entries),
    }


def _sort_key(entry: dict) -> tuple:
  if entry["kind"] == "initial":
    return (0, entry["vertex"])
  if entry["kind"] == "transjective":
    line = _LINE_ORDER.get(entry["line"], entry["line"])
    return (1, entry["k"], line, entry["member"] or 0)
  return (2, -entry["tube_rank"], entry["tube"], entry["mouth_index"], entry["depth"])


def _compute_part(part: str, q: Quiver, k_min: int, k_max: int) -> list:
  if part == "transjective":
    return transjective_variables(q, k_min, k_max)
  if part == "big":
    return [big_tube_mouth(q)]
  return list(rank2_tube_mouths(q))


def _tube_entries(tubes: list, tube_depth: int) -> list:
  entries = []
  for tube in tubes:
    depth = min(tube_depth, tube.rank - 1)
    if depth < tube_depth:
      logging.info(f"Tube {tube.name} has rank {tube.rank}; only depths below {tube.rank} carry cluster variables")
    for i in range(1, tube.rank + 1):
      for d in range(1, depth + 1):
        entries.append({"kind": "tube", "tube": tube.name, "tube_rank": tube.rank, "mouth_index": i, "depth": d, "value": tube_variable(tube, i, d)})
  return entries


def all_variables(q: Quiver, k_range: tuple=None, tube_depth: int=1, processes: int=None) -> VariableCatalog:
  """
    Catalog of the initial cluster, the transjective variables of the slots in k_range and the tube
    variables up to tube_depth. Mixed forks are first mutated away; values computed in the mutated
    seed are mapped back to the initial variables.

    Parameters:
      q (Quiver) : quiver of type D~n in the standard labelling
      k_range (tuple) : (k_min, k_max), or None for no transjective slots
      tube_depth (int) : largest tube depth; 0 skips the tubes
      processes (int) : worker processes; None or 1 computes in this process
  """

  n = dtilde_rank(q)
  canonical = canonical_seed(q)
  work = canonical.quiver
  k_min, k_max = k_range if k_range else (0, -1)
  parts = ["transjective"] + (["big", "rank2"] if tube_depth > 0 else [])
  tasks = [(part, work, k_min, k_max) for part in parts]
  logging.info(f"Assembling the D~{n} catalog: slots {k_min}..{k_max}, tube depth {tube_depth}, parts {parts}")
  if processes and processes > 1:
    with Pool(min(processes, len(tasks))) as p:
      results = p.starmap(_compute_part, tasks)
  else:
    results = [_compute_part(*task) for task in tasks]

  entries = list(results[0])
  if tube_depth > 0:
    entries += _tube_entries(results[1] + results[2], tube_depth)
  if not canonical.is_identity:
    logging.info(f"Mapping values back through the mutations at {canonical.mutated_at}")
    for entry in entries:
      entry["value"] = substitute(entry["value"], canonical.back_substitution)

  boundary = str(DtildeTiling(q).boundary)
  catalog = VariableCatalog(q, k_range, tube_depth, boundary)
  size = n + 2
  for v in q.vertices:
    catalog.add({"kind": "initial", "vertex": v, "value": RationalFunction.variable(v, size)})
  for entry in sorted(entries, key=_sort_key):
    catalog.add(entry)
  logging.info(f"Catalog holds {len(catalog)} variables ({len(entries) + len(q.vertices) - len(catalog)} duplicates dropped)")
  return catalog
