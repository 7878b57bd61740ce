import logging
from math import ceil

import numpy as np

from tiling.fillers.base_filler import BaseFiller
from util.errors import TilingInvariantError


class RecurrenceFiller(BaseFiller):
  """
    Fills interior cells with the rearranged unimodular rule t(c, r) = (1 + t(c, r-1) t(c-1, r)) / t(c-1, r-1)
    and falls back to the product formula wherever a neighbour is missing. A random sample of the
    recurrence cells is re-evaluated with the product formula.
  """

  def __init__(self, sample_rate: float=0.05, seed: int=None):
    self.sample_rate = sample_rate
    self.seed = seed

  def fill(self, session, points: list) -> dict:
    values = {}
    derived = []
    for p in points:
      col, row = p
      if session.embedding.classify(p) != "below":
        values[p] = session.value_or_none(p)
        continue
      corner = self._known(session, values, (col - 1, row - 1))
      up = self._known(session, values, (col, row - 1))
      left = self._known(session, values, (col - 1, row))
      if corner is None or up is None or left is None or corner.is_zero():
        values[p] = session.value_or_none(p)
        continue
      values[p] = (1 + up * left) / corner
      derived.append(p)

    if derived:
      rng = np.random.default_rng(self.seed)
      count = min(len(derived), max(1, ceil(self.sample_rate * len(derived))))
      for idx in rng.choice(len(derived), size=count, replace=False):
        p = derived[int(idx)]
        if session.product_value(p) != values[p]:
          raise TilingInvariantError(f"recurrence value at {p} disagrees with the product formula")
      logging.info(f"Filled {len(derived)} cells by recurrence, spot-checked {count}")
      for p in derived:
        session.store(p, values[p])
    return values

  def _known(self, session, values: dict, p: tuple):
    if p in values:
      return values[p]
    return session.cached(p)
