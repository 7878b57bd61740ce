from tiling.fillers.base_filler import BaseFiller


class ProductFiller(BaseFiller):
  """
    Evaluates every cell with the matrix product formula.
  """

  def fill(self, session, points: list) -> dict:
    return {p: session.value_or_none(p) for p in points}
