class BaseFiller:

  def fill(self, session, points: list) -> dict:
    """
      Computes the tiling values of the given points, in row-major order.
      Returns a dict point -> RationalFunction, with None for points above the boundary.
    """
    raise NotImplementedError()
