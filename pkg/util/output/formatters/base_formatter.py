class BaseFormatter:

  def format_rows(self, rows: list, meta: dict=None) -> str:
    """
      Formats a list of flat dicts (same keys in the same order) as one document.
    """
    raise NotImplementedError()

  def format_grid(self, grid: list, c0: int, r0: int, meta: dict=None) -> str:
    """
      Formats a row-major grid whose first cell sits at column c0, row r0. None cells lie above the boundary.
    """
    raise NotImplementedError()

  def cell(self, value) -> str:
    return "" if value is None else str(value)

  def columns(self, rows: list) -> list:
    keys = []
    for row in rows:
      keys += [k for k in row if k not in keys]
    return keys
