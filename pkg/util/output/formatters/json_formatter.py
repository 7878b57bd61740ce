import json

from util.output.formatters.base_formatter import BaseFormatter


class JsonFormatter(BaseFormatter):

  def _plain(self, value):
    if value is None or isinstance(value, (bool, int, str)):
      return value
    if isinstance(value, (list, tuple)):
      return [self._plain(v) for v in value]
    if isinstance(value, dict):
      return {str(k): self._plain(v) for k, v in value.items()}
    return str(value)

  def format_rows(self, rows: list, meta: dict=None) -> str:
    doc = {"meta": self._plain(meta or {}), "rows": [self._plain(row) for row in rows]}
    return json.dumps(doc, ensure_ascii=False, indent=2)

  def format_grid(self, grid: list, c0: int, r0: int, meta: dict=None) -> str:
    width = len(grid[0]) if grid else 0
    doc = {
      "meta": self._plain(meta or {}),
      "columns": list(range(c0, c0 + width)),
      "rows": [{"row": r0 + i, "values": [self._plain(v) for v in row]} for i, row in enumerate(grid)],
    }
    return json.dumps(doc, ensure_ascii=False, indent=2)
