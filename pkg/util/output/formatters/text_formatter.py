from util.output.formatters.base_formatter import BaseFormatter


class TextFormatter(BaseFormatter):
  """
    Aligned columns for reading in a terminal. Cells above the boundary print as '.'.
  """

  def _table(self, table: list) -> str:
    widths = [max(len(line[i]) for line in table) for i in range(len(table[0]))]
    return "\n".join("  ".join(text.rjust(w) for text, w in zip(line, widths)).rstrip() for line in table)

  def format_rows(self, rows: list, meta: dict=None) -> str:
    out = [f"# {k}: {v}" for k, v in (meta or {}).items()]
    if rows:
      header = self.columns(rows)
      table = [header] + [[self.cell(row.get(k)) for k in header] for row in rows]
      out.append(self._table(table))
    return "\n".join(out)

  def format_grid(self, grid: list, c0: int, r0: int, meta: dict=None) -> str:
    out = [f"# {k}: {v}" for k, v in (meta or {}).items()]
    width = len(grid[0]) if grid else 0
    table = [["r\\c"] + [str(c0 + i) for i in range(width)]]
    table += [[str(r0 + i)] + ["." if v is None else str(v) for v in row] for i, row in enumerate(grid)]
    out.append(self._table(table))
    return "\n".join(out)
