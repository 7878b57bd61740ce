import csv
import io

from util.output.formatters.base_formatter import BaseFormatter


class CsvFormatter(BaseFormatter):
  """
    Plain CSV with a header line. Metadata is not written.
  """

  def _write(self, header: list, lines: list) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(lines)
    return buffer.getvalue().rstrip("\n")

  def format_rows(self, rows: list, meta: dict=None) -> str:
    header = self.columns(rows)
    return self._write(header, [[self.cell(row.get(k)) for k in header] for row in rows])

  def format_grid(self, grid: list, c0: int, r0: int, meta: dict=None) -> str:
    width = len(grid[0]) if grid else 0
    header = ["row"] + [str(c0 + i) for i in range(width)]
    return self._write(header, [[str(r0 + i)] + [self.cell(v) for v in row] for i, row in enumerate(grid)])
