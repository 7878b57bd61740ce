import logging

import click

from boundary.boundary_word import parse_boundary
from boundary.dtilde_boundary import build_dtilde_boundary
from quiver.quiver import load_quiver
from tiling.session import TilingSession, check_unimodular, window as window_values
from util.config import RunConfig, apply_numeric, parse_numeric, parse_window
from util.output.writer import FORMATS, get_formatter, write_output

logging.basicConfig(level=logging.INFO, format="%(asctime)s: %(levelname)s [%(process)d] - %(message)s")


@click.command()
@click.option('-b', '--boundary', type=str, default=None, help='Boundary in the grammar ^inf( ... )^inf or ^inf( w1 ) ( root ) ( w2 )^inf.')
@click.option('-q', '--quiver', type=str, default=None, help='JSON file (or inline JSON) of a D~n quiver; its boundary is tiled.')
@click.option('-w', '--window', type=str, required=True, help='Window c0,r0,c1,r1 in (column, row) coordinates. Rows grow downwards.')
@click.option('--numeric', type=str, default=None, help='Numeric substitution, e.g. all=1 or u1=2,u3=1/2.')
@click.option('--numeric-first', is_flag=True, default=False, help='Substitute into the boundary labels before tiling instead of into the results.')
@click.option('--fill', type=click.Choice(["product", "recurrence"]), default=None, help='Fill strategy. Defaults to recurrence for numeric boundaries and product otherwise.')
@click.option('--keep-u0', is_flag=True, default=False, help='Keep the variable u0 on the o vertices of a D~n boundary instead of setting it to 1.')
@click.option('--check', is_flag=True, default=False, help='Check that every 2x2 block of the window has determinant 1.')
@click.option('-f', '--format', 'fmt', type=click.Choice(FORMATS), default="text", help='Output format.')
@click.option('-o', '--out', type=str, default=None, help='Output file. Defaults to stdout.')
def tile(boundary, quiver, window, numeric, numeric_first, fill, keep_u0, check, fmt, out):
  """
    Evaluates a window of the SL2-tiling that extends a boundary.
    The boundary is given directly or built from a D~n quiver.
  """

  if not boundary and not quiver:
    raise click.UsageError("give --boundary or --quiver")
  config = RunConfig("tile", quiver=quiver, boundary=boundary, window=parse_window(window), numeric=parse_numeric(numeric), numeric_first=numeric_first, fmt=fmt, out=out)

  if config.boundary:
    word = parse_boundary(config.boundary)
  else:
    word, _ = build_dtilde_boundary(load_quiver(config.quiver), keep_u0)
  if config.numeric_first:
    word = word.map_values(config.apply_numeric)
  logging.info(f"Tiling {word}")

  session = TilingSession.from_boundary(word)
  c0, r0, c1, r1 = config.window
  grid = window_values(session, c0, r0, c1, r1, fill=fill)
  if not config.numeric_first:
    grid = [[config.apply_numeric(v) for v in row] for row in grid]
  if check:
    logging.info(f"Checked {check_unimodular(grid)} blocks for determinant 1")

  meta = {"boundary": str(word), "window": list(config.window)}
  write_output(get_formatter(config.fmt).format_grid(grid, c0, r0, meta), config.out)
