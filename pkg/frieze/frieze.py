import logging

import click

from frieze.render import render_frieze
from frieze.session import FriezeSession, frieze_table
from quiver.quiver import load_quiver
from quiver.seed import Seed
from util.config import RunConfig, parse_k_range, parse_numeric
from util.output.writer import FORMATS, get_formatter, write_output

logging.basicConfig(level=logging.INFO, format="%(asctime)s: %(levelname)s [%(process)d] - %(message)s")


@click.command()
@click.option('-q', '--quiver', type=str, required=True, help='JSON file (or inline JSON) of an acyclic quiver.')
@click.option('-k', '--k-range', type=str, default="0,2", help='Slots a,b of the frieze to knit.')
@click.option('--modelled', is_flag=True, default=False, help='Print the lines of the modelled quiver (fork products) of a D~n quiver.')
@click.option('--numeric', type=str, default=None, help='Numeric substitution applied to every value, e.g. all=1.')
@click.option('--art', is_flag=True, default=False, help='Print an aligned picture of the frieze instead of a table.')
@click.option('-f', '--format', 'fmt', type=click.Choice(FORMATS), default="text", help='Output format.')
@click.option('-o', '--out', type=str, default=None, help='Output file. Defaults to stdout.')
def frieze(quiver, k_range, modelled, numeric, art, fmt, out):
  """
    Knits the frieze of an acyclic quiver from its initial seed, forwards and backwards.
  """

  config = RunConfig("frieze", quiver=quiver, k_range=parse_k_range(k_range), numeric=parse_numeric(numeric), fmt=fmt, out=out)
  if config.k_range is None:
    raise click.BadParameter("the frieze needs a non-empty k-range", param_hint="--k-range")
  k_min, k_max = config.k_range

  session = FriezeSession(Seed.initial(load_quiver(config.quiver)))
  if art:
    write_output(render_frieze(session, k_min, k_max, modelled), config.out)
    return
  rows = frieze_table(session, k_min, k_max, modelled)
  for row in rows:
    row["value"] = config.apply_numeric(row["value"])
  meta = {"quiver": str(session.quiver), "k_range": [k_min, k_max], "modelled": modelled}
  write_output(get_formatter(config.fmt).format_rows(rows, meta), config.out)
