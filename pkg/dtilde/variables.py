import logging

import click

from dtilde.catalog import all_variables
from oracle.enumerate import explore
from oracle.report import verify_catalog
from quiver.quiver import dtilde_rank, load_quiver
from quiver.seed import Seed
from util.config import RunConfig, default_depth, parse_k_range, parse_numeric, resolve_processes
from util.errors import VerificationError
from util.output.writer import FORMATS, get_formatter, write_output

logging.basicConfig(level=logging.INFO, format="%(asctime)s: %(levelname)s [%(process)d] - %(message)s")


def catalog_rows(catalog, config: RunConfig, report=None) -> list:
  rows = []
  for i, entry in enumerate(catalog.entries):
    row = {k: v for k, v in entry.items() if k != "value"}
    row["value"] = config.apply_numeric(entry["value"])
    if report is not None:
      row["found"] = report.rows[i]["found"]
      row["witness_depth"] = report.rows[i]["witness_depth"]
    rows.append(row)
  return rows


@click.command()
@click.option('-q', '--quiver', type=str, required=True, help='JSON file (or inline JSON) of a D~n quiver.')
@click.option('-k', '--k-range', type=str, default="-2,2", help='Transjective slots a,b; "none" for no slots.')
@click.option('-t', '--tube-depth', type=int, default=1, help='Largest tube depth. 0 skips the tubes.')
@click.option('--verify', is_flag=True, default=False, help='Also enumerate variables by mutation and check every catalog entry against them.')
@click.option('-d', '--depth', type=int, default=None, help='Mutation depth of the verification. Defaults to 9 for n=4, 7 for n=5.')
@click.option('--numeric', type=str, default=None, help='Numeric substitution applied to the printed values, e.g. all=1.')
@click.option('-p', '--processes', type=int, default=None, help='The number of processes to use. Defaults to FRIEZE_LAB_THREADS, sequential if unset.')
@click.option('-f', '--format', 'fmt', type=click.Choice(FORMATS), default="json", help='Output format.')
@click.option('-o', '--out', type=str, default=None, help='Output file. Defaults to stdout.')
def variables(quiver, k_range, tube_depth, verify, depth, numeric, processes, fmt, out):
  """
    Computes the cluster variables of a D~n quiver: the transjective variables from the diagonal rays
    of its tiling and the variables of the three tubes.
  """

  if tube_depth < 0:
    raise click.BadParameter("must be >= 0", param_hint="--tube-depth")
  config = RunConfig("variables", quiver=quiver, k_range=parse_k_range(k_range), tube_depth=tube_depth, depth=depth,
    numeric=parse_numeric(numeric), fmt=fmt, out=out, processes=resolve_processes(processes))

  q = load_quiver(config.quiver)
  n = dtilde_rank(q)
  catalog = all_variables(q, config.k_range, config.tube_depth, config.processes)

  report = None
  meta = catalog.metadata()
  if verify:
    depth = config.depth if config.depth is not None else default_depth(n)
    report = verify_catalog(catalog, explore(Seed.initial(q), depth, config.processes))
    meta["verification"] = {"depth": depth, "passed": report.passed}
  write_output(get_formatter(config.fmt).format_rows(catalog_rows(catalog, config, report), meta), config.out)
  if report is not None and not report.passed:
    raise VerificationError(f"{len(report.missing)} catalog values were not reached by mutation: " + ", ".join(str(v) for v in report.missing))
