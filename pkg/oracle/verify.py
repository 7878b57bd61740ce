import logging

import click

from dtilde.catalog import all_variables
from oracle.enumerate import explore
from oracle.report import verify_catalog
from quiver.quiver import dtilde_rank, load_quiver
from quiver.seed import Seed
from util.config import RunConfig, default_depth, parse_k_range, resolve_processes
from util.errors import VerificationError
from util.output.writer import FORMATS, get_formatter, write_output

logging.basicConfig(level=logging.INFO, format="%(asctime)s: %(levelname)s [%(process)d] - %(message)s")


@click.command()
@click.option('-q', '--quiver', type=str, required=True, help='JSON file (or inline JSON) of a D~n quiver.')
@click.option('-k', '--k-range', type=str, default="-2,2", help='Transjective slots a,b of the catalog; "none" for no slots.')
@click.option('-t', '--tube-depth', type=int, default=2, help='Largest tube depth of the catalog.')
@click.option('-d', '--depth', type=int, default=None, help='Mutation depth. Defaults to 9 for n=4, 7 for n=5.')
@click.option('-p', '--processes', type=int, default=None, help='The number of processes to use. Defaults to FRIEZE_LAB_THREADS, sequential if unset.')
@click.option('-f', '--format', 'fmt', type=click.Choice(FORMATS), default="text", help='Output format.')
@click.option('-o', '--out', type=str, default=None, help='Output file. Defaults to stdout.')
def verify(quiver, k_range, tube_depth, depth, processes, fmt, out):
  """
    Checks every catalog variable against a brute-force enumeration by seed mutation.
    Exits with code 2 when a catalog variable is not reached.
  """

  config = RunConfig("verify", quiver=quiver, k_range=parse_k_range(k_range), tube_depth=tube_depth, depth=depth,
    fmt=fmt, out=out, processes=resolve_processes(processes))
  q = load_quiver(config.quiver)
  n = dtilde_rank(q)
  depth = config.depth if config.depth is not None else default_depth(n)

  catalog = all_variables(q, config.k_range, config.tube_depth, config.processes)
  frontier = explore(Seed.initial(q), depth, config.processes)
  report = verify_catalog(catalog, frontier)

  meta = {"quiver": str(q), "depth": depth, "oracle_size": len(frontier.witness), "catalog_size": len(catalog), "passed": report.passed}
  write_output(get_formatter(config.fmt).format_rows(report.to_dict()["rows"], meta), config.out)
  if not report.passed:
    raise VerificationError(f"{len(report.missing)} catalog values were not reached by mutation: " + ", ".join(str(v) for v in report.missing))
